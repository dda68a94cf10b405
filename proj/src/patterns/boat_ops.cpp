#include "tourn/core/errors.hpp"
#include "tourn/patterns.hpp"

#include <algorithm>

namespace tourn::patterns {

bool is_boat_path(const Tournament& t, const std::array<int, 4>& p) {
  const auto [x, u, v, y] = p;
  for (int a : p)
    if (a < 0 || a >= t.size()) return false;
  if (x == u || x == v || x == y || u == v || u == y || v == y) return false;
  return t.arc(y, x) && t.arc(y, u) && t.arc(v, x) && t.arc(x, u) && t.arc(u, v) && t.arc(v, y);
}

namespace {
void require_path(const Tournament& t, const std::array<int, 4>& p, const char* op) {
  if (!is_boat_path(t, p)) throw StructureError(std::string(op) + ": input is not a boat path ordering");
}

Ordering move_vertex(const Ordering& order, int vertex, int anchor, bool after) {
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(order.size()));
  for (int v : order.perm()) {
    if (v == vertex) continue;
    if (v == anchor && !after) perm.push_back(vertex);
    perm.push_back(v);
    if (v == anchor && after) perm.push_back(vertex);
  }
  return Ordering(std::move(perm));
}
}  // namespace

std::array<int, 4> apply_alpha(const Tournament& t, const std::array<int, 4>& p) {
  require_path(t, p, "alpha");
  return {p[1], p[2], p[0], p[3]};
}

std::array<int, 4> apply_beta(const Tournament& t, const std::array<int, 4>& p) {
  require_path(t, p, "beta");
  return {p[0], p[3], p[1], p[2]};
}

Ordering apply_alpha(const Ordering& order, const BoatRoles& b) { return move_vertex(order, b.x, b.v, true); }
Ordering apply_beta(const Ordering& order, const BoatRoles& b) { return move_vertex(order, b.y, b.u, false); }

}  // namespace tourn::patterns
