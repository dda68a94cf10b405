#include "tourn/hat.hpp"

namespace tourn::hat {
namespace {

std::vector<int> insert_at(const std::vector<int>& perm, int anchor, int fresh, bool after) {
  std::vector<int> out;
  out.reserve(perm.size() + 1);
  for (int v : perm) {
    if (v == anchor && !after) out.push_back(fresh);
    out.push_back(v);
    if (v == anchor && after) out.push_back(fresh);
  }
  return out;
}

}  // namespace

Super super_plus(const Tournament& h, const Ordering& order) {
  const FlotillaGalaxy fg = analyze(h, order);
  const int n = h.size();
  Super r;
  std::vector<int> perm = order.perm();
  for (std::size_t i = 0; i < fg.boats.size(); ++i) {
    int w = n + static_cast<int>(i);
    perm = insert_at(perm, fg.boats[i].roles.u, w, true);
    r.w.push_back(w);
  }
  r.order = Ordering(std::move(perm));
  r.t = from_backward_arcs(r.order, backward_arcs(h, order));
  return r;
}

Super super_plus_plus(const Tournament& h, const Ordering& order) {
  const FlotillaGalaxy fg = analyze(h, order);
  Super plus = super_plus(h, order);
  const int l = static_cast<int>(fg.boats.size());
  const int base = h.size() + l;
  std::vector<int> perm = plus.order.perm();
  std::vector<Arc> back = backward_arcs(plus.t, plus.order);
  for (int i = 0; i < l; ++i) {
    const auto& b = fg.boats[i];
    int s = base + i, w = plus.w[i];
    if (b.left) {
      perm = insert_at(perm, b.roles.v, s, true);
      back.emplace_back(s, w);
    } else {
      perm = insert_at(perm, b.roles.u, s, false);
      back.emplace_back(w, s);
    }
    plus.s.push_back(s);
  }
  plus.order = Ordering(std::move(perm));
  plus.t = from_backward_arcs(plus.order, back);
  return plus;
}

}  // namespace tourn::hat
