#include "tourn/core/density.hpp"
#include "tourn/core/errors.hpp"
#include "tourn/hat.hpp"

#include <algorithm>
#include <sstream>

namespace tourn::hat {

HatDigraph hat(const Tournament& h, const Ordering& order) {
  FlotillaGalaxy fg = analyze(h, order);
  if (!fg.decomposition.regular)
    throw StructureError("hat: ordering has singleton components; regularize first");

  const int n = h.size();
  const int l = static_cast<int>(fg.boats.size());
  HatDigraph hd;
  hd.base = h;
  hd.base_order = order;
  hd.stars = std::move(fg.stars);
  hd.couples = std::move(fg.couples);

  std::vector<int> z_before(static_cast<std::size_t>(n), -1), z_after(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < l; ++i) {
    const auto& b = fg.boats[i];
    HatBoat hb{b.left, b.roles, n + i, {}};
    if (b.left) {
      hb.interiors = {hb.z, b.roles.u, b.roles.v};
      z_after[b.roles.x] = hb.z;
    } else {
      hb.interiors = {b.roles.u, b.roles.v, hb.z};
      z_before[b.roles.y] = hb.z;
    }
    hd.boats.push_back(hb);
  }
  std::vector<int> perm;
  for (int v : order.perm()) {
    if (z_before[v] >= 0) perm.push_back(z_before[v]);
    perm.push_back(v);
    if (z_after[v] >= 0) perm.push_back(z_after[v]);
  }
  hd.order = Ordering(std::move(perm));

  Digraph g(n + l);
  for (const auto& b : hd.boats) {
    g.mark_absent(b.roles.x, b.roles.u);
    g.mark_absent(b.roles.v, b.roles.y);
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (g.is_absent(a, b)) continue;
      h.arc(a, b) ? g.add_arc(a, b) : g.add_arc(b, a);
    }
  for (const auto& b : hd.boats)
    for (int v = 0; v < n + l; ++v) {
      if (v == b.z || g.is_oriented(v, b.z)) continue;
      hd.order.before(v, b.z) ? g.add_arc(v, b.z) : g.add_arc(b.z, v);
    }
  hd.graph = std::move(g);

  // Backward arcs of the hat digraph must be exactly those of H.
  std::vector<Arc> back_h = backward_arcs(h, order), back_hat;
  for (const Arc& a : hd.graph.arcs())
    if (hd.order.before(a.second, a.first)) back_hat.push_back(a);
  std::sort(back_h.begin(), back_h.end());
  if (back_h != back_hat) throw std::logic_error("hat: backward arc sets differ");
  return hd;
}

std::string to_text(const HatDigraph& hd) {
  std::ostringstream os;
  os << hd.size() << "\narcs\n";
  for (const Arc& a : hd.graph.arcs()) os << a.first << ' ' << a.second << '\n';
  os << "absent\n";
  for (const Arc& a : hd.graph.absent_pairs()) os << a.first << ' ' << a.second << '\n';
  os << "order\n";
  for (int i = 0; i < hd.order.size(); ++i) os << (i ? " " : "") << hd.order.at(i);
  os << '\n';
  return os.str();
}

}  // namespace tourn::hat
