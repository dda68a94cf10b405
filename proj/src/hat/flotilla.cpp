#include "tourn/core/errors.hpp"
#include "tourn/hat.hpp"

#include <algorithm>

namespace tourn::hat {

const char* to_string(Mode m) {
  switch (m) {
    case Mode::LeftFlotilla: return "left-flotilla";
    case Mode::RightFlotilla: return "right-flotilla";
    case Mode::Flotilla: return "flotilla";
    case Mode::FlotillaGalaxy: return "flotilla-galaxy";
  }
  return "?";
}

Mode parse_mode(const std::string& text) {
  if (text == "left" || text == "left-flotilla") return Mode::LeftFlotilla;
  if (text == "right" || text == "right-flotilla") return Mode::RightFlotilla;
  if (text == "flotilla") return Mode::Flotilla;
  if (text == "galaxy" || text == "flotilla-galaxy") return Mode::FlotillaGalaxy;
  throw DomainError("unknown mode '" + text + "'");
}

FlotillaGalaxy analyze(const Tournament& h, const Ordering& order) {
  FlotillaGalaxy fg;
  fg.decomposition = patterns::decompose(h, order);
  if (!fg.decomposition.recognized())
    throw StructureError("not a flotilla-galaxy ordering: " + fg.decomposition.violation);

  for (const auto& c : fg.decomposition.components) {
    if (patterns::is_boat(c.cls.kind))
      fg.boats.push_back({c.cls.kind == ComponentKind::LeftBoat, *c.cls.boat});
    else if (patterns::is_star(c.cls.kind))
      fg.stars.push_back({c.cls.kind == ComponentKind::LeftStar, *c.cls.star});
    else
      fg.singletons.push_back(c.vertices.front());
  }
  std::stable_sort(fg.boats.begin(), fg.boats.end(), [&](const BoatPart& a, const BoatPart& b) {
    return order.position(a.roles.u) < order.position(b.roles.u);
  });
  std::stable_sort(fg.stars.begin(), fg.stars.end(), [&](const StarPart& a, const StarPart& b) {
    return order.position(a.roles.leaves.front()) < order.position(b.roles.leaves.front());
  });
  const std::size_t l = std::max(fg.boats.size(), fg.stars.size());
  for (std::size_t k = 0; k < l; ++k)
    fg.couples.push_back({k < fg.boats.size() ? static_cast<int>(k) : -1, k < fg.stars.size() ? static_cast<int>(k) : -1});
  return fg;
}

std::vector<Ordering> theta_set(const Tournament& h, const Ordering& order) {
  const FlotillaGalaxy fg = analyze(h, order);
  const std::size_t l = fg.boats.size();
  if (l > 20) throw ResourceError("theta_set: too many boats");
  std::vector<Ordering> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
    Ordering o = order;
    for (std::size_t k = 0; k < l; ++k)
      if (mask >> k & 1)
        o = fg.boats[k].left ? patterns::apply_alpha(o, fg.boats[k].roles) : patterns::apply_beta(o, fg.boats[k].roles);
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<int> HatDigraph::couple_vertices(int k) const {
  if (k < 0 || k >= static_cast<int>(couples.size())) throw DomainError("couple index out of range");
  std::vector<int> vs;
  if (int b = couples[k].boat; b >= 0) {
    const auto& bt = boats[b];
    vs = {bt.roles.x, bt.roles.u, bt.roles.v, bt.roles.y, bt.z};
  }
  if (int s = couples[k].star; s >= 0) {
    vs.push_back(stars[s].roles.center);
    vs.insert(vs.end(), stars[s].roles.leaves.begin(), stars[s].roles.leaves.end());
  }
  std::sort(vs.begin(), vs.end(), [&](int a, int b) { return order.before(a, b); });
  return vs;
}

Prefix prefix(const Tournament& h, const Ordering& order, int k) {
  const HatDigraph hd = hat(h, order);
  const int l = static_cast<int>(hd.couples.size());
  if (k < 0 || k > l) throw DomainError("prefix: k = " + std::to_string(k) + " outside 0.." + std::to_string(l));
  VertexSet keep(static_cast<std::size_t>(hd.size()));
  for (int i = 0; i < k; ++i)
    for (int v : hd.couple_vertices(i)) keep.set(static_cast<std::size_t>(v));
  Prefix p;
  for (int v : hd.order.perm())
    if (keep.test(static_cast<std::size_t>(v))) {
      p.hat_vertices.push_back(v);
      if (v < h.size()) p.vertices.push_back(v);
    }
  p.h = h.induced(p.vertices);
  p.hat = hd.graph.induced(p.hat_vertices);
  p.hat_order = Ordering::identity(static_cast<int>(p.hat_vertices.size()));
  return p;
}

}  // namespace tourn::hat
