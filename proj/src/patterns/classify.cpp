#include "tourn/core/errors.hpp"
#include "tourn/patterns.hpp"

#include <algorithm>

namespace tourn::patterns {

const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::Singleton: return "singleton";
    case ComponentKind::LeftStar: return "left_star";
    case ComponentKind::RightStar: return "right_star";
    case ComponentKind::LeftBoat: return "left_boat";
    case ComponentKind::RightBoat: return "right_boat";
    case ComponentKind::Other: return "other";
  }
  return "?";
}

const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::Galaxy: return "galaxy";
    case Flavor::LeftFlotilla: return "left_flotilla";
    case Flavor::RightFlotilla: return "right_flotilla";
    case Flavor::Flotilla: return "flotilla";
    case Flavor::FlotillaGalaxy: return "flotilla_galaxy";
    case Flavor::NotRecognized: return "not_recognized";
  }
  return "?";
}

namespace {

bool has(std::span<const Arc> edges, int a, int b) {
  Arc e{std::min(a, b), std::max(a, b)};
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

ComponentClass star_class(const Ordering& order, int center, std::vector<int> leaves) {
  std::sort(leaves.begin(), leaves.end(), [&](int a, int b) { return order.before(a, b); });
  ComponentClass c;
  c.kind = order.before(center, leaves.front()) ? ComponentKind::LeftStar : ComponentKind::RightStar;
  c.star = StarRoles{center, std::move(leaves)};
  return c;
}

}  // namespace

std::vector<ComponentClass> classify_component(std::span<const int> vertices, std::span<const Arc> edges,
                                               const Ordering& order) {
  std::vector<int> vs(vertices.begin(), vertices.end());
  std::sort(vs.begin(), vs.end(), [&](int a, int b) { return order.before(a, b); });
  const std::size_t k = vs.size();
  if (k == 0) throw DomainError("classify_component: empty component");
  if (k == 1) return {ComponentClass{ComponentKind::Singleton, std::nullopt, std::nullopt}};

  std::vector<ComponentClass> out;
  if (edges.size() == k - 1) {
    if (k == 2) {
      out.push_back(star_class(order, vs[0], {vs[1]}));
      out.push_back(star_class(order, vs[1], {vs[0]}));
      return out;
    }
    // K_{1,t}, t >= 2: the centre is the unique vertex touching every edge,
    // and it must sit at an extreme position.
    for (int c : {vs.front(), vs.back()}) {
      bool all = std::all_of(edges.begin(), edges.end(), [c](const Arc& e) { return e.first == c || e.second == c; });
      if (all) {
        std::vector<int> leaves;
        for (int v : vs)
          if (v != c) leaves.push_back(v);
        out.push_back(star_class(order, c, std::move(leaves)));
        return out;
      }
    }
  }
  if (k == 4 && edges.size() == 3) {
    // Path-ordering pattern on positions a < b < c < d: edges da, db, ca.
    int a = vs[0], b = vs[1], c = vs[2], d = vs[3];
    if (has(edges, d, a) && has(edges, d, b) && has(edges, c, a)) {
      BoatRoles roles{a, b, c, d};
      int pa = order.position(a), pb = order.position(b), pc = order.position(c), pd = order.position(d);
      if (pb == pa + 1 && pc == pa + 2) out.push_back(ComponentClass{ComponentKind::LeftBoat, std::nullopt, roles});
      if (pc == pb + 1 && pd == pb + 2) out.push_back(ComponentClass{ComponentKind::RightBoat, std::nullopt, roles});
      if (!out.empty()) return out;
    }
  }
  return {ComponentClass{ComponentKind::Other, std::nullopt, std::nullopt}};
}

}  // namespace tourn::patterns
