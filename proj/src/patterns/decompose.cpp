#include "tourn/patterns.hpp"

#include <algorithm>
#include <sstream>

namespace tourn::patterns {
namespace {

std::string render(const std::vector<int>& vs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << 'v' << vs[i] + 1;
  os << '}';
  return os.str();
}

struct Interval {
  int lo, hi;  // positions of extreme leaves
  std::size_t owner;
  bool strictly_inside(int p) const { return lo < p && p < hi; }
};

}  // namespace

PatternDecomposition decompose(const Tournament& t, const Ordering& order) {
  const int n = t.size();
  const BackwardGraph g = backward_graph(t, order);
  PatternDecomposition out;

  // Components in order of their first position.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> comps;
  for (int p = 0; p < n; ++p) {
    int s = order.at(p);
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(comps.size());
    for (std::size_t i = 0; i < members.size(); ++i)
      for_each_member(g.adj[members[i]], [&](int w) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      });
    std::sort(members.begin(), members.end(), [&](int a, int b) { return order.before(a, b); });
    comps.push_back(std::move(members));
  }
  std::vector<std::vector<Arc>> comp_edges(comps.size());
  for (const Arc& e : g.edges) comp_edges[comp[e.first]].push_back(e);

  std::vector<std::vector<ComponentClass>> options;
  options.reserve(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    options.push_back(classify_component(comps[i], comp_edges[i], order));
    out.components.push_back(Component{comps[i], options.back().front()});
  }

  auto fail = [&](std::string why) {
    out.flavor = Flavor::NotRecognized;
    out.regular = false;
    out.violation = std::move(why);
    return out;
  };

  for (std::size_t i = 0; i < comps.size(); ++i)
    if (options[i].front().kind == ComponentKind::Other)
      return fail("component " + render(comps[i]) + " is not a star, boat or singleton");

  // Leaf intervals of stars with at least two leaves are fixed; single-edge
  // stars have no interior and only their centre choice is open.
  std::vector<Interval> intervals;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = out.components[i].cls;
    if (is_star(c.kind) && c.star->leaves.size() >= 2)
      intervals.push_back({order.position(c.star->leaves.front()), order.position(c.star->leaves.back()), i});
  }
  auto covering = [&](int vertex, std::size_t self) -> const Interval* {
    for (const auto& iv : intervals)
      if (iv.owner != self && iv.strictly_inside(order.position(vertex))) return &iv;
    return nullptr;
  };

  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto& cls = out.components[i].cls;
    if (is_boat(cls.kind)) {
      for (int v : comps[i])
        if (const Interval* iv = covering(v, i))
          return fail("vertex v" + std::to_string(v + 1) + " of boat " + render(comps[i]) +
                      " lies between leaves of star " + render(comps[iv->owner]));
    } else if (is_star(cls.kind)) {
      const Interval* blocked = nullptr;
      bool placed = false;
      for (const auto& opt : options[i]) {
        blocked = covering(opt.star->center, i);
        if (!blocked) {
          cls = opt;
          placed = true;
          break;
        }
      }
      if (!placed)
        return fail("centre of star " + render(comps[i]) + " lies between leaves of star " +
                    render(comps[blocked->owner]));
    }
  }

  // A boat that is both left and right is reported on the side shared by
  // the other boats when that makes the ordering a one-sided flotilla.
  bool all_left = true, all_right = true, any_boat = false, any_other = false;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!is_boat(options[i].front().kind)) {
      any_other = true;
      continue;
    }
    any_boat = true;
    bool l = false, r = false;
    for (const auto& o : options[i]) (o.kind == ComponentKind::LeftBoat ? l : r) = true;
    all_left = all_left && l;
    all_right = all_right && r;
  }
  if (any_boat) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (!is_boat(options[i].front().kind)) continue;
      auto& cls = out.components[i].cls;
      if (!all_left && all_right) cls.kind = ComponentKind::RightBoat;
      else if (all_left) cls.kind = ComponentKind::LeftBoat;
    }
  }

  if (!any_boat) out.flavor = Flavor::Galaxy;
  else if (any_other) out.flavor = Flavor::FlotillaGalaxy;
  else if (all_left) out.flavor = Flavor::LeftFlotilla;
  else if (all_right) out.flavor = Flavor::RightFlotilla;
  else out.flavor = Flavor::Flotilla;

  out.regular = std::none_of(out.components.begin(), out.components.end(),
                             [](const Component& c) { return c.cls.kind == ComponentKind::Singleton; });
  return out;
}

}  // namespace tourn::patterns
