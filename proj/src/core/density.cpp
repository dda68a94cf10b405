#include "tourn/core/density.hpp"

#include "tourn/core/errors.hpp"

#include <algorithm>

namespace tourn {

DensityValue density(const Tournament& t, const VertexSet& x, const VertexSet& y) {
  if (x.none() || y.none()) throw DomainError("density requires non-empty vertex sets");
  if (x.intersects(y)) throw DomainError("density requires disjoint vertex sets");
  DensityValue d;
  d.denominator = static_cast<long long>(x.count()) * static_cast<long long>(y.count());
  for_each_member(x, [&](int v) { d.arcs += static_cast<long long>((t.out(v) & y).count()); });
  return d;
}

DensityValue density(const Tournament& t, std::span<const int> x, std::span<const int> y) {
  for (int v : x)
    if (v < 0 || v >= t.size()) throw DomainError("density: vertex out of range");
  for (int v : y)
    if (v < 0 || v >= t.size()) throw DomainError("density: vertex out of range");
  VertexSet xs = make_set(t.size(), x);
  VertexSet ys = make_set(t.size(), y);
  if (xs.count() != x.size() || ys.count() != y.size()) throw DomainError("density: repeated vertex");
  return density(t, xs, ys);
}

BackwardGraph backward_graph(const Tournament& t, const Ordering& order) {
  if (order.size() != t.size()) throw DomainError("ordering size does not match the tournament");
  const int n = t.size();
  BackwardGraph g;
  g.adj.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int early = order.at(i), late = order.at(j);
      if (t.arc(late, early)) {
        g.adj[early].set(static_cast<std::size_t>(late));
        g.adj[late].set(static_cast<std::size_t>(early));
        g.edges.emplace_back(std::min(early, late), std::max(early, late));
      }
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<Arc> backward_arcs(const Tournament& t, const Ordering& order) {
  std::vector<Arc> out;
  for (int i = 0; i < t.size(); ++i)
    for (int j = i + 1; j < t.size(); ++j)
      if (t.arc(order.at(j), order.at(i))) out.emplace_back(order.at(j), order.at(i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tourn
