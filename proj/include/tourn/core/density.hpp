#pragma once

#include "tourn/core/digraph.hpp"
#include "tourn/core/ordering.hpp"
#include "tourn/core/rational.hpp"
#include "tourn/core/tournament.hpp"

#include <vector>

namespace tourn {

/// Directed density e(X,Y) / (|X| |Y|), kept as the raw count pair so no
/// precision is lost.
struct DensityValue {
  long long arcs = 0;         // e(X, Y)
  long long denominator = 1;  // |X| * |Y|

  Rational value() const { return Rational(arcs, denominator); }
  /// value() >= bound, exactly.
  bool at_least(const Rational& bound) const { return Rational(arcs) >= bound * denominator; }
};

/// Density of arcs from X to Y. Throws DomainError if either set is empty
/// or the two intersect.
DensityValue density(const Tournament& t, const VertexSet& x, const VertexSet& y);
DensityValue density(const Tournament& t, std::span<const int> x, std::span<const int> y);

/// Undirected graph of backward arcs of `t` under `order`.
struct BackwardGraph {
  std::vector<VertexSet> adj;
  std::vector<Arc> edges;  // (min label, max label), sorted

  int size() const { return static_cast<int>(adj.size()); }
  bool has_edge(int a, int b) const { return adj[a].test(static_cast<std::size_t>(b)); }
  int degree(int v) const { return static_cast<int>(adj[v].count()); }
};

BackwardGraph backward_graph(const Tournament& t, const Ordering& order);

/// Backward arcs as (tail, head) pairs, i.e. head precedes tail in `order`.
std::vector<Arc> backward_arcs(const Tournament& t, const Ordering& order);

}  // namespace tourn
