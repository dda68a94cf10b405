#pragma once

#include "tourn/core/vertex_set.hpp"

#include <utility>
#include <vector>

namespace tourn {

using Arc = std::pair<int, int>;

/// Oriented graph in which a pair may carry one arc or be explicitly
/// absent. Pairs never mentioned in either list do not exist; for the
/// hatted digraphs built here every pair is one or the other.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int size() const { return n_; }
  bool has_arc(int from, int to) const { return out_[from].test(static_cast<std::size_t>(to)); }
  bool is_absent(int a, int b) const { return absent_[a].test(static_cast<std::size_t>(b)); }
  bool is_oriented(int a, int b) const { return has_arc(a, b) || has_arc(b, a); }

  /// Adds a -> b. Throws DomainError if b -> a is present or the pair is absent.
  void add_arc(int from, int to);
  /// Marks {a, b} as carrying no arc. Throws DomainError if an arc exists.
  void mark_absent(int a, int b);

  /// All arcs, sorted lexicographically.
  std::vector<Arc> arcs() const;
  /// Absent pairs as (min, max), sorted.
  std::vector<Arc> absent_pairs() const;
  std::size_t arc_count() const;

  /// Sub-digraph induced by `vertices` (vertex i of the result is vertices[i]).
  Digraph induced(const std::vector<int>& vertices) const;

 private:
  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> absent_;
};

}  // namespace tourn
