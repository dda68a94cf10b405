#pragma once

#include "tourn/core/vertex_set.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tourn {

/// A tournament on vertices 0..n-1 stored as a full bit matrix: out(v) and
/// in(v) are both materialized so arc queries and neighbourhood
/// intersections are word-parallel.
///
/// Instances are immutable once built; use TournamentBuilder to orient arcs.
class Tournament {
 public:
  Tournament() = default;

  /// The transitive tournament 0 -> 1 -> ... -> n-1 (every i -> j for i < j).
  static Tournament transitive(int n);

  /// Builds from the row-major pair-bit encoding over pairs (i, j), i < j,
  /// with bit '1' meaning i -> j. Throws FormatError on a length mismatch
  /// or a character other than '0'/'1'.
  static Tournament from_pair_bits(int n, std::string_view bits);
  static Tournament from_pair_bits(int n, std::span<const bool> bits);

  int size() const { return n_; }
  bool arc(int from, int to) const { return out_[from].test(static_cast<std::size_t>(to)); }
  const VertexSet& out(int v) const { return out_[v]; }
  const VertexSet& in(int v) const { return in_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].count()); }

  std::string pair_bits() const;

  /// Every arc reversed.
  Tournament complement() const;

  /// Subtournament induced by `vertices`; vertex i of the result is
  /// vertices[i] of this tournament. Throws DomainError on an out-of-range
  /// or repeated vertex.
  Tournament induced(std::span<const int> vertices) const;

  /// Tournament on the same vertex set relabelled so that vertex perm[i]
  /// of this tournament becomes vertex i of the result.
  Tournament relabeled(std::span<const int> perm) const { return induced(perm); }

  bool is_transitive() const;

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  friend class TournamentBuilder;
  explicit Tournament(int n);

  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Mutable staging area for a Tournament. Starts transitive (i -> j for i < j).
class TournamentBuilder {
 public:
  explicit TournamentBuilder(int n) : t_(Tournament::transitive(n)) {}
  explicit TournamentBuilder(Tournament t) : t_(std::move(t)) {}

  int size() const { return t_.size(); }
  bool arc(int from, int to) const { return t_.arc(from, to); }

  /// Orients the pair {from, to} as from -> to.
  void orient(int from, int to);
  void flip(int a, int b) { arc(a, b) ? orient(b, a) : orient(a, b); }

  Tournament build() && { return std::move(t_); }
  const Tournament& view() const { return t_; }

 private:
  Tournament t_;
};

/// Index of pair (i, j), i < j, in the row-major pair-bit encoding.
inline std::size_t pair_index(int n, int i, int j) {
  auto ii = static_cast<std::size_t>(i);
  auto nn = static_cast<std::size_t>(n);
  return ii * nn - ii * (ii + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

inline std::size_t pair_count(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

}  // namespace tourn
