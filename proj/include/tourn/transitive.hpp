#pragma once

#include "tourn/core/rational.hpp"
#include "tourn/core/tournament.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tourn::transitive {

inline constexpr int kDefaultTableCap = 24;

/// tr of every vertex subset of a small tournament, indexed by bitmask.
class TrTable {
 public:
  const Tournament& base() const { return base_; }
  int size() const { return base_.size(); }
  int value(std::uint32_t mask) const { return values_[mask]; }
  std::uint32_t full_mask() const { return size() == 0 ? 0u : (size() == 32 ? ~0u : ((1u << size()) - 1u)); }

  /// A maximum transitive subset of `mask`, listed source first. At each
  /// step the lowest-index admissible source is taken.
  std::vector<int> witness(std::uint32_t mask) const;

 private:
  friend TrTable tr_table(const Tournament&, int);
  Tournament base_;
  std::vector<std::uint32_t> out_masks_;
  std::vector<std::uint8_t> values_;
};

/// Builds the full table via tr(S) = 1 + max_{v in S} tr(S & out(v)).
/// Throws ResourceError when the tournament exceeds `cap` vertices.
TrTable tr_table(const Tournament& t, int cap = kDefaultTableCap);

struct TrResult {
  int size = 0;
  std::vector<int> witness;  // transitive order, source first
};

/// Exact tr with a witness. Uses the subset table up to `table_cap`
/// vertices and branch-and-bound beyond it.
TrResult tr(const Tournament& t, int table_cap = kDefaultTableCap);

/// Exact branch-and-bound maximum transitive subtournament. The bound at
/// each node sums exact tr over `parts` (each part at most 20 vertices);
/// vertices not covered by any part are grouped automatically. A good
/// partition, such as the blocks of a smooth structure, makes the bound
/// nearly tight.
TrResult max_transitive(const Tournament& t, const std::vector<std::vector<int>>& parts);

struct TrBounds {
  int low = 0;   // length of a greedy transitive chain
  int high = 0;  // sum of exact tr over the parts
};

/// Cheap two-sided bounds on tr, with parts grouped as in max_transitive.
TrBounds tr_bounds(const Tournament& t, const std::vector<std::vector<int>>& parts);

/// True iff every arc between listed vertices points from earlier to later.
bool is_transitive_order(const Tournament& t, std::span<const int> order);

struct CriticalityReport {
  bool critical = false;
  int tr_whole = 0;
  /// Set when tr(T) >= n^eps (the tournament itself fails the first condition).
  bool whole_not_below = false;
  /// First proper subset S (ascending mask order) with tr(S) < |S|^eps.
  std::optional<std::vector<int>> violating_subset;
};

/// epsilon-criticality with exact comparisons tr^q vs |S|^p for eps = p/q.
/// Throws DomainError unless 0 < eps < 1, ResourceError above `cap`.
CriticalityReport is_epsilon_critical(const Tournament& t, const Rational& eps, int cap = kDefaultTableCap);

}  // namespace tourn::transitive
