#include "tourn/core/errors.hpp"
#include "tourn/transitive.hpp"

#include <bit>

namespace tourn::transitive {

CriticalityReport is_epsilon_critical(const Tournament& t, const Rational& eps, int cap) {
  if (eps <= 0 || eps >= 1) throw DomainError("epsilon must lie strictly between 0 and 1");
  const int n = t.size();
  TrTable table = tr_table(t, cap);

  // below[s][k] <=> k < s^eps, precomputed for every size and tr value.
  std::vector<std::vector<char>> below(static_cast<std::size_t>(n) + 1);
  for (int s = 0; s <= n; ++s) {
    below[s].assign(static_cast<std::size_t>(s) + 1, 0);
    for (int k = 0; k <= s; ++k) below[s][k] = compare_power(s, eps, k) > 0;
  }

  CriticalityReport report;
  report.tr_whole = table.value(table.full_mask());
  if (!below[n][report.tr_whole]) {
    report.whole_not_below = true;
    return report;
  }
  const std::uint32_t full = table.full_mask();
  for (std::uint32_t s = 0; s < full; ++s) {
    int size = std::popcount(s);
    if (below[size][table.value(s)]) {
      std::vector<int> subset;
      for (int v = 0; v < n; ++v)
        if (s >> v & 1u) subset.push_back(v);
      report.violating_subset = std::move(subset);
      return report;
    }
  }
  report.critical = true;
  return report;
}

}  // namespace tourn::transitive
