#include "tourn/core/errors.hpp"
#include "tourn/transitive.hpp"

#include <bit>

namespace tourn::transitive {

TrTable tr_table(const Tournament& t, int cap) {
  const int n = t.size();
  if (n > cap || n > 30)
    throw ResourceError("tr table: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  TrTable table;
  table.base_ = t;
  table.out_masks_.assign(static_cast<std::size_t>(n), 0u);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (t.arc(v, u)) table.out_masks_[v] |= 1u << u;

  const std::uint32_t limit = 1u << n;
  table.values_.assign(limit, 0);
  // S & out(v) is a proper subset of S whenever v is in S, so ascending
  // numeric order always has the smaller entries ready.
  for (std::uint32_t s = 1; s < limit; ++s) {
    std::uint8_t best = 0;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint8_t cand = table.values_[s & table.out_masks_[v]];
      if (cand > best) best = cand;
    }
    table.values_[s] = static_cast<std::uint8_t>(best + 1);
  }
  return table;
}

std::vector<int> TrTable::witness(std::uint32_t mask) const {
  std::vector<int> out;
  std::uint32_t s = mask;
  while (s) {
    int target = values_[s] - 1;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (values_[s & out_masks_[v]] == target) {
        out.push_back(v);
        s &= out_masks_[v];
        break;
      }
    }
  }
  return out;
}

bool is_transitive_order(const Tournament& t, std::span<const int> order) {
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (!t.arc(order[i], order[j])) return false;
  return true;
}

TrResult tr(const Tournament& t, int table_cap) {
  if (t.size() <= table_cap && t.size() <= 24) {
    TrTable table = tr_table(t, table_cap);
    TrResult r;
    r.witness = table.witness(table.full_mask());
    r.size = static_cast<int>(r.witness.size());
    return r;
  }
  return max_transitive(t, {});
}

}  // namespace tourn::transitive
