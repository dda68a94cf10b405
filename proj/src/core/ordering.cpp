#include "tourn/core/ordering.hpp"

#include "tourn/core/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tourn {

Ordering::Ordering(std::vector<int> perm) : perm_(std::move(perm)) {
  const int n = static_cast<int>(perm_.size());
  pos_.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = perm_[i];
    if (v < 0 || v >= n) throw DomainError("ordering entry " + std::to_string(v) + " out of range");
    if (pos_[v] != -1) throw DomainError("ordering repeats vertex " + std::to_string(v));
    pos_[v] = i;
  }
}

Ordering Ordering::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return Ordering(std::move(p));
}

Ordering Ordering::reversed() const {
  std::vector<int> p(perm_.rbegin(), perm_.rend());
  return Ordering(std::move(p));
}

}  // namespace tourn
