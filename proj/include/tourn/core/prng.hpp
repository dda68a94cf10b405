#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace tourn {

/// Counter-based generator "splitmix64-ctr-v1": draw i of stream s under
/// seed k is splitmix64_mix(k + golden * (s * 2^32 + i + 1)). Random access
/// by index makes sharded generation independent of worker count.
class CounterRng {
 public:
  static constexpr const char* kName = "splitmix64-ctr-v1";

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

  static std::uint64_t mix(std::uint64_t z);

  std::uint64_t at(std::uint64_t index) const;
  std::uint64_t next() { return at(counter_++); }
  bool bit() { return next() >> 63; }
  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t seed_, stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace tourn
