#include "tourn/core/errors.hpp"
#include "tourn/core/prng.hpp"
#include "tourn/harness.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <thread>

namespace tourn::harness {

Tournament random_tournament(int n, std::uint64_t seed) {
  if (n < 0) throw DomainError("random_tournament: negative size");
  CounterRng rng(seed);
  TournamentBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(rng.at(pair_index(n, i, j)) >> 63)) b.orient(j, i);
  return std::move(b).build();
}

const char* to_string(EnumMode m) { return m == EnumMode::Labeled ? "labeled" : "canonical"; }

EnumMode parse_enum_mode(const std::string& text) {
  if (text == "labeled") return EnumMode::Labeled;
  if (text == "canonical") return EnumMode::Canonical;
  throw DomainError("unknown enumeration mode '" + text + "'");
}

Caps Caps::from_env(Caps base) {
  auto read = [](const char* name, int& slot) {
    if (const char* v = std::getenv(name)) {
      char* end = nullptr;
      long x = std::strtol(v, &end, 10);
      if (end == v || *end != '\0' || x < 0) throw DomainError(std::string(name) + " must be a non-negative integer");
      slot = static_cast<int>(x);
    }
  };
  read("TOURN_LABELED_CAP", base.labeled_max_n);
  read("TOURN_CANONICAL_CAP", base.canonical_max_n);
  read("TOURN_SAMPLING_CAP", base.sampling_max_n);
  return base;
}

namespace {

Tournament from_mask(int n, std::uint64_t mask) {
  const std::size_t p = pair_count(n);
  std::string bits(p, '0');
  for (std::size_t k = 0; k < p; ++k)
    if ((mask >> (p - 1 - k)) & 1u) bits[k] = '1';
  return Tournament::from_pair_bits(n, bits);
}

// Extends an (n-1)-vertex tournament by a last vertex beaten by the
// vertices whose bit in `mask` is set.
Tournament extend(const Tournament& base, std::uint32_t mask) {
  const int m = base.size();
  TournamentBuilder b(m + 1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!base.arc(i, j)) b.orient(j, i);
  for (int i = 0; i < m; ++i)
    if (!((mask >> i) & 1u)) b.orient(m, i);
  return std::move(b).build();
}

}  // namespace

std::vector<std::string> canonical_classes(int n, const Caps& caps, int threads) {
  if (n < 0) throw DomainError("canonical_classes: negative size");
  if (n > caps.canonical_max_n)
    throw ResourceError("canonical enumeration of n = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(caps.canonical_max_n));
  if (n <= 1) return {""};
  const auto prev = canonical_classes(n - 1, caps, threads);
  std::set<std::string> found;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::set<std::string> local;
    for (std::size_t i = next++; i < prev.size(); i = next++) {
      Tournament base = Tournament::from_pair_bits(n - 1, prev[i]);
      for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) local.insert(canonical_bits(extend(base, mask)));
    }
    std::lock_guard lock(mu);
    found.insert(local.begin(), local.end());
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return {found.begin(), found.end()};
}

void for_each_tournament(int n, EnumMode mode, const std::function<void(const Tournament&)>& fn, const Caps& caps) {
  if (n < 0) throw DomainError("enumeration: negative size");
  if (mode == EnumMode::Canonical) {
    for (const auto& bits : canonical_classes(n, caps)) fn(Tournament::from_pair_bits(n, bits));
    return;
  }
  if (n > caps.labeled_max_n)
    throw ResourceError("labeled enumeration of n = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(caps.labeled_max_n));
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(from_mask(n, mask));
}

std::vector<Tournament> enumerate_tournaments(int n, EnumMode mode, const Caps& caps) {
  std::vector<Tournament> out;
  for_each_tournament(n, mode, [&](const Tournament& t) { out.push_back(t); }, caps);
  return out;
}

}  // namespace tourn::harness
