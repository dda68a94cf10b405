#include "tourn/core/errors.hpp"
#include "tourn/core/prng.hpp"
#include "tourn/smooth.hpp"
#include "tourn/transitive.hpp"

#include <algorithm>
#include <limits>

namespace tourn::smooth {
namespace {

long long ceil_of(const Rational& r) {
  BigInt q = numerator_of(r) / denominator_of(r);
  if (Rational(q) < r) ++q;
  return q < 0 ? 0 : static_cast<long long>(q);
}

// Score order, optionally with seeded tie noise, then adjacent swaps that
// remove backward arcs until none applies.
std::vector<int> vertex_order(const Tournament& t, CounterRng* rng) {
  const int n = t.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<std::uint64_t> noise(static_cast<std::size_t>(n), 0);
  if (rng)
    for (auto& x : noise) x = rng->next();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int da = t.out_degree(a) + (rng ? static_cast<int>(noise[a] % 3) : 0);
    int db = t.out_degree(b) + (rng ? static_cast<int>(noise[b] % 3) : 0);
    return da > db;
  });
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i)
      if (t.arc(order[i + 1], order[i])) {
        std::swap(order[i], order[i + 1]);
        changed = true;
      }
  }
  return order;
}

struct Candidate {
  std::vector<std::vector<int>> blocks;
};

// Splits `order` into consecutive segments (vertices between segments are
// dropped) minimising the backward arcs crossing the segment starts.
std::optional<Candidate> segment(const Tournament& t, const std::vector<int>& order, const std::vector<int>& w,
                                 long long need_l, long long need_t) {
  const int n = t.size();
  const int k = static_cast<int>(w.size());
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  // cut[p]: backward arcs (b -> a) with pos a < p <= pos b.
  std::vector<long long> diff(static_cast<std::size_t>(n) + 2, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t.arc(b, a) && pos[a] < pos[b]) {
        ++diff[pos[a] + 1];
        --diff[pos[b] + 1];
      }
  std::vector<long long> cut(static_cast<std::size_t>(n) + 1, 0);
  for (int p = 1; p <= n; ++p) cut[p] = cut[p - 1] + diff[p];

  // chain[s][e]: greedy order-consistent transitive subset size of [s, e).
  std::vector<std::vector<int>> chain(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  for (int s = 0; s < n; ++s) {
    VertexSet members(static_cast<std::size_t>(n));
    int size = 0;
    for (int e = s; e < n; ++e) {
      int v = order[e];
      if ((members & t.out(v)).none()) {
        members.set(static_cast<std::size_t>(v));
        ++size;
      }
      chain[s][e + 1] = size;
    }
  }
  auto valid = [&](int blk, int s, int e) {
    return w[blk] ? chain[s][e] >= need_t && chain[s][e] > 0 : e - s >= std::max<long long>(need_l, 1);
  };

  const long long inf = std::numeric_limits<long long>::max() / 4;
  // best[i][e]: min cost with blocks 0..i-1 placed and block i-1 ending at e.
  std::vector<std::vector<long long>> best(static_cast<std::size_t>(k) + 1,
                                           std::vector<long long>(static_cast<std::size_t>(n) + 1, inf));
  std::vector<std::vector<int>> from(static_cast<std::size_t>(k) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
  std::vector<std::vector<int>> prev_end = from;
  for (int e = 0; e <= n; ++e) best[0][e] = 0;
  for (int i = 0; i < k; ++i) {
    // prefix minimum of best[i] over end positions <= s
    std::vector<long long> pm(static_cast<std::size_t>(n) + 1);
    std::vector<int> arg(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
      pm[p] = best[i][p];
      arg[p] = p;
      if (p > 0 && pm[p - 1] <= pm[p]) {
        pm[p] = pm[p - 1];
        arg[p] = arg[p - 1];
      }
    }
    for (int s = 0; s < n; ++s) {
      if (pm[s] >= inf) continue;
      long long base = pm[s] + (i > 0 ? cut[s] : 0);
      for (int e = s + 1; e <= n; ++e)
        if (valid(i, s, e) && base < best[i + 1][e]) {
          best[i + 1][e] = base;
          from[i + 1][e] = s;
          prev_end[i + 1][e] = arg[s];
        }
    }
  }
  int end = -1;
  for (int e = 0; e <= n; ++e)
    if (best[k][e] < inf && (end < 0 || best[k][e] < best[k][end])) end = e;
  if (end < 0) return std::nullopt;

  Candidate cand;
  cand.blocks.resize(static_cast<std::size_t>(k));
  for (int i = k; i > 0; --i) {
    int s = from[i][end];
    std::vector<int> seg(order.begin() + s, order.begin() + end);
    if (w[i - 1]) {
      std::vector<int> picked;
      VertexSet members(static_cast<std::size_t>(n));
      for (int v : seg)
        if ((members & t.out(v)).none()) {
          members.set(static_cast<std::size_t>(v));
          picked.push_back(v);
        }
      seg = std::move(picked);
    }
    cand.blocks[i - 1] = std::move(seg);
    end = prev_end[i][end];
  }
  return cand;
}

// Drops the vertex with the most density failures while blocks stay large
// enough; returns false when stuck.
bool prune(const Tournament& t, std::vector<std::vector<int>>& blocks, const std::vector<int>& w, const Rational& lambda,
           long long need_l, long long need_t) {
  const int n = t.size();
  for (int guard = 0; guard < n; ++guard) {
    std::vector<VertexSet> sets;
    for (const auto& b : blocks) sets.push_back(make_set(n, b));
    std::vector<int> bad(static_cast<std::size_t>(n), 0);
    bool any = false;
    const Rational floor = 1 - lambda;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        for (int v : blocks[i]) {
          DensityValue d{static_cast<long long>((t.out(v) & sets[j]).count()), static_cast<long long>(blocks[j].size())};
          if (!d.at_least(floor)) {
            any = true;
            ++bad[v];
            for_each_member(sets[j] & t.in(v), [&](int u) { ++bad[u]; });
          }
        }
        for (int v : blocks[j]) {
          DensityValue d{static_cast<long long>((t.in(v) & sets[i]).count()), static_cast<long long>(blocks[i].size())};
          if (!d.at_least(floor)) {
            any = true;
            ++bad[v];
            for_each_member(sets[i] & t.out(v), [&](int u) { ++bad[u]; });
          }
        }
      }
    if (!any) return true;
    int victim = -1;
    std::size_t victim_block = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      long long need = w[i] ? need_t : need_l;
      if (static_cast<long long>(blocks[i].size()) <= std::max<long long>(need, 1)) continue;
      for (int v : blocks[i])
        if (bad[v] > 0 && (victim < 0 || bad[v] > bad[victim])) {
          victim = v;
          victim_block = i;
        }
    }
    if (victim < 0) return false;
    auto& b = blocks[victim_block];
    b.erase(std::find(b.begin(), b.end(), victim));
  }
  return false;
}

}  // namespace

std::optional<SmoothStructure> find_smooth_structure(const Tournament& t, const std::vector<int>& w, const Rational& c,
                                                     const Rational& lambda, const FinderOptions& options) {
  const int n = t.size();
  if (n > options.cap)
    throw ResourceError("smooth finder: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(options.cap));
  for (int x : w)
    if (x != 0 && x != 1) throw DomainError("w must be a 0/1 vector");
  const int tr = n <= transitive::kDefaultTableCap ? transitive::tr(t).size : transitive::max_transitive(t, {}).size;
  const long long need_l = ceil_of(c * n), need_t = ceil_of(c * tr);
  std::vector<int> delta = options.delta;
  if (delta.empty())
    for (int x : w)
      if (x) delta.push_back(1);

  CounterRng rng(options.seed, 0x5EEDu);
  for (int attempt = 0; attempt < std::max(1, options.restarts); ++attempt) {
    std::vector<int> order = vertex_order(t, attempt == 0 ? nullptr : &rng);
    auto cand = segment(t, order, w, need_l, need_t);
    if (!cand) continue;
    if (!prune(t, cand->blocks, w, lambda, need_l, need_t)) continue;
    try {
      SmoothStructure chi = make_structure(t, cand->blocks, w, delta, c, lambda);
      if (verify_smooth(t, chi, c, lambda, w, tr).pass) return chi;
    } catch (const StructureError&) {
    }
  }
  return std::nullopt;
}

}  // namespace tourn::smooth
