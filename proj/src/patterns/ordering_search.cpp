#include "tourn/core/errors.hpp"
#include "tourn/patterns.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace tourn::patterns {
namespace {

// Depth-first search over orderings, one position at a time. After each
// placement the backward-arc component of the new vertex must still be
// extendable to a star or a boat; full orderings go through decompose().
class Search {
 public:
  Search(const Tournament& t, std::vector<int> candidates, const std::atomic<int>* best, int index)
      : t_(t), n_(t.size()), cand_(std::move(candidates)), pos_(static_cast<std::size_t>(n_), -1),
        adj_(static_cast<std::size_t>(n_), VertexSet(static_cast<std::size_t>(n_))), best_(best), index_(index) {}

  std::optional<Ordering> run(int first) {
    push(first);
    if (viable(first) && descend()) return Ordering(prefix_);
    return std::nullopt;
  }

 private:
  void push(int v) {
    pos_[v] = static_cast<int>(prefix_.size());
    for (int u : prefix_)
      if (t_.arc(v, u)) {
        adj_[v].set(static_cast<std::size_t>(u));
        adj_[u].set(static_cast<std::size_t>(v));
      }
    prefix_.push_back(v);
  }

  void pop() {
    int v = prefix_.back();
    prefix_.pop_back();
    for_each_member(adj_[v], [&](int u) { adj_[u].reset(static_cast<std::size_t>(v)); });
    adj_[v].reset();
    pos_[v] = -1;
  }

  bool viable(int v) const {
    std::vector<int> comp{v};
    VertexSet seen(static_cast<std::size_t>(n_));
    seen.set(static_cast<std::size_t>(v));
    std::size_t degree_sum = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      degree_sum += adj_[comp[i]].count();
      for_each_member(adj_[comp[i]], [&](int w) {
        if (!seen.test(static_cast<std::size_t>(w))) {
          seen.set(static_cast<std::size_t>(w));
          comp.push_back(w);
        }
      });
    }
    const std::size_t k = comp.size(), m = degree_sum / 2;
    if (m + 1 != k) return false;  // contains a cycle
    if (k <= 2) return true;
    std::sort(comp.begin(), comp.end(), [&](int a, int b) { return pos_[a] < pos_[b]; });
    for (int c : comp)
      if (adj_[c].count() == k - 1) return c == comp.front() || c == comp.back();
    if (k != 4) return false;
    int a = comp[0], b = comp[1], c = comp[2], d = comp[3];
    auto e = [&](int x, int y) { return adj_[x].test(static_cast<std::size_t>(y)); };
    if (!(e(d, a) && e(d, b) && e(c, a))) return false;
    return (pos_[b] == pos_[a] + 1 && pos_[c] == pos_[a] + 2) || (pos_[c] == pos_[b] + 1 && pos_[d] == pos_[b] + 2);
  }

  bool descend() {
    if (static_cast<int>(prefix_.size()) == n_) {
      Ordering o(prefix_);
      return decompose(t_, o).recognized();
    }
    if (best_ && best_->load(std::memory_order_relaxed) < index_) return false;
    for (int v : cand_) {
      if (pos_[v] >= 0) continue;
      push(v);
      if (viable(v) && descend()) return true;
      pop();
    }
    return false;
  }

  const Tournament& t_;
  int n_;
  std::vector<int> cand_;
  std::vector<int> pos_;
  std::vector<VertexSet> adj_;
  std::vector<int> prefix_;
  const std::atomic<int>* best_;
  int index_;
};

}  // namespace

std::optional<Ordering> find_flotilla_galaxy_ordering(const Tournament& t, int cap, int threads) {
  const int n = t.size();
  if (n > cap)
    throw ResourceError("ordering search: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  if (n == 0) return Ordering::identity(0);

  std::vector<int> cand(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cand[i] = i;
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return t.out_degree(a) > t.out_degree(b); });

  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i)
      if (auto r = Search(t, cand, nullptr, i).run(cand[i])) return r;
    return std::nullopt;
  }

  // Workers claim first positions in candidate order; the lowest index that
  // succeeds wins, so the answer matches the sequential search.
  std::atomic<int> next{0};
  std::atomic<int> best{std::numeric_limits<int>::max()};
  std::vector<std::optional<Ordering>> found(static_cast<std::size_t>(n));
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < n;) {
      if (best.load() < i) break;
      if (auto r = Search(t, cand, &best, i).run(cand[i])) {
        found[i] = std::move(r);
        int cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  int b = best.load();
  if (b == std::numeric_limits<int>::max()) return std::nullopt;
  return found[b];
}

}  // namespace tourn::patterns
