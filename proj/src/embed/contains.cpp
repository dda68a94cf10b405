#include "tourn/core/errors.hpp"
#include "tourn/embed.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace tourn::embed {

namespace {

class Matcher {
 public:
  Matcher(const Tournament& t, const Tournament& h) : t_(t), h_(h) {}

  /// Depth-first completion with vertex 0 of H fixed on `anchor`.
  std::optional<Witness> from_anchor(int anchor) const {
    const int k = h_.size();
    const auto n = static_cast<std::size_t>(t_.size());
    std::vector<VertexSet> dom(static_cast<std::size_t>(k), VertexSet(n));
    for (auto& d : dom) d.set();
    Witness f(static_cast<std::size_t>(k), -1);
    if (!assign(dom, 0, anchor, f)) return std::nullopt;
    if (descend(dom, 1, f)) return f;
    return std::nullopt;
  }

 private:
  // Fixes H vertex i on c and narrows the domains of the later vertices.
  bool assign(std::vector<VertexSet>& dom, int i, int c, Witness& f) const {
    f[i] = c;
    for (int j = i + 1; j < h_.size(); ++j) {
      dom[j] &= h_.arc(i, j) ? t_.out(c) : t_.in(c);
      if (dom[j].none()) return false;
    }
    return true;
  }

  bool descend(const std::vector<VertexSet>& dom, int i, Witness& f) const {
    if (i == h_.size()) return true;
    for (auto c = dom[i].find_first(); c != VertexSet::npos; c = dom[i].find_next(c)) {
      std::vector<VertexSet> next(dom.begin(), dom.end());
      if (assign(next, i, static_cast<int>(c), f) && descend(next, i + 1, f)) return true;
    }
    f[i] = -1;
    return false;
  }

  const Tournament& t_;
  const Tournament& h_;
};

}  // namespace

std::optional<Witness> contains(const Tournament& t, const Tournament& h, int threads) {
  if (h.size() == 0) return Witness{};
  if (h.size() > t.size()) return std::nullopt;
  Matcher m(t, h);
  const int n = t.size();
  if (threads <= 1) {
    for (int a = 0; a < n; ++a)
      if (auto w = m.from_anchor(a)) return w;
    return std::nullopt;
  }
  std::atomic<int> next{0};
  std::atomic<int> best{n};
  std::mutex mu;
  std::optional<Witness> result;
  auto worker = [&] {
    for (int a = next++; a < n; a = next++) {
      if (a >= best.load()) return;
      if (auto w = m.from_anchor(a)) {
        std::lock_guard lock(mu);
        if (a < best.load()) {
          best = a;
          result = std::move(w);
        }
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < std::min(threads, n); ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return result;
}

bool is_copy(const Tournament& t, const Tournament& h, const Witness& f) {
  if (static_cast<int>(f.size()) != h.size()) return false;
  VertexSet seen(static_cast<std::size_t>(t.size()));
  for (int v : f) {
    if (v < 0 || v >= t.size() || seen.test(static_cast<std::size_t>(v))) return false;
    seen.set(static_cast<std::size_t>(v));
  }
  for (int i = 0; i < h.size(); ++i)
    for (int j = i + 1; j < h.size(); ++j)
      if (h.arc(i, j) != t.arc(f[i], f[j])) return false;
  return true;
}

}  // namespace tourn::embed
