#include "tourn/core/errors.hpp"
#include "tourn/transitive.hpp"

#include <algorithm>
#include <numeric>

namespace tourn::transitive {

namespace {

constexpr int kMaxPart = 20;

// Repeatedly takes the vertex with the most out-neighbours left.
std::vector<int> greedy_chain(const Tournament& t, VertexSet s) {
  std::vector<int> chain;
  while (s.any()) {
    int pick = -1;
    std::size_t pick_deg = 0;
    for_each_member(s, [&](int v) {
      std::size_t d = (s & t.out(v)).count();
      if (pick < 0 || d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    });
    chain.push_back(pick);
    s &= t.out(pick);
  }
  return chain;
}

struct Part {
  std::vector<int> vertices;
  TrTable table;
};

class Search {
 public:
  Search(const Tournament& t, std::vector<Part> parts) : t_(t), parts_(std::move(parts)) {}

  TrResult run() {
    const int n = t_.size();
    VertexSet all(static_cast<std::size_t>(n));
    all.set();
    best_ = greedy(all);
    std::vector<int> chain;
    descend(chain, all);
    TrResult r;
    r.size = static_cast<int>(best_.size());
    r.witness = best_;
    return r;
  }

 private:
  int bound(const VertexSet& s) const {
    int total = 0;
    for (const auto& p : parts_) {
      std::uint32_t local = 0;
      for (std::size_t i = 0; i < p.vertices.size(); ++i)
        if (s.test(static_cast<std::size_t>(p.vertices[i]))) local |= 1u << i;
      total += p.table.value(local);
    }
    return std::min(total, static_cast<int>(s.count()));
  }

  std::vector<int> greedy(const VertexSet& s) const { return greedy_chain(t_, s); }

  void descend(std::vector<int>& chain, const VertexSet& s) {
    if (s.none()) {
      if (chain.size() > best_.size()) best_ = chain;
      return;
    }
    if (static_cast<int>(chain.size()) + bound(s) <= static_cast<int>(best_.size())) return;

    // Try sources with the largest remaining out-set first.
    std::vector<std::pair<int, int>> order;
    for_each_member(s, [&](int v) { order.emplace_back(-static_cast<int>((s & t_.out(v)).count()), v); });
    std::sort(order.begin(), order.end());
    for (auto [neg_deg, v] : order) {
      if (static_cast<int>(chain.size()) + 1 - neg_deg <= static_cast<int>(best_.size())) break;
      VertexSet next = s & t_.out(v);
      chain.push_back(v);
      if (static_cast<int>(chain.size()) + bound(next) > static_cast<int>(best_.size())) descend(chain, next);
      chain.pop_back();
    }
  }

  const Tournament& t_;
  std::vector<Part> parts_;
  std::vector<int> best_;
};

std::vector<Part> build_parts(const Tournament& t, const std::vector<std::vector<int>>& parts, int max_part,
                              bool with_tables = true) {
  const int n = t.size();
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> groups;
  for (const auto& p : parts) {
    std::vector<int> current;
    for (int v : p) {
      if (v < 0 || v >= n) throw DomainError("max_transitive: part vertex out of range");
      if (covered[v]) throw DomainError("max_transitive: parts overlap");
      covered[v] = 1;
      current.push_back(v);
      if (static_cast<int>(current.size()) == max_part) {
        groups.push_back(std::move(current));
        current.clear();
      }
    }
    if (!current.empty()) groups.push_back(std::move(current));
  }

  // Leftover vertices: chunks of consecutive vertices in descending score order.
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (!covered[v]) rest.push_back(v);
  std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) { return t.out_degree(a) > t.out_degree(b); });
  const std::size_t chunk = static_cast<std::size_t>(std::min(max_part, 16));
  for (std::size_t i = 0; i < rest.size(); i += chunk)
    groups.emplace_back(rest.begin() + static_cast<long>(i),
                        rest.begin() + static_cast<long>(std::min(rest.size(), i + chunk)));

  std::vector<Part> built;
  built.reserve(groups.size());
  for (auto& g : groups) {
    Part p;
    if (with_tables) p.table = tr_table(t.induced(g), kMaxPart);
    p.vertices = std::move(g);
    built.push_back(std::move(p));
  }
  return built;
}

}  // namespace

TrResult max_transitive(const Tournament& t, const std::vector<std::vector<int>>& parts) {
  return Search(t, build_parts(t, parts, kMaxPart)).run();
}

TrBounds tr_bounds(const Tournament& t, const std::vector<std::vector<int>>& parts) {
  // Smaller chunks than the exact search uses: the bound loosens slightly
  // but each table is 16 times smaller. Transitive chunks need no table.
  constexpr int kBoundPart = 16;
  TrBounds b;
  for (auto& p : build_parts(t, parts, kBoundPart, false)) {
    const Tournament sub = t.induced(p.vertices);
    if (sub.is_transitive()) {
      b.high += sub.size();
    } else {
      TrTable table = tr_table(sub, kBoundPart);
      b.high += table.value(table.full_mask());
    }
  }
  VertexSet all(static_cast<std::size_t>(t.size()));
  all.set();
  b.low = static_cast<int>(greedy_chain(t, all).size());
  return b;
}

}  // namespace tourn::transitive
