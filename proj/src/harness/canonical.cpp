#include "tourn/harness.hpp"

#include <optional>

namespace tourn::harness {

namespace {

using Cells = std::vector<std::vector<int>>;

class Canonizer {
 public:
  explicit Canonizer(const Tournament& t) : t_(t) {}

  std::string run() {
    Cells cells;
    std::vector<int> all;
    for (int v = 0; v < t_.size(); ++v) all.push_back(v);
    if (!all.empty()) cells.push_back(all);
    std::string prefix;
    descend(cells, prefix);
    return best_.value_or("");
  }

 private:
  // Row of candidate v placed first in cells[0]: per remaining cell, its
  // in-neighbours of v (bit 0) then its out-neighbours (bit 1).
  std::string row(const Cells& cells, int v) const {
    std::string r;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      int zeros = 0, ones = 0;
      for (int w : cells[c]) {
        if (w == v) continue;
        (t_.arc(v, w) ? ones : zeros)++;
      }
      r.append(static_cast<std::size_t>(zeros), '0');
      r.append(static_cast<std::size_t>(ones), '1');
    }
    return r;
  }

  void descend(const Cells& cells, std::string& prefix) {
    if (cells.empty()) {
      if (!best_ || prefix < *best_) best_ = prefix;
      return;
    }
    std::vector<std::string> rows;
    std::string least;
    for (std::size_t i = 0; i < cells[0].size(); ++i) {
      rows.push_back(row(cells, cells[0][i]));
      if (i == 0 || rows.back() < least) least = rows.back();
    }
    const std::size_t len = prefix.size();
    prefix += least;
    if (best_ && prefix.compare(0, prefix.size(), *best_, 0, prefix.size()) > 0) {
      prefix.resize(len);
      return;
    }
    for (std::size_t i = 0; i < cells[0].size(); ++i) {
      if (rows[i] != least) continue;
      const int v = cells[0][i];
      Cells next;
      for (const auto& cell : cells) {
        std::vector<int> in, out;
        for (int w : cell) {
          if (w == v) continue;
          (t_.arc(v, w) ? out : in).push_back(w);
        }
        if (!in.empty()) next.push_back(std::move(in));
        if (!out.empty()) next.push_back(std::move(out));
      }
      descend(next, prefix);
    }
    prefix.resize(len);
  }

  const Tournament& t_;
  std::optional<std::string> best_;
};

}  // namespace

std::string canonical_bits(const Tournament& t) { return Canonizer(t).run(); }

Tournament canonical_form(const Tournament& t) { return Tournament::from_pair_bits(t.size(), canonical_bits(t)); }

}  // namespace tourn::harness
