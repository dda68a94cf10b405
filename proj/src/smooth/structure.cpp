#include "tourn/core/errors.hpp"
#include "tourn/smooth.hpp"
#include "tourn/transitive.hpp"

#include <algorithm>

namespace tourn::smooth {

SmoothStructure::SmoothStructure(std::vector<Block> blocks, Rational c, Rational lambda)
    : blocks_(std::move(blocks)), c_(std::move(c)), lambda_(std::move(lambda)) {
  int xi = 1;
  for (int b = 0; b < size(); ++b) {
    const Block& blk = blocks_[b];
    first_xi_.push_back(xi);
    for (int v : blk.vertices) {
      if (v < 0) throw StructureError("negative vertex label in block");
      if (!where_.emplace(v, Slot{b, blk.transitive ? -1 : 0}).second)
        throw StructureError("vertex " + std::to_string(v) + " appears in more than one block");
    }
    if (!blk.transitive) {
      if (!blk.runs.empty()) throw StructureError("linear block " + std::to_string(b) + " has runs");
      ++xi;
      continue;
    }
    std::size_t offset = 0;
    for (std::size_t r = 0; r < blk.runs.size(); ++r) {
      const auto& run = blk.runs[r];
      if (offset + run.size() > blk.vertices.size() ||
          !std::equal(run.begin(), run.end(), blk.vertices.begin() + static_cast<std::ptrdiff_t>(offset)))
        throw StructureError("runs of block " + std::to_string(b) + " are not consecutive pieces of it");
      for (int v : run) where_[v].run = static_cast<int>(r) + 1;
      offset += run.size();
    }
    xi += static_cast<int>(blk.runs.size());
  }
  first_xi_.push_back(xi);
}

std::vector<int> SmoothStructure::w() const {
  std::vector<int> out;
  for (const auto& b : blocks_) out.push_back(b.transitive ? 1 : 0);
  return out;
}

std::string SmoothStructure::w_string() const {
  std::string s;
  for (const auto& b : blocks_) s += b.transitive ? '1' : '0';
  return s;
}

std::vector<int> SmoothStructure::delta() const {
  std::vector<int> out;
  for (const auto& b : blocks_)
    if (b.transitive) out.push_back(static_cast<int>(b.runs.size()));
  return out;
}

std::optional<Slot> SmoothStructure::locate(int v) const {
  auto it = where_.find(v);
  if (it == where_.end()) return std::nullopt;
  return it->second;
}

int SmoothStructure::xi(int v) const {
  auto s = locate(v);
  if (!s) throw DomainError("vertex " + std::to_string(v) + " is not in the structure");
  if (s->run < 0) throw DomainError("vertex " + std::to_string(v) + " lies beyond the last run of its block");
  return first_xi_[s->block] + (s->run == 0 ? 0 : s->run - 1);
}

int SmoothStructure::positions() const { return first_xi_.empty() ? 0 : first_xi_.back() - 1; }

Slot SmoothStructure::slot_of(int xi) const {
  if (xi < 1 || xi > positions()) throw DomainError("position " + std::to_string(xi) + " out of range");
  auto it = std::upper_bound(first_xi_.begin(), first_xi_.end(), xi);
  int b = static_cast<int>(it - first_xi_.begin()) - 1;
  return {b, blocks_[b].transitive ? xi - first_xi_[b] + 1 : 0};
}

const std::vector<int>& SmoothStructure::xi_class(int xi) const {
  Slot s = slot_of(xi);
  const Block& b = blocks_[s.block];
  return b.transitive ? b.runs[s.run - 1] : b.vertices;
}

SmoothStructure SmoothStructure::with_parameters(Rational c, Rational lambda) const {
  SmoothStructure out = *this;
  out.c_ = std::move(c);
  out.lambda_ = std::move(lambda);
  return out;
}

namespace {

std::vector<int> transitive_order(const Tournament& host, const std::vector<int>& vs) {
  std::vector<int> order = vs;
  const VertexSet set = make_set(host.size(), vs);
  std::vector<int> score(static_cast<std::size_t>(host.size()), 0);
  for (int v : vs) score[v] = static_cast<int>((host.out(v) & set).count());
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return score[a] > score[b]; });
  if (!transitive::is_transitive_order(host, order)) throw StructureError("block flagged transitive is not transitive");
  return order;
}

}  // namespace

SmoothStructure make_structure(const Tournament& host, const std::vector<std::vector<int>>& blocks,
                               const std::vector<int>& w, const std::vector<int>& delta, Rational c, Rational lambda) {
  if (blocks.size() != w.size()) throw StructureError("block count differs from |w|");
  std::vector<Block> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int v : blocks[i])
      if (v < 0 || v >= host.size()) throw DomainError("block vertex " + std::to_string(v) + " outside the host");
    Block b;
    b.transitive = w[i] == 1;
    if (!b.transitive) {
      b.vertices = blocks[i];
    } else {
      b.vertices = transitive_order(host, blocks[i]);
      int d = k < delta.size() ? delta[k] : 1;
      ++k;
      if (d < 1 || static_cast<int>(b.vertices.size()) < d)
        throw StructureError("transitive block " + std::to_string(i) + " is smaller than its run count " +
                             std::to_string(d));
      std::size_t m = b.vertices.size() / static_cast<std::size_t>(d);
      for (int r = 0; r < d; ++r)
        b.runs.emplace_back(b.vertices.begin() + static_cast<std::ptrdiff_t>(r * m),
                            b.vertices.begin() + static_cast<std::ptrdiff_t>((r + 1) * m));
    }
    out.push_back(std::move(b));
  }
  return SmoothStructure(std::move(out), std::move(c), std::move(lambda));
}

SmoothStructure make_structure(const Tournament& host, const std::vector<std::vector<int>>& blocks,
                               const hat::Signature& sig, Rational c, Rational lambda) {
  return make_structure(host, blocks, sig.s_c, sig.delta, std::move(c), std::move(lambda));
}

}  // namespace tourn::smooth
