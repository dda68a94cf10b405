#include "tourn/core/tournament.hpp"

#include "tourn/core/errors.hpp"

namespace tourn {

Tournament::Tournament(int n) : n_(n) {
  if (n < 0) throw DomainError("negative vertex count");
  out_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  in_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

Tournament Tournament::transitive(int n) {
  Tournament t(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      t.out_[i].set(static_cast<std::size_t>(j));
      t.in_[j].set(static_cast<std::size_t>(i));
    }
  return t;
}

Tournament Tournament::from_pair_bits(int n, std::string_view bits) {
  if (n < 0) throw FormatError("negative vertex count");
  if (bits.size() != pair_count(n))
    throw FormatError("pair-bit string has length " + std::to_string(bits.size()) + ", expected " +
                      std::to_string(pair_count(n)));
  TournamentBuilder b(n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) {
      char c = bits[k];
      if (c == '0')
        b.orient(j, i);
      else if (c != '1')
        throw FormatError("pair-bit string may only contain '0' and '1'");
    }
  return std::move(b).build();
}

Tournament Tournament::from_pair_bits(int n, std::span<const bool> bits) {
  if (n < 0) throw FormatError("negative vertex count");
  if (bits.size() != pair_count(n))
    throw FormatError("pair-bit sequence has length " + std::to_string(bits.size()) + ", expected " +
                      std::to_string(pair_count(n)));
  TournamentBuilder b(n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (!bits[k]) b.orient(j, i);
  return std::move(b).build();
}

std::string Tournament::pair_bits() const {
  std::string s;
  s.reserve(pair_count(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) s.push_back(arc(i, j) ? '1' : '0');
  return s;
}

Tournament Tournament::complement() const {
  Tournament t(n_);
  t.out_ = in_;
  t.in_ = out_;
  return t;
}

Tournament Tournament::induced(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  VertexSet seen(static_cast<std::size_t>(n_));
  for (int v : vertices) {
    if (v < 0 || v >= n_) throw DomainError("induced: vertex " + std::to_string(v) + " out of range");
    if (seen.test(static_cast<std::size_t>(v))) throw DomainError("induced: repeated vertex " + std::to_string(v));
    seen.set(static_cast<std::size_t>(v));
  }
  Tournament t(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (arc(vertices[i], vertices[j])) {
        t.out_[i].set(static_cast<std::size_t>(j));
        t.in_[j].set(static_cast<std::size_t>(i));
      } else {
        t.out_[j].set(static_cast<std::size_t>(i));
        t.in_[i].set(static_cast<std::size_t>(j));
      }
    }
  return t;
}

bool Tournament::is_transitive() const {
  // Transitive iff the score sequence is exactly {0, 1, ..., n-1}.
  std::vector<char> hit(static_cast<std::size_t>(n_), 0);
  for (int v = 0; v < n_; ++v) {
    int d = out_degree(v);
    if (hit[d]) return false;
    hit[d] = 1;
  }
  return true;
}

void TournamentBuilder::orient(int from, int to) {
  if (from == to) throw DomainError("loops are not allowed in a tournament");
  auto f = static_cast<std::size_t>(from);
  auto t = static_cast<std::size_t>(to);
  t_.out_[to].reset(f);
  t_.in_[from].reset(t);
  t_.out_[from].set(t);
  t_.in_[to].set(f);
}

}  // namespace tourn
