#pragma once

#include <span>
#include <vector>

namespace tourn {

/// A linear order of vertices 0..n-1: at(i) is the vertex in position i
/// (0-based), position(v) the inverse.
class Ordering {
 public:
  Ordering() = default;

  /// Throws DomainError unless `perm` is a permutation of 0..n-1.
  explicit Ordering(std::vector<int> perm);

  static Ordering identity(int n);

  int size() const { return static_cast<int>(perm_.size()); }
  int at(int position) const { return perm_[position]; }
  int position(int vertex) const { return pos_[vertex]; }
  bool before(int a, int b) const { return pos_[a] < pos_[b]; }
  const std::vector<int>& perm() const { return perm_; }

  Ordering reversed() const;

  friend bool operator==(const Ordering&, const Ordering&) = default;
  friend auto operator<=>(const Ordering& a, const Ordering& b) { return a.perm_ <=> b.perm_; }

 private:
  std::vector<int> perm_;
  std::vector<int> pos_;
};

}  // namespace tourn
