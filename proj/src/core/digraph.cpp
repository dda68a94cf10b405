#include "tourn/core/digraph.hpp"

#include "tourn/core/errors.hpp"

#include <string>

namespace tourn {

Digraph::Digraph(int n) : n_(n) {
  if (n < 0) throw DomainError("negative vertex count");
  out_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  absent_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
}

void Digraph::add_arc(int from, int to) {
  if (from == to) throw DomainError("loops are not allowed in a digraph");
  if (has_arc(to, from) || is_absent(from, to))
    throw DomainError("pair (" + std::to_string(from) + "," + std::to_string(to) + ") already decided");
  out_[from].set(static_cast<std::size_t>(to));
}

void Digraph::mark_absent(int a, int b) {
  if (a == b) throw DomainError("loops are not allowed in a digraph");
  if (is_oriented(a, b))
    throw DomainError("pair {" + std::to_string(a) + "," + std::to_string(b) + "} already carries an arc");
  absent_[a].set(static_cast<std::size_t>(b));
  absent_[b].set(static_cast<std::size_t>(a));
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < n_; ++u) for_each_member(out_[u], [&](int v) { out.emplace_back(u, v); });
  return out;
}

std::vector<Arc> Digraph::absent_pairs() const {
  std::vector<Arc> out;
  for (int u = 0; u < n_; ++u)
    for_each_member(absent_[u], [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

std::size_t Digraph::arc_count() const {
  std::size_t c = 0;
  for (const auto& row : out_) c += row.count();
  return c;
}

Digraph Digraph::induced(const std::vector<int>& vertices) const {
  const int k = static_cast<int>(vertices.size());
  Digraph d(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      if (has_arc(vertices[i], vertices[j])) d.out_[i].set(static_cast<std::size_t>(j));
      if (is_absent(vertices[i], vertices[j])) d.absent_[i].set(static_cast<std::size_t>(j));
    }
  return d;
}

}  // namespace tourn
