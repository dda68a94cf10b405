#include "tourn/core/errors.hpp"
#include "tourn/smooth.hpp"

namespace tourn::smooth {

VertexSet conforming(const Tournament& t, const SmoothStructure& chi, int j, int x) {
  auto sx = chi.locate(x);
  if (!sx) throw DomainError("vertex " + std::to_string(x) + " is not in the structure");
  if (sx->block == j) throw DomainError("vertex " + std::to_string(x) + " lies in the restricted block");
  VertexSet sj = make_set(t.size(), chi.blocks().at(static_cast<std::size_t>(j)).vertices);
  return sj & (j > sx->block ? t.out(x) : t.in(x));
}

Restriction restrict_block(const Tournament& t, const SmoothStructure& chi, int j, std::span<const int> a,
                           std::span<const int> s_star) {
  if (j < 0 || j >= chi.size()) throw DomainError("block index out of range");
  const auto& block = chi.blocks()[static_cast<std::size_t>(j)].vertices;
  for (int v : s_star) {
    auto s = chi.locate(v);
    if (!s || s->block != j) throw DomainError("S_j* is not a subset of S_j");
  }
  VertexSet keep = make_set(t.size(), s_star);
  for (int x : a) keep &= conforming(t, chi, j, x);

  Restriction r;
  r.k = static_cast<int>(a.size());
  for (int v : s_star)
    if (keep.test(static_cast<std::size_t>(v))) r.vertices.push_back(v);
  if (s_star.empty() || block.empty()) {
    r.gamma = 0;
    r.bound = 0;
    return r;
  }
  r.gamma = Rational(static_cast<long long>(s_star.size()), static_cast<long long>(block.size()));
  r.bound = (1 - r.k * chi.lambda() / r.gamma) * static_cast<long long>(s_star.size());
  if (Rational(static_cast<long long>(r.vertices.size())) < r.bound)
    throw StructureError("neighbourhood restriction kept " + std::to_string(r.vertices.size()) + " < " +
                         to_string(r.bound) + " vertices; the structure is not smooth at lambda " +
                         to_string(chi.lambda()));
  return r;
}

}  // namespace tourn::smooth
