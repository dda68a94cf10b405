#include "tourn/core/errors.hpp"
#include "tourn/smooth.hpp"

#include <algorithm>

namespace tourn::smooth {

SmoothStructure trim_divisible(const Tournament& t, const SmoothStructure& chi, int m) {
  if (m < 1) throw DomainError("trim_divisible: modulus must be positive");
  std::vector<Block> out;
  for (std::size_t i = 0; i < chi.blocks().size(); ++i) {
    const Block& b = chi.blocks()[i];
    const std::size_t size = b.vertices.size();
    if (size < static_cast<std::size_t>(2 * m))
      throw DomainError("trim_divisible: block " + std::to_string(i + 1) + " has " + std::to_string(size) +
                        " < 2m vertices");
    const std::size_t keep = size / static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
    Block nb;
    nb.transitive = b.transitive;
    if (b.transitive) {
      nb.vertices.assign(b.vertices.begin(), b.vertices.begin() + static_cast<std::ptrdiff_t>(keep));
      const std::size_t d = b.runs.size();
      const std::size_t len = d ? keep / d : 0;
      for (std::size_t r = 0; r < d; ++r)
        nb.runs.emplace_back(nb.vertices.begin() + static_cast<std::ptrdiff_t>(r * len),
                             nb.vertices.begin() + static_cast<std::ptrdiff_t>((r + 1) * len));
    } else {
      nb.vertices = b.vertices;
      std::sort(nb.vertices.begin(), nb.vertices.end());
      nb.vertices.resize(keep);
    }
    out.push_back(std::move(nb));
  }
  (void)t;
  return SmoothStructure(std::move(out), chi.c() / 2, chi.lambda() * 2);
}

}  // namespace tourn::smooth
