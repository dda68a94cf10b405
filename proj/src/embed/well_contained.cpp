#include "tourn/core/errors.hpp"
#include "tourn/embed.hpp"

#include <sstream>

namespace tourn::embed {

Embedding make_embedding(const hat::HatDigraph& hd, std::vector<int> f) {
  if (static_cast<int>(f.size()) != hd.size()) throw DomainError("embedding: map size differs from the hat digraph");
  Embedding e;
  for (const auto& b : hd.boats)
    e.boats.push_back({f[b.roles.x], f[b.roles.u], f[b.roles.v], f[b.roles.y], f[b.z]});
  for (const auto& s : hd.stars) {
    StarImage img{f[s.roles.center], {}};
    for (int leaf : s.roles.leaves) img.leaves.push_back(f[leaf]);
    e.stars.push_back(std::move(img));
  }
  e.f = std::move(f);
  return e;
}

WellContained is_well_contained(const Tournament& t, const hat::HatDigraph& hd, const smooth::SmoothStructure& chi,
                                const std::vector<int>& f) {
  const int n = hd.size();
  if (static_cast<int>(f.size()) != n) throw DomainError("embedding: map size differs from the hat digraph");
  for (int a = 0; a < n; ++a) {
    if (f[a] < 0 || f[a] >= t.size()) throw DomainError("embedding: image outside the host");
    auto slot = chi.locate(f[a]);
    if (!slot || (chi.blocks()[slot->block].transitive && slot->run < 1))
      throw DomainError("embedding: image outside the structure");
  }
  auto fail = [](const std::string& msg) { return WellContained{false, msg}; };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (f[a] == f[b]) {
        std::ostringstream os;
        os << "not injective: " << a << " and " << b << " both map to " << f[a];
        return fail(os.str());
      }
  for (auto [a, b] : hd.graph.arcs())
    if (!t.arc(f[a], f[b])) {
      std::ostringstream os;
      os << "arc " << a << "->" << b << " maps to " << f[b] << "->" << f[a];
      return fail(os.str());
    }
  for (int p = 0; p < n; ++p) {
    int v = hd.order.at(p);
    if (chi.xi(f[v]) != p + 1) {
      std::ostringstream os;
      os << "position law: vertex " << v << " at position " << p + 1 << " maps to position " << chi.xi(f[v]);
      return fail(os.str());
    }
  }
  return {};
}

}  // namespace tourn::embed
