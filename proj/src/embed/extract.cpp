#include "tourn/core/errors.hpp"
#include "tourn/embed.hpp"

#include <algorithm>
#include <set>

namespace tourn::embed {

const char* to_string(DropCase c) {
  switch (c) {
    case DropCase::DropV: return "drop-v";
    case DropCase::DropU: return "drop-u";
    case DropCase::DropZ: return "drop-z";
  }
  return "?";
}

const char* to_string(BoatOrdering o) {
  switch (o) {
    case BoatOrdering::Path: return "path";
    case BoatOrdering::Cyclic1: return "cyclic-1";
    case BoatOrdering::Cyclic2: return "cyclic-2";
    case BoatOrdering::None: return "none";
  }
  return "?";
}

BoatOrdering classify_boat_ordering(const Tournament& t, const std::array<int, 4>& q) {
  std::set<std::pair<int, int>> back;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j)
      if (t.arc(q[i], q[j])) back.emplace(i, j);
  using S = std::set<std::pair<int, int>>;
  if (back == S{{3, 1}, {3, 0}, {2, 0}}) return BoatOrdering::Path;
  if (back == S{{3, 0}, {3, 2}, {2, 0}}) return BoatOrdering::Cyclic1;
  if (back == S{{3, 1}, {1, 0}, {3, 0}}) return BoatOrdering::Cyclic2;
  return BoatOrdering::None;
}

Extraction extract_copy(const Tournament& t, const Embedding& emb, const hat::HatDigraph& hd) {
  if (static_cast<int>(emb.f.size()) != hd.size() || emb.boats.size() != hd.boats.size())
    throw DomainError("extract_copy: embedding does not match the hat digraph");
  Extraction out;
  std::vector<char> dropped(static_cast<std::size_t>(hd.size()), 0);
  for (std::size_t k = 0; k < hd.boats.size(); ++k) {
    const auto& b = emb.boats[k];
    const auto& roles = hd.boats[k];
    DropCase c;
    int gone;
    if (t.arc(b.u, b.x)) {
      c = DropCase::DropV;
      gone = roles.roles.v;
    } else if (t.arc(b.y, b.v)) {
      c = DropCase::DropU;
      gone = roles.roles.u;
    } else {
      c = DropCase::DropZ;
      gone = roles.z;
    }
    dropped[gone] = 1;
    out.cases.push_back(c);

    std::vector<int> four;
    for (int a : {roles.roles.x, roles.z, roles.roles.u, roles.roles.v, roles.roles.y})
      if (a != gone) four.push_back(a);
    std::sort(four.begin(), four.end(), [&](int a, int b2) { return hd.order.before(a, b2); });
    out.orderings.push_back(
        classify_boat_ordering(t, {emb.f[four[0]], emb.f[four[1]], emb.f[four[2]], emb.f[four[3]]}));
  }
  for (int p = 0; p < hd.size(); ++p) {
    int a = hd.order.at(p);
    if (!dropped[a]) out.vertices.push_back(emb.f[a]);
  }
  return out;
}

std::optional<Witness> certify(const Tournament& t, const Extraction& x, const Tournament& h) {
  if (static_cast<int>(x.vertices.size()) != h.size()) return std::nullopt;
  auto local = contains(t.induced(x.vertices), h);
  if (!local) return std::nullopt;
  Witness w;
  for (int v : *local) w.push_back(x.vertices[v]);
  return w;
}

std::array<int, 2> super_removal(const Tournament& host, const SuperBoatImage& b) {
  if (host.arc(b.u, b.x)) return {b.v, b.w};
  if (host.arc(b.y, b.v)) return {b.u, b.w};
  return {b.z, b.t};
}

Digraph super_gadget() {
  // x z u w v t y
  enum { X, Z, U, W, V, T, Y };
  Digraph g(7);
  const std::set<std::pair<int, int>> back{{Y, U}, {Y, X}, {V, X}, {T, Z}};
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      if ((a == X && b == U) || (a == V && b == Y)) {
        g.mark_absent(a, b);
      } else if (back.count({b, a})) {
        g.add_arc(b, a);
      } else {
        g.add_arc(a, b);
      }
    }
  return g;
}

}  // namespace tourn::embed
