#include "worked_example.hpp"
#include "oracles.hpp"
#include "tourn/core/errors.hpp"
#include "tourn/hat.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace tourn;
using namespace tourn::hat;

namespace {

// Restriction of a super construction to H's own labels 0..h-1, in order.
bool restricted_recognized(const Super& s, int h) {
  std::vector<int> keep;
  for (int v : s.order.perm())
    if (v < h) keep.push_back(v);
  std::vector<int> sorted(keep);
  std::sort(sorted.begin(), sorted.end());
  Tournament sub = s.t.induced(sorted);  // labels stay 0..h-1
  return patterns::decompose(sub, Ordering(keep)).recognized();
}

using ArcSet = std::set<std::pair<int, int>>;

ArcSet arc_set(const Digraph& g, const std::vector<int>& names) {
  ArcSet out;
  for (auto [a, b] : g.arcs()) out.insert({names[a], names[b]});
  return out;
}

ArcSet pair_set(const std::vector<Arc>& ps) {
  ArcSet out;
  for (auto [a, b] : ps) out.insert({std::min(a, b), std::max(a, b)});
  return out;
}

std::vector<int> identity_names(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Orients the absent pairs of g by the bits of `mask`, in absent_pairs() order.
Tournament complete(const Digraph& g, std::uint32_t mask) {
  TournamentBuilder b(g.size());
  std::set<std::pair<int, int>> done;
  for (auto [a, c] : g.arcs()) {
    b.orient(a, c);
    done.insert({std::min(a, c), std::max(a, c)});
  }
  int k = 0;
  for (auto [a, c] : g.absent_pairs()) {
    if ((mask >> k++) & 1u) b.orient(c, a); else b.orient(a, c);
    done.insert({std::min(a, c), std::max(a, c)});
  }
  REQUIRE(done.size() == static_cast<std::size_t>(g.size() * (g.size() - 1) / 2));
  return std::move(b).build();
}

// Survivors of the boat after the drop rule, in hat order.
std::array<int, 4> survivors(const Tournament& t, const HatBoat& b, const Ordering& order) {
  const auto& r = b.roles;
  std::vector<int> keep{r.x, r.u, r.v, r.y, b.z};
  int drop = t.arc(r.u, r.x) ? r.v : t.arc(r.y, r.v) ? r.u : b.z;
  keep.erase(std::find(keep.begin(), keep.end(), drop));
  std::sort(keep.begin(), keep.end(), [&](int a, int c) { return order.before(a, c); });
  return {keep[0], keep[1], keep[2], keep[3]};
}

// Reads off x,u,v,y from four vertices in order a,b,c,d by which of the three
// boat orderings they realise.
std::optional<std::array<int, 4>> boat_roles_of(const Tournament& t, std::array<int, 4> q) {
  std::vector<int> p(q.begin(), q.end());
  auto back = oracle::backward(t, p);
  auto as = [&](std::initializer_list<std::pair<int, int>> pos) {
    std::vector<std::pair<int, int>> e;
    for (auto [i, j] : pos) e.emplace_back(q[i], q[j]);
    std::sort(e.begin(), e.end());
    return e;
  };
  if (back == as({{3, 1}, {3, 0}, {2, 0}})) return std::array<int, 4>{q[0], q[1], q[2], q[3]};
  if (back == as({{3, 0}, {3, 2}, {2, 0}})) return std::array<int, 4>{q[2], q[0], q[1], q[3]};
  if (back == as({{3, 1}, {1, 0}, {3, 0}})) return std::array<int, 4>{q[0], q[2], q[3], q[1]};
  return std::nullopt;
}

}  // namespace

TEST_CASE("hatted worked example: first prefix matches the listed arc set") {
  // v_k is label k - 1 and z1 is label 13.
  const int z1 = 13;
  auto v = [](int k) { return k - 1; };
  const ArcSet expect{{v(2), z1},   {v(3), z1},    {z1, v(4)},    {z1, v(5)},   {z1, v(12)},  {z1, v(6)},
                      {z1, v(8)},   {v(4), v(5)},  {v(5), v(3)},  {v(12), v(3)}, {v(12), v(4)}, {v(6), v(2)},
                      {v(8), v(2)}, {v(6), v(8)},  {v(2), v(3)},  {v(2), v(4)}, {v(2), v(5)},  {v(2), v(12)},
                      {v(3), v(6)}, {v(4), v(6)},  {v(5), v(6)},  {v(6), v(12)}, {v(3), v(8)}, {v(4), v(8)},
                      {v(5), v(8)}, {v(8), v(12)}};
  REQUIRE(expect.size() == 26);
  auto p = prefix(worked_example(), Ordering::identity(13), 1);
  CHECK(arc_set(p.hat, p.hat_vertices) == expect);
  CHECK(pair_set([&] {
          std::vector<Arc> a;
          for (auto [x, y] : p.hat.absent_pairs()) a.emplace_back(p.hat_vertices[x], p.hat_vertices[y]);
          return a;
        }()) == ArcSet{{v(3), v(4)}, {v(5), v(12)}});
  std::vector<int> hv = p.vertices;
  std::sort(hv.begin(), hv.end());
  CHECK(hv == std::vector<int>{v(2), v(3), v(4), v(5), v(6), v(8), v(12)});
}

TEST_CASE("hatted worked example: absent pairs and z placement") {
  auto hd = hat::hat(worked_example(), Ordering::identity(13));
  CHECK(hd.size() == 15);
  CHECK(pair_set(hd.graph.absent_pairs()) == ArcSet{{2, 3}, {4, 11}, {0, 8}, {9, 10}});
  // Every other pair is oriented and agrees with H on H's labels.
  for (int a = 0; a < 13; ++a)
    for (int b = 0; b < 13; ++b)
      if (a != b && !hd.graph.is_absent(a, b)) CHECK(hd.graph.has_arc(a, b) == worked_example().arc(a, b));
  REQUIRE(hd.boats.size() == 2);
  CHECK(hd.boats[0].left);
  CHECK(hd.boats[0].z == 13);
  CHECK(hd.order.position(13) == hd.order.position(2) + 1);  // just after v3
  CHECK(!hd.boats[1].left);
  CHECK(hd.boats[1].z == 14);
  CHECK(hd.order.position(14) + 1 == hd.order.position(10));  // just before v11
  // Right boat v1, v9, v10, v11 with z2 follows the right-boat arc list.
  const int z2 = 14;
  ArcSet right;
  std::vector<int> rb{0, 8, 9, z2, 10};
  for (int a : rb)
    for (int b : rb)
      if (a != b && hd.graph.has_arc(a, b)) right.insert({a, b});
  CHECK(right == ArcSet{{0, z2}, {9, z2}, {8, z2}, {z2, 10}, {10, 0}, {10, 8}, {9, 0}, {8, 9}});
  // z vertices are singletons of the backward graph, whose edges are unchanged.
  for (auto [a, b] : hd.graph.arcs())
    if (hd.order.before(b, a)) {
      CHECK(a < 13);
      CHECK(b < 13);
    }
}

TEST_CASE("single left boat gets the five-vertex hat") {
  auto hd = hat::hat(path_boat(), Ordering::identity(4));
  REQUIRE(hd.boats.size() == 1);
  CHECK(hd.boats[0].left);
  const int x = 0, u = 1, v = 2, y = 3, z = 4;
  CHECK(hd.order.perm() == std::vector<int>{x, z, u, v, y});
  CHECK(arc_set(hd.graph, identity_names(5)) ==
        ArcSet{{x, z}, {z, u}, {z, v}, {z, y}, {y, x}, {y, u}, {v, x}, {u, v}});
  CHECK(to_text(hd).rfind("5\narcs\n", 0) == 0);
}

TEST_CASE("property: every completion minus the dropped interior is H again") {
  SUBCASE("single boat, naive containment") {
    auto hd = hat::hat(path_boat(), Ordering::identity(4));
    REQUIRE(hd.graph.absent_pairs().size() == 2);
    for (std::uint32_t m = 0; m < 4; ++m) {
      Tournament t = complete(hd.graph, m);
      auto q = survivors(t, hd.boats[0], hd.order);
      std::vector<int> keep(q.begin(), q.end());
      CHECK(oracle::contains(t.induced(keep), path_boat()).has_value());
    }
  }
  SUBCASE("boat with its star, naive containment") {
    auto p = prefix(worked_example(), Ordering::identity(13), 1);
    for (std::uint32_t m = 0; m < 4; ++m) {
      Tournament t = complete(p.hat, m);
      // Translate to full hat labels to reuse the boat roles.
      auto hd = hat::hat(worked_example(), Ordering::identity(13));
      std::vector<int> local(16, -1);
      for (std::size_t i = 0; i < p.hat_vertices.size(); ++i) local[p.hat_vertices[i]] = static_cast<int>(i);
      const auto& b = hd.boats[0];
      int x = local[b.roles.x], u = local[b.roles.u], vv = local[b.roles.v], y = local[b.roles.y], z = local[b.z];
      int drop = t.arc(u, x) ? vv : t.arc(y, vv) ? u : z;
      std::vector<int> keep;
      for (int i = 0; i < t.size(); ++i)
        if (i != drop) keep.push_back(i);
      CHECK(oracle::contains(t.induced(keep), p.h).has_value());
    }
  }
  SUBCASE("worked example, explicit isomorphism") {
    auto hd = hat::hat(worked_example(), Ordering::identity(13));
    const Tournament h = worked_example();
    for (std::uint32_t m = 0; m < 16; ++m) {
      Tournament t = complete(hd.graph, m);
      std::vector<int> f(13);
      for (int i = 0; i < 13; ++i) f[i] = i;
      for (const auto& b : hd.boats) {
        auto roles = boat_roles_of(t, survivors(t, b, hd.order));
        REQUIRE(roles);
        f[b.roles.x] = (*roles)[0];
        f[b.roles.u] = (*roles)[1];
        f[b.roles.v] = (*roles)[2];
        f[b.roles.y] = (*roles)[3];
      }
      bool iso = true;
      for (int a = 0; a < 13; ++a)
        for (int c = 0; c < 13; ++c)
          if (a != c && h.arc(a, c) != t.arc(f[a], f[c])) iso = false;
      CHECK(iso);
    }
  }
}

TEST_CASE("regularize") {
  auto same = regularize(worked_example(), Ordering::identity(13));
  CHECK(same.added.empty());
  CHECK(same.t == worked_example());

  auto one = regularize(Tournament::transitive(1), Ordering::identity(1));
  CHECK(one.t.size() == 2);
  CHECK(one.t.arc(1, 0));

  auto c3 = Tournament::from_pair_bits(3, "101");
  auto r = regularize(c3, Ordering::identity(3));
  CHECK(r.t.size() == 4);
  CHECK(r.added == std::vector<int>{3});
  CHECK(oracle::backward(r.t, r.order.perm()) == std::vector<std::pair<int, int>>{{2, 0}, {3, 1}});
  auto d = patterns::decompose(r.t, r.order);
  CHECK(d.regular);
  CHECK(d.components.size() == 2);
  CHECK(r.t.induced(std::vector<int>{0, 1, 2}) == c3);
}

TEST_CASE("theta set") {
  auto one = theta_set(Tournament::transitive(3), Ordering::identity(3));
  CHECK(one.size() == 1);
  auto boat = theta_set(path_boat(), Ordering::identity(4));
  std::set<std::vector<int>> got;
  for (const auto& o : boat) got.insert(o.perm());
  CHECK(got == std::set<std::vector<int>>{{0, 1, 2, 3}, {1, 2, 0, 3}});
  auto four = theta_set(worked_example(), Ordering::identity(13));
  std::set<std::vector<int>> distinct;
  for (const auto& o : four) distinct.insert(o.perm());
  CHECK(four.size() == 4);
  CHECK(distinct.size() == 4);
}

TEST_CASE("prefixes") {
  CHECK(prefix(worked_example(), Ordering::identity(13), 0).vertices.empty());
  CHECK(prefix(worked_example(), Ordering::identity(13), 0).hat.size() == 0);
  auto full = prefix(worked_example(), Ordering::identity(13), 2);
  CHECK(full.vertices.size() == 13);
  CHECK(full.hat.size() == 15);
  CHECK_THROWS_AS(prefix(worked_example(), Ordering::identity(13), 3), DomainError);
  CHECK_THROWS_AS(prefix(worked_example(), Ordering::identity(13), -1), DomainError);
}

TEST_CASE("signatures") {
  auto one = signature(hat::hat(path_boat(), Ordering::identity(4)));
  CHECK(one.s == std::vector<int>{0, 1, 1, 1, 0});
  CHECK(one.s_c == std::vector<int>{0, 1, 0});
  CHECK(one.delta == std::vector<int>{3});
  auto two = compress({0, 1, 1, 1, 0, 1, 1, 1, 0});
  CHECK(two.s_c == std::vector<int>{0, 1, 0, 1, 0});
  CHECK(two.delta == std::vector<int>{3, 3});
  auto six = compress({0, 1, 1, 1, 1, 1, 1, 0});
  CHECK(six.s_c == std::vector<int>{0, 1, 0});
  CHECK(six.delta == std::vector<int>{6});
  CHECK(compress({}).s_c.empty());

  auto hd = hat::hat(worked_example(), Ordering::identity(13));
  auto sig = signature(hd);
  int ones = static_cast<int>(std::count(sig.s.begin(), sig.s.end(), 1));
  int leaves = 0;
  for (const auto& st : hd.stars) leaves += static_cast<int>(st.roles.leaves.size());
  CHECK(ones == 3 * 2 + leaves);
  int dsum = 0;
  for (int d : sig.delta) dsum += d;
  CHECK(dsum == ones);
  for (std::size_t i = 0; i + 1 < sig.s_c.size(); ++i) CHECK(!(sig.s_c[i] == 1 && sig.s_c[i + 1] == 1));
  CHECK(sig.slot.size() == 15);
  CHECK_THROWS_AS(signature(hd, Mode::LeftFlotilla), StructureError);
  CHECK_THROWS_AS(signature(hd, Mode::Flotilla), StructureError);
  CHECK(signature(hat::hat(path_boat(), Ordering::identity(4)), Mode::LeftFlotilla).delta == std::vector<int>{3});
}

TEST_CASE("super constructions") {
  auto plus = super_plus(path_boat(), Ordering::identity(4));
  CHECK(plus.t.size() == 5);
  CHECK(plus.w == std::vector<int>{4});
  CHECK(plus.order.perm() == std::vector<int>{0, 1, 4, 2, 3});
  CHECK(oracle::backward(plus.t, plus.order.perm()) == oracle::backward(path_boat(), {0, 1, 2, 3}));

  auto same = super_plus(Tournament::transitive(3), Ordering::identity(3));
  CHECK(same.t == Tournament::transitive(3));

  auto big = super_plus(worked_example(), Ordering::identity(13));
  CHECK(big.t.size() == 15);
  CHECK(oracle::backward(big.t, big.order.perm()) == oracle::backward(worked_example(), Ordering::identity(13).perm()));
  CHECK(restricted_recognized(big, 13));

  auto pp = super_plus_plus(path_boat(), Ordering::identity(4));
  CHECK(pp.t.size() == 6);
  CHECK(pp.order.perm() == std::vector<int>{0, 1, 4, 2, 5, 3});
  auto back = oracle::backward(path_boat(), {0, 1, 2, 3});
  back.emplace_back(5, 4);
  std::sort(back.begin(), back.end());
  CHECK(oracle::backward(pp.t, pp.order.perm()) == back);

  // The right boat gets s just before its left interior and the arc (w, s).
  auto fig = super_plus_plus(worked_example(), Ordering::identity(13));
  CHECK(fig.t.size() == 17);
  REQUIRE(fig.w.size() == 2);
  REQUIRE(fig.s.size() == 2);
  const int w2 = fig.w[1], s2 = fig.s[1];
  CHECK(fig.order.position(s2) + 1 == fig.order.position(8));
  CHECK(fig.t.arc(w2, s2));
  CHECK(fig.order.before(s2, w2));
  CHECK(restricted_recognized(fig, 13));
}
