#include "worked_example.hpp"
#include "oracles.hpp"
#include "tourn/core/density.hpp"
#include "tourn/core/errors.hpp"
#include "tourn/patterns.hpp"

#include <doctest.h>

#include <numeric>

using namespace tourn;
using namespace tourn::patterns;

namespace {

std::vector<int> perm_of(std::initializer_list<int> xs) { return xs; }

const Component* find_component(const PatternDecomposition& d, std::vector<int> vs) {
  for (const auto& c : d.components)
    if (c.vertices == vs) return &c;
  return nullptr;
}

bool recognized_by_some_ordering(const Tournament& t) {
  std::vector<int> p(static_cast<std::size_t>(t.size()));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (decompose(t, Ordering(p)).recognized()) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("worked example decomposes into two boats and two stars") {
  auto d = decompose(worked_example(), Ordering::identity(13));
  CHECK(d.flavor == Flavor::FlotillaGalaxy);
  CHECK(d.regular);
  REQUIRE(d.components.size() == 4);
  const auto* left = find_component(d, {2, 3, 4, 11});
  REQUIRE(left);
  CHECK(left->cls.kind == ComponentKind::LeftBoat);
  CHECK(*left->cls.boat == BoatRoles{2, 3, 4, 11});
  const auto* right = find_component(d, {0, 8, 9, 10});
  REQUIRE(right);
  CHECK(right->cls.kind == ComponentKind::RightBoat);
  CHECK(*right->cls.boat == BoatRoles{0, 8, 9, 10});
  const auto* q1 = find_component(d, {1, 5, 7});
  REQUIRE(q1);
  CHECK(is_star(q1->cls.kind));
  CHECK(q1->cls.star->center == 1);
  CHECK(q1->cls.star->leaves == std::vector<int>{5, 7});
  const auto* q2 = find_component(d, {6, 12});
  REQUIRE(q2);
  CHECK(is_star(q2->cls.kind));
  // Boat edge sets as listed: v3v5, v3v12, v4v12 and v1v10, v1v11, v9v11.
  auto g = backward_graph(worked_example(), Ordering::identity(13));
  CHECK(g.has_edge(2, 4));
  CHECK(g.has_edge(2, 11));
  CHECK(g.has_edge(3, 11));
  CHECK(g.has_edge(0, 9));
  CHECK(g.has_edge(0, 10));
  CHECK(g.has_edge(8, 10));
}

TEST_CASE("transitive ordering gives singletons only") {
  auto d = decompose(Tournament::transitive(5), Ordering::identity(5));
  CHECK(d.flavor == Flavor::Galaxy);
  CHECK(!d.regular);
  CHECK(d.components.size() == 5);
  for (const auto& c : d.components) CHECK(c.cls.kind == ComponentKind::Singleton);
  auto e = decompose(Tournament::transitive(0), Ordering::identity(0));
  CHECK(e.flavor == Flavor::Galaxy);
  CHECK(e.components.empty());
}

TEST_CASE("boat under cyclic ordering 1 is not recognised") {
  // (u,v,x,y): backward edges form the triangle {y,u},{y,x},{x,u}.
  auto d = decompose(path_boat(), Ordering(perm_of({1, 2, 0, 3})));
  CHECK(d.flavor == Flavor::NotRecognized);
  CHECK(!d.violation.empty());
}

TEST_CASE("component classification") {
  // x,u,v,y at positions 0..3, x,u,v consecutive.
  std::vector<int> vs{0, 1, 2, 3};
  std::vector<Arc> boat_edges{{1, 3}, {0, 3}, {0, 2}};
  auto opts = classify_component(vs, boat_edges, Ordering::identity(4));
  REQUIRE(!opts.empty());
  CHECK(is_boat(opts.front().kind));
  bool has_left = false;
  for (const auto& o : opts)
    if (o.kind == ComponentKind::LeftBoat) {
      has_left = true;
      CHECK(*o.boat == BoatRoles{0, 1, 2, 3});
    }
  CHECK(has_left);

  std::vector<int> pair{0, 1};
  std::vector<Arc> one{{0, 1}};
  auto two = classify_component(pair, one, Ordering::identity(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0].star->center != two[1].star->center);

  std::vector<Arc> path3{{0, 1}, {1, 2}, {2, 3}};
  auto other = classify_component(vs, path3, Ordering::identity(4));
  REQUIRE(other.size() == 1);
  CHECK(other[0].kind == ComponentKind::Other);
}

TEST_CASE("star interleaving is enforced") {
  // Star {0; 2, 4} and star {3; 5, 6}: the second centre sits between 2 and 4.
  TournamentBuilder b(7);
  b.orient(2, 0);
  b.orient(4, 0);
  b.orient(5, 3);
  b.orient(6, 3);
  auto d = decompose(std::move(b).build(), Ordering::identity(7));
  CHECK(d.flavor == Flavor::NotRecognized);
  CHECK(d.violation.find("between") != std::string::npos);
}

TEST_CASE("exactly three orderings of a boat give the listed patterns") {
  Tournament b = path_boat();
  using Set = std::vector<std::pair<int, int>>;
  const Set path{{2, 0}, {3, 0}, {3, 1}};    // (v,x),(y,x),(y,u)
  const Set cyc1{{0, 1}, {3, 0}, {3, 1}};    // (x,u),(y,x),(y,u)
  const Set cyc2{{2, 0}, {2, 3}, {3, 0}};    // (v,x),(v,y),(y,x)
  std::vector<int> p{0, 1, 2, 3};
  int hits = 0;
  do {
    auto back = oracle::backward(b, p);
    bool match = (back == path && p == perm_of({0, 1, 2, 3})) || (back == cyc1 && p == perm_of({1, 2, 0, 3})) ||
                 (back == cyc2 && p == perm_of({0, 3, 1, 2}));
    if (back == path || back == cyc1 || back == cyc2) {
      CHECK(match);
      ++hits;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(hits == 3);
}

TEST_CASE("alpha and beta") {
  Tournament b = path_boat();
  CHECK(apply_alpha(b, {0, 1, 2, 3}) == std::array<int, 4>{1, 2, 0, 3});
  CHECK(apply_beta(b, {0, 1, 2, 3}) == std::array<int, 4>{0, 3, 1, 2});
  CHECK(is_boat_path(b, {0, 1, 2, 3}));
  CHECK(!is_boat_path(b, {1, 2, 0, 3}));
  CHECK_THROWS_AS(apply_alpha(b, apply_alpha(b, {0, 1, 2, 3})), StructureError);
  auto o = apply_alpha(Ordering::identity(4), BoatRoles{0, 1, 2, 3});
  CHECK(o.perm() == std::vector<int>{1, 2, 0, 3});
  CHECK(apply_beta(Ordering::identity(4), BoatRoles{0, 1, 2, 3}).perm() == std::vector<int>{0, 3, 1, 2});
}

TEST_CASE("ordering search") {
  auto bo = find_flotilla_galaxy_ordering(path_boat());
  REQUIRE(bo);
  CHECK(decompose(path_boat(), *bo).recognized());
  // A single backward arc suffices here, which the search prefers to a boat.
  CHECK(backward_arcs(path_boat(), *bo).size() == 1);

  auto c3 = Tournament::from_pair_bits(3, "101");
  auto co = find_flotilla_galaxy_ordering(c3);
  REQUIRE(co);
  CHECK(backward_arcs(c3, *co).size() == 1);

  // The worked example under a scrambled labelling.
  std::vector<int> scramble{12, 3, 5, 0, 7, 1, 9, 2, 11, 4, 6, 10, 8};
  Tournament h = worked_example().relabeled(scramble);
  auto ho = find_flotilla_galaxy_ordering(h, 13);
  REQUIRE(ho);
  CHECK(decompose(h, *ho).recognized());
  CHECK_THROWS_AS(find_flotilla_galaxy_ordering(h), ResourceError);
}

TEST_CASE("property: search agrees with exhaustive decomposition on every 5-vertex tournament") {
  int unrecognisable = 0;
  for (std::uint32_t mask = 0; mask < 1024; ++mask) {
    std::string bits(10, '0');
    for (int i = 0; i < 10; ++i)
      if ((mask >> i) & 1u) bits[i] = '1';
    Tournament t = Tournament::from_pair_bits(5, bits);
    bool expect = recognized_by_some_ordering(t);
    auto found = find_flotilla_galaxy_ordering(t);
    REQUIRE(found.has_value() == expect);
    if (found) REQUIRE(decompose(t, *found).recognized());
    if (!expect) ++unrecognisable;
  }
  CHECK(unrecognisable > 0);
}

TEST_CASE("property: search is independent of the thread count") {
  oracle::Lcg rng(41);
  for (int k = 0; k < 15; ++k) {
    Tournament t = rng.tournament(7);
    auto a = find_flotilla_galaxy_ordering(t, 10, 1);
    auto b = find_flotilla_galaxy_ordering(t, 10, 3);
    CHECK(a == b);
  }
}

TEST_CASE("property: galaxies stay galaxies under complement and reversal") {
  oracle::Lcg rng(43);
  int seen = 0;
  for (int k = 0; k < 400; ++k) {
    const int n = 3 + rng.below(5);
    Tournament t = rng.tournament(n);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
    Ordering o(p);
    auto d = decompose(t, o);
    if (d.flavor != Flavor::Galaxy) continue;
    ++seen;
    CHECK(decompose(t.complement(), o.reversed()).flavor == Flavor::Galaxy);
    auto again = decompose(t, o);
    CHECK(again.components.size() == d.components.size());
    for (std::size_t i = 0; i < d.components.size(); ++i) {
      CHECK(again.components[i].vertices == d.components[i].vertices);
      CHECK(again.components[i].cls.kind == d.components[i].cls.kind);
    }
  }
  CHECK(seen > 0);
}
