#include "worked_example.hpp"
#include "oracles.hpp"
#include "tourn/core/errors.hpp"
#include "tourn/hat.hpp"
#include "tourn/smooth.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace tourn;
using namespace tourn::smooth;

namespace {

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

// Largest 1 - d over every vertex against every later/earlier block.
Rational naive_lambda(const Tournament& t, const SmoothStructure& chi) {
  Rational worst = 0;
  const auto& bs = chi.blocks();
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      for (int v : bs[i].vertices) {
        int hits = 0;
        for (int u : bs[j].vertices) hits += t.arc(v, u);
        worst = std::max(worst, 1 - Rational(hits, static_cast<long long>(bs[j].vertices.size())));
      }
      for (int v : bs[j].vertices) {
        int hits = 0;
        for (int u : bs[i].vertices) hits += t.arc(u, v);
        worst = std::max(worst, 1 - Rational(hits, static_cast<long long>(bs[i].vertices.size())));
      }
    }
  return worst;
}

// Position index straight from the definition.
int naive_xi(const SmoothStructure& chi, int v) {
  int before = 0;
  for (int b = 0; b < chi.size(); ++b) {
    const auto& blk = chi.blocks()[b];
    auto it = std::find(blk.vertices.begin(), blk.vertices.end(), v);
    if (it == blk.vertices.end()) {
      before += blk.transitive ? static_cast<int>(blk.runs.size()) : 1;
      continue;
    }
    if (!blk.transitive) return before + 1;
    for (std::size_t r = 0; r < blk.runs.size(); ++r)
      if (std::count(blk.runs[r].begin(), blk.runs[r].end(), v)) return before + static_cast<int>(r) + 1;
    return -1;
  }
  return -1;
}

hat::Signature boat_signature() { return hat::signature(hat::hat(path_boat(), Ordering::identity(4))); }

}  // namespace

TEST_CASE("position index") {
  Tournament t = Tournament::transitive(20);
  auto chi = make_structure(t, {{0, 1}, range(2, 8), {8, 9}}, {0, 1, 0}, {3}, Rational(1, 10), 0);
  CHECK(chi.xi(0) == 1);
  CHECK(chi.xi(4) == 3);  // second run of the middle block
  CHECK(chi.xi(8) == 5);
  CHECK(chi.positions() == 5);
  CHECK_THROWS_AS(chi.xi(15), DomainError);

  auto chi2 = make_structure(t, {{0}, range(1, 7), {7}, range(8, 14), {14}}, {0, 1, 0, 1, 0}, {3, 3}, Rational(1, 20), 0);
  CHECK(chi2.xi(8) == 6);  // first run of the fourth block
  CHECK(chi2.xi_class(6) == std::vector<int>{8, 9});
  CHECK(chi2.slot_of(6).block == 3);
  CHECK(chi2.slot_of(6).run == 1);
  for (int v = 0; v < 15; ++v) CHECK(chi2.xi(v) == naive_xi(chi2, v));
}

TEST_CASE("property: positions are shared exactly within a run or linear block") {
  auto fx = blowup_fixture(hat::signature(hat::hat(worked_example(), Ordering::identity(13))), 9);
  const auto& chi = fx.chi;
  std::vector<int> all;
  for (const auto& b : chi.blocks()) all.insert(all.end(), b.vertices.begin(), b.vertices.end());
  for (int a : all)
    for (int b : all) {
      auto sa = *chi.locate(a), sb = *chi.locate(b);
      bool same_place = sa.block == sb.block && sa.run == sb.run;
      CHECK((chi.xi(a) == chi.xi(b)) == same_place);
      CHECK(chi.xi(a) == naive_xi(chi, a));
    }
}

TEST_CASE("verification") {
  Tournament t = Tournament::transitive(10);
  auto chi = make_structure(t, {range(0, 5), range(5, 10)}, {0, 0}, {}, Rational(1, 2), 0);
  CHECK(verify_smooth(t, chi).pass);

  TournamentBuilder b(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      if (i == 0 && j == 5) b.orient(5, 0);
  Tournament flipped = std::move(b).build();
  auto rep = verify_smooth(flipped, chi, Rational(1, 2), Rational(1, 10), {0, 0});
  CHECK(!rep.pass);
  bool saw_out = false;
  for (const auto& v : rep.violations)
    if (v.kind == Violation::Kind::OutDensity && v.vertex == 0) {
      saw_out = true;
      CHECK(v.density.value() == Rational(4, 5));
      CHECK(v.block == 0);
      CHECK(v.other == 1);
    }
  CHECK(saw_out);
  CHECK(verify_smooth(flipped, chi, Rational(1, 2), Rational(1, 5), {0, 0}).pass);  // boundary is inclusive
  CHECK(smoothness_lambda(flipped, chi) == Rational(1, 5));

  auto wrong_w = verify_smooth(t, chi, Rational(1, 2), 0, {0, 1});
  CHECK(!wrong_w.pass);
  CHECK(wrong_w.violations.front().kind == Violation::Kind::WMismatch);
  auto too_big_c = verify_smooth(t, chi, Rational(3, 5), 0, {0, 0});
  CHECK(!too_big_c.pass);
  CHECK(too_big_c.violations.front().kind == Violation::Kind::LinearTooSmall);

  CHECK_THROWS_AS(SmoothStructure({Block{false, {0, 1}, {}}, Block{false, {1, 2}, {}}}, 0, 0), StructureError);
  CHECK_THROWS_AS(make_structure(Tournament::from_pair_bits(3, "101"), {{0, 1, 2}}, {1}, {1}, 0, 0), StructureError);
}

TEST_CASE("fixtures") {
  auto sig = boat_signature();
  auto a = blowup_fixture(sig, 9);
  CHECK(a.chi.size() == 3);
  CHECK(a.chi.w() == std::vector<int>{0, 1, 0});
  CHECK(a.chi.blocks()[1].vertices.size() == 9);
  REQUIRE(a.chi.blocks()[1].runs.size() == 3);
  for (const auto& r : a.chi.blocks()[1].runs) CHECK(r.size() == 3);
  CHECK(a.chi.lambda() == 0);
  CHECK(verify_smooth(a.t, a.chi).pass);
  CHECK(naive_lambda(a.t, a.chi) == 0);

  auto b = blowup_fixture(sig, 9);
  CHECK(b.t == a.t);
  FixtureOptions other;
  other.seed = 2;
  CHECK(blowup_fixture(sig, 9, other).t != a.t);

  FixtureOptions noisy;
  noisy.lambda_noise = Rational(1, 6);
  noisy.seed = 5;
  auto n = blowup_fixture(hat::signature(hat::hat(worked_example(), Ordering::identity(13))), 12, noisy);
  CHECK(verify_smooth(n.t, n.chi).pass);
  CHECK(naive_lambda(n.t, n.chi) == smoothness_lambda(n.t, n.chi));
  CHECK(n.chi.lambda() >= smoothness_lambda(n.t, n.chi));

  FixtureOptions div;
  div.divisible_by = 6;
  CHECK_THROWS_AS(blowup_fixture(sig, 9, div), DomainError);
  CHECK_THROWS_AS(blowup_fixture(sig, 2), DomainError);
}

TEST_CASE("property: restriction meets its size bound") {
  oracle::Lcg rng(17);
  auto sig = hat::signature(hat::hat(worked_example(), Ordering::identity(13)));
  for (int trial = 0; trial < 30; ++trial) {
    FixtureOptions o;
    o.lambda_noise = Rational(1, 12);
    o.seed = 100 + static_cast<std::uint64_t>(trial);
    auto fx = blowup_fixture(sig, 12, o);
    const auto& chi = fx.chi;
    const int j = rng.below(chi.size());
    const auto& sj = chi.blocks()[j].vertices;
    // gamma = 1 on even trials, a random prefix of at least half otherwise.
    std::vector<int> star = sj;
    if (trial % 2) star.resize(sj.size() / 2 + static_cast<std::size_t>(rng.below(static_cast<int>(sj.size()) / 2)));
    std::vector<int> a;
    for (int k = 0; k < 3; ++k) {
      int b = rng.below(chi.size());
      if (b == j) continue;
      const auto& sb = chi.blocks()[b].vertices;
      a.push_back(sb[rng.below(static_cast<int>(sb.size()))]);
    }
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    auto r = restrict_block(fx.t, chi, j, a, star);
    std::vector<int> expect;
    for (int v : star) {
      bool ok = true;
      for (int x : a) ok = ok && (chi.locate(x)->block < j ? fx.t.arc(x, v) : fx.t.arc(v, x));
      if (ok) expect.push_back(v);
    }
    CHECK(r.vertices == expect);
    CHECK(r.k == static_cast<int>(a.size()));
    CHECK(r.gamma == Rational(static_cast<long long>(star.size()), static_cast<long long>(sj.size())));
    CHECK(Rational(static_cast<long long>(r.vertices.size())) >= r.bound);
    CHECK(r.bound == (1 - r.k * chi.lambda() / r.gamma) * static_cast<long long>(star.size()));
  }
}

TEST_CASE("restriction edge cases") {
  auto fx = blowup_fixture(boat_signature(), 9);
  const auto& s1 = fx.chi.blocks()[1].vertices;
  CHECK(restrict_block(fx.t, fx.chi, 1, {}, s1).vertices == s1);
  std::vector<int> a{fx.chi.blocks()[0].vertices[0], fx.chi.blocks()[2].vertices[4]};
  CHECK(restrict_block(fx.t, fx.chi, 1, a, s1).vertices == s1);  // lambda 0: everything conforms
  std::vector<int> inside{s1[0]};
  CHECK_THROWS_AS(restrict_block(fx.t, fx.chi, 1, inside, s1), DomainError);
  std::vector<int> foreign{fx.chi.blocks()[0].vertices[0]};
  CHECK_THROWS_AS(restrict_block(fx.t, fx.chi, 1, a, foreign), DomainError);
}

TEST_CASE("divisibility trimming") {
  auto fx = blowup_fixture(boat_signature(), 9);
  auto same = trim_divisible(fx.t, fx.chi, 3);
  for (int i = 0; i < same.size(); ++i) {
    auto a = same.blocks()[i].vertices, b = fx.chi.blocks()[i].vertices;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }

  Tournament t = Tournament::transitive(21);
  auto chi = make_structure(t, {range(0, 7), range(7, 14), range(14, 21)}, {0, 1, 0}, {1}, Rational(1, 3), 0);
  auto trimmed = trim_divisible(t, chi, 3);
  for (const auto& b : trimmed.blocks()) CHECK(b.vertices.size() == 6);
  CHECK_THROWS_AS(trim_divisible(t, chi, 4), DomainError);

  // Property: trimmed noisy fixtures verify at (c/2, 2 lambda).
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    FixtureOptions o;
    o.lambda_noise = Rational(1, 10);
    o.seed = seed;
    auto f = blowup_fixture(boat_signature(), 10, o);
    auto tr = trim_divisible(f.t, f.chi, 3);
    CHECK(tr.c() == f.chi.c() / 2);
    CHECK(tr.lambda() == f.chi.lambda() * 2);
    for (int i = 0; i < tr.size(); ++i) {
      CHECK(tr.blocks()[i].vertices.size() % 3 == 0);
      CHECK(tr.blocks()[i].vertices.size() + 3 >= f.chi.blocks()[i].vertices.size() + 1);
    }
    CHECK(verify_smooth(f.t, tr, f.chi.c() / 2, f.chi.lambda() * 2, f.chi.w()).pass);
  }
}

TEST_CASE("finder") {
  auto fx = blowup_fixture(boat_signature(), 6);
  FinderOptions o;
  o.delta = {3};
  auto found = find_smooth_structure(fx.t, {0, 1, 0}, fx.chi.c(), 0, o);
  REQUIRE(found);
  CHECK(verify_smooth(fx.t, *found).pass);
  CHECK(found->w() == std::vector<int>{0, 1, 0});

  Tournament r = oracle::Lcg(3).tournament(10);
  auto one = find_smooth_structure(r, {1}, Rational(1), 0);
  REQUIRE(one);
  CHECK(static_cast<int>(one->blocks()[0].vertices.size()) == oracle::tr(r));

  FinderOptions tiny;
  tiny.cap = 5;
  CHECK_THROWS_AS(find_smooth_structure(r, {1}, Rational(1), 0, tiny), ResourceError);
}

TEST_CASE("structure text round trip") {
  auto fx = blowup_fixture(boat_signature(), 9);
  std::ostringstream out;
  write_structure(out, fx.chi);
  std::istringstream in(out.str());
  auto raw = read_structure(in);
  CHECK(raw.c == fx.chi.c());
  CHECK(raw.lambda == fx.chi.lambda());
  CHECK(raw.w == fx.chi.w());
  REQUIRE(raw.blocks.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(raw.blocks[i] == fx.chi.blocks()[i].vertices);
  CHECK(out.str().rfind("c=", 0) == 0);

  auto bad = [](const std::string& text) {
    std::istringstream s(text);
    return read_structure(s);
  };
  CHECK_THROWS_AS(bad("lambda=0 w=0\nL 1\n"), FormatError);
  CHECK_THROWS_AS(bad("c=1/2 lambda=0 w=01\nL 1\nL 2\n"), FormatError);
  CHECK_THROWS_AS(bad("c=1/2 lambda=0 w=0\nL 1\nL 2\n"), FormatError);
  CHECK_THROWS_AS(bad("c=x lambda=0 w=0\nL 1\n"), FormatError);
  CHECK_NOTHROW(bad("c=1/2 lambda=1/10 w=01\nL 0 1\nT 2 3\n"));
}

TEST_CASE("property: bound-based size check agrees with exact tr") {
  oracle::Lcg rng(31);
  auto sig = boat_signature();
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    FixtureOptions o;
    o.lambda_noise = Rational(1, 5);
    o.seed = seed;
    auto fx = blowup_fixture(sig, 10, o);  // 30 vertices, past the table cap
    const int exact = host_tr(fx.t, fx.chi);
    CHECK(exact <= fx.tr_bound);
    for (int k = 0; k < 6; ++k) {
      Rational c(1 + rng.below(12), 24);
      auto quick = verify_smooth(fx.t, fx.chi, c, fx.chi.lambda(), fx.chi.w());
      auto slow = verify_smooth(fx.t, fx.chi, c, fx.chi.lambda(), fx.chi.w(), exact);
      CHECK(quick.pass == slow.pass);
      CHECK(quick.violations.size() == slow.violations.size());
      CHECK(quick.tr_low <= exact);
      CHECK(exact <= quick.tr_high);
    }
  }
}
