#include "tourn/core/errors.hpp"
#include "tourn/smooth.hpp"
#include "tourn/transitive.hpp"

#include <sstream>

namespace tourn::smooth {

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::WMismatch: os << "block kinds do not match w"; break;
    case Kind::LinearTooSmall: os << "linear block " << block + 1 << " is smaller than c*n"; break;
    case Kind::TransitiveTooSmall: os << "transitive block " << block + 1 << " is smaller than c*tr(T)"; break;
    case Kind::NotTransitive: os << "block " << block + 1 << " is not transitive in its listed order"; break;
    case Kind::OutDensity:
      os << "d({v" << vertex + 1 << "}, S" << other + 1 << ") = " << to_string(density.value()) << " for vertex of S"
         << block + 1;
      break;
    case Kind::InDensity:
      os << "d(S" << other + 1 << ", {v" << vertex + 1 << "}) = " << to_string(density.value()) << " for vertex of S"
         << block + 1;
      break;
  }
  return os.str();
}

namespace {

std::vector<VertexSet> block_sets(const Tournament& t, const SmoothStructure& chi) {
  std::vector<VertexSet> sets;
  for (const auto& b : chi.blocks()) {
    for (int v : b.vertices)
      if (v >= t.size()) throw DomainError("structure vertex " + std::to_string(v) + " outside the host");
    sets.push_back(make_set(t.size(), b.vertices));
  }
  return sets;
}

// Calls f(violation kind, i, j, v, density) for every density check.
template <class F>
void for_each_density(const Tournament& t, const SmoothStructure& chi, const std::vector<VertexSet>& sets, F&& f) {
  const auto& bl = chi.blocks();
  for (std::size_t i = 0; i < bl.size(); ++i)
    for (std::size_t j = i + 1; j < bl.size(); ++j) {
      long long si = static_cast<long long>(bl[i].vertices.size()), sj = static_cast<long long>(bl[j].vertices.size());
      if (si == 0 || sj == 0) continue;
      for (int v : bl[i].vertices)
        f(Violation::Kind::OutDensity, static_cast<int>(i), static_cast<int>(j), v,
          DensityValue{static_cast<long long>((t.out(v) & sets[j]).count()), sj});
      for (int v : bl[j].vertices)
        f(Violation::Kind::InDensity, static_cast<int>(j), static_cast<int>(i), v,
          DensityValue{static_cast<long long>((t.in(v) & sets[i]).count()), si});
    }
}

}  // namespace

namespace {

std::vector<std::vector<int>> block_parts(const SmoothStructure& chi) {
  std::vector<std::vector<int>> parts;
  for (const auto& b : chi.blocks()) parts.push_back(b.vertices);
  return parts;
}

}  // namespace

int host_tr(const Tournament& t, const SmoothStructure& chi) {
  if (t.size() <= transitive::kDefaultTableCap) return transitive::tr(t).size;
  return transitive::max_transitive(t, block_parts(chi)).size;
}

transitive::TrBounds host_tr_bounds(const Tournament& t, const SmoothStructure& chi) {
  if (t.size() <= transitive::kDefaultTableCap) {
    int tr = transitive::tr(t).size;
    return {tr, tr};
  }
  return transitive::tr_bounds(t, block_parts(chi));
}

SmoothReport verify_smooth(const Tournament& t, const SmoothStructure& chi, const Rational& c, const Rational& lambda,
                           const std::vector<int>& w, std::optional<int> known_tr) {
  const auto sets = block_sets(t, chi);
  SmoothReport rep;
  if (known_tr) {
    rep.tr_low = rep.tr_high = *known_tr;
  } else {
    auto b = host_tr_bounds(t, chi);
    rep.tr_low = b.low;
    rep.tr_high = b.high;
  }
  auto add = [&](Violation v) {
    rep.pass = false;
    rep.violations.push_back(std::move(v));
  };
  if (chi.w() != w) add({Violation::Kind::WMismatch});

  const Rational n = t.size();
  for (int i = 0; i < chi.size(); ++i) {
    const Block& b = chi.blocks()[i];
    const Rational sz = static_cast<long long>(b.vertices.size());
    if (!b.transitive) {
      if (sz < c * n) add({Violation::Kind::LinearTooSmall, i});
    } else {
      if (!transitive::is_transitive_order(t, b.vertices)) add({Violation::Kind::NotTransitive, i});
      if (sz < c * rep.tr_high && sz >= c * rep.tr_low) {
        rep.tr_low = rep.tr_high = host_tr(t, chi);
      }
      if (sz < c * rep.tr_high) add({Violation::Kind::TransitiveTooSmall, i});
    }
  }
  const Rational floor = 1 - lambda;
  for_each_density(t, chi, sets, [&](Violation::Kind k, int i, int j, int v, DensityValue d) {
    if (!d.at_least(floor)) add({k, i, j, v, d});
  });
  return rep;
}

SmoothReport verify_smooth(const Tournament& t, const SmoothStructure& chi, std::optional<int> known_tr) {
  return verify_smooth(t, chi, chi.c(), chi.lambda(), chi.w(), known_tr);
}

Rational smoothness_lambda(const Tournament& t, const SmoothStructure& chi) {
  Rational worst = 0;
  for_each_density(t, chi, block_sets(t, chi), [&](Violation::Kind, int, int, int, DensityValue d) {
    Rational gap = 1 - d.value();
    if (gap > worst) worst = gap;
  });
  return worst;
}

Rational size_constant(const Tournament& t, const SmoothStructure& chi, int tr) {
  std::optional<Rational> best;
  for (const auto& b : chi.blocks()) {
    long long denom = b.transitive ? tr : t.size();
    if (denom == 0) continue;
    Rational r(static_cast<long long>(b.vertices.size()), denom);
    if (!best || r < *best) best = r;
  }
  return best.value_or(Rational(1));
}

}  // namespace tourn::smooth
