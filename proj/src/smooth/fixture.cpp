#include "tourn/core/errors.hpp"
#include "tourn/core/prng.hpp"
#include "tourn/smooth.hpp"

#include <algorithm>
#include <stdexcept>

namespace tourn::smooth {

Fixture blowup_fixture(const hat::Signature& sig, int block_size, const FixtureOptions& options) {
  const int max_delta = sig.delta.empty() ? 1 : *std::max_element(sig.delta.begin(), sig.delta.end());
  if (block_size < max_delta)
    throw DomainError("blowup_fixture: block size " + std::to_string(block_size) + " is below the largest run count " +
                      std::to_string(max_delta));
  if (options.divisible_by < 1 || block_size % options.divisible_by != 0)
    throw DomainError("blowup_fixture: block size not divisible by " + std::to_string(options.divisible_by));
  if (options.lambda_noise < 0 || options.lambda_noise >= 1) throw DomainError("blowup_fixture: lambda_noise outside [0,1)");

  const int k = static_cast<int>(sig.s_c.size());
  const int b = block_size;
  const int n = k * b;
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[i] = i;
  CounterRng shuffle_rng(options.seed, 1);
  shuffle_rng.shuffle(label);
  auto at = [&](int blk, int idx) { return label[static_cast<std::size_t>(blk * b + idx)]; };

  TournamentBuilder tb(n);
  CounterRng inner(options.seed, 2);
  for (int blk = 0; blk < k; ++blk)
    for (int i = 0; i < b; ++i)
      for (int j = i + 1; j < b; ++j) {
        bool forward = sig.s_c[blk] == 1 || inner.bit();
        forward ? tb.orient(at(blk, i), at(blk, j)) : tb.orient(at(blk, j), at(blk, i));
      }

  // Flips between two blocks form a union of `budget` shifted perfect
  // matchings, so each vertex loses exactly `budget` arcs per block pair.
  const Rational scaled = options.lambda_noise * b;
  const int budget = static_cast<int>(numerator_of(scaled) / denominator_of(scaled));
  CounterRng noise(options.seed, 3);
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q) {
      std::vector<int> shifts(static_cast<std::size_t>(b));
      for (int i = 0; i < b; ++i) shifts[i] = i;
      noise.shuffle(shifts);
      shifts.resize(static_cast<std::size_t>(budget));
      std::vector<char> flipped(static_cast<std::size_t>(b) * b, 0);
      for (int s : shifts)
        for (int i = 0; i < b; ++i) flipped[static_cast<std::size_t>(i) * b + (i + s) % b] = 1;
      for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j)
          flipped[static_cast<std::size_t>(i) * b + j] ? tb.orient(at(q, j), at(p, i)) : tb.orient(at(p, i), at(q, j));
    }

  Fixture fx;
  if (options.plant) {
    const hat::HatDigraph& hd = *options.plant;
    if (hd.size() != static_cast<int>(sig.slot.size()))
      throw DomainError("blowup_fixture: signature does not belong to the planted digraph");
    CounterRng pick(options.seed, 4);
    fx.planted.assign(static_cast<std::size_t>(hd.size()), -1);
    for (int p = 0; p < hd.size(); ++p) {
      auto [blk, run] = sig.slot[p];
      int lo = 0, len = b;
      if (run > 0) {
        len = b / sig.delta[static_cast<std::size_t>(std::count(sig.s_c.begin(), sig.s_c.begin() + blk, 1))];
        lo = (run - 1) * len;
      }
      fx.planted[hd.order.at(p)] = at(blk, lo + static_cast<int>(pick.below(static_cast<std::uint64_t>(len))));
    }
    for (int a = 0; a < hd.size(); ++a)
      for (int c = a + 1; c < hd.size(); ++c) {
        int fa = fx.planted[a], fc = fx.planted[c];
        if (hd.graph.has_arc(a, c)) tb.orient(fa, fc);
        else if (hd.graph.has_arc(c, a)) tb.orient(fc, fa);
        else pick.bit() ? tb.orient(fa, fc) : tb.orient(fc, fa);
      }
  }
  fx.t = std::move(tb).build();

  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
  for (int blk = 0; blk < k; ++blk)
    for (int i = 0; i < b; ++i) blocks[blk].push_back(at(blk, i));
  SmoothStructure chi = make_structure(fx.t, blocks, sig, 0, 0);
  fx.tr_bound = host_tr_bounds(fx.t, chi).high;
  Rational lambda = std::max(options.lambda_noise, smoothness_lambda(fx.t, chi));
  fx.chi = chi.with_parameters(size_constant(fx.t, chi, fx.tr_bound), lambda);
  if (!verify_smooth(fx.t, fx.chi).pass) throw std::logic_error("blowup_fixture: generated structure fails verification");
  return fx;
}

}  // namespace tourn::smooth
