#include "tourn/core/errors.hpp"
#include "tourn/embed.hpp"

namespace tourn::embed {

smooth::Fixture forbid_backward_pair(const hat::HatDigraph& hd, const hat::Signature& sig, int block_size, int boat,
                                     std::uint64_t seed) {
  if (boat < 0 || boat >= static_cast<int>(hd.boats.size())) throw DomainError("forbid_backward_pair: no such boat");
  smooth::FixtureOptions opt;
  opt.seed = seed;
  opt.plant = &hd;
  smooth::Fixture fx = smooth::blowup_fixture(sig, block_size, opt);

  const auto& roles = hd.boats[boat].roles;
  const int j = sig.slot[hd.order.position(roles.x)].first;
  const int r = sig.slot[hd.order.position(roles.y)].first;
  TournamentBuilder b(fx.t);
  for (int x : fx.chi.blocks()[j].vertices)
    for (int y : fx.chi.blocks()[r].vertices) b.orient(x, y);
  fx.t = std::move(b).build();
  fx.tr_bound = smooth::host_tr_bounds(fx.t, fx.chi).high;
  fx.chi = fx.chi.with_parameters(smooth::size_constant(fx.t, fx.chi, fx.tr_bound), smooth::smoothness_lambda(fx.t, fx.chi));
  fx.planted.clear();
  return fx;
}

}  // namespace tourn::embed
