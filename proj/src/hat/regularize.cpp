#include "tourn/hat.hpp"

namespace tourn::hat {

Tournament from_backward_arcs(const Ordering& order, const std::vector<Arc>& backward) {
  TournamentBuilder b(order.size());
  for (int i = 0; i < order.size(); ++i)
    for (int j = i + 1; j < order.size(); ++j) b.orient(order.at(i), order.at(j));
  for (const Arc& a : backward) b.orient(a.first, a.second);
  return std::move(b).build();
}

Regularized regularize(const Tournament& h, const Ordering& order) {
  const FlotillaGalaxy fg = analyze(h, order);
  const int n = h.size();
  std::vector<int> perm = order.perm();
  std::vector<Arc> back = backward_arcs(h, order);
  Regularized r;
  // Singletons are listed in theta order, so appended vertex h+j pairs
  // with the j-th singleton.
  for (std::size_t j = 0; j < fg.singletons.size(); ++j) {
    int fresh = n + static_cast<int>(j);
    perm.push_back(fresh);
    back.emplace_back(fresh, fg.singletons[j]);
    r.added.push_back(fresh);
  }
  r.order = Ordering(std::move(perm));
  r.t = from_backward_arcs(r.order, back);
  return r;
}

}  // namespace tourn::hat
