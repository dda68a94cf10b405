#include "tourn/core/errors.hpp"
#include "tourn/hat.hpp"

namespace tourn::hat {

Signature compress(const std::vector<int>& s) {
  Signature sig;
  sig.s = s;
  int block = -1, run = 0;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (s[p] != 0 && s[p] != 1) throw DomainError("signature entries must be 0 or 1");
    if (s[p] == 0) {
      sig.s_c.push_back(0);
      ++block;
      run = 0;
      sig.slot.emplace_back(block, 0);
    } else if (p > 0 && s[p - 1] == 1) {
      ++sig.delta.back();
      sig.slot.emplace_back(block, ++run);
    } else {
      sig.s_c.push_back(1);
      sig.delta.push_back(1);
      ++block;
      run = 1;
      sig.slot.emplace_back(block, 1);
    }
  }
  return sig;
}

Signature signature(const HatDigraph& hd, Mode mode) {
  std::vector<int> s(static_cast<std::size_t>(hd.size()), 0);
  for (const auto& b : hd.boats)
    for (int v : b.interiors) s[hd.order.position(v)] = 1;
  if (mode == Mode::FlotillaGalaxy) {
    for (const auto& st : hd.stars)
      for (int v : st.roles.leaves) s[hd.order.position(v)] = 1;
    return compress(s);
  }

  if (!hd.stars.empty()) throw StructureError(std::string(to_string(mode)) + " mode: ordering has stars");
  for (const auto& b : hd.boats) {
    if (mode == Mode::LeftFlotilla && !b.left) throw StructureError("left-flotilla mode: ordering has a right boat");
    if (mode == Mode::RightFlotilla && b.left) throw StructureError("right-flotilla mode: ordering has a left boat");
  }
  Signature sig = compress(s);
  for (int d : sig.delta) {
    bool ok = mode == Mode::Flotilla ? (d == 3 || d == 6) : d == 3;
    if (!ok) throw StructureError(std::string(to_string(mode)) + " mode: run length " + std::to_string(d));
  }
  return sig;
}

}  // namespace tourn::hat
