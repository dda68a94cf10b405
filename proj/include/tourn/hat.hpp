#pragma once

#include "tourn/core/digraph.hpp"
#include "tourn/core/ordering.hpp"
#include "tourn/core/tournament.hpp"
#include "tourn/patterns.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace tourn::hat {

using patterns::BoatRoles;
using patterns::ComponentKind;
using patterns::StarRoles;

/// Which proof variant a hatted digraph is prepared for. Only the
/// flotilla-galaxy variant marks star leaves in the signature.
enum class Mode { LeftFlotilla, RightFlotilla, Flotilla, FlotillaGalaxy };

const char* to_string(Mode m);
/// Accepts "left", "right", "flotilla", "galaxy" and the long names.
Mode parse_mode(const std::string& text);

struct BoatPart {
  bool left = true;
  BoatRoles roles;
};

struct StarPart {
  bool left = true;  // centre precedes its leaves
  StarRoles roles;
};

/// Couple k pairs the k-th boat with the k-th star; -1 pads a side with
/// fewer members.
struct Couple {
  int boat = -1;
  int star = -1;
};

/// Boats and stars of a flotilla-galaxy ordering, paired into couples.
/// Boats are ranked by the position of their first interior, stars by the
/// position of their first leaf.
struct FlotillaGalaxy {
  patterns::PatternDecomposition decomposition;
  std::vector<BoatPart> boats;
  std::vector<StarPart> stars;
  std::vector<Couple> couples;
  std::vector<int> singletons;
};

/// Throws StructureError unless `order` is a flotilla-galaxy ordering of `h`.
FlotillaGalaxy analyze(const Tournament& h, const Ordering& order);

struct HatBoat {
  bool left = true;
  BoatRoles roles;               // labels of H
  int z = -1;                    // label h + i
  std::array<int, 3> interiors;  // in hat order: (z,u,v) left, (u,v,z) right
};

/// The partial digraph built from H by adding z_i per boat. Labels 0..h-1
/// are those of H; z_i gets label h + i.
struct HatDigraph {
  Tournament base;
  Ordering base_order;
  Digraph graph;
  Ordering order;  // the hat ordering
  std::vector<HatBoat> boats;
  std::vector<StarPart> stars;
  std::vector<Couple> couples;

  int base_size() const { return base.size(); }
  int size() const { return graph.size(); }
  /// Vertices of couple k (0-based), H labels plus its z, in hat order.
  std::vector<int> couple_vertices(int k) const;
};

/// Throws StructureError unless `order` is a regular flotilla-galaxy ordering.
HatDigraph hat(const Tournament& h, const Ordering& order);

/// Plain-text form: line 1 n, then "arcs" and one "a b" per line, then
/// "absent" and one "a b" per line, then "order" and the hat ordering.
std::string to_text(const HatDigraph& hd);

struct Signature {
  std::vector<int> s;      // over hat positions
  std::vector<int> s_c;    // compressed
  std::vector<int> delta;  // run length per 1-entry of s_c
  /// Hat position p (0-based) -> (block index, run index). Run index is
  /// 0 for a linear block and 1..delta for a transitive block.
  std::vector<std::pair<int, int>> slot;
};

/// Compresses a 0/1 vector: every maximal run of 1s becomes one 1.
Signature compress(const std::vector<int>& s);

/// s marks boat interiors and, in FlotillaGalaxy mode, star leaves. The
/// flotilla modes throw StructureError when stars are present or the run
/// lengths are not 3 (left/right) or 3/6 (flotilla).
Signature signature(const HatDigraph& hd, Mode mode = Mode::FlotillaGalaxy);

struct Regularized {
  Tournament t;
  Ordering order;
  std::vector<int> added;  // new vertices, one per former singleton
};

/// Appends one vertex per singleton with a single backward arc onto it.
Regularized regularize(const Tournament& h, const Ordering& order);

/// All 2^l orderings reachable by applying alpha to a subset of left boats
/// and beta to a subset of right boats. Bit k of the index selects couple
/// order boat k.
std::vector<Ordering> theta_set(const Tournament& h, const Ordering& order);

struct Prefix {
  std::vector<int> vertices;  // H labels in theta order
  Tournament h;               // H restricted to `vertices`
  std::vector<int> hat_vertices;  // hat labels in hat order
  Digraph hat;                    // hat digraph restricted, relabelled 0..
  Ordering hat_order;             // the restricted hat ordering (identity)
};

/// H^k and its hatted version for the first k couples, 0 <= k <= l.
Prefix prefix(const Tournament& h, const Ordering& order, int k);

struct Super {
  Tournament t;
  Ordering order;
  std::vector<int> w;  // inserted between interiors
  std::vector<int> s;  // (H++ only) inserted next to an interior
};

Super super_plus(const Tournament& h, const Ordering& order);
Super super_plus_plus(const Tournament& h, const Ordering& order);

/// Tournament whose backward arcs under `order` are exactly `backward`
/// (tail, head pairs); every other pair points forward.
Tournament from_backward_arcs(const Ordering& order, const std::vector<Arc>& backward);

}  // namespace tourn::hat
