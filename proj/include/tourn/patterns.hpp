#pragma once

#include "tourn/core/density.hpp"
#include "tourn/core/ordering.hpp"
#include "tourn/core/tournament.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tourn::patterns {

enum class ComponentKind { Singleton, LeftStar, RightStar, LeftBoat, RightBoat, Other };
enum class Flavor { Galaxy, LeftFlotilla, RightFlotilla, Flotilla, FlotillaGalaxy, NotRecognized };

const char* to_string(ComponentKind k);
const char* to_string(Flavor f);

inline bool is_star(ComponentKind k) { return k == ComponentKind::LeftStar || k == ComponentKind::RightStar; }
inline bool is_boat(ComponentKind k) { return k == ComponentKind::LeftBoat || k == ComponentKind::RightBoat; }

struct StarRoles {
  int center = -1;
  std::vector<int> leaves;  // ascending position
  friend auto operator<=>(const StarRoles&, const StarRoles&) = default;
};

/// Roles in the boat's path ordering (x, u, v, y): exteriors x, y; left
/// interior u, right interior v. Backward arcs (y,u), (y,x), (v,x).
struct BoatRoles {
  int x = -1, u = -1, v = -1, y = -1;
  friend auto operator<=>(const BoatRoles&, const BoatRoles&) = default;
};

struct ComponentClass {
  ComponentKind kind = ComponentKind::Other;
  std::optional<StarRoles> star;
  std::optional<BoatRoles> boat;
};

/// Every admissible classification of one connected component of a
/// backward-arc graph, in preference order. A single-edge component yields
/// two star certificates (either endpoint may be the centre); a boat whose
/// four vertices are consecutive is both a left and a right boat. A
/// component matching nothing yields a single Other entry.
std::vector<ComponentClass> classify_component(std::span<const int> vertices, std::span<const Arc> edges,
                                               const Ordering& order);

struct Component {
  std::vector<int> vertices;  // ascending position
  ComponentClass cls;
};

struct PatternDecomposition {
  std::vector<Component> components;  // by position of first vertex
  Flavor flavor = Flavor::NotRecognized;
  bool regular = false;
  /// First violated condition when flavor is NotRecognized.
  std::string violation;

  bool recognized() const { return flavor != Flavor::NotRecognized; }
};

PatternDecomposition decompose(const Tournament& t, const Ordering& order);

inline constexpr int kDefaultOrderingCap = 10;

/// Exhaustive prefix-pruned search for a flotilla-galaxy ordering. Returns
/// nullopt only after the whole space has been ruled out. Throws
/// ResourceError above `cap` vertices. With threads > 1 the first position
/// is split across workers; the result is the same as the sequential one.
std::optional<Ordering> find_flotilla_galaxy_ordering(const Tournament& t, int cap = kDefaultOrderingCap,
                                                      int threads = 1);

/// Boat path ordering (x,u,v,y) -> cyclic ordering 1 (u,v,x,y). Throws
/// StructureError unless `path` is a path ordering of a boat in `t`.
std::array<int, 4> apply_alpha(const Tournament& t, const std::array<int, 4>& path);
/// Boat path ordering (x,u,v,y) -> cyclic ordering 2 (x,y,u,v).
std::array<int, 4> apply_beta(const Tournament& t, const std::array<int, 4>& path);

/// Whole-ordering forms: alpha moves x to just after v, beta moves y to
/// just before u; everything else keeps its relative order.
Ordering apply_alpha(const Ordering& order, const BoatRoles& boat);
Ordering apply_beta(const Ordering& order, const BoatRoles& boat);

/// True iff (x,u,v,y) is a path ordering of a boat in `t`.
bool is_boat_path(const Tournament& t, const std::array<int, 4>& path);

}  // namespace tourn::patterns
