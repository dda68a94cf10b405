#pragma once

#include "tourn/core/digraph.hpp"
#include "tourn/core/rational.hpp"
#include "tourn/core/tournament.hpp"
#include "tourn/hat.hpp"
#include "tourn/smooth.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tourn::embed {

// ---------------------------------------------------------------------------
// Generic containment

/// Injective map V(H) -> V(T), indexed by H vertex, such that T|image is H.
using Witness = std::vector<int>;

/// Backtracking over injections with arc-consistency pruning. The first
/// vertex of H is tried against every anchor; with threads > 1 anchors are
/// split across workers and the lowest successful anchor wins, so the
/// answer does not depend on the thread count.
std::optional<Witness> contains(const Tournament& t, const Tournament& h, int threads = 1);

/// True when `f` is an injective map with T|f(H) equal to H arc for arc.
bool is_copy(const Tournament& t, const Tournament& h, const Witness& f);

// ---------------------------------------------------------------------------
// Well-containment

struct BoatImage {
  int x = -1, u = -1, v = -1, y = -1, z = -1;
};

struct StarImage {
  int center = -1;
  std::vector<int> leaves;
};

struct Embedding {
  std::vector<int> f;  // hat label -> host vertex
  std::vector<BoatImage> boats;
  std::vector<StarImage> stars;
};

/// Fills the per-boat and per-star images from `f`.
Embedding make_embedding(const hat::HatDigraph& hd, std::vector<int> f);

struct WellContained {
  bool ok = true;
  std::string violation;  // first failure, empty when ok
  explicit operator bool() const { return ok; }
};

/// Checks injectivity, every forced arc of the hat digraph, and that the
/// image of the vertex at hat position p has position p + 1 in chi.
/// Throws DomainError when an image lies outside chi or f has the wrong size.
WellContained is_well_contained(const Tournament& t, const hat::HatDigraph& hd, const smooth::SmoothStructure& chi,
                                const std::vector<int>& f);

// ---------------------------------------------------------------------------
// Inductive embedding

struct StepRecord {
  int couple = -1;                 // 0-based
  std::vector<int> placed;         // host vertices fixed at this step
  int star_case = 0;               // 0 no star, 1 leaves share the boat block, 2 another block
  std::vector<int> sizes_before;   // live vertices per block before restriction
  std::vector<int> sizes_after;
  std::vector<Rational> bounds;    // asserted lower bound per block
  Rational lambda_after;           // measured smoothness of the restricted blocks
};

struct EmbedOptions {
  std::uint64_t node_budget = 50'000'000;
};

struct EmbedResult {
  std::optional<Embedding> embedding;  // nullopt: exhaustive search found nothing
  std::vector<StepRecord> steps;       // the successful branch, couple l first
  std::uint64_t nodes = 0;
};

/// Places the couples from last to first, each inside the vertices that
/// survive restriction by everything placed before. chi must verify as
/// smooth and match the signature of `hd` under `mode`. Throws DomainError
/// on a w or delta mismatch or a divisibility violation (3 for the one-sided
/// flotilla modes, 6 for flotilla), ResourceError past the node budget and
/// StructureError if a shrinkage bound fails.
EmbedResult embed_hat(const Tournament& t, const smooth::SmoothStructure& chi, const hat::HatDigraph& hd,
                      hat::Mode mode = hat::Mode::FlotillaGalaxy, const EmbedOptions& options = {});

// ---------------------------------------------------------------------------
// Extraction

enum class DropCase { DropV, DropU, DropZ };
const char* to_string(DropCase c);

/// Which ordering of a boat a surviving quadruple realises.
enum class BoatOrdering { Path, Cyclic1, Cyclic2, None };
const char* to_string(BoatOrdering o);

/// Classifies four vertices, in the given order, by their backward arcs.
BoatOrdering classify_boat_ordering(const Tournament& t, const std::array<int, 4>& q);

struct Extraction {
  std::vector<int> vertices;  // host vertices in structure order, |H| of them
  std::vector<DropCase> cases;
  std::vector<BoatOrdering> orderings;  // per boat, of the four survivors
};

/// Drops one interior per boat: v if u -> x, else u if y -> v, else z.
Extraction extract_copy(const Tournament& t, const Embedding& emb, const hat::HatDigraph& hd);

/// Extraction followed by the containment oracle on T|X. Returns the
/// witness mapping H into T, or nullopt if the copy is not certified.
std::optional<Witness> certify(const Tournament& t, const Extraction& x, const Tournament& h);

// ---------------------------------------------------------------------------
// Super constructions

/// Images of x, z, u, w, v, t, y for one boat of the seven-vertex gadget.
struct SuperBoatImage {
  int x = -1, z = -1, u = -1, w = -1, v = -1, t = -1, y = -1;
};

/// The two roles removed: (v, w) if u -> x, else (u, w) if y -> v, else (z, t).
std::array<int, 2> super_removal(const Tournament& host, const SuperBoatImage& b);

/// Seven-vertex gadget for a single boat: order x z u w v t y, backward arcs
/// those of the boat plus t -> z, pairs {x,u} and {v,y} absent.
Digraph super_gadget();

// ---------------------------------------------------------------------------
// Fixtures

/// A planted fixture in which every arc between the blocks of boat k's
/// exteriors points forward, so no backward pair exists there. The
/// returned chi is re-measured.
smooth::Fixture forbid_backward_pair(const hat::HatDigraph& hd, const hat::Signature& sig, int block_size, int boat,
                                     std::uint64_t seed);

}  // namespace tourn::embed
