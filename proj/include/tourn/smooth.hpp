#pragma once

#include "tourn/core/density.hpp"
#include "tourn/core/rational.hpp"
#include "tourn/core/tournament.hpp"
#include "tourn/hat.hpp"
#include "tourn/transitive.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tourn::smooth {

struct Block {
  bool transitive = false;
  std::vector<int> vertices;           // transitive order for T blocks
  std::vector<std::vector<int>> runs;  // T blocks: consecutive sub-blocks
};

/// Where a vertex sits: block index and run index (1-based; 0 for a linear
/// block, -1 for a vertex of a transitive block beyond its last run).
struct Slot {
  int block = -1;
  int run = -1;
};

/// Ordered disjoint blocks S_1..S_|w| of a host tournament together with the
/// parameters (c, lambda). The host is not stored; operations take it.
class SmoothStructure {
 public:
  SmoothStructure() = default;
  /// Throws StructureError on overlapping blocks, runs that are not
  /// consecutive pieces of their block, or runs on a linear block.
  SmoothStructure(std::vector<Block> blocks, Rational c, Rational lambda);

  const std::vector<Block>& blocks() const { return blocks_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  const Rational& c() const { return c_; }
  const Rational& lambda() const { return lambda_; }
  std::vector<int> w() const;
  std::string w_string() const;
  /// Run count of each transitive block, in block order.
  std::vector<int> delta() const;

  std::optional<Slot> locate(int v) const;
  bool contains(int v) const { return locate(v).has_value(); }
  /// 1-based position index. Throws DomainError for a vertex outside the
  /// structure or in the leftover tail of a transitive block.
  int xi(int v) const;
  /// Number of distinct positions.
  int positions() const;
  /// Block/run holding position `xi`.
  Slot slot_of(int xi) const;
  /// Vertices whose position is `xi`, in block order.
  const std::vector<int>& xi_class(int xi) const;

  SmoothStructure with_parameters(Rational c, Rational lambda) const;

 private:
  std::vector<Block> blocks_;
  Rational c_, lambda_;
  std::map<int, Slot> where_;
  std::vector<int> first_xi_;  // per block
};

/// Builds a structure whose transitive blocks are sorted into transitive
/// order and cut into delta[k] runs of floor(|S|/delta[k]) vertices (k
/// counts transitive blocks). Throws StructureError when a block flagged
/// transitive is not, or is smaller than its delta.
SmoothStructure make_structure(const Tournament& host, const std::vector<std::vector<int>>& blocks,
                               const std::vector<int>& w, const std::vector<int>& delta, Rational c, Rational lambda);

/// Same, with runs taken from a hat signature (w = s_c, delta per 1-entry).
SmoothStructure make_structure(const Tournament& host, const std::vector<std::vector<int>>& blocks,
                               const hat::Signature& sig, Rational c, Rational lambda);

// ---------------------------------------------------------------------------
// Verification

struct Violation {
  enum class Kind { WMismatch, LinearTooSmall, TransitiveTooSmall, NotTransitive, OutDensity, InDensity };
  Kind kind;
  int block = -1;   // block of the offending vertex / the undersized block
  int other = -1;   // the block the density is measured against
  int vertex = -1;
  DensityValue density{};
  std::string describe() const;
};

struct SmoothReport {
  bool pass = true;
  /// Bounds on tr(T) that sufficed to decide the transitive size condition;
  /// equal when tr(T) was known or had to be computed exactly.
  int tr_low = 0;
  int tr_high = 0;
  std::vector<Violation> violations;
};

/// Exact check of the three defining conditions. The transitive size
/// condition is settled by a greedy lower and a block-partition upper bound
/// on tr(T) when they agree on every block, and by exact branch and bound
/// otherwise; `known_tr` skips both. Throws DomainError when a block vertex
/// is outside the host.
SmoothReport verify_smooth(const Tournament& t, const SmoothStructure& chi, const Rational& c, const Rational& lambda,
                           const std::vector<int>& w, std::optional<int> known_tr = std::nullopt);
SmoothReport verify_smooth(const Tournament& t, const SmoothStructure& chi, std::optional<int> known_tr = std::nullopt);

/// tr(T) using the blocks of chi as the bounding partition.
int host_tr(const Tournament& t, const SmoothStructure& chi);
/// Greedy lower and per-block upper bound on tr(T).
transitive::TrBounds host_tr_bounds(const Tournament& t, const SmoothStructure& chi);

/// Smallest lambda for which the density condition holds.
Rational smoothness_lambda(const Tournament& t, const SmoothStructure& chi);
/// Largest c for which both size conditions hold, given tr(T) or an upper
/// bound on it.
Rational size_constant(const Tournament& t, const SmoothStructure& chi, int tr);

// ---------------------------------------------------------------------------
// Neighbourhood restriction

/// S_{j,x}: vertices of S_j adjacent from x when j is after x's block,
/// adjacent to x when j is before it.
VertexSet conforming(const Tournament& t, const SmoothStructure& chi, int j, int x);

struct Restriction {
  std::vector<int> vertices;  // S_j* intersected with every S_{j,x}, in S_j* order
  int k = 0;
  Rational gamma;
  Rational bound;  // (1 - k lambda / gamma) |S_j*|
};

/// Intersects `s_star` (a subset of block j) with S_{j,x} for every x in
/// `a` and asserts the resulting size bound (StructureError when it fails,
/// which means chi is not smooth at its declared lambda). Throws
/// DomainError when `a` meets S_j or leaves the structure, or `s_star` is
/// not inside S_j.
Restriction restrict_block(const Tournament& t, const SmoothStructure& chi, int j, std::span<const int> a,
                           std::span<const int> s_star);

// ---------------------------------------------------------------------------
// Divisibility trimming

/// Keeps floor(|S_i|/m)*m vertices of every block (a transitive prefix, or
/// the lowest labels of a linear block); runs are recut with the same
/// counts. The result carries (c/2, 2 lambda). Throws DomainError when a
/// block has fewer than 2m vertices or m < 1.
SmoothStructure trim_divisible(const Tournament& t, const SmoothStructure& chi, int m);

// ---------------------------------------------------------------------------
// Search and fixtures

struct FinderOptions {
  int cap = 200;
  int restarts = 8;
  std::uint64_t seed = 1;
  std::vector<int> delta;  // run counts for transitive blocks (default 1 each)
};

/// Best-effort search; any result passes verify_smooth. nullopt is not a
/// proof of nonexistence. Throws ResourceError above the cap.
std::optional<SmoothStructure> find_smooth_structure(const Tournament& t, const std::vector<int>& w, const Rational& c,
                                                     const Rational& lambda, const FinderOptions& options = {});

struct Fixture {
  Tournament t;
  SmoothStructure chi;  // carries the verified (c, lambda)
  /// Upper bound on tr(T) from the blocks; c is measured against it, so c
  /// may be slightly below the largest admissible value.
  int tr_bound = 0;
  /// Planted copy of the hatted digraph: hat vertex -> host vertex.
  std::vector<int> planted;
};

struct FixtureOptions {
  Rational lambda_noise = 0;
  std::uint64_t seed = 1;
  int divisible_by = 1;
  /// When set, one vertex of every position class is rewired to carry a
  /// copy of this hatted digraph (whose signature must be `sig`); absent
  /// pairs get seeded random orientations.
  const hat::HatDigraph* plant = nullptr;
};

/// Random tournament built around a structure for `sig`: block i has
/// `block_size` vertices, transitive blocks are transitive, linear blocks
/// random, inter-block arcs forward up to a per-vertex flip budget of
/// floor(lambda_noise * block_size). Vertex labels are shuffled. The
/// returned chi carries the exact (c, lambda) it verifies at. Throws
/// DomainError when block_size is below the largest delta or not divisible
/// by `divisible_by`.
Fixture blowup_fixture(const hat::Signature& sig, int block_size, const FixtureOptions& options = {});

// ---------------------------------------------------------------------------
// Text form: header "c=p/q lambda=p/q w=0101", then one "L ..." or "T ..."
// line per block (T blocks in transitive order).

struct RawStructure {
  Rational c, lambda;
  std::vector<int> w;
  std::vector<std::vector<int>> blocks;
};

void write_structure(std::ostream& out, const SmoothStructure& chi);
RawStructure read_structure(std::istream& in);
RawStructure load_structure(const std::string& path);

}  // namespace tourn::smooth
