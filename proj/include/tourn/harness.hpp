#pragma once

#include "tourn/core/rational.hpp"
#include "tourn/core/tournament.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace tourn::harness {

// ---------------------------------------------------------------------------
// Generation

/// Each pair (i, j), i < j, is oriented i -> j when the top bit of draw
/// pair_index(n, i, j) of the counter generator under `seed` is set.
Tournament random_tournament(int n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Canonical form

/// Lexicographically smallest pair-bit string over all relabellings.
/// Positions are filled one at a time; each new row is minimised by putting
/// in-neighbours first inside every cell of equally-related vertices, and
/// only candidates tying for the smallest row are branched on.
std::string canonical_bits(const Tournament& t);
Tournament canonical_form(const Tournament& t);

// ---------------------------------------------------------------------------
// Enumeration

enum class EnumMode { Labeled, Canonical };
const char* to_string(EnumMode m);
EnumMode parse_enum_mode(const std::string& text);

struct Caps {
  int labeled_max_n = 7;
  int canonical_max_n = 8;
  int sampling_max_n = 64;
  /// Applies TOURN_LABELED_CAP, TOURN_CANONICAL_CAP and TOURN_SAMPLING_CAP
  /// from the environment when set.
  static Caps from_env(Caps base);
};

/// Labeled mode visits every pair-bit pattern in increasing binary order;
/// canonical mode visits one representative per isomorphism class, in
/// increasing canonical string order. Throws ResourceError past the caps.
void for_each_tournament(int n, EnumMode mode, const std::function<void(const Tournament&)>& fn,
                         const Caps& caps = {});
std::vector<Tournament> enumerate_tournaments(int n, EnumMode mode, const Caps& caps = {});

/// Canonical representatives of size n, built by extending those of size
/// n - 1 by one vertex in every way.
std::vector<std::string> canonical_classes(int n, const Caps& caps = {}, int threads = 1);

// ---------------------------------------------------------------------------
// Census

enum class CensusMode { Labeled, Canonical, Sampling };
const char* to_string(CensusMode m);
CensusMode parse_census_mode(const std::string& text);

struct CensusOptions {
  CensusMode mode = CensusMode::Labeled;
  std::vector<Rational> eps;
  int threads = 1;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;  // sampling mode only
  Caps caps;
};

struct CensusRow {
  int n = 0;
  std::uint64_t examined = 0;
  std::uint64_t hfree = 0;
  int min_tr = -1;          // -1 when nothing is H-free
  std::string witness;      // canonical pair bits of the minimiser, smallest first
  std::vector<int> eps_sign;  // sign of min_tr - n^eps per eps
};

/// One row per n. Labeled and canonical modes are exact; sampling mode
/// examines `samples` random tournaments. Rows are identical for every
/// thread count: the witness is the smallest canonical string attaining
/// min_tr.
std::vector<CensusRow> ehc_curve(const Tournament& h, int n_min, int n_max, const CensusOptions& options);

/// Sign of tr - n^eps, computed exactly as tr^q against n^p.
int eps_sign(int tr, int n, const Rational& eps);

/// "# ehc-census v1 ..." header, column line, one line per row.
void write_csv(std::ostream& out, const std::vector<CensusRow>& rows, const CensusOptions& options,
               const std::string& pattern_id);

/// Standalone SVG plot of min_tr against n, with n^eps reference curves.
void write_svg(std::ostream& out, const std::vector<CensusRow>& rows, const CensusOptions& options,
               const std::string& pattern_id);

/// Re-checks a row: the witness is H-free with tr equal to min_tr.
bool recheck_row(const CensusRow& row, const Tournament& h);

}  // namespace tourn::harness
