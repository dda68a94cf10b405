#pragma once

#include "tourn/core/ordering.hpp"
#include "tourn/core/tournament.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace tourn {

// TRN v1: line 1 is n, line 2 the n(n-1)/2 pair bits (row-major, i < j,
// '1' meaning i -> j). Line 2 is empty for n < 2.
Tournament read_trn(std::istream& in);
void write_trn(std::ostream& out, const Tournament& t);
std::string to_trn(const Tournament& t);
Tournament parse_trn(const std::string& text);

// Ordering file: one line, space-separated permutation of 0..n-1.
Ordering read_ordering(std::istream& in);
void write_ordering(std::ostream& out, const Ordering& order);

Tournament load_trn(const std::filesystem::path& path);
Ordering load_ordering(const std::filesystem::path& path);

}  // namespace tourn
