#pragma once

#include <stdexcept>
#include <string>

namespace tourn {

/// Malformed input text or bit strings.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation
/// (overlapping sets, epsilon outside (0,1), vertex not in a structure, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap or search budget would be exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input is structurally unfit for the operation (e.g. an ordering that
/// is not a flotilla-galaxy ordering, overlapping smooth-structure blocks).
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tourn
