#pragma once

#include <stdexcept>
#include <string>

namespace liesimp {

/// Malformed or mathematically inconsistent input (bad JSON schema, broken
/// group table, non-composable pair, dimension mismatch, ...).  The CLI maps
/// this to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two scalars from different fields met in one operation.
struct FieldMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// An internal cross-check failed: two independent routes to the same value
/// disagreed, or a certificate did not replay.  Always a bug, never a data
/// problem.  The CLI maps this to exit code 3.
struct InvariantBreach : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace liesimp
