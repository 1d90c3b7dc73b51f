#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liesimp/field.hpp"

namespace liesimp {

enum class LieSimplicity {
  simple,
  not_simple,
  /// The Lie algebra is zero (the underlying algebra is just K).
  trivial,
  /// A theorem precondition failed; no verdict.
  inapplicable,
  /// No implemented criterion decides the question.
  undecided,
};

std::string to_string(LieSimplicity s);

struct LieVerdict {
  LieSimplicity status = LieSimplicity::inapplicable;
  std::string reason;
  /// For not_simple: coefficients proving the obstruction (the identity, or
  /// the all-ones vertex vector, as a combination of the relevant basis).
  std::optional<std::vector<Scalar>> certificate;
};

enum class CenterClass {
  scalar_multiples_of_identity,
  /// Documented for the non-unital (infinite vertex set) regime, which this
  /// toolkit cannot represent; kept so reports can explain the trichotomy.
  zero,
  inapplicable,
};

std::string to_string(CenterClass c);

struct CenterVerdict {
  CenterClass status = CenterClass::inapplicable;
  std::string reason;
};

}  // namespace liesimp
