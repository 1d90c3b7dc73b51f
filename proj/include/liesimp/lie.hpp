#pragma once

// Independent Lie-algebra simplicity oracle over prime fields.
//
// A Lie algebra is given by exact structure constants; the oracle decides
// simplicity by viewing Lie ideals as invariant subspaces of the adjoint
// representation and testing irreducibility MeatAxe-style (Norton's test on
// kernel vectors of f(theta) for irreducible factors f of the minimal
// polynomial of a randomized element theta), with certified shortcuts
// (derived algebra, center) and an exhaustive small-case fallback.  It is
// used to cross-validate the closed-form groupoid-algebra criterion.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liesimp/groupoid.hpp"
#include "liesimp/linalg.hpp"
#include "liesimp/steinberg.hpp"
#include "liesimp/verdicts.hpp"

namespace liesimp {

struct LieAlgebra {
  FieldSpec field;
  int dim = 0;
  // bracket[i][j] = coefficients of [e_i, e_j] in the basis, length dim.
  std::vector<std::vector<Vec>> bracket;
};

// Builds and validates (alternating brackets, antisymmetry, Jacobi identity
// on all basis triples — exhaustive).  Throws ValidationError naming the
// first violated identity.
LieAlgebra make_lie_algebra(const FieldSpec& f, std::vector<std::vector<Vec>> bracket);

Vec lie_bracket(const LieAlgebra& l, const Vec& x, const Vec& y);
// Matrix of ad(x): y -> [x, y].
Matrix adjoint_matrix(const LieAlgebra& l, const Vec& x);

// The Lie algebra on the commutator subspace [A, A] of an associative
// algebra, with bracket [x, y] = xy - yx.  Also returns the embedding data:
// the canonical basis of [A, A] inside A.
struct LieFromAlgebra {
  LieAlgebra lie;
  std::vector<Vec> ambient_basis;  // basis vectors of [A, A] inside A
};
LieFromAlgebra lie_from_algebra(const AssocAlgebra& a);

// One step of an ideal-closure trace: bracketing ambient basis element
// e_{ambient_index} against the closure's vector #source_index produced a
// new direction.
struct ClosureStep {
  int ambient_index = 0;
  int source_index = 0;
};

struct LieIdealWitness {
  std::vector<Vec> basis;  // echelonized basis of the ideal
  std::vector<ClosureStep> trace;
};

// Smallest ideal containing v (nonzero), by iterated bracketing to a fixed
// point; the result is asserted bracket-closed.
LieIdealWitness ideal_closure(const LieAlgebra& l, const Vec& v);

struct SimplicityResult {
  bool simple = false;
  std::string reason;
  std::optional<LieIdealWitness> witness;  // a proper nonzero ideal when not simple
};

// Exact simplicity decision over a prime field.  Throws ValidationError for
// rational inputs (not finitely enumerable by this oracle's design).
SimplicityResult is_simple_finite_field(const LieAlgebra& l, std::uint64_t seed);

// Runs the closed-form groupoid-algebra criterion and this oracle on
// A_{F_p}(g) for an effective minimal groupoid and asserts they agree;
// disagreement is an invariant breach.
struct CrossCheckReport {
  LieVerdict theorem;
  SimplicityResult oracle;
  bool agree = false;
  int lie_dim = 0;
};
CrossCheckReport cross_check_groupoid(const FiniteGroupoid& g, std::int64_t p, std::uint64_t seed);

}  // namespace liesimp
