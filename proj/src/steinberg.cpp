#include "liesimp/steinberg.hpp"

#include <sstream>

#include "liesimp/errors.hpp"

namespace liesimp {

AlgebraElement zero_element(const FiniteGroupoid& g, const FieldSpec& f) {
  return zero_vec(static_cast<std::size_t>(g.arrow_count()), f);
}

AlgebraElement indicator(const FiniteGroupoid& g, const FieldSpec& f, int arrow) {
  AlgebraElement x = zero_element(g, f);
  x[static_cast<std::size_t>(arrow)] = Scalar::one(f);
  return x;
}

AlgebraElement identity_element(const FiniteGroupoid& g, const FieldSpec& f) {
  AlgebraElement x = zero_element(g, f);
  for (int u = 0; u < g.unit_count(); ++u) x[static_cast<std::size_t>(g.identity_arrow(u))] = Scalar::one(f);
  return x;
}

AlgebraElement convolve(const FiniteGroupoid& g, const AlgebraElement& x, const AlgebraElement& y) {
  const std::size_t n = static_cast<std::size_t>(g.arrow_count());
  if (x.size() != n || y.size() != n) throw ValidationError("algebra element has the wrong length for this groupoid");
  const FieldSpec f = x.empty() ? FieldSpec::rationals() : x[0].field();
  AlgebraElement out = zero_vec(n, f);
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (y[b].is_zero()) continue;
      const int c = g.compose(static_cast<int>(a), static_cast<int>(b));
      if (c != -1) out[static_cast<std::size_t>(c)] += x[a] * y[b];
    }
  }
  return out;
}

std::string ClassFunctionViolation::describe(const FiniteGroupoid& g) const {
  std::ostringstream os;
  if (!conjugator) {
    os << "nonzero coefficient on '" << g.arrow(arrow).name << "', which is not an isotropy arrow";
  } else {
    os << "value changes under conjugation of '" << g.arrow(arrow).name << "' by '" << g.arrow(*conjugator).name
       << "'";
  }
  return os.str();
}

ClassFunctionCheck is_class_function(const FiniteGroupoid& g, const AlgebraElement& x) {
  const int n = g.arrow_count();
  if (static_cast<int>(x.size()) != n) throw ValidationError("algebra element has the wrong length for this groupoid");
  for (int a = 0; a < n; ++a) {
    if (g.arrow(a).src == g.arrow(a).rng) continue;
    if (!x[static_cast<std::size_t>(a)].is_zero()) return {false, ClassFunctionViolation{a, std::nullopt}};
  }
  for (int a = 0; a < n; ++a) {
    if (g.arrow(a).src != g.arrow(a).rng) continue;
    for (int b = 0; b < n; ++b) {
      if (g.arrow(b).src != g.arrow(a).src) continue;  // need s(beta) = s(alpha) = r(alpha)
      const int conj = g.compose(b, g.compose(a, g.inverse(b)));
      if (conj == -1) throw InvariantBreach("conjugation of an isotropy arrow failed to compose");
      if (!(x[static_cast<std::size_t>(a)] == x[static_cast<std::size_t>(conj)]))
        return {false, ClassFunctionViolation{a, b}};
    }
  }
  return {true, std::nullopt};
}

namespace {

// Canonical basis of the solution space of the class-function conditions.
RowSpace class_function_space(const FiniteGroupoid& g, const FieldSpec& f) {
  const std::size_t n = static_cast<std::size_t>(g.arrow_count());
  std::vector<Vec> constraints;
  for (int a = 0; a < static_cast<int>(n); ++a) {
    if (g.arrow(a).src == g.arrow(a).rng) continue;
    constraints.push_back(indicator(g, f, a));  // coefficient must vanish
  }
  for (int a = 0; a < static_cast<int>(n); ++a) {
    if (g.arrow(a).src != g.arrow(a).rng) continue;
    for (int b = 0; b < static_cast<int>(n); ++b) {
      if (g.arrow(b).src != g.arrow(a).src) continue;
      const int conj = g.compose(b, g.compose(a, g.inverse(b)));
      Vec row = zero_vec(n, f);
      row[static_cast<std::size_t>(a)] += Scalar::one(f);
      row[static_cast<std::size_t>(conj)] += Scalar::one(f).negated();
      if (!vec_is_zero(row)) constraints.push_back(std::move(row));
    }
  }
  RowSpace space(n, f);
  if (constraints.empty()) {
    for (std::size_t i = 0; i < n; ++i) space.insert(indicator(g, f, static_cast<int>(i)));
    return space;
  }
  Matrix m(constraints.size(), n, f);
  for (std::size_t i = 0; i < constraints.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = constraints[i][j];
  for (const Vec& v : nullspace_basis(m)) space.insert(v);
  return space;
}

// Canonical basis of { x : x * 1_a = 1_a * x for all a }.
RowSpace commutant_space(const FiniteGroupoid& g, const FieldSpec& f) {
  const std::size_t n = static_cast<std::size_t>(g.arrow_count());
  // For unknown x, (x * 1_a - 1_a * x) is linear in x; collect one constraint
  // row per (a, output arrow c).
  std::vector<Vec> constraints;
  for (int a = 0; a < static_cast<int>(n); ++a) {
    std::vector<Vec> rows(n, zero_vec(n, f));
    for (int b = 0; b < static_cast<int>(n); ++b) {
      const int left = g.compose(b, a);  // coefficient x_b lands on arrow b o a
      if (left != -1) rows[static_cast<std::size_t>(left)][static_cast<std::size_t>(b)] += Scalar::one(f);
      const int right = g.compose(a, b);
      if (right != -1) rows[static_cast<std::size_t>(right)][static_cast<std::size_t>(b)] += Scalar::one(f).negated();
    }
    for (Vec& row : rows)
      if (!vec_is_zero(row)) constraints.push_back(std::move(row));
  }
  RowSpace space(n, f);
  if (constraints.empty()) {
    for (std::size_t i = 0; i < n; ++i) space.insert(indicator(g, f, static_cast<int>(i)));
    return space;
  }
  Matrix m(constraints.size(), n, f);
  for (std::size_t i = 0; i < constraints.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = constraints[i][j];
  for (const Vec& v : nullspace_basis(m)) space.insert(v);
  return space;
}

}  // namespace

Subspace center_basis(const FiniteGroupoid& g, const FieldSpec& f) {
  RowSpace via_class_functions = class_function_space(g, f);
  RowSpace via_commutant = commutant_space(g, f);
  if (!(via_class_functions == via_commutant))
    throw InvariantBreach("center computed from class functions disagrees with the commutant equations");
  return Subspace{std::move(via_class_functions)};
}

Subspace commutator_subspace(const FiniteGroupoid& g, const FieldSpec& f) {
  const int n = g.arrow_count();
  RowSpace space(static_cast<std::size_t>(n), f);
  for (int a = 0; a < n; ++a) {
    const AlgebraElement ia = indicator(g, f, a);
    for (int b = a + 1; b < n; ++b) {
      const AlgebraElement ib = indicator(g, f, b);
      Vec bracket = convolve(g, ia, ib);
      vec_axpy(bracket, Scalar::one(f).negated(), convolve(g, ib, ia));
      if (!vec_is_zero(bracket)) space.insert(bracket);
    }
  }
  return Subspace{std::move(space)};
}

SpanMembership identity_in_commutator_subspace(const FiniteGroupoid& g, const FieldSpec& f) {
  const Subspace sub = commutator_subspace(g, f);
  return in_span(identity_element(g, f), sub.space.basis(), f);
}

bool matrix_trace_membership(const Matrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("matrix_trace_membership requires a square matrix");
  const FieldSpec f = m.field();
  const bool by_trace = m.trace().is_zero();
  const std::size_t d = m.rows();
  if (d >= 1 && d <= 3) {
    // Explicit check: span of the commutators of matrix units E_{ij}.
    const auto unit = [&](std::size_t i, std::size_t j) {
      Matrix e(d, d, f);
      e.at(i, j) = Scalar::one(f);
      return e;
    };
    std::vector<Vec> generators;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l) {
            const Matrix a = unit(i, j);
            const Matrix b = unit(k, l);
            const Matrix bracket = a * b - b * a;
            Vec flatv = bracket.flat();
            if (!vec_is_zero(flatv)) generators.push_back(std::move(flatv));
          }
    const bool by_span = in_span(m.flat(), generators, f).in_span;
    if (by_span != by_trace)
      throw InvariantBreach("trace-zero test disagrees with the explicit commutator span on a small matrix algebra");
  }
  return by_trace;
}

CenterVerdict center_verdict(const FiniteGroupoid& g, const FieldSpec& f) {
  const EffectiveResult eff = is_effective(g);
  const MinimalResult min = is_minimal(g);
  if (!eff.effective || !min.minimal) {
    std::ostringstream os;
    os << "criterion requires an effective minimal groupoid; ";
    if (!eff.effective)
      os << "'" << g.arrow(*eff.witness).name << "' is a non-identity isotropy arrow";
    else
      os << "the unit space splits into more than one orbit";
    return {CenterClass::inapplicable, os.str()};
  }
  const Subspace center = center_basis(g, f);
  const AlgebraElement one = identity_element(g, f);
  if (center.dim() == 1 && center.contains(one))
    return {CenterClass::scalar_multiples_of_identity, "the center is exactly K * 1"};
  throw InvariantBreach("center of an effective minimal groupoid algebra is not K * 1");
}

LieVerdict lie_simplicity_verdict(const FiniteGroupoid& g, const FieldSpec& f) {
  const EffectiveResult eff = is_effective(g);
  const MinimalResult min = is_minimal(g);
  if (!eff.effective || !min.minimal) {
    std::ostringstream os;
    os << "criterion requires an effective minimal groupoid; ";
    if (!eff.effective)
      os << "'" << g.arrow(*eff.witness).name << "' is a non-identity isotropy arrow";
    else
      os << "the unit space splits into more than one orbit";
    return {LieSimplicity::inapplicable, os.str(), std::nullopt};
  }
  if (g.unit_count() == 1) {
    // A_K(G) = K: the commutator subspace is zero.
    return {LieSimplicity::trivial, "A_K(G) = K, so [A, A] = 0", std::nullopt};
  }
  const SpanMembership membership = identity_in_commutator_subspace(g, f);
  if (membership.in_span) {
    return {LieSimplicity::not_simple, "the identity 1 lies in [A, A], so K * 1 is a proper Lie ideal",
            membership.coefficients};
  }
  return {LieSimplicity::simple, "the identity 1 does not lie in [A, A]", std::nullopt};
}

AssocAlgebra steinberg_structure_constants(const FiniteGroupoid& g, const FieldSpec& f) {
  AssocAlgebra alg{f, g.arrow_count(), {}, {}};
  alg.product.assign(static_cast<std::size_t>(alg.dim), std::vector<Vec>());
  for (int a = 0; a < alg.dim; ++a) {
    alg.product[static_cast<std::size_t>(a)].reserve(static_cast<std::size_t>(alg.dim));
    for (int b = 0; b < alg.dim; ++b) {
      Vec prod = zero_element(g, f);
      const int c = g.compose(a, b);
      if (c != -1) prod[static_cast<std::size_t>(c)] = Scalar::one(f);
      alg.product[static_cast<std::size_t>(a)].push_back(std::move(prod));
    }
  }
  alg.identity = identity_element(g, f);
  return alg;
}

}  // namespace liesimp
