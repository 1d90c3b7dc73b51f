#include "liesimp/lie.hpp"

#include <random>
#include <sstream>

#include "liesimp/errors.hpp"
#include "liesimp/fppoly.hpp"

namespace liesimp {

namespace {

// [x, e_k] for a coefficient vector x.
Vec bracket_with_basis(const LieAlgebra& l, const Vec& x, int k) {
  Vec out = zero_vec(static_cast<std::size_t>(l.dim), l.field);
  for (int i = 0; i < l.dim; ++i) {
    const Scalar& c = x[static_cast<std::size_t>(i)];
    if (!c.is_zero()) vec_axpy(out, c, l.bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace

LieAlgebra make_lie_algebra(const FieldSpec& f, std::vector<std::vector<Vec>> bracket) {
  LieAlgebra l{f, static_cast<int>(bracket.size()), {}};
  const std::size_t n = bracket.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (bracket[i].size() != n) throw ValidationError("structure-constant tensor is not cubical");
    for (std::size_t j = 0; j < n; ++j)
      if (bracket[i][j].size() != n) throw ValidationError("structure-constant tensor is not cubical");
  }
  l.bracket = std::move(bracket);
  const auto name = [](std::size_t i) { return "e" + std::to_string(i); };
  for (std::size_t i = 0; i < n; ++i)
    if (!vec_is_zero(l.bracket[i][i]))
      throw ValidationError("alternating law fails: [" + name(i) + ", " + name(i) + "] != 0");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec sum = l.bracket[i][j];
      vec_axpy(sum, Scalar::one(f), l.bracket[j][i]);
      if (!vec_is_zero(sum))
        throw ValidationError("antisymmetry fails: [" + name(i) + ", " + name(j) + "] != -[" + name(j) + ", " +
                              name(i) + "]");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec sum = bracket_with_basis(l, l.bracket[i][j], static_cast<int>(k));
        vec_axpy(sum, Scalar::one(f), bracket_with_basis(l, l.bracket[j][k], static_cast<int>(i)));
        vec_axpy(sum, Scalar::one(f), bracket_with_basis(l, l.bracket[k][i], static_cast<int>(j)));
        if (!vec_is_zero(sum))
          throw ValidationError("Jacobi identity fails on (" + name(i) + ", " + name(j) + ", " + name(k) + ")");
      }
  return l;
}

Vec lie_bracket(const LieAlgebra& l, const Vec& x, const Vec& y) {
  Vec out = zero_vec(static_cast<std::size_t>(l.dim), l.field);
  for (int j = 0; j < l.dim; ++j) {
    const Scalar& c = y[static_cast<std::size_t>(j)];
    if (!c.is_zero()) vec_axpy(out, c, bracket_with_basis(l, x, j));
  }
  return out;
}

Matrix adjoint_matrix(const LieAlgebra& l, const Vec& x) {
  const std::size_t n = static_cast<std::size_t>(l.dim);
  Matrix m(n, n, l.field);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec col = bracket_with_basis(l, x, static_cast<int>(j));
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
  }
  return m;
}

namespace {

Vec assoc_product(const AssocAlgebra& a, const Vec& x, const Vec& y) {
  Vec out = zero_vec(static_cast<std::size_t>(a.dim), a.field);
  for (int i = 0; i < a.dim; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < a.dim; ++j) {
      if (y[static_cast<std::size_t>(j)].is_zero()) continue;
      vec_axpy(out, x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)],
               a.product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

Vec assoc_commutator(const AssocAlgebra& a, const Vec& x, const Vec& y) {
  Vec out = assoc_product(a, x, y);
  vec_axpy(out, Scalar::one(a.field).negated(), assoc_product(a, y, x));
  return out;
}

}  // namespace

LieFromAlgebra lie_from_algebra(const AssocAlgebra& a) {
  const std::size_t n = static_cast<std::size_t>(a.dim);
  RowSpace span(n, a.field);
  for (int i = 0; i < a.dim; ++i) {
    Vec ei = zero_vec(n, a.field);
    ei[static_cast<std::size_t>(i)] = Scalar::one(a.field);
    for (int j = i + 1; j < a.dim; ++j) {
      Vec ej = zero_vec(n, a.field);
      ej[static_cast<std::size_t>(j)] = Scalar::one(a.field);
      const Vec c = assoc_commutator(a, ei, ej);
      if (!vec_is_zero(c)) span.insert(c);
    }
  }
  const std::vector<Vec> basis = span.basis();
  const std::size_t m = basis.size();
  std::vector<std::vector<Vec>> bracket(m, std::vector<Vec>());
  for (std::size_t i = 0; i < m; ++i) {
    bracket[i].reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      const Vec c = assoc_commutator(a, basis[i], basis[j]);
      const auto coords = span.coordinates(c);
      if (!coords)
        throw InvariantBreach("commutator of commutator-subspace elements left the commutator subspace");
      bracket[i].push_back(*coords);
    }
  }
  return LieFromAlgebra{make_lie_algebra(a.field, std::move(bracket)), basis};
}

LieIdealWitness ideal_closure(const LieAlgebra& l, const Vec& v) {
  if (static_cast<int>(v.size()) != l.dim) throw ValidationError("ideal_closure: vector has the wrong dimension");
  if (vec_is_zero(v)) throw ValidationError("ideal_closure requires a nonzero vector");
  RowSpace space(static_cast<std::size_t>(l.dim), l.field);
  space.insert(v);
  std::vector<Vec> discovered{v};
  std::vector<ClosureStep> trace;
  for (std::size_t idx = 0; idx < discovered.size(); ++idx) {
    for (int i = 0; i < l.dim; ++i) {
      const Vec w = bracket_with_basis(l, discovered[idx], i);
      // bracket_with_basis gives [x, e_i]; membership is the same as for
      // [e_i, x] = -[x, e_i].
      if (!vec_is_zero(w) && space.insert(w)) {
        discovered.push_back(w);
        trace.push_back({i, static_cast<int>(idx)});
      }
    }
  }
  LieIdealWitness out{space.basis(), std::move(trace)};
  for (const Vec& b : out.basis)
    for (int i = 0; i < l.dim; ++i)
      if (!space.contains(bracket_with_basis(l, b, i)))
        throw InvariantBreach("ideal_closure result is not bracket-closed");
  return out;
}

namespace {

std::int64_t residue_of(const Scalar& s) { return s.residue_value(); }

// Spin of a vector under a set of matrices (submodule closure).
RowSpace spin(const std::vector<Matrix>& generators, const Vec& seed, const FieldSpec& f) {
  const std::size_t n = seed.size();
  RowSpace space(n, f);
  space.insert(seed);
  std::vector<Vec> discovered{seed};
  for (std::size_t idx = 0; idx < discovered.size(); ++idx)
    for (const Matrix& g : generators) {
      Vec w = g.apply(discovered[idx]);
      if (!vec_is_zero(w) && space.insert(w)) discovered.push_back(std::move(w));
    }
  return space;
}

// Minimal polynomial of a matrix by Krylov iteration on flattened powers.
fppoly::Poly minimal_polynomial(const Matrix& m, std::int64_t p) {
  const FieldSpec f = m.field();
  const std::size_t n = m.rows();
  std::vector<Vec> powers_flat{Matrix::identity(n, f).flat()};
  Matrix power = Matrix::identity(n, f);
  for (;;) {
    power = power * m;
    const Vec target = power.flat();
    const SpanMembership hit = in_span(target, powers_flat, f);
    if (hit.in_span) {
      // power^k = sum c_i power^i  =>  minpoly = x^k - sum c_i x^i.
      fppoly::Poly mp(powers_flat.size() + 1, 0);
      mp.back() = 1;
      for (std::size_t i = 0; i < hit.coefficients->size(); ++i)
        mp[i] = -residue_of((*hit.coefficients)[i]);
      return fppoly::normalize(std::move(mp), p);
    }
    powers_flat.push_back(target);
    if (powers_flat.size() > n * n + 1) throw InvariantBreach("minimal polynomial iteration failed to terminate");
  }
}

Matrix evaluate_poly(const fppoly::Poly& poly, const Matrix& m) {
  const FieldSpec f = m.field();
  const std::size_t n = m.rows();
  Matrix out(n, n, f);
  for (std::size_t d = poly.size(); d-- > 0;) {
    out = out * m;
    if (poly[d] != 0) {
      const Scalar c = Scalar::from_integer(f, poly[d]);
      for (std::size_t i = 0; i < n; ++i) out.at(i, i) += c;
    }
  }
  return out;
}

SimplicityResult not_simple_via(const LieAlgebra& l, const Vec& seed, const std::string& reason) {
  SimplicityResult out;
  out.simple = false;
  out.reason = reason;
  out.witness = ideal_closure(l, seed);
  if (static_cast<int>(out.witness->basis.size()) >= l.dim)
    throw InvariantBreach("claimed proper ideal closed up to the whole algebra");
  return out;
}

}  // namespace

SimplicityResult is_simple_finite_field(const LieAlgebra& l, std::uint64_t seed) {
  if (l.field.kind() != FieldKind::prime_field)
    throw ValidationError("the simplicity oracle supports prime fields only; the closed-form criterion is the "
                          "authority over the rationals");
  const std::int64_t p = l.field.characteristic();
  const int n = l.dim;
  if (n == 0) return {false, "[L, L] = 0 (the zero algebra is not simple)", std::nullopt};
  // Shortcut 1: derived subalgebra.
  RowSpace derived(static_cast<std::size_t>(n), l.field);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!vec_is_zero(l.bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]))
        derived.insert(l.bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  if (derived.dim() == 0) {
    if (n == 1) return {false, "[L, L] = 0 (abelian)", std::nullopt};
    Vec e0 = zero_vec(static_cast<std::size_t>(n), l.field);
    e0[0] = Scalar::one(l.field);
    return not_simple_via(l, e0, "[L, L] = 0 (abelian)");
  }
  if (static_cast<int>(derived.dim()) < n)
    return not_simple_via(l, derived.basis()[0], "the derived algebra [L, L] is a proper ideal");
  // Shortcut 2: the center (an ideal; proper since L is not abelian).
  {
    Matrix stacked(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), static_cast<std::size_t>(n), l.field);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
          stacked.at(static_cast<std::size_t>(i * n + k), static_cast<std::size_t>(j)) =
              l.bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    const std::vector<Vec> center = nullspace_basis(stacked);
    if (!center.empty()) return not_simple_via(l, center[0], "the center is a nonzero proper ideal");
  }
  // MeatAxe on the adjoint representation: ideals = invariant subspaces.
  std::vector<Matrix> generators;
  std::vector<Matrix> transposed;
  for (int i = 0; i < n; ++i) {
    Vec ei = zero_vec(static_cast<std::size_t>(n), l.field);
    ei[static_cast<std::size_t>(i)] = Scalar::one(l.field);
    generators.push_back(adjoint_matrix(l, ei));
    transposed.push_back(generators.back().transposed());
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int max_attempts = 64;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    // Random element of the unital enveloping algebra of the generators.
    Matrix theta(static_cast<std::size_t>(n), static_cast<std::size_t>(n), l.field);
    for (const Matrix& g : generators) {
      const std::int64_t c = coeff(rng);
      if (c != 0) theta = theta + g.scaled(Scalar::from_integer(l.field, c));
    }
    for (int extra = 0; extra < attempt && extra < 4; ++extra) {
      const Matrix prod = generators[static_cast<std::size_t>(pick(rng))] * generators[static_cast<std::size_t>(pick(rng))];
      const std::int64_t c = coeff(rng);
      if (c != 0) theta = theta + prod.scaled(Scalar::from_integer(l.field, c));
    }
    if (attempt % 2 == 1) {
      const Scalar c = Scalar::from_integer(l.field, coeff(rng));
      for (int i = 0; i < n; ++i) theta.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) += c;
    }
    const fppoly::Poly mp = minimal_polynomial(theta, p);
    if (fppoly::degree(mp) < 1) continue;  // theta scalar-like: useless
    const auto factors = fppoly::distinct_irreducible_factors(mp, p, seed + static_cast<std::uint64_t>(attempt));
    for (const fppoly::Poly& factor : factors) {
      const Matrix nmat = evaluate_poly(factor, theta);
      const std::vector<Vec> kernel = nullspace_basis(nmat);
      if (kernel.empty()) throw InvariantBreach("irreducible factor of the minimal polynomial has trivial kernel");
      for (const Vec& v : kernel) {
        const RowSpace orbit = spin(generators, v, l.field);
        if (static_cast<int>(orbit.dim()) < n) return not_simple_via(l, v, "invariant subspace found by adjoint spin-up");
      }
      if (static_cast<int>(kernel.size()) == fppoly::degree(factor)) {
        // Norton's criterion is conclusive for this factor: all kernel spins
        // were full, so check one dual spin under the transposed action.
        const Matrix nt = nmat.transposed();
        const std::vector<Vec> dual_kernel = nullspace_basis(nt);
        if (static_cast<int>(dual_kernel.size()) != fppoly::degree(factor))
          throw InvariantBreach("transpose kernel dimension mismatch");
        const RowSpace dual_orbit = spin(transposed, dual_kernel[0], l.field);
        if (static_cast<int>(dual_orbit.dim()) == n)
          return {true, "adjoint representation certified irreducible (Norton criterion)", std::nullopt};
        // The annihilator of the dual orbit is a proper nonzero ideal.
        const std::vector<Vec> dual_basis = dual_orbit.basis();
        Matrix rows(dual_basis.size(), static_cast<std::size_t>(n), l.field);
        for (std::size_t r = 0; r < dual_basis.size(); ++r)
          for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) rows.at(r, c) = dual_basis[r][c];
        const std::vector<Vec> perp = nullspace_basis(rows);
        if (perp.empty()) throw InvariantBreach("proper dual spin has a zero annihilator");
        return not_simple_via(l, perp[0], "invariant subspace found via the dual (transposed) spin-up");
      }
    }
  }
  // Exhaustive fallback over 1-dimensional subspaces, when enumerable.
  BigInt count = 1;
  for (int i = 0; i < n; ++i) count *= p;
  const bool enumerable = n <= 6 || count <= 1000000;
  if (!enumerable)
    throw std::runtime_error("simplicity oracle inconclusive: randomized test exhausted and the space is too "
                             "large to enumerate");
  // Projective representatives: first nonzero coordinate equal to 1.
  const std::int64_t hard_cap = 2000000;
  std::int64_t examined = 0;
  std::vector<std::int64_t> digits(static_cast<std::size_t>(n), 0);
  for (int lead = 0; lead < n; ++lead) {
    // coordinates before `lead` are zero, coordinate `lead` is one.
    const int free_count = n - lead - 1;
    std::vector<std::int64_t> tail(static_cast<std::size_t>(free_count), 0);
    for (;;) {
      if (++examined > hard_cap)
        throw std::runtime_error("simplicity oracle inconclusive: enumeration exceeded the representative cap");
      Vec v = zero_vec(static_cast<std::size_t>(n), l.field);
      v[static_cast<std::size_t>(lead)] = Scalar::one(l.field);
      for (int i = 0; i < free_count; ++i)
        v[static_cast<std::size_t>(lead + 1 + i)] = Scalar::from_integer(l.field, tail[static_cast<std::size_t>(i)]);
      const LieIdealWitness closure = ideal_closure(l, v);
      if (static_cast<int>(closure.basis.size()) < n) {
        SimplicityResult out;
        out.simple = false;
        out.reason = "proper ideal found by exhaustive one-dimensional closure";
        out.witness = closure;
        return out;
      }
      int pos = free_count - 1;
      while (pos >= 0 && tail[static_cast<std::size_t>(pos)] == p - 1) tail[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++tail[static_cast<std::size_t>(pos)];
    }
  }
  return {true, "no proper ideal exists (exhaustive one-dimensional closures)", std::nullopt};
}

CrossCheckReport cross_check_groupoid(const FiniteGroupoid& g, std::int64_t p, std::uint64_t seed) {
  const EffectiveResult eff = is_effective(g);
  if (!eff.effective)
    throw ValidationError("cross-check requires an effective groupoid; '" + g.arrow(*eff.witness).name +
                          "' is a non-identity isotropy arrow");
  const MinimalResult min = is_minimal(g);
  if (!min.minimal) throw ValidationError("cross-check requires a minimal groupoid (single orbit)");
  const FieldSpec f = FieldSpec::prime_field(p);
  CrossCheckReport report;
  report.theorem = lie_simplicity_verdict(g, f);
  const LieFromAlgebra lie = lie_from_algebra(steinberg_structure_constants(g, f));
  report.lie_dim = lie.lie.dim;
  report.oracle = is_simple_finite_field(lie.lie, seed);
  const bool theorem_simple = report.theorem.status == LieSimplicity::simple;
  report.agree = theorem_simple == report.oracle.simple;
  if (!report.agree)
    throw InvariantBreach("closed-form Lie-simplicity criterion disagrees with the independent oracle");
  return report;
}

}  // namespace liesimp
