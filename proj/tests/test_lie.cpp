// Generic Lie-algebra machinery and the independent simplicity oracle:
// structure-constant validation (antisymmetry + Jacobi, exhaustive), ideal
// closures with replayable traces, the MeatAxe-style irreducibility oracle
// on algebras with known verdicts, and the theorem-vs-oracle cross-check.

#include <cstdint>
#include <vector>

#include "doctest.h"

#include "fixtures.hpp"
#include "liesimp/errors.hpp"
#include "liesimp/lie.hpp"

using namespace liesimp;
using namespace liesimp::testing;

namespace {

Scalar sc(const FieldSpec& f, std::int64_t n) { return Scalar::from_integer(f, n); }

// Empty (all-zero) bracket tensor of dimension n.
std::vector<std::vector<Vec>> zero_bracket(int n, const FieldSpec& f) {
  return std::vector<std::vector<Vec>>(
      static_cast<std::size_t>(n),
      std::vector<Vec>(static_cast<std::size_t>(n), zero_vec(static_cast<std::size_t>(n), f)));
}

void set_bracket(std::vector<std::vector<Vec>>& b, const FieldSpec& f, int i, int j,
                 const std::vector<std::pair<int, std::int64_t>>& result) {
  for (const auto& [k, c] : result) {
    b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = sc(f, c);
    b[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = sc(f, -c);
  }
}

// sl_2 in the basis (e, h, f): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieAlgebra sl2(const FieldSpec& f) {
  auto b = zero_bracket(3, f);
  set_bracket(b, f, 0, 2, {{1, 1}});    // [e, f] = h
  set_bracket(b, f, 1, 0, {{0, 2}});    // [h, e] = 2e
  set_bracket(b, f, 1, 2, {{2, -2}});   // [h, f] = -2f
  return make_lie_algebra(f, std::move(b));
}

// Heisenberg algebra (x, y, z): [x, y] = z, z central.
LieAlgebra heisenberg(const FieldSpec& f) {
  auto b = zero_bracket(3, f);
  set_bracket(b, f, 0, 1, {{2, 1}});
  return make_lie_algebra(f, std::move(b));
}

Vec basis_vec(int n, int i, const FieldSpec& f) {
  Vec v = zero_vec(static_cast<std::size_t>(n), f);
  v[static_cast<std::size_t>(i)] = Scalar::one(f);
  return v;
}

// Replay an ideal-closure trace step by step and compare with the witness.
void replay_trace(const LieAlgebra& l, const Vec& seed, const LieIdealWitness& w) {
  std::vector<Vec> discovered{seed};
  RowSpace space(static_cast<std::size_t>(l.dim), l.field);
  space.insert(seed);
  for (const ClosureStep& step : w.trace) {
    REQUIRE(step.source_index >= 0);
    REQUIRE(step.source_index < static_cast<int>(discovered.size()));
    const Vec next = lie_bracket(l, discovered[static_cast<std::size_t>(step.source_index)],
                                 basis_vec(l.dim, step.ambient_index, l.field));
    CHECK(space.insert(next));  // every recorded step found a new direction
    discovered.push_back(next);
  }
  // The replayed span is exactly the witness ideal.
  RowSpace target(static_cast<std::size_t>(l.dim), l.field);
  for (const Vec& b : w.basis) target.insert(b);
  CHECK(space == target);
}

}  // namespace

TEST_CASE("make_lie_algebra accepts sl_2 and the Heisenberg algebra") {
  for (std::int64_t p : {0, 2, 3, 5}) {
    const FieldSpec f = p == 0 ? FieldSpec::rationals() : FieldSpec::prime_field(p);
    CHECK_NOTHROW(sl2(f));
    CHECK_NOTHROW(heisenberg(f));
  }
  const LieAlgebra l = sl2(FieldSpec::rationals());
  CHECK(l.dim == 3);
  // [e, f] = h through the public bracket.
  CHECK(lie_bracket(l, basis_vec(3, 0, l.field), basis_vec(3, 2, l.field)) ==
        basis_vec(3, 1, l.field));
}

TEST_CASE("make_lie_algebra rejects corrupted structure constants") {
  const FieldSpec q = FieldSpec::rationals();

  // Not cubical.
  auto ragged = zero_bracket(2, q);
  ragged[0][1].push_back(Scalar::zero(q));
  CHECK_THROWS_AS(make_lie_algebra(q, ragged), ValidationError);
  auto missing_row = zero_bracket(2, q);
  missing_row[1].pop_back();
  CHECK_THROWS_AS(make_lie_algebra(q, missing_row), ValidationError);

  // Alternating violated: [e_0, e_0] = e_1.
  auto diag = zero_bracket(2, q);
  diag[0][0][1] = Scalar::one(q);
  CHECK_THROWS_AS(make_lie_algebra(q, diag), ValidationError);

  // Antisymmetry violated: [e_0, e_1] = [e_1, e_0] = e_0 != 0.
  auto sym = zero_bracket(2, q);
  sym[0][1][0] = Scalar::one(q);
  sym[1][0][0] = Scalar::one(q);
  CHECK_THROWS_AS(make_lie_algebra(q, sym), ValidationError);

  // Jacobi violated: sl_2 with the sign of [h, f] flipped (char != 2).
  const FieldSpec f5 = FieldSpec::prime_field(5);
  auto bad = zero_bracket(3, f5);
  set_bracket(bad, f5, 0, 2, {{1, 1}});
  set_bracket(bad, f5, 1, 0, {{0, 2}});
  set_bracket(bad, f5, 1, 2, {{2, 2}});  // should be -2
  CHECK_THROWS_AS(make_lie_algebra(f5, bad), ValidationError);
}

TEST_CASE("adjoint_matrix columns implement bracketing") {
  const FieldSpec f7 = FieldSpec::prime_field(7);
  const LieAlgebra l = sl2(f7);
  Vec x = zero_vec(3, f7);
  x[0] = sc(f7, 2);
  x[1] = sc(f7, 3);
  x[2] = sc(f7, 1);
  const Matrix ad = adjoint_matrix(l, x);
  for (int j = 0; j < 3; ++j)
    CHECK(ad.apply(basis_vec(3, j, f7)) == lie_bracket(l, x, basis_vec(3, j, f7)));
}

TEST_CASE("lie_from_algebra builds the commutator-subspace Lie algebra of M_2") {
  const FieldSpec f3 = FieldSpec::prime_field(3);
  const AssocAlgebra a = steinberg_structure_constants(FiniteGroupoid::pair_groupoid(2), f3);
  const LieFromAlgebra lf = lie_from_algebra(a);
  CHECK(lf.lie.dim == 3);  // sl_2 inside M_2
  CHECK(lf.ambient_basis.size() == 3);
  // The embedded bracket matches the ambient commutator: check on basis pairs.
  for (int i = 0; i < lf.lie.dim; ++i)
    for (int j = 0; j < lf.lie.dim; ++j) {
      // Expand [e_i, e_j] back into the ambient algebra.
      Vec expanded = zero_vec(static_cast<std::size_t>(a.dim), f3);
      const Vec& coords = lf.lie.bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (std::size_t k = 0; k < lf.ambient_basis.size(); ++k)
        vec_axpy(expanded, coords[k], lf.ambient_basis[k]);
      // Ambient commutator x*y - y*x via the structure constants.
      const Vec& x = lf.ambient_basis[static_cast<std::size_t>(i)];
      const Vec& y = lf.ambient_basis[static_cast<std::size_t>(j)];
      Vec commutator = zero_vec(static_cast<std::size_t>(a.dim), f3);
      for (int r = 0; r < a.dim; ++r)
        for (int c = 0; c < a.dim; ++c) {
          if (x[static_cast<std::size_t>(r)].is_zero() || y[static_cast<std::size_t>(c)].is_zero()) continue;
          const Scalar w = x[static_cast<std::size_t>(r)] * y[static_cast<std::size_t>(c)];
          vec_axpy(commutator, w, a.product[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
          vec_axpy(commutator, w.negated(), a.product[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
        }
      CHECK(expanded == commutator);
    }
}

TEST_CASE("ideal_closure: whole algebra from any seed of a simple algebra, replayable traces") {
  const FieldSpec f5 = FieldSpec::prime_field(5);
  const LieAlgebra l = sl2(f5);
  for (int i = 0; i < 3; ++i) {
    const Vec seed = basis_vec(3, i, f5);
    const LieIdealWitness w = ideal_closure(l, seed);
    CHECK(w.basis.size() == 3);  // sl_2 over F_5 is simple
    replay_trace(l, seed, w);
  }

  // The center of the Heisenberg algebra closes to itself.
  const LieAlgebra h = heisenberg(f5);
  const LieIdealWitness z = ideal_closure(h, basis_vec(3, 2, f5));
  CHECK(z.basis.size() == 1);
  CHECK(z.trace.empty());
  replay_trace(h, basis_vec(3, 2, f5), z);

  CHECK_THROWS_AS(ideal_closure(l, zero_vec(3, f5)), ValidationError);
  CHECK_THROWS_AS(ideal_closure(l, zero_vec(2, f5)), ValidationError);
}

TEST_CASE("simplicity oracle rejects rational inputs") {
  CHECK_THROWS_AS(is_simple_finite_field(sl2(FieldSpec::rationals()), 1), ValidationError);
}

TEST_CASE("simplicity oracle on algebras with known verdicts") {
  // sl_2: simple iff char != 2 (h is central over F_2).
  for (std::int64_t p : {3, 5, 7}) {
    const SimplicityResult r = is_simple_finite_field(sl2(FieldSpec::prime_field(p)), 42);
    CHECK(r.simple);
    CHECK_FALSE(r.witness.has_value());
  }
  const SimplicityResult r2 = is_simple_finite_field(sl2(FieldSpec::prime_field(2)), 42);
  CHECK_FALSE(r2.simple);
  REQUIRE(r2.witness.has_value());

  // The Heisenberg algebra is never simple: its derived algebra is the center.
  for (std::int64_t p : {2, 3, 5}) {
    const FieldSpec f = FieldSpec::prime_field(p);
    const SimplicityResult r = is_simple_finite_field(heisenberg(f), 7);
    CHECK_FALSE(r.simple);
    REQUIRE(r.witness.has_value());
  }

  // Abelian algebras are not simple (including the 1-dimensional one).
  const FieldSpec f3 = FieldSpec::prime_field(3);
  CHECK_FALSE(is_simple_finite_field(make_lie_algebra(f3, zero_bracket(1, f3)), 1).simple);
  const SimplicityResult ab2 = is_simple_finite_field(make_lie_algebra(f3, zero_bracket(2, f3)), 1);
  CHECK_FALSE(ab2.simple);
  REQUIRE(ab2.witness.has_value());
}

TEST_CASE("not-simple witnesses are proper nonzero bracket-closed ideals") {
  const FieldSpec f2 = FieldSpec::prime_field(2);
  for (const LieAlgebra& l : {sl2(f2), heisenberg(f2), heisenberg(FieldSpec::prime_field(5))}) {
    const SimplicityResult r = is_simple_finite_field(l, 11);
    REQUIRE_FALSE(r.simple);
    REQUIRE(r.witness.has_value());
    const std::vector<Vec>& basis = r.witness->basis;
    CHECK(basis.size() > 0);
    CHECK(static_cast<int>(basis.size()) < l.dim);
    RowSpace ideal(static_cast<std::size_t>(l.dim), l.field);
    for (const Vec& b : basis) CHECK(ideal.insert(b));  // independent
    for (const Vec& b : basis)
      for (int i = 0; i < l.dim; ++i)
        CHECK(ideal.contains(lie_bracket(l, b, basis_vec(l.dim, i, l.field))));
  }
}

TEST_CASE("the oracle verdict is seed-independent") {
  for (std::uint64_t seed : {1ULL, 7ULL, 123456789ULL}) {
    CHECK(is_simple_finite_field(sl2(FieldSpec::prime_field(5)), seed).simple);
    CHECK_FALSE(is_simple_finite_field(sl2(FieldSpec::prime_field(2)), seed).simple);
    CHECK_FALSE(is_simple_finite_field(heisenberg(FieldSpec::prime_field(3)), seed).simple);
  }
}

TEST_CASE("theorem and oracle agree on the pair-groupoid grid") {
  for (int n = 2; n <= 4; ++n) {
    const FiniteGroupoid g = FiniteGroupoid::pair_groupoid(n);
    for (std::int64_t p : {2, 3, 5}) {
      const CrossCheckReport report = cross_check_groupoid(g, p, 1);
      CHECK(report.agree);
      CHECK(report.lie_dim == n * n - 1);
      const bool expect_simple = n % p != 0;
      CHECK((report.theorem.status == LieSimplicity::simple) == expect_simple);
      CHECK(report.oracle.simple == expect_simple);
    }
  }
}

TEST_CASE("cross-check refuses groupoids outside the criterion's scope") {
  CHECK_THROWS_AS(cross_check_groupoid(cyclic_group_groupoid(2), 3, 1), ValidationError);
  const FiniteGroupoid split = FiniteGroupoid::disjoint_union(
      FiniteGroupoid::pair_groupoid(2), FiniteGroupoid::from_group_table({"t"}, {{"t"}}, "t", "w"));
  CHECK_THROWS_AS(cross_check_groupoid(split, 3, 1), ValidationError);
}
