// Acceptance gate: eight end-to-end criteria covering the worked example,
// the theorem-vs-oracle grid, the matrix-algebra bridge, both center routes,
// brute-force oracle equivalence, the supporting lemmas, the self-similar
// fixtures, and the trace characterization of matrix commutator membership.
// Prints one [PASS]/[FAIL] line per criterion and exits nonzero on any
// failure or budget overrun.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"

#include "liesimp/errors.hpp"
#include "liesimp/field.hpp"
#include "liesimp/graph.hpp"
#include "liesimp/groupoid.hpp"
#include "liesimp/lie.hpp"
#include "liesimp/linalg.hpp"
#include "liesimp/lpa.hpp"
#include "liesimp/selfsimilar.hpp"
#include "liesimp/steinberg.hpp"

using namespace liesimp;
using namespace liesimp::testing;

namespace {

struct Checker {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct XorShift {
  std::uint64_t s;
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

Scalar sc(const FieldSpec& f, std::int64_t n) { return Scalar::from_big_integer(f, BigInt(n)); }

std::vector<FieldSpec> four_fields() {
  return {FieldSpec::rationals(), FieldSpec::prime_field(2), FieldSpec::prime_field(3),
          FieldSpec::prime_field(5)};
}

// ---- criterion 1: the rose with infinitely many loops ---------------------

Checker criterion1() {
  Checker c;
  const Graph g = rose_infinite();
  c.expect(lpa_is_simple(g).simple, "L_K(R_N) was not declared simple");
  for (const FieldSpec& f : four_fields()) {
    const LieVerdict v = lpa_lie_simple(g, f);
    c.expect(v.status == LieSimplicity::simple,
             "[L,L] not declared simple over " + f.to_string());
  }
  return c;
}

// ---- criterion 2: theorem vs. MeatAxe oracle on pair groupoids ------------

Checker criterion2() {
  Checker c;
  int agreements = 0;
  for (int n = 2; n <= 4; ++n) {
    const FiniteGroupoid g = FiniteGroupoid::pair_groupoid(n);
    for (std::int64_t p : {2, 3, 5}) {
      const CrossCheckReport r = cross_check_groupoid(g, p, 20240915u);
      const std::string tag = "P_" + std::to_string(n) + " over F_" + std::to_string(p);
      c.expect(r.agree, "theorem and oracle disagree on " + tag);
      const bool expected = (n % p) != 0;
      c.expect(r.theorem.status ==
                   (expected ? LieSimplicity::simple : LieSimplicity::not_simple),
               "verdict on " + tag + " does not match p does-not-divide n");
      c.expect(r.oracle.simple == expected, "oracle verdict wrong on " + tag);
      c.expect(r.lie_dim == n * n - 1, "dim [A,A] wrong on " + tag);
      if (r.agree) ++agreements;
    }
  }
  c.expect(agreements == 9, "expected 9 agreements, saw " + std::to_string(agreements));
  return c;
}

// ---- criterion 3: the two-vertex line graph is M_2 is A_K(P_2) ------------

Checker criterion3() {
  Checker c;
  const Graph e2 = line_graph(2);
  const FiniteGroupoid p2 = FiniteGroupoid::pair_groupoid(2);
  const FieldSpec q = FieldSpec::rationals();
  const FieldSpec f2 = FieldSpec::prime_field(2);
  c.expect(lpa_is_simple(e2).simple, "L_K(E2) was not declared simple");
  const LieSimplicity graph_q = lpa_lie_simple(e2, q).status;
  const LieSimplicity graph_f2 = lpa_lie_simple(e2, f2).status;
  c.expect(graph_q == LieSimplicity::simple, "E2 not Lie-simple over Q");
  c.expect(graph_f2 == LieSimplicity::not_simple, "E2 unexpectedly Lie-simple over F_2");
  c.expect(lie_simplicity_verdict(p2, q).status == graph_q, "E2 and P_2 disagree over Q");
  c.expect(lie_simplicity_verdict(p2, f2).status == graph_f2, "E2 and P_2 disagree over F_2");
  return c;
}

// ---- criterion 4: center dimension 1 by both routes ------------------------

Checker criterion4() {
  Checker c;
  for (const FiniteGroupoid& g : effective_minimal_corpus()) {
    for (const FieldSpec& f : four_fields()) {
      // center_basis runs the class-function route and the commutant route
      // and throws InvariantBreach unless the two canonical bases agree
      // bit-exactly, so reaching the dimension check certifies agreement.
      const Subspace z = center_basis(g, f);
      const std::string tag = std::to_string(g.unit_count()) + " units over " + f.to_string();
      c.expect(z.dim() == 1, "center dimension != 1 on " + tag);
      c.expect(z.contains(identity_element(g, f)), "center misses the identity on " + tag);
      c.expect(center_verdict(g, f).status == CenterClass::scalar_multiples_of_identity,
               "center verdict not K*1 on " + tag);
    }
  }
  return c;
}

// ---- criterion 5: brute-force oracle equivalence ---------------------------

Checker criterion5() {
  Checker c;
  for (const Graph& g : graph_corpus()) {
    c.expect(only_trivial_hs(g).only_trivial == brute_only_trivial_hs(g),
             "hereditary/saturated triviality disagrees with subset enumeration");
    c.expect(every_cycle_has_entry(g).every_cycle_has_entry == brute_every_cycle_has_entry(g),
             "cycle-entry check disagrees with explicit cycle enumeration");
  }
  XorShift rng{0x5eed5eedULL};
  for (std::int64_t p : {2, 3}) {
    const FieldSpec f = FieldSpec::prime_field(p);
    for (std::size_t dim = 1; dim <= 4; ++dim) {
      for (int trial = 0; trial < 40; ++trial) {
        const std::size_t k = rng.next() % (dim + 1);
        std::vector<Vec> basis(k, zero_vec(dim, f));
        for (auto& v : basis)
          for (std::size_t i = 0; i < dim; ++i)
            v[i] = sc(f, static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(p)));
        Vec target = zero_vec(dim, f);
        for (std::size_t i = 0; i < dim; ++i)
          target[i] = sc(f, static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(p)));
        const SpanMembership fast = in_span(target, basis, f);
        c.expect(fast.in_span == brute_in_span(target, basis, f),
                 "span membership disagrees with exhaustive enumeration over F_" +
                     std::to_string(p));
        if (fast.in_span) {
          Vec recombined = zero_vec(dim, f);
          for (std::size_t i = 0; i < basis.size(); ++i)
            vec_axpy(recombined, (*fast.coefficients)[i], basis[i]);
          c.expect(recombined == target, "span certificate fails to recombine");
        }
      }
    }
  }
  return c;
}

// ---- criterion 6: the supporting lemmas ------------------------------------

bool subset_is_invariant(const FiniteGroupoid& g, const std::vector<bool>& in) {
  for (int a = 0; a < g.arrow_count(); ++a)
    if (in[static_cast<std::size_t>(g.arrow(a).src)] !=
        in[static_cast<std::size_t>(g.arrow(a).rng)])
      return false;
  return true;
}

Checker criterion6() {
  Checker c;
  for (const FiniteGroupoid& g : effective_minimal_corpus()) {
    for (const FieldSpec& f : four_fields()) {
      const std::string tag = std::to_string(g.unit_count()) + " units over " + f.to_string();
      // [[A,A],[A,A]] != 0 for non-singleton effective minimal groupoids.
      if (g.arrow_count() > 1) {
        const Subspace comm = commutator_subspace(g, f);
        bool nonzero = false;
        for (const Vec& x : comm.space.basis())
          for (const Vec& y : comm.space.basis()) {
            Vec bracket = convolve(g, x, y);
            vec_axpy(bracket, sc(f, -1), convolve(g, y, x));
            if (!vec_is_zero(bracket)) nonzero = true;
          }
        c.expect(nonzero, "[[A,A],[A,A]] vanished on " + tag);
      }
      // Indicators of invariant unit subsets are class functions.
      const int n = g.unit_count();
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<bool> in(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u) in[static_cast<std::size_t>(u)] = (mask >> u) & 1;
        if (!subset_is_invariant(g, in)) continue;
        AlgebraElement indicator_sum = zero_element(g, f);
        for (int u = 0; u < n; ++u)
          if (in[static_cast<std::size_t>(u)])
            indicator_sum[static_cast<std::size_t>(g.identity_arrow(u))] = sc(f, 1);
        c.expect(is_class_function(g, indicator_sum).is_class_function,
                 "invariant-subset indicator is not a class function on " + tag);
      }
      // Unit-support of every central element is invariant.
      const Subspace center = center_basis(g, f);
      for (const Vec& z : center.space.basis()) {
        std::vector<bool> support(static_cast<std::size_t>(n), false);
        for (int u = 0; u < n; ++u)
          support[static_cast<std::size_t>(u)] =
              !z[static_cast<std::size_t>(g.identity_arrow(u))].is_zero();
        c.expect(subset_is_invariant(g, support),
                 "central element has non-invariant unit support on " + tag);
      }
    }
  }
  return c;
}

// ---- criterion 7: self-similar action fixtures ------------------------------

Checker criterion7() {
  Checker c;
  const FieldSpec q = FieldSpec::rationals();
  {
    const SelfSimilarAction a = swap_action();  // construction validates
    c.expect(is_hausdorff(a).hausdorff, "the loop-swap action is not Hausdorff");
    const EpReport r = ep_verdict(a, q);
    c.expect(r.simple.has_value() && *r.simple, "the loop-swap algebra is not simple");
    c.expect(r.center.status == CenterClass::scalar_multiples_of_identity,
             "the loop-swap center is not K*1");
  }
  {
    const SelfSimilarAction a = nhaus_action();
    const HausdorffCheck h = is_hausdorff(a);
    c.expect(!h.hausdorff, "the pumping action was declared Hausdorff");
    const auto spell = [&](const std::vector<int>& edges) {
      std::string s;
      for (int e : edges) s += a.graph.edge(e).name;
      return s;
    };
    c.expect(spell(h.pumping_prefix).empty() && spell(h.pumping_cycle) == "a" &&
                 spell(h.pumping_suffix) == "b",
             "non-Hausdorff witness family is not a^k b");
  }
  {
    const SelfSimilarAction a = triv2_action();
    const SlackCheck s = is_slack(a, 1, 0);
    c.expect(s.slack && s.degree == 1, "the trivially-acting generator is not slack with n = 1");
  }
  for (const Graph& g : graph_corpus()) {
    bool admissible = g.bundles().empty();
    for (int v = 0; v < g.vertex_count() && admissible; ++v)
      if (g.incoming(v).empty()) admissible = false;
    if (!admissible) continue;
    const SelfSimilarAction a = SelfSimilarAction::trivial_on(g);
    for (const FieldSpec& f : four_fields()) {
      const EpReport r = ep_verdict(a, f);
      c.expect(r.simple.has_value() && *r.simple == lpa_is_simple(g).simple,
               "trivial-group simplicity differs from the path-algebra verdict");
      c.expect(r.lie.status == lpa_lie_simple(g, f).status,
               "trivial-group Lie verdict differs from the path-algebra verdict");
      c.expect(r.center.status == lpa_center(g, f).status,
               "trivial-group center verdict differs from the path-algebra verdict");
    }
  }
  return c;
}

// ---- criterion 8: trace characterizes matrix commutator membership ---------

Checker criterion8() {
  Checker c;
  for (std::int64_t p : {2, 3, 5}) {
    const FieldSpec f = FieldSpec::prime_field(p);
    for (std::size_t d = 1; d <= 3; ++d) {
      // Explicit span of all matrix-unit commutators [E_ij, E_kl].
      RowSpace span(d * d, f);
      std::vector<Matrix> units;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          Matrix e(d, d, f);
          e.at(i, j) = sc(f, 1);
          units.push_back(e);
        }
      for (const Matrix& x : units)
        for (const Matrix& y : units) span.insert((x * y - y * x).flat());

      const std::string tag = "d = " + std::to_string(d) + " over F_" + std::to_string(p);
      const auto agree = [&](const Matrix& m) {
        const bool by_span = span.contains(m.flat());
        const bool by_trace = m.trace().is_zero();
        const bool by_library = matrix_trace_membership(m);
        return by_span == by_trace && by_library == by_trace;
      };
      for (const Matrix& e : units)
        c.expect(agree(e), "matrix-unit mismatch at " + tag);
      XorShift rng{0xacce97edULL ^ (static_cast<std::uint64_t>(p) << 8) ^ d};
      for (int trial = 0; trial < 100; ++trial) {
        Matrix m(d, d, f);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            m.at(i, j) =
                sc(f, static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(p)));
        c.expect(agree(m), "random-matrix mismatch at " + tag);
      }
    }
  }
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    long budget_ms;  // 0 = no stated budget
    Checker (*run)();
  };
  const std::vector<Entry> entries = {
      {"rose with infinitely many loops: algebra and Lie bracket simple over Q, F2, F3, F5", 1000,
       criterion1},
      {"pair-groupoid grid P_n (n=2,3,4; p=2,3,5): theorem = oracle = \"p does not divide n\"",
       10000, criterion2},
      {"two-vertex line graph matches the 2x2 matrix algebra verdicts over Q and F2", 1000,
       criterion3},
      {"center of every effective minimal fixture has dimension 1 by both routes", 5000,
       criterion4},
      {"closed-form checks equal brute-force enumeration (subsets, cycles, spans)", 30000,
       criterion5},
      {"lemma suite: derived bracket nonzero, invariant indicators central, supports invariant", 0,
       criterion6},
      {"self-similar fixtures: swap simple, pumping non-Hausdorff (a^k b), slack degree 1", 5000,
       criterion7},
      {"trace = 0 characterizes the matrix commutator span (p = 2,3,5; d <= 3)", 0, criterion8},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    Checker result;
    const auto start = std::chrono::steady_clock::now();
    try {
      result = e.run();
    } catch (const std::exception& ex) {
      result.ok = false;
      result.detail = std::string("exception: ") + ex.what();
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (e.budget_ms > 0 && elapsed >= e.budget_ms && result.ok) {
      result.ok = false;
      result.detail = "over the " + std::to_string(e.budget_ms) + " ms budget";
    }
    std::cout << (result.ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": " << e.label
              << " (" << elapsed << " ms";
    if (e.budget_ms > 0) std::cout << ", budget " << e.budget_ms << " ms";
    std::cout << ")";
    if (!result.ok) std::cout << " — " << result.detail;
    std::cout << "\n";
    if (!result.ok) all_ok = false;
  }
  return all_ok ? 0 : 1;
}
