#include "liesimp/lpa.hpp"

#include <sstream>

namespace liesimp {

std::vector<std::vector<std::int64_t>> b_vector_integer_matrix(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n),
                                              std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    if (classify_vertex(g, i) != VertexClass::regular) continue;
    auto& row = rows[static_cast<std::size_t>(i)];
    for (int e : g.incoming(i)) row[static_cast<std::size_t>(g.edge(e).src)] += 1;
    row[static_cast<std::size_t>(i)] -= 1;
  }
  return rows;
}

std::vector<Vec> b_vectors(const Graph& g, const FieldSpec& f) {
  const auto integer_rows = b_vector_integer_matrix(g);
  std::vector<Vec> out;
  out.reserve(integer_rows.size());
  for (const auto& row : integer_rows) {
    Vec v;
    v.reserve(row.size());
    for (std::int64_t entry : row) v.push_back(Scalar::from_integer(f, entry));
    out.push_back(std::move(v));
  }
  return out;
}

SpanMembership vertex_combo_in_commutator(const Graph& g, const FieldSpec& f, const Vec& coeffs) {
  if (static_cast<int>(coeffs.size()) != g.vertex_count())
    throw ValidationError("vertex coefficient vector length must equal the vertex count");
  return in_span(coeffs, b_vectors(g, f), f);
}

namespace {

bool is_trivial_algebra(const Graph& g) {
  return g.vertex_count() == 1 && g.edge_count() == 0 && g.bundles().empty();
}

}  // namespace

LieVerdict lpa_lie_simple(const Graph& g, const FieldSpec& f) {
  const LpaSimplicity s = lpa_is_simple(g);
  if (!s.simple) {
    return {LieSimplicity::inapplicable, "L_K(E) is not simple, so the Lie criterion does not apply: " + s.describe(g),
            std::nullopt};
  }
  if (is_trivial_algebra(g)) {
    return {LieSimplicity::trivial, "L_K(E) = K, so [L, L] = 0", std::nullopt};
  }
  const Vec all_ones(static_cast<std::size_t>(g.vertex_count()), Scalar::one(f));
  SpanMembership membership = in_span(all_ones, b_vectors(g, f), f);
  if (membership.in_span) {
    return {LieSimplicity::not_simple,
            "the identity sum of vertices is a sum of commutators: (1,...,1) lies in the span of the B-vectors",
            std::move(membership.coefficients)};
  }
  return {LieSimplicity::simple, "(1,...,1) is outside the span of the B-vectors", std::nullopt};
}

CenterVerdict lpa_center(const Graph& g, const FieldSpec&) {
  const LpaSimplicity s = lpa_is_simple(g);
  if (!s.simple) {
    return {CenterClass::inapplicable, "L_K(E) is not simple: " + s.describe(g)};
  }
  // Finitely many vertices make L_K(E) unital with 1 = sum of vertices; the
  // center of a simple unital algebra over K is K * 1.
  return {CenterClass::scalar_multiples_of_identity, "simple unital algebra: center is K * 1"};
}

}  // namespace liesimp
