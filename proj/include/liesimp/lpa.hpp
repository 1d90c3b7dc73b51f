#pragma once

#include <cstdint>
#include <vector>

#include "liesimp/graph.hpp"
#include "liesimp/linalg.hpp"
#include "liesimp/verdicts.hpp"

namespace liesimp {

/// Integer preimage of the B-vectors: row i is (a_{ij})_j - e_i when vertex
/// v_i is Regular (a_{ij} = number of edges with range v_i and source v_j)
/// and the zero row otherwise.  Computed once; every field sees the
/// entrywise reduction of this matrix.
std::vector<std::vector<std::int64_t>> b_vector_integer_matrix(const Graph& g);

/// The B-vectors of the graph over the given field, one per vertex in
/// declaration order.
std::vector<Vec> b_vectors(const Graph& g, const FieldSpec& f);

/// Is the vertex combination sum_i coeffs[i] * v_i a sum of commutators in
/// L_K(E)?  Exactly when coeffs lies in the span of the B-vectors; the
/// certificate gives the spanning coefficients.
SpanMembership vertex_combo_in_commutator(const Graph& g, const FieldSpec& f, const Vec& coeffs);

/// Lie simplicity of [L_K(E), L_K(E)] for a simple unital L_K(E): simple iff
/// the all-ones vector is outside the span of the B-vectors.  Inapplicable
/// when L_K(E) itself is not simple; Trivial when L_K(E) = K.
LieVerdict lpa_lie_simple(const Graph& g, const FieldSpec& f);

/// Center of L_K(E): K times the identity for simple unital L_K(E) (finitely
/// many vertices make it unital); Inapplicable when not simple.
CenterVerdict lpa_center(const Graph& g, const FieldSpec& f);

}  // namespace liesimp
