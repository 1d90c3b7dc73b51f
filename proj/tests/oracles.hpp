#pragma once

// Independent brute-force oracles used to cross-validate the library's
// closed-form checks.  Deliberately naive: exhaustive enumeration with no
// shared code paths beyond the data structures themselves.

#include <vector>

#include "liesimp/graph.hpp"
#include "liesimp/linalg.hpp"

namespace liesimp::testing {

/// Every hereditary saturated vertex subset, by explicit enumeration of all
/// 2^{|E^0|} subsets (vertex count must stay small).
std::vector<VertexSet> all_hereditary_saturated_subsets(const Graph& g);
bool brute_only_trivial_hs(const Graph& g);

/// A simple cycle in path order (edges e_1..e_n, s(e_i) = r(e_{i+1}),
/// s(e_n) = r(e_1)), rotated so the smallest edge id comes first.  Infinite
/// bundles are modelled as two parallel edges, which reproduces their entry
/// behaviour exactly.
struct BruteCycle {
  std::vector<int> edges;
  bool has_entry = false;
};
std::vector<BruteCycle> brute_simple_cycles(const Graph& g);
bool brute_every_cycle_has_entry(const Graph& g);

/// Span membership over a small prime field by enumerating every coefficient
/// combination (|F|^k candidates); basis size and field must stay small.
bool brute_in_span(const Vec& target, const std::vector<Vec>& basis, const FieldSpec& f);

}  // namespace liesimp::testing
