#include "oracles.hpp"

#include <algorithm>
#include <functional>

#include "liesimp/errors.hpp"

namespace liesimp::testing {

std::vector<VertexSet> all_hereditary_saturated_subsets(const Graph& g) {
  const int nv = g.vertex_count();
  if (nv > 20) throw ValidationError("subset enumeration oracle limited to 20 vertices");
  std::vector<VertexSet> out;
  for (unsigned long mask = 0; mask < (1UL << nv); ++mask) {
    const auto in = [&](int v) { return (mask >> v) & 1UL; };
    bool ok = true;
    // Hereditary: r(e) in S forces s(e) in S, bundles included.
    for (const GraphEdge& e : g.edges())
      if (in(e.rng) && !in(e.src)) ok = false;
    for (const InfiniteBundle& b : g.bundles())
      if (in(b.rng) && !in(b.src)) ok = false;
    // Saturated: a Regular vertex whose incoming edges all start inside S
    // must itself lie in S.
    for (int v = 0; ok && v < nv; ++v) {
      if (classify_vertex(g, v) != VertexClass::regular) continue;
      bool all_inside = true;
      for (int e : g.incoming(v))
        if (!in(g.edge(e).src)) all_inside = false;
      if (all_inside && !in(v)) ok = false;
    }
    if (!ok) continue;
    VertexSet s;
    for (int v = 0; v < nv; ++v)
      if (in(v)) s.insert(v);
    out.push_back(std::move(s));
  }
  return out;
}

bool brute_only_trivial_hs(const Graph& g) {
  for (const VertexSet& s : all_hereditary_saturated_subsets(g))
    if (!s.empty() && static_cast<int>(s.size()) != g.vertex_count()) return false;
  return true;
}

namespace {

struct ExpandedEdge {
  int src;
  int rng;
  int id;  // original edge id, or edge_count() + k for bundle copies
};

std::vector<ExpandedEdge> expand(const Graph& g) {
  std::vector<ExpandedEdge> out;
  for (int e = 0; e < g.edge_count(); ++e) out.push_back({g.edge(e).src, g.edge(e).rng, e});
  int next = g.edge_count();
  for (const InfiniteBundle& b : g.bundles()) {
    out.push_back({b.src, b.rng, next++});
    out.push_back({b.src, b.rng, next++});
  }
  return out;
}

}  // namespace

std::vector<BruteCycle> brute_simple_cycles(const Graph& g) {
  const std::vector<ExpandedEdge> edges = expand(g);
  const int nv = g.vertex_count();
  std::vector<BruteCycle> out;
  std::vector<bool> on_walk(static_cast<std::size_t>(nv), false);
  std::vector<int> walk;  // indices into `edges`, in arc-traversal order
  for (int anchor = 0; anchor < nv; ++anchor) {
    // Anchored at the smallest vertex of the cycle: every simple cycle is
    // produced exactly once.
    std::function<void(int)> dfs = [&](int at) {
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].src != at) continue;
        const int to = edges[i].rng;
        if (to == anchor) {
          walk.push_back(static_cast<int>(i));
          BruteCycle c;
          // Vertices on the cycle (as ranges of its edges).
          VertexSet cycle_vertices;
          for (int idx : walk) cycle_vertices.insert(edges[static_cast<std::size_t>(idx)].rng);
          // An entry is any non-cycle edge pointing into a cycle vertex.
          for (std::size_t j = 0; j < edges.size(); ++j) {
            if (std::find(walk.begin(), walk.end(), static_cast<int>(j)) != walk.end()) continue;
            if (cycle_vertices.count(edges[j].rng)) {
              c.has_entry = true;
              break;
            }
          }
          // Path order is the reverse of arc-traversal order.
          for (auto it = walk.rbegin(); it != walk.rend(); ++it)
            c.edges.push_back(edges[static_cast<std::size_t>(*it)].id);
          const auto smallest = std::min_element(c.edges.begin(), c.edges.end());
          std::rotate(c.edges.begin(), smallest, c.edges.end());
          out.push_back(std::move(c));
          walk.pop_back();
          continue;
        }
        if (to < anchor || on_walk[static_cast<std::size_t>(to)]) continue;
        on_walk[static_cast<std::size_t>(to)] = true;
        walk.push_back(static_cast<int>(i));
        dfs(to);
        walk.pop_back();
        on_walk[static_cast<std::size_t>(to)] = false;
      }
    };
    dfs(anchor);
  }
  return out;
}

bool brute_every_cycle_has_entry(const Graph& g) {
  for (const BruteCycle& c : brute_simple_cycles(g))
    if (!c.has_entry) return false;
  return true;
}

bool brute_in_span(const Vec& target, const std::vector<Vec>& basis, const FieldSpec& f) {
  if (f.kind() != FieldKind::prime_field)
    throw ValidationError("exhaustive span oracle requires a prime field");
  const std::int64_t p = f.characteristic();
  const std::size_t k = basis.size();
  for (const Vec& b : basis)
    if (b.size() != target.size()) throw ValidationError("span oracle: dimension mismatch");
  std::vector<std::int64_t> coeffs(k, 0);
  for (;;) {
    Vec combo = zero_vec(target.size(), f);
    for (std::size_t i = 0; i < k; ++i) vec_axpy(combo, Scalar::from_integer(f, coeffs[i]), basis[i]);
    if (combo == target) return true;
    // Odometer increment over [0, p)^k.
    std::size_t pos = 0;
    while (pos < k && ++coeffs[pos] == p) coeffs[pos++] = 0;
    if (pos == k) return false;
  }
}

}  // namespace liesimp::testing
