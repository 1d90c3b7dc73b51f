#pragma once

// Shared fixture builders: the graph corpus, groupoid corpus, and
// self-similar-action fixtures used across the unit tests and the
// acceptance gate.

#include <array>
#include <string>
#include <vector>

#include "liesimp/graph.hpp"
#include "liesimp/groupoid.hpp"
#include "liesimp/selfsimilar.hpp"

namespace liesimp::testing {

// ---- graphs -------------------------------------------------------------

/// R_n: one vertex with n loops e1..en.
inline Graph rose(int n) {
  std::vector<std::array<std::string, 3>> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({"e" + std::to_string(i), "v", "v"});
  return Graph::build({"v"}, edges);
}

/// R_N: one vertex receiving an infinite bundle of loops.
inline Graph rose_infinite() { return Graph::build({"v"}, {}, {{"v", "v"}}); }

/// Line graph with n vertices v1 -> v2 -> ... -> vn; L_K = M_n(K).
inline Graph line_graph(int n) {
  std::vector<std::string> vertices;
  std::vector<std::array<std::string, 3>> edges;
  for (int i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
  for (int i = 1; i < n; ++i)
    edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i + 1)});
  return Graph::build(vertices, edges);
}

/// Entry-free 2-cycle u -> v -> u.
inline Graph two_cycle() {
  return Graph::build({"u", "v"}, {{"x", "u", "v"}, {"y", "v", "u"}});
}

/// 2-cycle plus a loop at u: every cycle has an entry; simple.
inline Graph two_cycle_with_entry() {
  return Graph::build({"u", "v"}, {{"x", "u", "v"}, {"y", "v", "u"}, {"z", "u", "u"}});
}

/// Entry-free 3-cycle (line graph with a closing back edge).
inline Graph three_cycle() {
  return Graph::build({"u", "v", "w"}, {{"e1", "u", "v"}, {"e2", "v", "w"}, {"e3", "w", "u"}});
}

/// Two isolated vertices: {u} is a nontrivial hereditary saturated set.
inline Graph two_isolated() { return Graph::build({"u", "v"}, {}); }

/// Loops at two disconnected vertices.
inline Graph two_loops_disjoint() {
  return Graph::build({"u", "v"}, {{"a", "u", "u"}, {"b", "v", "v"}});
}

/// R_2 with an extra sink: still simple, but (1,1) is a B-vector combination.
inline Graph rose_with_sink() {
  return Graph::build({"v", "w"}, {{"a", "v", "v"}, {"b", "v", "v"}, {"c", "v", "w"}});
}

/// A source feeding an infinite-bundle vertex: {u} is hereditary saturated.
inline Graph bundle_feeder() {
  return Graph::build({"u", "v"}, {{"f", "u", "v"}}, {{"v", "v"}});
}

/// The full graph fixture corpus (all at most 8 vertices).
inline std::vector<Graph> graph_corpus() {
  return {rose(1),        rose(2),         rose(3),         rose_infinite(),
          line_graph(2),  line_graph(3),   two_cycle(),     two_cycle_with_entry(),
          three_cycle(),  two_isolated(),  two_loops_disjoint(),
          rose_with_sink(),                bundle_feeder()};
}

// ---- groupoids ----------------------------------------------------------

/// The cyclic group Z/n as a one-unit groupoid (not effective for n >= 2).
inline FiniteGroupoid cyclic_group_groupoid(int n, const std::string& unit = "u") {
  std::vector<std::string> elements;
  for (int i = 0; i < n; ++i) elements.push_back(i == 0 ? "e" : "s" + std::to_string(i));
  std::vector<std::vector<std::string>> mul(static_cast<std::size_t>(n),
                                            std::vector<std::string>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = elements[static_cast<std::size_t>((i + j) % n)];
  return FiniteGroupoid::from_group_table(elements, mul, "e", unit);
}

/// Effective and minimal fixtures: the pair groupoids P_1..P_4.
inline std::vector<FiniteGroupoid> effective_minimal_corpus() {
  return {FiniteGroupoid::pair_groupoid(1), FiniteGroupoid::pair_groupoid(2), FiniteGroupoid::pair_groupoid(3),
          FiniteGroupoid::pair_groupoid(4)};
}

/// Broader corpus including non-effective and non-minimal examples.
inline std::vector<FiniteGroupoid> groupoid_corpus() {
  std::vector<FiniteGroupoid> out = effective_minimal_corpus();
  out.push_back(cyclic_group_groupoid(2));
  out.push_back(cyclic_group_groupoid(3));
  out.push_back(FiniteGroupoid::disjoint_union(
      FiniteGroupoid::pair_groupoid(2),
      FiniteGroupoid::from_group_table({"t"}, {{"t"}}, "t", "w")));
  return out;
}

// ---- self-similar actions -----------------------------------------------

inline GroupTable z2_table() {
  GroupTable g;
  g.elements = {"e", "s"};
  g.mul = {{0, 1}, {1, 0}};
  g.identity = 0;
  g.inverse = {0, 1};
  return g;
}

/// Z/2 on R_2, swapping the two loops, with the trivial cocycle.
inline SelfSimilarAction swap_action() {
  SelfSimilarAction a;
  a.graph = Graph::build({"v"}, {{"a", "v", "v"}, {"b", "v", "v"}});
  a.group = z2_table();
  a.vertex_action = {{0}, {0}};
  a.edge_action = {{0, 1}, {1, 0}};
  a.cocycle = {{0, 0}, {0, 0}};
  validate_action(a);
  return a;
}

/// Z/2 acting trivially on R_2 with the trivial cocycle.
inline SelfSimilarAction triv2_action() {
  SelfSimilarAction a;
  a.graph = Graph::build({"v"}, {{"a", "v", "v"}, {"b", "v", "v"}});
  a.group = z2_table();
  a.vertex_action = {{0}, {0}};
  a.edge_action = {{0, 1}, {0, 1}};
  a.cocycle = {{0, 0}, {0, 0}};
  validate_action(a);
  return a;
}

/// Z/2 fixing both loops of R_2 with cocycle phi(s, a) = s, phi(s, b) = e:
/// (s, v) pumps along a and exits along b, so the action is not Hausdorff.
inline SelfSimilarAction nhaus_action() {
  SelfSimilarAction a;
  a.graph = Graph::build({"v"}, {{"a", "v", "v"}, {"b", "v", "v"}});
  a.group = z2_table();
  a.vertex_action = {{0}, {0}};
  a.edge_action = {{0, 1}, {0, 1}};
  a.cocycle = {{0, 0}, {1, 0}};
  validate_action(a);
  return a;
}

/// Z/2 swapping the two vertices and edges of the 2-cycle, phi(g, e) = g.
inline SelfSimilarAction swap2v_action() {
  SelfSimilarAction a;
  a.graph = Graph::build({"u", "v"}, {{"x", "u", "v"}, {"y", "v", "u"}});
  a.group = z2_table();
  a.vertex_action = {{0, 1}, {1, 0}};
  a.edge_action = {{0, 1}, {1, 0}};
  a.cocycle = {{0, 0}, {1, 1}};
  validate_action(a);
  return a;
}

/// A path from edge names; the empty path needs the vertex name.
inline GraphPath make_path(const Graph& g, const std::vector<std::string>& edge_names,
                           const std::string& vertex_if_empty = "") {
  GraphPath p;
  if (edge_names.empty()) {
    p.range_vertex = g.vertex_index(vertex_if_empty);
    return p;
  }
  for (const std::string& name : edge_names) p.edges.push_back(g.edge_index(name));
  p.range_vertex = g.edge(p.edges.front()).rng;
  return p;
}

}  // namespace liesimp::testing
