#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "liesimp/errors.hpp"

namespace liesimp {

// Directed-graph conventions used throughout this toolkit:
//   * r^{-1}(v) collects the edges whose RANGE is v (edges pointing into v);
//   * a path p = e_1 e_2 ... e_n satisfies s(e_i) = r(e_{i+1}), so edges
//     compose like functions: r(p) = r(e_1) and s(p) = s(e_n);
//   * a Source receives no edge, a Regular vertex receives finitely many
//     (at least one), an InfiniteReceiver is the target of an infinite
//     parallel bundle.
// Beware: much of the graph-algebra literature swaps the roles of s and r.

struct GraphEdge {
  std::string name;
  int src;
  int rng;
};

/// Infinitely many parallel edges src -> rng over a finite vertex set.
struct InfiniteBundle {
  int src;
  int rng;
};

using VertexSet = std::set<int>;

class Graph {
 public:
  /// Schema: {"vertices": ["u", ...], "edges": [{"name","src","rng"}, ...],
  ///          "infinite_bundles": [{"src","rng"}, ...]} with the last two
  /// optional.  Throws ValidationError on unknown endpoints, duplicate
  /// names, or an empty vertex list.
  static Graph from_json(const nlohmann::json& doc);
  /// Builder used by fixtures: edges given as {name, src, rng} name triples.
  static Graph build(const std::vector<std::string>& vertices,
                     const std::vector<std::array<std::string, 3>>& edges,
                     const std::vector<std::pair<std::string, std::string>>& bundles = {});

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(int v) const { return vertex_names_[static_cast<std::size_t>(v)]; }
  int vertex_index(const std::string& name) const;
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphEdge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  int edge_index(const std::string& name) const;
  const std::vector<InfiniteBundle>& bundles() const { return bundles_; }
  /// Edge ids e with r(e) = v, in declaration order.
  const std::vector<int>& incoming(int v) const { return incoming_[static_cast<std::size_t>(v)]; }
  bool receives_bundle(int v) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<GraphEdge> edges_;
  std::vector<InfiniteBundle> bundles_;
  std::vector<std::vector<int>> incoming_;
  void finish();
  int vertex_index_or_throw(const std::string& name, const std::string& context) const;
};

enum class VertexClass { source, regular, infinite_receiver };
VertexClass classify_vertex(const Graph& g, int v);

/// Smallest hereditary and saturated vertex set containing the seed.
/// Hereditary: r(e) in H implies s(e) in H (bundles included).  Saturated:
/// a Regular vertex all of whose incoming edges start in H joins H.
VertexSet hs_closure(const Graph& g, const VertexSet& seed);

struct HsTriviality {
  bool only_trivial = true;
  /// A proper nonempty hereditary saturated subset, when one exists.
  std::optional<VertexSet> witness;
};
HsTriviality only_trivial_hs(const Graph& g);

struct CycleEntryCheck {
  bool every_cycle_has_entry = true;
  /// Edge ids e_1..e_n of an entry-free cycle in path order, when one exists.
  std::optional<std::vector<int>> entry_free_cycle;
};
/// A cycle has no entry iff each of its vertices has total in-degree exactly
/// one, so the search walks the functional graph on in-degree-1 vertices.
CycleEntryCheck every_cycle_has_entry(const Graph& g);

enum class LpaFailure { none, nontrivial_hereditary_saturated, entry_free_cycle };

struct LpaSimplicity {
  bool simple = false;
  LpaFailure failure = LpaFailure::none;
  std::optional<VertexSet> hs_witness;
  std::optional<std::vector<int>> cycle_witness;
  std::string describe(const Graph& g) const;
};
/// The Leavitt path algebra L_K(E) is simple (over every field) iff the only
/// hereditary saturated subsets are trivial and every cycle has an entry.
LpaSimplicity lpa_is_simple(const Graph& g);

}  // namespace liesimp
