#include "liesimp/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace liesimp {

namespace {

std::string expect_string(const nlohmann::json& j, const char* what) {
  if (!j.is_string()) throw ValidationError(std::string("expected a string for ") + what);
  return j.get<std::string>();
}

}  // namespace

Graph Graph::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ValidationError("graph document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ValidationError("graph document needs a \"vertices\" array");
  Graph g;
  for (const auto& v : doc["vertices"]) {
    const std::string name = expect_string(v, "vertex name");
    if (std::find(g.vertex_names_.begin(), g.vertex_names_.end(), name) != g.vertex_names_.end())
      throw ValidationError("duplicate vertex name '" + name + "'");
    g.vertex_names_.push_back(name);
  }
  if (g.vertex_names_.empty()) throw ValidationError("graph has an empty vertex list");
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ValidationError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object()) throw ValidationError("each edge must be an object");
      GraphEdge edge;
      edge.name = expect_string(e.at("name"), "edge name");
      const std::string src = expect_string(e.at("src"), "edge src");
      const std::string rng = expect_string(e.at("rng"), "edge rng");
      for (const GraphEdge& prior : g.edges_)
        if (prior.name == edge.name) throw ValidationError("duplicate edge name '" + edge.name + "'");
      edge.src = g.vertex_index_or_throw(src, "edge '" + edge.name + "' src");
      edge.rng = g.vertex_index_or_throw(rng, "edge '" + edge.name + "' rng");
      g.edges_.push_back(std::move(edge));
    }
  }
  if (doc.contains("infinite_bundles")) {
    if (!doc["infinite_bundles"].is_array()) throw ValidationError("\"infinite_bundles\" must be an array");
    for (const auto& b : doc["infinite_bundles"]) {
      if (!b.is_object()) throw ValidationError("each infinite bundle must be an object");
      const std::string src = expect_string(b.at("src"), "bundle src");
      const std::string rng = expect_string(b.at("rng"), "bundle rng");
      g.bundles_.push_back({g.vertex_index_or_throw(src, "bundle src"), g.vertex_index_or_throw(rng, "bundle rng")});
    }
  }
  g.finish();
  return g;
}

Graph Graph::build(const std::vector<std::string>& vertices,
                   const std::vector<std::array<std::string, 3>>& edges,
                   const std::vector<std::pair<std::string, std::string>>& bundles) {
  nlohmann::json doc;
  doc["vertices"] = vertices;
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : edges) doc["edges"].push_back({{"name", e[0]}, {"src", e[1]}, {"rng", e[2]}});
  doc["infinite_bundles"] = nlohmann::json::array();
  for (const auto& b : bundles) doc["infinite_bundles"].push_back({{"src", b.first}, {"rng", b.second}});
  return from_json(doc);
}

int Graph::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertex_names_.size(); ++i)
    if (vertex_names_[i] == name) return static_cast<int>(i);
  throw ValidationError("unknown vertex '" + name + "'");
}

int Graph::vertex_index_or_throw(const std::string& name, const std::string& context) const {
  for (std::size_t i = 0; i < vertex_names_.size(); ++i)
    if (vertex_names_[i] == name) return static_cast<int>(i);
  throw ValidationError(context + ": unknown vertex '" + name + "'");
}

int Graph::edge_index(const std::string& name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].name == name) return static_cast<int>(i);
  throw ValidationError("unknown edge '" + name + "'");
}

void Graph::finish() {
  incoming_.assign(vertex_names_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) incoming_[static_cast<std::size_t>(edges_[e].rng)].push_back(static_cast<int>(e));
}

bool Graph::receives_bundle(int v) const {
  return std::any_of(bundles_.begin(), bundles_.end(), [v](const InfiniteBundle& b) { return b.rng == v; });
}

VertexClass classify_vertex(const Graph& g, int v) {
  if (g.receives_bundle(v)) return VertexClass::infinite_receiver;
  if (g.incoming(v).empty()) return VertexClass::source;
  return VertexClass::regular;
}

VertexSet hs_closure(const Graph& g, const VertexSet& seed) {
  std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
  for (int v : seed) {
    if (v < 0 || v >= g.vertex_count()) throw ValidationError("hs_closure: vertex index out of range");
    in[static_cast<std::size_t>(v)] = true;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const GraphEdge& e : g.edges()) {
      if (in[static_cast<std::size_t>(e.rng)] && !in[static_cast<std::size_t>(e.src)]) {
        in[static_cast<std::size_t>(e.src)] = true;
        changed = true;
      }
    }
    for (const InfiniteBundle& b : g.bundles()) {
      if (in[static_cast<std::size_t>(b.rng)] && !in[static_cast<std::size_t>(b.src)]) {
        in[static_cast<std::size_t>(b.src)] = true;
        changed = true;
      }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (in[static_cast<std::size_t>(v)] || classify_vertex(g, v) != VertexClass::regular) continue;
      const auto& inc = g.incoming(v);
      const bool all_sources_in = std::all_of(inc.begin(), inc.end(), [&](int e) {
        return in[static_cast<std::size_t>(g.edge(e).src)];
      });
      if (all_sources_in) {
        in[static_cast<std::size_t>(v)] = true;
        changed = true;
      }
    }
  }
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (in[static_cast<std::size_t>(v)]) out.insert(v);
  return out;
}

HsTriviality only_trivial_hs(const Graph& g) {
  // Only trivial H&S subsets exist iff the closure of every singleton is the
  // whole vertex set (any proper nonempty H&S subset contains such a closure).
  for (int v = 0; v < g.vertex_count(); ++v) {
    VertexSet closure = hs_closure(g, {v});
    if (static_cast<int>(closure.size()) < g.vertex_count()) return {false, std::move(closure)};
  }
  return {true, std::nullopt};
}

CycleEntryCheck every_cycle_has_entry(const Graph& g) {
  // A vertex lies on an entry-free cycle only if its total in-degree is
  // exactly 1 (bundles count as infinite).  On those vertices "follow the
  // unique incoming edge backwards" is a partial function; its cycles are
  // exactly the entry-free cycles.
  const int n = g.vertex_count();
  std::vector<int> unique_in(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v)
    if (!g.receives_bundle(v) && g.incoming(v).size() == 1) unique_in[static_cast<std::size_t>(v)] = g.incoming(v)[0];
  // state: 0 = unvisited, 1 = on current walk, 2 = finished
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (state[static_cast<std::size_t>(start)] != 0 || unique_in[static_cast<std::size_t>(start)] < 0) continue;
    std::vector<int> walk;
    int u = start;
    while (u >= 0 && unique_in[static_cast<std::size_t>(u)] >= 0 && state[static_cast<std::size_t>(u)] == 0) {
      state[static_cast<std::size_t>(u)] = 1;
      walk.push_back(u);
      u = g.edge(unique_in[static_cast<std::size_t>(u)]).src;
    }
    if (u >= 0 && unique_in[static_cast<std::size_t>(u)] >= 0 && state[static_cast<std::size_t>(u)] == 1) {
      // Closed a cycle at u: emit its edges in path order e_1..e_k, where
      // r(e_i) is the i-th cycle vertex and s(e_i) the next one.
      std::vector<int> cycle;
      const auto pos = std::find(walk.begin(), walk.end(), u);
      for (auto it = pos; it != walk.end(); ++it) cycle.push_back(unique_in[static_cast<std::size_t>(*it)]);
      return {false, std::move(cycle)};
    }
    for (int w : walk) state[static_cast<std::size_t>(w)] = 2;
  }
  return {true, std::nullopt};
}

std::string LpaSimplicity::describe(const Graph& g) const {
  if (simple) return "simple: only trivial hereditary saturated subsets and every cycle has an entry";
  std::ostringstream os;
  if (failure == LpaFailure::nontrivial_hereditary_saturated) {
    os << "not simple: proper nonempty hereditary saturated subset {";
    bool first = true;
    for (int v : *hs_witness) {
      if (!first) os << ", ";
      os << g.vertex_name(v);
      first = false;
    }
    os << "}";
  } else {
    os << "not simple: entry-free cycle";
    for (int e : *cycle_witness) os << " " << g.edge(e).name;
    os << " (violates Condition (L))";
  }
  return os.str();
}

LpaSimplicity lpa_is_simple(const Graph& g) {
  LpaSimplicity out;
  HsTriviality hs = only_trivial_hs(g);
  if (!hs.only_trivial) {
    out.simple = false;
    out.failure = LpaFailure::nontrivial_hereditary_saturated;
    out.hs_witness = std::move(hs.witness);
    return out;
  }
  CycleEntryCheck cycles = every_cycle_has_entry(g);
  if (!cycles.every_cycle_has_entry) {
    out.simple = false;
    out.failure = LpaFailure::entry_free_cycle;
    out.cycle_witness = std::move(cycles.entry_free_cycle);
    return out;
  }
  out.simple = true;
  return out;
}

}  // namespace liesimp
