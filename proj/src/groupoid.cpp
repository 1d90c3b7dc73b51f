#include "liesimp/groupoid.hpp"

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

int FiniteGroupoid::unit_index(const std::string& name) const {
  for (std::size_t i = 0; i < units_.size(); ++i)
    if (units_[i] == name) return static_cast<int>(i);
  throw ValidationError("unknown unit '" + name + "'");
}

int FiniteGroupoid::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return static_cast<int>(i);
  throw ValidationError("unknown arrow '" + name + "'");
}

bool FiniteGroupoid::is_identity_arrow(int a) const {
  const Arrow& ar = arrow(a);
  return ar.src == ar.rng && identity_of_unit_[static_cast<std::size_t>(ar.src)] == a;
}

FiniteGroupoid FiniteGroupoid::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ValidationError("groupoid document must be a JSON object");
  if (!doc.contains("units") || !doc["units"].is_array() || doc["units"].empty())
    throw ValidationError("groupoid document needs a nonempty \"units\" array");
  FiniteGroupoid g;
  for (const auto& u : doc["units"]) {
    const std::string name = expect_string(u, "unit name");
    if (std::find(g.units_.begin(), g.units_.end(), name) != g.units_.end())
      throw ValidationError("duplicate unit name '" + name + "'");
    g.units_.push_back(name);
  }
  if (doc.contains("arrows")) {
    if (!doc["arrows"].is_array()) throw ValidationError("\"arrows\" must be an array");
    for (const auto& a : doc["arrows"]) {
      Arrow arrow;
      arrow.name = expect_string(a.at("name"), "arrow name");
      for (const Arrow& prior : g.arrows_)
        if (prior.name == arrow.name) throw ValidationError("duplicate arrow name '" + arrow.name + "'");
      arrow.src = g.unit_index(expect_string(a.at("src"), "arrow src"));
      arrow.rng = g.unit_index(expect_string(a.at("rng"), "arrow rng"));
      g.arrows_.push_back(std::move(arrow));
    }
  }
  g.identity_of_unit_.assign(g.units_.size(), -1);
  // Designated identities win.
  if (doc.contains("identities")) {
    if (!doc["identities"].is_object()) throw ValidationError("\"identities\" must be an object");
    for (const auto& [unit, arrow_name] : doc["identities"].items()) {
      const int u = g.unit_index(unit);
      const int a = g.arrow_index(expect_string(arrow_name, "identity arrow"));
      g.identity_of_unit_[static_cast<std::size_t>(u)] = a;
    }
  }
  // Raw compose entries (indices resolved, conflicts rejected).
  std::map<std::pair<int, int>, int> declared;
  if (doc.contains("compose")) {
    if (!doc["compose"].is_array()) throw ValidationError("\"compose\" must be an array of [a, b, ab] triples");
    for (const auto& t : doc["compose"]) {
      if (!t.is_array() || t.size() != 3) throw ValidationError("each compose entry must be a [a, b, ab] triple");
      const int a = g.arrow_index(expect_string(t[0], "compose factor"));
      const int b = g.arrow_index(expect_string(t[1], "compose factor"));
      const int c = g.arrow_index(expect_string(t[2], "compose result"));
      const auto [it, fresh] = declared.emplace(std::make_pair(a, b), c);
      if (!fresh && it->second != c)
        throw ValidationError("conflicting compose entries for (" + g.arrows_[static_cast<std::size_t>(a)].name +
                              ", " + g.arrows_[static_cast<std::size_t>(b)].name + ")");
    }
  }
  // Infer identities from declared idempotents: in a valid groupoid the
  // idempotents are exactly the identity arrows.
  for (const auto& [pair, c] : declared) {
    if (pair.first == pair.second && c == pair.first) {
      const Arrow& a = g.arrows_[static_cast<std::size_t>(pair.first)];
      if (a.src == a.rng) {
        int& slot = g.identity_of_unit_[static_cast<std::size_t>(a.src)];
        if (slot == -1) slot = pair.first;
      }
    }
  }
  // Synthesize identity arrows for units that still lack one.
  for (std::size_t u = 0; u < g.units_.size(); ++u) {
    if (g.identity_of_unit_[u] != -1) continue;
    std::string name = g.units_[u];
    const auto taken = [&](const std::string& n) {
      return std::any_of(g.arrows_.begin(), g.arrows_.end(), [&](const Arrow& a) { return a.name == n; });
    };
    if (taken(name)) name = "id_" + g.units_[u];
    if (taken(name)) throw ValidationError("cannot synthesize an identity arrow name for unit '" + g.units_[u] + "'");
    g.arrows_.push_back({name, static_cast<int>(u), static_cast<int>(u)});
    g.identity_of_unit_[u] = static_cast<int>(g.arrows_.size()) - 1;
  }
  // Build the table, auto-filling entries forced by the identity laws.
  const std::size_t n = g.arrows_.size();
  g.compose_.assign(n, std::vector<int>(n, -1));
  for (const auto& [pair, c] : declared) g.compose_[static_cast<std::size_t>(pair.first)][static_cast<std::size_t>(pair.second)] = c;
  for (std::size_t a = 0; a < n; ++a) {
    const Arrow& ar = g.arrows_[a];
    const int id_src = g.identity_of_unit_[static_cast<std::size_t>(ar.src)];
    const int id_rng = g.identity_of_unit_[static_cast<std::size_t>(ar.rng)];
    if (g.compose_[a][static_cast<std::size_t>(id_src)] == -1) g.compose_[a][static_cast<std::size_t>(id_src)] = static_cast<int>(a);
    if (g.compose_[static_cast<std::size_t>(id_rng)][a] == -1) g.compose_[static_cast<std::size_t>(id_rng)][a] = static_cast<int>(a);
  }
  // Inverse table: declared pairs symmetrized; identities are self-inverse.
  g.inverse_.assign(n, -1);
  if (doc.contains("inverse")) {
    if (!doc["inverse"].is_array()) throw ValidationError("\"inverse\" must be an array of [a, a_inv] pairs");
    for (const auto& t : doc["inverse"]) {
      if (!t.is_array() || t.size() != 2) throw ValidationError("each inverse entry must be a [a, a_inv] pair");
      const int a = g.arrow_index(expect_string(t[0], "inverse entry"));
      const int b = g.arrow_index(expect_string(t[1], "inverse entry"));
      for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        int& slot = g.inverse_[static_cast<std::size_t>(x)];
        if (slot != -1 && slot != y)
          throw ValidationError("conflicting inverse entries for '" + g.arrows_[static_cast<std::size_t>(x)].name + "'");
        slot = y;
      }
    }
  }
  for (int u = 0; u < g.unit_count(); ++u) {
    const int id = g.identity_of_unit_[static_cast<std::size_t>(u)];
    int& slot = g.inverse_[static_cast<std::size_t>(id)];
    if (slot == -1) slot = id;
  }
  return g;
}

FiniteGroupoid FiniteGroupoid::pair_groupoid(int n) {
  if (n < 1) throw ValidationError("pair groupoid needs at least one unit");
  FiniteGroupoid g;
  const auto tag = [n](int i) {
    return n <= 9 ? std::to_string(i + 1) : std::to_string(i + 1) + "_";
  };
  for (int i = 0; i < n; ++i) g.units_.push_back("u" + std::to_string(i + 1));
  // arrow g{i}{j} : u{j} -> u{i}, stored at index i*n + j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.arrows_.push_back({"g" + tag(i) + tag(j), j, i});
  const std::size_t count = g.arrows_.size();
  g.compose_.assign(count, std::vector<int>(count, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        g.compose_[static_cast<std::size_t>(i * n + j)][static_cast<std::size_t>(j * n + k)] = i * n + k;
  g.inverse_.resize(count);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.inverse_[static_cast<std::size_t>(i * n + j)] = j * n + i;
  g.identity_of_unit_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.identity_of_unit_[static_cast<std::size_t>(i)] = i * n + i;
  return g;
}

FiniteGroupoid FiniteGroupoid::from_group_table(const std::vector<std::string>& elements,
                                                const std::vector<std::vector<std::string>>& mul,
                                                const std::string& identity, const std::string& unit_name) {
  if (elements.empty()) throw ValidationError("group table needs at least one element");
  if (mul.size() != elements.size()) throw ValidationError("group multiplication table has the wrong shape");
  FiniteGroupoid g;
  g.units_.push_back(unit_name);
  const auto index_of = [&](const std::string& name) {
    const auto it = std::find(elements.begin(), elements.end(), name);
    if (it == elements.end()) throw ValidationError("group table references unknown element '" + name + "'");
    return static_cast<int>(it - elements.begin());
  };
  for (const auto& e : elements) g.arrows_.push_back({e, 0, 0});
  const std::size_t n = elements.size();
  g.compose_.assign(n, std::vector<int>(n, -1));
  g.inverse_.assign(n, -1);
  const int id = index_of(identity);
  for (std::size_t i = 0; i < n; ++i) {
    if (mul[i].size() != n) throw ValidationError("group multiplication table has the wrong shape");
    for (std::size_t j = 0; j < n; ++j) {
      const int c = index_of(mul[i][j]);
      g.compose_[i][j] = c;
      if (c == id) {
        g.inverse_[i] = static_cast<int>(j);
        g.inverse_[j] = static_cast<int>(i);
      }
    }
  }
  g.identity_of_unit_.assign(1, id);
  for (std::size_t i = 0; i < n; ++i)
    if (g.inverse_[i] == -1) throw ValidationError("group element '" + elements[i] + "' has no inverse in the table");
  return g;
}

FiniteGroupoid FiniteGroupoid::disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  FiniteGroupoid g;
  g.units_ = a.units_;
  for (const auto& u : b.units_) {
    if (std::find(g.units_.begin(), g.units_.end(), u) != g.units_.end())
      throw ValidationError("disjoint union with clashing unit name '" + u + "'");
    g.units_.push_back(u);
  }
  const int unit_shift = a.unit_count();
  const int arrow_shift = a.arrow_count();
  g.arrows_ = a.arrows_;
  for (const Arrow& ar : b.arrows_) {
    for (const Arrow& prior : a.arrows_)
      if (prior.name == ar.name) throw ValidationError("disjoint union with clashing arrow name '" + ar.name + "'");
    g.arrows_.push_back({ar.name, ar.src + unit_shift, ar.rng + unit_shift});
  }
  const std::size_t n = g.arrows_.size();
  g.compose_.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < a.arrow_count(); ++x)
    for (int y = 0; y < a.arrow_count(); ++y)
      g.compose_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = a.compose(x, y);
  for (int x = 0; x < b.arrow_count(); ++x)
    for (int y = 0; y < b.arrow_count(); ++y) {
      const int c = b.compose(x, y);
      g.compose_[static_cast<std::size_t>(x + arrow_shift)][static_cast<std::size_t>(y + arrow_shift)] =
          c == -1 ? -1 : c + arrow_shift;
    }
  g.inverse_.resize(n);
  for (int x = 0; x < a.arrow_count(); ++x) g.inverse_[static_cast<std::size_t>(x)] = a.inverse(x);
  for (int x = 0; x < b.arrow_count(); ++x) g.inverse_[static_cast<std::size_t>(x + arrow_shift)] = b.inverse(x) + arrow_shift;
  g.identity_of_unit_.resize(g.units_.size());
  for (int u = 0; u < a.unit_count(); ++u) g.identity_of_unit_[static_cast<std::size_t>(u)] = a.identity_arrow(u);
  for (int u = 0; u < b.unit_count(); ++u)
    g.identity_of_unit_[static_cast<std::size_t>(u + unit_shift)] = b.identity_arrow(u) + arrow_shift;
  return g;
}

void validate_groupoid(const FiniteGroupoid& g) {
  const int n = g.arrow_count();
  const auto name = [&](int a) { return g.arrow(a).name; };
  // Identity designation.
  for (int u = 0; u < g.unit_count(); ++u) {
    const int id = g.identity_of_unit_[static_cast<std::size_t>(u)];
    if (id < 0 || id >= n) throw ValidationError("unit '" + g.unit_name(u) + "' has no designated identity arrow");
    if (g.arrow(id).src != u || g.arrow(id).rng != u)
      throw ValidationError("identity arrow '" + name(id) + "' of unit '" + g.unit_name(u) +
                            "' does not have src = rng = that unit");
  }
  // Composition defined exactly on composable pairs, with correct endpoints.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const bool composable = g.arrow(a).src == g.arrow(b).rng;
      const int c = g.compose(a, b);
      if (composable && c == -1)
        throw ValidationError("composition undefined for the composable pair (" + name(a) + ", " + name(b) + ")");
      if (!composable && c != -1)
        throw ValidationError("composition declared for the non-composable pair (" + name(a) + ", " + name(b) + ")");
      if (c != -1 && (g.arrow(c).src != g.arrow(b).src || g.arrow(c).rng != g.arrow(a).rng))
        throw ValidationError("composite " + name(a) + " o " + name(b) + " = " + name(c) + " has wrong endpoints");
    }
  // Identity laws.
  for (int a = 0; a < n; ++a) {
    const int id_src = g.identity_arrow(g.arrow(a).src);
    const int id_rng = g.identity_arrow(g.arrow(a).rng);
    if (g.compose(a, id_src) != a)
      throw ValidationError("identity law fails: " + name(a) + " o " + name(id_src) + " != " + name(a));
    if (g.compose(id_rng, a) != a)
      throw ValidationError("identity law fails: " + name(id_rng) + " o " + name(a) + " != " + name(a));
  }
  // Two-sided inverses.
  for (int a = 0; a < n; ++a) {
    const int b = g.inverse(a);
    if (b < 0 || b >= n) throw ValidationError("arrow '" + name(a) + "' has no declared inverse");
    if (g.arrow(b).src != g.arrow(a).rng || g.arrow(b).rng != g.arrow(a).src)
      throw ValidationError("inverse of '" + name(a) + "' has wrong endpoints");
    if (g.compose(a, b) != g.identity_arrow(g.arrow(a).rng) || g.compose(b, a) != g.identity_arrow(g.arrow(a).src))
      throw ValidationError("inverse law fails for (" + name(a) + ", " + name(b) + ")");
  }
  // Associativity on every composable triple.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (g.arrow(a).src != g.arrow(b).rng) continue;
      for (int c = 0; c < n; ++c) {
        if (g.arrow(b).src != g.arrow(c).rng) continue;
        if (g.compose(g.compose(a, b), c) != g.compose(a, g.compose(b, c)))
          throw ValidationError("associativity fails on (" + name(a) + ", " + name(b) + ", " + name(c) + ")");
      }
    }
}

EffectiveResult is_effective(const FiniteGroupoid& g) {
  for (int a = 0; a < g.arrow_count(); ++a)
    if (g.arrow(a).src == g.arrow(a).rng && !g.is_identity_arrow(a)) return {false, a};
  return {true, std::nullopt};
}

MinimalResult is_minimal(const FiniteGroupoid& g) {
  const int n = g.unit_count();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int a = 0; a < g.arrow_count(); ++a) {
    const int x = find(g.arrow(a).src);
    const int y = find(g.arrow(a).rng);
    if (x != y) parent[static_cast<std::size_t>(x)] = y;
  }
  const int root = find(0);
  std::vector<int> orbit;
  for (int u = 0; u < n; ++u)
    if (find(u) == root) orbit.push_back(u);
  if (static_cast<int>(orbit.size()) == n) return {true, std::nullopt};
  return {false, std::move(orbit)};
}

bool is_bisection(const FiniteGroupoid& g, const Bisection& u) {
  std::set<int> srcs, rngs;
  for (int a : u) {
    if (a < 0 || a >= g.arrow_count()) throw ValidationError("bisection references an unknown arrow index");
    if (!srcs.insert(g.arrow(a).src).second) return false;
    if (!rngs.insert(g.arrow(a).rng).second) return false;
  }
  return true;
}

Bisection bisection_product(const FiniteGroupoid& g, const Bisection& u, const Bisection& v) {
  if (!is_bisection(g, u) || !is_bisection(g, v)) throw ValidationError("bisection_product requires bisections");
  Bisection out;
  for (int a : u)
    for (int b : v) {
      const int c = g.compose(a, b);
      if (c != -1) out.insert(c);
    }
  if (!is_bisection(g, out)) throw InvariantBreach("product of bisections failed to be a bisection");
  return out;
}

Bisection bisection_inverse(const FiniteGroupoid& g, const Bisection& u) {
  if (!is_bisection(g, u)) throw ValidationError("bisection_inverse requires a bisection");
  Bisection out;
  for (int a : u) out.insert(g.inverse(a));
  return out;
}

}  // namespace liesimp
