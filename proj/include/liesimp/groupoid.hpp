#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "liesimp/errors.hpp"

namespace liesimp {

// Finite groupoids carry the discrete topology: every subset of arrows is
// compact open, so "compact open bisection" degenerates to "set of arrows on
// which both src and rng are injective", and the Steinberg algebra is plain
// linear algebra on arrow-indexed coefficient vectors.

struct Arrow {
  std::string name;
  int src;
  int rng;
};

class FiniteGroupoid {
 public:
  /// Schema: {"units": [...], "arrows": [{"name","src","rng"}, ...],
  ///          "compose": [["a","b","ab"], ...], "inverse": [["a","a_inv"], ...],
  ///          "identities": {"unit": "arrow", ...}}.
  /// Identity arrows may be omitted: explicitly designated ones win, then
  /// declared idempotents (compose(a,a) = a), and otherwise a fresh identity
  /// arrow per unit is synthesized.  Compose entries forced by the identity
  /// laws are auto-filled; inverse entries are symmetrized.
  static FiniteGroupoid from_json(const nlohmann::json& doc);

  /// The pair groupoid P_n: arrows g{i}{j} : u{j} -> u{i}, g{i}{j} g{j}{k} =
  /// g{i}{k}.  Its convolution algebra is the full matrix algebra M_n(K).
  static FiniteGroupoid pair_groupoid(int n);
  /// A group as a one-unit groupoid from its multiplication table.
  static FiniteGroupoid from_group_table(const std::vector<std::string>& elements,
                                         const std::vector<std::vector<std::string>>& mul,
                                         const std::string& identity, const std::string& unit_name = "u");
  /// Disjoint union; unit and arrow names must not clash.
  static FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

  int unit_count() const { return static_cast<int>(units_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& unit_name(int u) const { return units_[static_cast<std::size_t>(u)]; }
  int unit_index(const std::string& name) const;
  const Arrow& arrow(int a) const { return arrows_[static_cast<std::size_t>(a)]; }
  int arrow_index(const std::string& name) const;
  /// Composite ab (apply b, then a); -1 when src(a) != rng(b) or undeclared.
  int compose(int a, int b) const { return compose_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int identity_arrow(int u) const { return identity_of_unit_[static_cast<std::size_t>(u)]; }
  bool is_identity_arrow(int a) const;

 private:
  std::vector<std::string> units_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> compose_;   // -1 = undefined
  std::vector<int> inverse_;                // -1 = undeclared
  std::vector<int> identity_of_unit_;       // -1 = undesignated
  friend void validate_groupoid(const FiniteGroupoid& g);
};

/// Exhaustive groupoid-axiom check; throws ValidationError naming the first
/// violated axiom and the offending arrows.  Checks: identity designation,
/// composition defined exactly on composable pairs, endpoint compatibility
/// of composites, identity laws, two-sided inverses, associativity.
void validate_groupoid(const FiniteGroupoid& g);

struct EffectiveResult {
  bool effective = true;
  /// A non-identity arrow with src = rng, when one exists.
  std::optional<int> witness;
};
EffectiveResult is_effective(const FiniteGroupoid& g);

struct MinimalResult {
  bool minimal = true;
  /// The orbit of the first unit, when it is not everything.
  std::optional<std::vector<int>> witness_orbit;
};
MinimalResult is_minimal(const FiniteGroupoid& g);

using Bisection = std::set<int>;

/// src and rng are both injective on the set.
bool is_bisection(const FiniteGroupoid& g, const Bisection& u);
/// {ab : a in u, b in v, composable}; throws ValidationError when an input is
/// not a bisection.
Bisection bisection_product(const FiniteGroupoid& g, const Bisection& u, const Bisection& v);
Bisection bisection_inverse(const FiniteGroupoid& g, const Bisection& u);

}  // namespace liesimp
