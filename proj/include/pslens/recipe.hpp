#pragma once

// Partially-specified states built from state-update pairs.
//
// An UpdateSpace has finite states S, a finite poset of updates U with a
// partial merge, and an interpretation of each update as a partial map on S.
// gen_iposet builds the i-poset over S ∪ (S × U) where a pair (s, u) records
// the update together with the state it was issued against.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "pslens/combinators.hpp"
#include "pslens/iposet.hpp"
#include "pslens/report.hpp"

namespace pslens {

struct UpdateSpace {
  std::vector<std::string> states;
  std::vector<std::string> updates;
  // ule[a][b]: updates[a] <=_U updates[b]
  std::vector<std::vector<bool>> ule;
  // umerge[a][b]: index of updates[a] ⊕_U updates[b], if defined
  std::vector<std::vector<std::optional<std::size_t>>> umerge;
  // interp[u][s]: index of ⟦u⟧(s), if defined
  std::vector<std::vector<std::optional<std::size_t>>> interp;

  // Empty relations over the given names; ule starts reflexive.
  static UpdateSpace make(std::vector<std::string> states, std::vector<std::string> updates);

  std::size_t state_index(const std::string& s) const;
  std::size_t update_index(const std::string& u) const;

  void set_le(const std::string& a, const std::string& b);
  void set_merge(const std::string& a, const std::string& b, const std::string& c);
  void set_interp(const std::string& u, const std::string& s, const std::string& result);
};

// Partial order on U, merge soundness against the join of U, table shapes.
ValidationReport validate_update_space(const UpdateSpace& us);

UpdateSpace parse_update_space(const std::string& text);
std::string format_update_space(const UpdateSpace& us);

// Proper(s) when update is empty, Pair(s, u) otherwise.
struct SUElement {
  std::string state;
  std::optional<std::string> update;

  static SUElement proper(std::string s) { return {std::move(s), std::nullopt}; }
  static SUElement pair(std::string s, std::string u) { return {std::move(s), std::move(u)}; }
  bool is_proper() const { return !update.has_value(); }

  auto operator<=>(const SUElement&) const = default;
};

template <>
struct Show<SUElement> {
  static std::string apply(const SUElement& e) {
    return e.update ? "(" + e.state + ", " + *e.update + ")" : e.state;
  }
};

// { s' | exists u' >= u. ⟦u'⟧(s) = s' }, in state order.
std::vector<std::string> ran(const UpdateSpace& us, const std::string& s, const std::string& u);

// Carrier: all proper states, then all pairs in (state, update) order.
std::vector<SUElement> su_carrier(const UpdateSpace& us);
FiniteTable<SUElement> gen_table(const UpdateSpace& us);
IPoset<SUElement> gen_iposet(const UpdateSpace& us);

std::optional<SUElement> merge_su(const UpdateSpace& us, const SUElement& a, const SUElement& b);
std::optional<std::string> apply_su(const UpdateSpace& us, const SUElement& v, const std::string& s);

// The ps-initiator from discrete states into the generated i-poset.
PSLens<std::string, SUElement> su_initiator(const UpdateSpace& us);

enum class Condition { G1, G2, G3 };
enum class Sufficient { FineEnough, AssociativeJoin };

std::string to_string(Condition c);
std::string to_string(Sufficient c);

// G1: ⊕_U respects Ran(s, -); G2: ⊕_U total on each down-set of U;
// G3: ⊕_U total and closed on {u | ⟦u⟧(s) = s} for each s.
ValidationReport check_condition(const UpdateSpace& us, Condition which);

// Violations of the sufficient condition itself, plus an "implication"
// entry if it holds while the condition it implies (G1 resp. G2) fails.
ValidationReport check_sufficient(const UpdateSpace& us, Sufficient which);

// Dropping origins: Proper s |-> s, Pair(s, u) |-> u, with
// u <= s' iff s' ∈ Ran(u) = ∪_s Ran(s, u). Reports whether ⊕_U respects
// the erased Ran, whether the erased merge is the join of the erased order,
// and whether merge_su commutes with erasure wherever it is defined.
ValidationReport check_state_elimination(const UpdateSpace& us);

// Example spaces.
// One key with one value: states "empty" / "full", updates noop <= add, noop <= del.
UpdateSpace dt_toy_space();
// Each violates exactly one of G1, G2, G3 and fails duplicability.
UpdateSpace g1_violation_space();
UpdateSpace g2_violation_space();
UpdateSpace g3_violation_space();

}  // namespace pslens
