#pragma once

// Named lenses used as regression fixtures: the three counterexample lenses
// plus lawful primitives over small finite domains.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pslens/combinators.hpp"
#include "pslens/laws.hpp"

namespace pslens {

// {0..bound} with the usual order and I = (<=).
IPoset<int> chain(int bound);
// The singleton i-poset {()}.
IPoset<Unit> unit_domain();
IPoset<Lifted<Unit>> unit_omega();
IPoset<Lifted<bool>> bool_omega();
IPoset<Lifted<int>> ints_omega(std::vector<int> values);

// get _ = (); put(0, ()) = 0 and put(k+1, ()) = k, over {0..bound}.
PSLens<int, Unit> bad_lens(int bound = 5);
// Bool_Ω -> 1_Ω; lawful, yet put(Ω, ()) = True while put(False, ()) = False.
PSLens<Lifted<bool>, Lifted<Unit>> put_nonmono1_lens();
// 1_Ω -> 1_Ω; get _ = (), put(s, ()) = s, put(_, Ω) = Ω. Lawful, but not WPutGet.
PSLens<Lifted<Unit>, Lifted<Unit>> const_unit_ns_lens();
// Initiator from naturals (sampled by values) into N_Ω; put(s, Ω) = s, put(_, n) = n.
PSLens<int, Lifted<int>> nat_initiator(std::vector<int> values = {0, 1, 2, 42});

struct FixtureLenses {
  PSLens<int, Unit> bad;
  PSLens<Lifted<bool>, Lifted<Unit>> put_nonmono1;
  PSLens<Lifted<Unit>, Lifted<Unit>> const_unit_ns;
  PSLens<int, Lifted<int>> nat_init;
  PSLens<Lifted<int>, Lifted<int>> identity;
  PSLens<Lifted<int>, Lifted<int>> const42;
  PSLens<std::pair<Lifted<int>, Lifted<int>>,
         std::pair<std::pair<Lifted<int>, Lifted<int>>, std::pair<Lifted<int>, Lifted<int>>>>
      dup_pair;
  PSLens<Sum<Lifted<int>, Lifted<int>>, Lifted<int>> untag;
};

FixtureLenses fixture_lenses(int bad_bound = 5);

// One expected verdict of a fixture suite.
struct FixtureCheck {
  std::string lens;
  // A law name, or a short label for a concrete fact about the fixture.
  std::string property;
  bool expected_holds;
  bool actual_holds;
  // For failing laws: the report's witness re-checks against the formula.
  bool witness_confirmed;
  std::string report;

  bool as_expected() const { return expected_holds == actual_holds && (actual_holds || witness_confirmed); }
};

struct FixtureSuite {
  std::string name;
  std::vector<FixtureCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.as_expected()) return false;
    return true;
  }
};

std::vector<std::string> fixture_suite_names();
// Runs every suite, or only the named one. Unknown names raise InvalidArgs.
std::vector<FixtureSuite> run_fixture_suites(const std::optional<std::string>& only = std::nullopt);
std::string format_suites(const std::vector<FixtureSuite>& suites);

}  // namespace pslens
