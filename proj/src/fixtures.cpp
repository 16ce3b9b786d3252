#include "pslens/fixtures.hpp"

#include <functional>

namespace pslens {

IPoset<int> chain(int bound) {
  if (bound < 0) throw InvalidArgs("chain bound must be non-negative");
  std::vector<int> elems;
  for (int i = 0; i <= bound; ++i) elems.push_back(i);
  IPoset<int>::Parts p;
  p.name = "N≤" + std::to_string(bound);
  p.le = [](int a, int b) { return a <= b; };
  p.identical = p.le;
  p.least = 0;
  p.merge = [](int a, int b) -> std::optional<int> { return std::max(a, b); };
  p.carrier = std::move(elems);
  return IPoset<int>(std::move(p));
}

IPoset<Unit> unit_domain() { return discrete(std::vector<Unit>{Unit{}}, "1"); }
IPoset<Lifted<Unit>> unit_omega() { return lift_omega(unit_domain()); }
IPoset<Lifted<bool>> bool_omega() { return lift_omega(discrete(std::vector<bool>{false, true}, "Bool")); }
IPoset<Lifted<int>> ints_omega(std::vector<int> values) { return lift_omega(discrete(std::move(values), "N")); }

PSLens<int, Unit> bad_lens(int bound) {
  return PSLens<int, Unit>(
      "bad", chain(bound), unit_domain(), [](int) { return Unit{}; },
      [](int s, const Unit&) -> PutResult<int> { return s == 0 ? 0 : s - 1; });
}

PSLens<Lifted<bool>, Lifted<Unit>> put_nonmono1_lens() {
  using B = Lifted<bool>;
  using U = Lifted<Unit>;
  return PSLens<B, U>(
      "putNonmono1", bool_omega(), unit_omega(),
      [](const B& s) { return s.is_omega() ? U::omega() : U::of(Unit{}); },
      [](const B& s, const U& v) -> PutResult<B> {
        if (v.is_omega()) return B::omega();
        if (!s.is_omega()) return s;
        return B::of(true);
      });
}

PSLens<Lifted<Unit>, Lifted<Unit>> const_unit_ns_lens() {
  using U = Lifted<Unit>;
  return PSLens<U, U>(
      "constUnit_ns", unit_omega(), unit_omega(), [](const U&) { return U::of(Unit{}); },
      [](const U& s, const U& v) -> PutResult<U> { return v.is_omega() ? U::omega() : s; });
}

PSLens<int, Lifted<int>> nat_initiator(std::vector<int> values) {
  using L = Lifted<int>;
  return initiator<int, L>(
      discrete(values, "N"), ints_omega(values), [](const int& s) { return L::of(s); },
      [](const L& v, const int& s) -> std::optional<int> { return v.is_omega() ? s : v.value(); }, "init_N");
}

FixtureLenses fixture_lenses(int bad_bound) {
  auto small = ints_omega({1, 2});
  return FixtureLenses{
      bad_lens(bad_bound),
      put_nonmono1_lens(),
      const_unit_ns_lens(),
      nat_initiator(),
      identity_lens(small),
      constant_lens(small, ints_omega({42}), Lifted<int>::of(42)),
      dup_lens(product(small, small)),
      untag_s(small),
  };
}

namespace {

template <class S, class V>
FixtureCheck run_check(const PSLens<S, V>& lens, LawId law, bool expected) {
  auto universe = Universe<S, V>::of_carriers(lens);
  auto report = check_law(lens, law, universe);
  FixtureCheck c{lens.name(), to_string(law), expected, report.holds, false, report.to_string()};
  if (!report.holds) c.witness_confirmed = recheck(lens, report, universe);
  return c;
}

template <class S, class V>
void expect_wb(FixtureSuite& suite, const PSLens<S, V>& lens) {
  for (auto law : {LawId::PsAcceptability, LawId::PsConsistency, LawId::PsStability, LawId::Wb})
    suite.checks.push_back(run_check(lens, law, true));
}

using SuiteFn = std::function<FixtureSuite()>;

std::vector<std::pair<std::string, SuiteFn>> suites() {
  return {
      {"bad",
       [] {
         FixtureSuite s{"bad", {}};
         auto l = bad_lens(5);
         s.checks.push_back(run_check(l, LawId::WeakWb, true));
         s.checks.push_back(run_check(l, LawId::PsStability, false));
         s.checks.push_back(run_check(l, LawId::Wb, false));
         return s;
       }},
      {"putNonmono1",
       [] {
         FixtureSuite s{"putNonmono1", {}};
         auto l = put_nonmono1_lens();
         expect_wb(s, l);
         using B = Lifted<bool>;
         auto a = l.put(B::omega(), Lifted<Unit>::of(Unit{}));
         auto b = l.put(B::of(false), Lifted<Unit>::of(Unit{}));
         bool nonmono = a && b && a.value() == B::of(true) && b.value() == B::of(false) &&
                        !l.source().le(a.value(), b.value());
         s.checks.push_back(FixtureCheck{l.name(), "put-nonmonotone-in-source", true, nonmono, false,
                                         "put(Ω, ()) = True, put(False, ()) = False, True ≰ False: " +
                                             std::string(nonmono ? "exhibited" : "not exhibited")});
         s.checks.push_back(run_check(l, LawId::GetMonotone, true));
         return s;
       }},
      {"constUnit_ns",
       [] {
         FixtureSuite s{"constUnit_ns", {}};
         auto l = const_unit_ns_lens();
         expect_wb(s, l);
         s.checks.push_back(run_check(l, LawId::WPutGet, false));
         return s;
       }},
      {"primitives",
       [] {
         FixtureSuite s{"primitives", {}};
         auto f = fixture_lenses();
         expect_wb(s, f.identity);
         expect_wb(s, f.const42);
         expect_wb(s, f.dup_pair);
         expect_wb(s, f.untag);
         expect_wb(s, f.nat_init);
         s.checks.push_back(run_check(f.nat_init, LawId::UAcceptability, true));
         s.checks.push_back(run_check(f.nat_init, LawId::UConsistency, true));
         // PutPut is not required; the initiator is the standard example breaking it.
         s.checks.push_back(run_check(f.nat_init, LawId::PutPut, false));
         return s;
       }},
  };
}

}  // namespace

std::vector<std::string> fixture_suite_names() {
  std::vector<std::string> out;
  for (auto& [name, fn] : suites()) out.push_back(name);
  return out;
}

std::vector<FixtureSuite> run_fixture_suites(const std::optional<std::string>& only) {
  std::vector<FixtureSuite> out;
  for (auto& [name, fn] : suites())
    if (!only || *only == name) out.push_back(fn());
  if (only && out.empty()) throw InvalidArgs("unknown fixture '" + *only + "'");
  return out;
}

std::string format_suites(const std::vector<FixtureSuite>& suites) {
  std::string out;
  for (const auto& s : suites) {
    out += "[" + s.name + "]\n";
    for (const auto& c : s.checks) {
      out += std::string(c.as_expected() ? "  ok   " : "  FAIL ") + c.lens + " " + c.property +
             " expected " + (c.expected_holds ? "holds" : "fails") + ": " + c.report + "\n";
    }
  }
  return out;
}

}  // namespace pslens
