// One line per acceptance criterion: PASS/FAIL, what was measured, time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "pslens/enumerate.hpp"
#include "pslens/fixtures.hpp"
#include "pslens/recipe.hpp"
#include "pslens/session.hpp"
#include "scenario.hpp"
#include "spaces.hpp"

using namespace pslens;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void report(int n, bool pass, const std::string& detail, double secs) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", secs);
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << " [" << buf << "]\n";
  if (!pass) ++failures;
}

DTState plain_doc(const std::string& text) {
  auto doc = parse_view_doc(text);
  if (auto t = std::get_if<Tasks>(&doc)) return DTState::proper(*t);
  const auto& d = std::get<DeltaDoc>(doc);
  return DTState::delta(d.upsert, d.remove);
}

// --- 1, 2 -----------------------------------------------------------------

void scenario_exactness() {
  using namespace scenario;
  auto t0 = Clock::now();
  auto l = task_pipeline_plain(kToday);
  std::vector<std::string> bad;
  auto expect = [&](const std::string& got, const std::string& file) {
    if (got != data(file)) bad.push_back(file);
  };
  auto s = parse_tasks(data("s_tl.json"));
  auto w_og = plain_doc(data("w_og.json"));
  auto w_dt = plain_doc(data("w_dt.json"));
  auto v = l.get(s);
  expect(format_state(v.first), "v_og.json");
  expect(format_state(v.second), "v_dt.json");
  auto r1 = l.put(s, {w_og, DTState::omega()});
  if (!r1) bad.push_back("put(s_tl, (w_og, Ω)) undefined");
  else {
    expect(format_tasks(r1.value()), "s_tl_1.json");
    auto v1 = l.get(r1.value());
    expect(format_state(v1.first), "v_og_1.json");
    expect(format_state(v1.second), "v_dt_1.json");
  }
  auto r2 = l.put(s, {w_og, w_dt});
  if (!r2) bad.push_back("put(s_tl, (w_og, w_dt)) undefined");
  else {
    expect(format_tasks(r2.value()), "s_tl_2.json");
    auto v2 = l.get(r2.value());
    expect(format_state(v2.first), "v_og_2.json");
    expect(format_state(v2.second), "v_dt_2.json");
  }
  auto merged = dt_domain().merge(w_og, w_dt);
  if (!merged || format_state(*merged) != data("w_merged.json")) bad.push_back("w_merged.json");
  const double secs = seconds_since(t0);
  std::string detail = "plain pipeline reproduces 9 golden files exactly";
  if (!bad.empty()) detail = "mismatch on " + bad.front() + " (+" + std::to_string(bad.size() - 1) + ")";
  report(1, bad.empty() && secs < 1.0, detail + ", limit 1s", secs);
}

void elaborated_scenario() {
  using namespace scenario;
  auto t0 = Clock::now();
  auto l = task_pipeline_elaborated(kToday);
  auto d = std::get<DeltaDoc>(parse_view_doc(data("complete_delete_og.json")));
  auto w = dtog_delta(d.upsert, d.complete, d.remove);
  auto r = l.put(parse_tasks(data("s_tl.json")), {w, *dt_dt_domain(kToday).least()});
  const bool pass = r && format_tasks(r.value()) == data("complete_delete_result.json");
  report(2, pass,
         pass ? "{001 delete, 003 complete} yields {002 Walk dog done, 003 Jog done}"
              : "elaborated put gave " + (r ? show(r.value()) : r.failure().describe()),
         seconds_since(t0));
}

// --- 3 --------------------------------------------------------------------

void counterexamples() {
  auto t0 = Clock::now();
  std::vector<std::string> bad;
  {
    auto l = bad_lens(5);
    auto u = Universe<int, Unit>::of_carriers(l);
    if (!check_law(l, LawId::WeakWb, u).holds) bad.push_back("bad: weak-wb");
    auto r = check_law(l, LawId::PsStability, u);
    if (r.holds || !r.counterexample || r.counterexample->sources.at(0) != 2 || !recheck(l, r, u))
      bad.push_back("bad: ps-stability witness");
  }
  {
    auto l = const_unit_ns_lens();
    using U = Lifted<Unit>;
    auto u = Universe<U, U>::of_carriers(l);
    if (!check_law(l, LawId::Wb, u).holds) bad.push_back("constUnit_ns: wb");
    auto r = check_law(l, LawId::WPutGet, u);
    if (r.holds || !r.counterexample || r.counterexample->sources != std::vector<U>{U::of(Unit{}), U::omega()} ||
        !recheck(l, r, u))
      bad.push_back("constUnit_ns: wputget witness");
  }
  {
    auto l = put_nonmono1_lens();
    using B = Lifted<bool>;
    using U = Lifted<Unit>;
    auto u = Universe<B, U>::of_carriers(l);
    if (!check_law(l, LawId::Wb, u).holds) bad.push_back("putNonmono1: wb");
    auto a = l.put(B::omega(), U::of(Unit{}));
    auto b = l.put(B::of(false), U::of(Unit{}));
    if (!a || !b || !(a.value() == B::of(true)) || !(b.value() == B::of(false)) ||
        l.source().le(a.value(), b.value()))
      bad.push_back("putNonmono1: non-monotone put");
  }
  const double secs = seconds_since(t0);
  report(3, bad.empty() && secs < 5.0,
         bad.empty() ? "bad, constUnit_ns, putNonmono1 verdicts and witnesses confirmed exhaustively, limit 5s"
                     : "failed: " + bad.front(),
         secs);
}

// --- 4, 5 -----------------------------------------------------------------

struct Sweep {
  long lenses = 0;
  long wb_fail = 0;
  long lemma_fail = 0;
  long exceptions = 0;
  double wb_secs = 0;
  std::string first_wb, first_lemma, first_exception;
};

template <class S, class V>
void sweep_one(Sweep& sw, const std::string& name, const PSLens<S, V>& l) {
  ++sw.lenses;
  try {
    auto u = Universe<S, V>::of_carriers(l);
    auto t0 = Clock::now();
    auto wb = check_law(l, LawId::Wb, u);
    sw.wb_secs += seconds_since(t0);
    if (!wb.holds) {
      if (!sw.wb_fail++) sw.first_wb = name + ": " + wb.to_string();
    }
    if (check_law(l, LawId::WeakWb, u).holds) {
      for (auto law : {LawId::GetMonotone, LawId::ViewStability}) {
        auto r = check_law(l, law, u);
        if (!r.holds && !sw.lemma_fail++) sw.first_lemma = name + ": " + r.to_string();
      }
    }
    if (wb.holds) {
      for (auto law : {LawId::Stability, LawId::PutDeterminesGet}) {
        auto r = check_law(l, law, u);
        if (!r.holds && !sw.lemma_fail++) sw.first_lemma = name + ": " + r.to_string();
      }
    }
  } catch (const std::exception& e) {
    if (!sw.exceptions++) sw.first_exception = name + ": " + e.what();
  }
}

void law_closure() {
  Sweep sw;
  auto t0 = Clock::now();
  for (const auto& g : generate_iposets(5)) {
    auto P = FiniteIPoset<int>(g.table, g.name).iposet();
    const std::string& n = g.name;

    // Lenses P -> P: identity, and constants when P is lower-bounded.
    std::vector<std::pair<std::string, PSLens<int, int>>> endo{{"id", identity_lens(P)}};
    if (g.lower_bounded)
      for (int a : P.elements()) endo.push_back({"const" + std::to_string(a), constant_lens(P, P, a)});
    std::optional<PSLens<int, std::pair<int, int>>> dup;
    if (g.duplicable) dup = dup_lens(P);
    auto untag = untag_s(P);

    for (const auto& [an, a] : endo) sweep_one(sw, n + " " + an, a);
    if (dup) sweep_one(sw, n + " dup", *dup);
    sweep_one(sw, n + " untagS", untag);

    for (const auto& [an, a] : endo) {
      for (const auto& [bn, b] : endo) {
        sweep_one(sw, n + " " + an + ";" + bn, compose(a, b));
        sweep_one(sw, n + " " + an + "×" + bn, product_lens(a, b));
      }
      sweep_one(sw, n + " untagS;" + an, compose(untag, a));
      sweep_one(sw, n + " " + an + "×untagS", product_lens(a, untag));
      if (dup) {
        sweep_one(sw, n + " " + an + ";dup", compose(a, *dup));
        sweep_one(sw, n + " " + an + "×dup", product_lens(a, *dup));
        for (const auto& [bn, b] : endo) sweep_one(sw, n + " dup;(" + an + "×" + bn + ")", compose(*dup, product_lens(a, b)));
      }
    }
    sweep_one(sw, n + " untagS×untagS", product_lens(untag, untag));
    if (dup) {
      sweep_one(sw, n + " untagS;dup", compose(untag, *dup));
      sweep_one(sw, n + " dup×dup", product_lens(*dup, *dup));
      sweep_one(sw, n + " dup×untagS", product_lens(*dup, untag));
    }
  }
  const double total = seconds_since(t0);

  std::ostringstream d4;
  d4 << sw.lenses << " lenses over " << generate_iposets(5).size() << " generated i-posets, " << sw.wb_fail
     << " wb failures, wb time " << sw.wb_secs << "s, limit 60s";
  if (sw.wb_fail) d4 << "; first: " << sw.first_wb;
  if (sw.exceptions) d4 << "; exception: " << sw.first_exception;
  report(4, sw.wb_fail == 0 && sw.exceptions == 0 && sw.wb_secs < 60.0, d4.str(), sw.wb_secs);

  std::ostringstream d5;
  d5 << "get-monotone, view-stability, stability, put-determines-get on " << sw.lenses << " lenses: "
     << sw.lemma_fail << " failures, " << sw.exceptions << " exceptions";
  if (sw.lemma_fail) d5 << "; first: " << sw.first_lemma;
  report(5, sw.lemma_fail == 0 && sw.exceptions == 0, d5.str(), total);
}

// --- 6 --------------------------------------------------------------------

void recipe_lemma() {
  auto t0 = Clock::now();
  long spaces_seen = 0, all_g = 0, dup_fail = 0, fine = 0, fine_fail = 0, assoc = 0, assoc_fail = 0;
  auto g = [](const UpdateSpace& us, Condition c) { return check_condition(us, c).ok(); };
  auto sufficient = [&](const UpdateSpace& us) {
    if (check_sufficient(us, Sufficient::FineEnough).ok()) {
      ++fine;
      fine_fail += !g(us, Condition::G1);
    }
    if (check_sufficient(us, Sufficient::AssociativeJoin).ok()) {
      ++assoc;
      assoc_fail += !g(us, Condition::G2);
    }
  };
  spaces::for_each_space([&](const UpdateSpace& us, const std::string&) {
    ++spaces_seen;
    if (g(us, Condition::G1) && g(us, Condition::G2) && g(us, Condition::G3)) {
      ++all_g;
      dup_fail += !check_duplicable(gen_table(us)).ok();
    }
    sufficient(us);
  });
  bool probes_ok = true;
  const std::pair<UpdateSpace, Condition> probes[] = {
      {g1_violation_space(), Condition::G1}, {g2_violation_space(), Condition::G2}, {g3_violation_space(), Condition::G3}};
  for (const auto& [us, broken] : probes) {
    for (auto c : {Condition::G1, Condition::G2, Condition::G3}) probes_ok = probes_ok && g(us, c) == (c != broken);
    probes_ok = probes_ok && !check_duplicable(gen_table(us)).ok();
    sufficient(us);
  }
  sufficient(dt_toy_space());
  std::ostringstream d;
  d << all_g << " of " << spaces_seen << " enumerated spaces satisfy G1-G3, " << dup_fail
    << " not duplicable; G1/G2/G3 probes " << (probes_ok ? "each violate exactly one and fail" : "WRONG")
    << "; fine-enough " << fine << " (" << fine_fail << " without G1), associative-join " << assoc << " ("
    << assoc_fail << " without G2)";
  report(6, all_g >= 20 && dup_fail == 0 && probes_ok && fine_fail == 0 && assoc_fail == 0, d.str(),
         seconds_since(t0));
}

// --- 7 --------------------------------------------------------------------

void dt_duplicability() {
  auto t0 = Clock::now();
  const std::vector<TaskRecord> values = {{false, "a", scenario::kToday}, {true, "b", scenario::kToday}};
  auto universe = dt_universe({"1", "2"}, values);
  auto dt = dt_domain();
  const std::size_t n = universe.size();
  oracle::Matrix le(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) le[a][b] = dt.le(universe[a], universe[b]);
  auto index = [&](const DTState& x) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < n; ++i)
      if (universe[i] == x) return i;
    return std::nullopt;
  };
  long defined = 0, mismatches = 0, closure = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto m = dt.merge(universe[a], universe[b]);
      if (!m) continue;
      ++defined;
      auto j = oracle::join(le, a, b);
      if (!j || index(*m) != j) ++mismatches;
    }
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!dt.identical(universe[a], universe[z]) || !dt.identical(universe[b], universe[z])) continue;
        auto m = dt.merge(universe[a], universe[b]);
        if (!m || !dt.identical(*m, universe[z])) ++closure;
      }
  std::ostringstream d;
  d << n << "-element DT universe (2 ids x 2 values): " << defined << " defined merges, " << mismatches
    << " differ from brute-force join, " << closure << " totality/closure failures on I_x";
  report(7, n == 25 && mismatches == 0 && closure == 0, d.str(), seconds_since(t0));
}

// --- 8 --------------------------------------------------------------------

void cli_determinism() {
  using namespace scenario;
  auto t0 = Clock::now();
  const std::string dir = std::string(PSLENS_DATA_DIR) + "/scenario";
  auto replay = [&] {
    Session s(Variant::Plain, kToday, dir);
    std::istringstream in(data("scenario.sync"));
    std::ostringstream out;
    int status = run_script(s, in, out);
    return std::tuple{status, out.str(), s.run("save").output};
  };
  auto [st1, out1, save1] = replay();
  auto [st2, out2, save2] = replay();
  const bool replay_ok = st1 == 0 && st2 == 0 && out1 == out2 && save1 == save2 && save1 == data("expected_final.json") &&
                         out1 == data("scenario.out");

  Session s(Variant::Plain, kToday, dir);
  s.run("load s_tl.json");
  s.run("edit og add 005 Read 2025-04-01");
  s.run("edit dt del 005");
  const auto before = s.run("save").output;
  const auto snap = s.snapshot();
  auto r = s.run("put");
  const bool failed_put_ok = r.status == 1 && r.output.find("MergeConflict") != std::string::npos &&
                             s.run("save").output == before && s.snapshot() == snap;
  report(8, replay_ok && failed_put_ok,
         std::string("scenario replay ") + (replay_ok ? "byte-identical" : "DIFFERS") + "; failed put " +
             (failed_put_ok ? "leaves save output and session unchanged" : "CHANGED the session"),
         seconds_since(t0));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {scenario_exactness, elaborated_scenario, counterexamples,
                                                       law_closure,        recipe_lemma,        dt_duplicability,
                                                       cli_determinism};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      std::cout << "FAIL criterion: exception " << e.what() << "\n";
      ++failures;
    }
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed\n" : "all criteria passed\n");
  return failures ? 1 : 0;
}
