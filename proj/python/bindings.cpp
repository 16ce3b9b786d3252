#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pslens/fixtures.hpp"
#include "pslens/recipe.hpp"
#include "pslens/session.hpp"
#include "pslens/tasks.hpp"
#include "pslens/tasks_io.hpp"
#include "pslens/text.hpp"

namespace py = pybind11;
using namespace pslens;

namespace {

std::vector<std::pair<std::string, std::string>> violations(const ValidationReport& r) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& v : r.violations()) out.emplace_back(v.axiom, v.witness);
  return out;
}

DTState plain_state(const std::string& text) {
  auto doc = parse_view_doc(text);
  if (auto t = std::get_if<Tasks>(&doc)) return DTState::proper(*t);
  const auto& d = std::get<DeltaDoc>(doc);
  if (!d.complete.empty() || !d.postpone.empty())
    throw InvalidArgs("the plain views take no complete or postpone entries");
  return DTState::delta(d.upsert, d.remove);
}

}  // namespace

PYBIND11_MODULE(_pslens, m) {
  m.doc() = "Partial-state lenses: i-poset checks, update spaces, the task pipeline and the sync session.";

  py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("verify_iposet", [](const std::string& text) { return violations(verify_iposet(parse_iposet_table(text))); },
        "Axiom violations of an i-poset given in text form; empty when valid.");
  m.def("check_duplicable",
        [](const std::string& text) { return violations(check_duplicable(parse_iposet(text).table())); });
  m.def("normalize_iposet", [](const std::string& text) { return format_iposet(parse_iposet(text)); });

  m.def("check_conditions", [](const std::string& text) {
    auto us = parse_update_space(text);
    py::dict out;
    for (auto c : {Condition::G1, Condition::G2, Condition::G3})
      out[py::str(to_string(c))] = violations(check_condition(us, c));
    return out;
  });
  m.def("generated_iposet", [](const std::string& space) {
    return format_iposet(stringify(gen_iposet(parse_update_space(space))));
  });

  m.def("fixture_suite_names", &fixture_suite_names);
  m.def(
      "run_laws",
      [](std::optional<std::string> suite) {
        auto suites = run_fixture_suites(suite);
        bool ok = true;
        for (const auto& s : suites) ok = ok && s.ok();
        return std::pair{ok, format_suites(suites)};
      },
      py::arg("suite") = py::none());

  m.def("normalize_tasks", [](const std::string& text) { return format_tasks(parse_tasks(text)); });
  m.def(
      "put_plain",
      [](const std::string& source, const std::string& og, const std::string& dt, const std::string& today) {
        auto l = task_pipeline_plain(today);
        auto r = l.put(parse_tasks(source), {plain_state(og), plain_state(dt)});
        if (!r) throw Error(r.failure().describe());
        return format_tasks(r.value());
      },
      py::arg("source"), py::arg("og"), py::arg("dt"), py::arg("today"));
  m.def("get_plain", [](const std::string& source, const std::string& today) {
    auto v = task_pipeline_plain(today).get(parse_tasks(source));
    return std::pair{format_state(v.first), format_state(v.second)};
  });

  py::class_<Session>(m, "Session")
      .def(py::init([](const std::string& today, const std::string& variant, const std::string& base_dir) {
             return Session(parse_variant(variant), today, base_dir);
           }),
           py::arg("today"), py::arg("variant") = "plain", py::arg("base_dir") = "")
      .def("run",
           [](Session& s, const std::string& line) {
             auto r = s.run(line);
             return std::pair{r.status, r.output};
           })
      .def("source", [](const Session& s) { return format_tasks(s.source()); })
      .def("snapshot", &Session::snapshot);
}
