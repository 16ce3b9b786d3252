// sync: drive the task pipeline from the command line.

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pslens/fixtures.hpp"
#include "pslens/session.hpp"
#include "pslens/text.hpp"

using namespace pslens;

int main(int argc, char** argv) {
  CLI::App app{"Synchronize a task table with its ongoing / due-today views"};
  std::string today;
  std::string variant = "plain";
  std::string script;
  std::string source;
  std::optional<std::string> laws;
  bool all_laws = false;
  app.add_option("--today", today, "date the due-today view filters on (YYYY-MM-DD)");
  app.add_option("--variant", variant, "filter variant")->check(CLI::IsMember({"plain", "elaborated"}));
  app.add_option("--script", script, "run commands from a file, stop at the first error")->check(CLI::ExistingFile);
  auto* laws_opt = app.add_option("--laws", laws, "run the law fixture suites (optionally one suite) and exit")
                        ->expected(0, 1);
  app.add_option("source", source, "task table to load first")->check(CLI::ExistingFile);
  CLI11_PARSE(app, argc, argv);
  all_laws = laws_opt->count() > 0;

  if (all_laws) {
    try {
      std::optional<std::string> only;
      if (laws && !laws->empty()) only = *laws;
      auto suites = run_fixture_suites(only);
      std::cout << format_suites(suites);
      for (const auto& s : suites)
        if (!s.ok()) return 2;
      return 0;
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }

  if (today.empty()) {
    std::cerr << "error: --today is required\n";
    return 1;
  }
  if (!is_valid_date(today)) {
    std::cerr << "error: invalid --today '" << today << "'\n";
    return 1;
  }

  std::string base;
  if (!script.empty()) base = std::filesystem::path(script).parent_path().string();
  Session session(parse_variant(variant), today, base);
  if (!source.empty()) {
    auto r = session.run("load " + quote_token(std::filesystem::absolute(source).string()));
    std::cout << r.output;
    if (r.status != 0) return r.status;
  }

  if (!script.empty()) {
    std::ifstream in(script);
    return run_script(session, in, std::cout);
  }

  const bool tty = isatty(STDIN_FILENO);
  std::string line;
  while (true) {
    if (tty) std::cout << "sync> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    auto r = session.run(line);
    std::cout << r.output;
    if (r.quit) break;
  }
  return 0;
}
