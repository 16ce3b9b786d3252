#include "pslens/session.hpp"

#include <filesystem>
#include <istream>
#include <ostream>
#include <sstream>

#include "pslens/fixtures.hpp"
#include "pslens/text.hpp"

namespace pslens {

std::string to_string(ViewName v) { return v == ViewName::Og ? "og" : "dt"; }

namespace {

ViewName parse_view_name(const std::string& s) {
  if (s == "og") return ViewName::Og;
  if (s == "dt") return ViewName::Dt;
  throw ParseError("unknown view '" + s + "' (expected og or dt)");
}

using Pipeline = std::variant<PSLens<Tasks, PlainViews>, PSLens<Tasks, ElaboratedViews>>;

Pipeline make_pipeline(Variant v, const std::string& today) {
  if (v == Variant::Plain) return task_pipeline_plain(today);
  return task_pipeline_elaborated(today);
}

DTState plain_view(const ViewDoc& doc) {
  if (auto t = std::get_if<Tasks>(&doc)) return DTState::proper(*t);
  const auto& d = std::get<DeltaDoc>(doc);
  if (!d.complete.empty() || !d.postpone.empty())
    throw InvalidState("the plain variant has no complete/postpone requests; use --variant elaborated");
  return DTState::delta(d.upsert, d.remove);
}

SplitState og_view(const ViewDoc& doc) {
  if (auto t = std::get_if<Tasks>(&doc)) {
    if (ongoing_part(*t) != *t) throw InvalidState("a table for the og view may only hold ongoing tasks");
    return SplitState::proper(SplitKind::Ongoing, *t);
  }
  const auto& d = std::get<DeltaDoc>(doc);
  if (!d.postpone.empty()) throw InvalidState("the og view takes complete requests, not postpone requests");
  return dtog_delta(d.upsert, d.complete, d.remove);
}

SplitState dt_view(const ViewDoc& doc, const std::string& today) {
  if (auto t = std::get_if<Tasks>(&doc)) {
    if (due_on(*t, today) != *t) throw InvalidState("a table for the dt view may only hold tasks due " + today);
    return SplitState::proper(SplitKind::Today, *t);
  }
  const auto& d = std::get<DeltaDoc>(doc);
  if (!d.complete.empty()) throw InvalidState("the dt view takes postpone requests, not complete requests");
  return dtdt_delta(d.upsert, d.postpone, d.remove, today);
}

std::string table_text(const Tasks& t, const std::string& indent = "  ") {
  if (t.empty()) return indent + "(empty)\n";
  std::size_t wid = 0, wname = 0;
  for (const auto& [k, r] : t) {
    wid = std::max(wid, k.size());
    wname = std::max(wname, r.name.size());
  }
  std::string out;
  for (const auto& [k, r] : t) {
    out += indent + k + std::string(wid - k.size(), ' ') + "  [" + (r.done ? "x" : " ") + "] " + r.name +
           std::string(wname - r.name.size(), ' ') + "  due " + r.due + "\n";
  }
  return out;
}

std::string doc_text(const ViewDoc& doc) {
  if (auto t = std::get_if<Tasks>(&doc)) return "  replace with:\n" + table_text(*t, "    ");
  const auto& d = std::get<DeltaDoc>(doc);
  std::string out;
  for (const auto& [k, r] : d.upsert) out += "  + " + k + " " + show(r) + "\n";
  for (const auto& [k, r] : d.complete) out += "  ✓ " + k + " " + show(r) + "\n";
  for (const auto& [k, r] : d.postpone) out += "  P " + k + " " + show(r) + "\n";
  for (const auto& k : d.remove) out += "  - " + k + "\n";
  if (out.empty()) out = "  (no changes)\n";
  return out;
}

CommandResult ok(std::string out = {}) { return CommandResult{0, std::move(out), false}; }

const char* kHelp =
    "commands:\n"
    "  load <file>                  replace the source\n"
    "  show                         print source, views and staged edits\n"
    "  edit <og|dt> <file>          stage a table or delta document\n"
    "  edit <og|dt> <clauses>       add <id> <name> <date> [done] | del <id> |\n"
    "                               complete <id> | postpone <id> <date>\n"
    "  drop [og|dt]                 discard staged edits\n"
    "  put                          propagate staged edits\n"
    "  laws [suite]                 run law fixture suites\n"
    "  save [file]                  write the source\n"
    "  quit\n";

bool is_clause_keyword(const std::string& s) {
  return s == "add" || s == "del" || s == "complete" || s == "postpone";
}

// Drops id from every list of d.
void forget(DeltaDoc& d, const TaskId& id) {
  d.upsert.erase(id);
  d.complete.erase(id);
  d.postpone.erase(id);
  d.remove.erase(id);
}

}  // namespace

Session::Session(Variant variant, std::string today, std::string base_dir)
    : variant_(variant),
      today_(std::move(today)),
      base_dir_(std::move(base_dir)),
      pipeline_(make_pipeline(variant_, today_)),
      views_(PlainViews{DTState::omega(), DTState::omega()}) {
  refresh();
}

void Session::refresh() {
  std::visit([&](const auto& lens) { views_ = lens.get(source_); }, pipeline_);
}

void Session::set_source(Tasks t) {
  validate_tasks(t);
  source_ = std::move(t);
  staged_og_.reset();
  staged_dt_.reset();
  refresh();
}

std::string Session::view_text(ViewName v) const {
  if (auto p = std::get_if<PlainViews>(&views_)) return format_state(v == ViewName::Og ? p->first : p->second);
  const auto& e = std::get<ElaboratedViews>(views_);
  return format_state(v == ViewName::Og ? e.first : e.second);
}

std::string Session::snapshot() const {
  std::string out = "variant " + to_string(variant_) + "\ntoday " + today_ + "\n";
  out += "source\n" + format_tasks(source_);
  out += "view og\n" + view_text(ViewName::Og);
  out += "view dt\n" + view_text(ViewName::Dt);
  out += "staged og\n" + (staged_og_ ? format_view_doc(*staged_og_) : std::string("none\n"));
  out += "staged dt\n" + (staged_dt_ ? format_view_doc(*staged_dt_) : std::string("none\n"));
  return out;
}

std::string Session::resolve(const std::string& path) const {
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir_.empty()) return path;
  return (std::filesystem::path(base_dir_) / p).string();
}

bool Session::visible(ViewName v, const TaskRecord& r) const {
  return v == ViewName::Og ? is_ongoing(r) : r.due == today_;
}

void Session::check_fits(ViewName v, const ViewDoc& doc) const {
  if (variant_ == Variant::Plain) {
    plain_view(doc);
    const Tasks& shown = std::holds_alternative<Tasks>(doc) ? std::get<Tasks>(doc) : std::get<DeltaDoc>(doc).upsert;
    for (const auto& [k, r] : shown)
      if (!visible(v, r))
        throw InvalidState("task " + k + " " + show(r) + " would not be visible in the " + to_string(v) + " view");
    return;
  }
  if (v == ViewName::Og) og_view(doc);
  else dt_view(doc, today_);
}

CommandResult Session::run(const std::string& line) {
  std::vector<std::string> tokens;
  try {
    tokens = tokenize_line(line);
  } catch (const ParseError& e) {
    return CommandResult{1, std::string("error: ") + e.what() + "\n", false};
  }
  if (tokens.empty()) return ok();
  const std::string cmd = tokens[0];
  const std::vector<std::string> args(tokens.begin() + 1, tokens.end());
  try {
    if (cmd == "load") return cmd_load(args);
    if (cmd == "show") return cmd_show();
    if (cmd == "edit") return cmd_edit(args);
    if (cmd == "drop") return cmd_drop(args);
    if (cmd == "put") return cmd_put();
    if (cmd == "laws") return cmd_laws(args);
    if (cmd == "save") return cmd_save(args);
    if (cmd == "help") return ok(kHelp);
    if (cmd == "quit" || cmd == "exit") return CommandResult{0, {}, true};
    throw ParseError("unknown command '" + cmd + "' (try help)");
  } catch (const Error& e) {
    return CommandResult{1, std::string("error: ") + e.what() + "\n", false};
  }
}

CommandResult Session::cmd_load(const std::vector<std::string>& args) {
  if (args.size() != 1) throw ParseError("usage: load <file>");
  Tasks t = parse_tasks(read_file(resolve(args[0])));
  set_source(std::move(t));
  return ok("loaded " + std::to_string(source_.size()) + " tasks\n");
}

CommandResult Session::cmd_show() const {
  std::string out = "source:\n" + table_text(source_);
  auto view_tasks = [&](ViewName v) -> Tasks {
    if (auto p = std::get_if<PlainViews>(&views_)) return (v == ViewName::Og ? p->first : p->second).tasks();
    const auto& e = std::get<ElaboratedViews>(views_);
    return (v == ViewName::Og ? e.first : e.second).tasks();
  };
  out += "view og (ongoing):\n" + table_text(view_tasks(ViewName::Og));
  out += "view dt (due " + today_ + "):\n" + table_text(view_tasks(ViewName::Dt));
  if (staged_og_) out += "staged og:\n" + doc_text(*staged_og_);
  if (staged_dt_) out += "staged dt:\n" + doc_text(*staged_dt_);
  return ok(out);
}

CommandResult Session::cmd_edit(const std::vector<std::string>& args) {
  if (args.size() < 2) throw ParseError("usage: edit <og|dt> <file | clauses>");
  const ViewName view = parse_view_name(args[0]);
  auto& slot = view == ViewName::Og ? staged_og_ : staged_dt_;

  if (args.size() == 2 && !is_clause_keyword(args[1])) {
    ViewDoc doc = parse_view_doc(read_file(resolve(args[1])));
    check_fits(view, doc);
    slot = std::move(doc);
    return ok("staged " + to_string(view) + " from " + args[1] + "\n");
  }

  if (slot && std::holds_alternative<Tasks>(*slot))
    throw InvalidState("a whole-table edit is staged for " + to_string(view) + "; put or drop it first");
  DeltaDoc d = slot ? std::get<DeltaDoc>(*slot) : DeltaDoc{};

  // The record a clause starts from: a staged upsert, else the source.
  auto current = [&](const TaskId& id) -> TaskRecord {
    for (const Tasks* t : {&d.upsert, &d.complete, &d.postpone})
      if (auto it = t->find(id); it != t->end()) return it->second;
    if (auto it = source_.find(id); it != source_.end()) return it->second;
    throw InvalidState("unknown task " + id);
  };
  auto date_tokens = [&](std::size_t& i) {
    if (i >= args.size()) throw ParseError("missing date");
    if (is_valid_date(args[i])) return parse_date({args[i++]}, today_);
    if (i + 1 >= args.size()) throw ParseError("invalid date '" + args[i] + "'");
    std::string r = parse_date({args[i], args[i + 1]}, today_);
    i += 2;
    return r;
  };

  std::size_t i = 1;
  while (i < args.size()) {
    const std::string kw = args[i++];
    if (!is_clause_keyword(kw)) throw ParseError("expected add, del, complete or postpone, found '" + kw + "'");
    if (i >= args.size()) throw ParseError(kw + ": missing task id");
    const TaskId id = args[i++];
    if (kw == "del") {
      forget(d, id);
      d.remove.insert(id);
      continue;
    }
    TaskRecord rec;
    if (kw == "add") {
      if (i >= args.size()) throw ParseError("add: missing name");
      const std::string name = args[i++];
      const std::string due = date_tokens(i);
      bool done = false;
      if (i < args.size() && args[i] == "done") {
        done = true;
        ++i;
      }
      rec = TaskRecord::make(done, name, due);
    } else if (kw == "complete") {
      rec = current(id);
      rec.done = true;
    } else {
      rec = current(id);
      rec.due = date_tokens(i);
    }
    forget(d, id);
    // A record that stays visible is a plain upsert; one that leaves the view
    // becomes a completion or postpone request.
    if (kw == "add" || visible(view, rec)) d.upsert[id] = rec;
    else if (kw == "complete") d.complete[id] = rec;
    else d.postpone[id] = rec;
  }
  check_fits(view, d);
  slot = std::move(d);
  return ok("staged " + to_string(view) + ":\n" + doc_text(*slot));
}

CommandResult Session::cmd_drop(const std::vector<std::string>& args) {
  if (args.size() > 1) throw ParseError("usage: drop [og|dt]");
  if (args.empty()) {
    staged_og_.reset();
    staged_dt_.reset();
  } else {
    (parse_view_name(args[0]) == ViewName::Og ? staged_og_ : staged_dt_).reset();
  }
  return ok("dropped\n");
}

CommandResult Session::cmd_put() {
  std::string out;
  std::optional<Tasks> next;
  std::string failure;
  if (variant_ == Variant::Plain) {
    const auto& lens = std::get<0>(pipeline_);
    PlainViews w{staged_og_ ? plain_view(*staged_og_) : DTState::omega(),
                 staged_dt_ ? plain_view(*staged_dt_) : DTState::omega()};
    auto r = lens.put(source_, w);
    if (!r) failure = r.failure().describe();
    else {
      next = r.value();
      auto v = lens.get(*next);
      if (staged_og_) out += std::string("w ≤ v'og: ") + (dt_domain().le(w.first, v.first) ? "yes\n" : "no\n");
      if (staged_dt_) out += std::string("w ≤ v'dt: ") + (dt_domain().le(w.second, v.second) ? "yes\n" : "no\n");
    }
  } else {
    const auto& lens = std::get<1>(pipeline_);
    ElaboratedViews w{staged_og_ ? og_view(*staged_og_) : *dt_og_domain().least(),
                      staged_dt_ ? dt_view(*staged_dt_, today_) : *dt_dt_domain(today_).least()};
    auto r = lens.put(source_, w);
    if (!r) failure = r.failure().describe();
    else {
      next = r.value();
      auto v = lens.get(*next);
      if (staged_og_) out += std::string("w ≤ v'og: ") + (dt_og_domain().le(w.first, v.first) ? "yes\n" : "no\n");
      if (staged_dt_)
        out += std::string("w ≤ v'dt: ") + (dt_dt_domain(today_).le(w.second, v.second) ? "yes\n" : "no\n");
    }
  }
  if (!next) return CommandResult{1, "put failed: " + failure + "\n", false};
  set_source(std::move(*next));
  return ok("put ok (" + std::to_string(source_.size()) + " tasks)\n" + out);
}

CommandResult Session::cmd_laws(const std::vector<std::string>& args) const {
  if (args.size() > 1) throw ParseError("usage: laws [suite]");
  auto suites = run_fixture_suites(args.empty() ? std::nullopt : std::optional<std::string>(args[0]));
  bool all = true;
  for (const auto& s : suites) all = all && s.ok();
  return CommandResult{all ? 0 : 2, format_suites(suites), false};
}

CommandResult Session::cmd_save(const std::vector<std::string>& args) const {
  if (args.size() > 1) throw ParseError("usage: save [file]");
  if (args.empty()) return ok(format_tasks(source_));
  write_file(resolve(args[0]), format_tasks(source_));
  return ok("saved " + args[0] + "\n");
}

int run_script(Session& session, std::istream& in, std::ostream& out, bool echo) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    if (echo) out << "> " << line << "\n";
    auto r = session.run(line);
    out << r.output;
    if (r.status != 0) return r.status;
    if (r.quit) break;
  }
  return 0;
}

}  // namespace pslens
