#pragma once

// Line-oriented session over the task pipeline: load a source, stage edits on
// the two views, put them back, inspect and save.
//
//   load <file>                     replace the source, drop staged edits
//   show                            source, both views, staged edits
//   edit <og|dt> <file>             stage a task table or delta document
//   edit <og|dt> <clause>...        stage inline clauses (accumulate):
//       add <id> <name> <date> [done]
//       del <id>
//       complete <id>
//       postpone <id> <date>
//   drop [og|dt]                    discard staged edits
//   put                             propagate staged edits to the source
//   laws [suite]                    run the law fixture suites
//   save [file]                     write the source (stdout without a file)
//   help | quit

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "pslens/tasks.hpp"
#include "pslens/tasks_io.hpp"

namespace pslens {

enum class ViewName { Og, Dt };

std::string to_string(ViewName v);

struct CommandResult {
  // 0 success, 1 command error, 2 law-suite failure.
  int status = 0;
  std::string output;
  bool quit = false;
};

class Session {
 public:
  // Relative file names are resolved against base_dir when it is nonempty.
  Session(Variant variant, std::string today, std::string base_dir = {});

  CommandResult run(const std::string& line);

  Variant variant() const { return variant_; }
  const std::string& today() const { return today_; }
  const Tasks& source() const { return source_; }
  const std::optional<ViewDoc>& staged(ViewName v) const { return v == ViewName::Og ? staged_og_ : staged_dt_; }

  // Both views rendered as task documents, as get(source) produces them.
  std::string view_text(ViewName v) const;
  // Everything the session holds, serialized. Equal snapshots mean equal
  // sessions.
  std::string snapshot() const;

  void set_source(Tasks t);

 private:
  CommandResult cmd_load(const std::vector<std::string>& args);
  CommandResult cmd_show() const;
  CommandResult cmd_edit(const std::vector<std::string>& args);
  CommandResult cmd_drop(const std::vector<std::string>& args);
  CommandResult cmd_put();
  CommandResult cmd_laws(const std::vector<std::string>& args) const;
  CommandResult cmd_save(const std::vector<std::string>& args) const;

  std::string resolve(const std::string& path) const;
  void refresh();
  // Throws InvalidState / ParseError if doc does not fit the view under the
  // current variant.
  void check_fits(ViewName v, const ViewDoc& doc) const;
  bool visible(ViewName v, const TaskRecord& r) const;

  Variant variant_;
  std::string today_;
  std::string base_dir_;
  Tasks source_;
  std::variant<PSLens<Tasks, PlainViews>, PSLens<Tasks, ElaboratedViews>> pipeline_;
  std::variant<PlainViews, ElaboratedViews> views_;
  std::optional<ViewDoc> staged_og_;
  std::optional<ViewDoc> staged_dt_;
};

// Runs commands line by line, echoing each as "> line" before its output.
// Stops at the first command with nonzero status and returns that status.
int run_script(Session& session, std::istream& in, std::ostream& out, bool echo = true);

}  // namespace pslens
