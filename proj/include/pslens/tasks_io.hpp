#pragma once

// JSON documents for task tables and view deltas. Output is canonical: keys in
// a fixed order, records sorted by id, two-space indent, trailing newline.
//
//   source / proper view:  {"tasks": [{"id", "done", "name", "due"}, ...]}
//   delta:                 {"upsert": [...], "complete": [...],
//                           "postpone": [...], "delete": ["id", ...]}

#include <string>
#include <variant>
#include <vector>

#include "pslens/tasks.hpp"

namespace pslens {

// The raw content of a delta document, before it is mapped onto a view domain.
struct DeltaDoc {
  Tasks upsert;
  Tasks complete;
  Tasks postpone;
  IdSet remove;

  auto operator<=>(const DeltaDoc&) const = default;
};

using ViewDoc = std::variant<Tasks, DeltaDoc>;

std::string format_tasks(const Tasks& t);
std::string format_delta(const DeltaDoc& d);
std::string format_view_doc(const ViewDoc& d);

// All throw ParseError with a description of the offending entry.
Tasks parse_tasks(const std::string& text);
ViewDoc parse_view_doc(const std::string& text);

DeltaDoc delta_doc(const DTState::Delta& d);
DeltaDoc delta_doc(const SplitState& s);
std::string format_state(const DTState& s);
std::string format_state(const SplitState& s);

// Accepts YYYY-MM-DD, or a month abbreviation and a day ("Apr 1") whose year
// is taken from `reference` (an ISO date). Throws ParseError.
std::string parse_date(const std::vector<std::string>& tokens, const std::string& reference);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace pslens
