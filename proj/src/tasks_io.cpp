#include "pslens/tasks_io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pslens {

using Json = nlohmann::ordered_json;

namespace {

Json record_json(const TaskId& id, const TaskRecord& r) {
  Json j;
  j["id"] = id;
  j["done"] = r.done;
  j["name"] = r.name;
  j["due"] = r.due;
  return j;
}

Json records_json(const Tasks& t) {
  Json arr = Json::array();
  for (const auto& [k, r] : t) arr.push_back(record_json(k, r));
  return arr;
}

std::string dump(const Json& j) { return j.dump(2, ' ', false) + "\n"; }

Tasks parse_records(const Json& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError("'" + where + "' must be a list of task records");
  Tasks out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& e = arr[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!e.is_object()) throw ParseError(at + ": expected an object");
    for (const auto& [key, _] : e.items())
      if (key != "id" && key != "done" && key != "name" && key != "due")
        throw ParseError(at + ": unknown field '" + key + "'");
    if (!e.contains("id") || !e["id"].is_string()) throw ParseError(at + ": 'id' must be a string");
    if (!e.contains("done") || !e["done"].is_boolean()) throw ParseError(at + ": 'done' must be true or false");
    if (!e.contains("name") || !e["name"].is_string()) throw ParseError(at + ": 'name' must be a string");
    if (!e.contains("due") || !e["due"].is_string()) throw ParseError(at + ": 'due' must be a date string");
    const std::string id = e["id"];
    if (id.empty()) throw ParseError(at + ": empty id");
    try {
      auto rec = TaskRecord::make(e["done"].get<bool>(), e["name"].get<std::string>(), e["due"].get<std::string>());
      if (!out.emplace(id, std::move(rec)).second) throw ParseError(at + ": duplicate id " + id);
    } catch (const InvalidState& err) {
      throw ParseError(at + ": " + err.what());
    }
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string format_tasks(const Tasks& t) {
  Json j;
  j["tasks"] = records_json(t);
  return dump(j);
}

std::string format_delta(const DeltaDoc& d) {
  Json j;
  j["upsert"] = records_json(d.upsert);
  j["complete"] = records_json(d.complete);
  j["postpone"] = records_json(d.postpone);
  j["delete"] = Json::array();
  for (const auto& k : d.remove) j["delete"].push_back(k);
  return dump(j);
}

std::string format_view_doc(const ViewDoc& d) {
  if (auto t = std::get_if<Tasks>(&d)) return format_tasks(*t);
  return format_delta(std::get<DeltaDoc>(d));
}

Tasks parse_tasks(const std::string& text) {
  auto doc = parse_view_doc(text);
  if (auto t = std::get_if<Tasks>(&doc)) return *t;
  throw ParseError("expected a task table ({\"tasks\": [...]}), found a delta");
}

ViewDoc parse_view_doc(const std::string& text) {
  Json j = parse_json(text);
  if (!j.is_object()) throw ParseError("top level must be an object");
  if (j.contains("tasks")) {
    if (j.size() != 1) throw ParseError("a task table has only the 'tasks' field");
    return parse_records(j["tasks"], "tasks");
  }
  DeltaDoc d;
  for (const auto& [key, value] : j.items()) {
    if (key == "upsert") d.upsert = parse_records(value, key);
    else if (key == "complete") d.complete = parse_records(value, key);
    else if (key == "postpone") d.postpone = parse_records(value, key);
    else if (key == "delete") {
      if (!value.is_array()) throw ParseError("'delete' must be a list of ids");
      for (const auto& k : value) {
        if (!k.is_string() || k.get<std::string>().empty()) throw ParseError("'delete' entries must be nonempty ids");
        if (!d.remove.insert(k.get<std::string>()).second)
          throw ParseError("duplicate id " + k.get<std::string>() + " in 'delete'");
      }
    } else {
      throw ParseError("unknown field '" + key + "'");
    }
  }
  return d;
}

DeltaDoc delta_doc(const DTState::Delta& d) { return DeltaDoc{d.upserts, {}, {}, d.deletes}; }

DeltaDoc delta_doc(const SplitState& s) {
  const auto& d = s.as_delta();
  DeltaDoc out{d.upserts, {}, {}, d.deletes};
  (s.kind() == SplitKind::Ongoing ? out.complete : out.postpone) = d.other;
  return out;
}

std::string format_state(const DTState& s) {
  return s.is_proper() ? format_tasks(s.tasks()) : format_delta(delta_doc(s.as_delta()));
}

std::string format_state(const SplitState& s) {
  return s.is_proper() ? format_tasks(s.tasks()) : format_delta(delta_doc(s));
}

std::string parse_date(const std::vector<std::string>& tokens, const std::string& reference) {
  if (tokens.size() == 1) {
    if (!is_valid_date(tokens[0])) throw ParseError("invalid date '" + tokens[0] + "' (expected YYYY-MM-DD)");
    return tokens[0];
  }
  static const std::array<const char*, 12> months{"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                  "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
  if (tokens.size() == 2) {
    for (std::size_t m = 0; m < months.size(); ++m) {
      if (tokens[0] != months[m]) continue;
      int day = 0;
      std::size_t used = 0;
      try {
        day = std::stoi(tokens[1], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tokens[1].size() || day < 1 || day > 31) break;
      if (!is_valid_date(reference)) throw ParseError("cannot resolve '" + tokens[0] + " " + tokens[1] + "' without a reference date");
      char buf[16];
      std::snprintf(buf, sizeof buf, "%s-%02zu-%02d", reference.substr(0, 4).c_str(), m + 1, day);
      if (!is_valid_date(buf)) break;
      return buf;
    }
  }
  std::string joined;
  for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t;
  throw ParseError("invalid date '" + joined + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write to " + path + " failed");
}

}  // namespace pslens
