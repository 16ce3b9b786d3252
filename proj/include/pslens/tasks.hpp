#pragma once

// The to-do domain: proper task tables, deltas of upserts and deletions
// (DT), the elaborated view domains with completion / postpone requests, the
// initiator that applies deltas, the filter lenses and the composed pipeline.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pslens/combinators.hpp"
#include "pslens/iposet.hpp"

namespace pslens {

using TaskId = std::string;

// ISO-8601 calendar date check (YYYY-MM-DD).
bool is_valid_date(const std::string& iso);

struct TaskRecord {
  bool done = false;
  std::string name;
  std::string due;  // ISO-8601 date

  // Throws InvalidState on an empty name or malformed date.
  static TaskRecord make(bool done, std::string name, std::string due);
  void validate() const;

  auto operator<=>(const TaskRecord&) const = default;
};

using Tasks = std::map<TaskId, TaskRecord>;
using IdSet = std::set<TaskId>;

template <>
struct Show<TaskRecord> {
  static std::string apply(const TaskRecord& r) {
    return "(" + show(r.done) + ", " + r.name + ", " + r.due + ")";
  }
};

template <>
struct Show<Tasks> {
  static std::string apply(const Tasks& t) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, r] : t) {
      out += (first ? "" : ", ") + k + " ↦ " + show(r);
      first = false;
    }
    return out + "}";
  }
};

template <>
struct Show<IdSet> {
  static std::string apply(const IdSet& d) {
    std::string out = "{";
    bool first = true;
    for (const auto& k : d) {
      out += (first ? "" : ", ") + k;
      first = false;
    }
    return out + "}";
  }
};

void validate_tasks(const Tasks& t);
IdSet dom(const Tasks& t);
// a ⊆ b as sets of (id, record) pairs.
bool subset(const Tasks& a, const Tasks& b);
bool disjoint(const IdSet& a, const IdSet& b);

// (t ◁ a)(k) = a(k) if k ∈ dom(a), else t(k).
Tasks upsert(const Tasks& t, const Tasks& a);

// Proper task table, or a delta (A, D) of upserts A and deletions D with
// dom(A) ∩ D = ∅. Invalid values are rejected at construction.
class DTState {
 public:
  struct Delta {
    Tasks upserts;
    IdSet deletes;
    auto operator<=>(const Delta&) const = default;
  };

  static DTState proper(Tasks t);
  static DTState delta(Tasks upserts, IdSet deletes = {});
  static DTState omega() { return delta({}, {}); }

  bool is_proper() const { return data_.index() == 0; }
  const Tasks& tasks() const;
  const Delta& as_delta() const;

  auto operator<=>(const DTState&) const = default;

 private:
  explicit DTState(std::variant<Tasks, Delta> d) : data_(std::move(d)) {}
  std::variant<Tasks, Delta> data_;
};

template <>
struct Show<DTState> {
  static std::string apply(const DTState& s) {
    if (s.is_proper()) return show(s.tasks());
    return "Δ(A=" + show(s.as_delta().upserts) + ", D=" + show(s.as_delta().deletes) + ")";
  }
};

// The elaborated view domains share one representation: a proper table, or
// a triple (A, X, D) where X holds completion requests (ongoing view) or
// postpone requests (today view).
enum class SplitKind { Ongoing, Today };

class SplitState {
 public:
  struct Delta {
    Tasks upserts;  // A: records visible in the view
    Tasks other;    // C (completed) or Po (postponed): records leaving the view
    IdSet deletes;  // D
    auto operator<=>(const Delta&) const = default;
  };

  static SplitState proper(SplitKind kind, Tasks t);
  // Checks that dom(A), dom(X) and D are pairwise disjoint and records are valid.
  static SplitState delta(SplitKind kind, Tasks upserts, Tasks other, IdSet deletes);

  SplitKind kind() const { return kind_; }
  bool is_proper() const { return data_.index() == 0; }
  const Tasks& tasks() const;
  const Delta& as_delta() const;

  auto operator<=>(const SplitState&) const = default;

 private:
  SplitState(SplitKind kind, std::variant<Tasks, Delta> d) : kind_(kind), data_(std::move(d)) {}
  SplitKind kind_;
  std::variant<Tasks, Delta> data_;
};

using DTOGState = SplitState;
using DTDTState = SplitState;

// DT_OG element; A must be all ongoing and C all completed.
DTOGState dtog_delta(Tasks upserts, Tasks completions, IdSet deletes);
// DT_DT element; A must be all due today and Po all due elsewhere.
DTDTState dtdt_delta(Tasks upserts, Tasks postpones, IdSet deletes, const std::string& today);

template <>
struct Show<SplitState> {
  static std::string apply(const SplitState& s) {
    if (s.is_proper()) return show(s.tasks());
    const auto& d = s.as_delta();
    return "Δ(A=" + show(d.upserts) + (s.kind() == SplitKind::Ongoing ? ", C=" : ", Po=") + show(d.other) +
           ", D=" + show(d.deletes) + ")";
  }
};

bool is_ongoing(const TaskRecord& r);
Tasks ongoing_part(const Tasks& t);
Tasks due_on(const Tasks& t, const std::string& day);

// apply((t'), _) = t'; apply((A, D), t) = {(k ↦ v) ∈ t ◁ A | k ∉ D}.
Tasks apply_dt(const DTState& v, const Tasks& t);

// Tasks as a discrete i-poset.
IPoset<Tasks> tasks_domain();
// DT with least element Δ(∅, ∅) and the union merge.
IPoset<DTState> dt_domain();
// Completion-aware view domain, with a merge defined like DT's.
IPoset<DTOGState> dt_og_domain();
// Postpone-aware view domain for the given day. It carries no merge.
IPoset<DTDTState> dt_dt_domain(const std::string& today);

PSLens<Tasks, DTState> init_tasks();

enum class Variant { Plain, Elaborated };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

// Plain filters, DT -> DT.
PSLens<DTState, DTState> filter_ongoing_plain();
PSLens<DTState, DTState> filter_today_plain(const std::string& today);
// Elaborated filters, DT -> DT_OG and DT -> DT_DT.
PSLens<DTState, DTOGState> filter_ongoing_elaborated();
PSLens<DTState, DTDTState> filter_today_elaborated(const std::string& today);

using PlainViews = std::pair<DTState, DTState>;
using ElaboratedViews = std::pair<DTOGState, DTDTState>;

// init_tasks ; dup(DT) ; (filter_ongoing × filter_today)
PSLens<Tasks, PlainViews> task_pipeline_plain(const std::string& today);
PSLens<Tasks, ElaboratedViews> task_pipeline_elaborated(const std::string& today);

// Small universes for exhaustive sampling: every table / delta over the
// given ids and record values.
std::vector<Tasks> all_tables(const std::vector<TaskId>& ids, const std::vector<TaskRecord>& values);
std::vector<DTState> dt_universe(const std::vector<TaskId>& ids, const std::vector<TaskRecord>& values);
std::vector<DTOGState> dt_og_universe(const std::vector<TaskId>& ids, const std::vector<TaskRecord>& values);
std::vector<DTDTState> dt_dt_universe(const std::vector<TaskId>& ids, const std::vector<TaskRecord>& values,
                                      const std::string& today);

}  // namespace pslens
