#include "pslens/tasks.hpp"

#include <chrono>
#include <functional>

namespace pslens {

bool is_valid_date(const std::string& iso) {
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return false;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9})
    if (iso[i] < '0' || iso[i] > '9') return false;
  const int y = std::stoi(iso.substr(0, 4));
  const unsigned m = static_cast<unsigned>(std::stoi(iso.substr(5, 2)));
  const unsigned d = static_cast<unsigned>(std::stoi(iso.substr(8, 2)));
  return std::chrono::year_month_day{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}}.ok();
}

TaskRecord TaskRecord::make(bool done, std::string name, std::string due) {
  TaskRecord r{done, std::move(name), std::move(due)};
  r.validate();
  return r;
}

void TaskRecord::validate() const {
  if (name.empty()) throw InvalidState("task name must be nonempty");
  if (!is_valid_date(due)) throw InvalidState("invalid due date '" + due + "' (expected YYYY-MM-DD)");
}

void validate_tasks(const Tasks& t) {
  for (const auto& [k, r] : t) {
    if (k.empty()) throw InvalidState("task id must be nonempty");
    try {
      r.validate();
    } catch (const InvalidState& e) {
      throw InvalidState("task " + k + ": " + e.what());
    }
  }
}

IdSet dom(const Tasks& t) {
  IdSet out;
  for (const auto& [k, r] : t) out.insert(k);
  return out;
}

bool subset(const Tasks& a, const Tasks& b) {
  for (const auto& [k, r] : a) {
    auto it = b.find(k);
    if (it == b.end() || !(it->second == r)) return false;
  }
  return true;
}

bool disjoint(const IdSet& a, const IdSet& b) {
  for (const auto& k : a)
    if (b.count(k)) return false;
  return true;
}

namespace {

bool disjoint_dom(const IdSet& d, const Tasks& t) {
  for (const auto& k : d)
    if (t.count(k)) return false;
  return true;
}

bool disjoint_tasks(const Tasks& a, const Tasks& b) {
  for (const auto& [k, r] : a)
    if (b.count(k)) return false;
  return true;
}

bool subset_ids(const IdSet& a, const IdSet& b) {
  for (const auto& k : a)
    if (!b.count(k)) return false;
  return true;
}

// Union of two tables if they agree on shared ids.
std::optional<Tasks> union_tasks(const Tasks& a, const Tasks& b) {
  Tasks out = a;
  for (const auto& [k, r] : b) {
    auto [it, inserted] = out.emplace(k, r);
    if (!inserted && !(it->second == r)) return std::nullopt;
  }
  return out;
}

IdSet union_ids(const IdSet& a, const IdSet& b) {
  IdSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

Tasks select(const Tasks& t, const std::function<bool(const TaskRecord&)>& pred) {
  Tasks out;
  for (const auto& [k, r] : t)
    if (pred(r)) out.emplace(k, r);
  return out;
}

bool all_of(const Tasks& t, const std::function<bool(const TaskRecord&)>& pred) {
  for (const auto& [k, r] : t)
    if (!pred(r)) return false;
  return true;
}

Tasks minus(const Tasks& t, const Tasks& part) {
  Tasks out;
  for (const auto& [k, r] : t)
    if (!part.count(k)) out.emplace(k, r);
  return out;
}

}  // namespace

Tasks upsert(const Tasks& t, const Tasks& a) {
  Tasks out = t;
  for (const auto& [k, r] : a) out[k] = r;
  return out;
}

DTState DTState::proper(Tasks t) {
  validate_tasks(t);
  return DTState(std::move(t));
}

DTState DTState::delta(Tasks upserts, IdSet deletes) {
  validate_tasks(upserts);
  for (const auto& k : deletes)
    if (upserts.count(k)) throw InvalidState("task " + k + " is both upserted and deleted");
  return DTState(Delta{std::move(upserts), std::move(deletes)});
}

const Tasks& DTState::tasks() const {
  if (!is_proper()) throw InvalidArgs("not a proper task table");
  return std::get<0>(data_);
}

const DTState::Delta& DTState::as_delta() const {
  if (is_proper()) throw InvalidArgs("not a delta");
  return std::get<1>(data_);
}

SplitState SplitState::proper(SplitKind kind, Tasks t) {
  validate_tasks(t);
  return SplitState(kind, std::move(t));
}

SplitState SplitState::delta(SplitKind kind, Tasks upserts, Tasks other, IdSet deletes) {
  validate_tasks(upserts);
  validate_tasks(other);
  for (const auto& [k, r] : upserts)
    if (other.count(k) || deletes.count(k)) throw InvalidState("task " + k + " appears in more than one request");
  for (const auto& k : deletes)
    if (other.count(k)) throw InvalidState("task " + k + " appears in more than one request");
  return SplitState(kind, Delta{std::move(upserts), std::move(other), std::move(deletes)});
}

const Tasks& SplitState::tasks() const {
  if (!is_proper()) throw InvalidArgs("not a proper task table");
  return std::get<0>(data_);
}

const SplitState::Delta& SplitState::as_delta() const {
  if (is_proper()) throw InvalidArgs("not a delta");
  return std::get<1>(data_);
}

bool is_ongoing(const TaskRecord& r) { return !r.done; }

Tasks ongoing_part(const Tasks& t) { return select(t, is_ongoing); }

Tasks due_on(const Tasks& t, const std::string& day) {
  return select(t, [&](const TaskRecord& r) { return r.due == day; });
}

DTOGState dtog_delta(Tasks upserts, Tasks completions, IdSet deletes) {
  if (!all_of(upserts, is_ongoing)) throw InvalidState("upserts of the ongoing view must be ongoing tasks");
  if (!all_of(completions, [](const TaskRecord& r) { return r.done; }))
    throw InvalidState("completion requests must carry done = True");
  return SplitState::delta(SplitKind::Ongoing, std::move(upserts), std::move(completions), std::move(deletes));
}

DTDTState dtdt_delta(Tasks upserts, Tasks postpones, IdSet deletes, const std::string& today) {
  if (!all_of(upserts, [&](const TaskRecord& r) { return r.due == today; }))
    throw InvalidState("upserts of the today view must be due " + today);
  if (!all_of(postpones, [&](const TaskRecord& r) { return r.due != today; }))
    throw InvalidState("postpone requests must move the due date away from " + today);
  return SplitState::delta(SplitKind::Today, std::move(upserts), std::move(postpones), std::move(deletes));
}

Tasks apply_dt(const DTState& v, const Tasks& t) {
  if (v.is_proper()) return v.tasks();
  const auto& d = v.as_delta();
  Tasks out = upsert(t, d.upserts);
  for (const auto& k : d.deletes) out.erase(k);
  return out;
}

IPoset<Tasks> tasks_domain() {
  IPoset<Tasks>::Parts p;
  p.name = "Tasks";
  p.le = [](const Tasks& a, const Tasks& b) { return a == b; };
  p.identical = p.le;
  p.merge = [](const Tasks& a, const Tasks& b) -> std::optional<Tasks> {
    if (a == b) return a;
    return std::nullopt;
  };
  p.member = [](const Tasks& t) {
    try {
      validate_tasks(t);
      return true;
    } catch (const InvalidState&) {
      return false;
    }
  };
  return IPoset<Tasks>(std::move(p));
}

namespace {

bool dt_le(const DTState& a, const DTState& b) {
  if (a.is_proper()) return b.is_proper() && a.tasks() == b.tasks();
  const auto& x = a.as_delta();
  if (b.is_proper()) return subset(x.upserts, b.tasks()) && disjoint_dom(x.deletes, b.tasks());
  const auto& y = b.as_delta();
  return subset(x.upserts, y.upserts) && subset_ids(x.deletes, y.deletes);
}

bool dt_id(const DTState& a, const DTState& b) {
  if (a.is_proper()) return b.is_proper() && a.tasks() == b.tasks();
  const auto& x = a.as_delta();
  if (b.is_proper()) return x.deletes.empty() && subset(x.upserts, b.tasks());
  return dt_le(a, b);
}

std::optional<DTState> dt_merge(const DTState& a, const DTState& b) {
  if (a.is_proper() && b.is_proper()) {
    if (a.tasks() == b.tasks()) return a;
    return std::nullopt;
  }
  if (a.is_proper() || b.is_proper()) {
    const DTState& p = a.is_proper() ? a : b;
    const DTState& d = a.is_proper() ? b : a;
    if (dt_le(d, p)) return p;
    return std::nullopt;
  }
  const auto& x = a.as_delta();
  const auto& y = b.as_delta();
  auto ups = union_tasks(x.upserts, y.upserts);
  if (!ups) return std::nullopt;
  auto del = union_ids(x.deletes, y.deletes);
  if (!disjoint_dom(del, *ups)) return std::nullopt;
  return DTState::delta(std::move(*ups), std::move(del));
}

bool split_le(const SplitState& a, const SplitState& b) {
  if (a.kind() != b.kind()) return false;
  if (a.is_proper()) return b.is_proper() && a.tasks() == b.tasks();
  const auto& x = a.as_delta();
  if (b.is_proper()) {
    const auto& t = b.tasks();
    return subset(x.upserts, t) && disjoint_tasks(x.other, t) && disjoint_dom(x.deletes, t);
  }
  const auto& y = b.as_delta();
  return subset(x.upserts, y.upserts) && subset(x.other, y.other) && subset_ids(x.deletes, y.deletes);
}

bool split_id(const SplitState& a, const SplitState& b) {
  if (a.kind() != b.kind()) return false;
  if (a.is_proper()) return b.is_proper() && a.tasks() == b.tasks();
  const auto& x = a.as_delta();
  if (b.is_proper()) return x.other.empty() && x.deletes.empty() && subset(x.upserts, b.tasks());
  return split_le(a, b);
}

std::optional<SplitState> split_merge(const SplitState& a, const SplitState& b) {
  if (a.kind() != b.kind()) return std::nullopt;
  if (a.is_proper() && b.is_proper()) {
    if (a.tasks() == b.tasks()) return a;
    return std::nullopt;
  }
  if (a.is_proper() || b.is_proper()) {
    const SplitState& p = a.is_proper() ? a : b;
    const SplitState& d = a.is_proper() ? b : a;
    if (split_le(d, p)) return p;
    return std::nullopt;
  }
  const auto& x = a.as_delta();
  const auto& y = b.as_delta();
  auto ups = union_tasks(x.upserts, y.upserts);
  auto other = union_tasks(x.other, y.other);
  if (!ups || !other) return std::nullopt;
  auto del = union_ids(x.deletes, y.deletes);
  if (!disjoint_tasks(*ups, *other) || !disjoint_dom(del, *ups) || !disjoint_dom(del, *other)) return std::nullopt;
  return SplitState::delta(a.kind(), std::move(*ups), std::move(*other), std::move(del));
}

bool valid_tasks(const Tasks& t) {
  try {
    validate_tasks(t);
    return true;
  } catch (const InvalidState&) {
    return false;
  }
}

// Membership of a split element given the view predicate.
bool split_member(const SplitState& s, SplitKind kind, const std::function<bool(const TaskRecord&)>& visible) {
  if (s.kind() != kind) return false;
  if (s.is_proper()) return valid_tasks(s.tasks()) && all_of(s.tasks(), visible);
  const auto& d = s.as_delta();
  return all_of(d.upserts, visible) && all_of(d.other, [&](const TaskRecord& r) { return !visible(r); });
}

}  // namespace

IPoset<DTState> dt_domain() {
  IPoset<DTState>::Parts p;
  p.name = "DT";
  p.le = dt_le;
  p.identical = dt_id;
  p.least = DTState::omega();
  p.merge = dt_merge;
  p.member = [](const DTState& s) { return !s.is_proper() || valid_tasks(s.tasks()); };
  return IPoset<DTState>(std::move(p));
}

IPoset<DTOGState> dt_og_domain() {
  IPoset<DTOGState>::Parts p;
  p.name = "DT_OG";
  p.le = split_le;
  p.identical = split_id;
  p.least = SplitState::delta(SplitKind::Ongoing, {}, {}, {});
  p.merge = split_merge;
  p.member = [](const SplitState& s) { return split_member(s, SplitKind::Ongoing, is_ongoing); };
  return IPoset<DTOGState>(std::move(p));
}

IPoset<DTDTState> dt_dt_domain(const std::string& today) {
  if (!is_valid_date(today)) throw InvalidArgs("invalid date '" + today + "'");
  IPoset<DTDTState>::Parts p;
  p.name = "DT_DT";
  p.le = split_le;
  p.identical = split_id;
  p.least = SplitState::delta(SplitKind::Today, {}, {}, {});
  p.member = [today](const SplitState& s) {
    return split_member(s, SplitKind::Today, [&](const TaskRecord& r) { return r.due == today; });
  };
  return IPoset<DTDTState>(std::move(p));
}

PSLens<Tasks, DTState> init_tasks() {
  return initiator<Tasks, DTState>(
      tasks_domain(), dt_domain(), [](const Tasks& t) { return DTState::proper(t); },
      [](const DTState& v, const Tasks& t) -> std::optional<Tasks> { return apply_dt(v, t); }, "init_tasks");
}

std::string to_string(Variant v) { return v == Variant::Plain ? "plain" : "elaborated"; }

Variant parse_variant(const std::string& s) {
  if (s == "plain") return Variant::Plain;
  if (s == "elaborated") return Variant::Elaborated;
  throw InvalidArgs("unknown variant '" + s + "' (expected plain or elaborated)");
}

namespace {

using Pred = std::function<bool(const TaskRecord&)>;

PSLens<DTState, DTState> plain_filter(std::string name, Pred visible) {
  return PSLens<DTState, DTState>(
      name, dt_domain(), dt_domain(),
      [visible](const DTState& s) {
        if (s.is_proper()) return DTState::proper(select(s.tasks(), visible));
        const auto& d = s.as_delta();
        return DTState::delta(select(d.upserts, visible), d.deletes);
      },
      [visible](const DTState& s, const DTState& v) -> PutResult<DTState> {
        if (v.is_proper()) {
          if (!all_of(v.tasks(), visible))
            return PutResult<DTState>::fail(FailureReason::GuardFailed,
                                            put_text(s, v) + ": view contains a task the filter hides");
          if (!s.is_proper())
            return PutResult<DTState>::fail(FailureReason::GuardFailed,
                                            put_text(s, v) + ": a proper view needs a proper source");
          const auto& t = s.tasks();
          return DTState::proper(upsert(minus(t, select(t, visible)), v.tasks()));
        }
        if (!all_of(v.as_delta().upserts, visible))
          return PutResult<DTState>::fail(FailureReason::GuardFailed,
                                          put_text(s, v) + ": upserts contain a task the filter hides");
        return v;
      });
}

template <class ViewDomain>
PSLens<DTState, SplitState> elaborated_filter(std::string name, SplitKind kind, ViewDomain view, Pred visible) {
  return PSLens<DTState, SplitState>(
      name, dt_domain(), view,
      [kind, visible](const DTState& s) {
        if (s.is_proper()) return SplitState::proper(kind, select(s.tasks(), visible));
        const auto& d = s.as_delta();
        return SplitState::delta(kind, select(d.upserts, visible),
                                 select(d.upserts, [&](const TaskRecord& r) { return !visible(r); }), d.deletes);
      },
      [kind, visible](const DTState& s, const SplitState& v) -> PutResult<DTState> {
        if (v.kind() != kind)
          return PutResult<DTState>::fail(FailureReason::GuardFailed, put_text(s, v) + ": wrong view kind");
        if (v.is_proper()) {
          if (!all_of(v.tasks(), visible))
            return PutResult<DTState>::fail(FailureReason::GuardFailed,
                                            put_text(s, v) + ": view contains a task the filter hides");
          if (!s.is_proper())
            return PutResult<DTState>::fail(FailureReason::GuardFailed,
                                            put_text(s, v) + ": a proper view needs a proper source");
          const auto& t = s.tasks();
          return DTState::proper(upsert(minus(t, select(t, visible)), v.tasks()));
        }
        const auto& d = v.as_delta();
        if (!all_of(d.upserts, visible) || !all_of(d.other, [&](const TaskRecord& r) { return !visible(r); }))
          return PutResult<DTState>::fail(FailureReason::GuardFailed,
                                          put_text(s, v) + ": request marks do not match the records");
        Tasks merged = d.upserts;
        merged.insert(d.other.begin(), d.other.end());
        return DTState::delta(std::move(merged), d.deletes);
      });
}

Pred due_pred(const std::string& today) {
  if (!is_valid_date(today)) throw InvalidArgs("invalid date '" + today + "'");
  return [today](const TaskRecord& r) { return r.due == today; };
}

}  // namespace

PSLens<DTState, DTState> filter_ongoing_plain() { return plain_filter("filter_ongoing", is_ongoing); }

PSLens<DTState, DTState> filter_today_plain(const std::string& today) {
  return plain_filter("filter_today", due_pred(today));
}

PSLens<DTState, DTOGState> filter_ongoing_elaborated() {
  return elaborated_filter("filter_ongoing", SplitKind::Ongoing, dt_og_domain(), is_ongoing);
}

PSLens<DTState, DTDTState> filter_today_elaborated(const std::string& today) {
  return elaborated_filter("filter_today", SplitKind::Today, dt_dt_domain(today), due_pred(today));
}

PSLens<Tasks, PlainViews> task_pipeline_plain(const std::string& today) {
  auto shared = compose(init_tasks(), dup_lens(dt_domain()));
  return compose(shared, product_lens(filter_ongoing_plain(), filter_today_plain(today)));
}

PSLens<Tasks, ElaboratedViews> task_pipeline_elaborated(const std::string& today) {
  auto shared = compose(init_tasks(), dup_lens(dt_domain()));
  return compose(shared, product_lens(filter_ongoing_elaborated(), filter_today_elaborated(today)));
}

namespace {

// Enumerates, per id, one of `choices` slots; calls emit with the index
// vector. Slot meaning is up to the caller.
void for_each_assignment(std::size_t ids, std::size_t choices,
                         const std::function<void(const std::vector<std::size_t>&)>& emit) {
  std::vector<std::size_t> pick(ids, 0);
  while (true) {
    emit(pick);
    std::size_t i = 0;
    while (i < ids && ++pick[i] == choices) pick[i++] = 0;
    if (i == ids) return;
  }
}

}  // namespace

std::vector<Tasks> all_tables(const std::vector<TaskId>& ids, const std::vector<TaskRecord>& values) {
  std::vector<Tasks> out;
  for_each_assignment(ids.size(), values.size() + 1, [&](const std::vector<std::size_t>& pick) {
    Tasks t;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (pick[i] > 0) t.emplace(ids[i], values[pick[i] - 1]);
    out.push_back(std::move(t));
  });
  return out;
}

std::vector<DTState> dt_universe(const std::vector<TaskId>& ids, const std::vector<TaskRecord>& values) {
  std::vector<DTState> out;
  for (auto& t : all_tables(ids, values)) out.push_back(DTState::proper(std::move(t)));
  // Per id: absent, deleted, or upserted with one of the values.
  for_each_assignment(ids.size(), values.size() + 2, [&](const std::vector<std::size_t>& pick) {
    Tasks a;
    IdSet d;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (pick[i] == 1) d.insert(ids[i]);
      if (pick[i] >= 2) a.emplace(ids[i], values[pick[i] - 2]);
    }
    out.push_back(DTState::delta(std::move(a), std::move(d)));
  });
  return out;
}

namespace {

std::vector<SplitState> split_universe(SplitKind kind, const std::vector<TaskId>& ids,
                                       const std::vector<TaskRecord>& values, const Pred& visible) {
  std::vector<SplitState> out;
  std::vector<TaskRecord> shown, hidden;
  for (const auto& v : values) (visible(v) ? shown : hidden).push_back(v);
  for (auto& t : all_tables(ids, shown)) out.push_back(SplitState::proper(kind, std::move(t)));
  // Per id: absent, deleted, upserted (visible value) or moved out (hidden value).
  const std::size_t choices = 2 + shown.size() + hidden.size();
  for_each_assignment(ids.size(), choices, [&](const std::vector<std::size_t>& pick) {
    Tasks a, x;
    IdSet d;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const std::size_t c = pick[i];
      if (c == 1) d.insert(ids[i]);
      if (c >= 2 && c < 2 + shown.size()) a.emplace(ids[i], shown[c - 2]);
      if (c >= 2 + shown.size()) x.emplace(ids[i], hidden[c - 2 - shown.size()]);
    }
    out.push_back(SplitState::delta(kind, std::move(a), std::move(x), std::move(d)));
  });
  return out;
}

}  // namespace

std::vector<DTOGState> dt_og_universe(const std::vector<TaskId>& ids, const std::vector<TaskRecord>& values) {
  return split_universe(SplitKind::Ongoing, ids, values, is_ongoing);
}

std::vector<DTDTState> dt_dt_universe(const std::vector<TaskId>& ids, const std::vector<TaskRecord>& values,
                                      const std::string& today) {
  return split_universe(SplitKind::Today, ids, values, due_pred(today));
}

}  // namespace pslens
