#include "pslens/recipe.hpp"

#include <sstream>

#include "pslens/text.hpp"

namespace pslens {

namespace {

using Idx = std::size_t;

std::optional<Idx> find_name(const std::vector<std::string>& names, const std::string& x) {
  for (Idx i = 0; i < names.size(); ++i)
    if (names[i] == x) return i;
  return std::nullopt;
}

// ran as a membership vector over state indices.
std::vector<bool> ran_mask(const UpdateSpace& us, Idx s, Idx u) {
  std::vector<bool> out(us.states.size(), false);
  for (Idx u2 = 0; u2 < us.updates.size(); ++u2)
    if (us.ule[u][u2] && us.interp[u2][s]) out[*us.interp[u2][s]] = true;
  return out;
}

std::vector<bool> erased_ran_mask(const UpdateSpace& us, Idx u) {
  std::vector<bool> out(us.states.size(), false);
  for (Idx s = 0; s < us.states.size(); ++s) {
    auto m = ran_mask(us, s, u);
    for (Idx i = 0; i < m.size(); ++i) out[i] = out[i] || m[i];
  }
  return out;
}

std::string set_text(const UpdateSpace& us, const std::vector<bool>& mask) {
  std::string out = "{";
  bool first = true;
  for (Idx i = 0; i < mask.size(); ++i)
    if (mask[i]) {
      out += (first ? "" : ",") + us.states[i];
      first = false;
    }
  return out + "}";
}

std::optional<Idx> umerge(const UpdateSpace& us, Idx a, Idx b) { return us.umerge[a][b]; }

bool fixes(const UpdateSpace& us, Idx u, Idx s) { return us.interp[u][s] && *us.interp[u][s] == s; }

}  // namespace

UpdateSpace UpdateSpace::make(std::vector<std::string> states, std::vector<std::string> updates) {
  UpdateSpace us;
  us.states = std::move(states);
  us.updates = std::move(updates);
  const Idx nu = us.updates.size(), ns = us.states.size();
  us.ule.assign(nu, std::vector<bool>(nu, false));
  for (Idx i = 0; i < nu; ++i) us.ule[i][i] = true;
  us.umerge.assign(nu, std::vector<std::optional<Idx>>(nu));
  us.interp.assign(nu, std::vector<std::optional<Idx>>(ns));
  return us;
}

std::size_t UpdateSpace::state_index(const std::string& s) const {
  auto i = find_name(states, s);
  if (!i) throw InvalidArgs("unknown state '" + s + "'");
  return *i;
}

std::size_t UpdateSpace::update_index(const std::string& u) const {
  auto i = find_name(updates, u);
  if (!i) throw InvalidArgs("unknown update '" + u + "'");
  return *i;
}

void UpdateSpace::set_le(const std::string& a, const std::string& b) { ule[update_index(a)][update_index(b)] = true; }

void UpdateSpace::set_merge(const std::string& a, const std::string& b, const std::string& c) {
  umerge[update_index(a)][update_index(b)] = update_index(c);
}

void UpdateSpace::set_interp(const std::string& u, const std::string& s, const std::string& result) {
  interp[update_index(u)][state_index(s)] = state_index(result);
}

ValidationReport validate_update_space(const UpdateSpace& us) {
  ValidationReport r;
  const Idx nu = us.updates.size(), ns = us.states.size();
  if (us.ule.size() != nu || us.umerge.size() != nu || us.interp.size() != nu) {
    r.add("table-shape", "update tables do not match the update count");
    return r;
  }
  for (Idx i = 0; i < nu; ++i)
    for (Idx j = i + 1; j < nu; ++j)
      if (us.updates[i] == us.updates[j]) r.add("distinct-updates", us.updates[i]);
  for (Idx i = 0; i < ns; ++i)
    for (Idx j = i + 1; j < ns; ++j)
      if (us.states[i] == us.states[j]) r.add("distinct-states", us.states[i]);
  FiniteTable<std::string> t(us.updates);
  t.le = us.ule;
  t.id = us.ule;
  t.merge = us.umerge;
  auto order = verify_iposet(t);
  for (const auto& v : order.violations()) r.add("updates." + v.axiom, v.witness);
  return r;
}

UpdateSpace parse_update_space(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::optional<std::vector<std::string>> states, updates;
  struct Pending {
    int line;
    std::vector<std::string> toks;
  };
  std::vector<Pending> rest;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokenize_line(line, line_no);
    if (toks.empty()) continue;
    if (toks[0] == "states") {
      states.emplace(toks.begin() + 1, toks.end());
    } else if (toks[0] == "updates") {
      updates.emplace(toks.begin() + 1, toks.end());
    } else if (toks[0] == "name") {
      continue;
    } else {
      rest.push_back({line_no, std::move(toks)});
    }
  }
  if (!states || !updates) throw ParseError("update space needs 'states' and 'updates' lines");
  auto us = UpdateSpace::make(*states, *updates);
  for (const auto& p : rest) {
    const auto& t = p.toks;
    auto arity = [&](std::size_t n) {
      if (t.size() != n)
        throw ParseError("line " + std::to_string(p.line) + ": '" + t[0] + "' expects " + std::to_string(n - 1) +
                         " argument(s)");
    };
    try {
      if (t[0] == "ule") {
        arity(3);
        us.set_le(t[1], t[2]);
      } else if (t[0] == "umerge") {
        arity(4);
        us.set_merge(t[1], t[2], t[3]);
      } else if (t[0] == "interp") {
        arity(4);
        us.set_interp(t[1], t[2], t[3]);
      } else {
        throw ParseError("line " + std::to_string(p.line) + ": unknown directive '" + t[0] + "'");
      }
    } catch (const InvalidArgs& e) {
      throw ParseError("line " + std::to_string(p.line) + ": " + e.what());
    }
  }
  return us;
}

std::string format_update_space(const UpdateSpace& us) {
  std::string out = "states";
  for (const auto& s : us.states) out += " " + quote_token(s);
  out += "\nupdates";
  for (const auto& u : us.updates) out += " " + quote_token(u);
  out += "\n";
  const Idx nu = us.updates.size(), ns = us.states.size();
  for (Idx a = 0; a < nu; ++a)
    for (Idx b = 0; b < nu; ++b)
      if (a != b && us.ule[a][b]) out += "ule " + quote_token(us.updates[a]) + " " + quote_token(us.updates[b]) + "\n";
  for (Idx a = 0; a < nu; ++a)
    for (Idx b = 0; b < nu; ++b)
      if (us.umerge[a][b])
        out += "umerge " + quote_token(us.updates[a]) + " " + quote_token(us.updates[b]) + " " +
               quote_token(us.updates[*us.umerge[a][b]]) + "\n";
  for (Idx u = 0; u < nu; ++u)
    for (Idx s = 0; s < ns; ++s)
      if (us.interp[u][s])
        out += "interp " + quote_token(us.updates[u]) + " " + quote_token(us.states[s]) + " " +
               quote_token(us.states[*us.interp[u][s]]) + "\n";
  return out;
}

std::vector<std::string> ran(const UpdateSpace& us, const std::string& s, const std::string& u) {
  auto mask = ran_mask(us, us.state_index(s), us.update_index(u));
  std::vector<std::string> out;
  for (Idx i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(us.states[i]);
  return out;
}

std::vector<SUElement> su_carrier(const UpdateSpace& us) {
  std::vector<SUElement> out;
  for (const auto& s : us.states) out.push_back(SUElement::proper(s));
  for (const auto& s : us.states)
    for (const auto& u : us.updates) out.push_back(SUElement::pair(s, u));
  return out;
}

namespace {

bool su_le(const UpdateSpace& us, const SUElement& a, const SUElement& b) {
  if (a.is_proper()) return b.is_proper() && a.state == b.state;
  const Idx s = us.state_index(a.state), u = us.update_index(*a.update);
  if (b.is_proper()) return ran_mask(us, s, u)[us.state_index(b.state)];
  return a.state == b.state && us.ule[u][us.update_index(*b.update)];
}

bool su_id(const UpdateSpace& us, const SUElement& a, const SUElement& b) {
  if (a.is_proper()) return b.is_proper() && a.state == b.state;
  const Idx s = us.state_index(a.state), u = us.update_index(*a.update);
  if (b.is_proper()) return a.state == b.state && fixes(us, u, s);
  return a.state == b.state && us.ule[u][us.update_index(*b.update)];
}

}  // namespace

std::optional<SUElement> merge_su(const UpdateSpace& us, const SUElement& a, const SUElement& b) {
  if (a.is_proper() && b.is_proper()) {
    if (a.state == b.state) return a;
    return std::nullopt;
  }
  if (a.is_proper() != b.is_proper()) {
    const SUElement& p = a.is_proper() ? a : b;
    const SUElement& q = a.is_proper() ? b : a;
    if (ran_mask(us, us.state_index(q.state), us.update_index(*q.update))[us.state_index(p.state)]) return p;
    return std::nullopt;
  }
  if (a.state != b.state) return std::nullopt;
  auto m = umerge(us, us.update_index(*a.update), us.update_index(*b.update));
  if (!m) return std::nullopt;
  return SUElement::pair(a.state, us.updates[*m]);
}

std::optional<std::string> apply_su(const UpdateSpace& us, const SUElement& v, const std::string& s) {
  if (v.is_proper()) return v.state;
  if (v.state != s) return std::nullopt;
  auto r = us.interp[us.update_index(*v.update)][us.state_index(s)];
  if (!r) return std::nullopt;
  return us.states[*r];
}

FiniteTable<SUElement> gen_table(const UpdateSpace& us) {
  FiniteTable<SUElement> t(su_carrier(us));
  const Idx n = t.size();
  t.enable_merge();
  for (Idx i = 0; i < n; ++i)
    for (Idx j = 0; j < n; ++j) {
      t.le[i][j] = su_le(us, t.elements[i], t.elements[j]);
      t.id[i][j] = su_id(us, t.elements[i], t.elements[j]);
      if (auto m = merge_su(us, t.elements[i], t.elements[j])) (*t.merge)[i][j] = t.index_of(*m);
    }
  return t;
}

IPoset<SUElement> gen_iposet(const UpdateSpace& us) {
  auto shared = std::make_shared<const UpdateSpace>(us);
  IPoset<SUElement>::Parts p;
  p.name = "SU";
  p.le = [shared](const SUElement& a, const SUElement& b) { return su_le(*shared, a, b); };
  p.identical = [shared](const SUElement& a, const SUElement& b) { return su_id(*shared, a, b); };
  p.merge = [shared](const SUElement& a, const SUElement& b) { return merge_su(*shared, a, b); };
  p.carrier = su_carrier(us);
  return IPoset<SUElement>(std::move(p));
}

PSLens<std::string, SUElement> su_initiator(const UpdateSpace& us) {
  auto shared = std::make_shared<const UpdateSpace>(us);
  return initiator<std::string, SUElement>(
      discrete(us.states, "S"), gen_iposet(us), [](const std::string& s) { return SUElement::proper(s); },
      [shared](const SUElement& v, const std::string& s) { return apply_su(*shared, v, s); }, "init_SU");
}

std::string to_string(Condition c) {
  switch (c) {
    case Condition::G1: return "G1";
    case Condition::G2: return "G2";
    case Condition::G3: return "G3";
  }
  return "?";
}

std::string to_string(Sufficient c) {
  return c == Sufficient::FineEnough ? "fine-enough" : "associative-join";
}

ValidationReport check_condition(const UpdateSpace& us, Condition which) {
  ValidationReport r;
  const Idx nu = us.updates.size(), ns = us.states.size();
  const auto& U = us.updates;
  switch (which) {
    case Condition::G1:
      for (Idx s = 0; s < ns; ++s)
        for (Idx a = 0; a < nu; ++a)
          for (Idx b = 0; b < nu; ++b) {
            auto m = umerge(us, a, b);
            if (!m) continue;
            auto ra = ran_mask(us, s, a), rb = ran_mask(us, s, b), rm = ran_mask(us, s, *m);
            for (Idx x = 0; x < ns; ++x)
              if (ra[x] && rb[x] && !rm[x])
                r.add("G1", "s=" + us.states[s] + " " + U[a] + "⊕" + U[b] + "=" + U[*m] + ": " + us.states[x] +
                                " in Ran " + set_text(us, ra) + " ∩ " + set_text(us, rb) + " but not in " +
                                set_text(us, rm));
          }
      break;
    case Condition::G2:
      for (Idx top = 0; top < nu; ++top)
        for (Idx a = 0; a < nu; ++a)
          for (Idx b = 0; b < nu; ++b)
            if (us.ule[a][top] && us.ule[b][top] && !umerge(us, a, b))
              r.add("G2", U[a] + "⊕" + U[b] + " undefined although both are below " + U[top]);
      break;
    case Condition::G3:
      for (Idx s = 0; s < ns; ++s)
        for (Idx a = 0; a < nu; ++a)
          for (Idx b = 0; b < nu; ++b) {
            if (!fixes(us, a, s) || !fixes(us, b, s)) continue;
            auto m = umerge(us, a, b);
            if (!m)
              r.add("G3", "s=" + us.states[s] + ": " + U[a] + "⊕" + U[b] + " undefined on updates fixing s");
            else if (!fixes(us, *m, s))
              r.add("G3", "s=" + us.states[s] + ": " + U[a] + "⊕" + U[b] + "=" + U[*m] + " does not fix s");
          }
      break;
  }
  return r;
}

ValidationReport check_sufficient(const UpdateSpace& us, Sufficient which) {
  ValidationReport r;
  const Idx nu = us.updates.size(), ns = us.states.size();
  const auto& U = us.updates;
  if (which == Sufficient::FineEnough) {
    for (Idx s = 0; s < ns; ++s)
      for (Idx a = 0; a < nu; ++a)
        for (Idx b = 0; b < nu; ++b) {
          auto ra = ran_mask(us, s, a), rb = ran_mask(us, s, b);
          for (Idx x = 0; x < ns; ++x) {
            if (!ra[x] || !rb[x]) continue;
            bool refined = false;
            for (Idx c = 0; c < nu && !refined; ++c)
              refined = us.ule[a][c] && us.ule[b][c] && ran_mask(us, s, c)[x];
            if (!refined)
              r.add("fine-enough", "s=" + us.states[s] + ": no common refinement of " + U[a] + " and " + U[b] +
                                       " reaches " + us.states[x]);
          }
        }
    if (r.ok() && !check_condition(us, Condition::G1).ok())
      r.add("implication", "fine-enough holds but G1 fails");
  } else {
    for (Idx a = 0; a < nu; ++a)
      for (Idx b = 0; b < nu; ++b)
        if ((us.ule[a][b] || us.ule[b][a]) && !umerge(us, a, b))
          r.add("comparable-defined", U[a] + "⊕" + U[b] + " undefined on a comparable pair");
    for (Idx a = 0; a < nu; ++a)
      for (Idx b = 0; b < nu; ++b)
        for (Idx c = 0; c < nu; ++c) {
          auto bc = umerge(us, b, c);
          auto ab = umerge(us, a, b);
          std::optional<Idx> left = bc ? umerge(us, a, *bc) : std::nullopt;
          std::optional<Idx> right = ab ? umerge(us, *ab, c) : std::nullopt;
          if (left != right)
            r.add("associative", U[a] + "⊕(" + U[b] + "⊕" + U[c] + ") = " + (left ? U[*left] : "undefined") + " but (" +
                                     U[a] + "⊕" + U[b] + ")⊕" + U[c] + " = " + (right ? U[*right] : "undefined"));
        }
    if (r.ok() && !check_condition(us, Condition::G2).ok())
      r.add("implication", "associative-join holds but G2 fails");
  }
  return r;
}

ValidationReport check_state_elimination(const UpdateSpace& us) {
  ValidationReport r;
  const Idx nu = us.updates.size(), ns = us.states.size();
  std::vector<std::vector<bool>> eran;
  for (Idx u = 0; u < nu; ++u) eran.push_back(erased_ran_mask(us, u));

  for (Idx a = 0; a < nu; ++a)
    for (Idx b = 0; b < nu; ++b) {
      auto m = umerge(us, a, b);
      if (!m) continue;
      for (Idx x = 0; x < ns; ++x)
        if (eran[a][x] && eran[b][x] && !eran[*m][x])
          r.add("erased-ran-respected", us.updates[a] + "⊕" + us.updates[b] + " loses " + us.states[x]);
    }

  // Erased domain: updates first, then states, as one table.
  std::vector<std::string> names;
  for (const auto& u : us.updates) names.push_back("u:" + u);
  for (const auto& s : us.states) names.push_back("s:" + s);
  FiniteTable<std::string> t(names);
  for (Idx a = 0; a < nu; ++a) {
    for (Idx b = 0; b < nu; ++b) t.le[a][b] = us.ule[a][b];
    for (Idx x = 0; x < ns; ++x) t.le[a][nu + x] = eran[a][x];
  }
  for (Idx x = 0; x < ns; ++x) t.le[nu + x][nu + x] = true;
  t.id = t.le;
  auto elim = [&](Idx a, Idx b) -> std::optional<Idx> {
    const bool ua = a < nu, ub = b < nu;
    if (!ua && !ub) return a == b ? std::optional<Idx>(a) : std::nullopt;
    if (ua && ub) return umerge(us, a, b);
    const Idx u = ua ? a : b, s = ua ? b : a;
    if (eran[u][s - nu]) return s;
    return std::nullopt;
  };
  for (Idx a = 0; a < names.size(); ++a)
    for (Idx b = 0; b < names.size(); ++b) {
      auto m = elim(a, b);
      if (!m) continue;
      auto j = detail::join_index(t, a, b);
      if (!j || *j != *m)
        r.add("erased-merge-sound", names[a] + " ⊕ " + names[b] + " = " + names[*m] +
                                        (j ? " but the join is " + names[*j] : " but no join exists"));
    }

  auto erase = [&](const SUElement& e) -> Idx {
    return e.is_proper() ? nu + us.state_index(e.state) : us.update_index(*e.update);
  };
  const auto carrier = su_carrier(us);
  for (const auto& a : carrier)
    for (const auto& b : carrier) {
      auto m = merge_su(us, a, b);
      if (!m) continue;
      auto e = elim(erase(a), erase(b));
      if (!e || *e != erase(*m))
        r.add("erasure-agreement", show(a) + " ⊕ " + show(b) + " = " + show(*m) + " but the erased merge gives " +
                                       (e ? names[*e] : "undefined"));
    }
  return r;
}

UpdateSpace dt_toy_space() {
  auto us = UpdateSpace::make({"empty", "full"}, {"noop", "add", "del"});
  us.set_le("noop", "add");
  us.set_le("noop", "del");
  for (const char* u : {"noop", "add", "del"}) {
    us.set_merge("noop", u, u);
    us.set_merge(u, "noop", u);
  }
  us.set_merge("add", "add", "add");
  us.set_merge("del", "del", "del");
  for (const char* s : {"empty", "full"}) {
    us.set_interp("noop", s, s);
    us.set_interp("add", s, "full");
    us.set_interp("del", s, "empty");
  }
  return us;
}

UpdateSpace g1_violation_space() {
  auto us = UpdateSpace::make({"a", "b", "c"}, {"o", "u1", "u2", "u12"});
  const std::vector<std::string> all = {"o", "u1", "u2", "u12"};
  for (const auto& u : all) us.set_le("o", u);
  us.set_le("u1", "u12");
  us.set_le("u2", "u12");
  for (const auto& x : all)
    for (const auto& y : all) {
      // Join of the diamond.
      std::string j = x == y ? x : x == "o" ? y : y == "o" ? x : "u12";
      us.set_merge(x, y, j);
    }
  us.set_interp("o", "a", "a");
  us.set_interp("u1", "a", "b");
  us.set_interp("u2", "a", "b");
  us.set_interp("u12", "a", "c");
  for (const auto& u : all) {
    us.set_interp(u, "b", "b");
    us.set_interp(u, "c", "c");
  }
  return us;
}

UpdateSpace g2_violation_space() {
  auto us = UpdateSpace::make({"a", "b"}, {"u1", "u2", "t"});
  us.set_le("u1", "t");
  us.set_le("u2", "t");
  for (const char* u : {"u1", "u2", "t"}) us.set_merge(u, u, u);
  us.set_merge("u1", "t", "t");
  us.set_merge("t", "u1", "t");
  us.set_merge("u2", "t", "t");
  us.set_merge("t", "u2", "t");
  for (const char* u : {"u1", "u2", "t"}) {
    us.set_interp(u, "a", "b");
    us.set_interp(u, "b", "a");
  }
  return us;
}

UpdateSpace g3_violation_space() {
  auto us = UpdateSpace::make({"a"}, {"u1", "u2"});
  us.set_merge("u1", "u1", "u1");
  us.set_merge("u2", "u2", "u2");
  us.set_interp("u1", "a", "a");
  us.set_interp("u2", "a", "a");
  return us;
}

}  // namespace pslens
