#pragma once

// i-posets: a poset (carrier, <=) together with a reflexive relation
// I ⊆ (<=) of identical updates, an optional least element and an optional
// partial merge operator.
//
// Two representations live here:
//   * IPoset<T>      relations exposed as functions; may be infinite.
//   * FiniteTable<T> raw explicit tables, possibly invalid, which is what
//                    verify_iposet inspects. FiniteIPoset<T> wraps a table
//                    that has passed validation.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pslens/errors.hpp"
#include "pslens/report.hpp"
#include "pslens/values.hpp"

namespace pslens {

template <class T>
class IPoset {
 public:
  using Relation = std::function<bool(const T&, const T&)>;
  using MergeFn = std::function<std::optional<T>(const T&, const T&)>;
  using Member = std::function<bool(const T&)>;

  struct Parts {
    std::string name;
    Relation le;
    // identical(a, b) holds iff a ∈ I_b.
    Relation identical;
    std::optional<T> least;
    // Empty when the i-poset carries no merge operator.
    MergeFn merge;
    // Present only for finite, enumerable carriers.
    std::optional<std::vector<T>> carrier;
    // Carrier membership. Defaults to carrier lookup (finite) or "always".
    Member member;
  };

  explicit IPoset(Parts parts) : parts_(std::make_shared<const Parts>(std::move(parts))) {
    if (!parts_->le || !parts_->identical)
      throw InvalidArgs("i-poset '" + parts_->name + "' needs both le and identical");
  }

  const std::string& name() const { return parts_->name; }

  bool le(const T& a, const T& b) const { return parts_->le(a, b); }
  bool identical(const T& a, const T& b) const { return parts_->identical(a, b); }

  const std::optional<T>& least() const { return parts_->least; }
  bool lower_bounded() const { return parts_->least.has_value(); }

  bool has_merge() const { return static_cast<bool>(parts_->merge); }

  // nullopt means the merge is undefined for this pair.
  std::optional<T> merge(const T& a, const T& b) const {
    if (!parts_->merge) throw MissingMerge("i-poset '" + parts_->name + "' has no merge operator");
    return parts_->merge(a, b);
  }

  const MergeFn& merge_fn() const { return parts_->merge; }

  bool is_finite() const { return parts_->carrier.has_value(); }

  const std::vector<T>& elements() const {
    if (!parts_->carrier) throw InvalidArgs("i-poset '" + parts_->name + "' is not finite");
    return *parts_->carrier;
  }

  bool contains(const T& x) const {
    if (parts_->member) return parts_->member(x);
    if (parts_->carrier) {
      for (const auto& e : *parts_->carrier)
        if (e == x) return true;
      return false;
    }
    return true;
  }

  const Parts& parts() const { return *parts_; }

 private:
  std::shared_ptr<const Parts> parts_;
};

// Explicit relation tables over a finite element list. Nothing is validated
// here; see verify_iposet.
template <class T>
struct FiniteTable {
  using Matrix = std::vector<std::vector<bool>>;
  using MergeTable = std::vector<std::vector<std::optional<std::size_t>>>;

  FiniteTable() = default;
  explicit FiniteTable(std::vector<T> elems)
      : elements(std::move(elems)),
        le(elements.size(), std::vector<bool>(elements.size(), false)),
        id(elements.size(), std::vector<bool>(elements.size(), false)) {}

  std::vector<T> elements;
  Matrix le;
  Matrix id;
  std::optional<MergeTable> merge;
  std::optional<std::size_t> least;

  std::size_t size() const { return elements.size(); }

  std::optional<std::size_t> index_of(const T& x) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == x) return i;
    return std::nullopt;
  }

  std::size_t require_index(const T& x) const {
    auto i = index_of(x);
    if (!i) throw InvalidArgs("element " + show(x) + " is not in the carrier");
    return *i;
  }

  void enable_merge() {
    if (!merge) merge.emplace(size(), std::vector<std::optional<std::size_t>>(size()));
  }

  void add_le(const T& a, const T& b) { le[require_index(a)][require_index(b)] = true; }
  void add_id(const T& a, const T& b) { id[require_index(a)][require_index(b)] = true; }
  void add_merge(const T& a, const T& b, const T& c) {
    enable_merge();
    (*merge)[require_index(a)][require_index(b)] = require_index(c);
  }
  void set_least(const T& a) { least = require_index(a); }

  void add_reflexive() {
    for (std::size_t i = 0; i < size(); ++i) le[i][i] = id[i][i] = true;
  }
};

namespace detail {

template <class T>
std::string pair_text(const FiniteTable<T>& t, std::size_t a, std::size_t b) {
  return "(" + show(t.elements[a]) + ", " + show(t.elements[b]) + ")";
}

// Unique least upper bound by enumeration of all common upper bounds.
template <class T>
std::optional<std::size_t> join_index(const FiniteTable<T>& t, std::size_t a, std::size_t b) {
  std::vector<std::size_t> ubs;
  for (std::size_t k = 0; k < t.size(); ++k)
    if (t.le[a][k] && t.le[b][k]) ubs.push_back(k);
  std::optional<std::size_t> found;
  for (auto m : ubs) {
    bool below_all = true;
    for (auto k : ubs)
      if (!t.le[m][k]) {
        below_all = false;
        break;
      }
    if (!below_all) continue;
    if (found) return std::nullopt;  // only possible on a non-antisymmetric table
    found = m;
  }
  return found;
}

}  // namespace detail

template <class T>
ValidationReport verify_iposet(const FiniteTable<T>& t) {
  ValidationReport r;
  const std::size_t n = t.size();
  if (n == 0) {
    r.add("nonempty", "element list is empty");
    return r;
  }
  if (t.le.size() != n || t.id.size() != n) {
    r.add("table-shape", "relation tables do not match the element count");
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (t.elements[i] == t.elements[j]) r.add("distinct-elements", show(t.elements[i]));

  for (std::size_t i = 0; i < n; ++i)
    if (!t.le[i][i]) r.add("le-reflexive", show(t.elements[i]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (t.le[i][j] && t.le[j][i]) r.add("le-antisymmetric", detail::pair_text(t, i, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!t.le[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (t.le[j][k] && !t.le[i][k])
          r.add("le-transitive", show(t.elements[i]) + " <= " + show(t.elements[j]) + " <= " +
                                     show(t.elements[k]));
    }

  for (std::size_t i = 0; i < n; ++i) {
    if (!t.id[i][i]) r.add("id-reflexive", show(t.elements[i]));
    for (std::size_t j = 0; j < n; ++j)
      if (t.id[i][j] && !t.le[i][j]) r.add("id-subset-le", detail::pair_text(t, i, j));
  }

  if (t.least) {
    const auto o = *t.least;
    if (o >= n) {
      r.add("least-in-carrier", "least index out of range");
    } else {
      for (std::size_t s = 0; s < n; ++s) {
        if (!t.le[o][s]) r.add("least-is-least", detail::pair_text(t, o, s));
        if (!t.id[o][s]) r.add("least-identical", detail::pair_text(t, o, s));
      }
    }
  }

  if (t.merge) {
    const auto& m = *t.merge;
    if (m.size() != n) {
      r.add("table-shape", "merge table does not match the element count");
      return r;
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!m[a][b]) continue;
        auto j = detail::join_index(t, a, b);
        if (!j || *j != *m[a][b])
          r.add("merge-sound", detail::pair_text(t, a, b) + " merges to " + show(t.elements[*m[a][b]]) +
                                   (j ? " but the join is " + show(t.elements[*j]) : " but no join exists"));
      }
  }
  return r;
}

// An eagerly validated finite i-poset.
template <class T>
class FiniteIPoset {
 public:
  explicit FiniteIPoset(FiniteTable<T> table, std::string name = "finite")
      : table_(std::make_shared<const FiniteTable<T>>(std::move(table))), name_(std::move(name)) {
    auto report = verify_iposet(*table_);
    if (!report.ok()) throw InvalidIPoset("invalid i-poset '" + name_ + "':\n" + report.to_string());
  }

  const FiniteTable<T>& table() const { return *table_; }
  const std::vector<T>& elements() const { return table_->elements; }
  std::size_t size() const { return table_->size(); }
  const std::string& name() const { return name_; }

  bool le(const T& a, const T& b) const { return table_->le[index(a)][index(b)]; }
  bool identical(const T& a, const T& b) const { return table_->id[index(a)][index(b)]; }

  std::optional<T> least() const {
    if (!table_->least) return std::nullopt;
    return table_->elements[*table_->least];
  }

  bool has_merge() const { return table_->merge.has_value(); }

  std::optional<T> merge(const T& a, const T& b) const {
    if (!table_->merge) throw MissingMerge("i-poset '" + name_ + "' has no merge table");
    auto r = (*table_->merge)[index(a)][index(b)];
    if (!r) return std::nullopt;
    return table_->elements[*r];
  }

  std::optional<T> join(const T& a, const T& b) const {
    auto j = detail::join_index(*table_, index(a), index(b));
    if (!j) return std::nullopt;
    return table_->elements[*j];
  }

  IPoset<T> iposet() const {
    auto t = table_;
    typename IPoset<T>::Parts parts;
    parts.name = name_;
    parts.le = [t](const T& a, const T& b) { return t->le[t->require_index(a)][t->require_index(b)]; };
    parts.identical = [t](const T& a, const T& b) {
      return t->id[t->require_index(a)][t->require_index(b)];
    };
    parts.least = least();
    if (t->merge) {
      parts.merge = [t](const T& a, const T& b) -> std::optional<T> {
        auto r = (*t->merge)[t->require_index(a)][t->require_index(b)];
        if (!r) return std::nullopt;
        return t->elements[*r];
      };
    }
    parts.carrier = t->elements;
    return IPoset<T>(std::move(parts));
  }

 private:
  std::size_t index(const T& x) const { return table_->require_index(x); }

  std::shared_ptr<const FiniteTable<T>> table_;
  std::string name_;
};

template <class T>
std::optional<T> join(const FiniteIPoset<T>& p, const T& a, const T& b) {
  return p.join(a, b);
}

// Join by enumerating the carrier of a finite function-backed i-poset.
template <class T>
std::optional<T> join(const IPoset<T>& p, const T& a, const T& b) {
  std::vector<const T*> ubs;
  for (const auto& k : p.elements())
    if (p.le(a, k) && p.le(b, k)) ubs.push_back(&k);
  for (const T* m : ubs) {
    bool least_ub = true;
    for (const T* k : ubs)
      if (!p.le(*m, *k)) {
        least_ub = false;
        break;
      }
    if (least_ub) return *m;
  }
  return std::nullopt;
}

// Materialize the relations of p over an explicit element list. Merge results
// that fall outside the list are reported as "merge-closure" violations.
template <class T>
std::pair<FiniteTable<T>, ValidationReport> tabulate(const IPoset<T>& p, const std::vector<T>& elems) {
  FiniteTable<T> t(elems);
  ValidationReport escapes;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.le[i][j] = p.le(elems[i], elems[j]);
      t.id[i][j] = p.identical(elems[i], elems[j]);
    }
  if (p.least()) {
    auto o = t.index_of(*p.least());
    if (o)
      t.least = o;
    else
      escapes.add("least-in-carrier", show(*p.least()));
  }
  if (p.has_merge()) {
    t.enable_merge();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto r = p.merge(elems[i], elems[j]);
        if (!r) continue;
        auto k = t.index_of(*r);
        if (k)
          (*t.merge)[i][j] = k;
        else
          escapes.add("merge-closure", detail::pair_text(t, i, j) + " merges to " + show(*r) + " outside the universe");
      }
  }
  return {std::move(t), std::move(escapes)};
}

template <class T>
std::pair<FiniteTable<T>, ValidationReport> tabulate(const IPoset<T>& p) {
  return tabulate(p, p.elements());
}

template <class T>
ValidationReport verify_iposet(const IPoset<T>& p) {
  auto [table, escapes] = tabulate(p);
  auto r = verify_iposet(table);
  r.append(escapes);
  return r;
}

// Duplicability: (i) merge(x, y) = z implies join(x, y) = z, and
// (ii) x, y ∈ I_z implies merge(x, y) is defined and lies in I_z.
template <class T>
ValidationReport check_duplicable(const FiniteTable<T>& t) {
  if (!t.merge) throw MissingMerge();
  ValidationReport r;
  const auto& m = *t.merge;
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!m[a][b]) continue;
      auto j = detail::join_index(t, a, b);
      if (!j || *j != *m[a][b])
        r.add("merge-sound", detail::pair_text(t, a, b) + " merges to " + show(t.elements[*m[a][b]]) +
                                 (j ? " but the join is " + show(t.elements[*j]) : " but no join exists"));
    }
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t a = 0; a < n; ++a) {
      if (!t.id[a][z]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!t.id[b][z]) continue;
        if (!m[a][b])
          r.add("merge-total-on-identical",
                detail::pair_text(t, a, b) + " both in I_" + show(t.elements[z]) + " but merge is undefined");
        else if (!t.id[*m[a][b]][z])
          r.add("merge-closed-on-identical", detail::pair_text(t, a, b) + " merges to " +
                                                 show(t.elements[*m[a][b]]) + " outside I_" +
                                                 show(t.elements[z]));
      }
    }
  return r;
}

template <class T>
ValidationReport check_duplicable(const FiniteIPoset<T>& p) {
  return check_duplicable(p.table());
}

template <class T>
ValidationReport check_duplicable(const IPoset<T>& p, const std::vector<T>& universe) {
  if (!p.has_merge()) throw MissingMerge("i-poset '" + p.name() + "' has no merge operator");
  auto [table, escapes] = tabulate(p, universe);
  auto r = check_duplicable(table);
  r.append(escapes);
  return r;
}

template <class T>
ValidationReport check_duplicable(const IPoset<T>& p) {
  return check_duplicable(p, p.elements());
}

}  // namespace pslens
