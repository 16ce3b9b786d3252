#pragma once

// Standard i-poset constructions: discrete sets, P_Omega, P x Q, P + Q,
// powersets ordered by reverse inclusion, and restriction to an
// upward-closed predicate.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pslens/errors.hpp"
#include "pslens/iposet.hpp"
#include "pslens/values.hpp"

namespace pslens {

// (<=) = I = (=). Merge is defined on the diagonal only, which is all a
// discrete i-poset needs to be duplicable.
template <class T>
IPoset<T> discrete(std::vector<T> elems, std::string name = "discrete") {
  typename IPoset<T>::Parts p;
  p.name = std::move(name);
  p.le = [](const T& a, const T& b) { return a == b; };
  p.identical = p.le;
  p.merge = [](const T& a, const T& b) -> std::optional<T> {
    if (a == b) return a;
    return std::nullopt;
  };
  p.carrier = std::move(elems);
  return IPoset<T>(std::move(p));
}

// Adds a fresh least element Omega. The result has a merge iff the base does.
template <class T>
IPoset<Lifted<T>> lift_omega(const IPoset<T>& base) {
  using L = Lifted<T>;
  typename IPoset<L>::Parts p;
  p.name = base.name() + "_Ω";
  p.le = [base](const L& a, const L& b) {
    if (a.is_omega()) return true;
    return !b.is_omega() && base.le(a.value(), b.value());
  };
  p.identical = [base](const L& a, const L& b) {
    if (a.is_omega()) return true;
    return !b.is_omega() && base.identical(a.value(), b.value());
  };
  p.least = L::omega();
  if (base.has_merge()) {
    p.merge = [base](const L& a, const L& b) -> std::optional<L> {
      if (a.is_omega()) return b;
      if (b.is_omega()) return a;
      auto m = base.merge(a.value(), b.value());
      if (!m) return std::nullopt;
      return L::of(*m);
    };
  }
  if (base.is_finite()) {
    std::vector<L> elems{L::omega()};
    for (const auto& x : base.elements()) elems.push_back(L::of(x));
    p.carrier = std::move(elems);
  }
  p.member = [base](const L& x) { return x.is_omega() || base.contains(x.value()); };
  return IPoset<L>(std::move(p));
}

template <class A, class B>
IPoset<std::pair<A, B>> product(const IPoset<A>& left, const IPoset<B>& right) {
  using P = std::pair<A, B>;
  typename IPoset<P>::Parts p;
  p.name = left.name() + "×" + right.name();
  p.le = [left, right](const P& a, const P& b) {
    return left.le(a.first, b.first) && right.le(a.second, b.second);
  };
  p.identical = [left, right](const P& a, const P& b) {
    return left.identical(a.first, b.first) && right.identical(a.second, b.second);
  };
  if (left.least() && right.least()) p.least = P{*left.least(), *right.least()};
  if (left.has_merge() && right.has_merge()) {
    p.merge = [left, right](const P& a, const P& b) -> std::optional<P> {
      auto l = left.merge(a.first, b.first);
      if (!l) return std::nullopt;
      auto r = right.merge(a.second, b.second);
      if (!r) return std::nullopt;
      return P{std::move(*l), std::move(*r)};
    };
  }
  if (left.is_finite() && right.is_finite()) {
    std::vector<P> elems;
    elems.reserve(left.elements().size() * right.elements().size());
    for (const auto& a : left.elements())
      for (const auto& b : right.elements()) elems.emplace_back(a, b);
    p.carrier = std::move(elems);
  }
  p.member = [left, right](const P& x) { return left.contains(x.first) && right.contains(x.second); };
  return IPoset<P>(std::move(p));
}

// Elements with different tags are incomparable, so the sum is never
// lower-bounded.
template <class A, class B>
IPoset<Sum<A, B>> sum(const IPoset<A>& left, const IPoset<B>& right) {
  using S = Sum<A, B>;
  typename IPoset<S>::Parts p;
  p.name = left.name() + "+" + right.name();
  p.le = [left, right](const S& a, const S& b) {
    if (a.is_left() && b.is_left()) return left.le(a.left(), b.left());
    if (a.is_right() && b.is_right()) return right.le(a.right(), b.right());
    return false;
  };
  p.identical = [left, right](const S& a, const S& b) {
    if (a.is_left() && b.is_left()) return left.identical(a.left(), b.left());
    if (a.is_right() && b.is_right()) return right.identical(a.right(), b.right());
    return false;
  };
  if (left.has_merge() && right.has_merge()) {
    p.merge = [left, right](const S& a, const S& b) -> std::optional<S> {
      if (a.is_left() && b.is_left()) {
        auto m = left.merge(a.left(), b.left());
        if (m) return S::inl(std::move(*m));
      } else if (a.is_right() && b.is_right()) {
        auto m = right.merge(a.right(), b.right());
        if (m) return S::inr(std::move(*m));
      }
      return std::nullopt;
    };
  }
  if (left.is_finite() && right.is_finite()) {
    std::vector<S> elems;
    for (const auto& a : left.elements()) elems.push_back(S::inl(a));
    for (const auto& b : right.elements()) elems.push_back(S::inr(b));
    p.carrier = std::move(elems);
  }
  p.member = [left, right](const S& x) {
    return x.is_left() ? left.contains(x.left()) : right.contains(x.right());
  };
  return IPoset<S>(std::move(p));
}

// Subsets of base, each kept in base order, ordered by reverse inclusion
// (a smaller set of candidate states is more specified). The full set is the
// least element and merge is intersection. With include_empty = false the
// empty set is left out and merge fails where the intersection would be empty.
template <class T>
IPoset<std::vector<T>> powerset(const std::vector<T>& base, bool include_empty = false,
                                std::string name = "powerset") {
  using V = std::vector<T>;
  if (base.size() > 20) throw InvalidArgs("powerset base too large to enumerate");
  if (base.empty() && !include_empty) throw InvalidArgs("powerset of an empty base without the empty set is empty");
  auto contains_all = [](const V& big, const V& small) {
    for (const auto& x : small) {
      bool found = false;
      for (const auto& y : big)
        if (x == y) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  };
  typename IPoset<V>::Parts p;
  p.name = std::move(name);
  p.le = [contains_all](const V& a, const V& b) { return contains_all(a, b); };
  p.identical = p.le;
  p.least = base;
  p.merge = [base, include_empty](const V& a, const V& b) -> std::optional<V> {
    V out;
    for (const auto& x : base) {
      bool in_a = false, in_b = false;
      for (const auto& y : a) in_a = in_a || y == x;
      for (const auto& y : b) in_b = in_b || y == x;
      if (in_a && in_b) out.push_back(x);
    }
    if (out.empty() && !include_empty) return std::nullopt;
    return out;
  };
  std::vector<V> elems;
  const std::size_t n = base.size();
  for (std::size_t mask = (1u << n); mask-- > 0;) {
    if (mask == 0 && !include_empty) continue;
    V subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(base[i]);
    elems.push_back(std::move(subset));
  }
  p.carrier = elems;
  p.member = [elems](const V& x) {
    for (const auto& e : elems)
      if (e == x) return true;
    return false;
  };
  return IPoset<V>(std::move(p));
}

// Upward-closure check: pred(a) and a <= b imply pred(b). Only decidable on
// finite carriers; returns the first offending pair.
template <class T>
std::optional<std::pair<T, T>> monotonicity_witness(const IPoset<T>& base,
                                                    const std::function<bool(const T&)>& pred) {
  for (const auto& a : base.elements()) {
    if (!pred(a)) continue;
    for (const auto& b : base.elements())
      if (base.le(a, b) && !pred(b)) return std::pair<T, T>{a, b};
  }
  return std::nullopt;
}

// P_phi: the sub-i-poset of elements satisfying an upward-closed predicate.
template <class T>
IPoset<T> restrict(const IPoset<T>& base, std::function<bool(const T&)> pred, std::string name = {}) {
  if (!pred) throw InvalidArgs("restrict needs a predicate");
  if (base.is_finite()) {
    if (auto w = monotonicity_witness(base, pred))
      throw NonMonotonePredicate("predicate holds on " + show(w->first) + " but not on " + show(w->second) +
                                 " although " + show(w->first) + " <= " + show(w->second));
  }
  typename IPoset<T>::Parts p;
  p.name = name.empty() ? base.name() + "|φ" : std::move(name);
  p.le = [base](const T& a, const T& b) { return base.le(a, b); };
  p.identical = [base](const T& a, const T& b) { return base.identical(a, b); };
  if (base.least() && pred(*base.least())) p.least = base.least();
  if (base.has_merge()) {
    p.merge = [base, pred](const T& a, const T& b) -> std::optional<T> {
      auto m = base.merge(a, b);
      if (m && !pred(*m)) return std::nullopt;
      return m;
    };
  }
  if (base.is_finite()) {
    std::vector<T> elems;
    for (const auto& x : base.elements())
      if (pred(x)) elems.push_back(x);
    p.carrier = std::move(elems);
  }
  p.member = [base, pred](const T& x) { return base.contains(x) && pred(x); };
  return IPoset<T>(std::move(p));
}

// Re-labels a finite i-poset by rendering each element with show(). The
// rendering must be injective on the carrier.
template <class T>
FiniteIPoset<std::string> stringify(const IPoset<T>& p) {
  auto [table, escapes] = tabulate(p);
  if (!escapes.ok()) throw InvalidIPoset("cannot stringify '" + p.name() + "':\n" + escapes.to_string());
  std::vector<std::string> names;
  for (const auto& e : table.elements) names.push_back(show(e));
  FiniteTable<std::string> out(names);
  out.le = table.le;
  out.id = table.id;
  out.merge = table.merge;
  out.least = table.least;
  return FiniteIPoset<std::string>(std::move(out), p.name());
}

// Untyped entry point over string-labelled finite i-posets, used by the
// text format, the CLI and the Python bindings.
struct StandardArgs {
  std::vector<FiniteIPoset<std::string>> inputs;
  std::vector<std::string> base;
  std::function<bool(const std::string&)> predicate;
  bool include_empty = false;
  std::string name;
};

// kind is one of: discrete, lift_omega, product, sum, powerset, restrict.
FiniteIPoset<std::string> build_standard(const std::string& kind, const StandardArgs& args);

}  // namespace pslens
