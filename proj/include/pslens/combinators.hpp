#pragma once

// Primitive lenses and lens combinators.

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "pslens/constructions.hpp"
#include "pslens/lens.hpp"

namespace pslens {

template <class T>
PSLens<T, T> identity_lens(const IPoset<T>& p) {
  return PSLens<T, T>(
      "id", p, p, [](const T& s) { return s; },
      [](const T&, const T& v) { return PutResult<T>(v); });
}

// get _ = a; put(_, v) = Omega when v ∈ I_a. Returning Omega rather than
// demanding v = a keeps the put result as small as possible.
template <class S, class V>
PSLens<S, V> constant_lens(const IPoset<S>& source, const IPoset<V>& view, V a) {
  if (!source.least())
    throw InvalidArgs("constant lens needs a lower-bounded source, '" + source.name() + "' has no least element");
  S omega = *source.least();
  return PSLens<S, V>(
      "const[" + show(a) + "]", source, view, [a](const S&) { return a; },
      [view, a, omega](const S& s, const V& v) -> PutResult<S> {
        if (view.identical(v, a)) return omega;
        return PutResult<S>::fail(FailureReason::GuardFailed,
                                  put_text(s, v) + ": view is not an identical update of " + show(a));
      });
}

// get s = (s, s); put(_, (v1, v2)) = v1 ⊕ v2. For finite carriers the
// duplicability conditions are checked up front unless validate is false.
template <class T>
PSLens<T, std::pair<T, T>> dup_lens(const IPoset<T>& p, bool validate = true) {
  using V = std::pair<T, T>;
  if (!p.has_merge()) throw MissingMerge("dup needs a merge operator on '" + p.name() + "'");
  if (validate && p.is_finite()) {
    auto report = check_duplicable(p);
    if (!report.ok()) throw InvalidIPoset("'" + p.name() + "' is not duplicable:\n" + report.to_string());
  }
  return PSLens<T, V>(
      "dup", p, product(p, p), [](const T& s) { return V{s, s}; },
      [p](const T& s, const V& v) -> PutResult<T> {
        auto m = p.merge(v.first, v.second);
        if (m) return std::move(*m);
        return PutResult<T>::fail(FailureReason::MergeConflict,
                                  put_text(s, v) + ": " + show(v.first) + " and " + show(v.second) + " do not merge");
      });
}

template <class A, class B, class C>
PSLens<A, C> compose(const PSLens<A, B>& first, const PSLens<B, C>& second) {
  return PSLens<A, C>(
      first.name() + " ; " + second.name(), first.source(), second.view(),
      [first, second](const A& a) { return second.get(first.get(a)); },
      [first, second](const A& a, const C& c) -> PutResult<A> {
        auto b = second.put(first.get(a), c);
        if (!b) return b.template propagate<A>("compose[2]");
        auto r = first.put(a, b.value());
        if (!r) return r.template propagate<A>("compose[1]");
        return r;
      });
}

template <class S1, class V1, class S2, class V2>
PSLens<std::pair<S1, S2>, std::pair<V1, V2>> product_lens(const PSLens<S1, V1>& left,
                                                          const PSLens<S2, V2>& right) {
  using S = std::pair<S1, S2>;
  using V = std::pair<V1, V2>;
  return PSLens<S, V>(
      "(" + left.name() + " × " + right.name() + ")", product(left.source(), right.source()),
      product(left.view(), right.view()),
      [left, right](const S& s) { return V{left.get(s.first), right.get(s.second)}; },
      [left, right](const S& s, const V& v) -> PutResult<S> {
        auto l = left.put(s.first, v.first);
        if (!l) return l.template propagate<S>("product.left");
        auto r = right.put(s.second, v.second);
        if (!r) return r.template propagate<S>("product.right");
        return S{l.value(), r.value()};
      });
}

// The tag of the updated source is taken from the original source only.
template <class T>
PSLens<Sum<T, T>, T> untag_s(const IPoset<T>& p) {
  using S = Sum<T, T>;
  return PSLens<S, T>(
      "untagS", sum(p, p), p, [](const S& s) { return s.is_left() ? s.left() : s.right(); },
      [](const S& s, const T& v) -> PutResult<S> { return s.is_left() ? S::inl(v) : S::inr(v); });
}

// General untagging over P_phi1 + P_phi2. The source's tag is kept when its
// predicate accepts v; the tag switches only when the other predicate accepts
// v and the source's own does not.
template <class T>
PSLens<Sum<T, T>, T> untag_pred(const IPoset<T>& p, std::function<bool(const T&)> phi1,
                                std::function<bool(const T&)> phi2) {
  using S = Sum<T, T>;
  auto left = restrict(p, phi1, p.name() + "|φ1");
  auto right = restrict(p, phi2, p.name() + "|φ2");
  return PSLens<S, T>(
      "untag", sum(left, right), p, [](const S& s) { return s.is_left() ? s.left() : s.right(); },
      [phi1, phi2](const S& s, const T& v) -> PutResult<S> {
        const bool l = phi1(v), r = phi2(v);
        if ((s.is_left() && l) || (s.is_right() && l && !r)) return S::inl(v);
        if ((s.is_right() && r) || (s.is_left() && r && !l)) return S::inr(v);
        return PutResult<S>::fail(FailureReason::GuardFailed,
                                  put_text(s, v) + ": no tag accepts the view");
      });
}

// A ps-initiator: get embeds a proper state into the partially-specified
// domain, put applies the partially-specified state to it as an update.
template <class S, class P>
PSLens<S, P> initiator(const IPoset<S>& s_domain, const IPoset<P>& p_domain, std::function<P(const S&)> embed,
                       std::function<std::optional<S>(const P&, const S&)> apply, std::string name = "init") {
  return PSLens<S, P>(
      std::move(name), s_domain, p_domain, embed, [apply](const S& s, const P& v) -> PutResult<S> {
        auto r = apply(v, s);
        if (r) return std::move(*r);
        return PutResult<S>::fail(FailureReason::OutOfDomain, put_text(s, v) + ": update does not apply");
      });
}

}  // namespace pslens
