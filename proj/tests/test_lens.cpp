#include "doctest.h"
#include "pslens/fixtures.hpp"

using namespace pslens;

namespace {

using L = Lifted<int>;
using LL = std::pair<L, L>;

// Same get everywhere and same put, definedness included.
template <class S, class V>
bool same_lens(const PSLens<S, V>& a, const PSLens<S, V>& b, const std::vector<S>& ss, const std::vector<V>& vs) {
  for (const auto& s : ss) {
    if (!(a.get(s) == b.get(s))) return false;
    for (const auto& v : vs) {
      auto x = a.put(s, v);
      auto y = b.put(s, v);
      if (x.defined() != y.defined()) return false;
      if (x.defined() && !(x.value() == y.value())) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("identity") {
  auto l = identity_lens(chain(4));
  CHECK(l.get(3) == 3);
  CHECK(l.put(1, 2).value() == 2);
}

TEST_CASE("constant lens") {
  auto src = ints_omega({1, 2});
  auto view = ints_omega({42, 7});
  auto l = constant_lens(src, view, L::of(42));
  CHECK(l.get(L::of(1)) == L::of(42));
  CHECK(l.put(L::of(2), L::of(42)).value() == L::omega());

  // I_42 in the view, listed by hand: Ω and 42.
  std::vector<L> i42;
  for (const auto& v : view.elements())
    if (view.identical(v, L::of(42))) i42.push_back(v);
  CHECK(i42 == std::vector<L>{L::omega(), L::of(42)});
  CHECK(l.put(L::of(1), L::omega()).value() == L::omega());

  auto bad = l.put(L::of(1), L::of(7));
  REQUIRE_FALSE(bad);
  CHECK(bad.failure().reason == FailureReason::GuardFailed);
  CHECK_THROWS_AS(bad.value(), Error);

  CHECK_THROWS_AS(constant_lens(discrete<int>({1}), view, L::of(42)), InvalidArgs);
}

TEST_CASE("dup merges the two copies") {
  auto base = ints_omega({1, 2});
  auto p = product(base, base);
  auto l = dup_lens(p);
  LL s{L::omega(), L::omega()};
  CHECK(l.get(LL{L::of(1), L::omega()}) == std::pair{LL{L::of(1), L::omega()}, LL{L::of(1), L::omega()}});
  CHECK(l.put(s, {LL{L::of(1), L::omega()}, LL{L::omega(), L::of(2)}}).value() == LL{L::of(1), L::of(2)});
  for (const auto& x : p.elements()) CHECK(l.put(s, {x, x}).value() == x);
  auto conflict = l.put(s, {LL{L::of(1), L::omega()}, LL{L::of(2), L::omega()}});
  REQUIRE_FALSE(conflict);
  CHECK(conflict.failure().reason == FailureReason::MergeConflict);
}

TEST_CASE("dup refuses domains without a sound merge") {
  IPoset<int>::Parts parts;
  parts.name = "nomerge";
  parts.le = parts.identical = [](int a, int b) { return a == b; };
  parts.carrier = std::vector<int>{1, 2};
  CHECK_THROWS_AS(dup_lens(IPoset<int>(parts)), MissingMerge);

  // A chain whose merge is min instead of max.
  parts.le = parts.identical = [](int a, int b) { return a <= b; };
  parts.least = 1;
  parts.merge = [](int a, int b) -> std::optional<int> { return std::min(a, b); };
  CHECK_THROWS_AS(dup_lens(IPoset<int>(parts)), InvalidIPoset);
  CHECK_NOTHROW(dup_lens(IPoset<int>(parts), false));
}

TEST_CASE("composition unit laws and associativity over fixtures") {
  auto f = fixture_lenses();
  auto small = ints_omega({1, 2});
  const auto& ss = small.elements();
  auto id = f.identity;
  CHECK(same_lens(compose(id, f.const42), f.const42, ss, f.const42.view().elements()));
  auto id42 = identity_lens(f.const42.view());
  CHECK(same_lens(compose(f.const42, id42), f.const42, ss, f.const42.view().elements()));
  CHECK(same_lens(compose(id, id), id, ss, ss));

  auto n = nat_initiator();
  auto idn = identity_lens(n.view());
  const auto& ns = n.source().elements();
  const auto& nv = n.view().elements();
  CHECK(same_lens(compose(compose(n, idn), idn), compose(n, compose(idn, idn)), ns, nv));

  // Associativity with partial puts on both sides.
  auto guarded = constant_lens(n.view(), ints_omega({0, 1, 2, 42}), L::of(1));
  auto l1 = compose(compose(n, idn), guarded);
  auto l2 = compose(n, compose(idn, guarded));
  CHECK(same_lens(l1, l2, ns, guarded.view().elements()));

  auto dup_pair = f.dup_pair;
  auto pp = product(small, small);
  auto dd = compose(dup_pair, product_lens(identity_lens(pp), identity_lens(pp)));
  CHECK(same_lens(compose(compose(identity_lens(pp), dup_pair), product_lens(identity_lens(pp), identity_lens(pp))),
                  dd, pp.elements(), dd.view().elements()));
}

TEST_CASE("composed failures carry the stage") {
  auto n = nat_initiator();
  auto guarded = constant_lens(n.view(), ints_omega({0, 1, 2, 42}), L::of(1));
  auto r = compose(n, guarded).put(0, L::of(2));
  REQUIRE_FALSE(r);
  CHECK(r.failure().reason == FailureReason::GuardFailed);
  CHECK(r.failure().stages == std::vector<std::string>{"compose[2]"});
  CHECK(r.failure().describe().rfind("GuardFailed at compose[2]: ", 0) == 0);
}

TEST_CASE("product lens is componentwise and tags the failing side") {
  auto small = ints_omega({1, 2});
  auto id = identity_lens(small);
  auto pid = product_lens(id, id);
  auto pp = product(small, small);
  CHECK(same_lens(pid, identity_lens(pp), pp.elements(), pp.elements()));

  auto guard = constant_lens(small, ints_omega({42, 7}), L::of(42));
  auto p = product_lens(id, guard);
  CHECK(p.get({L::of(1), L::of(2)}) == std::pair{L::of(1), L::of(42)});
  auto ok = p.put({L::of(1), L::of(2)}, {L::of(2), L::of(42)});
  CHECK(ok.value() == LL{L::of(2), L::omega()});
  auto r = p.put({L::of(1), L::of(2)}, {L::of(2), L::of(7)});
  REQUIRE_FALSE(r);
  CHECK(r.failure().stages == std::vector<std::string>{"product.right"});
  auto q = product_lens(guard, id).put({L::of(1), L::of(2)}, {L::of(7), L::of(1)});
  REQUIRE_FALSE(q);
  CHECK(q.failure().stages == std::vector<std::string>{"product.left"});
}

TEST_CASE("untag_s keeps the source tag") {
  auto p = discrete<int>({5, 7, 9});
  auto l = untag_s(p);
  using S = Sum<int, int>;
  CHECK(l.get(S::inl(5)) == 5);
  CHECK(l.put(S::inr(7), 9).value() == S::inr(9));
  CHECK(l.put(S::inl(7), 9).value() == S::inl(9));
  for (const auto& x : l.source().elements()) CHECK(l.put(x, l.get(x)).value() == x);
}

TEST_CASE("untag with predicates follows the case table") {
  auto p = chain(3);
  std::function<bool(const int&)> ge1 = [](const int& x) { return x >= 1; };
  std::function<bool(const int&)> ge2 = [](const int& x) { return x >= 2; };
  auto l = untag_pred(p, ge2, ge1);
  using S = Sum<int, int>;
  CHECK(l.put(S::inl(2), 3).value() == S::inl(3));
  // phi1 false, phi2 true: switch to the right.
  CHECK(l.put(S::inl(2), 1).value() == S::inr(1));
  // Right stays right while phi2 holds, even if phi1 holds too.
  CHECK(l.put(S::inr(1), 3).value() == S::inr(3));
  auto none = l.put(S::inl(2), 0);
  REQUIRE_FALSE(none);
  CHECK(none.failure().reason == FailureReason::GuardFailed);

  std::function<bool(const int&)> le1 = [](const int& x) { return x <= 1; };
  CHECK_THROWS_AS(untag_pred(p, le1, ge1), NonMonotonePredicate);
}

TEST_CASE("natural-number initiator") {
  auto n = nat_initiator();
  CHECK(n.put(42, L::of(1)).value() == 1);
  CHECK(n.put(1, L::omega()).value() == 1);
  CHECK(n.put(42, L::omega()).value() == 42);
  for (int s : n.source().elements()) {
    CHECK(n.get(s) == L::of(s));
    CHECK(n.put(s, L::omega()).value() == s);
  }

  auto partial = initiator<int, L>(
      discrete<int>({0, 1}), ints_omega({0, 1}), [](const int& s) { return L::of(s); },
      [](const L& v, const int& s) -> std::optional<int> {
        if (v.is_omega()) return s;
        if (v.value() == s) return s;
        return std::nullopt;
      });
  auto r = partial.put(0, L::of(1));
  REQUIRE_FALSE(r);
  CHECK(r.failure().reason == FailureReason::OutOfDomain);
}
