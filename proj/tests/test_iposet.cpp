#include <variant>

#include "doctest.h"
#include "oracles.hpp"
#include "pslens/constructions.hpp"
#include "pslens/enumerate.hpp"

using namespace pslens;

namespace {

FiniteIPoset<std::string> two_point_discrete() {
  FiniteTable<std::string> t({"x", "y"});
  t.add_reflexive();
  return FiniteIPoset<std::string>(t, "two");
}

// Key set {k1}, value {v}: deletion sets and maps as strings.
//   "D{}" "D{k1}" "f{}" "f{k1:v}"
FiniteTable<std::string> p1_table() {
  FiniteTable<std::string> t({"D{}", "D{k1}", "f{}", "f{k1:v}"});
  t.add_reflexive();
  t.add_le("D{}", "D{k1}");
  t.add_le("D{}", "f{}");
  t.add_le("D{}", "f{k1:v}");
  t.add_le("D{k1}", "f{}");
  t.id = t.le;
  t.set_least("D{}");
  return t;
}

// Bottom o, two middles a and b, two incomparable tops c and d.
FiniteTable<std::string> bowtie() {
  FiniteTable<std::string> t({"o", "a", "b", "c", "d"});
  t.add_reflexive();
  for (auto x : {"a", "b", "c", "d"}) t.add_le("o", x);
  for (auto x : {"a", "b"})
    for (auto y : {"c", "d"}) t.add_le(x, y);
  t.id = t.le;
  t.set_least("o");
  return t;
}

}  // namespace

TEST_CASE("discrete two-point table is valid") {
  auto p = two_point_discrete();
  CHECK(verify_iposet(p.table()).ok());
  CHECK(p.le("x", "x"));
  CHECK_FALSE(p.le("x", "y"));
  CHECK_FALSE(p.least());
}

TEST_CASE("identical pair outside le is reported") {
  FiniteTable<std::string> t({"x", "y"});
  t.add_reflexive();
  t.add_id("x", "y");
  auto r = verify_iposet(t);
  REQUIRE(r.mentions("id-subset-le"));
  CHECK(r.to_string().find("(x, y)") != std::string::npos);
  CHECK_THROWS_AS(FiniteIPoset<std::string>{t}, InvalidIPoset);
}

TEST_CASE("empty carrier and bad shapes") {
  CHECK(verify_iposet(FiniteTable<int>{}).mentions("nonempty"));
  FiniteTable<int> t({1, 2});
  t.le.pop_back();
  CHECK(verify_iposet(t).mentions("table-shape"));
  FiniteTable<int> dup({1, 1});
  dup.add_reflexive();
  CHECK(verify_iposet(dup).mentions("distinct-elements"));
}

TEST_CASE("least element must be identical everywhere") {
  FiniteTable<int> t({0, 1});
  t.add_reflexive();
  t.le[0][1] = true;
  t.least = 0;
  CHECK(verify_iposet(t).mentions("least-identical"));
  t.id[0][1] = true;
  CHECK(verify_iposet(t).ok());
}

TEST_CASE("P1 over one key is a valid i-poset") {
  auto t = p1_table();
  CHECK(verify_iposet(t).to_string() == "ok\n");
  FiniteIPoset<std::string> p(t, "P1");
  CHECK(p.le("D{k1}", "f{}"));
  CHECK_FALSE(p.le("D{k1}", "f{k1:v}"));
  CHECK(p.join("D{k1}", "f{k1:v}") == std::nullopt);
  CHECK(p.join("D{k1}", "f{}") == std::string("f{}"));
}

TEST_CASE("P1 with merge = join: oracle finds every I_f closed") {
  auto t = p1_table();
  t.enable_merge();
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b) (*t.merge)[a][b] = oracle::join(t.le, a, b);

  // Oracle first: list each I_f and close it under the join by hand.
  auto in_i = [&](std::size_t z) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < t.size(); ++x)
      if (t.id[x][z]) out.push_back(x);
    return out;
  };
  CHECK(in_i(t.require_index("f{}")).size() == 3);      // D{}, D{k1}, f{}
  CHECK(in_i(t.require_index("f{k1:v}")).size() == 2);  // D{}, f{k1:v}
  CHECK(in_i(t.require_index("D{}")).size() == 1);
  CHECK(oracle::duplicable(t));

  // Frozen: the checker agrees there is nothing to report.
  CHECK(check_duplicable(t).to_string() == "ok\n");
}

TEST_CASE("join in a bowtie with two incomparable tops is undefined") {
  auto t = bowtie();
  FiniteIPoset<std::string> p(t, "bowtie");
  const auto a = t.require_index("a"), b = t.require_index("b");
  CHECK(oracle::join(t.le, a, b) == std::nullopt);
  CHECK(p.join("a", "b") == std::nullopt);
  CHECK(p.join("o", "a") == std::string("a"));
  CHECK(p.join("c", "d") == std::nullopt);
}

TEST_CASE("join on lifted product of {1,2}") {
  auto base = lift_omega(discrete<int>({1, 2}));
  auto p = product(base, base);
  using L = Lifted<int>;
  auto j = join(p, std::pair{L::of(1), L::omega()}, std::pair{L::omega(), L::of(2)});
  REQUIRE(j);
  CHECK(*j == std::pair{L::of(1), L::of(2)});
  CHECK(check_duplicable(p).ok());
  auto m = p.merge(std::pair{L::of(1), L::omega()}, std::pair{L::omega(), L::of(2)});
  CHECK(m == j);
}

TEST_CASE("verify_iposet agrees with brute force on random tables") {
  oracle::Rng rng(7);
  int valid = 0;
  for (int round = 0; round < 4000; ++round) {
    auto t = oracle::random_table(rng, 1 + rng.below(5));
    auto expected = oracle::axioms(t);
    auto got = oracle::names(verify_iposet(t));
    got.erase("least-in-carrier");
    CHECK_MESSAGE(got == expected, "round " << round);
    valid += expected.empty();
  }
  CHECK(valid > 50);
}

TEST_CASE("verify_iposet accepts every enumerated poset with both identity choices") {
  auto all = generate_iposets(5);
  CHECK(all.size() == 2 * (1 + 2 + 5 + 16 + 63));
  for (const auto& g : all) {
    CHECK_MESSAGE(oracle::axioms(g.table).empty(), g.name);
    CHECK_MESSAGE(verify_iposet(g.table).ok(), g.name);
    CHECK_MESSAGE(check_duplicable(g.table).ok() == oracle::duplicable(g.table), g.name);
    CHECK(g.duplicable == oracle::duplicable(g.table));
  }
}

TEST_CASE("join is commutative, idempotent and has the least element as unit") {
  for (const auto& g : generate_iposets(4)) {
    const auto& t = g.table;
    for (std::size_t a = 0; a < t.size(); ++a) {
      CHECK(detail::join_index(t, a, a) == a);
      if (t.least) CHECK(detail::join_index(t, *t.least, a) == a);
      for (std::size_t b = 0; b < t.size(); ++b) {
        CHECK(detail::join_index(t, a, b) == detail::join_index(t, b, a));
        CHECK(detail::join_index(t, a, b) == oracle::join(t.le, a, b));
      }
    }
  }
}

TEST_CASE("check_duplicable accepts merge = join when each I_z is join-closed") {
  // Full identity on a chain: I_z = down-set, closed under max.
  FiniteTable<int> t({0, 1, 2});
  t.add_reflexive();
  t.le[0][1] = t.le[0][2] = t.le[1][2] = true;
  t.id = t.le;
  t.least = 0;
  t.enable_merge();
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) (*t.merge)[a][b] = std::max(a, b);
  CHECK(check_duplicable(t).ok());

  // Drop one merge entry inside I_2.
  (*t.merge)[0][1] = std::nullopt;
  auto r = check_duplicable(t);
  CHECK(r.mentions("merge-total-on-identical"));
  CHECK_FALSE(oracle::duplicable(t));

  // A wrong merge result.
  (*t.merge)[0][1] = 2;
  CHECK(check_duplicable(t).mentions("merge-sound"));
}

TEST_CASE("check_duplicable without merge throws") {
  CHECK_THROWS_AS(check_duplicable(two_point_discrete().table()), MissingMerge);
  FiniteTable<int> t({0});
  t.add_reflexive();
  CHECK_THROWS_AS(check_duplicable(FiniteIPoset<int>{t}), MissingMerge);
}

TEST_CASE("tabulate reports escapes from the sample") {
  auto p = lift_omega(discrete<int>({1, 2}));
  using L = Lifted<int>;
  auto [table, escapes] = tabulate(p, {L::of(1), L::of(2)});
  CHECK(escapes.mentions("least-in-carrier"));
  CHECK(table.size() == 2);
}
