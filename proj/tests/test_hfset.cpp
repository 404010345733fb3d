#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stratcat/hfset.hpp"

using namespace stratcat::hf;

namespace {
const HfSet e;                  // ∅
const HfSet se = singleton(e);  // {∅}
const HfSet sse = singleton(se);
} // namespace

TEST_CASE("normalization removes duplicates and orders canonically") {
  CHECK(HfSet::of({e, e}) == se);
  CHECK(HfSet::of({se, e}) == HfSet::of({e, se}));
  CHECK(HfSet::of({se, e}).elems().front() == e);
  CHECK(HfSet::of({}) == e);
  // idempotent
  auto x = HfSet::of({sse, se, e, se});
  CHECK(HfSet::of(x.elems()) == x);
}

TEST_CASE("mem agrees with element sequences") {
  auto x = HfSet::of({e, sse});
  CHECK(mem(e, x));
  CHECK(mem(sse, x));
  CHECK(!mem(se, x));
  CHECK(!mem(x, x));
}

TEST_CASE("basic operations") {
  CHECK(powerset(e) == se);
  CHECK(union_big(HfSet::of({se, sse})) == HfSet::of({e, se}));
  CHECK(rank(sse) == 2);
  CHECK(rank(e) == 0);
  CHECK(set_union(se, sse) == HfSet::of({e, se}));
  CHECK(set_intersection(se, sse) == e);
  CHECK(set_difference(HfSet::of({e, se}), se) == sse);
  CHECK(subset_of(se, HfSet::of({e, se})));
  CHECK(!subset_of(sse, se));
}

TEST_CASE("singleton image") {
  CHECK(singleton_image(e) == e);
  CHECK(singleton_image(HfSet::of({e, se})) == HfSet::of({se, sse}));
  CHECK(singleton_image(singleton_image(se)) == singleton(sse));
  for (const auto& x : universe(3)) {
    CHECK(singleton_image(x).card() == x.card());
    if (!x.is_empty()) CHECK(singleton_image(x).rank() == x.rank() + 1);
  }
}

TEST_CASE("kuratowski pairs") {
  CHECK(kpair(e, e) == singleton(se));
  auto [a, b] = kpair_decode(kpair(se, sse));
  CHECK(a == se);
  CHECK(b == sse);
  auto [c, d] = kpair_decode(kpair(se, se));
  CHECK(c == se);
  CHECK(d == se);
  CHECK(is_kpair(kpair(e, se)));
  CHECK(!is_kpair(HfSet::of({e, se})));
  CHECK_THROWS_AS(kpair_decode(HfSet::of({e, se})), std::invalid_argument);
  // decode inverts on all pairs over a small universe
  for (const auto& x : universe(2))
    for (const auto& y : universe(2)) {
      auto [p, q] = kpair_decode(kpair(x, y));
      CHECK(p == x);
      CHECK(q == y);
    }
}

TEST_CASE("product and disjoint union cardinalities") {
  CHECK(product(se, se) == singleton(kpair(e, e)));
  auto u3 = universe(3);
  for (const auto& a : u3)
    for (const auto& b : u3) {
      CHECK(product(a, b).card() == a.card() * b.card());
      CHECK(disjoint_union(a, b).card() == a.card() + b.card());
    }
}

TEST_CASE("powerset cardinality over the rank-3 universe") {
  for (const auto& x : universe(3))
    CHECK(powerset(x).card() == (std::size_t{1} << x.card()));
}

TEST_CASE("iota graphs") {
  CHECK(iota_graph(e).graph == e);
  CHECK(iota_graph(se).graph == singleton(kpair(e, se)));
  CHECK(rank(iota_graph(se).graph) == 4);
  for (const auto& x : universe(2)) {
    auto f = iota_graph(x);
    CHECK(!func_graph_error(f).has_value());
    CHECK(f.codomain == singleton_image(x));
    CHECK(f.graph.card() == x.card());
  }
}

TEST_CASE("func graph validation catches broken graphs") {
  FuncGraph partial{HfSet::of({e, se}), se, singleton(kpair(e, e))};
  CHECK(func_graph_error(partial).has_value()); // not total
  FuncGraph doubled{se, HfSet::of({e, se}), HfSet::of({kpair(e, e), kpair(e, se)})};
  CHECK(func_graph_error(doubled).has_value()); // not single-valued
  FuncGraph stray{se, se, singleton(kpair(se, se))};
  CHECK(func_graph_error(stray).has_value()); // argument outside domain
}

TEST_CASE("brace notation round-trips") {
  for (const auto& x : universe(3)) {
    CHECK(HfSet::parse(x.to_string()) == x);
  }
  CHECK(HfSet::parse("{ { } , { { } } }") == HfSet::of({e, se}));
  CHECK(HfSet::parse("{{},{{}}}").to_string() == "{{},{{}}}");
  CHECK_THROWS_AS(HfSet::parse("{{}"), std::invalid_argument);
  CHECK_THROWS_AS(HfSet::parse("{} x"), std::invalid_argument);
}

TEST_CASE("ackermann codes are bit-exact") {
  auto u = universe(3);
  std::vector<bool> seen(16, false);
  for (const auto& x : u) {
    auto c = ackermann_code(x);
    REQUIRE(c.has_value());
    CHECK(*c < 16);
    CHECK(!seen[*c]);
    seen[*c] = true;
    CHECK(from_ackermann(*c) == x);
  }
  for (std::uint64_t n = 0; n < 64; ++n) {
    CHECK(ackermann_code(from_ackermann(n)) == n);
  }
}

TEST_CASE("universe sizes") {
  CHECK(universe(0).size() == 1);
  CHECK(universe(1).size() == 2);
  CHECK(universe(2).size() == 4);
  CHECK(universe(3).size() == 16);
  auto u = universe(3);
  CHECK(std::is_sorted(u.begin(), u.end()));
  for (const auto& x : u) CHECK(x.rank() <= 3);
}

TEST_CASE("canonical order is total and consistent with equality") {
  auto u = universe(3);
  for (const auto& a : u)
    for (const auto& b : u) {
      bool lt = a < b, gt = b < a, eq = a == b;
      CHECK((lt + gt + eq) == 1);
    }
}

TEST_CASE("subsets enumerates the full powerset in order") {
  auto x = HfSet::of({e, se, sse});
  auto subs = subsets(x);
  CHECK(subs.size() == 8);
  CHECK(std::is_sorted(subs.begin(), subs.end()));
  for (const auto& s : subs) CHECK(subset_of(s, x));
}
