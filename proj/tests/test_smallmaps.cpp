#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stratcat/smallmaps.hpp"

using namespace stratcat;
using cat::SetMor;
using hf::HfSet;
using small::SmallnessPredicate;

namespace {
const HfSet e;
const HfSet se = hf::singleton(e);
const HfSet sse = hf::singleton(se);
const HfSet two = HfSet::of({e, se});
const HfSet three = HfSet::of({e, se, sse});
} // namespace

TEST_CASE("predicate parsing and printing") {
  CHECK(SmallnessPredicate::from_name("all").kind == SmallnessPredicate::Kind::All);
  auto fb = SmallnessPredicate::from_name("fibre:2");
  CHECK(fb.kind == SmallnessPredicate::Kind::FibreBound);
  CHECK(fb.bound == 2);
  CHECK(SmallnessPredicate::from_name("stcan:4").to_string() == "stcan:4");
  CHECK_THROWS_AS(SmallnessPredicate::from_name("weird"), std::invalid_argument);
  CHECK_THROWS_AS(SmallnessPredicate::from_name("fibre:x"), std::invalid_argument);
}

TEST_CASE("fibres partition the domain") {
  auto f = SetMor::constant(three, two, e);
  auto fam = small::fibres(f);
  CHECK(fam.size() == 2);
  std::size_t total = 0;
  for (const auto& [b, fibre] : fam) total += fibre.card();
  CHECK(total == f.dom().card());
  // identity: all fibres singletons
  for (const auto& [b, fibre] : small::fibres(SetMor::identity(three)))
    CHECK(fibre.card() == 1);
}

TEST_CASE("is_small under the three predicates") {
  auto id3 = SetMor::identity(three);
  auto con3 = SetMor::constant(three, se, e);
  CHECK(small::is_small(id3, SmallnessPredicate::fibre_bound(1)));
  CHECK(small::is_small(con3, SmallnessPredicate::all()));
  CHECK(!small::is_small(con3, SmallnessPredicate::fibre_bound(2)));

  // fibre {∅} has iota-graph rank 4
  auto point = SetMor::identity(se);
  CHECK(small::is_small(point, SmallnessPredicate::stcan_ceiling(4)));
  CHECK(!small::is_small(point, SmallnessPredicate::stcan_ceiling(3)));

  // monotonicity
  auto maps = cat::all_maps(three, two);
  for (const auto& f : maps) {
    for (std::size_t n = 0; n + 1 < 5; ++n)
      if (small::is_small(f, SmallnessPredicate::fibre_bound(n)))
        CHECK(small::is_small(f, SmallnessPredicate::fibre_bound(n + 1)));
    for (std::size_t k = 0; k + 1 < 8; ++k)
      if (small::is_small(f, SmallnessPredicate::stcan_ceiling(k)))
        CHECK(small::is_small(f, SmallnessPredicate::stcan_ceiling(k + 1)));
    CHECK(small::is_small(f, SmallnessPredicate::all()));
  }
}

TEST_CASE("audit: the degenerate predicate passes all five axioms") {
  auto report = small::audit_small_maps(SmallnessPredicate::all(), 2, sweep::Exec::Parallel);
  CHECK(report.entries.size() == 5);
  for (const auto& entry : report.entries) {
    CAPTURE(entry.axiom);
    CHECK(entry.status == "PASS");
  }
  CHECK(report.all_pass());
}

TEST_CASE("audit: bounded fibres fail composition closure with a replayable witness") {
  auto p = SmallnessPredicate::fibre_bound(2);
  auto report = small::audit_small_maps(p, 2, sweep::Exec::Parallel);
  REQUIRE(report.entries.size() == 5);
  for (const auto& entry : report.entries) {
    CAPTURE(entry.axiom);
    if (entry.axiom == "(i)") {
      CHECK(entry.status == "FAIL");
      REQUIRE(entry.witness_maps.size() == 2);
      const auto& g = entry.witness_maps[0];
      const auto& f = entry.witness_maps[1];
      CHECK(small::replay_composition_witness(g, f, p));
      // the composite fibre is a union of f-fibres over a g-fibre, so it
      // must overflow the bound
      std::size_t biggest = 0;
      for (const auto& [b, fibre] : small::fibres(compose(g, f)))
        biggest = std::max(biggest, fibre.card());
      CHECK(biggest > 2);
    } else {
      CHECK(entry.status == "PASS");
    }
  }
  CHECK(!report.all_pass());

  // the extreme witness exists too: fibres 2+2 collapsed to one point
  auto four = HfSet::of(hf::universe(2));
  REQUIRE(four.card() == 4);
  auto halve = SetMor::from_fn(four, two, [&](const HfSet& x) {
    return x.rank() <= 1 ? e : se; // two elements on each side
  });
  auto collapse = SetMor::constant(two, se, e);
  CHECK(small::replay_composition_witness(collapse, halve, p));
  std::size_t big = 0;
  for (const auto& [b, fibre] : small::fibres(compose(collapse, halve)))
    big = std::max(big, fibre.card());
  CHECK(big == 4);
}

TEST_CASE("audit: a generous stcan ceiling passes everything at rank 2") {
  auto report = small::audit_small_maps(SmallnessPredicate::stcan_ceiling(9), 2,
                                        sweep::Exec::Parallel);
  for (const auto& entry : report.entries) {
    CAPTURE(entry.axiom);
    CAPTURE(entry.witness);
    CHECK(entry.status == "PASS");
  }
}

TEST_CASE("audit verdicts agree between serial and parallel sweeps") {
  auto a = small::audit_small_maps(SmallnessPredicate::fibre_bound(2), 2, sweep::Exec::Serial);
  auto b = small::audit_small_maps(SmallnessPredicate::fibre_bound(2), 2, sweep::Exec::Parallel);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].status == b.entries[i].status);
    CHECK(a.entries[i].witness == b.entries[i].witness);
  }
}

TEST_CASE("descent: pulled-back smallness descends along surjections") {
  auto report = small::descent_check(SmallnessPredicate::fibre_bound(2), 2, sweep::Exec::Parallel);
  CHECK(report.pass);
  CHECK(report.squares_checked > 100);

  // single square: e iso means g is essentially f
  auto g = SetMor::constant(two, se, e);
  auto eiso = SetMor::identity(se);
  auto pb = cat::pullback(eiso, g);
  auto ok = small::descent_square(pb.p2, pb.p1, g, eiso, SmallnessPredicate::fibre_bound(2));
  REQUIRE(ok.has_value());
  CHECK(*ok);

  // a mutated non-pullback square is refused, not failed
  auto broken = small::descent_square(SetMor::constant(two, two, e), SetMor::constant(two, se, e),
                                      g, eiso, SmallnessPredicate::fibre_bound(2));
  CHECK(!broken.has_value());
}

TEST_CASE("scu table: unions stay under the ceiling and match a recomputation") {
  for (std::size_t k : {3, 4, 5, 9}) {
    auto report = small::scu_check(k, 3);
    CHECK(report.all_hold());
    // independent recomputation of the same verdicts from raw ranks
    for (const auto& entry : report.entries) {
      auto stcan_by_rank = [&](const HfSet& x) {
        return x.is_empty() || hf::rank(x) + 3 <= k;
      };
      CHECK(entry.family_small == stcan_by_rank(entry.family));
      bool members = true;
      for (const auto& m : entry.family.elems())
        if (!stcan_by_rank(m)) members = false;
      CHECK(entry.members_small == members);
      CHECK(entry.union_small == stcan_by_rank(hf::union_big(entry.family)));
    }
  }
  // degenerate cases
  auto r = small::scu_check(4, 2);
  for (const auto& entry : r.entries) {
    if (entry.family == e) CHECK(entry.union_small); // ⋃∅ = ∅
    if (entry.family == sse) CHECK(entry.union_small == small::set_is_small(se, SmallnessPredicate::stcan_ceiling(4)));
  }
}

TEST_CASE("indexed products count and embed") {
  CHECK(small::indexed_product({}) == se); // exactly one empty choice

  std::vector<std::pair<HfSet, HfSet>> family{{e, two}, {se, three}};
  auto prod = small::indexed_product(family);
  CHECK(prod.card() == 6);
  CHECK(small::product_embeds(family, prod));

  std::vector<std::pair<HfSet, HfSet>> with_empty{{e, two}, {se, HfSet{}}};
  CHECK(small::indexed_product(with_empty).is_empty());
}

namespace {

small::DirectedSystem two_level_system() {
  // top index {∅} over bottom ∅; A_top = three, A_bot = two, bonding
  // collapses sse onto se
  small::DirectedSystem sys;
  sys.carriers = {{e, two}, {se, three}};
  auto pi = SetMor::from_fn(three, two, [&](const HfSet& x) { return x == sse ? se : x; });
  sys.bonding = {{se, e, pi}};
  return sys;
}

} // namespace

TEST_CASE("inverse limits") {
  // constant system: a single index, limit is the carrier itself
  small::DirectedSystem constant;
  constant.carriers = {{e, two}};
  auto res = small::inverse_limit(constant);
  CHECK(res.limit.card() == two.card());
  CHECK(res.fibres_inject());

  auto sys = two_level_system();
  CHECK(!small::validate_system(sys).has_value());
  auto lim = small::inverse_limit(sys);
  CHECK(lim.limit.card() == 3); // one compatible tuple per top element
  CHECK(lim.fibres_inject());
  // generate-and-filter oracle over the indexed product
  auto all_choices = small::indexed_product(sys.carriers);
  std::size_t compatible = 0;
  for (const auto& graph : all_choices.elems()) {
    HfSet at_top, at_bot;
    for (const auto& pr : graph.elems()) {
      auto [i, v] = hf::kpair_decode(pr);
      if (i == se) at_top = v;
      else at_bot = v;
    }
    const auto& pi = std::get<2>(sys.bonding[0]);
    if (pi.apply(at_top) == at_bot) {
      ++compatible;
      CHECK(lim.limit.contains(graph));
    }
  }
  CHECK(compatible == lim.limit.card());

  // broken commutation is rejected
  small::DirectedSystem bad;
  bad.carriers = {{e, two}, {se, two}, {sse, two}};
  bad.bonding = {{sse, se, SetMor::identity(two)},
                 {se, e, SetMor::identity(two)},
                 {sse, e, SetMor::constant(two, two, e)}};
  CHECK(small::validate_system(bad).has_value());
  CHECK_THROWS_AS(small::inverse_limit(bad), std::invalid_argument);

  // non-surjective bonding is rejected
  small::DirectedSystem nonsurj;
  nonsurj.carriers = {{e, two}, {se, se}};
  nonsurj.bonding = {{se, e, SetMor::constant(se, two, e)}};
  CHECK(small::validate_system(nonsurj).has_value());
}

TEST_CASE("neighborhood growth") {
  // path e - se - sse as unordered pairs
  HfSet path = HfSet::of({HfSet::of({e, se}), HfSet::of({se, sse})});
  auto seq = small::neighborhood_sequence(path, e, 4);
  REQUIRE(seq.size() == 5);
  CHECK(seq[0].card() == 1);
  CHECK(seq[1].card() == 2);
  CHECK(seq[2].card() == 3);
  CHECK(seq[3] == seq[2]); // stabilized at the component
  CHECK(seq[2] == three);
  // monotone
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) CHECK(hf::subset_of(seq[i], seq[i + 1]));

  // isolated vertex marked by a singleton edge
  HfSet with_isolated = HfSet::of({HfSet::of({e, se}), hf::singleton(sse)});
  auto iso_seq = small::neighborhood_sequence(with_isolated, sse, 3);
  for (const auto& level : iso_seq) CHECK(level == hf::singleton(sse));

  CHECK_THROWS_AS(small::neighborhood_sequence(path, two, 2), std::invalid_argument);
}

TEST_CASE("small coequalizers agree with the categorical construction") {
  auto objs = cat::objects_up_to(3, 3);
  auto p = SmallnessPredicate::fibre_bound(3);
  std::size_t checked = 0;
  for (const auto& a : objs)
    for (const auto& b : objs) {
      if (a.card() > 2 || b.card() > 3) continue;
      for (const auto& f : cat::all_maps(a, b))
        for (const auto& g : cat::all_maps(a, b)) {
          auto res = small::coequalizer_small(f, g, p);
          auto reference = cat::coequalizer(f, g);
          CHECK(res.quotient == reference.obj);
          CHECK(res.proj == reference.proj);
          CHECK(res.classes == cat::coequalizer_classes(f, g));
          ++checked;
        }
    }
  CHECK(checked > 500);

  // f = g: classes are singletons, the projection is an isomorphism
  auto f = SetMor::identity(three);
  auto res = small::coequalizer_small(f, f, p);
  CHECK(res.proj.is_iso());

  // chain collapse: one class of size three
  auto from = two;
  auto fa = SetMor::from_fn(from, three, [&](const HfSet& x) { return x == e ? e : se; });
  auto ga = SetMor::from_fn(from, three, [&](const HfSet& x) { return x == e ? se : sse; });
  auto chain = small::coequalizer_small(fa, ga, SmallnessPredicate::fibre_bound(3));
  CHECK(chain.quotient.card() == 1);
  CHECK(chain.quotient_map_small);
  auto tight = small::coequalizer_small(fa, ga, SmallnessPredicate::fibre_bound(2));
  CHECK(!tight.quotient_map_small);
  CHECK(tight.inputs_small); // the inputs were fine, only the quotient is big
}
