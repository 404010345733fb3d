#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stratcat/fincat.hpp"

using namespace stratcat;
using cat::SetMor;
using hf::HfSet;

namespace {
const HfSet e;
const HfSet se = hf::singleton(e);
const HfSet sse = hf::singleton(se);
const HfSet two = HfSet::of({e, se}); // also Ω
} // namespace

TEST_CASE("identity and composition") {
  CHECK(SetMor::identity(e).pairs().empty());
  auto f = SetMor::constant(two, sse, se);
  CHECK(compose(SetMor::identity(sse), f) == f);
  CHECK(compose(f, SetMor::identity(two)) == f);
  CHECK_THROWS_AS(compose(f, f), std::invalid_argument);
}

TEST_CASE("associativity on random triples over small sets") {
  auto objs = cat::objects_up_to(3, 3);
  std::mt19937 rng(4242);
  auto pick = [&](const std::vector<SetMor>& v) { return v[rng() % v.size()]; };
  for (int trial = 0; trial < 200; ++trial) {
    const HfSet& a = objs[rng() % objs.size()];
    const HfSet& b = objs[rng() % objs.size()];
    const HfSet& c = objs[rng() % objs.size()];
    const HfSet& d = objs[rng() % objs.size()];
    auto fs = cat::all_maps(a, b);
    auto gs = cat::all_maps(b, c);
    auto hs = cat::all_maps(c, d);
    if (fs.empty() || gs.empty() || hs.empty()) continue;
    auto f = pick(fs), g = pick(gs), h = pick(hs);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
  }
}

TEST_CASE("terminal, initial, bang uniqueness") {
  CHECK(cat::terminal() == se);
  CHECK(cat::initial() == e);
  for (const auto& a : cat::objects_up_to(3, 3)) {
    CHECK(cat::all_maps(a, cat::terminal()).size() == (a.is_empty() ? 1 : 1));
    CHECK(cat::all_maps(cat::initial(), a).size() == 1);
    CHECK(cat::bang(a).cod() == cat::terminal());
  }
}

TEST_CASE("products satisfy the universal property") {
  auto objs = cat::objects_up_to(2, 2);
  for (const auto& a : objs)
    for (const auto& b : objs) {
      auto pd = cat::product_of(a, b);
      CHECK(pd.obj.card() == a.card() * b.card());
      for (const auto& x : objs)
        for (const auto& f : cat::all_maps(x, a))
          for (const auto& g : cat::all_maps(x, b)) {
            auto med = cat::tuple_map(f, g);
            CHECK(compose(pd.p1, med) == f);
            CHECK(compose(pd.p2, med) == g);
            // unique among all candidates
            int count = 0;
            for (const auto& u : cat::all_maps(x, pd.obj))
              if (compose(pd.p1, u) == f && compose(pd.p2, u) == g) ++count;
            CHECK(count == 1);
          }
    }
}

TEST_CASE("equalizer carrier is the agreement set") {
  auto a = HfSet::of({e, se, sse});
  auto f = SetMor::identity(a);
  auto g = SetMor::from_fn(a, a, [&](const HfSet& x) { return x == sse ? se : x; });
  auto eq = cat::equalizer(f, g);
  CHECK(eq.obj == two); // {∅,{∅}} agree, {{∅}} does not
  for (const auto& x : eq.obj.elems()) CHECK(f.apply(x) == g.apply(x));
  // factoring a cone through the equalizer
  auto h = SetMor::constant(se, a, e);
  auto med = cat::equalizer_mediator(eq, h);
  CHECK(compose(eq.include, med) == h);
}

TEST_CASE("pullback over the terminal object is the product") {
  auto objs = cat::objects_up_to(3, 3);
  for (const auto& a : objs)
    for (const auto& b : objs) {
      auto pb = cat::pullback(cat::bang(a), cat::bang(b));
      CHECK(pb.obj.card() == a.card() * b.card());
    }
}

TEST_CASE("pullback universal property and square recognition") {
  auto a = two;
  auto c = two;
  auto f = SetMor::identity(a);
  auto g = SetMor::constant(se, c, se);
  auto pb = cat::pullback(f, g);
  CHECK(pb.obj.card() == 1);
  CHECK(cat::is_pullback_square(pb.p1, pb.p2, f, g));
  // a non-pullback square: same cospan, apex too small
  auto p = cat::from_initial(a);
  auto q = cat::from_initial(se);
  CHECK(!cat::is_pullback_square(p, q, f, g));
  // mediator
  auto x1 = SetMor::constant(sse, a, se);
  auto x2 = SetMor::constant(sse, se, e);
  auto med = cat::pullback_mediator(pb, x1, x2);
  CHECK(compose(pb.p1, med) == x1);
  CHECK(compose(pb.p2, med) == x2);
}

TEST_CASE("coproducts and cotuples") {
  auto co = cat::coproduct_of(two, se);
  CHECK(co.obj.card() == 3);
  auto f = SetMor::constant(two, sse, se);
  auto g = SetMor::constant(se, sse, se);
  auto ct = cat::cotuple_map(f, g);
  CHECK(compose(ct, co.i1) == f);
  CHECK(compose(ct, co.i2) == g);
  int count = 0;
  for (const auto& u : cat::all_maps(co.obj, sse))
    if (compose(u, co.i1) == f && compose(u, co.i2) == g) ++count;
  CHECK(count == 1);
}

TEST_CASE("coequalizer of an equal pair is an isomorphism") {
  auto f = SetMor::identity(two);
  auto ce = cat::coequalizer(f, f);
  CHECK(ce.obj == two);
  CHECK(ce.proj.is_iso());
}

TEST_CASE("coequalizer collapses the generated relation") {
  // two points mapping onto the two elements of B collapse it to one class
  auto a = two;
  auto f = SetMor::constant(a, two, e);
  auto g = SetMor::constant(a, two, se);
  auto ce = cat::coequalizer(f, g);
  CHECK(ce.obj.card() == 1);
  CHECK(ce.obj.elems()[0] == e); // least representative in canonical order
}

TEST_CASE("coequalizer classes match the transitive-closure oracle on all small pairs") {
  auto objs = cat::objects_up_to(3, 3);
  std::vector<HfSet> small;
  for (const auto& x : objs)
    if (x.card() >= 1 && x.card() <= 3) small.push_back(x);
  int checked = 0;
  for (const auto& a : small)
    for (const auto& b : small) {
      if (a.card() > 3 || b.card() > 3) continue;
      for (const auto& f : cat::all_maps(a, b))
        for (const auto& g : cat::all_maps(a, b)) {
          CHECK(cat::coequalizer_classes(f, g) == oracles::closure_partition(f, g));
          ++checked;
        }
    }
  CHECK(checked > 1000);
}

TEST_CASE("coequalizer universal property with mediator uniqueness") {
  auto objs = cat::objects_up_to(2, 2);
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& f : cat::all_maps(a, b))
        for (const auto& g : cat::all_maps(a, b)) {
          auto ce = cat::coequalizer(f, g);
          CHECK(compose(ce.proj, f) == compose(ce.proj, g));
          for (const auto& z_target : objs)
            for (const auto& z : cat::all_maps(b, z_target)) {
              if (!(compose(z, f) == compose(z, g))) continue;
              auto u = cat::coeq_mediator(ce, z);
              CHECK(compose(u, ce.proj) == z);
              int count = 0;
              for (const auto& cand : cat::all_maps(ce.obj, z_target))
                if (compose(cand, ce.proj) == z) ++count;
              CHECK(count == 1);
            }
        }
}

TEST_CASE("every surjection is the coequalizer of its kernel pair") {
  auto objs = cat::objects_up_to(3, 3);
  for (const auto& a : objs)
    for (const auto& b : objs) {
      if (a.card() > 3 || b.card() > 2) continue;
      for (const auto& epi : cat::all_surjections(a, b)) {
        auto kp = cat::pullback(epi, epi);
        auto ce = cat::coequalizer(kp.p1, kp.p2);
        // the induced comparison with B is a bijection
        auto u = cat::coeq_mediator(ce, epi);
        CHECK(u.is_iso());
      }
    }
}

TEST_CASE("partition to parallel pair and back") {
  // {{a}} → classes {{a}}
  auto tiny = cat::ptj_from_partition(hf::singleton(se));
  CHECK(cat::coequalizer_classes(tiny.p1, tiny.p2) == hf::singleton(se));

  // a 3-set split {2,1}
  auto part = HfSet::of({HfSet::of({e, se}), hf::singleton(sse)});
  auto ptj = cat::ptj_from_partition(part);
  CHECK(cat::coequalizer_classes(ptj.p1, ptj.p2) == part);

  // rejects bad partitions
  CHECK_THROWS_AS(cat::ptj_from_partition(HfSet::of({two, se})), std::invalid_argument);
  CHECK_THROWS_AS(cat::ptj_from_partition(hf::singleton(e)), std::invalid_argument);
}

TEST_CASE("all partitions of a four-element set round-trip") {
  auto four = HfSet::of({e, se, sse, two});
  REQUIRE(four.card() == 4);
  auto parts = oracles::all_partitions(four);
  CHECK(parts.size() == 15); // Bell(4)
  for (const auto& part : parts) {
    auto ptj = cat::ptj_from_partition(part);
    CHECK(cat::coequalizer_classes(ptj.p1, ptj.p2) == part);
  }
}

TEST_CASE("subobject classifier basics") {
  CHECK(cat::omega() == two);
  auto a = HfSet::of({e, se, sse});
  CHECK(cat::char_map(SetMor::identity(a)) == SetMor::constant(a, cat::omega(), cat::truth_value()));
  CHECK(cat::char_map(cat::from_initial(a)) == SetMor::constant(a, cat::omega(), e));
  auto not_mono = SetMor::constant(two, two, e);
  CHECK_THROWS_AS(cat::char_map(not_mono), std::invalid_argument);
}

TEST_CASE("characteristic maps classify uniquely") {
  auto objs = cat::objects_up_to(3, 3);
  for (const auto& d : objs)
    for (const auto& a : objs) {
      if (a.card() > 3) continue;
      for (const auto& m : cat::all_monos(d, a)) {
        auto chi = cat::char_map(m);
        CHECK(cat::is_pullback_square(m, cat::bang(d), chi, cat::true_arrow()));
        int classifying = 0;
        for (const auto& cand : cat::all_maps(a, cat::omega()))
          if (cat::is_pullback_square(m, cat::bang(d), cand, cat::true_arrow())) ++classifying;
        CHECK(classifying == 1);
      }
    }
}

TEST_CASE("T is a full and faithful functor") {
  auto objs = cat::objects_up_to(3, 3);
  for (const auto& a : objs) {
    CHECK(cat::T_mor(SetMor::identity(a)) == SetMor::identity(cat::T_ob(a)));
    for (const auto& b : objs) {
      CHECK(cat::all_maps(a, b).size() == cat::all_maps(cat::T_ob(a), cat::T_ob(b)).size());
    }
  }
  // functoriality on sampled composable pairs
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const HfSet& a = objs[rng() % objs.size()];
    const HfSet& b = objs[rng() % objs.size()];
    const HfSet& c = objs[rng() % objs.size()];
    auto fs = cat::all_maps(a, b);
    auto gs = cat::all_maps(b, c);
    if (fs.empty() || gs.empty()) continue;
    auto f = fs[rng() % fs.size()];
    auto g = gs[rng() % gs.size()];
    CHECK(cat::T_mor(compose(g, f)) == compose(cat::T_mor(g), cat::T_mor(f)));
  }
  // T is injective on objects over the sample
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = i + 1; j < objs.size(); ++j)
      CHECK(!(cat::T_ob(objs[i]) == cat::T_ob(objs[j])));
}

TEST_CASE("function spaces and the evaluation proxy") {
  CHECK(cat::exp_set(e, two) == se); // exactly the empty function
  auto objs = cat::objects_up_to(3, 3);
  for (const auto& a : objs)
    for (const auto& b : objs)
      CHECK(cat::exp_set(a, b).card() == cat::hom_size(a, b));

  // ev′ on A = 1, B = 2: ⟨{∅},f⟩ ↦ {f(∅)}
  auto ev = cat::eval_prime(se, two);
  HfSet graphs = cat::exp_set(se, two);
  for (const auto& g : graphs.elems()) {
    auto out = ev.apply(hf::kpair(hf::singleton(e), g));
    CHECK(out == hf::singleton(cat::apply_graph(g, e)));
  }
}

TEST_CASE("image, preimage and dual image form an adjoint triple") {
  auto a = HfSet::of({e, se, sse});
  auto b = two;
  // dual image of the full subset under a surjection is everything
  auto surj = SetMor::from_fn(a, b, [&](const HfSet& x) { return x == e ? e : se; });
  CHECK(cat::dual_image(surj, {a, a}).subset == b);
  // constant map, empty subset: codomain minus the point
  auto con = SetMor::constant(a, b, se);
  CHECK(cat::dual_image(con, {e, a}).subset == hf::singleton(e));

  for (const auto& f : cat::all_maps(a, b)) {
    for (const auto& s : hf::subsets(a))
      for (const auto& t : hf::subsets(b)) {
        // f_! ⊣ f*: image(S) ⊆ T ⟺ S ⊆ preimage(T)
        CHECK(hf::subset_of(cat::image_sub(f, {s, a}).subset, t) ==
              hf::subset_of(s, cat::preimage_sub(f, {t, b}).subset));
        // f* ⊣ f_*: preimage(T) ⊆ S ⟺ T ⊆ dual_image(S)
        CHECK(hf::subset_of(cat::preimage_sub(f, {t, b}).subset, s) ==
              hf::subset_of(t, cat::dual_image(f, {s, a}).subset));
      }
  }
}

TEST_CASE("epi-mono factorization and pullback stability of the image") {
  auto a = HfSet::of({e, se, sse});
  for (const auto& f : cat::all_maps(a, two)) {
    auto fac = cat::epi_mono_factor(f);
    CHECK(fac.epi.is_epi());
    CHECK(fac.mono.is_mono());
    CHECK(compose(fac.mono, fac.epi) == f);
  }
}
