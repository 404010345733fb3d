#include "stratcat/internal_cat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace stratcat::icat {

HfSet composable_pairs(const HfSet& c1, const SetMor& d0, const SetMor& d1) {
  std::vector<HfSet> out;
  for (const auto& g : c1.elems())
    for (const auto& f : c1.elems())
      if (d0.apply(g) == d1.apply(f)) out.push_back(hf::kpair(g, f));
  return HfSet::of(std::move(out));
}

ValidationReport validate_internal_category(const InternalCategory& c) {
  ValidationReport rep;
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.failures.push_back(std::move(why));
  };
  if (!(c.d0.dom() == c.c1 && c.d0.cod() == c.c0)) fail("d0 is not C1 -> C0");
  if (!(c.d1.dom() == c.c1 && c.d1.cod() == c.c0)) fail("d1 is not C1 -> C0");
  if (!(c.i.dom() == c.c0 && c.i.cod() == c.c1)) fail("i is not C0 -> C1");
  HfSet cp = composable_pairs(c.c1, c.d0, c.d1);
  if (!(c.m.dom() == cp && c.m.cod() == c.c1)) fail("m is not defined on the composable pairs");
  if (!rep.ok) return rep;

  for (const auto& u : c.c0.elems()) {
    if (!(c.d0.apply(c.i.apply(u)) == u))
      fail("d0(i(" + u.to_string() + ")) is not " + u.to_string());
    if (!(c.d1.apply(c.i.apply(u)) == u))
      fail("d1(i(" + u.to_string() + ")) is not " + u.to_string());
  }
  for (const auto& p : cp.elems()) {
    auto [g, f] = hf::kpair_decode(p);
    HfSet gf = c.m.apply(p);
    if (!(c.d0.apply(gf) == c.d0.apply(f)))
      fail("d0(m(" + p.to_string() + ")) wrong");
    if (!(c.d1.apply(gf) == c.d1.apply(g)))
      fail("d1(m(" + p.to_string() + ")) wrong");
  }
  // the unit and associativity checks compose m-values further, which is
  // only well defined once the source/target laws hold
  if (!rep.ok) return rep;
  for (const auto& f : c.c1.elems()) {
    if (!(c.m.apply(hf::kpair(c.i.apply(c.d1.apply(f)), f)) == f))
      fail("left unit law fails at " + f.to_string());
    if (!(c.m.apply(hf::kpair(f, c.i.apply(c.d0.apply(f)))) == f))
      fail("right unit law fails at " + f.to_string());
  }
  for (const auto& h : c.c1.elems())
    for (const auto& g : c.c1.elems()) {
      if (!(c.d0.apply(h) == c.d1.apply(g))) continue;
      for (const auto& f : c.c1.elems()) {
        if (!(c.d0.apply(g) == c.d1.apply(f))) continue;
        HfSet left = c.m.apply(hf::kpair(c.m.apply(hf::kpair(h, g)), f));
        HfSet right = c.m.apply(hf::kpair(h, c.m.apply(hf::kpair(g, f))));
        if (!(left == right))
          fail("associativity fails at h=" + h.to_string() + " g=" + g.to_string() +
               " f=" + f.to_string());
      }
    }
  return rep;
}

HfSet action_carrier(const InternalCategory& c, const HfSet& f0, const SetMor& gamma0) {
  std::vector<HfSet> out;
  for (const auto& p : f0.elems())
    for (const auto& f : c.c1.elems())
      if (gamma0.apply(p) == c.d0.apply(f)) out.push_back(hf::kpair(p, f));
  return HfSet::of(std::move(out));
}

ValidationReport validate_diagram(const InternalCategory& c, const InternalDiagram& f) {
  ValidationReport rep;
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.failures.push_back(std::move(why));
  };
  if (!(f.gamma0.dom() == f.f0 && f.gamma0.cod() == c.c0)) fail("gamma0 is not F0 -> C0");
  HfSet f1 = action_carrier(c, f.f0, f.gamma0);
  if (!(f.e.dom() == f1 && f.e.cod() == f.f0)) fail("e is not F1 -> F0");
  if (!rep.ok) return rep;

  for (const auto& pf : f1.elems()) {
    auto [p, arrow] = hf::kpair_decode(pf);
    (void)p;
    if (!(f.gamma0.apply(f.e.apply(pf)) == c.d1.apply(arrow)))
      fail("gamma0(e(" + pf.to_string() + ")) is not d1 of the arrow");
  }
  for (const auto& p : f.f0.elems()) {
    HfSet idarrow = c.i.apply(f.gamma0.apply(p));
    if (!(f.e.apply(hf::kpair(p, idarrow)) == p))
      fail("identity action moves " + p.to_string());
  }
  for (const auto& p : f.f0.elems())
    for (const auto& farrow : c.c1.elems()) {
      if (!(f.gamma0.apply(p) == c.d0.apply(farrow))) continue;
      HfSet pf = f.e.apply(hf::kpair(p, farrow));
      for (const auto& garrow : c.c1.elems()) {
        if (!(c.d0.apply(garrow) == c.d1.apply(farrow))) continue;
        HfSet via_two = f.e.apply(hf::kpair(pf, garrow));
        HfSet composite = c.m.apply(hf::kpair(garrow, farrow));
        HfSet via_m = f.e.apply(hf::kpair(p, composite));
        if (!(via_two == via_m))
          fail("action not compatible with composition at p=" + p.to_string() +
               " f=" + farrow.to_string() + " g=" + garrow.to_string());
      }
    }
  return rep;
}

SliceObj forget_to_slice(const InternalDiagram& f, const InternalCategory& c) {
  return {f.f0, c.c0, f.gamma0};
}

InternalDiagram free_diagram(const InternalCategory& c, const SliceObj& gamma) {
  if (!(gamma.base == c.c0)) throw std::invalid_argument("free_diagram: slice not over C0");
  std::vector<HfSet> carrier;
  for (const auto& x : gamma.total.elems())
    for (const auto& f : c.c1.elems())
      if (gamma.proj.apply(x) == c.d0.apply(f)) carrier.push_back(hf::kpair(x, f));
  HfSet f0 = HfSet::of(std::move(carrier));
  auto gamma0 = SetMor::from_fn(f0, c.c0, [&](const HfSet& el) {
    return c.d1.apply(hf::kpair_decode(el).second);
  });
  HfSet f1 = action_carrier(c, f0, gamma0);
  auto e = SetMor::from_fn(f1, f0, [&](const HfSet& pf) {
    auto [el, g] = hf::kpair_decode(pf);
    auto [x, f] = hf::kpair_decode(el);
    return hf::kpair(x, c.m.apply(hf::kpair(g, f)));
  });
  return {std::move(f0), std::move(gamma0), std::move(e)};
}

std::vector<SetMor> nat_transformations(const InternalCategory& c, const InternalDiagram& f,
                                        const InternalDiagram& g) {
  SliceObj fs = forget_to_slice(f, c);
  SliceObj gs = forget_to_slice(g, c);
  HfSet f1 = action_carrier(c, f.f0, f.gamma0);
  std::vector<SetMor> out;
  for (auto& h : cat::slice_homs(fs, gs)) {
    bool equivariant = true;
    for (const auto& pf : f1.elems()) {
      auto [p, arrow] = hf::kpair_decode(pf);
      if (!(h.apply(f.e.apply(pf)) == g.e.apply(hf::kpair(h.apply(p), arrow)))) {
        equivariant = false;
        break;
      }
    }
    if (equivariant) out.push_back(std::move(h));
  }
  return out;
}

SetMor adjunct_to_slice(const InternalCategory& c, const SliceObj& gamma,
                        const InternalDiagram& f, const SetMor& diagram_mor) {
  (void)f;
  return SetMor::from_fn(gamma.total, diagram_mor.cod(), [&](const HfSet& x) {
    return diagram_mor.apply(hf::kpair(x, c.i.apply(gamma.proj.apply(x))));
  });
}

SetMor adjunct_to_diagram(const InternalCategory& c, const SliceObj& gamma,
                          const InternalDiagram& f, const SetMor& slice_mor) {
  InternalDiagram r = free_diagram(c, gamma);
  return SetMor::from_fn(r.f0, f.f0, [&](const HfSet& el) {
    auto [x, arrow] = hf::kpair_decode(el);
    return f.e.apply(hf::kpair(slice_mor.apply(x), arrow));
  });
}

HomFibration hom_fibration(const InternalCategory& c) {
  HomFibration out;
  for (const auto& u : c.c0.elems())
    for (const auto& v : c.c0.elems()) {
      std::vector<HfSet> arrows;
      for (const auto& f : c.c1.elems())
        if (c.d0.apply(f) == u && c.d1.apply(f) == v) arrows.push_back(f);
      out.fibres.push_back({u, v, HfSet::of(std::move(arrows))});
    }
  return out;
}

InternalDiagram representable(const InternalCategory& c, const HfSet& u) {
  if (!c.c0.contains(u))
    throw std::invalid_argument("representable: not an object: " + u.to_string());
  std::vector<HfSet> carrier;
  for (const auto& f : c.c1.elems())
    if (c.d0.apply(f) == u) carrier.push_back(f);
  HfSet f0 = HfSet::of(std::move(carrier));
  auto gamma0 = SetMor::from_fn(f0, c.c0, [&](const HfSet& f) { return c.d1.apply(f); });
  HfSet f1 = action_carrier(c, f0, gamma0);
  auto e = SetMor::from_fn(f1, f0, [&](const HfSet& pf) {
    auto [f, g] = hf::kpair_decode(pf);
    return c.m.apply(hf::kpair(g, f));
  });
  return {std::move(f0), std::move(gamma0), std::move(e)};
}

YonedaResult yoneda_check(const InternalCategory& c, const HfSet& u, const InternalDiagram& f) {
  YonedaResult res;
  if (!c.c0.contains(u)) {
    res.failures.push_back("not an object: " + u.to_string());
    return res;
  }
  // F(U) as the literal pullback of γ0 along the point u, then simplified
  auto point = SetMor::constant(cat::terminal(), c.c0, u);
  auto pb = cat::pullback(point, f.gamma0);
  res.pullback_carrier = pb.obj;
  std::vector<HfSet> fibre;
  for (const auto& pr : pb.obj.elems()) fibre.push_back(hf::kpair_decode(pr).second);
  res.fu = HfSet::of(std::move(fibre));

  InternalDiagram r = representable(c, u);
  auto nats = nat_transformations(c, r, f);
  res.nat_count = nats.size();

  HfSet id_u = c.i.apply(u);
  std::set<HfSet> seen;
  for (const auto& eta : nats) {
    HfSet value = eta.apply(id_u);
    if (!res.fu.contains(value))
      res.failures.push_back("transformation lands outside the fibre: " + value.to_string());
    if (!seen.insert(value).second)
      res.failures.push_back("bijection not injective at " + value.to_string());
    res.bijection.emplace_back(eta, hf::singleton(value));
  }
  // surjectivity, constructively: y ↦ (g ↦ e(y, g)) is a transformation
  // hitting y at the identity
  for (const auto& y : res.fu.elems()) {
    auto eta = SetMor::from_fn(r.f0, f.f0, [&](const HfSet& g) {
      return f.e.apply(hf::kpair(y, g));
    });
    if (std::find(nats.begin(), nats.end(), eta) == nats.end())
      res.failures.push_back("reconstructed transformation missing for " + y.to_string());
    else if (!(eta.apply(id_u) == y))
      res.failures.push_back("reconstruction does not restrict to " + y.to_string());
  }
  if (res.nat_count != res.fu.card())
    res.failures.push_back("cardinalities differ: " + std::to_string(res.nat_count) + " vs " +
                           std::to_string(res.fu.card()));
  res.pass = res.failures.empty();
  return res;
}

bool GenericFamily::full() const {
  for (const auto& entry : fullness)
    if (!entry.match) return false;
  return !fullness.empty();
}

GenericFamily generic_family(unsigned universe_rank) {
  if (universe_rank > 3)
    throw std::invalid_argument("generic_family: universe rank above 3 is not enumerable");
  GenericFamily out;
  auto members = hf::universe(universe_rank);
  out.v_set = HfSet::of(members);

  // ∈ = {⟨{x},y⟩ | x ∈ y ∈ V}, fibred over V by the right projection
  std::vector<HfSet> mem;
  for (const auto& y : members)
    for (const auto& x : y.elems()) mem.push_back(hf::kpair(hf::singleton(x), y));
  HfSet mem_set = HfSet::of(std::move(mem));
  out.gamma = {mem_set, out.v_set,
               SetMor::from_fn(mem_set, out.v_set,
                               [](const HfSet& p) { return hf::kpair_decode(p).second; })};

  // tagged functions ⟨graph,⟨dom,cod⟩⟩ between universe members
  std::vector<HfSet> funct;
  for (const auto& a : members)
    for (const auto& b : members) {
      HfSet graphs = cat::exp_set(a, b);
      for (const auto& g : graphs.elems()) funct.push_back(hf::kpair(g, hf::kpair(a, b)));
    }
  out.funct = HfSet::of(std::move(funct));
  HfSet vxv = hf::product(out.v_set, out.v_set);
  out.dom_cod = SetMor::from_fn(out.funct, vxv,
                                [](const HfSet& f) { return hf::kpair_decode(f).second; });

  auto dom_of = [](const HfSet& f) { return hf::kpair_decode(hf::kpair_decode(f).second).first; };
  auto cod_of = [](const HfSet& f) { return hf::kpair_decode(hf::kpair_decode(f).second).second; };

  // dom*Γ and cod*Γ: pairs ⟨f,{x}⟩ with x in the projected member
  std::vector<HfSet> dom_total, cod_total;
  for (const auto& f : out.funct.elems()) {
    for (const auto& x : dom_of(f).elems()) dom_total.push_back(hf::kpair(f, hf::singleton(x)));
    for (const auto& y : cod_of(f).elems()) cod_total.push_back(hf::kpair(f, hf::singleton(y)));
  }
  HfSet dom_set = HfSet::of(std::move(dom_total));
  HfSet cod_set = HfSet::of(std::move(cod_total));
  out.dom_star = {dom_set, out.funct,
                  SetMor::from_fn(dom_set, out.funct,
                                  [](const HfSet& p) { return hf::kpair_decode(p).first; })};
  out.cod_star = {cod_set, out.funct,
                  SetMor::from_fn(cod_set, out.funct,
                                  [](const HfSet& p) { return hf::kpair_decode(p).first; })};

  out.ev_gen = SetMor::from_fn(dom_set, cod_set, [&](const HfSet& p) {
    auto [f, sx] = hf::kpair_decode(p);
    HfSet graph = hf::kpair_decode(f).first;
    return hf::kpair(f, hf::singleton(cat::apply_graph(graph, sx.elems()[0])));
  });

  for (const auto& a : members)
    for (const auto& b : members) {
      GenericFamily::FullnessEntry entry;
      entry.a = a;
      entry.b = b;
      entry.hom_size = cat::hom_size(a, b);
      std::vector<HfSet> stripped;
      for (const auto& f : out.funct.elems())
        if (out.dom_cod.apply(f) == hf::kpair(a, b)) stripped.push_back(hf::kpair_decode(f).first);
      entry.fibre_size = stripped.size();
      entry.match =
          entry.fibre_size == entry.hom_size && HfSet::of(std::move(stripped)) == cat::exp_set(a, b);
      out.fullness.push_back(std::move(entry));
    }
  return out;
}

// --- the catalog -------------------------------------------------------------

namespace {

// arrows are encoded as ⟨tag,⟨src,dst⟩⟩ so parallel arrows stay distinct
HfSet arr(const HfSet& tag, const HfSet& src, const HfSet& dst) {
  return hf::kpair(tag, hf::kpair(src, dst));
}

struct CatBuilder {
  std::string name;
  std::vector<HfSet> objects;
  std::vector<HfSet> arrows;
  std::vector<std::pair<HfSet, HfSet>> src, dst;
  std::vector<std::pair<HfSet, HfSet>> idmap;
  std::vector<std::pair<HfSet, HfSet>> comp; // ⟨g,f⟩ → g∘f

  HfSet id_arrow(const HfSet& u) { return arr(HfSet{}, u, u); }

  void object(const HfSet& u) {
    objects.push_back(u);
    HfSet e = id_arrow(u);
    arrows.push_back(e);
    src.emplace_back(e, u);
    dst.emplace_back(e, u);
    idmap.emplace_back(u, e);
  }

  HfSet arrow(const HfSet& tag, const HfSet& from, const HfSet& to) {
    HfSet f = arr(tag, from, to);
    arrows.push_back(f);
    src.emplace_back(f, from);
    dst.emplace_back(f, to);
    return f;
  }

  void compose_rule(const HfSet& g, const HfSet& f, const HfSet& gf) {
    comp.emplace_back(hf::kpair(g, f), gf);
  }

  InternalCategory build() {
    HfSet c0 = HfSet::of(objects);
    HfSet c1 = HfSet::of(arrows);
    SetMor d0(c1, c0, src);
    SetMor d1(c1, c0, dst);
    SetMor i(c0, c1, idmap);
    // identity composites are implied; explicit rules cover the rest
    HfSet cp = composable_pairs(c1, d0, d1);
    std::vector<std::pair<HfSet, HfSet>> table;
    for (const auto& p : cp.elems()) {
      auto [g, f] = hf::kpair_decode(p);
      auto explicit_rule = std::find_if(comp.begin(), comp.end(),
                                        [&](const auto& r) { return r.first == p; });
      if (explicit_rule != comp.end()) {
        table.emplace_back(p, explicit_rule->second);
      } else if (g == i.apply(d1.apply(f))) {
        table.emplace_back(p, f);
      } else if (f == i.apply(d0.apply(g))) {
        table.emplace_back(p, g);
      } else {
        throw std::logic_error(name + ": missing composition rule for " + p.to_string());
      }
    }
    return {name, c0, c1, d0, d1, i, SetMor(cp, c1, std::move(table))};
  }
};

const HfSet kObjA;                              // ∅
const HfSet kObjB = hf::singleton(HfSet{});     // {∅}
const HfSet kTag1 = hf::singleton(HfSet{});     // {∅}
const HfSet kTag2 = hf::singleton(kTag1);       // {{∅}}
const HfSet kTag3 = hf::singleton(kTag2);

InternalCategory discrete(const std::string& name, const std::vector<HfSet>& objs) {
  CatBuilder b;
  b.name = name;
  for (const auto& u : objs) b.object(u);
  return b.build();
}

InternalCategory monoid(const std::string& name, const std::vector<HfSet>& tags,
                        const std::vector<std::vector<std::size_t>>& table) {
  // element 0 is the unit (the identity arrow on the single object)
  CatBuilder b;
  b.name = name;
  b.object(kObjA);
  std::vector<HfSet> el = {b.id_arrow(kObjA)};
  for (const auto& tag : tags) el.push_back(b.arrow(tag, kObjA, kObjA));
  for (std::size_t gi = 1; gi < el.size(); ++gi)
    for (std::size_t fi = 1; fi < el.size(); ++fi)
      b.compose_rule(el[gi], el[fi], el[table[gi][fi]]);
  return b.build();
}

} // namespace

std::vector<InternalCategory> standard_catalog() {
  std::vector<InternalCategory> out;
  out.push_back(discrete("discrete-1", {kObjA}));
  out.push_back(discrete("discrete-2", {kObjA, kObjB}));

  {
    CatBuilder b;
    b.name = "walking-arrow";
    b.object(kObjA);
    b.object(kObjB);
    b.arrow(kTag1, kObjA, kObjB);
    out.push_back(b.build());
  }
  {
    CatBuilder b;
    b.name = "walking-iso";
    b.object(kObjA);
    b.object(kObjB);
    HfSet f = b.arrow(kTag1, kObjA, kObjB);
    HfSet g = b.arrow(kTag2, kObjB, kObjA);
    b.compose_rule(g, f, b.id_arrow(kObjA));
    b.compose_rule(f, g, b.id_arrow(kObjB));
    out.push_back(b.build());
  }
  {
    CatBuilder b;
    b.name = "parallel-pair";
    b.object(kObjA);
    b.object(kObjB);
    b.arrow(kTag1, kObjA, kObjB);
    b.arrow(kTag2, kObjA, kObjB);
    out.push_back(b.build());
  }
  {
    CatBuilder b;
    b.name = "idempotent-arrow";
    b.object(kObjA);
    b.object(kObjB);
    HfSet h = b.arrow(kTag1, kObjA, kObjA);
    HfSet f = b.arrow(kTag2, kObjA, kObjB);
    b.compose_rule(h, h, h);
    b.compose_rule(f, h, f);
    out.push_back(b.build());
  }

  // one-object categories: monoids of order 2, 3, 4
  out.push_back(monoid("monoid-z2", {kTag1}, {{0, 0}, {0, 0}})); // s·s = e
  out.push_back(monoid("monoid-absorb", {kTag1}, {{0, 0}, {0, 1}})); // a·a = a
  out.push_back(monoid("monoid-z3", {kTag1, kTag2},
                       {{0, 0, 0}, {0, 2, 0}, {0, 0, 1}})); // r·r = r², r·r² = e
  out.push_back(monoid("monoid-leftzero", {kTag1, kTag2},
                       {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}})); // cᵢ·x = cᵢ
  out.push_back(monoid("monoid-z4", {kTag1, kTag2, kTag3},
                       {{0, 0, 0, 0},
                        {0, 2, 3, 0},
                        {0, 3, 0, 1},
                        {0, 0, 1, 2}}));
  out.push_back(monoid("monoid-klein", {kTag1, kTag2, kTag3},
                       {{0, 0, 0, 0},
                        {0, 0, 3, 2},
                        {0, 3, 0, 1},
                        {0, 2, 1, 0}}));
  return out;
}

std::vector<InternalDiagram> enumerate_diagrams(const InternalCategory& c,
                                                std::size_t max_fibre) {
  std::vector<InternalDiagram> out;
  const auto& objs = c.c0.elems();
  std::vector<HfSet> tags;
  for (auto& t : hf::universe(3)) {
    tags.push_back(t);
    if (tags.size() >= max_fibre) break;
  }
  // choose a fibre size per object
  std::vector<std::size_t> sizes(objs.size(), 0);
  for (;;) {
    std::vector<std::pair<HfSet, HfSet>> proj_pairs;
    std::vector<HfSet> carrier;
    for (std::size_t oi = 0; oi < objs.size(); ++oi)
      for (std::size_t k = 0; k < sizes[oi]; ++k) {
        HfSet el = hf::kpair(objs[oi], tags[k]);
        carrier.push_back(el);
        proj_pairs.emplace_back(el, objs[oi]);
      }
    HfSet f0 = HfSet::of(carrier);
    SetMor gamma0(f0, c.c0, proj_pairs);

    // free action choices: one target per (p, non-identity arrow from γ0(p))
    std::vector<std::pair<HfSet, HfSet>> slots; // (p, arrow)
    std::vector<std::vector<HfSet>> choices;
    bool feasible = true;
    HfSet ids = c.i.image();
    for (const auto& p : f0.elems())
      for (const auto& f : c.c1.elems()) {
        if (!(gamma0.apply(p) == c.d0.apply(f))) continue;
        if (ids.contains(f) && c.d0.apply(f) == c.d1.apply(f) &&
            f == c.i.apply(c.d0.apply(f)))
          continue; // identity action is forced
        std::vector<HfSet> targets;
        for (const auto& q : f0.elems())
          if (gamma0.apply(q) == c.d1.apply(f)) targets.push_back(q);
        if (targets.empty()) {
          feasible = false;
          break;
        }
        slots.emplace_back(p, f);
        choices.push_back(std::move(targets));
      }
    if (feasible) {
      std::vector<std::size_t> pick(slots.size(), 0);
      for (;;) {
        std::vector<std::pair<HfSet, HfSet>> action;
        for (const auto& p : f0.elems())
          action.emplace_back(hf::kpair(p, c.i.apply(gamma0.apply(p))), p);
        for (std::size_t s = 0; s < slots.size(); ++s)
          action.emplace_back(hf::kpair(slots[s].first, slots[s].second), choices[s][pick[s]]);
        HfSet f1 = action_carrier(c, f0, gamma0);
        if (action.size() == f1.card()) {
          InternalDiagram cand{f0, gamma0, SetMor(f1, f0, action)};
          if (validate_diagram(c, cand).ok) out.push_back(std::move(cand));
        }
        std::size_t s = 0;
        while (s < pick.size() && ++pick[s] == choices[s].size()) pick[s++] = 0;
        if (s == pick.size()) break;
        if (slots.empty()) break;
      }
    }
    // next size vector
    std::size_t oi = 0;
    while (oi < sizes.size() && ++sizes[oi] > max_fibre) sizes[oi++] = 0;
    if (oi == sizes.size()) break;
    if (sizes.empty()) break;
  }
  return out;
}

// --- JSON table IO -----------------------------------------------------------

namespace {

using nlohmann::json;

std::vector<std::pair<HfSet, HfSet>> pairs_from_json(const json& arr, bool triple) {
  std::vector<std::pair<HfSet, HfSet>> out;
  for (const auto& entry : arr) {
    if (triple) {
      if (!entry.is_array() || entry.size() != 3)
        throw std::invalid_argument("expected [g,f,value] triples");
      out.emplace_back(hf::kpair(HfSet::parse(entry[0].get<std::string>()),
                                 HfSet::parse(entry[1].get<std::string>())),
                       HfSet::parse(entry[2].get<std::string>()));
    } else {
      if (!entry.is_array() || entry.size() != 2)
        throw std::invalid_argument("expected [arg,value] pairs");
      out.emplace_back(HfSet::parse(entry[0].get<std::string>()),
                       HfSet::parse(entry[1].get<std::string>()));
    }
  }
  return out;
}

json pairs_to_json(const SetMor& f) {
  json arr = json::array();
  for (const auto& [x, y] : f.pairs()) arr.push_back({x.to_string(), y.to_string()});
  return arr;
}

} // namespace

InternalCategory category_from_json(const std::string& text) {
  json doc = json::parse(text);
  HfSet c0 = HfSet::parse(doc.at("C0").get<std::string>());
  HfSet c1 = HfSet::parse(doc.at("C1").get<std::string>());
  SetMor d0(c1, c0, pairs_from_json(doc.at("d0"), false));
  SetMor d1(c1, c0, pairs_from_json(doc.at("d1"), false));
  SetMor i(c0, c1, pairs_from_json(doc.at("i"), false));
  HfSet cp = composable_pairs(c1, d0, d1);
  SetMor m(cp, c1, pairs_from_json(doc.at("m"), true));
  InternalCategory c{doc.value("name", std::string{}), c0, c1, d0, d1, i, m};
  auto rep = validate_internal_category(c);
  if (!rep.ok)
    throw std::invalid_argument("category file violates the axioms: " + rep.failures.front());
  return c;
}

std::string category_to_json(const InternalCategory& c) {
  json doc;
  if (!c.name.empty()) doc["name"] = c.name;
  doc["C0"] = c.c0.to_string();
  doc["C1"] = c.c1.to_string();
  doc["d0"] = pairs_to_json(c.d0);
  doc["d1"] = pairs_to_json(c.d1);
  doc["i"] = pairs_to_json(c.i);
  json m = json::array();
  for (const auto& [p, v] : c.m.pairs()) {
    auto [g, f] = hf::kpair_decode(p);
    m.push_back({g.to_string(), f.to_string(), v.to_string()});
  }
  doc["m"] = m;
  return doc.dump(2);
}

InternalDiagram diagram_from_json(const InternalCategory& c, const std::string& text) {
  json doc = json::parse(text);
  HfSet f0 = HfSet::parse(doc.at("F0").get<std::string>());
  SetMor gamma0(f0, c.c0, pairs_from_json(doc.at("gamma0"), false));
  HfSet f1 = action_carrier(c, f0, gamma0);
  SetMor e(f1, f0, pairs_from_json(doc.at("e"), true));
  InternalDiagram d{f0, gamma0, e};
  auto rep = validate_diagram(c, d);
  if (!rep.ok)
    throw std::invalid_argument("diagram file violates the laws: " + rep.failures.front());
  return d;
}

std::string diagram_to_json(const InternalDiagram& f) {
  json doc;
  doc["F0"] = f.f0.to_string();
  doc["gamma0"] = pairs_to_json(f.gamma0);
  json e = json::array();
  for (const auto& [pf, v] : f.e.pairs()) {
    auto [p, arrow] = hf::kpair_decode(pf);
    e.push_back({p.to_string(), arrow.to_string(), v.to_string()});
  }
  doc["e"] = e;
  return doc.dump(2);
}

} // namespace stratcat::icat
