#include "stratcat/fincat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stratcat::cat {

namespace {

[[noreturn]] void shape_error(const std::string& what) {
  throw std::invalid_argument("shape mismatch: " + what);
}

} // namespace

SetMor::SetMor(HfSet dom, HfSet cod, std::vector<std::pair<HfSet, HfSet>> pairs)
    : dom_(std::move(dom)), cod_(std::move(cod)), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (pairs_.size() != dom_.card()) shape_error("graph not total on domain");
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i > 0 && pairs_[i].first == pairs_[i - 1].first)
      shape_error("graph not single-valued at " + pairs_[i].first.to_string());
    if (!dom_.contains(pairs_[i].first))
      shape_error("argument outside domain: " + pairs_[i].first.to_string());
    if (!cod_.contains(pairs_[i].second))
      shape_error("value outside codomain: " + pairs_[i].second.to_string());
  }
}

SetMor SetMor::identity(const HfSet& a) {
  std::vector<std::pair<HfSet, HfSet>> pairs;
  pairs.reserve(a.card());
  for (const auto& x : a.elems()) pairs.emplace_back(x, x);
  return SetMor(a, a, std::move(pairs));
}

SetMor SetMor::constant(const HfSet& dom, const HfSet& cod, const HfSet& value) {
  std::vector<std::pair<HfSet, HfSet>> pairs;
  pairs.reserve(dom.card());
  for (const auto& x : dom.elems()) pairs.emplace_back(x, value);
  return SetMor(dom, cod, std::move(pairs));
}

SetMor SetMor::from_graph(const FuncGraph& fg) {
  if (auto err = hf::func_graph_error(fg)) shape_error(*err);
  std::vector<std::pair<HfSet, HfSet>> pairs;
  pairs.reserve(fg.graph.card());
  for (const auto& p : fg.graph.elems()) pairs.push_back(hf::kpair_decode(p));
  return SetMor(fg.domain, fg.codomain, std::move(pairs));
}

SetMor SetMor::from_fn(const HfSet& dom, const HfSet& cod,
                       const std::function<HfSet(const HfSet&)>& fn) {
  std::vector<std::pair<HfSet, HfSet>> pairs;
  pairs.reserve(dom.card());
  for (const auto& x : dom.elems()) pairs.emplace_back(x, fn(x));
  return SetMor(dom, cod, std::move(pairs));
}

const HfSet& SetMor::apply(const HfSet& x) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), x,
                             [](const auto& p, const HfSet& key) { return p.first < key; });
  if (it == pairs_.end() || !(it->first == x))
    throw std::invalid_argument("applied outside domain: " + x.to_string());
  return it->second;
}

HfSet SetMor::graph() const {
  std::vector<HfSet> out;
  out.reserve(pairs_.size());
  for (const auto& [x, y] : pairs_) out.push_back(hf::kpair(x, y));
  return HfSet::of(std::move(out));
}

FuncGraph SetMor::func_graph() const { return FuncGraph{dom_, cod_, graph()}; }

HfSet SetMor::image() const {
  std::vector<HfSet> out;
  out.reserve(pairs_.size());
  for (const auto& [x, y] : pairs_) out.push_back(y);
  return HfSet::of(std::move(out));
}

bool SetMor::is_mono() const { return image().card() == dom_.card(); }
bool SetMor::is_epi() const { return image() == cod_; }

bool operator==(const SetMor& a, const SetMor& b) {
  return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.pairs_ == b.pairs_;
}

std::strong_ordering operator<=>(const SetMor& a, const SetMor& b) {
  if (auto c = a.dom_ <=> b.dom_; c != 0) return c;
  if (auto c = a.cod_ <=> b.cod_; c != 0) return c;
  if (auto c = a.pairs_.size() <=> b.pairs_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.pairs_.size(); ++i) {
    if (auto c = a.pairs_[i].first <=> b.pairs_[i].first; c != 0) return c;
    if (auto c = a.pairs_[i].second <=> b.pairs_[i].second; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string SetMor::to_string() const {
  std::string out = dom_.to_string() + " -> " + cod_.to_string() + " via {";
  bool first = true;
  for (const auto& [x, y] : pairs_) {
    if (!first) out += ",";
    out += "<" + x.to_string() + "," + y.to_string() + ">";
    first = false;
  }
  return out + "}";
}

SetMor compose(const SetMor& g, const SetMor& f) {
  if (!(f.cod() == g.dom()))
    shape_error("compose: cod " + f.cod().to_string() + " vs dom " + g.dom().to_string());
  std::vector<std::pair<HfSet, HfSet>> pairs;
  pairs.reserve(f.pairs().size());
  for (const auto& [x, y] : f.pairs()) pairs.emplace_back(x, g.apply(y));
  return SetMor(f.dom(), g.cod(), std::move(pairs));
}

// --- enumeration -----------------------------------------------------------

std::vector<SetMor> all_maps(const HfSet& a, const HfSet& b) {
  std::vector<SetMor> out;
  if (a.is_empty()) {
    out.push_back(SetMor(a, b, {}));
    return out;
  }
  if (b.is_empty()) return out;
  const auto& dom = a.elems();
  const auto& cod = b.elems();
  std::vector<std::size_t> idx(dom.size(), 0);
  for (;;) {
    std::vector<std::pair<HfSet, HfSet>> pairs;
    pairs.reserve(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i) pairs.emplace_back(dom[i], cod[idx[i]]);
    out.push_back(SetMor(a, b, std::move(pairs)));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == cod.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

std::vector<SetMor> all_monos(const HfSet& a, const HfSet& b) {
  std::vector<SetMor> out;
  for (auto& f : all_maps(a, b))
    if (f.is_mono()) out.push_back(std::move(f));
  return out;
}

std::vector<SetMor> all_surjections(const HfSet& a, const HfSet& b) {
  std::vector<SetMor> out;
  for (auto& f : all_maps(a, b))
    if (f.is_epi()) out.push_back(std::move(f));
  return out;
}

std::size_t hom_size(const HfSet& a, const HfSet& b) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < a.card(); ++i) n *= b.card();
  return n;
}

std::vector<HfSet> objects_up_to(std::size_t max_card, unsigned max_rank) {
  std::vector<HfSet> out;
  for (auto& x : hf::universe(max_rank))
    if (x.card() <= max_card) out.push_back(std::move(x));
  return out;
}

// --- finite limits ---------------------------------------------------------

HfSet terminal() { return hf::singleton(HfSet{}); }
HfSet initial() { return HfSet{}; }

SetMor bang(const HfSet& a) { return SetMor::constant(a, terminal(), HfSet{}); }
SetMor from_initial(const HfSet& a) { return SetMor(HfSet{}, a, {}); }

ProductData product_of(const HfSet& a, const HfSet& b) {
  HfSet obj = hf::product(a, b);
  auto first = SetMor::from_fn(obj, a, [](const HfSet& p) { return hf::kpair_decode(p).first; });
  auto second = SetMor::from_fn(obj, b, [](const HfSet& p) { return hf::kpair_decode(p).second; });
  return {obj, std::move(first), std::move(second)};
}

SetMor tuple_map(const SetMor& f, const SetMor& g) {
  if (!(f.dom() == g.dom())) shape_error("tuple_map: domains differ");
  HfSet obj = hf::product(f.cod(), g.cod());
  return SetMor::from_fn(f.dom(), obj,
                         [&](const HfSet& x) { return hf::kpair(f.apply(x), g.apply(x)); });
}

EqualizerData equalizer(const SetMor& f, const SetMor& g) {
  if (!(f.dom() == g.dom() && f.cod() == g.cod())) shape_error("equalizer: not a parallel pair");
  std::vector<HfSet> carrier;
  for (const auto& x : f.dom().elems())
    if (f.apply(x) == g.apply(x)) carrier.push_back(x);
  HfSet obj = HfSet::of(std::move(carrier));
  return {obj, SetMor::from_fn(obj, f.dom(), [](const HfSet& x) { return x; })};
}

SetMor equalizer_mediator(const EqualizerData& eq, const SetMor& h) {
  return SetMor::from_fn(h.dom(), eq.obj, [&](const HfSet& x) {
    HfSet y = h.apply(x);
    if (!eq.obj.contains(y)) shape_error("equalizer_mediator: cone does not equalize");
    return y;
  });
}

PullbackData pullback(const SetMor& f, const SetMor& g) {
  if (!(f.cod() == g.cod())) shape_error("pullback: not a cospan");
  std::vector<HfSet> carrier;
  for (const auto& a : f.dom().elems())
    for (const auto& b : g.dom().elems())
      if (f.apply(a) == g.apply(b)) carrier.push_back(hf::kpair(a, b));
  HfSet obj = HfSet::of(std::move(carrier));
  auto p1 = SetMor::from_fn(obj, f.dom(), [](const HfSet& p) { return hf::kpair_decode(p).first; });
  auto p2 = SetMor::from_fn(obj, g.dom(), [](const HfSet& p) { return hf::kpair_decode(p).second; });
  return {obj, std::move(p1), std::move(p2)};
}

SetMor pullback_mediator(const PullbackData& pb, const SetMor& x1, const SetMor& x2) {
  if (!(x1.dom() == x2.dom())) shape_error("pullback_mediator: cone domains differ");
  return SetMor::from_fn(x1.dom(), pb.obj, [&](const HfSet& x) {
    HfSet p = hf::kpair(x1.apply(x), x2.apply(x));
    if (!pb.obj.contains(p)) shape_error("pullback_mediator: cone does not commute");
    return p;
  });
}

bool is_pullback_square(const SetMor& p, const SetMor& q, const SetMor& f, const SetMor& g) {
  if (!(p.dom() == q.dom())) return false;
  if (!(f.dom() == p.cod() && g.dom() == q.cod() && f.cod() == g.cod())) return false;
  if (!(compose(f, p) == compose(g, q))) return false;
  PullbackData pb = pullback(f, g);
  // the induced map into the canonical pullback must be an isomorphism
  std::set<HfSet> hit;
  for (const auto& x : p.dom().elems()) {
    HfSet induced = hf::kpair(p.apply(x), q.apply(x));
    if (!hit.insert(induced).second) return false;
  }
  return hit.size() == pb.obj.card();
}

// --- finite colimits -------------------------------------------------------

CoproductData coproduct_of(const HfSet& a, const HfSet& b) {
  HfSet obj = hf::disjoint_union(a, b);
  const HfSet ltag;                           // ∅
  const HfSet rtag = hf::singleton(HfSet{});  // {∅}
  auto i1 = SetMor::from_fn(a, obj, [&](const HfSet& x) { return hf::kpair(x, ltag); });
  auto i2 = SetMor::from_fn(b, obj, [&](const HfSet& y) { return hf::kpair(y, rtag); });
  return {obj, std::move(i1), std::move(i2)};
}

namespace {

// decodes a tagged-union element into (value, is_right)
std::pair<HfSet, bool> untag(const HfSet& e) {
  auto [v, tag] = hf::kpair_decode(e);
  return {v, !tag.is_empty()};
}

} // namespace

SetMor cotuple_map(const SetMor& f, const SetMor& g) {
  if (!(f.cod() == g.cod())) shape_error("cotuple_map: codomains differ");
  HfSet obj = hf::disjoint_union(f.dom(), g.dom());
  return SetMor::from_fn(obj, f.cod(), [&](const HfSet& e) {
    auto [v, right] = untag(e);
    return right ? g.apply(v) : f.apply(v);
  });
}

SetMor coproduct_map(const SetMor& f, const SetMor& g) {
  HfSet obj = hf::disjoint_union(f.dom(), g.dom());
  HfSet cod = hf::disjoint_union(f.cod(), g.cod());
  const HfSet ltag;
  const HfSet rtag = hf::singleton(HfSet{});
  return SetMor::from_fn(obj, cod, [&](const HfSet& e) {
    auto [v, right] = untag(e);
    return right ? hf::kpair(g.apply(v), rtag) : hf::kpair(f.apply(v), ltag);
  });
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::size_t index_of(const HfSet& carrier, const HfSet& x) {
  const auto& es = carrier.elems();
  auto it = std::lower_bound(es.begin(), es.end(), x);
  if (it == es.end() || !(*it == x))
    shape_error("element not in carrier: " + x.to_string());
  return static_cast<std::size_t>(it - es.begin());
}

} // namespace

CoequalizerData coequalizer(const SetMor& f, const SetMor& g) {
  if (!(f.dom() == g.dom() && f.cod() == g.cod())) shape_error("coequalizer: not a parallel pair");
  const HfSet& b = f.cod();
  UnionFind uf(b.card());
  for (const auto& a : f.dom().elems())
    uf.unite(index_of(b, f.apply(a)), index_of(b, g.apply(a)));
  // representative per class: the least member in canonical order, which
  // is the member with the least index since b.elems() is sorted
  std::vector<std::optional<HfSet>> rep(b.card());
  for (std::size_t i = 0; i < b.card(); ++i) {
    std::size_t root = uf.find(i);
    if (!rep[root]) rep[root] = b.elems()[i];
  }
  std::vector<HfSet> carrier;
  for (const auto& r : rep)
    if (r) carrier.push_back(*r);
  HfSet obj = HfSet::of(std::move(carrier));
  auto proj = SetMor::from_fn(b, obj,
                              [&](const HfSet& x) { return *rep[uf.find(index_of(b, x))]; });
  return {obj, std::move(proj)};
}

SetMor coeq_mediator(const CoequalizerData& ce, const SetMor& z) {
  if (!(z.dom() == ce.proj.dom())) shape_error("coeq_mediator: wrong cocone domain");
  return SetMor::from_fn(ce.obj, z.cod(), [&](const HfSet& r) { return z.apply(r); });
}

HfSet coequalizer_classes(const SetMor& f, const SetMor& g) {
  CoequalizerData ce = coequalizer(f, g);
  std::map<HfSet, std::vector<HfSet>> classes;
  for (const auto& [x, r] : ce.proj.pairs()) classes[r].push_back(x);
  std::vector<HfSet> blocks;
  blocks.reserve(classes.size());
  for (auto& [r, members] : classes) blocks.push_back(HfSet::of(std::move(members)));
  return HfSet::of(std::move(blocks));
}

PtjData ptj_from_partition(const HfSet& partition) {
  std::size_t total = 0;
  for (const auto& block : partition.elems()) {
    if (block.is_empty()) throw std::invalid_argument("ptj: empty block");
    total += block.card();
  }
  HfSet b = hf::union_big(partition);
  if (b.card() != total) throw std::invalid_argument("ptj: overlapping blocks");
  std::vector<HfSet> pairs;
  for (const auto& block : partition.elems())
    for (const auto& x : block.elems())
      for (const auto& y : block.elems()) pairs.push_back(hf::kpair(x, y));
  HfSet a = HfSet::of(std::move(pairs));
  auto p1 = SetMor::from_fn(a, b, [](const HfSet& p) { return hf::kpair_decode(p).first; });
  auto p2 = SetMor::from_fn(a, b, [](const HfSet& p) { return hf::kpair_decode(p).second; });
  return {a, std::move(p1), std::move(p2)};
}

// --- subobject classifier --------------------------------------------------

HfSet omega() { return HfSet::of({HfSet{}, hf::singleton(HfSet{})}); }
HfSet truth_value() { return hf::singleton(HfSet{}); }

SetMor true_arrow() { return SetMor::constant(terminal(), omega(), truth_value()); }

SetMor char_map(const SetMor& m) {
  if (!m.is_mono()) throw std::invalid_argument("char_map: not a monomorphism");
  HfSet img = m.image();
  return SetMor::from_fn(m.cod(), omega(), [&](const HfSet& x) {
    return img.contains(x) ? truth_value() : HfSet{};
  });
}

// --- the T functor ---------------------------------------------------------

HfSet T_ob(const HfSet& a) { return hf::singleton_image(a); }

SetMor T_mor(const SetMor& f) {
  return SetMor::from_fn(T_ob(f.dom()), T_ob(f.cod()), [&](const HfSet& s) {
    return hf::singleton(f.apply(s.elems()[0]));
  });
}

// --- exponentials -----------------------------------------------------------

HfSet exp_set(const HfSet& a, const HfSet& b) {
  std::vector<HfSet> graphs;
  for (const auto& f : all_maps(a, b)) graphs.push_back(f.graph());
  return HfSet::of(std::move(graphs));
}

HfSet apply_graph(const HfSet& graph, const HfSet& x) {
  for (const auto& p : graph.elems()) {
    auto [arg, val] = hf::kpair_decode(p);
    if (arg == x) return val;
  }
  throw std::invalid_argument("apply_graph: argument not present: " + x.to_string());
}

SetMor mor_of_graph(const HfSet& graph, const HfSet& a, const HfSet& b) {
  return SetMor::from_graph(FuncGraph{a, b, graph});
}

SetMor eval_prime(const HfSet& a, const HfSet& b) {
  HfSet dom = hf::product(T_ob(a), exp_set(a, b));
  return SetMor::from_fn(dom, T_ob(b), [&](const HfSet& p) {
    auto [sx, g] = hf::kpair_decode(p);
    return hf::singleton(apply_graph(g, sx.elems()[0]));
  });
}

SetMor exp_post(const SetMor& g, const HfSet& a) {
  return exp_map(SetMor::identity(a), g);
}

SetMor exp_pre(const SetMor& f, const HfSet& b) {
  return exp_map(f, SetMor::identity(b));
}

SetMor exp_map(const SetMor& f, const SetMor& g) {
  // h ∈ A⇒B ↦ g∘h∘f ∈ A′⇒B′  for f: A′→A, g: B→B′
  HfSet dom = exp_set(f.cod(), g.dom());
  HfSet cod = exp_set(f.dom(), g.cod());
  return SetMor::from_fn(dom, cod, [&](const HfSet& graph) {
    SetMor h = mor_of_graph(graph, f.cod(), g.dom());
    return compose(g, compose(h, f)).graph();
  });
}

SetMor theta(const SetMor& f, const HfSet& a, const HfSet& b, const HfSet& c) {
  if (!(f.dom() == hf::product(T_ob(a), c) && f.cod() == T_ob(b)))
    shape_error("theta: expected TA×C → TB");
  HfSet eab = exp_set(a, b);
  return SetMor::from_fn(c, eab, [&](const HfSet& cv) {
    std::vector<HfSet> pairs;
    pairs.reserve(a.card());
    for (const auto& av : a.elems()) {
      HfSet value = hf::union_big(f.apply(hf::kpair(hf::singleton(av), cv)));
      pairs.push_back(hf::kpair(av, value));
    }
    return HfSet::of(std::move(pairs));
  });
}

SetMor theta_inv(const SetMor& m, const HfSet& a, const HfSet& b, const HfSet& c) {
  if (!(m.dom() == c && m.cod() == exp_set(a, b)))
    shape_error("theta_inv: expected C → (A⇒B)");
  HfSet dom = hf::product(T_ob(a), c);
  return SetMor::from_fn(dom, T_ob(b), [&](const HfSet& p) {
    auto [sa, cv] = hf::kpair_decode(p);
    return hf::singleton(apply_graph(m.apply(cv), sa.elems()[0]));
  });
}

SetMor unit_k(const HfSet& a, const HfSet& c) {
  HfSet cod = exp_set(a, hf::product(a, c));
  return SetMor::from_fn(T_ob(c), cod, [&](const HfSet& sc) {
    const HfSet& cv = sc.elems()[0];
    std::vector<HfSet> pairs;
    pairs.reserve(a.card());
    for (const auto& av : a.elems()) pairs.push_back(hf::kpair(av, hf::kpair(av, cv)));
    return HfSet::of(std::move(pairs));
  });
}

EIso e_iso(const HfSet& a, const HfSet& b) {
  HfSet tab = T_ob(exp_set(a, b));    // T(A⇒B)
  HfSet ta_tb = exp_set(T_ob(a), T_ob(b)); // TA⇒TB
  auto to = SetMor::from_fn(tab, ta_tb, [&](const HfSet& sh) {
    SetMor h = mor_of_graph(sh.elems()[0], a, b);
    return T_mor(h).graph();
  });
  auto from = SetMor::from_fn(ta_tb, tab, [&](const HfSet& kgraph) {
    std::vector<HfSet> pairs;
    for (const auto& p : kgraph.elems()) {
      auto [sx, sy] = hf::kpair_decode(p);
      pairs.push_back(hf::kpair(sx.elems()[0], sy.elems()[0]));
    }
    return hf::singleton(HfSet::of(std::move(pairs)));
  });
  return {std::move(to), std::move(from)};
}

// --- subobjects and pseudo-powerobjects -------------------------------------

PowerObjData power_obj(const HfSet& a) {
  HfSet pa = hf::powerset(a);
  std::vector<HfSet> mem;
  for (const auto& s : pa.elems())
    for (const auto& x : s.elems()) mem.push_back(hf::kpair(hf::singleton(x), s));
  return {pa, {HfSet::of(std::move(mem)), hf::product(T_ob(a), pa)}};
}

SetMor p_transpose(const SubobjectRep& r, const HfSet& a, const HfSet& b) {
  if (!(r.ambient == hf::product(T_ob(a), b)))
    shape_error("p_transpose: ambient is not TA×B");
  if (!hf::subset_of(r.subset, r.ambient))
    shape_error("p_transpose: relation not inside its ambient");
  HfSet pa = hf::powerset(a);
  return SetMor::from_fn(b, pa, [&](const HfSet& bv) {
    std::vector<HfSet> members;
    for (const auto& av : a.elems())
      if (r.subset.contains(hf::kpair(hf::singleton(av), bv))) members.push_back(av);
    return HfSet::of(std::move(members));
  });
}

SubobjectRep image_sub(const SetMor& f, const SubobjectRep& s) {
  if (!(s.ambient == f.dom())) shape_error("image_sub: ambient mismatch");
  std::vector<HfSet> out;
  for (const auto& x : s.subset.elems()) out.push_back(f.apply(x));
  return {HfSet::of(std::move(out)), f.cod()};
}

SubobjectRep preimage_sub(const SetMor& f, const SubobjectRep& s) {
  if (!(s.ambient == f.cod())) shape_error("preimage_sub: ambient mismatch");
  std::vector<HfSet> out;
  for (const auto& x : f.dom().elems())
    if (s.subset.contains(f.apply(x))) out.push_back(x);
  return {HfSet::of(std::move(out)), f.dom()};
}

SubobjectRep dual_image(const SetMor& f, const SubobjectRep& s) {
  if (!(s.ambient == f.dom())) shape_error("dual_image: ambient mismatch");
  std::vector<HfSet> out;
  for (const auto& b : f.cod().elems()) {
    bool all_in = true;
    for (const auto& [x, y] : f.pairs())
      if (y == b && !s.subset.contains(x)) {
        all_in = false;
        break;
      }
    if (all_in) out.push_back(b);
  }
  return {HfSet::of(std::move(out)), f.cod()};
}

Factorization epi_mono_factor(const SetMor& f) {
  HfSet mid = f.image();
  auto epi = SetMor::from_fn(f.dom(), mid, [&](const HfSet& x) { return f.apply(x); });
  auto mono = SetMor::from_fn(mid, f.cod(), [](const HfSet& y) { return y; });
  return {std::move(mid), std::move(epi), std::move(mono)};
}

// --- slices ------------------------------------------------------------------

SliceObj slice_identity(const HfSet& base) { return {base, base, SetMor::identity(base)}; }

std::vector<SetMor> slice_homs(const SliceObj& x, const SliceObj& y) {
  if (!(x.base == y.base)) shape_error("slice_homs: bases differ");
  std::vector<SetMor> out;
  for (auto& h : all_maps(x.total, y.total))
    if (compose(y.proj, h) == x.proj) out.push_back(std::move(h));
  return out;
}

SliceObj pullback_slice(const SetMor& f, const SliceObj& c_rho) {
  if (!(c_rho.base == f.cod())) shape_error("pullback_slice: slice not over cod(f)");
  PullbackData pb = pullback(c_rho.proj, f); // pairs ⟨c,a⟩ with ρ(c) = f(a)
  return {pb.obj, f.dom(), pb.p2};
}

namespace {

// all sections g of γ over the fibre (γ∘g = id on the fibre), as graphs
std::vector<HfSet> sections_over(const std::vector<HfSet>& fibre, const SliceObj& d_gamma) {
  std::vector<std::vector<HfSet>> options(fibre.size());
  for (std::size_t i = 0; i < fibre.size(); ++i) {
    for (const auto& [d, x] : d_gamma.proj.pairs())
      if (x == fibre[i]) options[i].push_back(d);
    if (options[i].empty()) return {};
  }
  std::vector<HfSet> out;
  std::vector<std::size_t> idx(fibre.size(), 0);
  for (;;) {
    std::vector<HfSet> pairs;
    pairs.reserve(fibre.size());
    for (std::size_t i = 0; i < fibre.size(); ++i)
      pairs.push_back(hf::kpair(fibre[i], options[i][idx[i]]));
    out.push_back(HfSet::of(std::move(pairs)));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

std::vector<HfSet> fibre_of(const SetMor& f, const HfSet& b) {
  std::vector<HfSet> out;
  for (const auto& [x, y] : f.pairs())
    if (y == b) out.push_back(x);
  return out;
}

} // namespace

SliceObj pi_tilde(const SetMor& f, const SliceObj& d_gamma) {
  if (!(d_gamma.base == f.dom())) shape_error("pi_tilde: slice not over dom(f)");
  std::vector<HfSet> carrier;
  for (const auto& b : f.cod().elems()) {
    for (const auto& g : sections_over(fibre_of(f, b), d_gamma))
      carrier.push_back(hf::kpair(g, hf::singleton(b)));
  }
  HfSet total = HfSet::of(std::move(carrier));
  HfSet base = T_ob(f.cod());
  auto proj = SetMor::from_fn(total, base,
                              [](const HfSet& e) { return hf::kpair_decode(e).second; });
  return {std::move(total), std::move(base), std::move(proj)};
}

SetMor pi_tilde_map(const SetMor& f, const SliceObj& d_gamma, const SliceObj& d2_gamma2,
                    const SetMor& h) {
  if (!(h.dom() == d_gamma.total && h.cod() == d2_gamma2.total))
    shape_error("pi_tilde_map: not a slice morphism carrier");
  if (!(compose(d2_gamma2.proj, h) == d_gamma.proj))
    shape_error("pi_tilde_map: h is not over the base");
  SliceObj src = pi_tilde(f, d_gamma);
  SliceObj dst = pi_tilde(f, d2_gamma2);
  return SetMor::from_fn(src.total, dst.total, [&](const HfSet& e) {
    auto [g, sb] = hf::kpair_decode(e);
    std::vector<HfSet> pairs;
    for (const auto& p : g.elems()) {
      auto [x, d] = hf::kpair_decode(p);
      pairs.push_back(hf::kpair(x, h.apply(d)));
    }
    return hf::kpair(HfSet::of(std::move(pairs)), sb);
  });
}

SetMor pi_tilde_sigma(const SetMor& f, const SliceObj& c_rho) {
  SliceObj star = pullback_slice(f, c_rho);
  SliceObj target = pi_tilde(f, star);
  return SetMor::from_fn(T_ob(c_rho.total), target.total, [&](const HfSet& sc) {
    const HfSet& c = sc.elems()[0];
    HfSet b = c_rho.proj.apply(c);
    std::vector<HfSet> pairs;
    for (const auto& a : fibre_of(f, b)) pairs.push_back(hf::kpair(a, hf::kpair(c, a)));
    return hf::kpair(HfSet::of(std::move(pairs)), hf::singleton(b));
  });
}

SetMor pi_tilde_m_acute(const SetMor& f, const SliceObj& c_rho, const SliceObj& d_gamma,
                        const SetMor& m) {
  SliceObj star = pullback_slice(f, c_rho);
  return SetMor::from_fn(star.total, d_gamma.total, [&](const HfSet& p) {
    auto [c, a] = hf::kpair_decode(p);
    auto [g, sb] = hf::kpair_decode(m.apply(hf::singleton(c)));
    (void)sb;
    return apply_graph(g, a);
  });
}

// --- relative adjunction bookkeeping -----------------------------------------

bool is_hom_bijection(const HomBijection& table, const std::vector<SetMor>& lhs,
                      const std::vector<SetMor>& rhs) {
  if (table.entries.size() != lhs.size() || lhs.size() != rhs.size()) return false;
  std::set<SetMor> seen_l, seen_r;
  for (const auto& [l, r] : table.entries) {
    if (std::find(lhs.begin(), lhs.end(), l) == lhs.end()) return false;
    if (std::find(rhs.begin(), rhs.end(), r) == rhs.end()) return false;
    if (!seen_l.insert(l).second) return false;
    if (!seen_r.insert(r).second) return false;
  }
  return true;
}

HomBijection compose_hom_bijection(const HomBijection& first, const HomBijection& second) {
  auto bijective = [](const HomBijection& t) {
    std::set<SetMor> l, r;
    for (const auto& [a, b] : t.entries)
      if (!l.insert(a).second || !r.insert(b).second) return false;
    return true;
  };
  if (!bijective(first) || !bijective(second))
    throw std::invalid_argument("compose_hom_bijection: table is not bijective");
  HomBijection out;
  for (const auto& [a, mid] : first.entries) {
    auto it = std::find_if(second.entries.begin(), second.entries.end(),
                           [&](const auto& e) { return e.first == mid; });
    if (it == second.entries.end())
      throw std::invalid_argument("compose_hom_bijection: middle hom-sets do not match");
    out.entries.emplace_back(a, it->second);
  }
  if (out.entries.size() != second.entries.size())
    throw std::invalid_argument("compose_hom_bijection: middle hom-sets do not match");
  return out;
}

bool derived_relative_adjunction_check(const std::vector<HomBijection>& h_f_tables,
                                       const std::vector<HomBijection>& fj_g_tables,
                                       std::vector<HomBijection>* composed) {
  if (h_f_tables.size() != fj_g_tables.size())
    throw std::invalid_argument("derived_relative_adjunction_check: sample sizes differ");
  if (composed) composed->clear();
  for (std::size_t i = 0; i < h_f_tables.size(); ++i) {
    HomBijection through = compose_hom_bijection(h_f_tables[i], fj_g_tables[i]);
    std::set<SetMor> l, r;
    for (const auto& [a, b] : through.entries)
      if (!l.insert(a).second || !r.insert(b).second) return false;
    if (composed) composed->push_back(std::move(through));
  }
  return true;
}

} // namespace stratcat::cat
