#include "stratcat/smallmaps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace stratcat::small {

SmallnessPredicate SmallnessPredicate::from_name(std::string_view name) {
  if (name == "all") return all();
  auto parse_bound = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (!name.starts_with(prefix)) return std::nullopt;
    std::size_t value = 0;
    auto rest = name.substr(prefix.size());
    if (rest.empty()) throw std::invalid_argument("missing bound in predicate: " + std::string(name));
    for (char ch : rest) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("bad bound in predicate: " + std::string(name));
      value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    return value;
  };
  if (auto n = parse_bound("fibre:")) return fibre_bound(*n);
  if (auto k = parse_bound("stcan:")) return stcan_ceiling(*k);
  throw std::invalid_argument("unknown smallness predicate: " + std::string(name));
}

std::string SmallnessPredicate::to_string() const {
  switch (kind) {
    case Kind::All: return "all";
    case Kind::FibreBound: return "fibre:" + std::to_string(bound);
    case Kind::StcanCeiling: return "stcan:" + std::to_string(bound);
  }
  return "?";
}

std::vector<std::pair<HfSet, HfSet>> fibres(const SetMor& f) {
  std::vector<std::pair<HfSet, HfSet>> out;
  out.reserve(f.cod().card());
  for (const auto& b : f.cod().elems()) {
    std::vector<HfSet> fibre;
    for (const auto& [x, y] : f.pairs())
      if (y == b) fibre.push_back(x);
    out.emplace_back(b, HfSet::of(std::move(fibre)));
  }
  return out;
}

bool set_is_small(const HfSet& x, const SmallnessPredicate& p) {
  switch (p.kind) {
    case SmallnessPredicate::Kind::All: return true;
    case SmallnessPredicate::Kind::FibreBound: return x.card() <= p.bound;
    case SmallnessPredicate::Kind::StcanCeiling:
      return hf::rank(hf::iota_graph(x).graph) <= p.bound;
  }
  return false;
}

bool is_small(const SetMor& f, const SmallnessPredicate& p) {
  // agrees with set_is_small over fibres(f) but avoids materializing the
  // fibre sets: a nonempty fibre x has rank 1 + max element rank, and its
  // iota graph has rank rank(x) + 3; an empty fibre always passes
  const auto& ps = f.pairs();
  switch (p.kind) {
    case SmallnessPredicate::Kind::All:
      return true;
    case SmallnessPredicate::Kind::FibreBound: {
      for (std::size_t i = 0; i < ps.size(); ++i) {
        std::size_t count = 0;
        for (std::size_t j = 0; j < ps.size(); ++j)
          if (ps[j].second == ps[i].second) ++count;
        if (count > p.bound) return false;
      }
      return true;
    }
    case SmallnessPredicate::Kind::StcanCeiling: {
      for (std::size_t i = 0; i < ps.size(); ++i) {
        unsigned max_rank = 0;
        for (std::size_t j = 0; j < ps.size(); ++j)
          if (ps[j].second == ps[i].second) max_rank = std::max(max_rank, ps[j].first.rank());
        if (max_rank + 4 > p.bound) return false;
      }
      return true;
    }
  }
  return false;
}

bool AxiomReport::all_pass() const {
  for (const auto& e : entries)
    if (e.status != "PASS") return false;
  return true;
}

namespace {

std::vector<std::size_t> pick_indices(std::size_t n, std::size_t cap, std::uint64_t seed,
                                      std::uint64_t salt) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (cap == 0 || n <= cap) return idx;
  std::mt19937_64 rng(seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x94d049bb133111ebULL));
  for (std::size_t i = 0; i < cap; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(cap);
  std::sort(idx.begin(), idx.end());
  return idx;
}

struct AuditCtx {
  std::vector<HfSet> carriers; // subsets of the rank-bounded universe
  bool sampled = false;
  std::uint64_t seed = 1;
  sweep::Exec exec = sweep::Exec::Serial;
  std::size_t map_cap = 0; // per-hom cap when sampling

  std::vector<SetMor> maps(const HfSet& a, const HfSet& b, std::uint64_t salt) const {
    if (cat::hom_size(a, b) > 65536) return {};
    auto all = cat::all_maps(a, b);
    if (!sampled || map_cap == 0 || all.size() <= map_cap) return all;
    std::vector<SetMor> out;
    for (std::size_t i : pick_indices(all.size(), map_cap, seed, salt)) out.push_back(all[i]);
    return out;
  }
};

AuditCtx make_ctx(unsigned sample_rank, sweep::Exec exec, std::uint64_t seed) {
  if (sample_rank > 3)
    throw std::invalid_argument("audit: sample rank above 3 is not enumerable");
  AuditCtx ctx;
  HfSet universe_set = HfSet::of(hf::universe(sample_rank));
  if (sample_rank <= 2) {
    ctx.carriers = hf::subsets(universe_set);
  } else {
    auto subs = hf::subsets(HfSet::of(hf::universe(2)));
    // at rank 3 take the rank-2 carriers plus a seeded spread of larger ones
    ctx.carriers = subs;
    std::mt19937_64 rng(seed);
    const auto& members = universe_set.elems();
    for (int draws = 0; draws < 8; ++draws) {
      std::vector<HfSet> pickset;
      for (const auto& m : members)
        if (rng() % 3 == 0) pickset.push_back(m);
      ctx.carriers.push_back(HfSet::of(std::move(pickset)));
    }
    std::sort(ctx.carriers.begin(), ctx.carriers.end());
    ctx.carriers.erase(std::unique(ctx.carriers.begin(), ctx.carriers.end()), ctx.carriers.end());
    ctx.sampled = true;
    ctx.map_cap = 24;
  }
  ctx.seed = seed;
  ctx.exec = exec;
  return ctx;
}

std::string describe(const SetMor& f) { return f.to_string(); }

AxiomEntry make_entry(const char* axiom, const char* title, std::vector<std::string> bad,
                      std::vector<SetMor> maps) {
  AxiomEntry e;
  e.axiom = axiom;
  e.title = title;
  e.status = bad.empty() ? "PASS" : "FAIL";
  if (!bad.empty()) e.witness = bad.front();
  e.witness_maps = std::move(maps);
  return e;
}

struct Finding {
  std::string text;
  std::vector<SetMor> maps;
};

} // namespace

bool replay_composition_witness(const SetMor& g, const SetMor& f, const SmallnessPredicate& p) {
  return is_small(f, p) && is_small(g, p) && !is_small(compose(g, f), p);
}

AxiomReport audit_small_maps(const SmallnessPredicate& p, unsigned sample_rank,
                             sweep::Exec exec, std::uint64_t seed) {
  AuditCtx ctx = make_ctx(sample_rank, exec, seed);
  const auto& cs = ctx.carriers;
  AxiomReport report;
  report.predicate = p;
  report.sample_rank = sample_rank;
  report.sampled = ctx.sampled;

  // (i) subcategory: identities small, composition closed
  {
    std::vector<std::string> bad;
    std::vector<SetMor> maps;
    for (const auto& a : cs)
      if (!is_small(SetMor::identity(a), p))
        bad.push_back("identity on " + a.to_string() + " is not small");
    auto found = sweep::map_collect<Finding>(
        cs.size() * cs.size(), ctx.exec, [&](std::size_t idx) -> std::vector<Finding> {
          std::vector<Finding> out;
          // under ALL no composite can fail the membership test
          if (p.kind == SmallnessPredicate::Kind::All) return out;
          std::size_t ai = idx / cs.size(), bi = idx % cs.size();
          const HfSet& a = cs[ai];
          const HfSet& b = cs[bi];
          std::vector<SetMor> fs;
          for (auto& f : ctx.maps(a, b, idx * 2 + 1))
            if (is_small(f, p)) fs.push_back(std::move(f));
          if (fs.empty()) return out;
          for (const auto& c : cs) {
            for (const auto& g : ctx.maps(b, c, idx * 2 + 2)) {
              if (!is_small(g, p)) continue;
              for (const auto& f : fs) {
                if (!is_small(compose(g, f), p)) {
                  out.push_back({"composite of small maps is not small: g=" + describe(g) +
                                     " after f=" + describe(f),
                                 {g, f}});
                  return out; // one witness per task keeps the sweep bounded
                }
              }
            }
          }
          return out;
        });
    for (auto& f : found) {
      bad.push_back(f.text);
      if (maps.empty()) maps = f.maps;
    }
    report.entries.push_back(make_entry("(i)", "subcategory closure", std::move(bad), std::move(maps)));
  }

  // (ii) pullbacks of small maps are small
  {
    auto found = sweep::map_collect<Finding>(
        cs.size() * cs.size(), ctx.exec, [&](std::size_t idx) -> std::vector<Finding> {
          std::vector<Finding> out;
          if (p.kind == SmallnessPredicate::Kind::All) return out;
          std::size_t ai = idx / cs.size(), bi = idx % cs.size();
          const HfSet& a = cs[ai];
          const HfSet& b = cs[bi];
          std::vector<SetMor> fs;
          for (auto& f : ctx.maps(a, b, idx * 3 + 1))
            if (is_small(f, p)) fs.push_back(std::move(f));
          if (fs.empty()) return out;
          for (const auto& c : cs)
            for (const auto& g : ctx.maps(c, b, idx * 3 + 2))
              for (const auto& f : fs) {
                auto pb = cat::pullback(f, g);
                if (!is_small(pb.p2, p)) {
                  out.push_back({"pullback of small " + describe(f) + " along " + describe(g) +
                                     " is not small",
                                 {f, g}});
                  return out;
                }
              }
          return out;
        });
    std::vector<std::string> bad;
    std::vector<SetMor> maps;
    for (auto& f : found) {
      bad.push_back(f.text);
      if (maps.empty()) maps = f.maps;
    }
    report.entries.push_back(make_entry("(ii)", "pullback stability", std::move(bad), std::move(maps)));
  }

  // (iii) diagonals are small
  {
    std::vector<std::string> bad;
    std::vector<SetMor> maps;
    for (const auto& c : cs) {
      auto diag = cat::tuple_map(SetMor::identity(c), SetMor::identity(c));
      if (!is_small(diag, p)) {
        bad.push_back("diagonal on " + c.to_string() + " is not small");
        maps = {diag};
        break;
      }
    }
    report.entries.push_back(make_entry("(iii)", "small diagonals", std::move(bad), std::move(maps)));
  }

  // (iv) descent along regular epis: f∘e small, e epi ⟹ f small
  {
    auto found = sweep::map_collect<Finding>(
        cs.size() * cs.size(), ctx.exec, [&](std::size_t idx) -> std::vector<Finding> {
          std::vector<Finding> out;
          if (p.kind == SmallnessPredicate::Kind::All) return out;
          std::size_t ai = idx / cs.size(), bi = idx % cs.size();
          const HfSet& a = cs[ai];
          const HfSet& b = cs[bi];
          std::vector<SetMor> epis;
          for (auto& e : ctx.maps(a, b, idx * 5 + 1))
            if (e.is_epi()) epis.push_back(std::move(e));
          if (epis.empty()) return out;
          for (const auto& c : cs)
            for (const auto& f : ctx.maps(b, c, idx * 5 + 2)) {
              if (is_small(f, p)) continue; // nothing to refute
              for (const auto& e : epis)
                if (is_small(compose(f, e), p)) {
                  out.push_back({"f is not small although f∘e is, e=" + describe(e) +
                                     " f=" + describe(f),
                                 {f, e}});
                  return out;
                }
            }
          return out;
        });
    std::vector<std::string> bad;
    std::vector<SetMor> maps;
    for (auto& f : found) {
      bad.push_back(f.text);
      if (maps.empty()) maps = f.maps;
    }
    report.entries.push_back(make_entry("(iv)", "quotient descent", std::move(bad), std::move(maps)));
  }

  // (v) coproducts of small maps are small. The fibres of f⊔g over the
  // two halves of C⊔D are exactly the tagged fibres of f and of g, so a
  // small map with a bad tagged fibre on either side pins a witness pair.
  {
    const HfSet ltag;
    const HfSet rtag = hf::singleton(HfSet{});
    auto tagged = [](const HfSet& fibre, const HfSet& tag) {
      std::vector<HfSet> out;
      out.reserve(fibre.card());
      for (const auto& x : fibre.elems()) out.push_back(hf::kpair(x, tag));
      return HfSet::of(std::move(out));
    };
    auto side_ok = [&](const SetMor& f, const HfSet& tag) {
      for (const auto& [b, fibre] : fibres(f))
        if (!set_is_small(tagged(fibre, tag), p)) return false;
      return true;
    };
    auto found = sweep::map_collect<Finding>(
        cs.size() * cs.size(), ctx.exec, [&](std::size_t idx) -> std::vector<Finding> {
          std::vector<Finding> out;
          if (p.kind == SmallnessPredicate::Kind::All) return out;
          std::size_t ai = idx / cs.size(), ci = idx % cs.size();
          const HfSet& a = cs[ai];
          const HfSet& c = cs[ci];
          for (const auto& f : ctx.maps(a, c, idx * 7 + 1)) {
            if (!is_small(f, p)) continue;
            SetMor empty_small; // ∅ → ∅ is small under every predicate
            if (!side_ok(f, ltag)) {
              auto co = cat::coproduct_map(f, empty_small);
              if (!is_small(co, p)) {
                out.push_back({"coproduct of small maps is not small: f=" + describe(f) +
                                   " g=" + describe(empty_small),
                               {f, empty_small}});
                return out;
              }
            }
            if (!side_ok(f, rtag)) {
              auto co = cat::coproduct_map(empty_small, f);
              if (!is_small(co, p)) {
                out.push_back({"coproduct of small maps is not small: f=" + describe(empty_small) +
                                   " g=" + describe(f),
                               {empty_small, f}});
                return out;
              }
            }
          }
          return out;
        });
    std::vector<std::string> bad;
    std::vector<SetMor> maps;
    for (auto& f : found) {
      bad.push_back(f.text);
      if (maps.empty()) maps = f.maps;
    }
    report.entries.push_back(make_entry("(v)", "coproducts of small maps", std::move(bad), std::move(maps)));
  }

  return report;
}

std::optional<bool> descent_square(const SetMor& top, const SetMor& f, const SetMor& g,
                                   const SetMor& e, const SmallnessPredicate& p) {
  if (!e.is_epi()) return std::nullopt;
  if (!cat::is_pullback_square(f, top, e, g)) return std::nullopt;
  if (!is_small(f, p)) return true; // nothing to conclude
  return is_small(g, p);
}

DescentReport descent_check(const SmallnessPredicate& p, unsigned sample_rank,
                            sweep::Exec exec, std::uint64_t seed) {
  AuditCtx ctx = make_ctx(sample_rank, exec, seed);
  const auto& cs = ctx.carriers;
  DescentReport report;
  std::vector<std::size_t> counts(cs.size() * cs.size(), 0);
  auto found = sweep::map_collect<std::string>(
      cs.size() * cs.size(), ctx.exec, [&](std::size_t idx) -> std::vector<std::string> {
        std::size_t bi = idx / cs.size(), ai = idx % cs.size();
        const HfSet& b = cs[bi];
        const HfSet& a = cs[ai];
        std::vector<std::string> out;
        std::size_t local = 0;
        for (const auto& g : ctx.maps(b, a, idx * 11 + 1)) {
          bool g_small = is_small(g, p);
          for (const auto& c : cs)
            for (const auto& e : ctx.maps(c, a, idx * 11 + 2)) {
              if (!e.is_epi()) continue;
              auto pb = cat::pullback(e, g); // pairs ⟨c,b⟩, p1 → C, p2 → B
              ++local;
              if (!g_small && is_small(pb.p1, p))
                out.push_back("descent fails for g=" + g.to_string() + " e=" + e.to_string());
            }
        }
        counts[idx] = local;
        return out;
      });
  for (std::size_t c : counts) report.squares_checked += c;
  report.witnesses = std::move(found);
  report.pass = report.witnesses.empty();
  return report;
}

bool ScuReport::all_hold() const {
  for (const auto& e : entries)
    if (e.family_small && e.members_small && !e.union_small) return false;
  return true;
}

ScuReport scu_check(std::size_t k, unsigned sample_rank) {
  if (sample_rank > 3)
    throw std::invalid_argument("scu_check: sample rank above 3 is not enumerable");
  auto pred = SmallnessPredicate::stcan_ceiling(k);
  ScuReport report;
  for (const auto& family : hf::universe(sample_rank)) {
    ScuEntry entry;
    entry.family = family;
    entry.family_small = set_is_small(family, pred);
    entry.members_small = true;
    for (const auto& member : family.elems())
      if (!set_is_small(member, pred)) entry.members_small = false;
    entry.union_small = set_is_small(hf::union_big(family), pred);
    if (entry.family_small && entry.members_small) ++report.considered;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

HfSet indexed_product(const std::vector<std::pair<HfSet, HfSet>>& family) {
  std::vector<HfSet> graphs;
  std::vector<std::size_t> idx(family.size(), 0);
  for (const auto& [i, a] : family)
    if (a.is_empty() && !family.empty()) {
      // an empty factor kills the product (unless the index set is empty)
      return HfSet{};
    }
  for (;;) {
    std::vector<HfSet> pairs;
    pairs.reserve(family.size());
    for (std::size_t s = 0; s < family.size(); ++s)
      pairs.push_back(hf::kpair(family[s].first, family[s].second.elems()[idx[s]]));
    graphs.push_back(HfSet::of(std::move(pairs)));
    std::size_t s = 0;
    while (s < idx.size() && ++idx[s] == family[s].second.card()) idx[s++] = 0;
    if (s == idx.size()) break;
  }
  return HfSet::of(std::move(graphs));
}

bool product_embeds(const std::vector<std::pair<HfSet, HfSet>>& family, const HfSet& prod) {
  std::vector<HfSet> union_elems, index_elems;
  for (const auto& [i, a] : family) {
    index_elems.push_back(i);
    for (const auto& x : a.elems()) union_elems.push_back(x);
  }
  HfSet big = hf::powerset(hf::product(HfSet::of(std::move(union_elems)),
                                       HfSet::of(std::move(index_elems))));
  for (const auto& graph : prod.elems()) {
    std::vector<HfSet> flipped;
    for (const auto& pr : graph.elems()) {
      auto [i, a] = hf::kpair_decode(pr);
      flipped.push_back(hf::kpair(a, i));
    }
    if (!big.contains(HfSet::of(std::move(flipped)))) return false;
  }
  return true;
}

namespace {

const SetMor* find_bonding(const DirectedSystem& sys, const HfSet& i, const HfSet& j) {
  for (const auto& [bi, bj, pi] : sys.bonding)
    if (bi == i && bj == j) return &pi;
  return nullptr;
}

const HfSet* find_carrier(const DirectedSystem& sys, const HfSet& i) {
  for (const auto& [ci, a] : sys.carriers)
    if (ci == i) return &a;
  return nullptr;
}

} // namespace

std::optional<std::string> validate_system(const DirectedSystem& sys) {
  for (const auto& [i, j, pi] : sys.bonding) {
    if (i == j) return "bonding map on a reflexive pair " + i.to_string();
    const HfSet* ai = find_carrier(sys, i);
    const HfSet* aj = find_carrier(sys, j);
    if (!ai || !aj) return "bonding map over unknown index";
    if (!(pi.dom() == *ai && pi.cod() == *aj))
      return "bonding map shape mismatch at " + i.to_string() + ">" + j.to_string();
    if (!pi.is_epi()) return "bonding map not surjective at " + i.to_string() + ">" + j.to_string();
    if (find_bonding(sys, j, i)) return "order is not antisymmetric";
  }
  // transitivity of the induced order carries a commuting composite
  for (const auto& [i, j, pij] : sys.bonding)
    for (const auto& [j2, k, pjk] : sys.bonding) {
      if (!(j2 == j)) continue;
      const SetMor* pik = find_bonding(sys, i, k);
      if (!pik) return "missing composite bonding map " + i.to_string() + ">" + k.to_string();
      if (!(compose(pjk, pij) == *pik))
        return "bonding maps do not commute at " + i.to_string() + ">" + j.to_string() + ">" +
               k.to_string();
    }
  // directedness: any two indices have an upper bound
  auto geq = [&](const HfSet& i, const HfSet& j) { return i == j || find_bonding(sys, i, j); };
  for (const auto& [i, ai] : sys.carriers)
    for (const auto& [j, aj] : sys.carriers) {
      bool bounded = false;
      for (const auto& [k, ak] : sys.carriers)
        if (geq(k, i) && geq(k, j)) bounded = true;
      if (!bounded)
        return "index poset not directed at " + i.to_string() + ", " + j.to_string();
    }
  return std::nullopt;
}

bool InverseLimitResult::fibres_inject() const {
  for (const auto& fc : fibre_checks)
    if (!fc.injects) return false;
  return true;
}

InverseLimitResult inverse_limit(const DirectedSystem& sys) {
  if (auto err = validate_system(sys)) throw std::invalid_argument("inverse_limit: " + *err);
  InverseLimitResult res;

  // assemble compatible tuples by extending index by index
  std::vector<std::vector<std::pair<HfSet, HfSet>>> partial{{}};
  for (const auto& [i, ai] : sys.carriers) {
    std::vector<std::vector<std::pair<HfSet, HfSet>>> next;
    for (const auto& base : partial)
      for (const auto& x : ai.elems()) {
        bool ok = true;
        for (const auto& [j, y] : base) {
          if (const SetMor* pij = find_bonding(sys, i, j); pij && !(pij->apply(x) == y)) ok = false;
          if (const SetMor* pji = find_bonding(sys, j, i); pji && !(pji->apply(y) == x)) ok = false;
          if (!ok) break;
        }
        if (!ok) continue;
        auto extended = base;
        extended.emplace_back(i, x);
        next.push_back(std::move(extended));
      }
    partial = std::move(next);
  }
  std::vector<HfSet> limit_elems;
  for (const auto& tuple : partial) {
    std::vector<HfSet> pairs;
    pairs.reserve(tuple.size());
    for (const auto& [i, x] : tuple) pairs.push_back(hf::kpair(i, x));
    limit_elems.push_back(HfSet::of(std::move(pairs)));
  }
  res.limit = HfSet::of(std::move(limit_elems));

  for (const auto& [i, ai] : sys.carriers) {
    auto proj = SetMor::from_fn(res.limit, ai, [&](const HfSet& graph) {
      for (const auto& pr : graph.elems()) {
        auto [idx, val] = hf::kpair_decode(pr);
        if (idx == i) return val;
      }
      throw std::logic_error("inverse_limit: tuple misses an index");
    });
    res.projections.emplace_back(i, proj);
  }

  // fibre containment: π_{I,i}⁻¹``{x} injects into ∏_{j>i} π_{j,i}⁻¹``{x}
  for (const auto& [i, proj] : res.projections) {
    std::vector<std::pair<HfSet, HfSet>> above; // (j, fibre of π_{j,i} over x)
    for (const auto& x : proj.cod().elems()) {
      above.clear();
      for (const auto& [j, j2, pij] : sys.bonding) {
        if (!(j2 == i)) continue;
        std::vector<HfSet> fibre;
        for (const auto& [arg, val] : pij.pairs())
          if (val == x) fibre.push_back(arg);
        above.emplace_back(j, HfSet::of(std::move(fibre)));
      }
      HfSet prod = indexed_product(above);
      std::set<HfSet> seen;
      bool inject = true;
      for (const auto& [graph, val] : proj.pairs()) {
        if (!(val == x)) continue;
        std::vector<HfSet> restricted;
        for (const auto& pr : graph.elems()) {
          auto [idx, value] = hf::kpair_decode(pr);
          if (find_bonding(sys, idx, i)) restricted.push_back(hf::kpair(idx, value));
        }
        HfSet restriction = HfSet::of(std::move(restricted));
        if (!prod.contains(restriction) || !seen.insert(restriction).second) inject = false;
      }
      res.fibre_checks.push_back({i, x, inject});
    }
  }
  return res;
}

std::vector<HfSet> neighborhood_sequence(const HfSet& graph, const HfSet& v, std::size_t nmax) {
  HfSet vertices = hf::union_big(graph);
  if (!vertices.contains(v))
    throw std::invalid_argument("neighborhood_sequence: not a vertex: " + v.to_string());
  std::vector<HfSet> out;
  HfSet current = hf::singleton(v);
  out.push_back(current);
  for (std::size_t n = 0; n < nmax; ++n) {
    std::vector<HfSet> grown(current.elems().begin(), current.elems().end());
    for (const auto& edge : graph.elems()) {
      bool touches = false;
      for (const auto& endpoint : edge.elems())
        if (current.contains(endpoint)) touches = true;
      if (touches)
        for (const auto& endpoint : edge.elems()) grown.push_back(endpoint);
    }
    current = HfSet::of(std::move(grown));
    out.push_back(current);
  }
  return out;
}

SmallCoeqResult coequalizer_small(const SetMor& f, const SetMor& g, const SmallnessPredicate& p) {
  if (!(f.dom() == g.dom() && f.cod() == g.cod()))
    throw std::invalid_argument("coequalizer_small: not a parallel pair");
  SmallCoeqResult res;
  res.inputs_small = is_small(f, p) && is_small(g, p);

  // the generated graph on B: one unordered edge per element of A
  std::vector<HfSet> edges;
  for (const auto& a : f.dom().elems())
    edges.push_back(HfSet::of({f.apply(a), g.apply(a)}));
  HfSet graph = HfSet::of(std::move(edges));

  const HfSet& b = f.cod();
  std::vector<HfSet> blocks;
  std::vector<std::pair<HfSet, HfSet>> proj_pairs;
  std::set<HfSet> assigned;
  for (const auto& start : b.elems()) {
    if (assigned.count(start)) continue;
    // grow the component; stabilizes within |B| steps
    HfSet component = hf::singleton(start);
    if (hf::union_big(graph).contains(start)) {
      auto seq = neighborhood_sequence(graph, start, b.card());
      component = seq.back();
    }
    for (const auto& member : component.elems()) {
      assigned.insert(member);
      proj_pairs.emplace_back(member, component.elems()[0]);
    }
    blocks.push_back(component);
  }
  std::vector<HfSet> reps;
  for (const auto& block : blocks) reps.push_back(block.elems()[0]);
  res.quotient = HfSet::of(reps);
  res.classes = HfSet::of(std::move(blocks));
  res.proj = SetMor(b, res.quotient, std::move(proj_pairs));
  res.quotient_map_small = is_small(res.proj, p);
  return res;
}

} // namespace stratcat::small
