#include "stratcat/hfset.hpp"

#include <algorithm>
#include <cctype>

namespace stratcat::hf {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

} // namespace

const HfSet& HfSet::empty() {
  static const HfSet e;
  return e;
}

const std::vector<HfSet>& HfSet::elems() const {
  static const std::vector<HfSet> none;
  return node_ ? node_->elems : none;
}

HfSet HfSet::of(std::vector<HfSet> elems) {
  if (elems.empty()) return HfSet{};
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  auto node = std::make_shared<Node>();
  unsigned r = 0;
  std::size_t h = 0x6b43a9b5eull;
  for (const auto& e : elems) {
    r = std::max(r, e.rank() + 1);
    h = mix(h, e.hash());
  }
  node->elems = std::move(elems);
  node->rank = r;
  node->hash = mix(h, node->elems.size());
  HfSet out;
  out.node_ = std::move(node);
  return out;
}

bool operator==(const HfSet& a, const HfSet& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_empty() || b.is_empty()) return false;
  if (a.hash() != b.hash()) return false;
  return a.elems() == b.elems();
}

std::strong_ordering operator<=>(const HfSet& a, const HfSet& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.card() <=> b.card(); c != 0) return c;
  const auto& ea = a.elems();
  const auto& eb = b.elems();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (auto c = ea[i] <=> eb[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool HfSet::contains(const HfSet& x) const {
  const auto& es = elems();
  return std::binary_search(es.begin(), es.end(), x);
}

std::string HfSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& e : elems()) {
    if (!first) out += ",";
    out += e.to_string();
    first = false;
  }
  out += "}";
  return out;
}

namespace {

HfSet parse_at(std::string_view s, std::size_t& i) {
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i >= s.size() || s[i] != '{')
    throw std::invalid_argument("hfset: expected '{' at offset " + std::to_string(i));
  ++i;
  std::vector<HfSet> elems;
  skip_ws();
  if (i < s.size() && s[i] == '}') {
    ++i;
    return HfSet::of(std::move(elems));
  }
  for (;;) {
    elems.push_back(parse_at(s, i));
    skip_ws();
    if (i >= s.size())
      throw std::invalid_argument("hfset: unterminated set");
    if (s[i] == ',') {
      ++i;
      continue;
    }
    if (s[i] == '}') {
      ++i;
      return HfSet::of(std::move(elems));
    }
    throw std::invalid_argument("hfset: expected ',' or '}' at offset " + std::to_string(i));
  }
}

} // namespace

HfSet HfSet::parse(std::string_view text) {
  std::size_t i = 0;
  HfSet out = parse_at(text, i);
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i != text.size())
    throw std::invalid_argument("hfset: trailing input at offset " + std::to_string(i));
  return out;
}

bool mem(const HfSet& a, const HfSet& b) { return b.contains(a); }

HfSet singleton(const HfSet& x) { return HfSet::of({x}); }

HfSet set_union(const HfSet& a, const HfSet& b) {
  std::vector<HfSet> out;
  out.reserve(a.card() + b.card());
  std::set_union(a.elems().begin(), a.elems().end(), b.elems().begin(), b.elems().end(),
                 std::back_inserter(out));
  return HfSet::of(std::move(out));
}

HfSet set_intersection(const HfSet& a, const HfSet& b) {
  std::vector<HfSet> out;
  std::set_intersection(a.elems().begin(), a.elems().end(), b.elems().begin(), b.elems().end(),
                        std::back_inserter(out));
  return HfSet::of(std::move(out));
}

HfSet set_difference(const HfSet& a, const HfSet& b) {
  std::vector<HfSet> out;
  std::set_difference(a.elems().begin(), a.elems().end(), b.elems().begin(), b.elems().end(),
                      std::back_inserter(out));
  return HfSet::of(std::move(out));
}

bool subset_of(const HfSet& a, const HfSet& b) {
  return std::includes(b.elems().begin(), b.elems().end(), a.elems().begin(), a.elems().end());
}

HfSet union_big(const HfSet& x) {
  std::vector<HfSet> out;
  for (const auto& e : x.elems())
    out.insert(out.end(), e.elems().begin(), e.elems().end());
  return HfSet::of(std::move(out));
}

HfSet powerset(const HfSet& x) {
  return HfSet::of(subsets(x));
}

unsigned rank(const HfSet& x) { return x.rank(); }

HfSet singleton_image(const HfSet& x) {
  std::vector<HfSet> out;
  out.reserve(x.card());
  for (const auto& e : x.elems()) out.push_back(singleton(e));
  return HfSet::of(std::move(out));
}

HfSet kpair(const HfSet& a, const HfSet& b) {
  return HfSet::of({singleton(a), HfSet::of({a, b})});
}

bool is_kpair(const HfSet& p) {
  if (p.card() == 1) return p.elems()[0].card() == 1;
  if (p.card() != 2) return false;
  const HfSet& s = p.elems()[0]; // smaller card first
  const HfSet& t = p.elems()[1];
  return s.card() == 1 && t.card() == 2 && subset_of(s, t);
}

std::pair<HfSet, HfSet> kpair_decode(const HfSet& p) {
  if (p.card() == 1 && p.elems()[0].card() == 1) {
    const HfSet& a = p.elems()[0].elems()[0];
    return {a, a};
  }
  if (p.card() == 2) {
    const HfSet& s = p.elems()[0];
    const HfSet& t = p.elems()[1];
    if (s.card() == 1 && t.card() == 2 && subset_of(s, t)) {
      const HfSet& a = s.elems()[0];
      const HfSet& b = t.elems()[0] == a ? t.elems()[1] : t.elems()[0];
      return {a, b};
    }
  }
  throw std::invalid_argument("kpair_decode: not a Kuratowski pair: " + p.to_string());
}

HfSet product(const HfSet& a, const HfSet& b) {
  std::vector<HfSet> out;
  out.reserve(a.card() * b.card());
  for (const auto& x : a.elems())
    for (const auto& y : b.elems()) out.push_back(kpair(x, y));
  return HfSet::of(std::move(out));
}

HfSet disjoint_union(const HfSet& a, const HfSet& b) {
  const HfSet left_tag;                       // ∅
  const HfSet right_tag = singleton(HfSet{}); // {∅}
  std::vector<HfSet> out;
  out.reserve(a.card() + b.card());
  for (const auto& x : a.elems()) out.push_back(kpair(x, left_tag));
  for (const auto& y : b.elems()) out.push_back(kpair(y, right_tag));
  return HfSet::of(std::move(out));
}

std::optional<std::string> func_graph_error(const FuncGraph& f) {
  std::vector<HfSet> seen_args;
  for (const auto& p : f.graph.elems()) {
    if (!is_kpair(p)) return "graph element is not a pair: " + p.to_string();
    auto [x, y] = kpair_decode(p);
    if (!f.domain.contains(x)) return "argument outside domain: " + x.to_string();
    if (!f.codomain.contains(y)) return "value outside codomain: " + y.to_string();
    seen_args.push_back(x);
  }
  std::sort(seen_args.begin(), seen_args.end());
  if (std::adjacent_find(seen_args.begin(), seen_args.end()) != seen_args.end())
    return std::string("graph is not single-valued");
  if (seen_args.size() != f.domain.card()) return std::string("graph is not total on domain");
  return std::nullopt;
}

FuncGraph iota_graph(const HfSet& x) {
  std::vector<HfSet> pairs;
  pairs.reserve(x.card());
  for (const auto& a : x.elems()) pairs.push_back(kpair(a, singleton(a)));
  return FuncGraph{x, singleton_image(x), HfSet::of(std::move(pairs))};
}

std::optional<std::uint64_t> ackermann_code(const HfSet& x) {
  std::uint64_t acc = 0;
  for (const auto& e : x.elems()) {
    auto c = ackermann_code(e);
    if (!c || *c >= 64) return std::nullopt;
    std::uint64_t bit = std::uint64_t{1} << *c;
    acc |= bit; // elements are distinct, so no carry
  }
  return acc;
}

HfSet from_ackermann(std::uint64_t n) {
  std::vector<HfSet> elems;
  for (std::uint64_t k = 0; n != 0; ++k, n >>= 1)
    if (n & 1) elems.push_back(from_ackermann(k));
  return HfSet::of(std::move(elems));
}

std::vector<HfSet> universe(unsigned max_rank) {
  HfSet v = singleton(HfSet{}); // V_1 = {∅}
  for (unsigned r = 0; r < max_rank; ++r) v = powerset(v);
  return v.elems(); // members of V_{max_rank+1}, i.e. all sets of rank ≤ max_rank
}

std::vector<HfSet> subsets(const HfSet& x) {
  const auto& es = x.elems();
  if (es.size() > 20) throw std::invalid_argument("subsets: carrier too large");
  std::vector<HfSet> out;
  out.reserve(std::size_t{1} << es.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << es.size()); ++mask) {
    std::vector<HfSet> sub;
    for (std::size_t i = 0; i < es.size(); ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(es[i]);
    out.push_back(HfSet::of(std::move(sub)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace stratcat::hf
