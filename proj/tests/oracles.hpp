// Independent reference implementations used only by tests. These stay
// deliberately naive: enumeration and closure computations that the
// production code must agree with.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "stratcat/fincat.hpp"
#include "stratcat/stratify.hpp"

namespace oracles {

/// Exhaustive search for a satisfying level assignment with all levels in
/// 0..max_level. Backtracking over nodes in index order; a constraint is
/// checked as soon as both endpoints are assigned.
inline std::optional<std::vector<int>>
brute_force_levels(const stratcat::strat::ConstraintGraph& g, int max_level) {
  const std::size_t n = g.nodes.size();
  std::vector<int> levels(n, -1);
  // edges indexed by the later endpoint so prefixes prune early
  std::vector<std::vector<int>> by_node(n);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    by_node[std::max(e.from, e.to)].push_back(static_cast<int>(i));
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);

  auto consistent = [&](int node) {
    for (int ei : by_node[node]) {
      const auto& e = g.edges[ei];
      if (levels[e.to] - levels[e.from] != e.offset) return false;
    }
    return true;
  };

  std::size_t at = 0;
  while (true) {
    if (at == n) return levels;
    int& v = levels[order[at]];
    ++v;
    while (v <= max_level && !consistent(order[at])) ++v;
    if (v > max_level) {
      v = -1;
      if (at == 0) return std::nullopt;
      --at;
    } else {
      ++at;
    }
  }
}

inline bool brute_force_stratifiable(const stratcat::logic::FormulaPtr& f,
                                     stratcat::strat::PairingConvention conv, int max_level) {
  return brute_force_levels(stratcat::strat::collect_constraints(f, conv), max_level).has_value();
}

/// The least equivalence relation on cod(f) extending {(f(a), g(a))},
/// computed by boolean transitive closure, returned as the partition of
/// cod(f) into equivalence classes.
inline stratcat::hf::HfSet closure_partition(const stratcat::cat::SetMor& f,
                                             const stratcat::cat::SetMor& g) {
  using stratcat::hf::HfSet;
  const auto& carrier = f.cod().elems();
  const std::size_t n = carrier.size();
  auto idx = [&](const HfSet& x) {
    return static_cast<std::size_t>(
        std::lower_bound(carrier.begin(), carrier.end(), x) - carrier.begin());
  };
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (const auto& a : f.dom().elems()) {
    std::size_t i = idx(f.apply(a)), j = idx(g.apply(a));
    rel[i][j] = rel[j][i] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  std::vector<HfSet> blocks;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::vector<HfSet> block;
    for (std::size_t j = 0; j < n; ++j)
      if (rel[i][j]) {
        block.push_back(carrier[j]);
        used[j] = true;
      }
    blocks.push_back(HfSet::of(std::move(block)));
  }
  return HfSet::of(std::move(blocks));
}

/// All partitions of the elements of x (restricted-growth enumeration).
inline std::vector<stratcat::hf::HfSet> all_partitions(const stratcat::hf::HfSet& x) {
  using stratcat::hf::HfSet;
  const auto& es = x.elems();
  std::vector<HfSet> out;
  if (es.empty()) return {HfSet{}};
  std::vector<std::size_t> label(es.size(), 0);
  auto next_rgs = [&]() -> bool {
    for (std::size_t i = es.size(); i-- > 1;) {
      std::size_t cap = 0;
      for (std::size_t j = 0; j < i; ++j) cap = std::max(cap, label[j]);
      if (label[i] <= cap) {
        ++label[i];
        for (std::size_t j = i + 1; j < es.size(); ++j) label[j] = 0;
        return true;
      }
    }
    return false;
  };
  do {
    std::size_t blocks = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<HfSet>> grouped(blocks);
    for (std::size_t i = 0; i < es.size(); ++i) grouped[label[i]].push_back(es[i]);
    std::vector<HfSet> part;
    for (auto& g : grouped) part.push_back(HfSet::of(std::move(g)));
    out.push_back(HfSet::of(std::move(part)));
  } while (next_rgs());
  return out;
}

} // namespace oracles
