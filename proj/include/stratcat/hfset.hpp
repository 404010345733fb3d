#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stratcat::hf {

/// A hereditarily finite set in canonical form: elements are stored
/// sorted by the canonical order (cardinality first, then lexicographic
/// on the ordered element lists) and duplicate-free, so structural
/// equality is extensional equality.
class HfSet {
public:
  HfSet() = default; // the empty set

  /// Normalizes: sorts, removes duplicates. Idempotent on canonical input.
  static HfSet of(std::vector<HfSet> elems);
  static const HfSet& empty();

  const std::vector<HfSet>& elems() const;
  std::size_t card() const { return elems().size(); }
  bool is_empty() const { return node_ == nullptr; }
  bool contains(const HfSet& x) const;
  unsigned rank() const { return node_ ? node_->rank : 0; }
  std::size_t hash() const { return node_ ? node_->hash : 0x9e3779b97f4a7c15ULL; }

  friend bool operator==(const HfSet& a, const HfSet& b);
  friend std::strong_ordering operator<=>(const HfSet& a, const HfSet& b);

  /// Brace notation, e.g. "{{},{{}}}".
  std::string to_string() const;
  /// Parses brace notation; throws std::invalid_argument on bad input.
  static HfSet parse(std::string_view text);

private:
  struct Node {
    std::vector<HfSet> elems;
    unsigned rank = 0;
    std::size_t hash = 0;
  };
  std::shared_ptr<const Node> node_; // nullptr encodes the empty set
};

struct HfSetHash {
  std::size_t operator()(const HfSet& x) const { return x.hash(); }
};

// Elementary operations.
bool mem(const HfSet& a, const HfSet& b); // a ∈ b
HfSet singleton(const HfSet& x);
HfSet set_union(const HfSet& a, const HfSet& b);
HfSet set_intersection(const HfSet& a, const HfSet& b);
HfSet set_difference(const HfSet& a, const HfSet& b);
bool subset_of(const HfSet& a, const HfSet& b);
HfSet union_big(const HfSet& x);   // ⋃x
HfSet powerset(const HfSet& x);
unsigned rank(const HfSet& x);

/// {{y} | y ∈ x}; same cardinality as x, one rank higher when nonempty.
HfSet singleton_image(const HfSet& x);

/// Kuratowski pair {{a},{a,b}}.
HfSet kpair(const HfSet& a, const HfSet& b);
/// Inverse of kpair; throws std::invalid_argument if p is not a pair.
std::pair<HfSet, HfSet> kpair_decode(const HfSet& p);
bool is_kpair(const HfSet& p);

/// Cartesian product as a set of Kuratowski pairs.
HfSet product(const HfSet& a, const HfSet& b);
/// Tagged union: left elements paired with ∅, right with {∅}.
HfSet disjoint_union(const HfSet& a, const HfSet& b);

/// Function-as-graph data. The graph is a set of Kuratowski pairs
/// ⟨argument, value⟩, total on `domain` and single-valued, with all
/// values in `codomain`.
struct FuncGraph {
  HfSet domain;
  HfSet codomain;
  HfSet graph;
};

/// Checks the FuncGraph invariants (totality, single-valuedness,
/// containment). Returns a reason on failure.
std::optional<std::string> func_graph_error(const FuncGraph& f);

/// The graph of ι ↾ x: {⟨a,{a}⟩ | a ∈ x}, codomain ι``x.
FuncGraph iota_graph(const HfSet& x);

/// Ackermann code: encode(x) = Σ_{y∈x} 2^encode(y). Returns nullopt if
/// the code does not fit in 64 bits.
std::optional<std::uint64_t> ackermann_code(const HfSet& x);
HfSet from_ackermann(std::uint64_t n);

/// All sets of rank ≤ r, in canonical order. |universe(0)| = 1,
/// |universe(1)| = 2, |universe(2)| = 4, |universe(3)| = 16.
std::vector<HfSet> universe(unsigned max_rank);

/// All subsets of x, in canonical order.
std::vector<HfSet> subsets(const HfSet& x);

} // namespace stratcat::hf
