#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stratcat/fincat.hpp"
#include "stratcat/sweep.hpp"

namespace stratcat::small {

using cat::SetMor;
using hf::HfSet;

/// Pluggable smallness notions for maps, decided fibrewise:
///   ALL            — every map counts as small
///   FIBRE_BOUND(n) — every fibre has at most n elements
///   STCAN_CEILING(k) — rank(iota_graph(fibre).graph) ≤ k for every fibre,
///                      the finite stand-in for "the graph of ι↾x is a set"
struct SmallnessPredicate {
  enum class Kind { All, FibreBound, StcanCeiling };
  Kind kind = Kind::All;
  std::size_t bound = 0;

  static SmallnessPredicate all() { return {Kind::All, 0}; }
  static SmallnessPredicate fibre_bound(std::size_t n) { return {Kind::FibreBound, n}; }
  static SmallnessPredicate stcan_ceiling(std::size_t k) { return {Kind::StcanCeiling, k}; }
  /// "all" | "fibre:N" | "stcan:K"
  static SmallnessPredicate from_name(std::string_view name);
  std::string to_string() const;
};

/// The indexed family b ↦ f⁻¹``{b} over the codomain; fibres partition
/// the domain.
std::vector<std::pair<HfSet, HfSet>> fibres(const SetMor& f);

bool set_is_small(const HfSet& x, const SmallnessPredicate& p);
bool is_small(const SetMor& f, const SmallnessPredicate& p);

/// One audited axiom with a replayable witness on failure.
struct AxiomEntry {
  std::string axiom; // "(i)".."(v)"
  std::string title;
  std::string status; // PASS | FAIL
  std::string witness;
  std::vector<SetMor> witness_maps; // enough to replay the violation
};

struct AxiomReport {
  SmallnessPredicate predicate;
  unsigned sample_rank = 0;
  bool sampled = false;
  std::vector<AxiomEntry> entries;
  bool all_pass() const;
};

/// Searches maps over carriers drawn from the rank-bounded universe
/// (all subsets of universe(sample_rank); exhaustive at rank ≤ 2, seeded
/// sampling above) for violations of the five small-map axioms:
/// (i) identities and composites of small maps are small, (ii) pullbacks
/// of small maps are small, (iii) diagonals are small, (iv) if f∘e is
/// small with e a surjection then f is small, (v) coproducts f⊔g of small
/// maps are small.
AxiomReport audit_small_maps(const SmallnessPredicate& p, unsigned sample_rank,
                             sweep::Exec exec, std::uint64_t seed = 1);

/// Replays a composition-closure witness (axiom (i)): true when the two
/// maps are small but their composite is not.
bool replay_composition_witness(const SetMor& g, const SetMor& f, const SmallnessPredicate& p);

struct DescentReport {
  bool pass = true;
  std::size_t squares_checked = 0;
  std::vector<std::string> witnesses;
};

/// For every pullback square with a surjective base change e and small
/// pulled-back map, checks that the original map is small.
DescentReport descent_check(const SmallnessPredicate& p, unsigned sample_rank,
                            sweep::Exec exec, std::uint64_t seed = 1);

/// Single-square form. The square is
///     D --top--> B
///     |f         |g
///     C --e----> A
/// and is rejected (nullopt) unless it is a genuine pullback square with
/// e surjective; otherwise returns whether "f small ⟹ g small" holds.
std::optional<bool> descent_square(const SetMor& top, const SetMor& f, const SetMor& g,
                                   const SetMor& e, const SmallnessPredicate& p);

struct ScuEntry {
  HfSet family;
  bool members_small = false;
  bool family_small = false;
  bool union_small = false;
};

struct ScuReport {
  std::size_t considered = 0; // families where X and all members are small
  std::vector<ScuEntry> entries;
  bool all_hold() const; // union small whenever family and members are
};

/// Sweeps every family X of rank ≤ sample_rank and reports whether ⋃X
/// stays under the ceiling whenever X and all its members do. Reported,
/// not asserted.
ScuReport scu_check(std::size_t k, unsigned sample_rank);

/// All choice functions of an indexed family, as graphs ⟨i,aᵢ⟩. The empty
/// index yields exactly the empty choice.
HfSet indexed_product(const std::vector<std::pair<HfSet, HfSet>>& family);

/// Verifies the embedding of each choice graph into P(⋃Aᵢ × I): flips
/// the pairs and checks membership elementwise.
bool product_embeds(const std::vector<std::pair<HfSet, HfSet>>& family, const HfSet& prod);

/// A finite directed poset with surjective, commuting bonding maps
/// π_{i,j}: A_i ↠ A_j for i > j. The order is induced by the bonding keys.
struct DirectedSystem {
  std::vector<std::pair<HfSet, HfSet>> carriers;          // (index, A_i)
  std::vector<std::tuple<HfSet, HfSet, SetMor>> bonding;  // (i, j, π_{i,j}), i > j
};

/// Shape/surjectivity/commutation/directedness validation; nullopt = ok.
std::optional<std::string> validate_system(const DirectedSystem& sys);

struct InverseLimitResult {
  HfSet limit; // compatible choice graphs over the whole index set
  std::vector<std::pair<HfSet, SetMor>> projections; // (i, evaluation at i)
  struct FibreCheck {
    HfSet index, point;
    bool injects = false; // fibre ↪ product of bonding fibres
  };
  std::vector<FibreCheck> fibre_checks;
  bool fibres_inject() const;
};

/// Builds the inverse limit {f | π_{i,j}(f(i)) = f(j)} with its
/// projections, and verifies that each projection fibre injects into the
/// product of the bonding-map fibres. Rejects invalid systems.
InverseLimitResult inverse_limit(const DirectedSystem& sys);

/// N_0 = {v}, N_{n+1} = N_n ∪ neighbours(N_n) for a graph given as a set
/// of unordered pairs (singletons mark loops/isolated vertices). v must
/// be a vertex.
std::vector<HfSet> neighborhood_sequence(const HfSet& graph, const HfSet& v, std::size_t nmax);

struct SmallCoeqResult {
  bool inputs_small = false;
  HfSet quotient;
  SetMor proj;
  HfSet classes;
  bool quotient_map_small = false;
};

/// Coequalizes a small parallel pair by growing neighborhoods in the
/// generated graph on the codomain; classes are connected components and
/// the representative is the least member. Reports whether the class map
/// stays small.
SmallCoeqResult coequalizer_small(const SetMor& f, const SetMor& g, const SmallnessPredicate& p);

} // namespace stratcat::small
