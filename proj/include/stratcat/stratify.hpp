#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stratcat/formula.hpp"

namespace stratcat::strat {

/// Which ordered-pair discipline the level rules assume. Quine pairs sit
/// at the same level as their components; Wiener-Kuratowski pairs sit
/// two levels above. This only affects the generated constraints; runtime
/// set values elsewhere in the project are always Kuratowski-encoded.
enum class PairingConvention { Quine, WK };

PairingConvention convention_from_name(std::string_view name); // "quine" | "wk"
std::string to_string(PairingConvention c);

/// One level variable: either a (possibly α-renamed) formula variable or
/// a compound term occurrence.
struct LevelNode {
  int id = 0;
  std::string origin;    // display name for variables, term sketch otherwise
  bool is_var = false;
  logic::Span span;
};

/// level(to) − level(from) = offset.
struct Constraint {
  int from = 0;
  int to = 0;
  int offset = 0;
  std::string origin; // the atom or term former that produced it
  logic::Span span;
};

struct ConstraintGraph {
  std::vector<LevelNode> nodes;
  std::vector<Constraint> edges;
};

/// A satisfying level assignment; per connected component the minimum
/// level is 0.
struct Stratification {
  std::vector<int> levels; // indexed by node id
};

/// A closed constraint cycle whose offsets sum to a nonzero weight;
/// certifies that no stratification exists.
struct FailureWitness {
  std::vector<Constraint> cycle; // oriented along traversal
  int weight = 0;
};

using SolveResult = std::variant<Stratification, FailureWitness>;

/// Walks the formula and emits the level constraints. Bound variables are
/// α-renamed first (fresh node per binder); free variables share one node
/// per name; every compound term occurrence gets its own node.
ConstraintGraph collect_constraints(const logic::FormulaPtr& f, PairingConvention conv);

/// Assigns potentials per connected component by breadth-first traversal;
/// a disagreeing edge yields a shortest witness cycle (by edge count).
SolveResult solve(const ConstraintGraph& g);

bool is_stratified(const logic::FormulaPtr& f, PairingConvention conv);

/// Checks whether every constraint holds exactly under the assignment.
bool satisfies(const ConstraintGraph& g, const std::vector<int>& levels);

/// Variable name → level, for reporting. Shadowed bound variables are
/// disambiguated as name#k.
std::map<std::string, int> variable_levels(const ConstraintGraph& g, const Stratification& s);

struct ComprehensionResult {
  bool accepted = false;
  bool degenerate = false;      // z has no free occurrence in φ
  std::string set_variable;     // the fresh y
  logic::FormulaPtr instance;   // ∀x⃗ ∃y ∀z (z ∈ y ↔ φ)
  ConstraintGraph graph;
  std::optional<Stratification> stratification;
  std::optional<FailureWitness> witness;
};

/// Decides the comprehension instance {z | φ}: builds
/// ∀x⃗ ∃y ∀z (z ∈ y ↔ φ) with y fresh and stratifies it.
ComprehensionResult check_comprehension(const logic::FormulaPtr& phi, const std::string& z,
                                        PairingConvention conv);

/// Human-readable account of a failure cycle: one line per constraint
/// with source spans, then the weight.
std::string explain(const FailureWitness& w);

} // namespace stratcat::strat
