#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stratcat/fincat.hpp"

namespace stratcat::icat {

using cat::SetMor;
using cat::SliceObj;
using hf::HfSet;

/// An internal category: objects C0, morphisms C1, source/target d0/d1,
/// identities i, and composition m on composable pairs ⟨g,f⟩ with
/// d0(g) = d1(f), where m(⟨g,f⟩) = g∘f.
struct InternalCategory {
  std::string name;
  HfSet c0, c1;
  SetMor d0, d1; // C1 → C0
  SetMor i;      // C0 → C1
  SetMor m;      // composable pairs → C1
};

/// {⟨g,f⟩ | d0(g) = d1(f)} — the domain of m.
HfSet composable_pairs(const HfSet& c1, const SetMor& d0, const SetMor& d1);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks every category axiom pointwise (shapes, source/target of
/// composites, unit laws, associativity); failures carry witnesses.
ValidationReport validate_internal_category(const InternalCategory& c);

/// An internal diagram (discrete opfibration / covariant presheaf):
/// carrier F0 over C0 and action e: F1 = F0 ×_{d0} C1 → F0.
struct InternalDiagram {
  HfSet f0;
  SetMor gamma0; // F0 → C0
  SetMor e;      // F1 → F0
};

/// F1 = {⟨p,f⟩ | γ0(p) = d0(f)}.
HfSet action_carrier(const InternalCategory& c, const HfSet& f0, const SetMor& gamma0);

/// Checks γ0∘e = d1∘π2, unit and associativity of the action.
ValidationReport validate_diagram(const InternalCategory& c, const InternalDiagram& f);

/// The forgetful functor: an internal diagram to its slice over C0.
SliceObj forget_to_slice(const InternalDiagram& f, const InternalCategory& c);

/// Its left-hand partner: γ: X → C0 to the discrete opfibration with
/// carrier X ×_{C0} C1, projection d1∘π2 and action 1×m.
InternalDiagram free_diagram(const InternalCategory& c, const SliceObj& gamma);

/// Diagram morphisms F → G: maps F0 → G0 over C0 commuting with the
/// actions, enumerated exhaustively.
std::vector<SetMor> nat_transformations(const InternalCategory& c, const InternalDiagram& f,
                                        const InternalDiagram& g);

/// The adjunction bijection, explicitly in both directions.
SetMor adjunct_to_slice(const InternalCategory& c, const SliceObj& gamma,
                        const InternalDiagram& f, const SetMor& diagram_mor);
SetMor adjunct_to_diagram(const InternalCategory& c, const SliceObj& gamma,
                          const InternalDiagram& f, const SetMor& slice_mor);

/// Fibres of ⟨d0,d1⟩: C1 → C0×C0; they partition C1.
struct HomFibration {
  struct Fibre {
    HfSet source, target, arrows;
  };
  std::vector<Fibre> fibres;
};
HomFibration hom_fibration(const InternalCategory& c);

/// The representable diagram at u: carrier {f | d0(f) = u}, projection d1,
/// action by composition. u must be an element of C0.
InternalDiagram representable(const InternalCategory& c, const HfSet& u);

struct YonedaResult {
  bool pass = false;
  HfSet fu;               // the fibre γ0⁻¹(u)
  HfSet pullback_carrier; // the literal pullback it was read from
  std::size_t nat_count = 0;
  // η ↦ {η(i(u))}, the explicit bijection onto T(F(U))
  std::vector<std::pair<SetMor, HfSet>> bijection;
  std::vector<std::string> failures;
};

/// Enumerates Nat(R(u), F), computes F(U) as a pullback fibre and
/// exhibits the bijection Nat(R(u),F) ≅ T(F(U)); PASS iff the mapping is
/// total, injective and surjective (with the inverse reconstructed).
YonedaResult yoneda_check(const InternalCategory& c, const HfSet& u, const InternalDiagram& f);

/// The membership family over a finite universe: Γ: ∈ ⊆ TV×V → V, the set
/// of tagged functions between universe members with ⟨dom,cod⟩, and the
/// generic morphism ⟨f,{x}⟩ ↦ ⟨f,{f(x)}⟩.
struct GenericFamily {
  HfSet v_set;
  SliceObj gamma; // ∈ → V, right projection
  HfSet funct;    // elements ⟨graph,⟨dom,cod⟩⟩
  SetMor dom_cod; // Funct → V×V
  SliceObj dom_star, cod_star;
  SetMor ev_gen; // dom*Γ → cod*Γ
  struct FullnessEntry {
    HfSet a, b;
    std::size_t fibre_size = 0, hom_size = 0;
    bool match = false;
  };
  std::vector<FullnessEntry> fullness;
  bool full() const;
};
/// universe_rank must be ≤ 3 (enumeration bound).
GenericFamily generic_family(unsigned universe_rank);

/// Hand-built internal categories with |C0| ≤ 2 and |C1| ≤ 4 (discrete
/// categories, the walking arrow and isomorphism, a parallel pair, and a
/// spread of small monoids). All validate.
std::vector<InternalCategory> standard_catalog();

/// Every internal diagram over c whose fibres have at most max_fibre
/// elements, enumerated by choosing an action for each non-identity
/// arrow and filtering by the diagram laws.
std::vector<InternalDiagram> enumerate_diagrams(const InternalCategory& c,
                                                std::size_t max_fibre);

// JSON table format (see README): category files carry C0, C1, d0, d1, i
// as [[arg,value],...] and m as [[g,f,value],...]; diagram files carry F0,
// gamma0 and e as [[p,f,value],...], all in hfset brace notation.
InternalCategory category_from_json(const std::string& text);
std::string category_to_json(const InternalCategory& c);
InternalDiagram diagram_from_json(const InternalCategory& c, const std::string& text);
std::string diagram_to_json(const InternalDiagram& f);

} // namespace stratcat::icat
