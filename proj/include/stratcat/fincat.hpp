#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stratcat/hfset.hpp"

namespace stratcat::cat {

using hf::FuncGraph;
using hf::HfSet;

/// A morphism of the finite category of sets: a total single-valued
/// function graph with explicit domain and codomain. Immutable after
/// construction; construction validates.
class SetMor {
public:
  SetMor() = default; // the empty morphism ∅ → ∅
  SetMor(HfSet dom, HfSet cod, std::vector<std::pair<HfSet, HfSet>> pairs);
  static SetMor identity(const HfSet& a);
  static SetMor constant(const HfSet& dom, const HfSet& cod, const HfSet& value);
  static SetMor from_graph(const FuncGraph& fg);
  static SetMor from_fn(const HfSet& dom, const HfSet& cod,
                        const std::function<HfSet(const HfSet&)>& fn);

  const HfSet& dom() const { return dom_; }
  const HfSet& cod() const { return cod_; }
  const std::vector<std::pair<HfSet, HfSet>>& pairs() const { return pairs_; }
  const HfSet& apply(const HfSet& x) const;
  HfSet graph() const; // set of Kuratowski pairs
  FuncGraph func_graph() const;
  HfSet image() const;
  bool is_mono() const;
  bool is_epi() const;
  bool is_iso() const { return is_mono() && is_epi(); }

  friend bool operator==(const SetMor& a, const SetMor& b);
  friend std::strong_ordering operator<=>(const SetMor& a, const SetMor& b);
  std::string to_string() const;

private:
  HfSet dom_, cod_;
  std::vector<std::pair<HfSet, HfSet>> pairs_; // sorted by argument
};

/// g ∘ f; throws std::invalid_argument unless cod(f) = dom(g).
SetMor compose(const SetMor& g, const SetMor& f);

// --- enumeration -----------------------------------------------------------

/// All maps A→B in a fixed order (odometer over canonical element order).
std::vector<SetMor> all_maps(const HfSet& a, const HfSet& b);
std::vector<SetMor> all_monos(const HfSet& a, const HfSet& b);
std::vector<SetMor> all_surjections(const HfSet& a, const HfSet& b);
std::size_t hom_size(const HfSet& a, const HfSet& b); // |B|^|A|

/// universe(max_rank) filtered to sets with at most max_card elements.
std::vector<HfSet> objects_up_to(std::size_t max_card, unsigned max_rank = 3);

// --- finite limits ---------------------------------------------------------

HfSet terminal(); // {∅}
HfSet initial();  // ∅
SetMor bang(const HfSet& a);         // unique A → 1
SetMor from_initial(const HfSet& a); // unique ∅ → A

struct ProductData {
  HfSet obj;
  SetMor p1, p2;
};
ProductData product_of(const HfSet& a, const HfSet& b);
/// The mediating ⟨f,g⟩: X → A×B for f: X→A, g: X→B.
SetMor tuple_map(const SetMor& f, const SetMor& g);

struct EqualizerData {
  HfSet obj;
  SetMor include;
};
EqualizerData equalizer(const SetMor& f, const SetMor& g); // parallel pair
/// Factors h: X→A with f∘h = g∘h through the equalizer.
SetMor equalizer_mediator(const EqualizerData& eq, const SetMor& h);

struct PullbackData {
  HfSet obj; // pairs ⟨a,b⟩ with f(a) = g(b)
  SetMor p1, p2;
};
PullbackData pullback(const SetMor& f, const SetMor& g); // cospan f: A→C ← B :g
SetMor pullback_mediator(const PullbackData& pb, const SetMor& x1, const SetMor& x2);
/// Does (p,q) complete the cospan (f,g) to a pullback square?
bool is_pullback_square(const SetMor& p, const SetMor& q, const SetMor& f, const SetMor& g);

// --- finite colimits -------------------------------------------------------

struct CoproductData {
  HfSet obj; // tagged union
  SetMor i1, i2;
};
CoproductData coproduct_of(const HfSet& a, const HfSet& b);
/// The cotuple [f,g]: A⊔B → X.
SetMor cotuple_map(const SetMor& f, const SetMor& g);
/// The coproduct of maps f⊔g: A⊔B → C⊔D.
SetMor coproduct_map(const SetMor& f, const SetMor& g);

struct CoequalizerData {
  HfSet obj;   // one canonical representative per class (least in HF order)
  SetMor proj; // B → obj
};
/// Quotient of B by the least equivalence relation identifying f(a) ~ g(a).
CoequalizerData coequalizer(const SetMor& f, const SetMor& g);
/// Factors z: B→Z with z∘f = z∘g through the coequalizer.
SetMor coeq_mediator(const CoequalizerData& ce, const SetMor& z);
/// The quotient as a partition of B (set of equivalence classes).
HfSet coequalizer_classes(const SetMor& f, const SetMor& g);

struct PtjData {
  HfSet pair_set; // A = {⟨x,y⟩ | x,y share a block}
  SetMor p1, p2;  // the projections A → ⋃partition
};
/// Builds the parallel pair whose coequalizer classes recover the
/// partition; rejects overlapping or empty blocks.
PtjData ptj_from_partition(const HfSet& partition);

// --- subobject classifier --------------------------------------------------

HfSet omega();       // 2 = {⊥,⊤} with ⊥ = ∅, ⊤ = {∅}
HfSet truth_value(); // ⊤
SetMor true_arrow(); // 1 → Ω
/// Characteristic map of a mono m: D ↣ A; rejects non-monos.
SetMor char_map(const SetMor& m);

// --- the T functor ---------------------------------------------------------

HfSet T_ob(const HfSet& a); // ι``a
SetMor T_mor(const SetMor& f);

// --- exponentials and the two relative adjunctions -------------------------

/// A⇒B: the set of all function graphs A→B.
HfSet exp_set(const HfSet& a, const HfSet& b);
/// Looks up a graph element of A⇒B at an argument.
HfSet apply_graph(const HfSet& graph, const HfSet& x);
SetMor mor_of_graph(const HfSet& graph, const HfSet& a, const HfSet& b);

/// ev′: TA×(A⇒B) → TB, ⟨{x},f⟩ ↦ {f(x)}.
SetMor eval_prime(const HfSet& a, const HfSet& b);

/// Post/pre-composition actions on function spaces.
SetMor exp_post(const SetMor& g, const HfSet& a); // (A⇒g): A⇒B → A⇒B′
SetMor exp_pre(const SetMor& f, const HfSet& b);  // (f⇒B): A⇒B → A′⇒B
SetMor exp_map(const SetMor& f, const SetMor& g); // h ↦ g∘h∘f

/// θ: hom(TA×C,TB) → hom(C,A⇒B), f ↦ λc.λa.(⋃ f({a},c)), and its inverse
/// m ↦ λ⟨{a},c⟩.{m(c)(a)}. Shapes are validated.
SetMor theta(const SetMor& f, const HfSet& a, const HfSet& b, const HfSet& c);
SetMor theta_inv(const SetMor& m, const HfSet& a, const HfSet& b, const HfSet& c);

/// k_C: TC → A⇒(A×C), {c} ↦ λa.⟨a,c⟩ — the unit of (A×−) ⊣_T (A⇒−).
SetMor unit_k(const HfSet& a, const HfSet& c);

struct EIso {
  SetMor to;   // T(A⇒B) → TA⇒TB, {h} ↦ Th
  SetMor from; // inverse
};
EIso e_iso(const HfSet& a, const HfSet& b);

// --- subobjects, pseudo-powerobjects, dual images --------------------------

struct SubobjectRep {
  HfSet subset;
  HfSet ambient;
};

struct PowerObjData {
  HfSet pa;            // P(A)
  SubobjectRep memrel; // ∈_A = {⟨{a},S⟩ | a ∈ S} ⊆ TA×PA
};
PowerObjData power_obj(const HfSet& a);
/// r̂: B → PA with r̂(b) = {a | ⟨{a},b⟩ ∈ R}; R.ambient must be TA×B.
SetMor p_transpose(const SubobjectRep& r, const HfSet& a, const HfSet& b);

SubobjectRep image_sub(const SetMor& f, const SubobjectRep& s);    // ∃_f
SubobjectRep preimage_sub(const SetMor& f, const SubobjectRep& s); // f*
SubobjectRep dual_image(const SetMor& f, const SubobjectRep& s);   // ∀_f

/// Epi-mono factorization through the image.
struct Factorization {
  HfSet mid;
  SetMor epi;  // A ↠ mid
  SetMor mono; // mid ↣ B
};
Factorization epi_mono_factor(const SetMor& f);

// --- slices and the relative dependent product -----------------------------

struct SliceObj {
  HfSet total;
  HfSet base;
  SetMor proj; // total → base
};
SliceObj slice_identity(const HfSet& base); // (base, id)
/// All morphisms (X,p) → (Y,q) over the common base.
std::vector<SetMor> slice_homs(const SliceObj& x, const SliceObj& y);

/// f*(C,ρ): the pullback slice over A for f: A→B and (C,ρ) over B.
/// Carrier elements are pairs ⟨c,a⟩.
SliceObj pullback_slice(const SetMor& f, const SliceObj& c_rho);

/// Π̃_f(D,γ) over TB: carrier {⟨g,{b}⟩ | g a section of γ over f⁻¹``{b}},
/// projecting to {b}.
SliceObj pi_tilde(const SetMor& f, const SliceObj& d_gamma);
/// Functor action: a slice map h: (D,γ)→(D′,γ′) gives ⟨g,{b}⟩ ↦ ⟨h∘g,{b}⟩.
SetMor pi_tilde_map(const SetMor& f, const SliceObj& d_gamma, const SliceObj& d2_gamma2,
                    const SetMor& h);
/// σ_(C,ρ): (TC,Tρ) → Π̃_f f*(C,ρ), {c} ↦ ⟨λa.⟨c,a⟩, {ρ(c)}⟩.
SetMor pi_tilde_sigma(const SetMor& f, const SliceObj& c_rho);
/// m̀: f*(C,ρ) → (D,γ) for m: (TC,Tρ) → Π̃_f(D,γ): ⟨c,a⟩ ↦ m({c})(a).
SetMor pi_tilde_m_acute(const SetMor& f, const SliceObj& c_rho, const SliceObj& d_gamma,
                        const SetMor& m);

// --- relative adjunction bookkeeping ---------------------------------------

/// An explicit bijection between two hom-sets, given as pairs.
struct HomBijection {
  std::vector<std::pair<SetMor, SetMor>> entries;
};

/// Validates that `table` is a bijection between exactly `lhs` and `rhs`.
bool is_hom_bijection(const HomBijection& table, const std::vector<SetMor>& lhs,
                      const std::vector<SetMor>& rhs);

/// Composes two hom-set bijections (lhs≅mid, mid≅rhs → lhs≅rhs); throws
/// std::invalid_argument if either table is not bijective or the middles
/// do not match up.
HomBijection compose_hom_bijection(const HomBijection& first, const HomBijection& second);

/// Confirms the derived relative adjunction hom(HFa,b) ≅ hom(Ja,GFb) by
/// composing, for every sample pair, the witness tables for H ⊣ F
/// (hom(HFa,b) ≅ hom(Fa,Fb)) and F ⊣_J G (hom(Fa,Fb) ≅ hom(Ja,GFb)).
/// Non-bijective tables are rejected with std::invalid_argument.
bool derived_relative_adjunction_check(const std::vector<HomBijection>& h_f_tables,
                                       const std::vector<HomBijection>& fj_g_tables,
                                       std::vector<HomBijection>* composed = nullptr);

} // namespace stratcat::cat
