#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stratcat/sweep.hpp"

namespace stratcat::spe {

/// One audited item of the stratified-topos structure. Status is PASS,
/// FAIL (with witnesses) or UNCHECKED.
struct CheckItem {
  std::string axiom;
  std::string status;
  std::vector<std::string> witnesses;
  std::string note;
};

struct SpeReport {
  unsigned rank_budget = 0;
  std::uint64_t seed = 0;
  std::vector<CheckItem> items; // fixed order, independent of execution
  bool all_pass() const;        // no FAIL entries (UNCHECKED is allowed)
};

/// Sweeps every structural property over all objects of rank ≤ rank_budget
/// (seeded sampling caps the larger enumerations at rank ≥ 3):
/// finite limits and coproducts with mediator uniqueness, image
/// factorizations and their pullback stability, the subobject classifier,
/// the singleton-image functor as a full embedding creating finite limits,
/// the function-space coherence data (items 3a-3d; 3e is recorded
/// UNCHECKED), the relative dependent-product adjunction, and
/// pseudo-powerobject representability. rank_budget must be ≤ 4.
SpeReport verify_spe(unsigned rank_budget, std::uint64_t seed, sweep::Exec exec);

} // namespace stratcat::spe
