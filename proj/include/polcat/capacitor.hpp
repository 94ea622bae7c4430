#pragma once
// Rigid completion families, capacitor verification, derivation of the
// negative arrow class with its fillers, assembly of the induced voltage,
// and the twelve-conclusion ledger plus the injectivity corollary.

#include "polcat/hulls.hpp"

namespace polcat {

// Per object x of the base category: a unit arrow x -> U(Jx) (an H-arrow of
// the base) and the completion object Jx in the functor's domain.
struct CompletionFamily {
  std::vector<int> unit;    // C-arrow ids
  std::vector<int> object;  // E-object ids
};

struct CapacitorSpec {
  const FiniteCategory* C = nullptr;
  ArrowClass positive;  // the base monopole
  ArrowClass H;         // sub-refinement the completions are relative to
  const FiniteCategory* E = nullptr;
  Functor U;            // faithful, E -> C
  CompletionFamily family;
  bool verified = false;  // set by verify_capacitor
};

// Clause (1): every base arrow has at most one square filler in E between
// the corresponding completion objects.  Clause (2): the only base arrow
// U(Jx) -> U(Jx) fixing the unit is the identity.
Report is_rigid_family(const CapacitorSpec& spec);

// Full validation: typing, U faithful, H a sub-refinement of the positives,
// each family entry terminal in its comma category, rigidity, functoriality
// of the induced contravariant action on H-arrows.  Sets spec.verified.
Report verify_capacitor(CapacitorSpec& spec);

struct DerivedNegatives {
  ArrowClass negative;      // arrows admitting a square filler
  std::vector<int> filler;  // arrow id in E, or -1
};

// The arrows f: x -> y for which some (necessarily unique) ψ: Jx -> Jy in E
// closes the unit square Uψ∘η_x = η_y∘f.  Requires a verified spec.
DerivedNegatives derive_negative_class(const CapacitorSpec& spec);

struct DerivedVoltage {
  Polarity polarity;         // positives = H, negatives = derived
  std::vector<int> j_plus;   // H-arrow f: x->y  ->  E-arrow Jy -> Jx, else -1
  std::vector<int> j_minus;  // negative f: x->y ->  E-arrow Jx -> Jy, else -1
  Voltage voltage;           // endofunctor U∘J with the units
};

// Assembles the voltage induced by the capacitor; the result passes
// validate_voltage on every verified spec (checked by the ledger, item 5).
DerivedVoltage build_voltage(const CapacitorSpec& spec);

struct LedgerEntry {
  int item = 0;
  bool holds = false;
  std::string witness;
};

// The twelve-entry ledger.  Each conclusion gets its own independent
// checker so a broken instance pinpoints the failing clause:
//   1 derived negatives form a refinement
//   2 the filler assignment is functorial on negatives
//   3 the two completion actions form a negative sign-aware endofunctor
//   4 the units are natural
//   5 the assembled voltage validates
//   6 every unit is an amphi-terminal completion relative to H
//   7 every unit is monic and negatively epic
//   8 the negative endofunctor is faithful and full onto the negatives
//     between completion objects (up to the unit isomorphisms)
//   9 each negative arrow has exactly one negative square filler
//  10 Hom_E(Jx, e) -> negatives(x, Ue), ψ -> Uψ∘η_x is a natural bijection
//  11 U is full and faithful into the negatives with reflective image
//  12 injective (full positives, derived negatives) <=> complete relative to H
std::vector<LedgerEntry> verify_theorem_main(CapacitorSpec& spec);

struct CorollaryResult {
  bool enough_injectives = false;
  bool complete_implies_injective = false;
  bool injectives_equal_completes = false;
  bool equivalent = false;  // the three verdicts agree pairwise
  std::vector<std::string> notes;
};

CorollaryResult verify_corollary_main(CapacitorSpec& spec);

}  // namespace polcat
