#pragma once
// Finite, possibly nonunital rings: annihilators, local units, ideal
// lattices with pseudocomplements, brute-force multiplier rings, hom
// extension/lifting lemmas, and the materialized ring instance.

#include <cstdint>
#include <memory>

#include "polcat/capacitor.hpp"
#include "polcat/posets.hpp"

namespace polcat {

// Element subsets as bitmasks; carriers are capped at 16 elements because
// everything downstream sweeps subsets and endomorphism spaces.
using ElemSet = std::uint32_t;
inline constexpr int kMaxRingSize = 16;

struct FinRing {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> add, mul;
  int zero = -1;

  int neg(int a) const;  // additive inverse
};

Report validate_ring(const FinRing& R);

FinRing ring_zn(int n);
FinRing ring_product(const FinRing& A, const FinRing& B);
// The subring of d×d matrices over the two-element field additively spanned
// by the given basis matrices (row-major 0/1 entries); throws when the span
// is not multiplicatively closed.
FinRing ring_from_f2_matrices(const std::string& name, int d,
                              const std::vector<std::vector<int>>& basis);

std::optional<int> unit_of(const FinRing& R);

// Two-sided annihilator {x : xR = Rx = 0}; trivial iff the ring is
// non-degenerate.
ElemSet annihilator(const FinRing& R);
bool is_non_degenerate(const FinRing& R);

// Per-element local units; a finite ring with a joint local unit for its
// whole carrier is unital.
bool has_local_units(const FinRing& R);
bool has_common_local_unit(const FinRing& R);

bool is_ideal(const FinRing& R, ElemSet I);
std::vector<ElemSet> ideals(const FinRing& R);
bool is_essential_ideal(const FinRing& R, ElemSet I);
// Ideals ordered by inclusion, elements in the order ideals() returns.
FinPoset ideal_lattice(const FinRing& R);
// Largest ideal meeting I trivially, when a largest one exists.
std::optional<ElemSet> pseudocomplement(const FinRing& R, ElemSet I);

// The subring on a closed subset, with its inclusion values, and the
// quotient by an ideal, with its projection values.
FinRing subring(const FinRing& R, ElemSet S, std::vector<int>* incl = nullptr);
FinRing quotient_ring(const FinRing& R, ElemSet I, std::vector<int>* proj = nullptr);

struct RingHom {
  const FinRing* src = nullptr;
  const FinRing* tgt = nullptr;
  std::vector<int> val;
};

bool is_ring_hom(const RingHom& f);
bool is_injective_hom(const RingHom& f);
bool is_unital_hom(const RingHom& f);  // both rings unital and 1 -> 1
ElemSet hom_image(const RingHom& f);
// f(A)B = Bf(A) = B with products read as additive spans.
bool is_non_degenerate_hom(const RingHom& f);

std::vector<std::vector<int>> enumerate_ring_homs(const FinRing& A, const FinRing& B,
                                                  bool unital_only = false);

// Multiplier pairs (λ, ρ) of additive endomorphisms with λ(ab) = λ(a)b,
// ρ(ab) = aρ(b), aλ(b) = ρ(a)b; multiplication composes the left parts
// forwards and the right parts backwards; the base embeds by two-sided
// multiplication.
struct MultiplierRing {
  FinRing ring;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
  std::vector<int> embedding;  // base element -> multiplier element
};

// Requires a non-degenerate base (the embedding is injective exactly then).
MultiplierRing multiplier_ring(const FinRing& R);

// The unique unital extension M(A) -> M(B) of a non-degenerate hom A -> B.
RingHom extend_multiplier_hom(const RingHom& f, const MultiplierRing& MA,
                              const MultiplierRing& MB);

// For injective f: A -> B with ideal image: the unique unital
// ψ: M(B) -> M(A) with ψ∘μ_B∘f = μ_A; injective iff the image is essential.
RingHom lift_ideal_embedding(const RingHom& f, const MultiplierRing& MA,
                             const MultiplierRing& MB);

// ξ = (R -> R/I^⊥) ∘ (I -> R) is injective with essential-ideal image.
Report check_quotient_kernel(const FinRing& R, ElemSet I);

// Three equivalent readings of "the inclusion of I admits only the trivial
// orthogonal complement", each evaluated independently, then compared.
Report check_trivial_complement(const FinRing& R, ElemSet I);

struct RingUniverse {
  std::vector<FinRing> objects;
  FiniteCategory cat;  // all ring homomorphisms
  ArrowClass positives;  // injective with ideal image
  ArrowClass H;          // injective with essential-ideal image
  std::vector<std::vector<int>> homs;

  int find_arrow(int src, int tgt, const std::vector<int>& val) const;
};

std::unique_ptr<RingUniverse> materialize_ring_universe(
    const std::vector<FinRing>& rings, int arrow_budget = kDefaultArrowBudget);

struct RingCapacitor {
  std::unique_ptr<RingUniverse> u;  // listed rings plus inserted multiplier rings
  FiniteCategory E;                 // unital rings with unital homs
  std::vector<int> e_obj, e_arr;
  CapacitorSpec spec;
};

std::unique_ptr<RingCapacitor> build_ring_capacitor(
    const std::vector<FinRing>& rings, int arrow_budget = kDefaultArrowBudget);

}  // namespace polcat
