#pragma once
// Monopoles (categories with a distinguished class of positive arrows),
// polarities (positive and negative classes together), hereditary cores,
// sign-aware functors / natural transformations, and voltage validation.

#include <vector>

#include "polcat/fincat.hpp"

namespace polcat {

// An arrow class over a fixed category, stored as a bitset indexed by arrow
// id.  A valid class is a "refinement": it contains every identity and every
// isomorphism and is closed under composition.
using ArrowClass = std::vector<bool>;

ArrowClass all_arrows_class(const FiniteCategory& C);
ArrowClass iso_class(const FiniteCategory& C);

struct Monopole {
  const FiniteCategory* C = nullptr;
  ArrowClass positive;
  // Purely informational; the theory is symmetric in the sign.
  bool negative_sign = false;
};

struct Polarity {
  const FiniteCategory* C = nullptr;
  ArrowClass positive;
  ArrowClass negative;
};

Report validate_refinement(const FiniteCategory& C, const ArrowClass& S);
Report validate_monopole(const Monopole& M);
Report validate_polarity(const Polarity& P);

bool is_sub_monopole(const Monopole& M1, const Monopole& M2);
bool is_sub_polarity(const Polarity& P1, const Polarity& P2);

// f is cancelled on the left by negative arrows: whenever p, q are negative
// with p∘f = q∘f, then p = q.  f itself need not be negative.
bool is_negatively_epic(const Polarity& P, int f);

// Whenever f and g∘f are positive, g is positive.
bool is_left_hereditary(const Monopole& M);

// The left-hereditary core L(M): f stays positive iff every g with g∘f
// positive is itself positive.  When M is composition-closed the core is
// left hereditary and idempotent.
Monopole left_hereditary_core(const Monopole& M);

// Positives of L(monic monopole) resp. L(regular-monic monopole).
ArrowClass essential_monics(const FiniteCategory& C);
ArrowClass essential_regular_monics(const FiniteCategory& C);

// Normality of a monic with respect to some equivalence relation needs
// products and pullbacks, which small explicit categories routinely lack.
enum class Trivalent { kFalse, kTrue, kUndecided };

// True iff some equivalence relation r: R -> Y×Y restricts along f through
// the two defining pullback squares.  Undecided when Y×Y (or a required
// pullback) is absent.  Instance modules provide exact overrides.
Trivalent is_normal_monic(const FiniteCategory& C, int f);

// --- sign-aware functors ------------------------------------------------------
enum class Sign { kPositive, kNegative };

// A pair of functors agreeing on objects: the plus part acts on positive
// arrows (contravariantly when the sign is negative), the minus part on
// negative arrows.  Arrow maps use -1 for arrows outside their class.
struct PolarFunctor {
  Sign sign = Sign::kPositive;
  const Polarity* dom = nullptr;
  const FiniteCategory* cod = nullptr;
  std::vector<int> obj;       // object map
  std::vector<int> plus_arr;  // positive arrow -> cod arrow (or -1)
  std::vector<int> minus_arr; // negative arrow -> cod arrow (or -1)
};

// Identity polar functor of either sign on the underlying category.
PolarFunctor identity_polar_functor(const Polarity& P);

Report validate_polar_functor(const PolarFunctor& F);

// Natural transformation between polar functors over the same polarity and
// codomain.  For equal signs the two ordinary naturality squares are
// required; for a positive source and negative target the square over a
// positive arrow f: x -> y bends back: G₊f ∘ t_y ∘ F₊f = t_x.
struct PolarNatTrans {
  const PolarFunctor* source = nullptr;
  const PolarFunctor* target = nullptr;
  std::vector<int> component;  // object -> arrow of the codomain category
};

Report validate_polar_nat_trans(const PolarNatTrans& t);

// A polarity with a negative endofunctor E (into the underlying category)
// and a unit eta: Id => E such that
//   (1) eta_{EA} is an isomorphism for every object A,
//   (2) E₊f ∘ eta_B ∘ f = eta_A for every positive f: A -> B,
//   (3) E₋f ∘ eta_A = eta_B ∘ f for every negative f: A -> B.
struct Voltage {
  Polarity polarity;
  PolarFunctor E;
  std::vector<int> eta;  // object -> unit arrow x -> Ex
};

Report validate_voltage(const Voltage& V);

}  // namespace polcat
