#pragma once
// Amphi-terminal objects, coslice/slice monopoles, completions of objects
// (absolute, refinement-relative, and relative to a faithful functor), and
// injectivity of objects in monopoles and polarities.

#include <optional>

#include "polcat/polarity.hpp"

namespace polcat {

// z is amphi-terminal when every object has at least one arrow into z and z
// has at most one arrow into any object.
bool is_amphi_terminal(const FiniteCategory& D, int z);
bool is_amphi_initial(const FiniteCategory& D, int z);

// Lowest-id amphi-terminal object; all witnesses are pairwise isomorphic, so
// the choice is canonical up to iso.
std::optional<int> find_amphi_terminal(const FiniteCategory& D);

// A finite diagram: a functor from a finite shape into a finite category.
struct Diagram {
  const FiniteCategory* shape = nullptr;
  const FiniteCategory* target = nullptr;
  std::vector<int> obj;
  std::vector<int> arr;
};

// The apex/legs of a distinguished cone, plus counts certifying how it was
// selected (see CompletionResult for the convention).
struct AmphiLimitResult {
  bool absent = true;
  int apex = -1;
  std::vector<int> legs;
};

// Amphi-terminal object of the category of cones over the diagram.
AmphiLimitResult amphi_limit(const Diagram& F);

// Coslice monopole at x: objects are the positive arrows out of x; an arrow
// from f: x -> y to g: x -> z is any underlying arrow ξ: y -> z with
// ξ∘f = g, positive in the coslice iff positive below.  The returned
// category's object names encode the underlying arrow ids.
struct SliceResult {
  FiniteCategory cat;
  Monopole monopole;           // over cat
  std::vector<int> obj_arrow;  // coslice object -> underlying arrow id
};
SliceResult coslice_monopole(const Monopole& M, int x,
                             int arrow_budget = kDefaultArrowBudget);
SliceResult slice_monopole(const Monopole& M, int x,
                           int arrow_budget = kDefaultArrowBudget);

// A completion of x: its unit arrow and target object, together with the
// amphi-terminality (or terminality) witness counts: for every competing
// object of the search category, witness_counts records how many arrows it
// has into the selected one (absolute case) or out of the selected one
// capped per target (the at-most-one side).
struct CompletionResult {
  bool absent = true;
  int unit = -1;    // arrow of the base category
  int object = -1;  // object of the searched category (base or functor domain)
  std::vector<int> witness_counts;
};

// Amphi-terminal object of the coslice of positive arrows out of x.
CompletionResult completion(const Monopole& M, int x);

// x is complete iff its identity arrow is amphi-terminal in the coslice.
bool is_complete(const Monopole& M, int x);

// Completion in the monopole with positives restricted to H.
CompletionResult relative_completion(const Monopole& M, int x, const ArrowClass& H);

// Terminal object of the comma category x↓U built from H-arrows: objects are
// pairs (b in E, f: x -> Ub with f in H); morphisms (b,f) -> (c,g) are
// E-arrows φ with Uφ∘f = g.  Demands strict terminality.
CompletionResult completion_wrt_functor(const Monopole& M, int x,
                                        const Functor& U, const ArrowClass& H);

// Extension property: every negative f: a -> x extends along every positive
// g: a -> b.  The monopole variant takes every arrow as negative.
bool is_injective_polarity(const Polarity& P, int x);
bool is_injective_monopole(const Monopole& M, int x);

// Every object admits a positive arrow into an injective object.
bool has_enough_injectives(const Polarity& P);

}  // namespace polcat
