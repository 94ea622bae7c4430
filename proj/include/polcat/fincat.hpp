#pragma once
// Explicit finite categories: objects, arrows, a total composition table,
// exhaustive detection of monic/epic/regular/strong arrows, and brute-force
// universal constructions (products, equalizers, pullbacks, ...).
//
// Everything in this header is a pure function over immutable data and may be
// called concurrently from multiple threads.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polcat {

// Accumulates human-readable rule violations.  Empty report == valid.
struct Report {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
  void fail(std::string what) { issues.push_back(std::move(what)); }
  void merge(const Report& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
  }
};

struct Arrow {
  int id = -1;
  int src = -1;
  int tgt = -1;
};

// Default ceiling on category size; every exhaustive search here is
// exponential-ish, so refuse loudly instead of hanging.
inline constexpr int kDefaultArrowBudget = 20000;

class FiniteCategory {
 public:
  FiniteCategory() = default;

  // --- construction -------------------------------------------------------
  int add_object(std::string name);
  // Arrows must be added before compositions referencing them.
  int add_arrow(int src, int tgt);
  // Declare g∘f = gf.  Must be typed (tgt(f) == src(g)).
  void set_compose(int g, int f, int gf);
  // Mark an existing arrow as the identity of its object.
  void set_identity(int obj, int arrow);
  // Freezes the structure, builds lookup tables.  Throws std::runtime_error
  // if the composition table is not total over composable pairs.
  void finalize(int arrow_budget = kDefaultArrowBudget);

  // --- accessors -----------------------------------------------------------
  int num_objects() const { return static_cast<int>(object_names_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& object_name(int o) const { return object_names_.at(o); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  int src(int a) const { return arrows_.at(a).src; }
  int tgt(int a) const { return arrows_.at(a).tgt; }
  int identity(int obj) const { return identity_.at(obj); }
  bool is_identity(int a) const { return identity_.at(arrows_.at(a).src) == a && arrows_.at(a).src == arrows_.at(a).tgt; }
  bool finalized() const { return finalized_; }

  // g∘f, assuming tgt(f) == src(g).
  int compose(int g, int f) const {
    return comp_[g][into_pos_[f]];
  }
  bool composable(int g, int f) const { return tgt(f) == src(g); }

  const std::vector<int>& arrows_out(int obj) const { return out_.at(obj); }
  const std::vector<int>& arrows_into(int obj) const { return into_.at(obj); }
  const std::vector<int>& hom(int x, int y) const { return hom_.at(x).at(y); }

  // Axiom check used by validate_category; finalize() requires totality but
  // not the identity/associativity laws, so broken tables are representable.
  Report validate() const;

 private:
  std::vector<std::string> object_names_;
  std::vector<Arrow> arrows_;
  std::vector<int> identity_;                     // object -> arrow id
  std::vector<std::pair<std::pair<int, int>, int>> pending_;  // ((g,f),gf)
  // Frozen lookup structures:
  std::vector<std::vector<int>> out_, into_;      // per object
  std::vector<int> into_pos_;                     // arrow -> index in into_[tgt]
  std::vector<std::vector<int>> comp_;            // comp_[g][into_pos_[f]] (f ranges over arrows into src(g))
  std::vector<std::vector<std::vector<int>>> hom_;
  bool finalized_ = false;
};

Report validate_category(const FiniteCategory& C);

// --- arrow classes ---------------------------------------------------------
bool is_monic(const FiniteCategory& C, int f);
bool is_epic(const FiniteCategory& C, int f);
bool is_iso(const FiniteCategory& C, int f);
std::optional<int> inverse(const FiniteCategory& C, int f);
bool is_split_monic(const FiniteCategory& C, int f);
bool is_split_epic(const FiniteCategory& C, int f);

// True iff every commuting square b∘g = h∘a admits exactly one diagonal t
// with t∘a = g and b∘t = h.
bool is_left_orthogonal(const FiniteCategory& C, int a, int b);
bool is_strong_epic(const FiniteCategory& C, int f);   // left orthogonal to all monics
bool is_strong_monic(const FiniteCategory& C, int f);  // right orthogonal to all epics

// Limit-free characterizations: f is a regular monic iff every g into tgt(f)
// that equalizes every parallel pair equalized by f factors through f.
bool is_regular_monic(const FiniteCategory& C, int f);
bool is_regular_epic(const FiniteCategory& C, int f);

// --- universal constructions ------------------------------------------------
enum class UniversalKind {
  kTerminal,
  kInitial,
  kProduct,
  kCoproduct,
  kEqualizer,
  kCoequalizer,
  kPullback,
  kPushout,
};

struct UniversalResult {
  bool absent = true;
  int apex = -1;
  std::vector<int> legs;  // projections/injections/inclusion arrow, kind-dependent
};

struct UniversalData {
  // kProduct/kCoproduct: objects a,b. kEqualizer/kCoequalizer: parallel
  // arrows p,q. kPullback: cospan f: a->c, g: b->c. kPushout: span.
  int a = -1;
  int b = -1;
};

UniversalResult find_universal(const FiniteCategory& C, UniversalKind kind,
                               UniversalData data = {});

UniversalResult kernel_pair(const FiniteCategory& C, int f);    // pullback of f along f
UniversalResult cokernel_pair(const FiniteCategory& C, int f);  // pushout of f along f

// Im(f) = equalizer of the cokernel pair; CoIm(f) = coequalizer of the kernel
// pair.  legs[0] is the inclusion Im(f) -> tgt(f) (resp. projection
// src(f) -> CoIm(f)).
UniversalResult image(const FiniteCategory& C, int f);
UniversalResult coimage(const FiniteCategory& C, int f);

// The comparison arrow CoIm(f) -> Im(f) closing the canonical factorization;
// verified monic and epic before returning.  Absent when the required
// (co)limits do not exist in C.
std::optional<int> regular_comparison(const FiniteCategory& C, int f);

// f is regular iff the comparison arrow is an isomorphism.  Throws
// std::runtime_error("comparison undefined") when image/coimage are absent.
bool is_regular(const FiniteCategory& C, int f);

FiniteCategory opposite(const FiniteCategory& C);

// --- functors ----------------------------------------------------------------
struct Functor {
  const FiniteCategory* dom = nullptr;
  const FiniteCategory* cod = nullptr;
  std::vector<int> obj;  // object map
  std::vector<int> arr;  // arrow map
  bool contravariant = false;

  int on_obj(int o) const { return obj.at(o); }
  int on_arr(int a) const { return arr.at(a); }
};

Functor identity_functor(const FiniteCategory& C);
Report validate_functor(const Functor& F);
bool is_faithful(const Functor& F);
Functor compose_functors(const Functor& F, const Functor& G);  // G after F

}  // namespace polcat
