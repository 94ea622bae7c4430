#pragma once
// Finite Boolean algebras in powerset-of-atoms normal form, dense and
// essential embeddings, the continuity predicate for homomorphisms, the
// finite-scale extension theorem, and the materialized instance.

#include <cstdint>
#include <memory>

#include "polcat/capacitor.hpp"

namespace polcat {

// Explicit operation tables, the raw input form.
struct BATables {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> meet, join;
  std::vector<int> neg;
  int zero = -1, one = -1;
};

Report validate_ba(const BATables& A);

// Normal form: the powerset algebra on `atoms` atoms; elements are bitmasks
// 0 .. 2^atoms - 1, meet/join are intersection/union, 0 and the full mask
// are the bounds.
struct FinBoolAlg {
  std::string name;
  int atoms = 0;

  int size() const { return 1 << atoms; }
};

FinBoolAlg from_atoms(int n);

// Atoms of a table algebra: minimal nonzero elements.
std::vector<int> atoms(const BATables& A);

// Conversion to normal form; throws when the tables are not a Boolean
// algebra.  elem_mask (optional) receives, per table element, its atom set.
FinBoolAlg normalize_ba(const BATables& A, std::vector<std::uint32_t>* elem_mask = nullptr);

// A homomorphism of powerset algebras is determined by an atom-preimage
// map: target atom t pulls back to source atom atom_pre[t], and
// f(S) = { t : atom_pre[t] in S }.
struct BAHom {
  const FinBoolAlg* src = nullptr;
  const FinBoolAlg* tgt = nullptr;
  std::vector<int> atom_pre;

  std::uint32_t apply(std::uint32_t s) const {
    std::uint32_t out = 0;
    for (size_t t = 0; t < atom_pre.size(); ++t)
      if (s >> atom_pre[t] & 1u) out |= 1u << t;
    return out;
  }
};

bool is_embedding(const BAHom& f);          // injective
bool is_dense_subalgebra(const BAHom& f);   // every b is a sup of image elements below it
bool is_essential_embedding(const BAHom& f);

// Meets of arbitrary element sets are reflected at zero:
// whenever a family meets to 0, so does its image.
bool is_continuous_hom(const BAHom& f);

// At finite scale every algebra is complete, so the completion is the
// algebra itself with the identity unit; the target is verified isomorphic
// to the cut completion of the underlying order.
std::pair<FinBoolAlg, BAHom> ba_completion(const FinBoolAlg& A);

// Some extension g with g∘f = h (lowest in hom enumeration order); throws
// when none exists.  f must be an embedding and C is complete, so existence
// is a theorem at this scale — a miss is a test failure, not a soft error.
BAHom sikorski_extend(const BAHom& f, const BAHom& h);

std::vector<std::vector<int>> enumerate_ba_homs(const FinBoolAlg& A,
                                                const FinBoolAlg& B);

struct BAUniverse {
  std::vector<FinBoolAlg> objects;
  FiniteCategory cat;
  ArrowClass embeddings;            // positives
  ArrowClass essential_embeddings;  // H
  std::vector<std::vector<int>> homs;  // arrow id -> atom-preimage table

  int find_arrow(int src, int tgt, const std::vector<int>& atom_pre) const;
};

std::unique_ptr<BAUniverse> materialize_ba_universe(
    const std::vector<FinBoolAlg>& algebras, int arrow_budget = kDefaultArrowBudget);

struct BACapacitor {
  std::unique_ptr<BAUniverse> u;
  FiniteCategory E;  // the same algebras with the continuous homomorphisms
  std::vector<int> e_obj, e_arr;
  CapacitorSpec spec;
};

std::unique_ptr<BACapacitor> build_ba_capacitor(
    const std::vector<FinBoolAlg>& algebras, int arrow_budget = kDefaultArrowBudget);

}  // namespace polcat
