#pragma once
// Finite posets, cut completion (the classical completion by cuts), dense
// embeddings, the continuity predicate for monotone maps, and the
// materialized poset instance.

#include <cstdint>
#include <memory>

#include "polcat/capacitor.hpp"

namespace polcat {

// Elements are 0..n-1; subsets are bitmasks, so n is capped at 20.
using Subset = std::uint32_t;
inline constexpr int kMaxPosetSize = 20;

struct FinPoset {
  std::string name;
  int n = 0;
  std::vector<std::vector<bool>> leq;  // leq[i][j] means i <= j

  bool le(int i, int j) const { return leq[i][j]; }
};

Report validate_poset(const FinPoset& P);

// Common upper (lower) bounds of A.
Subset up_set(const FinPoset& P, Subset A);
Subset down_set(const FinPoset& P, Subset A);

// Least upper / greatest lower bound of a subset, when it exists.  The
// empty subset has the minimum (maximum) as its supremum (infimum).
std::optional<int> sup(const FinPoset& P, Subset A);
std::optional<int> inf(const FinPoset& P, Subset A);

struct MonotoneMap {
  const FinPoset* src = nullptr;
  const FinPoset* tgt = nullptr;
  std::vector<int> val;
};

bool is_monotone(const MonotoneMap& f);
bool is_embedding(const MonotoneMap& f);   // x<=y iff f(x)<=f(y)
bool is_join_dense(const MonotoneMap& f);  // every b is a sup of image elements below it
bool is_meet_dense(const MonotoneMap& f);
bool is_dense(const MonotoneMap& f);       // join dense and meet dense

bool is_complete_lattice(const FinPoset& P);

// The completion by cuts: fixed points A = ↓↑A ordered by inclusion, with
// unit p -> ↓{p}.  Cuts are listed in increasing bitmask order, so element
// ids are reproducible.
struct MacNeilleLattice {
  FinPoset lattice;
  std::vector<Subset> cuts;
  std::vector<int> unit;  // p -> index of ↓{p}
};

MacNeilleLattice macneille(const FinPoset& P);

// A monotone map is continuous when its canonical extension to the cut
// completions, C -> ↓↑f[C] on nonempty cuts (the empty cut goes to the
// lower bounds of the whole image), preserves binary meets and joins of
// cuts.  On complete lattices this coincides with preserving all nonempty
// existing suprema and infima; it is the class of maps that extend.
bool is_continuous_map(const MonotoneMap& f);

// Preserves every existing supremum and infimum of every nonempty subset.
bool preserves_nonempty_bounds(const MonotoneMap& f);

// The canonical extension itself, as a map between the two cut lattices.
// Throws on non-continuous input.  Commutes with the units.
MonotoneMap extend_to_macneille(const MonotoneMap& f,
                                const MacNeilleLattice& mp,
                                const MacNeilleLattice& mq);

// All monotone maps src -> tgt as value tables, lexicographic order.
std::vector<std::vector<int>> enumerate_monotone_maps(const FinPoset& P,
                                                      const FinPoset& Q);

// Lexicographically minimal relation matrix over all relabelings; perm[i]
// is the new index of element i.
FinPoset canonical_poset(const FinPoset& P, std::vector<int>* perm = nullptr);

// All nonempty posets with at most n elements, one per isomorphism class,
// in canonical order.
std::vector<FinPoset> all_posets_up_to(int n);

struct PosetUniverse {
  std::vector<FinPoset> objects;       // canonical, deduplicated
  FiniteCategory cat;                  // every monotone map
  ArrowClass embeddings;               // the positive class
  ArrowClass dense_embeddings;         // H
  std::vector<std::vector<int>> maps;  // arrow id -> value table

  int find_object(const FinPoset& canonical) const;
  int find_arrow(int src, int tgt, const std::vector<int>& val) const;
};

// Category of the listed posets (canonicalized, deduplicated) and all
// monotone maps between them.  Rejects empty posets.
std::unique_ptr<PosetUniverse> materialize_poset_universe(
    const std::vector<FinPoset>& posets, int arrow_budget = kDefaultArrowBudget);

struct PosetCapacitor {
  std::unique_ptr<PosetUniverse> u;  // closed under cut completion
  FiniteCategory E;                  // complete lattices, bound-preserving maps
  std::vector<int> e_obj;            // E object -> base object
  std::vector<int> e_arr;            // E arrow -> base arrow
  CapacitorSpec spec;                // points into u->cat and E
};

// The full instance: closes the universe under cut completion, carves out
// the complete lattices with the maps preserving nonempty sups and infs,
// and installs the cut-completion units as the completion family.
std::unique_ptr<PosetCapacitor> build_poset_capacitor(
    const std::vector<FinPoset>& posets, int arrow_budget = kDefaultArrowBudget);

}  // namespace polcat
