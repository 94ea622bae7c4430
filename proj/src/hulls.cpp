#include "polcat/hulls.hpp"

#include <algorithm>
#include <map>

namespace polcat {

bool is_amphi_terminal(const FiniteCategory& D, int z) {
  for (int x = 0; x < D.num_objects(); ++x) {
    if (D.hom(x, z).empty()) return false;                      // weakly terminal
    if (static_cast<int>(D.hom(z, x).size()) > 1) return false;  // quasi-initial
  }
  return true;
}

bool is_amphi_initial(const FiniteCategory& D, int z) {
  for (int x = 0; x < D.num_objects(); ++x) {
    if (D.hom(z, x).empty()) return false;
    if (static_cast<int>(D.hom(x, z).size()) > 1) return false;
  }
  return true;
}

std::optional<int> find_amphi_terminal(const FiniteCategory& D) {
  for (int z = 0; z < D.num_objects(); ++z)
    if (is_amphi_terminal(D, z)) return z;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Amphi-limits via the category of cones.

namespace {
struct Cone {
  int apex;
  std::vector<int> legs;
};
}  // namespace

AmphiLimitResult amphi_limit(const Diagram& F) {
  const FiniteCategory& S = *F.shape;
  const FiniteCategory& C = *F.target;
  int n = S.num_objects();
  std::vector<Cone> cones;
  for (int w = 0; w < C.num_objects(); ++w) {
    std::vector<int> legs(n);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        for (int a = 0; a < S.num_arrows(); ++a)
          if (C.compose(F.arr[a], legs[S.src(a)]) != legs[S.tgt(a)]) return;
        cones.push_back({w, legs});
        return;
      }
      for (int l : C.hom(w, F.obj[i])) {
        legs[i] = l;
        rec(i + 1);
      }
    };
    rec(0);
  }
  auto cone_morphisms = [&](const Cone& a, const Cone& b) {
    int count = 0;
    for (int m : C.hom(a.apex, b.apex)) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        if (C.compose(b.legs[i], m) != a.legs[i]) ok = false;
      if (ok) ++count;
    }
    return count;
  };
  for (const Cone& z : cones) {
    bool amphi = true;
    for (const Cone& other : cones) {
      if (cone_morphisms(other, z) < 1) { amphi = false; break; }
      if (cone_morphisms(z, other) > 1) { amphi = false; break; }
    }
    if (amphi) return AmphiLimitResult{false, z.apex, z.legs};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Slice and coslice monopoles.

static SliceResult slice_like(const Monopole& M, int x, bool coslice,
                              int arrow_budget) {
  const FiniteCategory& C = *M.C;
  if (x < 0 || x >= C.num_objects()) throw std::runtime_error("unknown object");
  SliceResult out;
  const auto& base = coslice ? C.arrows_out(x) : C.arrows_into(x);
  std::map<int, int> idx;  // underlying arrow id -> slice object
  for (int f : base) {
    if (!M.positive[f]) continue;
    idx[f] = out.cat.add_object((coslice ? "out:" : "in:") + std::to_string(f));
    out.obj_arrow.push_back(f);
  }
  // arrows are triples (i, j, ξ); remember each for composition
  std::map<std::tuple<int, int, int>, int> aid;
  std::vector<std::tuple<int, int, int>> arrs;
  ArrowClass pos;
  for (auto [f, i] : idx)
    for (auto [g, j] : idx) {
      // coslice: ξ: tgt(f) -> tgt(g) with ξ∘f = g
      // slice:   ξ: src(f) -> src(g) with g∘ξ = f
      const auto& hs = coslice ? C.hom(C.tgt(f), C.tgt(g))
                               : C.hom(C.src(f), C.src(g));
      for (int xi : hs) {
        bool ok = coslice ? (C.compose(xi, f) == g) : (C.compose(g, xi) == f);
        if (!ok) continue;
        if (static_cast<int>(arrs.size()) >= arrow_budget)
          throw std::runtime_error("arrow budget exceeded while materializing slice");
        int a = out.cat.add_arrow(i, j);
        aid[{i, j, xi}] = a;
        arrs.push_back({i, j, xi});
        pos.push_back(M.positive[xi]);
      }
    }
  for (auto [f, i] : idx) {
    int e = C.identity(coslice ? C.tgt(f) : C.src(f));
    out.cat.set_identity(i, aid.at({i, i, e}));
  }
  for (size_t gi = 0; gi < arrs.size(); ++gi) {
    auto [j1, k, zeta] = arrs[gi];
    for (size_t fi = 0; fi < arrs.size(); ++fi) {
      auto [i, j2, xi] = arrs[fi];
      if (j1 != j2) continue;
      int comp = coslice ? C.compose(zeta, xi) : C.compose(zeta, xi);
      out.cat.set_compose(static_cast<int>(gi), static_cast<int>(fi),
                          aid.at({i, k, comp}));
    }
  }
  out.cat.finalize(arrow_budget);
  out.monopole = Monopole{&out.cat, pos, M.negative_sign};
  return out;
}

SliceResult coslice_monopole(const Monopole& M, int x, int arrow_budget) {
  return slice_like(M, x, true, arrow_budget);
}

SliceResult slice_monopole(const Monopole& M, int x, int arrow_budget) {
  return slice_like(M, x, false, arrow_budget);
}

// ---------------------------------------------------------------------------
// Completions.  These searches run over the coslice structure directly, so
// huge universes do not pay for a materialized coslice category.

static CompletionResult completion_in_class(const FiniteCategory& C,
                                            const ArrowClass& positive, int x) {
  std::vector<int> objs;  // positive arrows out of x
  for (int f : C.arrows_out(x))
    if (positive[f]) objs.push_back(f);
  for (int cand : objs) {
    int w = C.tgt(cand);
    bool ok = true;
    std::vector<int> counts;
    counts.reserve(objs.size());
    for (int f : objs) {
      int incoming = 0;
      for (int xi : C.hom(C.tgt(f), w))
        if (C.compose(xi, f) == cand) ++incoming;
      int outgoing = 0;
      for (int xi : C.hom(w, C.tgt(f)))
        if (C.compose(xi, cand) == f) ++outgoing;
      counts.push_back(incoming);
      if (incoming < 1 || outgoing > 1) { ok = false; break; }
    }
    if (ok) return CompletionResult{false, cand, w, counts};
  }
  return {};
}

CompletionResult completion(const Monopole& M, int x) {
  return completion_in_class(*M.C, M.positive, x);
}

bool is_complete(const Monopole& M, int x) {
  const FiniteCategory& C = *M.C;
  int e = C.identity(x);
  for (int f : C.arrows_out(x)) {
    if (!M.positive[f]) continue;
    int incoming = 0;
    for (int xi : C.hom(C.tgt(f), x))
      if (C.compose(xi, f) == e) ++incoming;
    if (incoming < 1) return false;
    int outgoing = 0;
    for (int xi : C.hom(x, C.tgt(f)))
      if (C.compose(xi, e) == f) ++outgoing;
    if (outgoing > 1) return false;
  }
  return true;
}

CompletionResult relative_completion(const Monopole& M, int x, const ArrowClass& H) {
  Report hr = validate_refinement(*M.C, H);
  if (!hr.ok()) throw std::runtime_error("restriction class is not a refinement");
  return completion_in_class(*M.C, H, x);
}

CompletionResult completion_wrt_functor(const Monopole& M, int x,
                                        const Functor& U, const ArrowClass& H) {
  const FiniteCategory& C = *M.C;
  const FiniteCategory& E = *U.dom;
  if (U.cod != &C) throw std::runtime_error("functor does not land in the base category");
  // comma objects (b, f) with f: x -> Ub an H-arrow
  std::vector<std::pair<int, int>> objs;
  for (int b = 0; b < E.num_objects(); ++b)
    for (int f : C.hom(x, U.obj[b]))
      if (H[f]) objs.push_back({b, f});
  for (auto [b0, f0] : objs) {
    bool ok = true;
    std::vector<int> counts;
    counts.reserve(objs.size());
    for (auto [b, f] : objs) {
      int mediators = 0;
      for (int phi : E.hom(b, b0))
        if (C.compose(U.arr[phi], f) == f0) ++mediators;
      counts.push_back(mediators);
      if (mediators != 1) { ok = false; break; }
    }
    if (ok) return CompletionResult{false, f0, b0, counts};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Injectivity.

bool is_injective_polarity(const Polarity& P, int x) {
  const FiniteCategory& C = *P.C;
  for (int g = 0; g < C.num_arrows(); ++g) {
    if (!P.positive[g]) continue;
    int a = C.src(g), b = C.tgt(g);
    for (int f : C.hom(a, x)) {
      if (!P.negative[f]) continue;
      bool extends = false;
      for (int h : C.hom(b, x))
        if (C.compose(h, g) == f) { extends = true; break; }
      if (!extends) return false;
    }
  }
  return true;
}

bool is_injective_monopole(const Monopole& M, int x) {
  Polarity P{M.C, M.positive, all_arrows_class(*M.C)};
  return is_injective_polarity(P, x);
}

bool has_enough_injectives(const Polarity& P) {
  const FiniteCategory& C = *P.C;
  std::vector<bool> injective(C.num_objects());
  for (int o = 0; o < C.num_objects(); ++o) injective[o] = is_injective_polarity(P, o);
  for (int o = 0; o < C.num_objects(); ++o) {
    bool reached = false;
    for (int f : C.arrows_out(o))
      if (P.positive[f] && injective[C.tgt(f)]) { reached = true; break; }
    if (!reached) return false;
  }
  return true;
}

}  // namespace polcat
