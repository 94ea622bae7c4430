#include "polcat/rings.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace polcat {

int FinRing::neg(int a) const {
  for (int x = 0; x < n; ++x)
    if (add[a][x] == zero) return x;
  throw std::runtime_error("no additive inverse");
}

Report validate_ring(const FinRing& R) {
  Report r;
  int n = R.n;
  auto intab = [&](const std::vector<std::vector<int>>& t) {
    if (static_cast<int>(t.size()) != n) return false;
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != n) return false;
      for (int v : row)
        if (v < 0 || v >= n) return false;
    }
    return true;
  };
  if (n <= 0 || n > kMaxRingSize || !intab(R.add) || !intab(R.mul) ||
      R.zero < 0 || R.zero >= n) {
    r.fail("malformed tables");
    return r;
  }
  for (int a = 0; a < n; ++a) {
    if (R.add[R.zero][a] != a || R.add[a][R.zero] != a) r.fail("zero not neutral");
    bool inv = false;
    for (int x = 0; x < n; ++x)
      if (R.add[a][x] == R.zero) inv = true;
    if (!inv) r.fail("missing additive inverse at " + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      if (R.add[a][b] != R.add[b][a]) r.fail("addition not commutative");
      for (int c = 0; c < n; ++c) {
        if (R.add[a][R.add[b][c]] != R.add[R.add[a][b]][c])
          r.fail("addition not associative");
        if (R.mul[a][R.mul[b][c]] != R.mul[R.mul[a][b]][c])
          r.fail("multiplication not associative");
        if (R.mul[a][R.add[b][c]] != R.add[R.mul[a][b]][R.mul[a][c]])
          r.fail("left distributivity fails");
        if (R.mul[R.add[a][b]][c] != R.add[R.mul[a][c]][R.mul[b][c]])
          r.fail("right distributivity fails");
      }
    }
  }
  if (static_cast<int>(r.issues.size()) > 8) r.issues.resize(8);
  return r;
}

FinRing ring_zn(int n) {
  if (n < 1 || n > kMaxRingSize) throw std::runtime_error("modulus out of range");
  FinRing R{"Z" + std::to_string(n), n, {}, {}, 0};
  R.add.assign(n, std::vector<int>(n));
  R.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      R.add[a][b] = (a + b) % n;
      R.mul[a][b] = (a * b) % n;
    }
  return R;
}

FinRing ring_product(const FinRing& A, const FinRing& B) {
  int n = A.n * B.n;
  if (n > kMaxRingSize) throw std::runtime_error("product carrier too large");
  FinRing R{A.name + "x" + B.name, n, {}, {}, A.zero * B.n + B.zero};
  R.add.assign(n, std::vector<int>(n));
  R.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      R.add[a][b] = A.add[a / B.n][b / B.n] * B.n + B.add[a % B.n][b % B.n];
      R.mul[a][b] = A.mul[a / B.n][b / B.n] * B.n + B.mul[a % B.n][b % B.n];
    }
  return R;
}

FinRing ring_from_f2_matrices(const std::string& name, int d,
                              const std::vector<std::vector<int>>& basis) {
  if (d < 1 || d > 5) throw std::runtime_error("matrix dimension out of range");
  auto pack = [&](const std::vector<int>& m) {
    std::uint32_t w = 0;
    for (int k = 0; k < d * d; ++k)
      if (m[k] & 1) w |= 1u << k;
    return w;
  };
  auto matmul = [&](std::uint32_t a, std::uint32_t b) {
    std::uint32_t out = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        int s = 0;
        for (int k = 0; k < d; ++k)
          s ^= (a >> (i * d + k) & 1u) & (b >> (k * d + j) & 1u);
        if (s) out |= 1u << (i * d + j);
      }
    return out;
  };
  // additive (xor) span of the basis matrices
  std::vector<std::uint32_t> span{0};
  for (const auto& m : basis) {
    std::uint32_t w = pack(m);
    if (static_cast<int>(m.size()) != d * d)
      throw std::runtime_error("basis matrix has wrong shape");
    if (std::find(span.begin(), span.end(), w) != span.end()) continue;
    std::vector<std::uint32_t> next = span;
    for (std::uint32_t s : span) next.push_back(s ^ w);
    span = std::move(next);
  }
  std::sort(span.begin(), span.end());
  int n = static_cast<int>(span.size());
  if (n > kMaxRingSize) throw std::runtime_error("matrix span too large");
  auto idx = [&](std::uint32_t w) {
    auto it = std::lower_bound(span.begin(), span.end(), w);
    if (it == span.end() || *it != w)
      throw std::runtime_error("span not closed under multiplication");
    return static_cast<int>(it - span.begin());
  };
  FinRing R{name, n, {}, {}, 0};
  R.add.assign(n, std::vector<int>(n));
  R.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      R.add[a][b] = idx(span[a] ^ span[b]);
      R.mul[a][b] = idx(matmul(span[a], span[b]));
    }
  return R;
}

std::optional<int> unit_of(const FinRing& R) {
  for (int e = 0; e < R.n; ++e) {
    bool ok = true;
    for (int x = 0; x < R.n && ok; ++x)
      if (R.mul[e][x] != x || R.mul[x][e] != x) ok = false;
    if (ok) return e;
  }
  return std::nullopt;
}

ElemSet annihilator(const FinRing& R) {
  ElemSet out = 0;
  for (int x = 0; x < R.n; ++x) {
    bool kills = true;
    for (int r = 0; r < R.n && kills; ++r)
      if (R.mul[x][r] != R.zero || R.mul[r][x] != R.zero) kills = false;
    if (kills) out |= 1u << x;
  }
  return out;
}

bool is_non_degenerate(const FinRing& R) {
  return annihilator(R) == (1u << R.zero);
}

bool has_local_units(const FinRing& R) {
  for (int x = 0; x < R.n; ++x) {
    bool found = false;
    for (int e = 0; e < R.n && !found; ++e)
      if (R.mul[e][x] == x && R.mul[x][e] == x) found = true;
    if (!found) return false;
  }
  return true;
}

bool has_common_local_unit(const FinRing& R) { return unit_of(R).has_value(); }

bool is_ideal(const FinRing& R, ElemSet I) {
  if (!(I >> R.zero & 1u)) return false;
  for (int a = 0; a < R.n; ++a) {
    if (!(I >> a & 1u)) continue;
    for (int b = 0; b < R.n; ++b) {
      if ((I >> b & 1u) && !(I >> R.add[a][b] & 1u)) return false;
      if (!(I >> R.mul[a][b] & 1u) || !(I >> R.mul[b][a] & 1u)) return false;
    }
  }
  return true;
}

std::vector<ElemSet> ideals(const FinRing& R) {
  std::vector<ElemSet> out;
  for (ElemSet I = 0; I < (1u << R.n); ++I)
    if (is_ideal(R, I)) out.push_back(I);
  return out;
}

bool is_essential_ideal(const FinRing& R, ElemSet I) {
  if (!is_ideal(R, I)) return false;
  ElemSet triv = 1u << R.zero;
  for (ElemSet J : ideals(R))
    if (J != triv && (I & J) == triv) return false;
  return true;
}

FinPoset ideal_lattice(const FinRing& R) {
  std::vector<ElemSet> is = ideals(R);
  FinPoset P{R.name + " ideals", static_cast<int>(is.size()), {}};
  P.leq.assign(P.n, std::vector<bool>(P.n, false));
  for (int i = 0; i < P.n; ++i)
    for (int j = 0; j < P.n; ++j) P.leq[i][j] = (is[i] & ~is[j]) == 0;
  return P;
}

std::optional<ElemSet> pseudocomplement(const FinRing& R, ElemSet I) {
  if (!is_ideal(R, I)) throw std::runtime_error("not an ideal");
  ElemSet triv = 1u << R.zero;
  std::vector<ElemSet> cands;
  for (ElemSet J : ideals(R))
    if ((I & J) == triv) cands.push_back(J);
  for (ElemSet top : cands) {
    bool biggest = true;
    for (ElemSet J : cands)
      if ((J & ~top) != 0) { biggest = false; break; }
    if (biggest) return top;
  }
  return std::nullopt;
}

FinRing subring(const FinRing& R, ElemSet S, std::vector<int>* incl) {
  std::vector<int> elems;
  for (int x = 0; x < R.n; ++x)
    if (S >> x & 1u) elems.push_back(x);
  std::vector<int> pos(R.n, -1);
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  if (pos[R.zero] < 0) throw std::runtime_error("subset misses zero");
  int n = static_cast<int>(elems.size());
  FinRing out{R.name + "|sub", n, {}, {}, pos[R.zero]};
  out.add.assign(n, std::vector<int>(n));
  out.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int s = R.add[elems[a]][elems[b]], p = R.mul[elems[a]][elems[b]];
      if (pos[s] < 0 || pos[p] < 0) throw std::runtime_error("subset not closed");
      out.add[a][b] = pos[s];
      out.mul[a][b] = pos[p];
    }
  if (incl) *incl = elems;
  return out;
}

FinRing quotient_ring(const FinRing& R, ElemSet I, std::vector<int>* proj) {
  if (!is_ideal(R, I)) throw std::runtime_error("not an ideal");
  // class of a = { a + i : i in I }; representative = its least element
  std::vector<int> rep(R.n);
  for (int a = 0; a < R.n; ++a) {
    int best = a;
    for (int i = 0; i < R.n; ++i)
      if ((I >> i & 1u)) best = std::min(best, R.add[a][i]);
    rep[a] = best;
  }
  std::vector<int> reps;
  for (int a = 0; a < R.n; ++a)
    if (rep[a] == a) reps.push_back(a);
  std::vector<int> cls(R.n);
  for (int a = 0; a < R.n; ++a)
    cls[a] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), rep[a]) -
                              reps.begin());
  int n = static_cast<int>(reps.size());
  FinRing out{R.name + "/I", n, {}, {}, cls[R.zero]};
  out.add.assign(n, std::vector<int>(n));
  out.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      out.add[a][b] = cls[R.add[reps[a]][reps[b]]];
      out.mul[a][b] = cls[R.mul[reps[a]][reps[b]]];
    }
  if (proj) *proj = cls;
  return out;
}

bool is_ring_hom(const RingHom& f) {
  const FinRing &A = *f.src, &B = *f.tgt;
  if (static_cast<int>(f.val.size()) != A.n) return false;
  for (int v : f.val)
    if (v < 0 || v >= B.n) return false;
  if (f.val[A.zero] != B.zero) return false;
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b) {
      if (f.val[A.add[a][b]] != B.add[f.val[a]][f.val[b]]) return false;
      if (f.val[A.mul[a][b]] != B.mul[f.val[a]][f.val[b]]) return false;
    }
  return true;
}

bool is_injective_hom(const RingHom& f) {
  std::vector<int> v = f.val;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool is_unital_hom(const RingHom& f) {
  auto ua = unit_of(*f.src), ub = unit_of(*f.tgt);
  return ua && ub && f.val[*ua] == *ub;
}

ElemSet hom_image(const RingHom& f) {
  ElemSet out = 0;
  for (int v : f.val) out |= 1u << v;
  return out;
}

namespace {

// additive span of a generating set of elements
ElemSet add_span(const FinRing& R, ElemSet gens) {
  ElemSet span = 1u << R.zero;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < R.n; ++a) {
      if (!(span >> a & 1u) && !(gens >> a & 1u)) continue;
      for (int b = 0; b < R.n; ++b) {
        if (!(span >> b & 1u) && !(gens >> b & 1u)) continue;
        int s = R.add[a][b];
        if (!((span | gens) >> s & 1u)) { gens |= 1u << s; grew = true; }
      }
    }
  }
  return span | gens;
}

// greedy additive generators with, per element, a one-step expression
// elem = prev + gens[gi] used to rebuild additive maps from generator images
struct AddGens {
  std::vector<int> gens;
  std::vector<int> order;                    // discovery order, zero first
  std::vector<std::pair<int, int>> expr;     // elem -> (prev, gen index)
};

AddGens additive_generators(const FinRing& R) {
  AddGens g;
  g.expr.assign(R.n, {-1, -1});
  std::vector<bool> in(R.n, false);
  in[R.zero] = true;
  g.order.push_back(R.zero);
  while (static_cast<int>(g.order.size()) < R.n) {
    int pick = -1;
    for (int x = 0; x < R.n && pick < 0; ++x)
      if (!in[x]) pick = x;
    int gi = static_cast<int>(g.gens.size());
    g.gens.push_back(pick);
    in[pick] = true;
    g.expr[pick] = {R.zero, gi};
    g.order.push_back(pick);
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t k = 0; k < g.order.size(); ++k)
        for (size_t j = 0; j < g.gens.size(); ++j) {
          int t = R.add[g.order[k]][g.gens[j]];
          if (!in[t]) {
            in[t] = true;
            g.expr[t] = {g.order[k], static_cast<int>(j)};
            g.order.push_back(t);
            grew = true;
          }
        }
    }
  }
  return g;
}

// all additive (group) homomorphisms A -> B as value tables
std::vector<std::vector<int>> additive_maps(const FinRing& A, const FinRing& B) {
  AddGens g = additive_generators(A);
  int k = static_cast<int>(g.gens.size());
  std::vector<std::vector<int>> out;
  std::vector<int> img(k, 0);
  while (true) {
    std::vector<int> f(A.n, -1);
    f[A.zero] = B.zero;
    for (int e : g.order) {
      if (e == A.zero) continue;
      auto [prev, gi] = g.expr[e];
      f[e] = B.add[f[prev]][img[gi]];
    }
    bool ok = true;
    for (int a = 0; a < A.n && ok; ++a)
      for (int b = 0; b < A.n && ok; ++b)
        if (f[A.add[a][b]] != B.add[f[a]][f[b]]) ok = false;
    if (ok) out.push_back(std::move(f));
    int i = k - 1;
    while (i >= 0 && img[i] == B.n - 1) img[i--] = 0;
    if (i < 0) break;
    ++img[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_non_degenerate_hom(const RingHom& f) {
  const FinRing& B = *f.tgt;
  ElemSet left = 0, right = 0;
  for (int v : f.val)
    for (int b = 0; b < B.n; ++b) {
      left |= 1u << B.mul[v][b];
      right |= 1u << B.mul[b][v];
    }
  ElemSet full = (1u << B.n) - 1;
  return add_span(B, left) == full && add_span(B, right) == full;
}

std::vector<std::vector<int>> enumerate_ring_homs(const FinRing& A, const FinRing& B,
                                                  bool unital_only) {
  auto ua = unit_of(A), ub = unit_of(B);
  std::vector<std::vector<int>> out;
  for (auto& f : additive_maps(A, B)) {
    bool ok = true;
    for (int a = 0; a < A.n && ok; ++a)
      for (int b = 0; b < A.n && ok; ++b)
        if (f[A.mul[a][b]] != B.mul[f[a]][f[b]]) ok = false;
    if (!ok) continue;
    if (unital_only && !(ua && ub && f[*ua] == *ub)) continue;
    out.push_back(f);
  }
  return out;
}

MultiplierRing multiplier_ring(const FinRing& R) {
  if (!is_non_degenerate(R))
    throw std::runtime_error("degenerate ring has no faithful multiplier embedding");
  int n = R.n;
  std::vector<std::vector<int>> endos = additive_maps(R, R);
  std::vector<std::vector<int>> lams, rhos;
  for (auto& f : endos) {
    bool lam = true, rho = true;
    for (int a = 0; a < n && (lam || rho); ++a)
      for (int b = 0; b < n && (lam || rho); ++b) {
        if (f[R.mul[a][b]] != R.mul[f[a]][b]) lam = false;
        if (f[R.mul[a][b]] != R.mul[a][f[b]]) rho = false;
      }
    if (lam) lams.push_back(f);
    if (rho) rhos.push_back(f);
  }
  MultiplierRing M;
  for (auto& lam : lams)
    for (auto& rho : rhos) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
          if (R.mul[a][lam[b]] != R.mul[rho[a]][b]) ok = false;
      if (ok) M.pairs.emplace_back(lam, rho);
    }
  std::sort(M.pairs.begin(), M.pairs.end());
  int m = static_cast<int>(M.pairs.size());
  if (m > kMaxRingSize) throw std::runtime_error("multiplier ring carrier too large");
  auto pidx = [&](const std::pair<std::vector<int>, std::vector<int>>& p) {
    auto it = std::lower_bound(M.pairs.begin(), M.pairs.end(), p);
    if (it == M.pairs.end() || *it != p)
      throw std::runtime_error("multiplier pairs not closed");
    return static_cast<int>(it - M.pairs.begin());
  };
  FinRing& MR = M.ring;
  MR.name = "M(" + R.name + ")";
  MR.n = m;
  MR.add.assign(m, std::vector<int>(m));
  MR.mul.assign(m, std::vector<int>(m));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      std::pair<std::vector<int>, std::vector<int>> s{std::vector<int>(n),
                                                      std::vector<int>(n)};
      std::pair<std::vector<int>, std::vector<int>> t{std::vector<int>(n),
                                                      std::vector<int>(n)};
      for (int x = 0; x < n; ++x) {
        s.first[x] = R.add[M.pairs[p].first[x]][M.pairs[q].first[x]];
        s.second[x] = R.add[M.pairs[p].second[x]][M.pairs[q].second[x]];
        // left parts compose forwards, right parts backwards
        t.first[x] = M.pairs[p].first[M.pairs[q].first[x]];
        t.second[x] = M.pairs[q].second[M.pairs[p].second[x]];
      }
      MR.add[p][q] = pidx(s);
      MR.mul[p][q] = pidx(t);
    }
  for (int p = 0; p < m; ++p) {
    bool z = true;
    for (int q = 0; q < m && z; ++q)
      if (MR.add[p][q] != q) z = false;
    if (z) { MR.zero = p; break; }
  }
  M.embedding.resize(n);
  for (int x = 0; x < n; ++x) {
    std::pair<std::vector<int>, std::vector<int>> p{std::vector<int>(n),
                                                    std::vector<int>(n)};
    for (int a = 0; a < n; ++a) {
      p.first[a] = R.mul[x][a];
      p.second[a] = R.mul[a][x];
    }
    M.embedding[x] = pidx(p);
  }
  return M;
}

RingHom extend_multiplier_hom(const RingHom& f, const MultiplierRing& MA,
                              const MultiplierRing& MB) {
  if (!is_ring_hom(f) || !is_non_degenerate_hom(f))
    throw std::runtime_error("can only extend non-degenerate homomorphisms");
  const FinRing &A = *f.src, &B = *f.tgt;
  RingHom out{&MA.ring, &MB.ring, std::vector<int>(MA.ring.n, -1)};
  for (int p = 0; p < MA.ring.n; ++p) {
    const auto& [lam, rho] = MA.pairs[p];
    int hit = -1;
    for (int q = 0; q < MB.ring.n; ++q) {
      const auto& [lam2, rho2] = MB.pairs[q];
      bool ok = true;
      for (int a = 0; a < A.n && ok; ++a)
        for (int b = 0; b < B.n && ok; ++b) {
          if (lam2[B.mul[f.val[a]][b]] != B.mul[f.val[lam[a]]][b]) ok = false;
          if (rho2[B.mul[b][f.val[a]]] != B.mul[b][f.val[rho[a]]]) ok = false;
        }
      if (ok) {
        if (hit >= 0) throw std::runtime_error("extension not unique");
        hit = q;
      }
    }
    if (hit < 0) throw std::runtime_error("no extension at a multiplier");
    out.val[p] = hit;
  }
  if (!is_ring_hom(out) || !is_unital_hom(out))
    throw std::runtime_error("extension is not a unital homomorphism");
  for (int a = 0; a < A.n; ++a)
    if (out.val[MA.embedding[a]] != MB.embedding[f.val[a]])
      throw std::runtime_error("extension does not restrict to the base map");
  return out;
}

RingHom lift_ideal_embedding(const RingHom& f, const MultiplierRing& MA,
                             const MultiplierRing& MB) {
  if (!is_ring_hom(f) || !is_injective_hom(f))
    throw std::runtime_error("can only lift along injective homomorphisms");
  const FinRing &A = *f.src, &B = *f.tgt;
  if (!is_ideal(B, hom_image(f)))
    throw std::runtime_error("image is not an ideal");
  std::vector<int> pre(B.n, -1);
  for (int a = 0; a < A.n; ++a) pre[f.val[a]] = a;
  RingHom out{&MB.ring, &MA.ring, std::vector<int>(MB.ring.n, -1)};
  for (int q = 0; q < MB.ring.n; ++q) {
    const auto& [lam, rho] = MB.pairs[q];
    // restrict (λ, ρ) along f; the image being an ideal keeps it inside
    std::pair<std::vector<int>, std::vector<int>> p{std::vector<int>(A.n),
                                                    std::vector<int>(A.n)};
    for (int a = 0; a < A.n; ++a) {
      int l = pre[lam[f.val[a]]], r = pre[rho[f.val[a]]];
      if (l < 0 || r < 0) throw std::runtime_error("multiplier leaves the image");
      p.first[a] = l;
      p.second[a] = r;
    }
    auto it = std::lower_bound(MA.pairs.begin(), MA.pairs.end(), p);
    if (it == MA.pairs.end() || *it != p)
      throw std::runtime_error("restriction is not a multiplier");
    out.val[q] = static_cast<int>(it - MA.pairs.begin());
  }
  if (!is_ring_hom(out) || !is_unital_hom(out))
    throw std::runtime_error("lift is not a unital homomorphism");
  for (int a = 0; a < A.n; ++a)
    if (out.val[MB.embedding[f.val[a]]] != MA.embedding[a])
      throw std::runtime_error("lift does not invert the base embedding");
  return out;
}

Report check_quotient_kernel(const FinRing& R, ElemSet I) {
  Report r;
  if (!is_ideal(R, I)) { r.fail("not an ideal"); return r; }
  auto perp = pseudocomplement(R, I);
  if (!perp) { r.fail("no pseudocomplement"); return r; }
  std::vector<int> incl, proj;
  FinRing sub = subring(R, I, &incl);
  FinRing quo = quotient_ring(R, *perp, &proj);
  // ξ = projection ∘ inclusion
  RingHom xi{&sub, &quo, std::vector<int>(sub.n)};
  for (int a = 0; a < sub.n; ++a) xi.val[a] = proj[incl[a]];
  if (!is_ring_hom(xi)) r.fail("composite is not a homomorphism");
  if (!is_injective_hom(xi)) r.fail("composite is not injective");
  ElemSet img = hom_image(xi);
  if (!is_ideal(quo, img)) r.fail("image is not an ideal");
  else if (!is_essential_ideal(quo, img)) r.fail("image is not essential");
  return r;
}

Report check_trivial_complement(const FinRing& R, ElemSet I) {
  Report r;
  if (!is_ideal(R, I)) { r.fail("not an ideal"); return r; }
  ElemSet triv = 1u << R.zero;
  bool a1 = is_essential_ideal(R, I);
  // (2) whenever the composite I -> R -> R/K is injective with ideal image,
  // the projection itself is injective
  bool a2 = true;
  std::vector<int> incl;
  FinRing sub = subring(R, I, &incl);
  for (ElemSet K : ideals(R)) {
    std::vector<int> proj;
    FinRing quo = quotient_ring(R, K, &proj);
    RingHom xi{&sub, &quo, std::vector<int>(sub.n)};
    for (int a = 0; a < sub.n; ++a) xi.val[a] = proj[incl[a]];
    if (is_injective_hom(xi) && is_ideal(quo, hom_image(xi)) && K != triv)
      a2 = false;
  }
  // (3) every ideal meeting I trivially is trivial
  bool a3 = true;
  for (ElemSet J : ideals(R))
    if ((J & I) == triv && J != triv) a3 = false;
  if (a1 != a2 || a2 != a3)
    r.fail("assertions disagree: essential=" + std::to_string(a1) +
           " quotient=" + std::to_string(a2) + " orthogonal=" + std::to_string(a3));
  return r;
}

int RingUniverse::find_arrow(int src, int tgt, const std::vector<int>& val) const {
  for (int a : cat.hom(src, tgt))
    if (homs[a] == val) return a;
  return -1;
}

std::unique_ptr<RingUniverse> materialize_ring_universe(
    const std::vector<FinRing>& rings, int arrow_budget) {
  auto u = std::make_unique<RingUniverse>();
  for (const FinRing& R : rings) {
    Report v = validate_ring(R);
    if (!v.ok()) throw std::runtime_error("invalid ring " + R.name + ": " + v.issues.front());
    bool dup = false;
    for (const FinRing& S : u->objects)
      if (S.add == R.add && S.mul == R.mul) { dup = true; break; }
    if (!dup) u->objects.push_back(R);
  }
  int n = static_cast<int>(u->objects.size());
  for (const FinRing& R : u->objects) u->cat.add_object(R.name);
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> lookup;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& f : enumerate_ring_homs(u->objects[i], u->objects[j])) {
        if (static_cast<int>(u->homs.size()) >= arrow_budget)
          throw std::runtime_error("arrow budget exceeded");
        int a = u->cat.add_arrow(i, j);
        lookup[{{i, j}, f}] = a;
        u->homs.push_back(std::move(f));
      }
  for (int i = 0; i < n; ++i) {
    std::vector<int> id(u->objects[i].n);
    std::iota(id.begin(), id.end(), 0);
    u->cat.set_identity(i, lookup.at({{i, i}, id}));
  }
  for (int g = 0; g < u->cat.num_arrows(); ++g)
    for (int f = 0; f < u->cat.num_arrows(); ++f) {
      if (u->cat.tgt(f) != u->cat.src(g)) continue;
      std::vector<int> comp(u->homs[f].size());
      for (size_t x = 0; x < comp.size(); ++x) comp[x] = u->homs[g][u->homs[f][x]];
      u->cat.set_compose(g, f, lookup.at({{u->cat.src(f), u->cat.tgt(g)}, comp}));
    }
  u->cat.finalize(arrow_budget);
  u->positives.assign(u->cat.num_arrows(), false);
  u->H.assign(u->cat.num_arrows(), false);
  for (int a = 0; a < u->cat.num_arrows(); ++a) {
    RingHom f{&u->objects[u->cat.src(a)], &u->objects[u->cat.tgt(a)], u->homs[a]};
    if (!is_injective_hom(f)) continue;
    ElemSet img = hom_image(f);
    u->positives[a] = is_ideal(*f.tgt, img);
    u->H[a] = u->positives[a] && is_essential_ideal(*f.tgt, img);
  }
  return u;
}

std::unique_ptr<RingCapacitor> build_ring_capacitor(
    const std::vector<FinRing>& rings, int arrow_budget) {
  // input list, exact-table deduplicated, then closed under multiplier rings
  std::vector<FinRing> objs;
  for (const FinRing& R : rings) {
    bool dup = false;
    for (const FinRing& S : objs)
      if (S.add == R.add && S.mul == R.mul) dup = true;
    if (!dup) objs.push_back(R);
  }
  for (const FinRing& R : objs)
    if (!is_non_degenerate(R))
      throw std::runtime_error("degenerate ring " + R.name + " has no completion here");
  int base = static_cast<int>(objs.size());
  std::vector<int> unit_tgt(base, -1);
  std::vector<std::vector<int>> unit_val(base);
  for (int i = 0; i < base; ++i) {
    if (unit_of(objs[i])) {
      unit_tgt[i] = i;
      unit_val[i].resize(objs[i].n);
      std::iota(unit_val[i].begin(), unit_val[i].end(), 0);
      continue;
    }
    MultiplierRing M = multiplier_ring(objs[i]);
    // reuse an isomorphic copy already in the universe when one exists
    int found = -1;
    std::vector<int> iso;
    for (int j = 0; j < static_cast<int>(objs.size()) && found < 0; ++j) {
      if (objs[j].n != M.ring.n) continue;
      for (auto& f : enumerate_ring_homs(M.ring, objs[j], true)) {
        RingHom h{&M.ring, &objs[j], f};
        if (is_injective_hom(h)) { found = j; iso = f; break; }
      }
    }
    if (found < 0) {
      found = static_cast<int>(objs.size());
      objs.push_back(M.ring);
      iso.resize(M.ring.n);
      std::iota(iso.begin(), iso.end(), 0);
    }
    unit_tgt[i] = found;
    unit_val[i].resize(objs[i].n);
    for (int x = 0; x < objs[i].n; ++x) unit_val[i][x] = iso[M.embedding[x]];
  }
  auto cap = std::make_unique<RingCapacitor>();
  cap->u = materialize_ring_universe(objs, arrow_budget);
  RingUniverse& u = *cap->u;
  int n = static_cast<int>(u.objects.size());
  // E: the unital rings with the unital homomorphisms
  std::vector<int> base_to_e(n, -1);
  std::vector<std::optional<int>> units(n);
  for (int i = 0; i < n; ++i) {
    units[i] = unit_of(u.objects[i]);
    if (!units[i]) continue;
    base_to_e[i] = cap->E.add_object(u.objects[i].name);
    cap->e_obj.push_back(i);
  }
  std::map<int, int> base_arr_to_e;
  for (int a = 0; a < u.cat.num_arrows(); ++a) {
    int s = u.cat.src(a), t = u.cat.tgt(a);
    if (base_to_e[s] < 0 || base_to_e[t] < 0) continue;
    if (u.homs[a][*units[s]] != *units[t]) continue;
    int e = cap->E.add_arrow(base_to_e[s], base_to_e[t]);
    base_arr_to_e[a] = e;
    cap->e_arr.push_back(a);
  }
  for (int i = 0; i < n; ++i)
    if (base_to_e[i] >= 0)
      cap->E.set_identity(base_to_e[i], base_arr_to_e.at(u.cat.identity(i)));
  for (int g = 0; g < static_cast<int>(cap->e_arr.size()); ++g)
    for (int f = 0; f < static_cast<int>(cap->e_arr.size()); ++f) {
      if (cap->E.tgt(f) != cap->E.src(g)) continue;
      cap->E.set_compose(g, f,
                         base_arr_to_e.at(u.cat.compose(cap->e_arr[g], cap->e_arr[f])));
    }
  cap->E.finalize(arrow_budget);

  cap->spec.C = &u.cat;
  cap->spec.positive = u.positives;
  cap->spec.H = u.H;
  cap->spec.E = &cap->E;
  cap->spec.U.dom = &cap->E;
  cap->spec.U.cod = &u.cat;
  cap->spec.U.obj = cap->e_obj;
  cap->spec.U.arr = cap->e_arr;
  cap->spec.family.unit.resize(n);
  cap->spec.family.object.resize(n);
  for (int i = 0; i < n; ++i) {
    int tgt = i < base ? unit_tgt[i] : i;
    std::vector<int> val;
    if (i < base) val = unit_val[i];
    else {
      val.resize(u.objects[i].n);
      std::iota(val.begin(), val.end(), 0);
    }
    int a = u.find_arrow(i, tgt, val);
    if (a < 0) throw std::runtime_error("completion unit is not a homomorphism");
    cap->spec.family.unit[i] = a;
    cap->spec.family.object[i] = base_to_e[tgt];
  }
  return cap;
}

}  // namespace polcat
