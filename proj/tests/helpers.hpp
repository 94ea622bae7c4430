#pragma once
// Shared builders for the test suite: small hand-made categories and the
// bundled instance universes.

#include "polcat/boolean.hpp"
#include "polcat/posets.hpp"
#include "polcat/rings.hpp"

namespace testutil {

using namespace polcat;

// A poset as a thin category: one arrow per related pair.
inline FiniteCategory thin_category(const FinPoset& P) {
  FiniteCategory C;
  for (int i = 0; i < P.n; ++i) C.add_object("p" + std::to_string(i));
  std::vector<std::vector<int>> arr(P.n, std::vector<int>(P.n, -1));
  for (int i = 0; i < P.n; ++i)
    for (int j = 0; j < P.n; ++j)
      if (P.le(i, j)) arr[i][j] = C.add_arrow(i, j);
  for (int i = 0; i < P.n; ++i) C.set_identity(i, arr[i][i]);
  for (int i = 0; i < P.n; ++i)
    for (int j = 0; j < P.n; ++j)
      for (int k = 0; k < P.n; ++k)
        if (P.le(i, j) && P.le(j, k)) C.set_compose(arr[j][k], arr[i][j], arr[i][k]);
  C.finalize();
  return C;
}

inline FinPoset chain(int n) {
  FinPoset P{"chain" + std::to_string(n), n, {}};
  P.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) P.leq[i][j] = true;
  return P;
}

inline FinPoset antichain(int n) {
  FinPoset P{"antichain" + std::to_string(n), n, {}};
  P.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) P.leq[i][i] = true;
  return P;
}

// 0 < {1, 2} < 3
inline FinPoset diamond() {
  FinPoset P{"diamond", 4, {}};
  P.leq.assign(4, std::vector<bool>(4, false));
  for (int i = 0; i < 4; ++i) P.leq[i][i] = true;
  P.leq[0][1] = P.leq[0][2] = P.leq[0][3] = true;
  P.leq[1][3] = P.leq[2][3] = true;
  return P;
}

// The column ring over the two-element field: (x, y)(u, v) = (xu, yu).
inline FinRing column_ring() {
  return ring_from_f2_matrices("C2", 2, {{1, 0, 0, 0}, {0, 0, 1, 0}});
}

inline std::vector<FinBoolAlg> ba_universe_entries() {
  return {from_atoms(1), from_atoms(2), from_atoms(3)};
}

inline std::vector<FinRing> ring_universe_entries() {
  FinRing f2 = ring_zn(2);
  f2.name = "F2";
  FinRing f22 = ring_product(ring_zn(2), ring_zn(2));
  f22.name = "F2xF2";
  return {f2, f22, column_ring()};
}

}  // namespace testutil
