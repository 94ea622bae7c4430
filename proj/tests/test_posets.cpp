#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace polcat;
using namespace testutil;

TEST_CASE("poset validation") {
  CHECK(validate_poset(diamond()).ok());
  CHECK(validate_poset(chain(3)).ok());
  SUBCASE("broken antisymmetry is reported") {
    FinPoset P = antichain(2);
    P.leq[0][1] = P.leq[1][0] = true;
    CHECK_FALSE(validate_poset(P).ok());
  }
  SUBCASE("missing reflexivity is reported") {
    FinPoset P = chain(2);
    P.leq[0][0] = false;
    CHECK_FALSE(validate_poset(P).ok());
  }
}

TEST_CASE("bounds in the diamond") {
  FinPoset D = diamond();
  CHECK(up_set(D, 0b0110) == 0b1000);
  CHECK(down_set(D, 0b0110) == 0b0001);
  CHECK(sup(D, 0b0110) == 3);
  CHECK(inf(D, 0b0110) == 0);
  SUBCASE("empty set: minimum as sup, maximum as inf") {
    CHECK(sup(D, 0) == 0);
    CHECK(inf(D, 0) == 3);
  }
  SUBCASE("antichain without joins") {
    FinPoset A = antichain(2);
    CHECK_FALSE(sup(A, 0b11).has_value());
    CHECK_FALSE(inf(A, 0b11).has_value());
  }
}

TEST_CASE("map predicates") {
  FinPoset A = antichain(2), C = chain(2), D = diamond();
  SUBCASE("identity is a dense embedding") {
    MonotoneMap id{&D, &D, {0, 1, 2, 3}};
    CHECK(is_monotone(id));
    CHECK(is_embedding(id));
    CHECK(is_dense(id));
  }
  SUBCASE("injection of an antichain into a chain is monotone, no embedding") {
    MonotoneMap inj{&A, &C, {0, 1}};
    CHECK(is_monotone(inj));
    CHECK_FALSE(is_embedding(inj));
  }
  SUBCASE("the middle layer of the diamond is an embedding, dense") {
    MonotoneMap mid{&A, &D, {1, 2}};
    CHECK(is_embedding(mid));
    CHECK(is_join_dense(mid));
    CHECK(is_meet_dense(mid));
    CHECK(is_dense(mid));
  }
  SUBCASE("a principal embedding into the diamond is not dense") {
    MonotoneMap bot{&C, &D, {0, 1}};
    CHECK(is_embedding(bot));
    CHECK_FALSE(is_dense(bot));
  }
  SUBCASE("reversing a chain is not monotone") {
    MonotoneMap rev{&C, &C, {1, 0}};
    CHECK_FALSE(is_monotone(rev));
  }
}

TEST_CASE("completion by cuts") {
  SUBCASE("chains are complete and self-completing") {
    for (int n = 1; n <= 4; ++n) {
      FinPoset C = chain(n);
      CHECK(is_complete_lattice(C));
      MacNeilleLattice m = macneille(C);
      CHECK(m.lattice.n == n);
    }
  }
  SUBCASE("the 2-antichain completes to the 4-element lattice") {
    FinPoset A = antichain(2);
    CHECK_FALSE(is_complete_lattice(A));
    MacNeilleLattice m = macneille(A);
    CHECK(m.lattice.n == 4);
    CHECK(is_complete_lattice(m.lattice));
  }
  SUBCASE("the n-antichain completes to n + 2 cuts") {
    for (int n = 2; n <= 4; ++n)
      CHECK(macneille(antichain(n)).lattice.n == n + 2);
  }
  SUBCASE("the unit is a dense embedding into a complete lattice") {
    for (const FinPoset& P : all_posets_up_to(3)) {
      MacNeilleLattice m = macneille(P);
      CHECK(is_complete_lattice(m.lattice));
      std::vector<int> val(m.unit.begin(), m.unit.end());
      MonotoneMap eta{&P, &m.lattice, val};
      CHECK(is_monotone(eta));
      CHECK(is_embedding(eta));
      CHECK(is_dense(eta));
    }
  }
}

TEST_CASE("continuity of monotone maps") {
  FinPoset A = antichain(2), D = diamond();
  SUBCASE("identities and constants are continuous") {
    MonotoneMap id{&D, &D, {0, 1, 2, 3}};
    CHECK(is_continuous_map(id));
    MonotoneMap cst{&D, &D, {1, 1, 1, 1}};
    CHECK(is_continuous_map(cst));
  }
  SUBCASE("between complete lattices: continuity == preserving bounds") {
    for (const auto& val : enumerate_monotone_maps(D, D)) {
      MonotoneMap f{&D, &D, val};
      CHECK(is_continuous_map(f) == preserves_nonempty_bounds(f));
    }
  }
  SUBCASE("every map out of the 2-antichain is continuous") {
    for (const auto& val : enumerate_monotone_maps(A, D)) {
      MonotoneMap f{&A, &D, val};
      CHECK(is_continuous_map(f));
    }
  }
  SUBCASE("the extension commutes with the units") {
    MacNeilleLattice ma = macneille(A), md = macneille(D);
    for (const auto& val : enumerate_monotone_maps(A, D)) {
      MonotoneMap f{&A, &D, val};
      MonotoneMap ext = extend_to_macneille(f, ma, md);
      CHECK(is_monotone(ext));
      CHECK(preserves_nonempty_bounds(ext));
      for (int p = 0; p < A.n; ++p)
        CHECK(ext.val[ma.unit[p]] == md.unit[f.val[p]]);
    }
  }
  SUBCASE("a non-continuous map is rejected by the extension") {
    FinPoset V{"vee", 3, {}};
    V.leq.assign(3, std::vector<bool>(3, false));
    for (int i = 0; i < 3; ++i) V.leq[i][i] = true;
    V.leq[0][1] = V.leq[0][2] = true;  // 0 below the incomparable 1, 2
    FinPoset C2 = chain(2);
    MacNeilleLattice mv = macneille(V), mc = macneille(C2);
    bool found_noncontinuous = false;
    for (const auto& val : enumerate_monotone_maps(V, C2)) {
      MonotoneMap f{&V, &C2, val};
      if (!is_continuous_map(f)) {
        found_noncontinuous = true;
        CHECK_THROWS(extend_to_macneille(f, mv, mc));
      }
    }
    CHECK(found_noncontinuous);
  }
}

TEST_CASE("enumeration and canonical forms") {
  SUBCASE("monotone map counts") {
    CHECK(enumerate_monotone_maps(chain(2), chain(2)).size() == 3);
    CHECK(enumerate_monotone_maps(antichain(2), chain(2)).size() == 4);
    CHECK(enumerate_monotone_maps(chain(2), antichain(2)).size() == 2);
    // maps into a 2-chain correspond to up-sets; the diamond has six
    CHECK(enumerate_monotone_maps(diamond(), chain(2)).size() == 6);
  }
  SUBCASE("canonicalization is idempotent and relabel-invariant") {
    FinPoset D = diamond();
    FinPoset c1 = canonical_poset(D);
    CHECK(canonical_poset(c1).leq == c1.leq);
    // relabel: swap 0 and 3
    FinPoset R = D;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) R.leq[i][j] = D.le(3 - i, 3 - j);
    CHECK(canonical_poset(R).leq == c1.leq);
  }
  SUBCASE("isomorphism-class counts by size") {
    CHECK(all_posets_up_to(1).size() == 1);
    CHECK(all_posets_up_to(2).size() == 3);
    CHECK(all_posets_up_to(3).size() == 8);
    CHECK(all_posets_up_to(4).size() == 24);
  }
}

TEST_CASE("materialized universe invariants") {
  auto u = materialize_poset_universe(all_posets_up_to(2));
  CHECK(validate_category(u->cat).ok());
  CHECK(u->cat.num_arrows() == 20);
  for (int a = 0; a < u->cat.num_arrows(); ++a) {
    if (u->dense_embeddings[a]) CHECK(u->embeddings[a]);
    if (u->embeddings[a]) CHECK(is_monic(u->cat, a));
    CHECK(u->embeddings[a] == is_regular_monic(u->cat, a));
  }
  SUBCASE("duplicates and relabelings collapse to one object") {
    FinPoset again = antichain(2);
    again.name = "copy";
    auto v = materialize_poset_universe({antichain(2), again});
    CHECK(v->cat.num_objects() == 1);
  }
  SUBCASE("empty posets are rejected") {
    FinPoset empty{"empty", 0, {}};
    CHECK_THROWS(materialize_poset_universe({empty}));
  }
}

TEST_CASE("the instance capacitor closes under completion") {
  auto cap = build_poset_capacitor({antichain(2)});
  CHECK(cap->u->objects.size() == 2);
  CHECK(verify_capacitor(cap->spec).ok());
  SUBCASE("E holds the complete lattices with bound-preserving maps") {
    for (int eo = 0; eo < cap->E.num_objects(); ++eo)
      CHECK(is_complete_lattice(cap->u->objects[cap->e_obj[eo]]));
    for (int ea = 0; ea < cap->E.num_arrows(); ++ea) {
      int base = cap->e_arr[ea];
      MonotoneMap f{&cap->u->objects[cap->u->cat.src(base)],
                    &cap->u->objects[cap->u->cat.tgt(base)],
                    cap->u->maps[base]};
      CHECK(preserves_nonempty_bounds(f));
    }
  }
  SUBCASE("units are the cut-completion units") {
    for (int x = 0; x < cap->u->cat.num_objects(); ++x) {
      int unit = cap->spec.family.unit[x];
      CHECK(cap->u->dense_embeddings[unit]);
      CHECK(is_complete_lattice(
          cap->u->objects[cap->u->cat.tgt(unit)]));
    }
  }
}
