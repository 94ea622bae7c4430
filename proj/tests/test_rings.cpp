#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace polcat;
using namespace testutil;

TEST_CASE("ring construction and validation") {
  SUBCASE("cyclic rings") {
    for (int n = 2; n <= 8; ++n) {
      FinRing R = ring_zn(n);
      CHECK(validate_ring(R).ok());
      CHECK(unit_of(R) == 1);
      CHECK(R.neg(1) == n - 1);
    }
  }
  SUBCASE("products validate and multiply coordinatewise") {
    FinRing P = ring_product(ring_zn(2), ring_zn(3));
    CHECK(validate_ring(P).ok());
    CHECK(P.n == 6);
    CHECK(unit_of(P).has_value());
  }
  SUBCASE("the column ring is a nonunital four-element ring") {
    FinRing C = column_ring();
    CHECK(validate_ring(C).ok());
    CHECK(C.n == 4);
    CHECK_FALSE(unit_of(C).has_value());
    CHECK(is_non_degenerate(C));
    CHECK_FALSE(has_local_units(C));
  }
  SUBCASE("a non-closed matrix span is rejected") {
    // a single nilpotent off-diagonal matrix spans {0, E01}; closed.  The
    // identity alone is closed too.  Mixing E01 with E10 is not closed.
    CHECK_THROWS(ring_from_f2_matrices("bad", 2, {{0, 1, 0, 0}, {0, 0, 1, 0}}));
  }
  SUBCASE("unital rings have a common local unit") {
    CHECK(has_local_units(ring_zn(4)));
    CHECK(has_common_local_unit(ring_zn(4)));
    CHECK_FALSE(has_common_local_unit(column_ring()));
  }
}

TEST_CASE("annihilators and degeneracy") {
  SUBCASE("unital rings are non-degenerate") {
    CHECK(annihilator(ring_zn(4)) == 1u);  // just zero
    CHECK(is_non_degenerate(ring_zn(4)));
  }
  SUBCASE("a zero-multiplication ring is fully degenerate") {
    FinRing Z = ring_zn(2);
    Z.mul = {{0, 0}, {0, 0}};
    Z.name = "zero2";
    CHECK(validate_ring(Z).ok());
    CHECK(annihilator(Z) == 0b11u);
    CHECK_FALSE(is_non_degenerate(Z));
    CHECK_THROWS(multiplier_ring(Z));
  }
}

TEST_CASE("ideals, lattices, pseudocomplements") {
  FinRing F2 = ring_zn(2), F22 = ring_product(ring_zn(2), ring_zn(2));
  FinRing C = column_ring();
  SUBCASE("ideal counts") {
    CHECK(ideals(F2).size() == 2);
    CHECK(ideals(F22).size() == 4);
    CHECK(ideals(C).size() == 3);
    CHECK(ideals(ring_zn(4)).size() == 3);
    CHECK(ideals(ring_zn(8)).size() == 4);
  }
  SUBCASE("the whole ring is essential; proper factor ideals are not") {
    std::vector<ElemSet> is = ideals(F22);
    for (ElemSet I : is) {
      bool whole = I == (1u << F22.n) - 1;
      if (whole) CHECK(is_essential_ideal(F22, I));
      if (I != 1u && !whole) CHECK_FALSE(is_essential_ideal(F22, I));
    }
  }
  SUBCASE("in Z4 the proper nonzero ideal is essential") {
    for (ElemSet I : ideals(ring_zn(4)))
      if (I != 1u) CHECK(is_essential_ideal(ring_zn(4), I));
  }
  SUBCASE("the ideal lattice of F2xF2 is the 4-element lattice") {
    FinPoset L = ideal_lattice(F22);
    CHECK(L.n == 4);
    CHECK(is_complete_lattice(L));
  }
  SUBCASE("pseudocomplements in a product ring swap the factors") {
    std::vector<ElemSet> is = ideals(F22);
    for (ElemSet I : is) {
      auto pc = pseudocomplement(F22, I);
      REQUIRE(pc.has_value());
      // the pseudocomplement meets I only in zero
      CHECK((*pc & I) == 1u);
      if (I == 1u) CHECK(*pc == (1u << F22.n) - 1);
    }
  }
}

TEST_CASE("subrings and quotients") {
  FinRing F22 = ring_product(ring_zn(2), ring_zn(2));
  SUBCASE("the diagonal is a subring isomorphic to F2") {
    // elements of F2xF2: index of (a, b) is 2a + b under ring_product
    ElemSet diag = 0;
    for (int x = 0; x < F22.n; ++x)
      if (F22.mul[x][x] == x && F22.add[x][x] == F22.zero) diag |= 1u << x;
    std::vector<int> incl;
    FinRing D = subring(F22, diag, &incl);
    CHECK(validate_ring(D).ok());
    CHECK((int)incl.size() == D.n);
  }
  SUBCASE("quotient by a factor ideal recovers the other factor") {
    for (ElemSet I : ideals(F22)) {
      std::vector<int> proj;
      FinRing Q = quotient_ring(F22, I, &proj);
      CHECK(validate_ring(Q).ok());
      CHECK(Q.n * (int)__builtin_popcount(I) == F22.n);
      RingHom p{&F22, &Q, proj};
      CHECK(is_ring_hom(p));
    }
  }
}

TEST_CASE("homomorphism enumeration") {
  FinRing F2 = ring_zn(2), F22 = ring_product(ring_zn(2), ring_zn(2));
  FinRing C = column_ring();
  SUBCASE("hom counts between the instance objects") {
    CHECK(enumerate_ring_homs(F2, F2).size() == 2);
    CHECK(enumerate_ring_homs(F2, F22).size() == 4);
    CHECK(enumerate_ring_homs(F22, F2).size() == 3);
    CHECK(enumerate_ring_homs(F2, F2, true).size() == 1);
    CHECK(enumerate_ring_homs(F2, F22, true).size() == 1);
  }
  SUBCASE("every enumerated table is a homomorphism") {
    for (const auto& val : enumerate_ring_homs(F22, C)) {
      RingHom f{&F22, &C, val};
      CHECK(is_ring_hom(f));
    }
  }
  SUBCASE("injectivity and image classification") {
    int injective_ideal = 0;
    for (const auto& val : enumerate_ring_homs(F2, F22)) {
      RingHom f{&F2, &F22, val};
      if (is_injective_hom(f) && is_ideal(F22, hom_image(f))) ++injective_ideal;
    }
    CHECK(injective_ideal == 2);  // the two factor inclusions
  }
}

TEST_CASE("multiplier rings, brute golden values") {
  SUBCASE("unital rings are their own multiplier rings") {
    for (int n : {2, 3, 4, 8}) {
      MultiplierRing M = multiplier_ring(ring_zn(n));
      CHECK(M.ring.n == n);
      CHECK(unit_of(M.ring).has_value());
      // the embedding is a bijection
      CHECK((int)M.embedding.size() == n);
      std::vector<bool> hit(M.ring.n, false);
      for (int x : M.embedding) hit[x] = true;
      for (bool h : hit) CHECK(h);
    }
  }
  SUBCASE("the column ring has the 8-element multiplier ring") {
    MultiplierRing M = multiplier_ring(column_ring());
    CHECK(M.ring.n == 8);
    CHECK(unit_of(M.ring).has_value());
    CHECK(validate_ring(M.ring).ok());
    // the embedding is an injective hom with ideal, essential image
    FinRing base = column_ring();
    RingHom e{&base, &M.ring, M.embedding};
    CHECK(is_ring_hom(e));
    CHECK(is_injective_hom(e));
    ElemSet img = hom_image(e);
    CHECK(is_ideal(M.ring, img));
    CHECK(is_essential_ideal(M.ring, img));
  }
  SUBCASE("F2xF2 is its own multiplier ring") {
    MultiplierRing M = multiplier_ring(ring_product(ring_zn(2), ring_zn(2)));
    CHECK(M.ring.n == 4);
  }
}

TEST_CASE("extension and lifting of homomorphisms") {
  FinRing F2 = ring_zn(2), F22 = ring_product(ring_zn(2), ring_zn(2));
  MultiplierRing M2 = multiplier_ring(F2), M22 = multiplier_ring(F22);
  SUBCASE("a factor inclusion extends to the multiplier rings") {
    for (const auto& val : enumerate_ring_homs(F2, F22)) {
      RingHom f{&F2, &F22, val};
      if (!is_injective_hom(f) || !is_non_degenerate_hom(f)) continue;
      RingHom g = extend_multiplier_hom(f, M2, M22);
      CHECK(is_ring_hom(g));
      CHECK(is_unital_hom(g));
    }
  }
  SUBCASE("lifting a non-essential ideal embedding loses injectivity") {
    bool found = false;
    for (const auto& val : enumerate_ring_homs(F2, F22)) {
      RingHom f{&F2, &F22, val};
      if (!is_injective_hom(f) || !is_ideal(F22, hom_image(f))) continue;
      if (is_essential_ideal(F22, hom_image(f))) continue;
      RingHom psi = lift_ideal_embedding(f, M2, M22);
      CHECK(is_ring_hom(psi));
      CHECK(is_unital_hom(psi));
      CHECK_FALSE(is_injective_hom(psi));
      found = true;
    }
    CHECK(found);
  }
  SUBCASE("lifting the multiplier embedding itself is injective") {
    FinRing base = column_ring();
    MultiplierRing MB = multiplier_ring(base);
    MultiplierRing MM = multiplier_ring(MB.ring);
    RingHom mu{&base, &MB.ring, MB.embedding};
    RingHom psi = lift_ideal_embedding(mu, MB, MM);
    CHECK(is_unital_hom(psi));
    CHECK(is_injective_hom(psi));
  }
}

TEST_CASE("kernel and complement diagnostics") {
  FinRing F22 = ring_product(ring_zn(2), ring_zn(2));
  FinRing Z4 = ring_zn(4);
  SUBCASE("quotient kernel composites on product ideals") {
    for (ElemSet I : ideals(F22))
      if (I != 1u) CHECK(check_quotient_kernel(F22, I).ok());
  }
  SUBCASE("three readings of trivial complements agree") {
    for (ElemSet I : ideals(F22)) CHECK(check_trivial_complement(F22, I).ok());
    for (ElemSet I : ideals(Z4)) CHECK(check_trivial_complement(Z4, I).ok());
  }
}

TEST_CASE("the materialized ring universe") {
  auto u = materialize_ring_universe(ring_universe_entries());
  CHECK(validate_category(u->cat).ok());
  CHECK(u->cat.num_objects() == 3);
  size_t expected = 0;
  for (const FinRing& a : u->objects)
    for (const FinRing& b : u->objects)
      expected += enumerate_ring_homs(a, b).size();
  CHECK(u->cat.num_arrows() == (int)expected);
  int pos = 0, h = 0;
  for (int a = 0; a < u->cat.num_arrows(); ++a) {
    if (u->positives[a]) ++pos;
    if (u->H[a]) {
      ++h;
      CHECK(u->positives[a]);
    }
  }
  CHECK(pos > 0);
  CHECK(h > 0);
}

TEST_CASE("the instance capacitor inserts the multiplier ring") {
  auto cap = build_ring_capacitor(ring_universe_entries());
  RingUniverse& u = *cap->u;
  CHECK(u.cat.num_objects() == 4);
  CHECK(u.cat.num_arrows() == 100);
  CHECK(verify_capacitor(cap->spec).ok());
  SUBCASE("class sizes match the frozen counts") {
    int pos = 0, h = 0;
    for (int a = 0; a < u.cat.num_arrows(); ++a) {
      if (cap->spec.positive[a]) ++pos;
      if (cap->spec.H[a]) ++h;
    }
    CHECK(pos == 11);
    CHECK(h == 9);
    CHECK(cap->E.num_arrows() == 29);
  }
  SUBCASE("unital objects carry identity units") {
    for (int x = 0; x < u.cat.num_objects(); ++x) {
      if (unit_of(u.objects[x]).has_value())
        CHECK(cap->spec.family.unit[x] == u.cat.identity(x));
      else
        CHECK(u.cat.src(cap->spec.family.unit[x]) == x);
    }
  }
  SUBCASE("48 derived negatives") {
    DerivedNegatives d = derive_negative_class(cap->spec);
    int neg = 0;
    for (int a = 0; a < u.cat.num_arrows(); ++a)
      if (d.negative[a]) ++neg;
    CHECK(neg == 48);
  }
}
