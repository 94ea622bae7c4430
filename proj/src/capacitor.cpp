#include "polcat/capacitor.hpp"

#include <algorithm>

namespace polcat {

namespace {

// Shared typing checks; everything downstream assumes these.
Report check_typing(const CapacitorSpec& spec) {
  Report r;
  const FiniteCategory& C = *spec.C;
  const FiniteCategory& E = *spec.E;
  if (spec.U.dom != &E || spec.U.cod != &C) {
    r.fail("functor endpoints do not match the spec");
    return r;
  }
  if (static_cast<int>(spec.family.unit.size()) != C.num_objects() ||
      static_cast<int>(spec.family.object.size()) != C.num_objects()) {
    r.fail("completion family is not total");
    return r;
  }
  for (int x = 0; x < C.num_objects(); ++x) {
    int u = spec.family.unit[x];
    int jx = spec.family.object[x];
    if (jx < 0 || jx >= E.num_objects()) {
      r.fail("completion object out of range at " + C.object_name(x));
      continue;
    }
    if (u < 0 || u >= C.num_arrows() || C.src(u) != x ||
        C.tgt(u) != spec.U.obj[jx])
      r.fail("unit mistyped at " + C.object_name(x));
    else if (!spec.H[u])
      r.fail("unit at " + C.object_name(x) + " is not an H-arrow");
  }
  return r;
}

}  // namespace

Report is_rigid_family(const CapacitorSpec& spec) {
  Report r = check_typing(spec);
  if (!r.ok()) return r;
  const FiniteCategory& C = *spec.C;
  const FiniteCategory& E = *spec.E;
  // clause (1): at most one filler per base arrow
  for (int f = 0; f < C.num_arrows(); ++f) {
    int x = C.src(f), y = C.tgt(f);
    int rhs = C.compose(spec.family.unit[y], f);
    int fillers = 0;
    for (int psi : E.hom(spec.family.object[x], spec.family.object[y]))
      if (C.compose(spec.U.arr[psi], spec.family.unit[x]) == rhs) ++fillers;
    if (fillers > 1)
      r.fail("clause 1: " + std::to_string(fillers) + " fillers for arrow " +
             std::to_string(f));
  }
  // clause (2): only the identity fixes a unit
  for (int x = 0; x < C.num_objects(); ++x) {
    int u = spec.family.unit[x];
    int w = C.tgt(u);
    for (int f : C.hom(w, w))
      if (C.compose(f, u) == u && f != C.identity(w))
        r.fail("clause 2: nonidentity arrow " + std::to_string(f) +
               " fixes the unit of " + C.object_name(x));
  }
  return r;
}

Report verify_capacitor(CapacitorSpec& spec) {
  Report r = check_typing(spec);
  if (!r.ok()) return r;
  const FiniteCategory& C = *spec.C;
  const FiniteCategory& E = *spec.E;
  r.merge(validate_refinement(C, spec.positive));
  r.merge(validate_refinement(C, spec.H));
  for (int a = 0; a < C.num_arrows(); ++a)
    if (spec.H[a] && !spec.positive[a]) {
      r.fail("H is not contained in the positive class");
      break;
    }
  r.merge(validate_functor(spec.U));
  if (!is_faithful(spec.U)) r.fail("the functor is not faithful");
  if (!r.ok()) { spec.verified = false; return r; }

  // terminality of each (Jx, η_x) in the comma category of H-arrows
  for (int x = 0; x < C.num_objects(); ++x) {
    int jx = spec.family.object[x], ux = spec.family.unit[x];
    for (int b = 0; b < E.num_objects(); ++b)
      for (int f : C.hom(x, spec.U.obj[b])) {
        if (!spec.H[f]) continue;
        int mediators = 0;
        for (int phi : E.hom(b, jx))
          if (C.compose(spec.U.arr[phi], f) == ux) ++mediators;
        if (mediators != 1)
          r.fail("completion of " + C.object_name(x) + " not terminal: " +
                 std::to_string(mediators) + " mediators from (" +
                 E.object_name(b) + ", arrow " + std::to_string(f) + ")");
      }
  }
  r.merge(is_rigid_family(spec));
  if (!r.ok()) { spec.verified = false; return r; }

  // the contravariant action on H-arrows is functorial and unit-natural
  std::vector<int> jp(C.num_arrows(), -1);
  for (int f = 0; f < C.num_arrows(); ++f) {
    if (!spec.H[f]) continue;
    int x = C.src(f), y = C.tgt(f);
    int want = spec.family.unit[x];
    int rhs = C.compose(spec.family.unit[y], f);
    for (int psi : E.hom(spec.family.object[y], spec.family.object[x]))
      if (C.compose(spec.U.arr[psi], rhs) == want) { jp[f] = psi; break; }
    if (jp[f] < 0)
      r.fail("no contravariant image for H-arrow " + std::to_string(f));
  }
  if (r.ok()) {
    for (int o = 0; o < C.num_objects(); ++o) {
      int e = C.identity(o);
      if (jp[e] != E.identity(spec.family.object[o]))
        r.fail("contravariant action breaks the identity of " + C.object_name(o));
    }
    for (int g = 0; g < C.num_arrows(); ++g) {
      if (!spec.H[g]) continue;
      for (int f : C.arrows_into(C.src(g))) {
        if (!spec.H[f]) continue;
        if (jp[C.compose(g, f)] != E.compose(jp[f], jp[g]))
          r.fail("contravariant action breaks composition on (" +
                 std::to_string(g) + "," + std::to_string(f) + ")");
      }
    }
  }
  spec.verified = r.ok();
  return r;
}

DerivedNegatives derive_negative_class(const CapacitorSpec& spec) {
  if (!spec.verified)
    throw std::runtime_error("capacitor not verified; run verify_capacitor first");
  const FiniteCategory& C = *spec.C;
  const FiniteCategory& E = *spec.E;
  DerivedNegatives out;
  out.negative.assign(C.num_arrows(), false);
  out.filler.assign(C.num_arrows(), -1);
  for (int f = 0; f < C.num_arrows(); ++f) {
    int x = C.src(f), y = C.tgt(f);
    int rhs = C.compose(spec.family.unit[y], f);
    for (int psi : E.hom(spec.family.object[x], spec.family.object[y]))
      if (C.compose(spec.U.arr[psi], spec.family.unit[x]) == rhs) {
        out.negative[f] = true;
        out.filler[f] = psi;
        break;  // unique by rigidity clause (1)
      }
  }
  return out;
}

DerivedVoltage build_voltage(const CapacitorSpec& spec) {
  DerivedNegatives neg = derive_negative_class(spec);
  const FiniteCategory& C = *spec.C;
  const FiniteCategory& E = *spec.E;
  DerivedVoltage v;
  v.polarity = Polarity{&C, spec.H, neg.negative};
  v.j_minus = neg.filler;
  v.j_plus.assign(C.num_arrows(), -1);
  for (int f = 0; f < C.num_arrows(); ++f) {
    if (!spec.H[f]) continue;
    int x = C.src(f), y = C.tgt(f);
    int rhs = C.compose(spec.family.unit[y], f);
    for (int psi : E.hom(spec.family.object[y], spec.family.object[x]))
      if (C.compose(spec.U.arr[psi], rhs) == spec.family.unit[x]) {
        v.j_plus[f] = psi;
        break;
      }
  }
  v.voltage.polarity = v.polarity;
  PolarFunctor& Ef = v.voltage.E;
  Ef.sign = Sign::kNegative;
  Ef.dom = &v.voltage.polarity;
  Ef.cod = &C;
  Ef.obj.resize(C.num_objects());
  Ef.plus_arr.assign(C.num_arrows(), -1);
  Ef.minus_arr.assign(C.num_arrows(), -1);
  for (int x = 0; x < C.num_objects(); ++x)
    Ef.obj[x] = spec.U.obj[spec.family.object[x]];
  for (int a = 0; a < C.num_arrows(); ++a) {
    if (v.j_plus[a] >= 0) Ef.plus_arr[a] = spec.U.arr[v.j_plus[a]];
    if (v.j_minus[a] >= 0) Ef.minus_arr[a] = spec.U.arr[v.j_minus[a]];
  }
  v.voltage.eta = spec.family.unit;
  return v;
}

namespace {

std::string count_witness(int good, int total, const std::string& what) {
  return std::to_string(good) + "/" + std::to_string(total) + " " + what;
}

}  // namespace

std::vector<LedgerEntry> verify_theorem_main(CapacitorSpec& spec) {
  if (!spec.verified) {
    Report cap = verify_capacitor(spec);
    if (!cap.ok())
      throw std::runtime_error("capacitor invalid: " + cap.issues.front());
  }
  const FiniteCategory& C = *spec.C;
  const FiniteCategory& E = *spec.E;
  DerivedVoltage v = build_voltage(spec);
  const ArrowClass& neg = v.polarity.negative;
  const std::vector<int>& unit = spec.family.unit;
  const std::vector<int>& jobj = spec.family.object;

  std::vector<LedgerEntry> ledger;
  auto add = [&](int item, bool holds, std::string w) {
    ledger.push_back({item, holds, std::move(w)});
  };

  // (1) the derived class is a refinement
  {
    Report r = validate_refinement(C, neg);
    int n = 0;
    for (bool b : neg) n += b;
    add(1, r.ok(), r.ok() ? count_witness(n, C.num_arrows(), "arrows negative")
                          : r.issues.front());
  }

  // (2) the filler assignment is functorial on negatives
  {
    bool ok = true;
    std::string w;
    for (int o = 0; o < C.num_objects() && ok; ++o)
      if (v.j_minus[C.identity(o)] != E.identity(jobj[o])) {
        ok = false;
        w = "identity of " + C.object_name(o) + " has a nonidentity filler";
      }
    for (int g = 0; g < C.num_arrows() && ok; ++g) {
      if (!neg[g]) continue;
      for (int f : C.arrows_into(C.src(g))) {
        if (!neg[f]) continue;
        if (v.j_minus[C.compose(g, f)] != E.compose(v.j_minus[g], v.j_minus[f])) {
          ok = false;
          w = "fillers break composition on (" + std::to_string(g) + "," +
              std::to_string(f) + ")";
          break;
        }
      }
    }
    add(2, ok, ok ? "fillers compose" : w);
  }

  // (3) the assembled endofunctor is a valid negative sign-aware functor
  {
    Report r = validate_polar_functor(v.voltage.E);
    add(3, r.ok(), r.ok() ? "endofunctor laws hold" : r.issues.front());
  }

  // (4) the units are natural
  {
    PolarFunctor id = identity_polar_functor(v.voltage.polarity);
    PolarNatTrans t{&id, &v.voltage.E, unit};
    Report r = validate_polar_nat_trans(t);
    add(4, r.ok(), r.ok() ? "both unit squares commute" : r.issues.front());
  }

  // (5) voltage axioms
  {
    Report r = validate_voltage(v.voltage);
    add(5, r.ok(), r.ok() ? "voltage validates" : r.issues.front());
  }

  // (6) every unit is an amphi-terminal completion relative to H
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < C.num_objects() && ok; ++x) {
      int ux = unit[x];
      int wobj = C.tgt(ux);
      for (int f : C.arrows_out(x)) {
        if (!spec.H[f]) continue;
        int incoming = 0;
        for (int xi : C.hom(C.tgt(f), wobj))
          if (C.compose(xi, f) == ux) ++incoming;
        int outgoing = 0;
        for (int xi : C.hom(wobj, C.tgt(f)))
          if (C.compose(xi, ux) == f) ++outgoing;
        if (incoming < 1 || outgoing > 1) {
          ok = false;
          w = "unit of " + C.object_name(x) + " fails against arrow " +
              std::to_string(f) + " (in " + std::to_string(incoming) +
              ", out " + std::to_string(outgoing) + ")";
          break;
        }
      }
    }
    add(6, ok, ok ? "all units amphi-terminal" : w);
  }

  // (7) units monic and negatively epic
  {
    bool ok = true;
    std::string w;
    Polarity neg_pol{&C, spec.positive, neg};
    for (int x = 0; x < C.num_objects(); ++x) {
      if (!is_monic(C, unit[x])) {
        ok = false;
        w = "unit of " + C.object_name(x) + " not monic";
        break;
      }
      if (!is_negatively_epic(neg_pol, unit[x])) {
        ok = false;
        w = "unit of " + C.object_name(x) + " not negatively epic";
        break;
      }
    }
    add(7, ok, ok ? "all units monic and negatively epic" : w);
  }

  // (8) the negative endofunctor is faithful, and every negative arrow
  // between completion objects is hit up to the unit isomorphisms
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < C.num_objects() && ok; ++x)
      for (int y = 0; y < C.num_objects(); ++y) {
        const auto& hs = C.hom(x, y);
        for (size_t i = 0; i < hs.size(); ++i) {
          if (!neg[hs[i]]) continue;
          for (size_t j = i + 1; j < hs.size(); ++j)
            if (neg[hs[j]] && v.j_minus[hs[i]] == v.j_minus[hs[j]]) {
              ok = false;
              w = "not faithful: arrows " + std::to_string(hs[i]) + " and " +
                  std::to_string(hs[j]) + " share a filler";
            }
        }
        if (!ok) break;
      }
    for (int x = 0; x < C.num_objects() && ok; ++x)
      for (int y = 0; y < C.num_objects() && ok; ++y) {
        int ex = C.tgt(unit[x]), ey = C.tgt(unit[y]);
        auto ix = inverse(C, unit[ex]);
        if (!ix) { ok = false; w = "unit at a completion object not invertible"; break; }
        for (int g : C.hom(ex, ey)) {
          if (!neg[g]) continue;
          int target = C.compose(C.compose(unit[ey], g), *ix);
          bool hit = false;
          for (int h : C.hom(ex, ey))
            if (neg[h] && v.voltage.E.minus_arr[h] == target) { hit = true; break; }
          if (!hit) {
            ok = false;
            w = "negative arrow " + std::to_string(g) +
                " between completion objects not in the image";
            break;
          }
        }
      }
    add(8, ok, ok ? "faithful and full onto completion-object negatives" : w);
  }

  // (9) unique negative square filler per negative arrow
  {
    bool ok = true;
    std::string w;
    for (int f = 0; f < C.num_arrows() && ok; ++f) {
      if (!neg[f]) continue;
      int x = C.src(f), y = C.tgt(f);
      int rhs = C.compose(unit[y], f);
      int count = 0;
      for (int g : C.hom(C.tgt(unit[x]), C.tgt(unit[y])))
        if (neg[g] && C.compose(g, unit[x]) == rhs) ++count;
      if (count != 1) {
        ok = false;
        w = std::to_string(count) + " negative fillers for arrow " + std::to_string(f);
      }
    }
    add(9, ok, ok ? "exactly one negative filler each" : w);
  }

  // (10) the hom-set bijection, natural in both slots
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < C.num_objects() && ok; ++x)
      for (int e = 0; e < E.num_objects(); ++e) {
        std::vector<int> image;
        for (int psi : E.hom(jobj[x], e))
          image.push_back(C.compose(spec.U.arr[psi], unit[x]));
        std::vector<int> negs;
        for (int a : C.hom(x, spec.U.obj[e]))
          if (neg[a]) negs.push_back(a);
        std::sort(image.begin(), image.end());
        std::sort(negs.begin(), negs.end());
        if (image != negs ||
            std::adjacent_find(image.begin(), image.end()) != image.end()) {
          ok = false;
          w = "bijection fails at (" + C.object_name(x) + ", " +
              E.object_name(e) + ")";
          break;
        }
      }
    // naturality in the target slot
    for (int x = 0; x < C.num_objects() && ok; ++x)
      for (int chi = 0; chi < E.num_arrows() && ok; ++chi)
        for (int psi : E.hom(jobj[x], E.src(chi))) {
          int lhs = C.compose(spec.U.arr[E.compose(chi, psi)], unit[x]);
          int rhs = C.compose(spec.U.arr[chi],
                              C.compose(spec.U.arr[psi], unit[x]));
          if (lhs != rhs) {
            ok = false;
            w = "naturality in the target slot fails";
            break;
          }
        }
    // naturality in the source slot, against negative reindexing
    for (int g = 0; g < C.num_arrows() && ok; ++g) {
      if (!neg[g]) continue;
      int xp = C.src(g), x = C.tgt(g);
      for (int e = 0; e < E.num_objects() && ok; ++e)
        for (int psi : E.hom(jobj[x], e)) {
          int lhs = C.compose(spec.U.arr[E.compose(psi, v.j_minus[g])], unit[xp]);
          int rhs = C.compose(C.compose(spec.U.arr[psi], unit[x]), g);
          if (lhs != rhs) {
            ok = false;
            w = "naturality in the source slot fails at arrow " + std::to_string(g);
            break;
          }
        }
    }
    add(10, ok, ok ? "natural bijection onto the negatives" : w);
  }

  // (11) the functor embeds fully faithfully into the negatives, with a
  // reflection unit at every object
  {
    bool ok = is_faithful(spec.U);
    std::string w = ok ? "" : "not faithful";
    for (int a = 0; a < E.num_arrows() && ok; ++a)
      if (!neg[spec.U.arr[a]]) {
        ok = false;
        w = "image arrow " + std::to_string(spec.U.arr[a]) + " not negative";
      }
    for (int e = 0; e < E.num_objects() && ok; ++e)
      for (int e2 = 0; e2 < E.num_objects() && ok; ++e2)
        for (int g : C.hom(spec.U.obj[e], spec.U.obj[e2])) {
          if (!neg[g]) continue;
          bool hit = false;
          for (int psi : E.hom(e, e2))
            if (spec.U.arr[psi] == g) { hit = true; break; }
          if (!hit) {
            ok = false;
            w = "negative arrow " + std::to_string(g) + " not full";
            break;
          }
        }
    for (int x = 0; x < C.num_objects() && ok; ++x)
      if (!neg[unit[x]]) {
        ok = false;
        w = "reflection unit of " + C.object_name(x) + " not negative";
      }
    add(11, ok, ok ? "fully faithful with reflective image" : w);
  }

  // (12) injectivity coincides with completeness relative to H
  {
    Polarity P{&C, spec.positive, neg};
    Monopole MH{&C, spec.H, false};
    bool ok = true;
    std::string w;
    for (int x = 0; x < C.num_objects(); ++x) {
      bool inj = is_injective_polarity(P, x);
      bool comp = is_complete(MH, x);
      if (inj != comp) {
        ok = false;
        w = C.object_name(x) + ": injective=" + (inj ? "yes" : "no") +
            " complete=" + (comp ? "yes" : "no");
        break;
      }
    }
    add(12, ok, ok ? "injective <=> complete on every object" : w);
  }

  return ledger;
}

CorollaryResult verify_corollary_main(CapacitorSpec& spec) {
  if (!spec.verified) {
    Report cap = verify_capacitor(spec);
    if (!cap.ok()) {
      CorollaryResult r;
      r.notes.push_back("capacitor invalid: " + cap.issues.front());
      return r;
    }
  }
  const FiniteCategory& C = *spec.C;
  DerivedNegatives neg = derive_negative_class(spec);
  Polarity P{&C, spec.positive, neg.negative};
  Monopole MH{&C, spec.H, false};
  CorollaryResult r;
  r.enough_injectives = has_enough_injectives(P);
  r.complete_implies_injective = true;
  bool injective_implies_complete = true;
  for (int x = 0; x < C.num_objects(); ++x) {
    bool inj = is_injective_polarity(P, x);
    bool comp = is_complete(MH, x);
    if (comp && !inj) {
      r.complete_implies_injective = false;
      r.notes.push_back(C.object_name(x) + " complete but not injective");
    }
    if (inj && !comp) {
      injective_implies_complete = false;
      r.notes.push_back(C.object_name(x) + " injective but not complete");
    }
  }
  r.injectives_equal_completes =
      r.complete_implies_injective && injective_implies_complete;
  r.equivalent = (r.enough_injectives == r.complete_implies_injective) &&
                 (r.complete_implies_injective == r.injectives_equal_completes);
  return r;
}

}  // namespace polcat
