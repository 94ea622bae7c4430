// Acceptance gate: seven criteria, one pass/fail line each.
//
// usage: acceptance <data-dir> [<cli-binary>]
//
// The data directory must hold the golden oracle tables under golden/; the
// CLI binary, when given, is exercised for its exit-status contract.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "polcat/boolean.hpp"
#include "polcat/json_io.hpp"
#include "polcat/posets.hpp"
#include "polcat/rings.hpp"

using namespace polcat;
namespace fs = std::filesystem;

namespace {

std::string g_data;
std::string g_cli;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot read " + path);
  return json::parse(in);
}

// Brute-force cut count: subsets A of the carrier with A = ↓↑A, written
// directly against the order matrix.
int brute_cut_count(const FinPoset& P) {
  int count = 0;
  for (Subset A = 0; A < (1u << P.n); ++A) {
    Subset up = 0;
    for (int u = 0; u < P.n; ++u) {
      bool above_all = true;
      for (int a = 0; a < P.n; ++a)
        if ((A >> a & 1u) && !P.leq[a][u]) { above_all = false; break; }
      if (above_all) up |= 1u << u;
    }
    Subset down = 0;
    for (int d = 0; d < P.n; ++d) {
      bool below_all = true;
      for (int u = 0; u < P.n; ++u)
        if ((up >> u & 1u) && !P.leq[d][u]) { below_all = false; break; }
      if (below_all) down |= 1u << d;
    }
    if (down == A) ++count;
  }
  return count;
}

std::vector<FinRing> test_rings() {
  std::vector<FinRing> out;
  for (int n = 2; n <= 8; ++n) {
    FinRing R = ring_zn(n);
    R.name = "Z" + std::to_string(n);
    out.push_back(R);
  }
  FinRing f22 = ring_product(ring_zn(2), ring_zn(2));
  f22.name = "F2xF2";
  out.push_back(f22);
  FinRing c2 = ring_from_f2_matrices("C2", 2, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  out.push_back(c2);
  MultiplierRing mc2 = multiplier_ring(c2);
  mc2.ring.name = "M(C2)";
  out.push_back(mc2.ring);
  return out;
}

// ---------------------------------------------------------------------------

void criterion1() {
  json golden = load_json(g_data + "/golden/macneille_oracle.json");
  const json& entries = golden.at("entries");
  std::vector<FinPoset> posets = all_posets_up_to(4);
  require(entries.size() == posets.size() + 1,
          "golden entry count does not match the poset census");
  for (size_t i = 0; i < posets.size(); ++i) {
    const FinPoset& P = posets[i];
    MacNeilleLattice m = macneille(P);
    require(is_complete_lattice(m.lattice),
            P.name + ": completion is not a complete lattice");
    std::vector<int> val(m.unit.begin(), m.unit.end());
    MonotoneMap eta{&P, &m.lattice, val};
    require(is_embedding(eta) && is_dense(eta),
            P.name + ": unit is not a dense embedding");
    int brute = brute_cut_count(P);
    require(m.lattice.n == brute, P.name + ": cut counts disagree");
    const json& e = entries.at(i);
    require(e.at("elements").get<int>() == P.n &&
                e.at("cuts").get<int>() == brute,
            P.name + ": golden entry disagrees");
    if (P.n == 2 && !P.le(0, 1) && !P.le(1, 0))
      require(m.lattice.n == 4, "2-antichain completion is not 4 elements");
  }
  const json& empty = entries.back();
  require(empty.at("name") == "empty" && empty.at("cuts").get<int>() == 1,
          "empty poset must have exactly one cut");
}

void criterion2() {
  auto cap = build_poset_capacitor(all_posets_up_to(3), 200000);
  require(verify_capacitor(cap->spec).ok(), "poset capacitor fails to verify");
  std::vector<LedgerEntry> ledger = verify_theorem_main(cap->spec);
  require(ledger.size() == 12, "ledger is not twelve entries");
  for (const LedgerEntry& e : ledger)
    require(e.holds, "ledger item " + std::to_string(e.item) + " fails: " + e.witness);
  DerivedNegatives d = derive_negative_class(cap->spec);
  PosetUniverse& u = *cap->u;
  for (int a = 0; a < u.cat.num_arrows(); ++a) {
    MonotoneMap f{&u.objects[u.cat.src(a)], &u.objects[u.cat.tgt(a)], u.maps[a]};
    require(d.negative[a] == is_continuous_map(f),
            "derived negatives and continuity disagree at arrow " + std::to_string(a));
  }
}

void criterion3() {
  std::vector<FinBoolAlg> algebras = {from_atoms(1), from_atoms(2), from_atoms(3)};
  auto cap = build_ba_capacitor(algebras);
  require(verify_capacitor(cap->spec).ok(), "BA capacitor fails to verify");
  for (const LedgerEntry& e : verify_theorem_main(cap->spec))
    require(e.holds, "ledger item " + std::to_string(e.item) + " fails: " + e.witness);
  BAUniverse& u = *cap->u;
  Polarity P{&u.cat, cap->spec.positive, ArrowClass(u.cat.num_arrows(), true)};
  for (int o = 0; o < u.cat.num_objects(); ++o)
    require(is_injective_polarity(P, o),
            "object " + u.cat.object_name(o) + " is not injective");
  for (int a = 0; a < u.cat.num_arrows(); ++a) {
    require(u.essential_embeddings[a] == is_iso(u.cat, a),
            "essential embeddings differ from isomorphisms");
    BAHom f{&u.objects[u.cat.src(a)], &u.objects[u.cat.tgt(a)], {}};
    f.atom_pre = u.homs[a];
    bool injective = is_embedding(f);
    std::vector<bool> hit(f.tgt->size(), false);
    for (std::uint32_t s = 0; s < (std::uint32_t)f.src->size(); ++s)
      hit[f.apply(s)] = true;
    bool surjective = true;
    for (bool h : hit) surjective = surjective && h;
    require(is_monic(u.cat, a) == injective, "monic/injective mismatch");
    require(is_epic(u.cat, a) == surjective, "epic/surjective mismatch");
    bool order_embedding = injective;  // a BA embedding reflects the order
    require(is_regular_monic(u.cat, a) == order_embedding,
            "regular-monic/embedding mismatch");
  }
}

void criterion4() {
  for (int n : {2, 3, 4, 5, 6, 7, 8}) {
    MultiplierRing M = multiplier_ring(ring_zn(n));
    require(M.ring.n == n, "M(Z" + std::to_string(n) + ") has the wrong order");
    std::vector<bool> hit(M.ring.n, false);
    for (int x : M.embedding) hit[x] = true;
    for (bool h : hit) require(h, "embedding of a unital ring is not onto");
  }
  MultiplierRing m22 = multiplier_ring(ring_product(ring_zn(2), ring_zn(2)));
  require(m22.ring.n == 4, "M(F2xF2) has the wrong order");

  FinRing c2 = ring_from_f2_matrices("C2", 2, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  MultiplierRing mc2 = multiplier_ring(c2);
  json golden = load_json(g_data + "/golden/multiplier_oracle.json");
  const json* entry = nullptr;
  for (const json& e : golden.at("entries"))
    if (e.at("name") == "C2") entry = &e;
  require(entry != nullptr, "golden file lacks the column-ring entry");
  require(entry->at("multiplier_order").get<int>() == mc2.ring.n,
          "oracle and main path disagree on |M(C2)|");
  require(entry->at("add") == json(mc2.ring.add) &&
              entry->at("mul") == json(mc2.ring.mul) &&
              entry->at("embedding") == json(mc2.embedding),
          "oracle and main path disagree on the M(C2) tables");
  RingHom e{&c2, &mc2.ring, mc2.embedding};
  require(is_injective_hom(e), "column-ring embedding is not injective");
  ElemSet img = hom_image(e);
  require(is_ideal(mc2.ring, img) && is_essential_ideal(mc2.ring, img),
          "column-ring image is not an essential ideal");

  FinRing zero = ring_zn(2);
  zero.mul = {{0, 0}, {0, 0}};
  bool rejected = false;
  try {
    multiplier_ring(zero);
  } catch (const std::exception&) {
    rejected = true;
  }
  require(rejected, "degenerate ring was not rejected");
}

void criterion5() {
  for (const FinRing& R : test_rings()) {
    for (ElemSet I : ideals(R)) {
      require(check_trivial_complement(R, I).ok(),
              R.name + ": trivial-complement readings disagree");
      if (pseudocomplement(R, I).has_value())
        require(check_quotient_kernel(R, I).ok(),
                R.name + ": quotient kernel composite fails");
    }
  }
  // injectivity of the lift <=> essential image, over every eligible pair
  std::vector<FinRing> rings = test_rings();
  int lifted = 0;
  for (const FinRing& A : rings) {
    if (!is_non_degenerate(A)) continue;
    MultiplierRing MA = multiplier_ring(A);
    for (const FinRing& B : rings) {
      if (!is_non_degenerate(B) || A.n > B.n) continue;
      MultiplierRing MB = multiplier_ring(B);
      for (const auto& val : enumerate_ring_homs(A, B)) {
        RingHom f{&A, &B, val};
        if (!is_injective_hom(f)) continue;
        ElemSet img = hom_image(f);
        if (!is_ideal(B, img)) continue;
        RingHom psi = lift_ideal_embedding(f, MA, MB);
        require(is_unital_hom(psi), "lift is not a unital homomorphism");
        require(is_injective_hom(psi) == is_essential_ideal(B, img),
                A.name + " -> " + B.name +
                    ": lift injectivity does not track essentiality");
        ++lifted;
      }
    }
  }
  require(lifted > 0, "no ideal embeddings were exercised");
}

void structural_suite(CapacitorSpec& spec, const std::string& label) {
  require(spec.verified || verify_capacitor(spec).ok(),
          label + ": capacitor fails to verify");
  const FiniteCategory& C = *spec.C;
  Monopole M{&C, spec.positive, false};
  DerivedNegatives d = derive_negative_class(spec);
  Polarity P{&C, spec.positive, d.negative};

  for (int x = 0; x < C.num_objects(); ++x) {
    int unit = spec.family.unit[x];
    require(is_monic(C, unit), label + ": unit not monic at " + C.object_name(x));
    require(is_negatively_epic(P, unit),
            label + ": unit not negatively epic at " + C.object_name(x));

    // uniqueness up to unit-commuting isomorphism
    CompletionResult r = relative_completion(M, x, spec.H);
    require(!r.absent, label + ": relative completion missing at " + C.object_name(x));
    bool connected = false;
    for (int phi : C.hom(C.tgt(r.unit), C.tgt(unit)))
      if (is_iso(C, phi) && C.compose(phi, r.unit) == unit) connected = true;
    require(connected, label + ": completions not isomorphic over " + C.object_name(x));

    // targets are complete; injective <=> complete, object for object
    CompletionResult t = relative_completion(M, C.tgt(unit), spec.H);
    require(!t.absent && is_iso(C, t.unit),
            label + ": completion target not complete at " + C.object_name(x));
    bool complete_here = is_iso(C, r.unit);
    require(is_injective_polarity(P, x) == complete_here,
            label + ": injectivity and completeness split at " + C.object_name(x));
  }

  Monopole L = left_hereditary_core(M);
  require(left_hereditary_core(L).positive == L.positive,
          label + ": hereditary core is not idempotent");

  for (const LedgerEntry& e : verify_theorem_main(spec))
    if (e.item == 10)
      require(e.holds, label + ": hom-set bijection fails: " + e.witness);
}

void criterion6() {
  auto pc = build_poset_capacitor(all_posets_up_to(3), 200000);
  structural_suite(pc->spec, "posets");
  auto bc = build_ba_capacitor({from_atoms(1), from_atoms(2), from_atoms(3)});
  structural_suite(bc->spec, "boolean");
  FinRing f2 = ring_zn(2);
  f2.name = "F2";
  FinRing f22 = ring_product(ring_zn(2), ring_zn(2));
  f22.name = "F2xF2";
  FinRing c2 = ring_from_f2_matrices("C2", 2, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  auto rc = build_ring_capacitor({f2, f22, c2});
  structural_suite(rc->spec, "rings");
}

int run_cli(const std::string& args) {
  std::string cmd = "\"" + g_cli + "\" " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void criterion7() {
  // (a) remove the completion target from E: existence fails
  {
    auto cap = build_poset_capacitor({/* 2-antichain */ [] {
      FinPoset A{"antichain2", 2, {{true, false}, {false, true}}};
      return A;
    }()});
    PosetUniverse& u = *cap->u;
    FiniteCategory E2;
    E2.finalize();
    Functor U2{&E2, &u.cat, {}, {}, false};
    Monopole M{&u.cat, cap->spec.positive, false};
    int anti = -1;
    for (int o = 0; o < u.cat.num_objects(); ++o)
      if (!is_complete_lattice(u.objects[o])) anti = o;
    require(anti >= 0, "control universe lost its incomplete object");
    CompletionResult r = completion_wrt_functor(M, anti, U2, cap->spec.H);
    require(r.absent, "completion survived the removal of its target");
    CapacitorSpec broken = cap->spec;
    broken.E = &E2;
    broken.U = U2;
    broken.verified = false;
    require(!verify_capacitor(broken).ok(),
            "capacitor verified without its completion objects");
  }
  // (b) a nontrivial automorphism fixing a unit trips rigidity clause (2)
  {
    FiniteCategory C;
    C.add_object("x");
    C.add_object("w");
    int ix = C.add_arrow(0, 0), iw = C.add_arrow(1, 1);
    int un = C.add_arrow(0, 1), a = C.add_arrow(1, 1);
    C.set_identity(0, ix);
    C.set_identity(1, iw);
    C.set_compose(ix, ix, ix);
    C.set_compose(iw, iw, iw);
    C.set_compose(iw, un, un);
    C.set_compose(un, ix, un);
    C.set_compose(a, a, iw);
    C.set_compose(a, iw, a);
    C.set_compose(iw, a, a);
    C.set_compose(a, un, un);
    C.finalize();
    FiniteCategory E;
    E.add_object("w");
    int je = E.add_arrow(0, 0), ja = E.add_arrow(0, 0);
    E.set_identity(0, je);
    E.set_compose(je, je, je);
    E.set_compose(je, ja, ja);
    E.set_compose(ja, je, ja);
    E.set_compose(ja, ja, je);
    E.finalize();
    CapacitorSpec spec;
    spec.C = &C;
    spec.positive = ArrowClass(C.num_arrows(), true);
    spec.H = ArrowClass(C.num_arrows(), true);
    spec.E = &E;
    spec.U = Functor{&E, &C, {1}, {iw, a}, false};
    spec.family.unit = {un, iw};
    spec.family.object = {0, 0};
    Report r = is_rigid_family(spec);
    bool clause2 = false;
    for (const std::string& i : r.issues)
      if (i.find("clause 2") != std::string::npos) clause2 = true;
    require(clause2, "rigidity clause 2 violation went unreported");
    require(!verify_capacitor(spec).ok(), "non-rigid capacitor verified");
  }
  // (c) the CLI exit-status contract mirrors both outcomes
  if (!g_cli.empty()) {
    require(run_cli("verify --universe " + g_data + "/rings_universe.json --kind ring") == 0,
            "CLI does not exit 0 on a verifying universe");
    fs::path tmp = fs::temp_directory_path() / "polcat_acceptance";
    fs::create_directories(tmp);
    {
      std::ofstream bad(tmp / "degenerate.json");
      bad << R"({"kind":"ring","name":"degenerate","entries":[)"
          << R"({"name":"zero2","kind":"tables","elements":2,)"
          << R"("add":[[0,1],[1,0]],"mul":[[0,0],[0,0]]}]})" << "\n";
    }
    require(run_cli("verify --universe " + (tmp / "degenerate.json").string() +
                    " --kind ring") == 1,
            "CLI does not exit 1 on a failing universe");
    {
      std::ofstream bad(tmp / "broken.json");
      bad << "{ not json";
    }
    require(run_cli("verify --universe " + (tmp / "broken.json").string()) == 2,
            "CLI does not exit 2 on malformed input");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <data-dir> [<cli-binary>]\n", argv[0]);
    return 2;
  }
  g_data = argv[1];
  if (argc > 2) g_cli = argv[2];

  std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"cut-completion oracle on all posets up to four elements", criterion1},
      {"twelve-entry ledger on the poset universe, negatives = continuity", criterion2},
      {"twelve-entry ledger on the Boolean universe, detector agreement", criterion3},
      {"multiplier oracle agreement, unital fixed points, degeneracy rejection", criterion4},
      {"ring lemma suite over every ideal of the test rings", criterion5},
      {"structural properties on every materialized universe", criterion6},
      {"negative controls and exit statuses", criterion7},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string verdict = "pass";
    try {
      criteria[i].second();
    } catch (const std::exception& e) {
      verdict = std::string("FAIL (") + e.what() + ")";
      ++failures;
    }
    std::printf("criterion %zu: %s — %s\n", i + 1, verdict.c_str(),
                criteria[i].first.c_str());
  }
  return failures == 0 ? 0 : 1;
}
