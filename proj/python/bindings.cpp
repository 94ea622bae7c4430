// Python bindings for the verification pipeline and the standalone
// constructions: universe verification with the full report, completions of
// named objects, cut completions of posets, monotone/Boolean/ring hom
// enumeration, the continuity predicate, and multiplier rings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polcat/json_io.hpp"

namespace py = pybind11;
using namespace polcat;

namespace {

struct BuiltUniverse {
  UniverseSpec spec;
  std::unique_ptr<PosetCapacitor> poset;
  std::unique_ptr<BACapacitor> ba;
  std::unique_ptr<RingCapacitor> ring;

  CapacitorSpec* cap() {
    if (poset) return &poset->spec;
    if (ba) return &ba->spec;
    if (ring) return &ring->spec;
    return nullptr;
  }
};

BuiltUniverse build_universe(const std::string& path, const std::string& kind,
                             int budget) {
  BuiltUniverse b;
  b.spec = parse_universe(path, kind);
  if (budget > 0) b.spec.arrow_budget = budget;
  switch (b.spec.kind) {
    case UniverseKind::kPoset:
      b.poset = build_poset_capacitor(b.spec.posets, b.spec.arrow_budget);
      break;
    case UniverseKind::kBoolean:
      b.ba = build_ba_capacitor(b.spec.algebras, b.spec.arrow_budget);
      break;
    case UniverseKind::kRing:
      b.ring = build_ring_capacitor(b.spec.rings, b.spec.arrow_budget);
      break;
    case UniverseKind::kRaw:
      throw std::runtime_error("raw universes carry no capacitor to verify");
  }
  return b;
}

std::string verify_file(const std::string& path, const std::string& kind,
                        int budget) {
  BuiltUniverse b = build_universe(path, kind, budget);
  CapacitorSpec& spec = *b.cap();
  const FiniteCategory& C = *spec.C;

  RunReport report;
  report.name = b.spec.name;
  report.kind = b.spec.kind == UniverseKind::kPoset     ? "poset"
                : b.spec.kind == UniverseKind::kBoolean ? "boolean"
                                                        : "ring";
  report.capacitor = verify_capacitor(spec);
  bool all_pass = report.capacitor.ok();
  if (all_pass) {
    report.ledger = verify_theorem_main(spec);
    for (const auto& e : report.ledger) all_pass = all_pass && e.holds;
    report.has_corollary = true;
    report.corollary = verify_corollary_main(spec);
    all_pass = all_pass && report.corollary.equivalent &&
               report.corollary.enough_injectives &&
               report.corollary.injectives_equal_completes;
    Monopole M{spec.C, spec.positive, false};
    for (int x = 0; x < C.num_objects(); ++x) {
      CompletionResult c = relative_completion(M, x, spec.H);
      report.completions.push_back(
          {C.object_name(x), c.absent ? "-" : std::to_string(c.unit),
           c.absent ? "(absent)" : C.object_name(c.object)});
      if (c.absent) all_pass = false;
    }
  }
  report.only_requested_pass = all_pass;
  json j = report_to_json(report);
  j["pass"] = all_pass;
  return j.dump(2);
}

py::dict complete_object(const std::string& path, const std::string& object,
                         const std::string& kind, int budget) {
  BuiltUniverse b = build_universe(path, kind, budget);
  CapacitorSpec& spec = *b.cap();
  const FiniteCategory& C = *spec.C;
  int x = -1;
  for (int o = 0; o < C.num_objects(); ++o)
    if (C.object_name(o) == object) x = o;
  if (x < 0) throw std::runtime_error("unknown object name '" + object + "'");
  Monopole M{spec.C, spec.positive, false};
  CompletionResult c = relative_completion(M, x, spec.H);
  py::dict out;
  out["object"] = object;
  out["absent"] = c.absent;
  if (!c.absent) {
    out["unit"] = c.unit;
    out["completion"] = C.object_name(c.object);
    out["unit_is_iso"] = is_iso(C, c.unit);
  }
  return out;
}

FinPoset poset_of(const std::vector<std::vector<bool>>& leq,
                  const std::string& name) {
  FinPoset P{name, static_cast<int>(leq.size()), leq};
  Report r = validate_poset(P);
  if (!r.ok()) throw std::runtime_error("not a poset: " + r.issues.front());
  return P;
}

py::dict macneille_py(const std::vector<std::vector<bool>>& leq) {
  FinPoset P = poset_of(leq, "P");
  MacNeilleLattice m = macneille(P);
  py::dict out;
  out["leq"] = m.lattice.leq;
  out["cuts"] = m.cuts;
  out["unit"] = m.unit;
  return out;
}

std::vector<std::vector<int>> monotone_maps_py(
    const std::vector<std::vector<bool>>& a,
    const std::vector<std::vector<bool>>& b) {
  return enumerate_monotone_maps(poset_of(a, "A"), poset_of(b, "B"));
}

bool is_continuous_py(const std::vector<std::vector<bool>>& a,
                      const std::vector<std::vector<bool>>& b,
                      const std::vector<int>& val) {
  FinPoset A = poset_of(a, "A"), B = poset_of(b, "B");
  MonotoneMap f{&A, &B, val};
  if (!is_monotone(f)) throw std::runtime_error("map is not monotone");
  return is_continuous_map(f);
}

std::vector<std::vector<int>> ba_homs_py(int atoms_a, int atoms_b) {
  return enumerate_ba_homs(from_atoms(atoms_a), from_atoms(atoms_b));
}

FinRing ring_of(const std::vector<std::vector<int>>& add,
                const std::vector<std::vector<int>>& mul) {
  FinRing R{"R", static_cast<int>(add.size()), add, mul, -1};
  // locate the additive zero
  for (int z = 0; z < R.n; ++z) {
    bool is_zero = true;
    for (int a = 0; a < R.n; ++a) is_zero = is_zero && add[z][a] == a;
    if (is_zero) R.zero = z;
  }
  Report r = validate_ring(R);
  if (!r.ok()) throw std::runtime_error("not a ring: " + r.issues.front());
  return R;
}

py::dict multiplier_py(const std::vector<std::vector<int>>& add,
                       const std::vector<std::vector<int>>& mul) {
  MultiplierRing M = multiplier_ring(ring_of(add, mul));
  py::dict out;
  out["add"] = M.ring.add;
  out["mul"] = M.ring.mul;
  out["embedding"] = M.embedding;
  return out;
}

}  // namespace

PYBIND11_MODULE(polcatpy, m) {
  m.doc() = "verification workbench for completion capacitors on finite universes";
  m.def("verify_file", &verify_file, py::arg("path"), py::arg("kind") = "",
        py::arg("budget") = 0,
        "verify a universe file; returns the full JSON report as a string");
  m.def("complete_object", &complete_object, py::arg("path"), py::arg("object"),
        py::arg("kind") = "", py::arg("budget") = 0,
        "relative completion of one named object of a universe file");
  m.def("macneille", &macneille_py, py::arg("leq"),
        "cut completion of a poset given as a relation matrix");
  m.def("monotone_maps", &monotone_maps_py, py::arg("src"), py::arg("tgt"),
        "all monotone maps between two posets, as value tables");
  m.def("is_continuous", &is_continuous_py, py::arg("src"), py::arg("tgt"),
        py::arg("val"), "whether a monotone map extends to the cut completions");
  m.def("ba_homs", &ba_homs_py, py::arg("atoms_src"), py::arg("atoms_tgt"),
        "all Boolean algebra homomorphisms, as atom-preimage tables");
  m.def("multiplier", &multiplier_py, py::arg("add"), py::arg("mul"),
        "multiplier ring of a non-degenerate finite ring given by its tables");
}
