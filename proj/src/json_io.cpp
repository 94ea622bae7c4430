#include "polcat/json_io.hpp"

#include <fstream>

namespace polcat {

json category_to_json(const FiniteCategory& C) {
  json j;
  j["objects"] = json::array();
  for (int o = 0; o < C.num_objects(); ++o) j["objects"].push_back(C.object_name(o));
  j["arrows"] = json::array();
  for (int a = 0; a < C.num_arrows(); ++a)
    j["arrows"].push_back({{"id", a}, {"src", C.src(a)}, {"tgt", C.tgt(a)}});
  j["compose"] = json::array();
  for (int g = 0; g < C.num_arrows(); ++g)
    for (int f = 0; f < C.num_arrows(); ++f)
      if (C.tgt(f) == C.src(g))
        j["compose"].push_back({{"g", g}, {"f", f}, {"gf", C.compose(g, f)}});
  j["identities"] = json::object();
  for (int o = 0; o < C.num_objects(); ++o)
    j["identities"][C.object_name(o)] = C.identity(o);
  return j;
}

FiniteCategory category_from_json(const json& j, int arrow_budget) {
  FiniteCategory C;
  std::vector<std::string> names;
  for (const auto& o : j.at("objects")) {
    names.push_back(o.get<std::string>());
    C.add_object(names.back());
  }
  int n = static_cast<int>(names.size());
  std::vector<int> order;
  for (const auto& a : j.at("arrows")) {
    int id = a.at("id").get<int>();
    int src = a.at("src").get<int>(), tgt = a.at("tgt").get<int>();
    if (src < 0 || src >= n || tgt < 0 || tgt >= n)
      throw std::runtime_error("arrow " + std::to_string(id) + " mistyped");
    if (id != C.add_arrow(src, tgt))
      throw std::runtime_error("arrow ids must be dense and in order");
    if (static_cast<int>(order.size()) + 1 > arrow_budget)
      throw std::runtime_error("arrow budget exceeded");
    order.push_back(id);
  }
  for (auto it = j.at("identities").begin(); it != j.at("identities").end(); ++it) {
    auto pos = std::find(names.begin(), names.end(), it.key());
    if (pos == names.end()) throw std::runtime_error("identity of unknown object " + it.key());
    C.set_identity(static_cast<int>(pos - names.begin()), it.value().get<int>());
  }
  for (const auto& c : j.at("compose"))
    C.set_compose(c.at("g").get<int>(), c.at("f").get<int>(), c.at("gf").get<int>());
  C.finalize(arrow_budget);
  return C;
}

namespace {

json class_to_ids(const ArrowClass& cls) {
  json out = json::array();
  for (size_t a = 0; a < cls.size(); ++a)
    if (cls[a]) out.push_back(static_cast<int>(a));
  return out;
}

ArrowClass ids_to_class(const json& ids, int num_arrows) {
  ArrowClass out(num_arrows, false);
  for (const auto& v : ids) {
    int a = v.get<int>();
    if (a < 0 || a >= num_arrows) throw std::runtime_error("arrow id out of range");
    out[a] = true;
  }
  return out;
}

}  // namespace

json polarity_to_json(const Polarity& P) {
  json j = category_to_json(*P.C);
  j["positive"] = class_to_ids(P.positive);
  j["negative"] = class_to_ids(P.negative);
  return j;
}

Polarity polarity_from_json(const json& j, FiniteCategory& C, int arrow_budget) {
  C = category_from_json(j, arrow_budget);
  return Polarity{&C, ids_to_class(j.at("positive"), C.num_arrows()),
                  ids_to_class(j.at("negative"), C.num_arrows())};
}

json completion_to_json(const CompletionResult& r) {
  json j;
  if (r.absent) {
    j["unit"] = nullptr;
    j["object"] = nullptr;
  } else {
    j["unit"] = r.unit;
    j["object"] = r.object;
  }
  j["witness_counts"] = r.witness_counts;
  return j;
}

json ledger_to_json(const std::vector<LedgerEntry>& ledger) {
  json j = json::array();
  for (const auto& e : ledger)
    j.push_back({{"item", e.item}, {"holds", e.holds}, {"witness", e.witness}});
  return j;
}

json corollary_to_json(const CorollaryResult& r) {
  json j;
  j["enough_injectives"] = r.enough_injectives;
  j["complete_implies_injective"] = r.complete_implies_injective;
  j["injectives_equal_completes"] = r.injectives_equal_completes;
  j["equivalent"] = r.equivalent;
  j["notes"] = r.notes;
  return j;
}

FinPoset poset_from_json(const json& j) {
  FinPoset P;
  P.name = j.value("name", "poset");
  std::vector<std::string> elems;
  for (const auto& e : j.at("elements"))
    elems.push_back(e.is_string() ? e.get<std::string>() : e.dump());
  P.n = static_cast<int>(elems.size());
  if (P.n > kMaxPosetSize) throw std::runtime_error("poset too large");
  auto index = [&](const json& v) {
    if (v.is_number_integer()) {
      int i = v.get<int>();
      if (i < 0 || i >= P.n) throw std::runtime_error("element index out of range");
      return i;
    }
    auto pos = std::find(elems.begin(), elems.end(), v.get<std::string>());
    if (pos == elems.end())
      throw std::runtime_error("unknown element " + v.get<std::string>());
    return static_cast<int>(pos - elems.begin());
  };
  P.leq.assign(P.n, std::vector<bool>(P.n, false));
  for (int i = 0; i < P.n; ++i) P.leq[i][i] = true;
  for (const auto& pair : j.at("leq")) {
    if (pair.size() != 2) throw std::runtime_error("leq entries are pairs");
    P.leq[index(pair[0])][index(pair[1])] = true;
  }
  // transitive closure, then validation (catches antisymmetry violations)
  for (int k = 0; k < P.n; ++k)
    for (int i = 0; i < P.n; ++i)
      for (int l = 0; l < P.n; ++l)
        if (P.leq[i][k] && P.leq[k][l]) P.leq[i][l] = true;
  Report r = validate_poset(P);
  if (!r.ok()) throw std::runtime_error("invalid poset " + P.name + ": " + r.issues.front());
  return P;
}

json poset_to_json(const FinPoset& P) {
  json j;
  j["name"] = P.name;
  j["elements"] = json::array();
  for (int i = 0; i < P.n; ++i) j["elements"].push_back("e" + std::to_string(i));
  j["leq"] = json::array();
  for (int i = 0; i < P.n; ++i)
    for (int k = 0; k < P.n; ++k)
      if (i != k && P.leq[i][k]) j["leq"].push_back({i, k});
  return j;
}

FinBoolAlg ba_from_json(const json& j) {
  if (j.contains("atoms")) {
    FinBoolAlg A = from_atoms(j.at("atoms").get<int>());
    if (j.contains("name")) A.name = j.at("name").get<std::string>();
    return A;
  }
  BATables t;
  t.name = j.value("name", "boolean-algebra");
  t.meet = j.at("meet").get<std::vector<std::vector<int>>>();
  t.join = j.at("join").get<std::vector<std::vector<int>>>();
  t.neg = j.at("neg").get<std::vector<int>>();
  t.n = static_cast<int>(t.neg.size());
  // bounds are forced: 0 is the meet-absorber, 1 the join-absorber
  for (int a = 0; a < t.n; ++a) {
    bool bot = true, top = true;
    for (int b = 0; b < t.n; ++b) {
      if (t.meet[a][b] != a || t.join[a][b] != b) bot = false;
      if (t.join[a][b] != a || t.meet[a][b] != b) top = false;
    }
    if (bot) t.zero = a;
    if (top) t.one = a;
  }
  return normalize_ba(t);
}

FinRing ring_from_json(const json& j) {
  std::string kind = j.value("kind", "tables");
  FinRing R;
  if (kind == "zn") {
    R = ring_zn(j.at("n").get<int>());
  } else if (kind == "product") {
    const auto& factors = j.at("factors");
    if (factors.empty()) throw std::runtime_error("product needs factors");
    R = ring_from_json(factors[0]);
    for (size_t i = 1; i < factors.size(); ++i)
      R = ring_product(R, ring_from_json(factors[i]));
  } else if (kind == "f2matrix") {
    R = ring_from_f2_matrices(j.value("name", "f2matrix"), j.at("dim").get<int>(),
                              j.at("basis").get<std::vector<std::vector<int>>>());
  } else if (kind == "tables") {
    R.n = j.at("elements").get<int>();
    R.add = j.at("add").get<std::vector<std::vector<int>>>();
    R.mul = j.at("mul").get<std::vector<std::vector<int>>>();
    R.name = j.value("name", "ring");
    for (int z = 0; z < R.n && R.zero < 0; ++z) {
      bool neutral = true;
      for (int a = 0; a < R.n && neutral; ++a)
        if (z >= static_cast<int>(R.add.size()) || R.add[z][a] != a) neutral = false;
      if (neutral) R.zero = z;
    }
    if (R.zero < 0) throw std::runtime_error("ring has no additive zero");
  } else {
    throw std::runtime_error("unknown ring kind " + kind);
  }
  if (j.contains("name")) R.name = j.at("name").get<std::string>();
  Report r = validate_ring(R);
  if (!r.ok()) throw std::runtime_error("invalid ring " + R.name + ": " + r.issues.front());
  return R;
}

UniverseSpec parse_universe(const std::string& path, const std::string& kind_flag) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
  }
  UniverseSpec spec;
  std::string kind = kind_flag.empty() ? j.value("kind", "") : kind_flag;
  if (kind == "poset") spec.kind = UniverseKind::kPoset;
  else if (kind == "boolean") spec.kind = UniverseKind::kBoolean;
  else if (kind == "ring") spec.kind = UniverseKind::kRing;
  else if (kind == "raw") spec.kind = UniverseKind::kRaw;
  else throw std::runtime_error("unknown kind '" + kind + "'");
  spec.name = j.value("name", path);
  if (j.contains("options") && j.at("options").contains("budget"))
    spec.arrow_budget = j.at("options").at("budget").get<int>();
  if (spec.kind == UniverseKind::kRaw) {
    spec.raw = j;
    return spec;
  }
  for (const auto& entry : j.at("entries")) {
    switch (spec.kind) {
      case UniverseKind::kPoset: spec.posets.push_back(poset_from_json(entry)); break;
      case UniverseKind::kBoolean: spec.algebras.push_back(ba_from_json(entry)); break;
      case UniverseKind::kRing: spec.rings.push_back(ring_from_json(entry)); break;
      case UniverseKind::kRaw: break;
    }
  }
  return spec;
}

json report_to_json(const RunReport& r) {
  json j;
  j["kind"] = r.kind;
  j["universe"] = r.name;
  j["capacitor"] = {{"ok", r.capacitor.ok()}, {"issues", r.capacitor.issues}};
  j["theorem_main"] = ledger_to_json(r.ledger);
  if (r.has_corollary) j["corollary_main"] = corollary_to_json(r.corollary);
  j["completions"] = json::array();
  for (const auto& c : r.completions)
    j["completions"].push_back({{"object", c[0]}, {"unit", c[1]}, {"target", c[2]}});
  return j;
}

std::string report_to_text(const RunReport& r) {
  std::string out;
  out += "universe: " + r.name + " (" + r.kind + ")\n";
  out += "capacitor: " + std::string(r.capacitor.ok() ? "ok" : "FAIL") + "\n";
  for (const auto& i : r.capacitor.issues) out += "  - " + i + "\n";
  int good = 0;
  for (const auto& e : r.ledger) good += e.holds;
  if (!r.ledger.empty()) {
    out += "theorem_main: " + std::to_string(good) + "/" +
           std::to_string(r.ledger.size()) + "\n";
    for (const auto& e : r.ledger)
      out += "  item " + std::to_string(e.item) + ": " +
             (e.holds ? "ok" : "FAIL") + " (" + e.witness + ")\n";
  }
  if (r.has_corollary) {
    out += std::string("corollary_main: ") +
           (r.corollary.equivalent && r.corollary.enough_injectives &&
                    r.corollary.injectives_equal_completes
                ? "ok" : "FAIL") + "\n";
    for (const auto& n : r.corollary.notes) out += "  - " + n + "\n";
  }
  if (!r.completions.empty()) {
    out += "completions:\n";
    for (const auto& c : r.completions)
      out += "  " + c[0] + " -> " + c[2] + " via arrow " + c[1] + "\n";
  }
  return out;
}

}  // namespace polcat
