// Batch front end: parse a universe file, build and verify its capacitor,
// run the twelve-conclusion ledger and the injectivity corollary, emit
// text or JSON reports, export DOT diagrams, and run the stand-alone
// brute-force oracles that produce the golden files under data/golden.
//
// Exit codes: 0 all requested checks pass, 1 verification failure,
// 2 usage/parse error, 3 arrow budget exhausted.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>

#include "polcat/json_io.hpp"

namespace {

using namespace polcat;

// ---------------------------------------------------------------------------
// universe assembly

struct Built {
  UniverseSpec spec;
  std::unique_ptr<PosetCapacitor> poset;
  std::unique_ptr<BACapacitor> ba;
  std::unique_ptr<RingCapacitor> ring;
  // raw kind: a free-standing polarity with no capacitor
  FiniteCategory raw_cat;
  std::optional<Polarity> raw_pol;

  CapacitorSpec* cap() {
    if (poset) return &poset->spec;
    if (ba) return &ba->spec;
    if (ring) return &ring->spec;
    return nullptr;
  }
  const FiniteCategory& base() {
    if (CapacitorSpec* c = cap()) return *c->C;
    return raw_cat;
  }
};

Built build(UniverseSpec spec) {
  Built b;
  b.spec = std::move(spec);
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
      b.raw_pol = polarity_from_json(b.spec.raw, b.raw_cat, b.spec.arrow_budget);
      break;
  }
  return b;
}

int object_by_name(const FiniteCategory& C, const std::string& name) {
  for (int o = 0; o < C.num_objects(); ++o)
    if (C.object_name(o) == name) return o;
  throw std::runtime_error("unknown object name '" + name + "'");
}

void write_out(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(Built& b, const std::string& only, const std::string& format,
               const std::string& out) {
  RunReport report;
  report.name = b.spec.name;
  bool all_pass = true;
  if (b.raw_pol) {
    report.kind = "raw";
    report.capacitor = validate_category(b.raw_cat);
    report.capacitor.merge(validate_refinement(b.raw_cat, b.raw_pol->positive));
    report.capacitor.merge(validate_refinement(b.raw_cat, b.raw_pol->negative));
    all_pass = report.capacitor.ok();
    if (all_pass && (only.empty() || only == "completion")) {
      Monopole M{&b.raw_cat, b.raw_pol->positive, false};
      for (int x = 0; x < b.raw_cat.num_objects(); ++x) {
        CompletionResult c = completion(M, x);
        report.completions.push_back(
            {b.raw_cat.object_name(x),
             c.absent ? "-" : std::to_string(c.unit),
             c.absent ? "(absent)" : b.raw_cat.object_name(c.object)});
        if (c.absent) all_pass = false;
      }
    }
  } else {
    CapacitorSpec& spec = *b.cap();
    const FiniteCategory& C = *spec.C;
    report.kind = b.spec.kind == UniverseKind::kPoset ? "poset"
                  : b.spec.kind == UniverseKind::kBoolean ? "boolean" : "ring";
    if (only.empty() || only == "capacitor" || only == "ledger" ||
        only == "corollary")
      report.capacitor = verify_capacitor(spec);
    all_pass = report.capacitor.ok();
    if (all_pass && (only.empty() || only == "ledger")) {
      report.ledger = verify_theorem_main(spec);
      for (const auto& e : report.ledger) all_pass = all_pass && e.holds;
    }
    if (report.capacitor.ok() && (only.empty() || only == "corollary")) {
      report.has_corollary = true;
      report.corollary = verify_corollary_main(spec);
      all_pass = all_pass && report.corollary.enough_injectives &&
                 report.corollary.injectives_equal_completes &&
                 report.corollary.equivalent;
    }
    if (only.empty() || only == "completion") {
      Monopole M{spec.C, spec.positive, false};
      for (int x = 0; x < C.num_objects(); ++x) {
        CompletionResult c = relative_completion(M, x, spec.H);
        report.completions.push_back(
            {C.object_name(x), c.absent ? "-" : std::to_string(c.unit),
             c.absent ? "(absent)" : C.object_name(c.object)});
        if (c.absent) all_pass = false;
      }
      if (only == "completion") all_pass = true;
      for (const auto& c : report.completions)
        if (c[2] == "(absent)") all_pass = false;
    }
  }
  report.only_requested_pass = all_pass;
  if (format == "json") {
    json j = report_to_json(report);
    j["pass"] = all_pass;
    write_out(j.dump(2) + "\n", out);
  } else {
    write_out(report_to_text(report) +
                  std::string("result: ") + (all_pass ? "pass" : "FAIL") + "\n",
              out);
  }
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// complete: one object's hull

int cmd_complete(Built& b, const std::string& object, const std::string& format,
                 const std::string& out) {
  const FiniteCategory& C = b.base();
  int x = object_by_name(C, object);
  CompletionResult c;
  if (b.raw_pol) {
    Monopole M{&b.raw_cat, b.raw_pol->positive, false};
    c = completion(M, x);
  } else {
    CapacitorSpec& spec = *b.cap();
    Monopole M{spec.C, spec.positive, false};
    c = relative_completion(M, x, spec.H);
  }
  if (format == "json") {
    json j = completion_to_json(c);
    j["object_name"] = c.absent ? "" : C.object_name(c.object);
    write_out(j.dump(2) + "\n", out);
  } else {
    std::string text = "completion of " + object + ": ";
    text += c.absent ? "(absent)\n"
                     : C.object_name(c.object) + " via arrow " +
                           std::to_string(c.unit) + "\n";
    write_out(text, out);
  }
  return c.absent ? 1 : 0;
}

// ---------------------------------------------------------------------------
// export: DOT diagrams, Hasse-reduced for posets

std::string poset_dot(const FinPoset& P) {
  std::string dot = "digraph \"" + P.name + "\" {\n  rankdir=BT;\n";
  for (int i = 0; i < P.n; ++i)
    dot += "  n" + std::to_string(i) + " [label=\"e" + std::to_string(i) + "\"];\n";
  for (int i = 0; i < P.n; ++i)
    for (int j = 0; j < P.n; ++j) {
      if (i == j || !P.le(i, j)) continue;
      bool covers = true;  // Hasse reduction: no element strictly between
      for (int k = 0; k < P.n && covers; ++k)
        if (k != i && k != j && P.le(i, k) && P.le(k, j)) covers = false;
      if (covers) dot += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
    }
  dot += "}\n";
  return dot;
}

std::string category_dot(const FiniteCategory& C, bool skip_identities) {
  std::string dot = "digraph \"" + std::string("category") + "\" {\n";
  for (int o = 0; o < C.num_objects(); ++o)
    dot += "  n" + std::to_string(o) + " [label=\"" + C.object_name(o) + "\"];\n";
  for (int a = 0; a < C.num_arrows(); ++a) {
    if (skip_identities && a == C.identity(C.src(a)) && C.src(a) == C.tgt(a))
      continue;
    dot += "  n" + std::to_string(C.src(a)) + " -> n" + std::to_string(C.tgt(a)) +
           " [label=\"" + std::to_string(a) + "\"];\n";
  }
  dot += "}\n";
  return dot;
}

int cmd_export(Built& b, const std::string& object, const std::string& out,
               bool skip_identities) {
  if (object == "category") {
    write_out(category_dot(b.base(), skip_identities), out);
    return 0;
  }
  if (b.poset) {
    int x = object_by_name(b.poset->u->cat, object);
    write_out(poset_dot(b.poset->u->objects[x]), out);
    return 0;
  }
  if (b.ba) {
    int x = object_by_name(b.ba->u->cat, object);
    // a powerset algebra drawn as its inclusion order
    int atoms = b.ba->u->objects[x].atoms;
    FinPoset P{b.ba->u->objects[x].name, 1 << atoms, {}};
    P.leq.assign(P.n, std::vector<bool>(P.n, false));
    for (int i = 0; i < P.n; ++i)
      for (int j = 0; j < P.n; ++j) P.leq[i][j] = (i & ~j) == 0;
    write_out(poset_dot(P), out);
    return 0;
  }
  if (b.ring) {
    int x = object_by_name(b.ring->u->cat, object);
    write_out(poset_dot(ideal_lattice(b.ring->u->objects[x])), out);
    return 0;
  }
  throw std::runtime_error("unknown object name '" + object + "'");
}

// ---------------------------------------------------------------------------
// oracle: stand-alone brute-force passes, independent of the library paths,
// whose outputs are frozen as golden files

// cut completion by closing the principal down-sets under intersection (the
// empty intersection contributes the whole carrier)
json macneille_oracle() {
  json entries = json::array();
  for (const FinPoset& P : all_posets_up_to(4)) {
    std::vector<std::uint32_t> principal;
    for (int p = 0; p < P.n; ++p) {
      std::uint32_t d = 0;
      for (int q = 0; q < P.n; ++q)
        if (P.le(q, p)) d |= 1u << q;
      principal.push_back(d);
    }
    std::vector<std::uint32_t> cuts;
    std::uint32_t full = P.n == 0 ? 0 : (1u << P.n) - 1;
    for (std::uint32_t sel = 0; sel < (1u << P.n); ++sel) {
      std::uint32_t inter = full;
      for (int p = 0; p < P.n; ++p)
        if (sel >> p & 1u) inter &= principal[p];
      if (std::find(cuts.begin(), cuts.end(), inter) == cuts.end())
        cuts.push_back(inter);
    }
    entries.push_back({{"name", P.name},
                       {"elements", P.n},
                       {"cuts", static_cast<int>(cuts.size())}});
  }
  // the empty poset, excluded from universes, has the one-cut completion
  entries.push_back({{"name", "empty"}, {"elements", 0}, {"cuts", 1}});
  return json{{"oracle", "macneille"}, {"entries", entries}};
}

// full function-space sweep: every self-map is tested for additivity, then
// the multiplier identities are checked pair by pair
json multiplier_oracle_entry(const FinRing& R) {
  int n = R.n;
  std::vector<std::vector<int>> endos;
  std::vector<int> f(n, 0);
  while (true) {
    bool additive = true;
    for (int a = 0; a < n && additive; ++a)
      for (int b = 0; b < n && additive; ++b)
        if (f[R.add[a][b]] != R.add[f[a]][f[b]]) additive = false;
    if (additive) endos.push_back(f);
    int i = n - 1;
    while (i >= 0 && f[i] == n - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
  for (const auto& lam : endos)
    for (const auto& rho : endos) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int bb = 0; bb < n && ok; ++bb)
          if (lam[R.mul[a][bb]] != R.mul[lam[a]][bb] ||
              rho[R.mul[a][bb]] != R.mul[a][rho[bb]] ||
              R.mul[a][lam[bb]] != R.mul[rho[a]][bb])
            ok = false;
      if (ok) pairs.push_back({lam, rho});
    }
  std::sort(pairs.begin(), pairs.end());
  int m = static_cast<int>(pairs.size());
  auto pidx = [&](const std::pair<std::vector<int>, std::vector<int>>& p) {
    return static_cast<int>(
        std::lower_bound(pairs.begin(), pairs.end(), p) - pairs.begin());
  };
  std::vector<int> emb(n);
  for (int x = 0; x < n; ++x) {
    std::pair<std::vector<int>, std::vector<int>> p{std::vector<int>(n),
                                                    std::vector<int>(n)};
    for (int a = 0; a < n; ++a) {
      p.first[a] = R.mul[x][a];
      p.second[a] = R.mul[a][x];
    }
    emb[x] = pidx(p);
  }
  std::vector<int> sorted = emb;
  std::sort(sorted.begin(), sorted.end());
  bool emb_injective =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  // unitality of the multiplier ring: some pair acting as identity on both
  // sides, i.e. (id, id)
  std::vector<int> id(n);
  for (int x = 0; x < n; ++x) id[x] = x;
  bool has_identity_pair =
      std::binary_search(pairs.begin(), pairs.end(), std::make_pair(id, id));
  json entry = {{"name", R.name},
                {"order", n},
                {"multiplier_order", m},
                {"multiplier_has_identity_pair", has_identity_pair},
                {"embedding_injective", emb_injective},
                {"embedding_surjective", emb_injective && m == n}};
  // freeze the full multiplier tables of the column ring for the
  // main-path-equals-oracle comparison
  if (R.name == "C2") {
    json add = json::array(), mul = json::array();
    for (int p = 0; p < m; ++p) {
      json arow = json::array(), mrow = json::array();
      for (int q = 0; q < m; ++q) {
        std::pair<std::vector<int>, std::vector<int>> s{std::vector<int>(n),
                                                        std::vector<int>(n)};
        std::pair<std::vector<int>, std::vector<int>> t{std::vector<int>(n),
                                                        std::vector<int>(n)};
        for (int x = 0; x < n; ++x) {
          s.first[x] = R.add[pairs[p].first[x]][pairs[q].first[x]];
          s.second[x] = R.add[pairs[p].second[x]][pairs[q].second[x]];
          t.first[x] = pairs[p].first[pairs[q].first[x]];
          t.second[x] = pairs[q].second[pairs[p].second[x]];
        }
        arow.push_back(pidx(s));
        mrow.push_back(pidx(t));
      }
      add.push_back(arow);
      mul.push_back(mrow);
    }
    entry["add"] = add;
    entry["mul"] = mul;
    entry["embedding"] = emb;
  }
  return entry;
}

FinRing column_ring() {
  return ring_from_f2_matrices(
      "C2", 2, {{1, 0, 0, 0}, {0, 0, 1, 0}});
}

json multiplier_oracle() {
  std::vector<FinRing> tests;
  tests.push_back(ring_zn(2));
  tests.push_back(ring_zn(3));
  tests.push_back(ring_zn(4));
  tests.push_back(ring_zn(8));
  FinRing f22 = ring_product(ring_zn(2), ring_zn(2));
  f22.name = "F2xF2";
  tests.push_back(f22);
  tests.push_back(column_ring());
  json entries = json::array();
  for (const FinRing& R : tests) entries.push_back(multiplier_oracle_entry(R));
  return json{{"oracle", "multiplier"}, {"entries", entries}};
}

int cmd_oracle(const std::string& outdir) {
  auto dump = [&](const json& j, const std::string& file) {
    std::ofstream f(outdir + "/" + file, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + outdir + "/" + file);
    f << j.dump(2) << "\n";
    std::cout << "wrote " << outdir << "/" << file << "\n";
  };
  dump(macneille_oracle(), "macneille_oracle.json");
  dump(multiplier_oracle(), "multiplier_oracle.json");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite verification workbench for polarized completion structures"};
  app.require_subcommand(1);

  std::string universe, kind, only, format = "text", out, object, outdir = "data/golden";
  int jobs = 1, budget = polcat::kDefaultArrowBudget;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--universe", universe, "universe file")->required();
    cmd->add_option("--kind", kind, "poset|boolean|ring|raw (overrides the file)");
    cmd->add_option("--jobs", jobs, "worker threads (reserved; runs are deterministic)");
    cmd->add_option("--budget", budget, "arrow budget");
  };

  CLI::App* verify = app.add_subcommand("verify", "build, verify, and report");
  add_common(verify);
  verify->add_option("--only", only,
                     "capacitor|ledger|corollary|completion (default: all)");
  verify->add_option("--format", format, "text|json");
  verify->add_option("--out", out, "output path (default: stdout)");

  CLI::App* complete = app.add_subcommand("complete", "print one object's hull");
  add_common(complete);
  complete->add_option("--object", object, "object name")->required();
  complete->add_option("--format", format, "text|json");
  complete->add_option("--out", out, "output path (default: stdout)");

  CLI::App* exp = app.add_subcommand("export", "DOT diagram export");
  add_common(exp);
  exp->add_option("--object", object,
                  "object name, or 'category' for the whole arrow digraph")
      ->required();
  exp->add_option("--out", out, "output path (default: stdout)");
  bool skip_identities = false;
  exp->add_flag("--skip-identities", skip_identities,
                "suppress identity loops in category export");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "run the stand-alone brute-force oracles and write golden files");
  oracle->add_option("--out", outdir, "output directory (default: data/golden)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (oracle->parsed()) return cmd_oracle(outdir);
    polcat::UniverseSpec spec = polcat::parse_universe(universe, kind);
    if (budget != polcat::kDefaultArrowBudget) spec.arrow_budget = budget;
    Built b = build(std::move(spec));
    if (verify->parsed()) return cmd_verify(b, only, format, out);
    if (complete->parsed()) return cmd_complete(b, object, format, out);
    if (exp->parsed()) return cmd_export(b, object, out, skip_identities);
  } catch (const std::runtime_error& e) {
    std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    if (what.find("budget") != std::string::npos) return 3;
    if (what.find("malformed") != std::string::npos ||
        what.find("unknown") != std::string::npos ||
        what.find("cannot read") != std::string::npos)
      return 2;
    return 1;
  } catch (const std::exception& e) {
    // schema violations surface as library exceptions: still a parse error
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
