#pragma once
// JSON interchange: categories and polarities, instance file entries
// (posets, Boolean algebras, rings), universe specs, completion results,
// ledgers, and run reports with a stable field order.

#include "polcat/boolean.hpp"
#include "polcat/posets.hpp"
#include "polcat/rings.hpp"

#include <json.hpp>

namespace polcat {

using json = nlohmann::ordered_json;

// Category documents: objects (names), arrows [{id, src, tgt}],
// compose [{g, f, gf}], identities (object name -> arrow id).
json category_to_json(const FiniteCategory& C);
FiniteCategory category_from_json(const json& j, int arrow_budget = kDefaultArrowBudget);

// The category document extended with positive / negative arrow-id arrays.
json polarity_to_json(const Polarity& P);
// Fills C and returns the polarity over it; C must outlive the result.
Polarity polarity_from_json(const json& j, FiniteCategory& C,
                            int arrow_budget = kDefaultArrowBudget);

json completion_to_json(const CompletionResult& r);
json ledger_to_json(const std::vector<LedgerEntry>& ledger);
json corollary_to_json(const CorollaryResult& r);

// {name, elements: [...], leq: [[x, y], ...]}; reflexive pairs implied and
// the listed pairs are closed transitively before validation.
FinPoset poset_from_json(const json& j);
json poset_to_json(const FinPoset& P);

// {name, atoms: n} or explicit tables {name, elements, meet, join, neg}.
FinBoolAlg ba_from_json(const json& j);

// {name, elements: n, add: table, mul: table}, or one of the generators
// {name, kind: "zn", n}, {name, kind: "product", factors: [entries]},
// {name, kind: "f2matrix", dim, basis: [[row-major 0/1 entries], ...]}.
FinRing ring_from_json(const json& j);

enum class UniverseKind { kPoset, kBoolean, kRing, kRaw };

struct UniverseSpec {
  UniverseKind kind = UniverseKind::kPoset;
  std::string name;
  std::vector<FinPoset> posets;
  std::vector<FinBoolAlg> algebras;
  std::vector<FinRing> rings;
  json raw;  // raw-category polarity document
  int arrow_budget = kDefaultArrowBudget;
};

// {kind, name?, entries: [...], options?: {budget}}; the kind argument, when
// nonempty, overrides the file.
UniverseSpec parse_universe(const std::string& path, const std::string& kind_flag);

struct RunReport {
  std::string kind, name;
  Report capacitor;
  std::vector<LedgerEntry> ledger;
  bool has_corollary = false;  // the corollary section was actually evaluated
  CorollaryResult corollary;
  // per object: name, unit arrow id, completion target name
  std::vector<std::array<std::string, 3>> completions;
  bool only_requested_pass = true;
};

json report_to_json(const RunReport& r);
std::string report_to_text(const RunReport& r);

}  // namespace polcat
