#include "polcat/fincat.hpp"

#include <algorithm>

namespace polcat {

int FiniteCategory::add_object(std::string name) {
  if (finalized_) throw std::runtime_error("category is frozen");
  object_names_.push_back(std::move(name));
  identity_.push_back(-1);
  return num_objects() - 1;
}

int FiniteCategory::add_arrow(int src, int tgt) {
  if (finalized_) throw std::runtime_error("category is frozen");
  if (src < 0 || src >= num_objects() || tgt < 0 || tgt >= num_objects())
    throw std::runtime_error("arrow endpoints out of range");
  arrows_.push_back(Arrow{num_arrows(), src, tgt});
  return num_arrows() - 1;
}

void FiniteCategory::set_compose(int g, int f, int gf) {
  if (finalized_) throw std::runtime_error("category is frozen");
  pending_.push_back({{g, f}, gf});
}

void FiniteCategory::set_identity(int obj, int arrow) {
  if (finalized_) throw std::runtime_error("category is frozen");
  identity_.at(obj) = arrow;
}

void FiniteCategory::finalize(int arrow_budget) {
  if (finalized_) return;
  if (num_arrows() > arrow_budget)
    throw std::runtime_error("arrow budget exceeded: " + std::to_string(num_arrows()) +
                             " arrows > budget " + std::to_string(arrow_budget));
  out_.assign(num_objects(), {});
  into_.assign(num_objects(), {});
  into_pos_.assign(num_arrows(), -1);
  for (const Arrow& a : arrows_) {
    out_[a.src].push_back(a.id);
    into_pos_[a.id] = static_cast<int>(into_[a.tgt].size());
    into_[a.tgt].push_back(a.id);
  }
  comp_.assign(num_arrows(), {});
  for (int g = 0; g < num_arrows(); ++g)
    comp_[g].assign(into_[src(g)].size(), -1);
  for (const auto& [pair, gf] : pending_) {
    auto [g, f] = pair;
    if (g < 0 || g >= num_arrows() || f < 0 || f >= num_arrows() || gf < 0 || gf >= num_arrows())
      throw std::runtime_error("composition entry references unknown arrow");
    if (tgt(f) != src(g))
      throw std::runtime_error("composition entry for a non-composable pair");
    comp_[g][into_pos_[f]] = gf;
  }
  pending_.clear();
  for (int g = 0; g < num_arrows(); ++g)
    for (int v : comp_[g])
      if (v < 0)
        throw std::runtime_error("composition table is not total over composable pairs");
  hom_.assign(num_objects(), std::vector<std::vector<int>>(num_objects()));
  for (const Arrow& a : arrows_) hom_[a.src][a.tgt].push_back(a.id);
  finalized_ = true;
}

Report FiniteCategory::validate() const {
  Report r;
  for (int o = 0; o < num_objects(); ++o) {
    int e = identity_[o];
    if (e < 0 || e >= num_arrows() || src(e) != o || tgt(e) != o) {
      r.fail("object " + object_name(o) + " lacks a well-typed identity arrow");
      continue;
    }
    for (int f : out_[o])
      if (compose(f, e) != f)
        r.fail("identity not right-neutral: arrow " + std::to_string(f) + " at " + object_name(o));
    for (int f : into_[o])
      if (compose(e, f) != f)
        r.fail("identity not left-neutral: arrow " + std::to_string(f) + " at " + object_name(o));
  }
  // typing of the composition table
  for (int g = 0; g < num_arrows(); ++g)
    for (int f : into_[src(g)]) {
      int gf = compose(g, f);
      if (src(gf) != src(f) || tgt(gf) != tgt(g))
        r.fail("composite mistyped: (" + std::to_string(g) + "," + std::to_string(f) + ")");
    }
  // associativity on every composable triple
  for (int h = 0; h < num_arrows(); ++h)
    for (int g : into_[src(h)])
      for (int f : into_[src(g)])
        if (compose(compose(h, g), f) != compose(h, compose(g, f)))
          r.fail("associativity fails on triple (" + std::to_string(h) + "," +
                 std::to_string(g) + "," + std::to_string(f) + ")");
  return r;
}

Report validate_category(const FiniteCategory& C) { return C.validate(); }

static void check_arrow(const FiniteCategory& C, int f) {
  if (f < 0 || f >= C.num_arrows()) throw std::runtime_error("unknown arrow id");
}

bool is_monic(const FiniteCategory& C, int f) {
  check_arrow(C, f);
  int a = C.src(f);
  for (int z = 0; z < C.num_objects(); ++z) {
    const auto& hs = C.hom(z, a);
    for (size_t i = 0; i < hs.size(); ++i)
      for (size_t j = i + 1; j < hs.size(); ++j)
        if (C.compose(f, hs[i]) == C.compose(f, hs[j])) return false;
  }
  return true;
}

bool is_epic(const FiniteCategory& C, int f) {
  check_arrow(C, f);
  int b = C.tgt(f);
  for (int z = 0; z < C.num_objects(); ++z) {
    const auto& hs = C.hom(b, z);
    for (size_t i = 0; i < hs.size(); ++i)
      for (size_t j = i + 1; j < hs.size(); ++j)
        if (C.compose(hs[i], f) == C.compose(hs[j], f)) return false;
  }
  return true;
}

std::optional<int> inverse(const FiniteCategory& C, int f) {
  check_arrow(C, f);
  for (int g : C.hom(C.tgt(f), C.src(f)))
    if (C.compose(g, f) == C.identity(C.src(f)) && C.compose(f, g) == C.identity(C.tgt(f)))
      return g;
  return std::nullopt;
}

bool is_iso(const FiniteCategory& C, int f) { return inverse(C, f).has_value(); }

bool is_split_monic(const FiniteCategory& C, int f) {
  check_arrow(C, f);
  for (int r : C.hom(C.tgt(f), C.src(f)))
    if (C.compose(r, f) == C.identity(C.src(f))) return true;
  return false;
}

bool is_split_epic(const FiniteCategory& C, int f) {
  check_arrow(C, f);
  for (int s : C.hom(C.tgt(f), C.src(f)))
    if (C.compose(f, s) == C.identity(C.tgt(f))) return true;
  return false;
}

bool is_left_orthogonal(const FiniteCategory& C, int a, int b) {
  check_arrow(C, a);
  check_arrow(C, b);
  // squares  src(a) --g--> src(b),  tgt(a) --h--> tgt(b)  with b∘g = h∘a
  for (int g : C.hom(C.src(a), C.src(b))) {
    int bg = C.compose(b, g);
    for (int h : C.hom(C.tgt(a), C.tgt(b))) {
      if (C.compose(h, a) != bg) continue;
      int fillers = 0;
      for (int t : C.hom(C.tgt(a), C.src(b)))
        if (C.compose(t, a) == g && C.compose(b, t) == h) ++fillers;
      if (fillers != 1) return false;
    }
  }
  return true;
}

bool is_strong_epic(const FiniteCategory& C, int f) {
  check_arrow(C, f);
  for (int m = 0; m < C.num_arrows(); ++m)
    if (is_monic(C, m) && !is_left_orthogonal(C, f, m)) return false;
  return true;
}

bool is_strong_monic(const FiniteCategory& C, int f) {
  check_arrow(C, f);
  for (int e = 0; e < C.num_arrows(); ++e)
    if (is_epic(C, e) && !is_left_orthogonal(C, e, f)) return false;
  return true;
}

bool is_regular_monic(const FiniteCategory& C, int f) {
  check_arrow(C, f);
  // an equalizer is monic; the factorization property alone does not force it
  if (!is_monic(C, f)) return false;
  int y = C.tgt(f);
  // pairs (p,q) out of y equalized by f
  std::vector<std::pair<int, int>> eq;
  for (int z = 0; z < C.num_objects(); ++z) {
    const auto& hs = C.hom(y, z);
    for (int p : hs)
      for (int q : hs)
        if (p < q && C.compose(p, f) == C.compose(q, f)) eq.push_back({p, q});
  }
  for (int g = 0; g < C.num_arrows(); ++g) {
    if (C.tgt(g) != y) continue;
    bool equalizes_all = true;
    for (auto [p, q] : eq)
      if (C.compose(p, g) != C.compose(q, g)) { equalizes_all = false; break; }
    if (!equalizes_all) continue;
    bool factors = false;
    for (int h : C.hom(C.src(g), C.src(f)))
      if (C.compose(f, h) == g) { factors = true; break; }
    if (!factors) return false;
  }
  return true;
}

bool is_regular_epic(const FiniteCategory& C, int f) {
  check_arrow(C, f);
  // dually, a coequalizer is epic
  if (!is_epic(C, f)) return false;
  int x = C.src(f);
  std::vector<std::pair<int, int>> coeq;
  for (int z = 0; z < C.num_objects(); ++z) {
    const auto& hs = C.hom(z, x);
    for (int i : hs)
      for (int j : hs)
        if (i < j && C.compose(f, i) == C.compose(f, j)) coeq.push_back({i, j});
  }
  for (int h = 0; h < C.num_arrows(); ++h) {
    if (C.src(h) != x) continue;
    bool coequalizes_all = true;
    for (auto [i, j] : coeq)
      if (C.compose(h, i) != C.compose(h, j)) { coequalizes_all = false; break; }
    if (!coequalizes_all) continue;
    bool factors = false;
    for (int k : C.hom(C.tgt(f), C.tgt(h)))
      if (C.compose(k, f) == h) { factors = true; break; }
    if (!factors) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Universal constructions.  Each kind enumerates candidate apexes in
// object-id order and returns the first verified universal object, so results
// are deterministic across runs.

namespace {

// A cone for our purposes is an apex plus a fixed number of legs satisfying a
// kind-specific side condition; universality is "every cone factors through
// this one by exactly one mediating arrow".
struct ConeSpec {
  int legs = 0;
  // leg endpoints: leg i goes apex -> leg_tgt[i] (limits) or leg_src[i] -> apex
  // (colimits); handled by the callers below.
};

}  // namespace

static UniversalResult find_limit(
    const FiniteCategory& C, const std::vector<int>& leg_tgts,
    const std::function<bool(const std::vector<int>&)>& legs_ok) {
  // limit = terminal cone: apex w with legs w -> leg_tgts[i]
  int n = static_cast<int>(leg_tgts.size());
  // enumerate all cones first
  std::vector<std::pair<int, std::vector<int>>> cones;
  for (int w = 0; w < C.num_objects(); ++w) {
    std::vector<int> legs(n);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        if (legs_ok(legs)) cones.push_back({w, legs});
        return;
      }
      for (int l : C.hom(w, leg_tgts[i])) {
        legs[i] = l;
        rec(i + 1);
      }
    };
    rec(0);
  }
  for (const auto& [w, legs] : cones) {
    bool universal = true;
    for (const auto& [z, zlegs] : cones) {
      int mediators = 0;
      for (int m : C.hom(z, w)) {
        bool match = true;
        for (int i = 0; i < n && match; ++i)
          if (C.compose(legs[i], m) != zlegs[i]) match = false;
        if (match) ++mediators;
      }
      if (mediators != 1) { universal = false; break; }
    }
    if (universal) return UniversalResult{false, w, legs};
  }
  return {};
}

static UniversalResult find_colimit(
    const FiniteCategory& C, const std::vector<int>& leg_srcs,
    const std::function<bool(const std::vector<int>&)>& legs_ok) {
  int n = static_cast<int>(leg_srcs.size());
  std::vector<std::pair<int, std::vector<int>>> cones;
  for (int w = 0; w < C.num_objects(); ++w) {
    std::vector<int> legs(n);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        if (legs_ok(legs)) cones.push_back({w, legs});
        return;
      }
      for (int l : C.hom(leg_srcs[i], w)) {
        legs[i] = l;
        rec(i + 1);
      }
    };
    rec(0);
  }
  for (const auto& [w, legs] : cones) {
    bool universal = true;
    for (const auto& [z, zlegs] : cones) {
      int mediators = 0;
      for (int m : C.hom(w, z)) {
        bool match = true;
        for (int i = 0; i < n && match; ++i)
          if (C.compose(m, legs[i]) != zlegs[i]) match = false;
        if (match) ++mediators;
      }
      if (mediators != 1) { universal = false; break; }
    }
    if (universal) return UniversalResult{false, w, legs};
  }
  return {};
}

UniversalResult find_universal(const FiniteCategory& C, UniversalKind kind,
                               UniversalData d) {
  auto always = [](const std::vector<int>&) { return true; };
  switch (kind) {
    case UniversalKind::kTerminal:
      return find_limit(C, {}, always);
    case UniversalKind::kInitial:
      return find_colimit(C, {}, always);
    case UniversalKind::kProduct:
      check_arrow(C, 0);  // no-op guard for empty categories
      return find_limit(C, {d.a, d.b}, always);
    case UniversalKind::kCoproduct:
      return find_colimit(C, {d.a, d.b}, always);
    case UniversalKind::kEqualizer: {
      check_arrow(C, d.a);
      check_arrow(C, d.b);
      if (C.src(d.a) != C.src(d.b) || C.tgt(d.a) != C.tgt(d.b))
        throw std::runtime_error("equalizer needs a parallel pair");
      int p = d.a, q = d.b;
      return find_limit(C, {C.src(p)}, [&](const std::vector<int>& legs) {
        return C.compose(p, legs[0]) == C.compose(q, legs[0]);
      });
    }
    case UniversalKind::kCoequalizer: {
      check_arrow(C, d.a);
      check_arrow(C, d.b);
      if (C.src(d.a) != C.src(d.b) || C.tgt(d.a) != C.tgt(d.b))
        throw std::runtime_error("coequalizer needs a parallel pair");
      int p = d.a, q = d.b;
      return find_colimit(C, {C.tgt(p)}, [&](const std::vector<int>& legs) {
        return C.compose(legs[0], p) == C.compose(legs[0], q);
      });
    }
    case UniversalKind::kPullback: {
      check_arrow(C, d.a);
      check_arrow(C, d.b);
      if (C.tgt(d.a) != C.tgt(d.b)) throw std::runtime_error("pullback needs a cospan");
      int f = d.a, g = d.b;
      return find_limit(C, {C.src(f), C.src(g)}, [&](const std::vector<int>& legs) {
        return C.compose(f, legs[0]) == C.compose(g, legs[1]);
      });
    }
    case UniversalKind::kPushout: {
      check_arrow(C, d.a);
      check_arrow(C, d.b);
      if (C.src(d.a) != C.src(d.b)) throw std::runtime_error("pushout needs a span");
      int f = d.a, g = d.b;
      return find_colimit(C, {C.tgt(f), C.tgt(g)}, [&](const std::vector<int>& legs) {
        return C.compose(legs[0], f) == C.compose(legs[1], g);
      });
    }
  }
  return {};
}

UniversalResult kernel_pair(const FiniteCategory& C, int f) {
  return find_universal(C, UniversalKind::kPullback, {f, f});
}

UniversalResult cokernel_pair(const FiniteCategory& C, int f) {
  return find_universal(C, UniversalKind::kPushout, {f, f});
}

UniversalResult image(const FiniteCategory& C, int f) {
  UniversalResult ck = cokernel_pair(C, f);
  if (ck.absent) return {};
  return find_universal(C, UniversalKind::kEqualizer, {ck.legs[0], ck.legs[1]});
}

UniversalResult coimage(const FiniteCategory& C, int f) {
  UniversalResult kp = kernel_pair(C, f);
  if (kp.absent) return {};
  return find_universal(C, UniversalKind::kCoequalizer, {kp.legs[0], kp.legs[1]});
}

std::optional<int> regular_comparison(const FiniteCategory& C, int f) {
  UniversalResult im = image(C, f);      // legs[0]: Im(f) -> tgt(f)
  UniversalResult coim = coimage(C, f);  // legs[0]: src(f) -> CoIm(f)
  if (im.absent || coim.absent) return std::nullopt;
  int m = im.legs[0], q = coim.legs[0];
  // f factors through Im(f): f = m∘u by the equalizer property; u factors
  // through the coequalizer q as u = rho∘q.  Search for rho directly.
  for (int rho : C.hom(coim.apex, im.apex)) {
    if (C.compose(m, C.compose(rho, q)) == f) {
      if (!is_monic(C, rho) || !is_epic(C, rho))
        throw std::runtime_error("comparison arrow failed its monic+epic invariant");
      return rho;
    }
  }
  return std::nullopt;
}

bool is_regular(const FiniteCategory& C, int f) {
  auto rho = regular_comparison(C, f);
  if (!rho) throw std::runtime_error("comparison undefined");
  return is_iso(C, *rho);
}

FiniteCategory opposite(const FiniteCategory& C) {
  FiniteCategory D;
  for (int o = 0; o < C.num_objects(); ++o) D.add_object(C.object_name(o));
  for (int a = 0; a < C.num_arrows(); ++a) D.add_arrow(C.tgt(a), C.src(a));
  for (int o = 0; o < C.num_objects(); ++o) D.set_identity(o, C.identity(o));
  for (int g = 0; g < C.num_arrows(); ++g)
    for (int f : C.arrows_into(C.src(g))) D.set_compose(f, g, C.compose(g, f));
  D.finalize(C.num_arrows());
  return D;
}

Functor identity_functor(const FiniteCategory& C) {
  Functor F;
  F.dom = &C;
  F.cod = &C;
  F.obj.resize(C.num_objects());
  F.arr.resize(C.num_arrows());
  for (int o = 0; o < C.num_objects(); ++o) F.obj[o] = o;
  for (int a = 0; a < C.num_arrows(); ++a) F.arr[a] = a;
  return F;
}

Report validate_functor(const Functor& F) {
  Report r;
  const FiniteCategory& C = *F.dom;
  const FiniteCategory& D = *F.cod;
  if (static_cast<int>(F.obj.size()) != C.num_objects() ||
      static_cast<int>(F.arr.size()) != C.num_arrows()) {
    r.fail("object/arrow maps are not total");
    return r;
  }
  for (int a = 0; a < C.num_arrows(); ++a) {
    int fa = F.arr[a];
    int want_src = F.obj[F.contravariant ? C.tgt(a) : C.src(a)];
    int want_tgt = F.obj[F.contravariant ? C.src(a) : C.tgt(a)];
    if (D.src(fa) != want_src || D.tgt(fa) != want_tgt)
      r.fail("arrow " + std::to_string(a) + " mistyped under the functor");
  }
  for (int o = 0; o < C.num_objects(); ++o)
    if (F.arr[C.identity(o)] != D.identity(F.obj[o]))
      r.fail("identity of " + C.object_name(o) + " not preserved");
  for (int g = 0; g < C.num_arrows(); ++g)
    for (int f : C.arrows_into(C.src(g))) {
      int want = F.contravariant ? D.compose(F.arr[f], F.arr[g])
                                 : D.compose(F.arr[g], F.arr[f]);
      if (F.arr[C.compose(g, f)] != want)
        r.fail("composition not preserved on (" + std::to_string(g) + "," +
               std::to_string(f) + ")");
    }
  return r;
}

bool is_faithful(const Functor& F) {
  const FiniteCategory& C = *F.dom;
  for (int x = 0; x < C.num_objects(); ++x)
    for (int y = 0; y < C.num_objects(); ++y) {
      const auto& hs = C.hom(x, y);
      for (size_t i = 0; i < hs.size(); ++i)
        for (size_t j = i + 1; j < hs.size(); ++j)
          if (F.arr[hs[i]] == F.arr[hs[j]]) return false;
    }
  return true;
}

Functor compose_functors(const Functor& F, const Functor& G) {
  if (F.cod != G.dom) throw std::runtime_error("functors not composable");
  Functor H;
  H.dom = F.dom;
  H.cod = G.cod;
  H.contravariant = (F.contravariant != G.contravariant);
  H.obj.resize(F.obj.size());
  H.arr.resize(F.arr.size());
  for (size_t o = 0; o < F.obj.size(); ++o) H.obj[o] = G.obj.at(F.obj[o]);
  for (size_t a = 0; a < F.arr.size(); ++a) H.arr[a] = G.arr.at(F.arr[a]);
  return H;
}

}  // namespace polcat
