#include "polcat/posets.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace polcat {

Report validate_poset(const FinPoset& P) {
  Report r;
  if (P.n > kMaxPosetSize) {
    r.fail("poset too large (max " + std::to_string(kMaxPosetSize) + " elements)");
    return r;
  }
  if (static_cast<int>(P.leq.size()) != P.n) {
    r.fail("relation matrix size mismatch");
    return r;
  }
  for (int i = 0; i < P.n; ++i) {
    if (static_cast<int>(P.leq[i].size()) != P.n) {
      r.fail("relation matrix row size mismatch");
      return r;
    }
    if (!P.leq[i][i]) r.fail("not reflexive at " + std::to_string(i));
  }
  for (int i = 0; i < P.n; ++i)
    for (int j = 0; j < P.n; ++j) {
      if (i != j && P.leq[i][j] && P.leq[j][i])
        r.fail("not antisymmetric on (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (P.leq[i][j])
        for (int k = 0; k < P.n; ++k)
          if (P.leq[j][k] && !P.leq[i][k])
            r.fail("not transitive on (" + std::to_string(i) + "," +
                    std::to_string(j) + "," + std::to_string(k) + ")");
    }
  return r;
}

Subset up_set(const FinPoset& P, Subset A) {
  Subset out = 0;
  for (int u = 0; u < P.n; ++u) {
    bool ok = true;
    for (int a = 0; a < P.n && ok; ++a)
      if ((A >> a & 1u) && !P.le(a, u)) ok = false;
    if (ok) out |= 1u << u;
  }
  return out;
}

Subset down_set(const FinPoset& P, Subset A) {
  Subset out = 0;
  for (int l = 0; l < P.n; ++l) {
    bool ok = true;
    for (int a = 0; a < P.n && ok; ++a)
      if ((A >> a & 1u) && !P.le(l, a)) ok = false;
    if (ok) out |= 1u << l;
  }
  return out;
}

std::optional<int> sup(const FinPoset& P, Subset A) {
  Subset ub = up_set(P, A);
  for (int u = 0; u < P.n; ++u) {
    if (!(ub >> u & 1u)) continue;
    bool least = true;
    for (int v = 0; v < P.n && least; ++v)
      if ((ub >> v & 1u) && !P.le(u, v)) least = false;
    if (least) return u;
  }
  return std::nullopt;
}

std::optional<int> inf(const FinPoset& P, Subset A) {
  Subset lb = down_set(P, A);
  for (int l = 0; l < P.n; ++l) {
    if (!(lb >> l & 1u)) continue;
    bool greatest = true;
    for (int m = 0; m < P.n && greatest; ++m)
      if ((lb >> m & 1u) && !P.le(m, l)) greatest = false;
    if (greatest) return l;
  }
  return std::nullopt;
}

bool is_monotone(const MonotoneMap& f) {
  const FinPoset &P = *f.src, &Q = *f.tgt;
  for (int i = 0; i < P.n; ++i)
    for (int j = 0; j < P.n; ++j)
      if (P.le(i, j) && !Q.le(f.val[i], f.val[j])) return false;
  return true;
}

bool is_embedding(const MonotoneMap& f) {
  const FinPoset &P = *f.src, &Q = *f.tgt;
  for (int i = 0; i < P.n; ++i)
    for (int j = 0; j < P.n; ++j)
      if (P.le(i, j) != Q.le(f.val[i], f.val[j])) return false;
  return true;
}

bool is_join_dense(const MonotoneMap& f) {
  const FinPoset &P = *f.src, &Q = *f.tgt;
  for (int b = 0; b < Q.n; ++b) {
    Subset below = 0;
    for (int a = 0; a < P.n; ++a)
      if (Q.le(f.val[a], b)) below |= 1u << f.val[a];
    auto s = sup(Q, below);
    if (!s || *s != b) return false;
  }
  return true;
}

bool is_meet_dense(const MonotoneMap& f) {
  const FinPoset &P = *f.src, &Q = *f.tgt;
  for (int b = 0; b < Q.n; ++b) {
    Subset above = 0;
    for (int a = 0; a < P.n; ++a)
      if (Q.le(b, f.val[a])) above |= 1u << f.val[a];
    auto m = inf(Q, above);
    if (!m || *m != b) return false;
  }
  return true;
}

bool is_dense(const MonotoneMap& f) { return is_join_dense(f) && is_meet_dense(f); }

bool is_complete_lattice(const FinPoset& P) {
  // finite case: every subset including the empty one has a sup and an inf
  if (P.n == 0) return false;
  for (Subset A = 0; A < (1u << P.n); ++A)
    if (!sup(P, A) || !inf(P, A)) return false;
  return true;
}

MacNeilleLattice macneille(const FinPoset& P) {
  if (P.n > kMaxPosetSize) throw std::runtime_error("poset too large");
  MacNeilleLattice out;
  for (Subset A = 0; A < (1u << P.n); ++A)
    if (down_set(P, up_set(P, A)) == A) out.cuts.push_back(A);
  int m = static_cast<int>(out.cuts.size());
  out.lattice.name = "M(" + P.name + ")";
  out.lattice.n = m;
  out.lattice.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out.lattice.leq[i][j] = (out.cuts[i] & ~out.cuts[j]) == 0;
  out.unit.resize(P.n);
  for (int p = 0; p < P.n; ++p) {
    Subset dp = down_set(P, 1u << p);
    out.unit[p] = static_cast<int>(
        std::lower_bound(out.cuts.begin(), out.cuts.end(), dp) - out.cuts.begin());
  }
  return out;
}

// The canonical extension of f to the cut lattices, as raw cut images.
static std::vector<Subset> extension_images(const MonotoneMap& f,
                                            const std::vector<Subset>& cuts) {
  const FinPoset &P = *f.src, &Q = *f.tgt;
  Subset whole_image = 0;
  for (int x = 0; x < P.n; ++x) whole_image |= 1u << f.val[x];
  std::vector<Subset> img(cuts.size());
  for (size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i] == 0) {
      img[i] = down_set(Q, whole_image);
    } else {
      Subset fc = 0;
      for (int x = 0; x < P.n; ++x)
        if (cuts[i] >> x & 1u) fc |= 1u << f.val[x];
      img[i] = down_set(Q, up_set(Q, fc));
    }
  }
  return img;
}

bool is_continuous_map(const MonotoneMap& f) {
  if (!is_monotone(f)) return false;
  const FinPoset &P = *f.src, &Q = *f.tgt;
  std::vector<Subset> cuts;
  for (Subset A = 0; A < (1u << P.n); ++A)
    if (down_set(P, up_set(P, A)) == A) cuts.push_back(A);
  std::vector<Subset> img = extension_images(f, cuts);
  auto cut_index = [&](Subset c) {
    return std::lower_bound(cuts.begin(), cuts.end(), c) - cuts.begin();
  };
  for (size_t i = 0; i < cuts.size(); ++i)
    for (size_t j = 0; j < cuts.size(); ++j) {
      // binary meets of cuts are intersections
      if ((img[i] & img[j]) != img[cut_index(cuts[i] & cuts[j])]) return false;
      // binary joins close up via ↓↑
      Subset join = down_set(P, up_set(P, cuts[i] | cuts[j]));
      if (down_set(Q, up_set(Q, img[i] | img[j])) != img[cut_index(join)])
        return false;
    }
  return true;
}

bool preserves_nonempty_bounds(const MonotoneMap& f) {
  const FinPoset &P = *f.src, &Q = *f.tgt;
  for (Subset A = 1; A < (1u << P.n); ++A) {
    Subset fa = 0;
    for (int x = 0; x < P.n; ++x)
      if (A >> x & 1u) fa |= 1u << f.val[x];
    auto s = sup(P, A);
    if (s) {
      auto sq = sup(Q, fa);
      if (!sq || *sq != f.val[*s]) return false;
    }
    auto m = inf(P, A);
    if (m) {
      auto mq = inf(Q, fa);
      if (!mq || *mq != f.val[*m]) return false;
    }
  }
  return true;
}

MonotoneMap extend_to_macneille(const MonotoneMap& f, const MacNeilleLattice& mp,
                                const MacNeilleLattice& mq) {
  if (!is_continuous_map(f))
    throw std::runtime_error("map is not continuous; no extension exists");
  std::vector<Subset> img = extension_images(f, mp.cuts);
  MonotoneMap out;
  out.src = &mp.lattice;
  out.tgt = &mq.lattice;
  out.val.resize(mp.cuts.size());
  for (size_t i = 0; i < mp.cuts.size(); ++i) {
    auto it = std::lower_bound(mq.cuts.begin(), mq.cuts.end(), img[i]);
    if (it == mq.cuts.end() || *it != img[i])
      throw std::runtime_error("extension image is not a cut");
    out.val[i] = static_cast<int>(it - mq.cuts.begin());
  }
  return out;
}

std::vector<std::vector<int>> enumerate_monotone_maps(const FinPoset& P,
                                                      const FinPoset& Q) {
  std::vector<std::vector<int>> out;
  if (P.n == 0) {
    out.push_back({});
    return out;
  }
  if (Q.n == 0) return out;
  std::vector<int> val(P.n, 0);
  MonotoneMap f{&P, &Q, {}};
  while (true) {
    f.val = val;
    if (is_monotone(f)) out.push_back(val);
    int i = P.n - 1;
    while (i >= 0 && val[i] == Q.n - 1) val[i--] = 0;
    if (i < 0) break;
    ++val[i];
  }
  return out;
}

FinPoset canonical_poset(const FinPoset& P, std::vector<int>* perm) {
  std::vector<int> p(P.n), best;
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<bool>> best_leq;
  do {
    // relabeled matrix: new index p[i] for old element i
    std::vector<std::vector<bool>> m(P.n, std::vector<bool>(P.n, false));
    for (int i = 0; i < P.n; ++i)
      for (int j = 0; j < P.n; ++j) m[p[i]][p[j]] = P.leq[i][j];
    if (best_leq.empty() || m < best_leq) {
      best_leq = m;
      best = p;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  FinPoset out;
  out.name = P.name;
  out.n = P.n;
  out.leq = best_leq.empty() ? std::vector<std::vector<bool>>{} : best_leq;
  if (perm) *perm = best.empty() ? std::vector<int>{} : best;
  return out;
}

std::vector<FinPoset> all_posets_up_to(int n) {
  std::vector<FinPoset> out;
  std::vector<std::vector<std::vector<bool>>> seen;
  for (int k = 1; k <= n; ++k) {
    // enumerate all strict-order bit assignments on the off-diagonal pairs
    int pairs = k * (k - 1);
    for (long long mask = 0; mask < (1LL << pairs); ++mask) {
      FinPoset P;
      P.n = k;
      P.leq.assign(k, std::vector<bool>(k, false));
      int bit = 0;
      for (int i = 0; i < k; ++i) {
        P.leq[i][i] = true;
        for (int j = 0; j < k; ++j) {
          if (i == j) continue;
          if (mask >> bit & 1) P.leq[i][j] = true;
          ++bit;
        }
      }
      if (!validate_poset(P).ok()) continue;
      FinPoset c = canonical_poset(P);
      if (std::find(seen.begin(), seen.end(), c.leq) != seen.end()) continue;
      seen.push_back(c.leq);
      c.name = "P" + std::to_string(out.size());
      out.push_back(c);
    }
  }
  return out;
}

int PosetUniverse::find_object(const FinPoset& canonical) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i].n == canonical.n && objects[i].leq == canonical.leq)
      return static_cast<int>(i);
  return -1;
}

int PosetUniverse::find_arrow(int src, int tgt, const std::vector<int>& val) const {
  for (int a : cat.hom(src, tgt))
    if (maps[a] == val) return a;
  return -1;
}

static std::unique_ptr<PosetUniverse> materialize_objects(
    std::vector<FinPoset> objs, int arrow_budget) {
  auto u = std::make_unique<PosetUniverse>();
  u->objects = std::move(objs);
  for (const FinPoset& P : u->objects) u->cat.add_object(P.name);
  int nobj = static_cast<int>(u->objects.size());
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> lookup;
  for (int i = 0; i < nobj; ++i)
    for (int j = 0; j < nobj; ++j)
      for (auto& val : enumerate_monotone_maps(u->objects[i], u->objects[j])) {
        if (static_cast<int>(u->maps.size()) >= arrow_budget)
          throw std::runtime_error("arrow budget exceeded");
        int a = u->cat.add_arrow(i, j);
        lookup[{{i, j}, val}] = a;
        u->maps.push_back(std::move(val));
      }
  for (int i = 0; i < nobj; ++i) {
    std::vector<int> id(u->objects[i].n);
    std::iota(id.begin(), id.end(), 0);
    u->cat.set_identity(i, lookup.at({{i, i}, id}));
  }
  // composition table
  for (int g = 0; g < u->cat.num_arrows(); ++g)
    for (int f = 0; f < u->cat.num_arrows(); ++f) {
      if (u->cat.tgt(f) != u->cat.src(g)) continue;
      std::vector<int> comp(u->maps[f].size());
      for (size_t x = 0; x < comp.size(); ++x) comp[x] = u->maps[g][u->maps[f][x]];
      u->cat.set_compose(g, f,
                         lookup.at({{u->cat.src(f), u->cat.tgt(g)}, comp}));
    }
  u->cat.finalize(arrow_budget);
  u->embeddings.assign(u->cat.num_arrows(), false);
  u->dense_embeddings.assign(u->cat.num_arrows(), false);
  for (int a = 0; a < u->cat.num_arrows(); ++a) {
    MonotoneMap f{&u->objects[u->cat.src(a)], &u->objects[u->cat.tgt(a)], u->maps[a]};
    u->embeddings[a] = is_embedding(f);
    u->dense_embeddings[a] = u->embeddings[a] && is_dense(f);
  }
  return u;
}

std::unique_ptr<PosetUniverse> materialize_poset_universe(
    const std::vector<FinPoset>& posets, int arrow_budget) {
  std::vector<FinPoset> objs;
  for (const FinPoset& P : posets) {
    if (P.n == 0) throw std::runtime_error("empty posets are not admitted to a universe");
    Report r = validate_poset(P);
    if (!r.ok()) throw std::runtime_error("invalid poset " + P.name + ": " + r.issues.front());
    FinPoset c = canonical_poset(P);
    bool dup = false;
    for (const FinPoset& Q : objs)
      if (Q.n == c.n && Q.leq == c.leq) { dup = true; break; }
    if (!dup) objs.push_back(std::move(c));
  }
  return materialize_objects(std::move(objs), arrow_budget);
}

std::unique_ptr<PosetCapacitor> build_poset_capacitor(
    const std::vector<FinPoset>& posets, int arrow_budget) {
  // canonicalize, deduplicate, close under cut completion
  std::vector<FinPoset> objs;
  auto push_unique = [&](FinPoset c) -> bool {
    for (const FinPoset& Q : objs)
      if (Q.n == c.n && Q.leq == c.leq) return false;
    objs.push_back(std::move(c));
    return true;
  };
  for (const FinPoset& P : posets) {
    if (P.n == 0) throw std::runtime_error("empty posets are not admitted to a universe");
    Report r = validate_poset(P);
    if (!r.ok()) throw std::runtime_error("invalid poset " + P.name + ": " + r.issues.front());
    push_unique(canonical_poset(P));
  }
  for (size_t i = 0; i < objs.size(); ++i) {
    MacNeilleLattice m = macneille(objs[i]);
    FinPoset c = canonical_poset(m.lattice);
    c.name = "M(" + objs[i].name + ")";
    push_unique(std::move(c));
  }

  auto cap = std::make_unique<PosetCapacitor>();
  cap->u = materialize_objects(std::move(objs), arrow_budget);
  PosetUniverse& u = *cap->u;

  // E: complete lattices with maps preserving nonempty sups and infs
  std::vector<int> cobj;  // E object -> base object
  for (int i = 0; i < static_cast<int>(u.objects.size()); ++i)
    if (is_complete_lattice(u.objects[i])) {
      cap->E.add_object(u.objects[i].name);
      cobj.push_back(i);
    }
  std::map<int, int> base_to_e;
  for (size_t i = 0; i < cobj.size(); ++i) base_to_e[cobj[i]] = static_cast<int>(i);
  std::vector<int> earr;  // E arrow -> base arrow
  std::map<int, int> base_arr_to_e;
  for (size_t i = 0; i < cobj.size(); ++i)
    for (size_t j = 0; j < cobj.size(); ++j)
      for (int a : u.cat.hom(cobj[i], cobj[j])) {
        MonotoneMap f{&u.objects[cobj[i]], &u.objects[cobj[j]], u.maps[a]};
        if (!preserves_nonempty_bounds(f)) continue;
        int e = cap->E.add_arrow(static_cast<int>(i), static_cast<int>(j));
        earr.push_back(a);
        base_arr_to_e[a] = e;
      }
  for (size_t i = 0; i < cobj.size(); ++i)
    cap->E.set_identity(static_cast<int>(i),
                        base_arr_to_e.at(u.cat.identity(cobj[i])));
  for (int g = 0; g < static_cast<int>(earr.size()); ++g)
    for (int f = 0; f < static_cast<int>(earr.size()); ++f) {
      if (cap->E.tgt(f) != cap->E.src(g)) continue;
      cap->E.set_compose(g, f, base_arr_to_e.at(u.cat.compose(earr[g], earr[f])));
    }
  cap->E.finalize(arrow_budget);
  cap->e_obj = cobj;
  cap->e_arr = earr;

  cap->spec.U.dom = &cap->E;
  cap->spec.U.cod = &u.cat;
  cap->spec.U.obj = cobj;
  cap->spec.U.arr = earr;

  // family: cut-completion units, transported along canonical relabeling
  CompletionFamily fam;
  fam.unit.resize(u.cat.num_objects());
  fam.object.resize(u.cat.num_objects());
  for (int x = 0; x < u.cat.num_objects(); ++x) {
    MacNeilleLattice m = macneille(u.objects[x]);
    std::vector<int> perm;
    FinPoset c = canonical_poset(m.lattice, &perm);
    int target = u.find_object(c);
    if (target < 0) throw std::runtime_error("completion object missing from the closed universe");
    std::vector<int> unit_val(u.objects[x].n);
    for (int p = 0; p < u.objects[x].n; ++p) unit_val[p] = perm[m.unit[p]];
    int ua = u.find_arrow(x, target, unit_val);
    if (ua < 0) throw std::runtime_error("unit arrow missing from the universe");
    fam.unit[x] = ua;
    fam.object[x] = base_to_e.at(target);
  }

  cap->spec.C = &u.cat;
  cap->spec.positive = u.embeddings;
  cap->spec.H = u.dense_embeddings;
  cap->spec.E = &cap->E;
  cap->spec.family = fam;
  return cap;
}

}  // namespace polcat
