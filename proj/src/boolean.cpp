#include "polcat/boolean.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace polcat {

Report validate_ba(const BATables& A) {
  Report r;
  int n = A.n;
  auto intab = [&](const std::vector<std::vector<int>>& t) {
    if (static_cast<int>(t.size()) != n) return false;
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != n) return false;
      for (int v : row)
        if (v < 0 || v >= n) return false;
    }
    return true;
  };
  if (n <= 0 || !intab(A.meet) || !intab(A.join) ||
      static_cast<int>(A.neg.size()) != n || A.zero < 0 || A.zero >= n ||
      A.one < 0 || A.one >= n) {
    r.fail("malformed tables");
    return r;
  }
  auto mt = [&](int a, int b) { return A.meet[a][b]; };
  auto jn = [&](int a, int b) { return A.join[a][b]; };
  for (int a = 0; a < n; ++a) {
    if (mt(a, A.one) != a || jn(a, A.zero) != a) r.fail("bounds not neutral");
    if (mt(a, A.neg[a]) != A.zero || jn(a, A.neg[a]) != A.one)
      r.fail("complement law fails at " + std::to_string(a));
    for (int b = 0; b < n; ++b) {
      if (mt(a, b) != mt(b, a) || jn(a, b) != jn(b, a)) r.fail("not commutative");
      if (mt(a, jn(a, b)) != a || jn(a, mt(a, b)) != a) r.fail("absorption fails");
      for (int c = 0; c < n; ++c) {
        if (mt(a, mt(b, c)) != mt(mt(a, b), c)) r.fail("meet not associative");
        if (jn(a, jn(b, c)) != jn(jn(a, b), c)) r.fail("join not associative");
        if (mt(a, jn(b, c)) != jn(mt(a, b), mt(a, c))) r.fail("not distributive");
      }
    }
  }
  // uniqueness of complements follows from the above, but check directly
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (b != A.neg[a] && mt(a, b) == A.zero && jn(a, b) == A.one)
        r.fail("complement not unique at " + std::to_string(a));
  if (static_cast<int>(r.issues.size()) > 8) r.issues.resize(8);
  return r;
}

FinBoolAlg from_atoms(int n) {
  if (n < 0 || n > 20) throw std::runtime_error("atom count out of range");
  return FinBoolAlg{"B" + std::to_string(1 << n), n};
}

std::vector<int> atoms(const BATables& A) {
  std::vector<int> out;
  for (int a = 0; a < A.n; ++a) {
    if (a == A.zero) continue;
    bool minimal = true;
    for (int b = 0; b < A.n && minimal; ++b)
      if (b != A.zero && b != a && A.meet[a][b] == b) minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

FinBoolAlg normalize_ba(const BATables& A, std::vector<std::uint32_t>* elem_mask) {
  Report r = validate_ba(A);
  if (!r.ok()) throw std::runtime_error("not a Boolean algebra: " + r.issues.front());
  std::vector<int> at = atoms(A);
  if ((1 << at.size()) != A.n)
    throw std::runtime_error("element count is not 2^atoms");
  std::vector<std::uint32_t> masks(A.n, 0);
  for (int e = 0; e < A.n; ++e)
    for (size_t i = 0; i < at.size(); ++i)
      if (A.meet[e][at[i]] == at[i]) masks[e] |= 1u << i;
  // the atom decomposition must separate elements
  std::vector<std::uint32_t> sorted = masks;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::runtime_error("atoms do not separate the elements");
  if (elem_mask) *elem_mask = masks;
  FinBoolAlg out = from_atoms(static_cast<int>(at.size()));
  out.name = A.name.empty() ? out.name : A.name;
  return out;
}

bool is_embedding(const BAHom& f) {
  // injective iff every source atom is hit by the preimage map
  std::vector<bool> hit(f.src->atoms, false);
  for (int s : f.atom_pre) hit[s] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_dense_subalgebra(const BAHom& f) {
  int m = f.src->atoms, k = f.tgt->atoms;
  for (std::uint32_t b = 0; b < (1u << k); ++b) {
    // largest image element below b, then its join with nothing else to add
    std::uint32_t s = 0;
    for (int a = 0; a < m; ++a) {
      std::uint32_t fa = f.apply(1u << a);
      if ((fa & ~b) == 0) s |= 1u << a;
    }
    if (f.apply(s) != b) return false;
  }
  return true;
}

bool is_essential_embedding(const BAHom& f) {
  return is_embedding(f) && is_dense_subalgebra(f);
}

bool is_continuous_hom(const BAHom& f) {
  int m = f.src->atoms;
  if (m > 4) throw std::runtime_error("carrier too large for the subset sweep");
  int carrier = 1 << m;
  std::uint32_t full = (1u << f.tgt->atoms) - 1;
  for (std::uint64_t X = 0; X < (1ull << carrier); ++X) {
    std::uint32_t meet = (1u << m) - 1;  // empty family meets to 1
    std::uint32_t image_meet = full;
    for (int e = 0; e < carrier; ++e)
      if (X >> e & 1ull) {
        meet &= static_cast<std::uint32_t>(e);
        image_meet &= f.apply(static_cast<std::uint32_t>(e));
      }
    if (meet == 0 && image_meet != 0) return false;
  }
  return true;
}

std::pair<FinBoolAlg, BAHom> ba_completion(const FinBoolAlg& A) {
  BAHom unit{&A, &A, {}};
  unit.atom_pre.resize(A.atoms);
  std::iota(unit.atom_pre.begin(), unit.atom_pre.end(), 0);
  return {A, unit};
}

std::vector<std::vector<int>> enumerate_ba_homs(const FinBoolAlg& A,
                                                const FinBoolAlg& B) {
  std::vector<std::vector<int>> out;
  if (A.atoms == 0 && B.atoms > 0) return out;  // no map out of the trivial algebra
  std::vector<int> pre(B.atoms, 0);
  while (true) {
    out.push_back(pre);
    int i = B.atoms - 1;
    while (i >= 0 && pre[i] == A.atoms - 1) pre[i--] = 0;
    if (i < 0) break;
    ++pre[i];
  }
  return out;
}

BAHom sikorski_extend(const BAHom& f, const BAHom& h) {
  if (f.src != h.src) throw std::runtime_error("maps do not share a source");
  if (!is_embedding(f)) throw std::runtime_error("can only extend along embeddings");
  for (auto& pre : enumerate_ba_homs(*f.tgt, *h.tgt)) {
    BAHom g{f.tgt, h.tgt, pre};
    bool ok = true;
    // g∘f = h on atom preimages
    for (int t = 0; t < h.tgt->atoms && ok; ++t)
      if (f.atom_pre[g.atom_pre[t]] != h.atom_pre[t]) ok = false;
    if (ok) return g;
  }
  throw std::runtime_error("no extension found");
}

int BAUniverse::find_arrow(int src, int tgt, const std::vector<int>& atom_pre) const {
  for (int a : cat.hom(src, tgt))
    if (homs[a] == atom_pre) return a;
  return -1;
}

std::unique_ptr<BAUniverse> materialize_ba_universe(
    const std::vector<FinBoolAlg>& algebras, int arrow_budget) {
  auto u = std::make_unique<BAUniverse>();
  for (const FinBoolAlg& A : algebras) {
    bool dup = false;
    for (const FinBoolAlg& B : u->objects)
      if (B.atoms == A.atoms) { dup = true; break; }
    if (!dup) u->objects.push_back(A);
  }
  int n = static_cast<int>(u->objects.size());
  for (const FinBoolAlg& A : u->objects) u->cat.add_object(A.name);
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> lookup;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& pre : enumerate_ba_homs(u->objects[i], u->objects[j])) {
        if (static_cast<int>(u->homs.size()) >= arrow_budget)
          throw std::runtime_error("arrow budget exceeded");
        int a = u->cat.add_arrow(i, j);
        lookup[{{i, j}, pre}] = a;
        u->homs.push_back(std::move(pre));
      }
  for (int i = 0; i < n; ++i) {
    std::vector<int> id(u->objects[i].atoms);
    std::iota(id.begin(), id.end(), 0);
    u->cat.set_identity(i, lookup.at({{i, i}, id}));
  }
  for (int g = 0; g < u->cat.num_arrows(); ++g)
    for (int f = 0; f < u->cat.num_arrows(); ++f) {
      if (u->cat.tgt(f) != u->cat.src(g)) continue;
      // composite atom preimage: pull back through g, then through f
      std::vector<int> comp(u->homs[g].size());
      for (size_t t = 0; t < comp.size(); ++t) comp[t] = u->homs[f][u->homs[g][t]];
      u->cat.set_compose(g, f, lookup.at({{u->cat.src(f), u->cat.tgt(g)}, comp}));
    }
  u->cat.finalize(arrow_budget);
  u->embeddings.assign(u->cat.num_arrows(), false);
  u->essential_embeddings.assign(u->cat.num_arrows(), false);
  for (int a = 0; a < u->cat.num_arrows(); ++a) {
    BAHom f{&u->objects[u->cat.src(a)], &u->objects[u->cat.tgt(a)], u->homs[a]};
    u->embeddings[a] = is_embedding(f);
    u->essential_embeddings[a] = u->embeddings[a] && is_dense_subalgebra(f);
  }
  return u;
}

std::unique_ptr<BACapacitor> build_ba_capacitor(
    const std::vector<FinBoolAlg>& algebras, int arrow_budget) {
  auto cap = std::make_unique<BACapacitor>();
  cap->u = materialize_ba_universe(algebras, arrow_budget);
  BAUniverse& u = *cap->u;
  int n = static_cast<int>(u.objects.size());
  // every finite algebra is complete, so E has the same objects; its
  // morphisms are the continuous homomorphisms
  for (int i = 0; i < n; ++i) {
    cap->E.add_object(u.objects[i].name);
    cap->e_obj.push_back(i);
  }
  std::map<int, int> base_arr_to_e;
  for (int a = 0; a < u.cat.num_arrows(); ++a) {
    BAHom f{&u.objects[u.cat.src(a)], &u.objects[u.cat.tgt(a)], u.homs[a]};
    if (!is_continuous_hom(f)) continue;
    int e = cap->E.add_arrow(u.cat.src(a), u.cat.tgt(a));
    base_arr_to_e[a] = e;
    cap->e_arr.push_back(a);
  }
  for (int i = 0; i < n; ++i)
    cap->E.set_identity(i, base_arr_to_e.at(u.cat.identity(i)));
  for (int g = 0; g < static_cast<int>(cap->e_arr.size()); ++g)
    for (int f = 0; f < static_cast<int>(cap->e_arr.size()); ++f) {
      if (cap->E.tgt(f) != cap->E.src(g)) continue;
      cap->E.set_compose(g, f,
                         base_arr_to_e.at(u.cat.compose(cap->e_arr[g], cap->e_arr[f])));
    }
  cap->E.finalize(arrow_budget);

  cap->spec.C = &u.cat;
  cap->spec.positive = u.embeddings;
  cap->spec.H = u.essential_embeddings;
  cap->spec.E = &cap->E;
  cap->spec.U.dom = &cap->E;
  cap->spec.U.cod = &u.cat;
  cap->spec.U.obj = cap->e_obj;
  cap->spec.U.arr = cap->e_arr;
  cap->spec.family.unit.resize(n);
  cap->spec.family.object.resize(n);
  for (int i = 0; i < n; ++i) {
    cap->spec.family.unit[i] = u.cat.identity(i);
    cap->spec.family.object[i] = i;
  }
  return cap;
}

}  // namespace polcat
