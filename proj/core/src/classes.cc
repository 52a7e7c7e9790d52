// Copyright 2026 The redchar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "redchar/classes.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "redchar/error.h"

namespace redchar {
namespace {

std::uint32_t disc(const Field& f, std::uint32_t tr, std::uint32_t det) {
  return f.sub(f.mul(tr, tr), f.mul(4, det));
}

std::string sv(const Field& f, std::uint32_t x) {
  return std::to_string(f.signed_value(x));
}

FactorType type_from_invariants(const Field& f, std::uint32_t tr,
                                std::uint32_t det, bool scalar) {
  FactorType t;
  std::uint32_t half = f.inv(2);
  std::uint32_t d = disc(f, tr, det);
  if (scalar) {
    t.kind = FactorKind::kC1;
    t.x = f.mul(tr, half);
  } else if (d == 0) {
    t.kind = FactorKind::kC2;
    t.x = f.mul(tr, half);
  } else if (auto s = f.sqrt(d)) {
    t.kind = FactorKind::kC3;
    std::uint32_t r1 = f.mul(f.add(tr, *s), half);
    std::uint32_t r2 = f.mul(f.sub(tr, *s), half);
    t.x = std::min(r1, r2);
    t.y = std::max(r1, r2);
  } else {
    t.kind = FactorKind::kC4;
    std::uint32_t root = *f.sqrt(f.div(d, f.nonsquare()));
    Fq2Elem z{f.mul(tr, half), f.mul(root, half)};
    Fq2Elem zq = f.frobenius(z);
    t.z = f.index2(z) <= f.index2(zq) ? z : zq;
  }
  return t;
}

Mat2 matrix_of_type(const Field& f, const FactorType& t, std::uint32_t tr,
                    std::uint32_t det, std::uint32_t corner) {
  switch (t.kind) {
    case FactorKind::kC1:
      return mat_diag(t.x, t.x);
    case FactorKind::kC2:
      return {static_cast<std::uint8_t>(t.x), static_cast<std::uint8_t>(corner),
              0, static_cast<std::uint8_t>(t.x)};
    case FactorKind::kC3:
      return mat_diag(t.x, t.y);
    case FactorKind::kC4:
      return {0, static_cast<std::uint8_t>(f.neg(det)), 1,
              static_cast<std::uint8_t>(tr)};
  }
  return mat_identity();
}

Rat r(long n, long d = 1) {
  Rat v(n, d);
  v.canonicalize();
  return v;
}

}  // namespace

FactorType factor_type(const Field& f, const Mat2& m) {
  return type_from_invariants(f, mat_trace(f, m), mat_det(f, m),
                              mat_is_scalar(m));
}

std::string format_factor(const Field& f, const FactorType& t) {
  switch (t.kind) {
    case FactorKind::kC1:
      return "c1(" + sv(f, t.x) + ")";
    case FactorKind::kC2:
      return "c2(" + sv(f, t.x) + ")";
    case FactorKind::kC3:
      return "c3(" + sv(f, t.x) + "," + sv(f, t.y) + ")";
    case FactorKind::kC4:
      return "c4(" + f.format2(t.z) + ")";
  }
  return "?";
}

std::uint32_t c2_invariant(const Field& f, const Mat2& m) {
  std::uint32_t x = f.mul(mat_trace(f, m), f.inv(2));
  // v = e2 unless e2 is an eigenvector, then v = e1.
  std::uint32_t w0 = m.b, w1 = f.sub(m.d, x);
  std::uint32_t v0 = 0, v1 = 1;
  if (w0 == 0 && w1 == 0) {
    w0 = f.sub(m.a, x);
    w1 = m.c;
    v0 = 1;
    v1 = 0;
  }
  std::uint32_t det = f.sub(f.mul(w0, v1), f.mul(w1, v0));
  return f.is_square(det) ? 1 : f.nonsquare();
}

ClassKey class_key(const Field& f, const SO4Elem& x) {
  std::uint32_t tr1 = mat_trace(f, x.g), tr2 = mat_trace(f, x.h);
  std::uint32_t det = mat_det(f, x.g);
  bool sc1 = mat_is_scalar(x.g), sc2 = mat_is_scalar(x.h);
  std::uint8_t gamma = 0;
  if (!sc1 && !sc2 && disc(f, tr1, det) == 0 && disc(f, tr2, det) == 0) {
    std::uint32_t k = f.mul(c2_invariant(f, x.g), c2_invariant(f, x.h));
    gamma = f.is_square(k) ? 1 : 2;
  }
  ClassKey best;
  bool first = true;
  for (std::uint32_t a = 1; a < f.q(); ++a) {
    ClassKey k{f.mul(a, tr1), f.mul(a, tr2), f.mul(f.mul(a, a), det),
               static_cast<std::uint8_t>(sc1), static_cast<std::uint8_t>(sc2),
               gamma};
    if (first || k < best) best = k;
    first = false;
  }
  return best;
}

bool is_unipotent(const Field& f, const SO4Elem& x) {
  std::uint32_t det = mat_det(f, x.g);
  std::uint32_t tr1 = mat_trace(f, x.g), tr2 = mat_trace(f, x.h);
  return tr1 == tr2 && disc(f, tr1, det) == 0 && disc(f, tr2, det) == 0;
}

ClassLabel label_from_key(const Field& f, const ClassKey& k) {
  ClassLabel l;
  l.q = f.q();
  l.key = k;
  FactorType t1 = type_from_invariants(f, k.tr1, k.det, k.scalar1);
  FactorType t2 = type_from_invariants(f, k.tr2, k.det, k.scalar2);
  Mat2 g = matrix_of_type(f, t1, k.tr1, k.det, 1);
  Mat2 h = matrix_of_type(f, t2, k.tr2, k.det, 1);
  if (k.gamma == 2) h = mat_conj(f, mat_diag(f.nonsquare(), 1), h);
  l.rep = so4_canonical(f, g, h);

  // Display scaling: first eigenvalue 1 when the first factor has a single
  // eigenvalue, else the second, else leave the key representative.
  std::uint32_t a = 1;
  bool rep1 = t1.kind == FactorKind::kC1 || t1.kind == FactorKind::kC2;
  bool rep2 = t2.kind == FactorKind::kC1 || t2.kind == FactorKind::kC2;
  if (rep1) {
    a = f.inv(t1.x);
  } else if (rep2) {
    a = f.inv(t2.x);
  }
  std::uint32_t tr1 = f.mul(a, k.tr1), tr2 = f.mul(a, k.tr2);
  std::uint32_t det = f.mul(f.mul(a, a), k.det);
  l.f1 = type_from_invariants(f, tr1, det, k.scalar1);
  l.f2 = type_from_invariants(f, tr2, det, k.scalar2);
  l.gamma2 = k.gamma == 0 ? 0 : (k.gamma == 1 ? 1 : f.nonsquare());
  Mat2 dg = matrix_of_type(f, l.f1, tr1, det, 1);
  Mat2 dh = matrix_of_type(f, l.f2, tr2, det, k.gamma ? l.gamma2 : 1);
  l.display_rep = so4_canonical(f, dg, dh);

  std::string n2 = format_factor(f, l.f2);
  if (k.gamma != 0) {
    n2 = "c2(" + sv(f, l.f2.x) + "," + (k.gamma == 1 ? "1" : "D") + ")";
  }
  l.name = format_factor(f, l.f1) + "x" + n2;
  l.lemma_item = lemma_item(f, l);
  return l;
}

ClassLabel classify(const Field& f, const SO4Elem& x) {
  return label_from_key(f, class_key(f, x));
}

std::string lemma_item(const Field& f, const ClassLabel& l) {
  auto k1 = l.f1.kind, k2 = l.f2.kind;
  bool sq = f.is_square(l.key.det);
  bool trace_zero = l.key.tr1 == 0 && l.key.tr2 == 0;
  using K = FactorKind;
  auto idx = [](K k) { return static_cast<int>(k); };
  static const char* kSimple[4][4] = {
      {"1", "2", "3", "4"},
      {"5", "6", "7", "8"},
      {"9", "10", "", ""},
      {"13", "14", "", ""},
  };
  if (k1 == K::kC3 && k2 == K::kC3) {
    if (trace_zero) return "11c";
    return sq ? "11a" : "11b";
  }
  if (k1 == K::kC3 && k2 == K::kC4) return sq ? "12a" : "12b";
  if (k1 == K::kC4 && k2 == K::kC3) return sq ? "15" : "16";
  if (k1 == K::kC4 && k2 == K::kC4) return trace_zero ? "18" : "17";
  return kSimple[idx(k1)][idx(k2)];
}

std::vector<std::string> lemma_items() {
  return {"1",  "2",   "3",   "4",   "5",   "6",   "7",  "8",  "9", "10",
          "11a", "11b", "11c", "12a", "12b", "13", "14", "15", "16", "17",
          "18"};
}

std::optional<Rat> lemma_count(const std::string& item, std::uint32_t q) {
  long Q = q;
  bool one_mod_4 = q % 4 == 1;
  if (item == "1" || item == "2" || item == "5") return r(2);
  if (item == "6") return r(4);
  if (item == "3" || item == "7" || item == "9" || item == "10") {
    return r(Q - 3, 2);
  }
  if (item == "4" || item == "8" || item == "13" || item == "14") {
    return r(Q - 1, 2);
  }
  if (item == "11a") {
    return one_mod_4 ? r((Q - 3) * (Q - 3) - 4, 8) : r((Q - 3) * (Q - 3), 8);
  }
  if (item == "11b") {
    return one_mod_4 ? r((Q - 1) * (Q - 1), 8) : r((Q - 1) * (Q - 1) - 4, 8);
  }
  if (item == "11c" || item == "18") return r(1);
  if (item == "12b" || item == "16") {
    return one_mod_4 ? r(Q * Q - 1, 4) : r((Q - 1) * (Q + 3), 4);
  }
  if (item == "15") return r((Q - 1) * (Q - 3), 4);
  return std::nullopt;
}

std::string lemma_count_formula(const std::string& item) {
  static const std::map<std::string, std::string> kFormulas = {
      {"1", "2"},
      {"2", "2"},
      {"3", "(q-3)/2"},
      {"4", "(q-1)/2"},
      {"5", "2"},
      {"6", "4"},
      {"7", "(q-3)/2"},
      {"8", "(q-1)/2"},
      {"9", "(q-3)/2"},
      {"10", "(q-3)/2"},
      {"11a", "((q-3)^2-4)/8 if q=1 mod 4, (q-3)^2/8 if q=3 mod 4"},
      {"11b", "(q-1)^2/8 if q=1 mod 4, ((q-1)^2-4)/8 if q=3 mod 4"},
      {"11c", "1"},
      {"12a", "not stated"},
      {"12b", "(q^2-1)/4 if q=1 mod 4, (q-1)(q+3)/4 if q=3 mod 4"},
      {"13", "(q-1)/2"},
      {"14", "(q-1)/2"},
      {"15", "(q-1)(q-3)/4"},
      {"16", "(q^2-1)/4 if q=1 mod 4, (q-1)(q+3)/4 if q=3 mod 4"},
      {"17", "not stated"},
      {"18", "1"},
  };
  auto it = kFormulas.find(item);
  return it == kFormulas.end() ? "?" : it->second;
}

ClassInventory brute_force_classes(const SO4Group& g) {
  const Field& f = g.field();
  OrbitPartition p = conjugacy_orbits(g, g.generators());
  ClassInventory inv;
  inv.reserve(p.orbits.size());
  for (const auto& orbit : p.orbits) {
    ClassEntry e;
    e.rep = orbit.front();
    e.size = orbit.size();
    e.label = classify(f, g.elem(e.rep));
    std::uint64_t c = 0;
    for (ElemId y = 0; y < g.order(); ++y) {
      if (g.mul(y, e.rep) == g.mul(e.rep, y)) ++c;
    }
    e.centralizer = c;
    inv.push_back(std::move(e));
    check_budget("centralizer counts");
  }
  return inv;
}

ClassInventory symbolic_classes(const SO4Group& g) {
  const Field& f = g.field();
  std::map<ClassKey, ClassEntry> by_key;
  for (ElemId x = 0; x < g.order(); ++x) {
    ClassKey k = class_key(f, g.elem(x));
    auto it = by_key.find(k);
    if (it == by_key.end()) {
      ClassEntry e;
      e.rep = x;
      e.size = 1;
      e.label = label_from_key(f, k);
      by_key.emplace(k, std::move(e));
    } else {
      ++it->second.size;
    }
  }
  ClassInventory inv;
  for (auto& [k, e] : by_key) {
    e.centralizer = g.order() / e.size;
    inv.push_back(std::move(e));
  }
  std::sort(inv.begin(), inv.end(),
            [](const ClassEntry& a, const ClassEntry& b) { return a.rep < b.rep; });
  return inv;
}

bool ReconcileReport::ok() const {
  if (!bijection || !sizes_ok) return false;
  for (const auto& it : items) {
    if (!it.matches && it.witness.empty() && it.oracle != 0) return false;
  }
  return true;
}

std::vector<std::string> ReconcileReport::flagged_items() const {
  std::vector<std::string> out;
  for (const auto& it : items) {
    if (!it.matches) out.push_back(it.item);
  }
  return out;
}

ReconcileReport reconcile(const SO4Group& g, const ClassInventory& symbolic,
                          const ClassInventory& oracle) {
  const Field& f = g.field();
  ReconcileReport rep;
  rep.q = f.q();
  std::map<ClassKey, const ClassEntry*> sym;
  for (const auto& e : symbolic) sym[e.label.key] = &e;
  std::map<ClassKey, const ClassEntry*> seen;
  std::uint64_t total = 0;
  for (const auto& e : oracle) {
    total += e.size;
    if (e.size * e.centralizer != g.order()) {
      rep.sizes_ok = false;
      rep.mismatches.push_back("orbit-stabilizer fails at " + g.format(e.rep));
    }
    auto [it, fresh] = seen.emplace(e.label.key, &e);
    if (!fresh) {
      rep.bijection = false;
      rep.mismatches.push_back("label " + e.label.name + " names two orbits: " +
                               g.format(it->second->rep) + " and " +
                               g.format(e.rep));
    }
    auto s = sym.find(e.label.key);
    if (s == sym.end() || s->second->size != e.size) {
      rep.bijection = false;
      rep.mismatches.push_back("orbit of " + g.format(e.rep) + " (" +
                               e.label.name +
                               ") differs from its symbolic class");
    }
  }
  if (total != g.order()) rep.sizes_ok = false;
  if (symbolic.size() != oracle.size()) {
    rep.bijection = false;
    rep.mismatches.push_back("class counts differ: symbolic " +
                             std::to_string(symbolic.size()) + ", oracle " +
                             std::to_string(oracle.size()));
  }

  std::map<std::string, std::uint64_t> counts;
  std::map<std::string, std::string> witness;
  for (const auto& e : oracle) {
    const std::string& item = e.label.lemma_item;
    ++counts[item];
    if (!witness.count(item)) witness[item] = g.format(e.rep);
  }
  for (const auto& item : lemma_items()) {
    ItemCount c;
    c.item = item;
    c.formula = lemma_count_formula(item);
    c.stated = lemma_count(item, f.q());
    c.oracle = counts[item];
    c.matches = !c.stated || *c.stated == Rat(static_cast<long>(c.oracle));
    if (witness.count(item)) c.witness = witness[item];
    rep.items.push_back(c);
  }

  std::uint32_t q = f.q();
  auto count_of = [&](const std::string& i) {
    return Rat(static_cast<long>(counts[i]));
  };
  long Q = q;
  bool one_mod_4 = q % 4 == 1;
  Rat a_swapped = one_mod_4 ? r((Q - 3) * (Q - 3), 8) : r((Q - 3) * (Q - 3) - 4, 8);
  Rat b_swapped = one_mod_4 ? r((Q - 1) * (Q - 1) - 4, 8) : r((Q - 1) * (Q - 1), 8);
  bool stated_ok = *lemma_count("11a", q) == count_of("11a") &&
                   *lemma_count("11b", q) == count_of("11b");
  bool swapped_ok = a_swapped == count_of("11a") && b_swapped == count_of("11b");
  rep.item11_reading = stated_ok && swapped_ok ? "both"
                       : stated_ok             ? "stated"
                       : swapped_ok            ? "swapped"
                                               : "neither";
  return rep;
}

}  // namespace redchar
