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

#include "redchar/classfn.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include "redchar/error.h"

namespace redchar {

ClassStructure::ClassStructure(std::shared_ptr<const FiniteGroup> g,
                               std::vector<std::vector<ElemId>> classes,
                               std::vector<std::string> labels)
    : group_(std::move(g)),
      classes_(std::move(classes)),
      labels_(std::move(labels)) {
  const std::size_t n = group_->order();
  class_of_.assign(n, UINT32_MAX);
  std::size_t total = 0;
  for (std::uint32_t c = 0; c < classes_.size(); ++c) {
    for (ElemId x : classes_[c]) {
      if (x >= n || class_of_[x] != UINT32_MAX) {
        throw std::logic_error("class lists overlap or leave the group");
      }
      class_of_[x] = c;
    }
    total += classes_[c].size();
  }
  if (total != n) throw std::logic_error("class lists do not cover the group");
  labels_.resize(classes_.size());
  for (std::uint32_t c = 0; c < classes_.size(); ++c) {
    if (labels_[c].empty()) labels_[c] = group_->format(rep(c));
  }
  inverse_.resize(classes_.size());
  powers_.resize(classes_.size());
  for (std::uint32_t c = 0; c < classes_.size(); ++c) {
    const ElemId r = rep(c);
    inverse_[c] = class_of_[group_->inv(r)];
    ElemId x = group_->identity();
    do {
      powers_[c].push_back(class_of_[x]);
      x = group_->mul(x, r);
    } while (x != group_->identity());
    exponent_ = std::lcm(exponent_, powers_[c].size());
  }
}

std::shared_ptr<const ClassStructure> ClassStructure::of(
    std::shared_ptr<const FiniteGroup> g) {
  OrbitPartition p = conjugacy_orbits(*g, g->generators());
  return std::make_shared<const ClassStructure>(
      g, std::move(p.orbits), std::vector<std::string>{});
}

std::uint32_t ClassStructure::power_class(std::uint32_t c,
                                          std::int64_t k) const {
  const auto o = static_cast<std::int64_t>(powers_[c].size());
  return powers_[c][((k % o) + o) % o];
}

ClassFunction::ClassFunction(std::shared_ptr<const ClassStructure> cs,
                             std::vector<Cyc> values)
    : cs_(std::move(cs)), values_(std::move(values)) {
  if (values_.size() != cs_->size()) {
    throw PreconditionError("class function needs one value per class");
  }
}

ClassFunction ClassFunction::constant(
    std::shared_ptr<const ClassStructure> cs, const Cyc& v) {
  std::vector<Cyc> vals(cs->size(), v);
  return ClassFunction(std::move(cs), std::move(vals));
}

ClassFunction ClassFunction::from_elements(
    std::shared_ptr<const ClassStructure> cs, const ElemFn& f) {
  std::vector<Cyc> vals;
  vals.reserve(cs->size());
  for (std::uint32_t c = 0; c < cs->size(); ++c) vals.push_back(f(cs->rep(c)));
  return ClassFunction(std::move(cs), std::move(vals));
}

ClassFunction ClassFunction::conj() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = v.conj();
  return r;
}

void ClassFunction::check_same(const ClassFunction& o) const {
  if (cs_ != o.cs_) {
    throw PreconditionError("class functions on different groups");
  }
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_same(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  check_same(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
  check_same(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyc& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.cs_ == b.cs_ && a.values_ == b.values_;
}

Cyc inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.classes_ptr() != g.classes_ptr()) {
    throw PreconditionError("inner product of functions on different groups");
  }
  const ClassStructure& cs = f.classes();
  Cyc sum;
  for (std::uint32_t c = 0; c < cs.size(); ++c) {
    if (f[c].is_zero() || g[c].is_zero()) continue;
    sum += (f[c] * g[c].conj()) * Rat(cs.class_size(c));
  }
  return sum / Rat(cs.group_order());
}

Cyc subgroup_inner_product(const Subgroup& h, const ElemFn& f,
                           const ElemFn& g) {
  Cyc sum;
  for (ElemId x : h.members) {
    Cyc a = f(x);
    if (a.is_zero()) continue;
    sum += a * g(x).conj();
  }
  return sum / Rat(h.order());
}

ClassFunction induce(std::shared_ptr<const ClassStructure> cs,
                     const Subgroup& h, const ElemFn& f) {
  const FiniteGroup& g = cs->group();
  // Values of f on H, then the class-function check against H's generators.
  std::vector<std::uint32_t> pos(g.order(), UINT32_MAX);
  std::vector<Cyc> vals(h.members.size());
  for (std::uint32_t i = 0; i < h.members.size(); ++i) {
    pos[h.members[i]] = i;
    vals[i] = f(h.members[i]);
  }
  for (std::uint32_t i = 0; i < h.members.size(); ++i) {
    if ((i & 1023) == 0) check_budget("induction");
    for (ElemId s : h.generators) {
      const ElemId y = g.conj(h.members[i], s);
      if (pos[y] == UINT32_MAX) {
        throw PreconditionError("subgroup " + h.name + " is not closed");
      }
      if (vals[pos[y]] != vals[i]) {
        throw PreconditionError("function is not a class function on " +
                                h.name + " at " + g.format(h.members[i]));
      }
    }
  }
  std::vector<Cyc> sums(cs->size());
  for (std::uint32_t i = 0; i < h.members.size(); ++i) {
    if (!vals[i].is_zero()) sums[cs->class_of(h.members[i])] += vals[i];
  }
  for (std::uint32_t c = 0; c < cs->size(); ++c) {
    if (sums[c].is_zero()) continue;
    sums[c] *= Rat(cs->centralizer_order(c)) / Rat(h.order());
  }
  return ClassFunction(std::move(cs), std::move(sums));
}

InvariantsDim invariants_dim(const ClassFunction& chi, const Subgroup& h) {
  const ClassStructure& cs = chi.classes();
  std::vector<std::uint64_t> meet(cs.size(), 0);
  for (ElemId x : h.members) ++meet[cs.class_of(x)];
  Cyc sum;
  for (std::uint32_t c = 0; c < cs.size(); ++c) {
    if (meet[c] != 0) sum += chi[c] * Rat(meet[c]);
  }
  sum /= Rat(h.order());
  InvariantsDim out;
  if (!sum.is_rational()) {
    out.integral = false;
    out.value = 0;
    return out;
  }
  out.value = sum.rational();
  out.integral = out.value.get_den() == 1 && sgn(out.value) >= 0;
  return out;
}

std::vector<Cyc> decompose(const ClassFunction& f,
                           const std::vector<ClassFunction>& basis) {
  std::vector<Cyc> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(inner_product(f, b));
  return out;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> fac;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) fac.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 f : fac) {
      if (powmod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

using Matrix = std::vector<std::vector<u64>>;

// Characteristic polynomial via Hessenberg reduction; coefficients of
// det(xI - A), constant term first.
std::vector<u64> charpoly(Matrix a, u64 p) {
  const std::size_t n = a.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && a[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(a[piv], a[m]);
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][piv], a[i][m]);
    }
    const u64 inv = invmod(a[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      const u64 u = mulmod(a[i][m - 1], inv, p);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = (a[i][j] + p - mulmod(u, a[m][j], p)) % p;
      }
      for (std::size_t j = 0; j < n; ++j) {
        a[j][m] = (a[j][m] + mulmod(u, a[j][i], p)) % p;
      }
    }
  }
  // p_k = char poly of the leading k x k block.
  std::vector<std::vector<u64>> pk(n + 1);
  pk[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<u64> cur(k + 1, 0);
    const u64 h = a[k - 1][k - 1];
    for (std::size_t i = 0; i < k; ++i) {
      cur[i + 1] = (cur[i + 1] + pk[k - 1][i]) % p;
      cur[i] = (cur[i] + p - mulmod(h, pk[k - 1][i], p)) % p;
    }
    u64 t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = mulmod(t, a[k - i][k - i - 1], p);
      const u64 coef = mulmod(t, a[k - i - 1][k - 1], p);
      if (coef == 0) continue;
      for (std::size_t j = 0; j < pk[k - i - 1].size(); ++j) {
        cur[j] = (cur[j] + p - mulmod(coef, pk[k - i - 1][j], p)) % p;
      }
    }
    pk[k] = std::move(cur);
  }
  return pk[n];
}

// Kernel vector of A - lambda I, assumed one dimensional; nullopt otherwise.
std::optional<std::vector<u64>> kernel_vector(const Matrix& a, u64 lambda,
                                              u64 p) {
  const std::size_t n = a.size();
  Matrix m = a;
  for (std::size_t i = 0; i < n; ++i) m[i][i] = (m[i][i] + p - lambda) % p;
  std::vector<std::size_t> pivcol;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[row]);
    const u64 inv = invmod(m[row][col], p);
    for (auto& v : m[row]) v = mulmod(v, inv, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const u64 u = m[i][col];
      for (std::size_t j = col; j < n; ++j) {
        m[i][j] = (m[i][j] + p - mulmod(u, m[row][j], p)) % p;
      }
    }
    pivcol.push_back(col);
    ++row;
  }
  if (row != n - 1) return std::nullopt;
  std::size_t free = 0;
  {
    std::vector<char> is_piv(n, 0);
    for (auto c : pivcol) is_piv[c] = 1;
    while (is_piv[free]) ++free;
  }
  std::vector<u64> v(n, 0);
  v[free] = 1;
  for (std::size_t r = 0; r < pivcol.size(); ++r) {
    v[pivcol[r]] = (p - m[r][free]) % p;
  }
  return v;
}

}  // namespace

OracleTable brute_force_irreducibles(std::shared_ptr<const ClassStructure> cs,
                                     std::uint64_t seed) {
  const ClassStructure& s = *cs;
  const FiniteGroup& g = s.group();
  const std::size_t k = s.size();
  const u64 order = g.order();
  const u64 e = s.exponent();
  u64 p = (2 * order / e + 1) * e + 1;
  while (!is_prime(p)) p += e;

  // a[j][i][l] = #{x in C_j : x^-1 z_l in C_i}.
  std::vector<Matrix> cls(k, Matrix(k, std::vector<u64>(k, 0)));
  for (std::uint32_t l = 0; l < k; ++l) {
    check_budget("class multiplication coefficients");
    const ElemId z = s.rep(l);
    for (ElemId x = 0; x < order; ++x) {
      const std::uint32_t j = s.class_of(x);
      const std::uint32_t i = s.class_of(g.mul(g.inv(x), z));
      ++cls[j][i][l];
    }
  }
  for (auto& m : cls) {
    for (auto& row : m) {
      for (auto& v : row) v %= p;
    }
  }

  std::mt19937_64 rng(seed);
  OracleTable out;
  out.prime = p;
  const std::uint32_t id = s.identity_class();
  std::vector<std::vector<u64>> omegas;
  for (int attempt = 0; attempt < 64 && omegas.size() != k; ++attempt) {
    check_budget("class algebra eigenvectors");
    ++out.attempts;
    omegas.clear();
    Matrix a(k, std::vector<u64>(k, 0));
    for (std::uint32_t j = 0; j < k; ++j) {
      const u64 r = rng() % p;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
          a[i][l] = (a[i][l] + mulmod(r, cls[j][i][l], p)) % p;
        }
      }
    }
    std::vector<u64> cp = charpoly(a, p);
    std::vector<u64> roots;
    for (u64 x = 0; x < p && roots.size() < k; ++x) {
      u64 v = 0;
      for (std::size_t i = cp.size(); i-- > 0;) v = (mulmod(v, x, p) + cp[i]) % p;
      if (v == 0) roots.push_back(x);
    }
    if (roots.size() != k) continue;
    bool ok = true;
    for (u64 lam : roots) {
      auto v = kernel_vector(a, lam, p);
      if (!v || (*v)[id] == 0) {
        ok = false;
        break;
      }
      const u64 inv = invmod((*v)[id], p);
      for (auto& x : *v) x = mulmod(x, inv, p);
      omegas.push_back(std::move(*v));
    }
    if (!ok) omegas.clear();
  }
  if (omegas.size() != k) {
    throw std::runtime_error("class algebra did not split into " +
                             std::to_string(k) + " characters");
  }

  const u64 root_e = powmod(primitive_root(p), (p - 1) / e, p);
  for (const auto& w : omegas) {
    u64 ssum = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      const u64 term = mulmod(mulmod(w[i], w[s.inverse_class(i)], p),
                              invmod(s.class_size(i) % p, p), p);
      ssum = (ssum + term) % p;
    }
    const u64 d2 = mulmod(order % p, invmod(ssum, p), p);
    u64 d = 1;
    while (d * d < d2) ++d;
    if (d * d != d2) throw std::runtime_error("oracle degree is not integral");
    std::vector<u64> val(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      val[i] = mulmod(mulmod(w[i], d, p), invmod(s.class_size(i) % p, p), p);
    }
    std::vector<Cyc> lifted(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      const u64 o = s.rep_order(i);
      const u64 z = powmod(root_e, e / o, p);
      const u64 zinv = invmod(z, p);
      const u64 oinv = invmod(o % p, p);
      Cyc v;
      for (u64 j = 0; j < o; ++j) {
        u64 n = 0;
        const u64 step = powmod(zinv, j, p);
        u64 tw = 1;
        for (u64 m = 0; m < o; ++m) {
          n = (n + mulmod(val[s.power_class(i, m)], tw, p)) % p;
          tw = mulmod(tw, step, p);
        }
        n = mulmod(n, oinv, p);
        if (n > d) throw std::runtime_error("oracle eigenvalue count too big");
        if (n) {
          v += Cyc::root_of_unity(static_cast<std::uint32_t>(o),
                                  static_cast<std::int64_t>(j)) *
               Rat(static_cast<unsigned long>(n));
        }
      }
      lifted[i] = std::move(v);
    }
    out.chars.emplace_back(cs, std::move(lifted));
  }
  std::vector<std::pair<std::pair<Rat, std::vector<std::string>>,
                        ClassFunction>>
      keyed;
  for (auto& c : out.chars) {
    std::vector<std::string> strs;
    for (const auto& v : c.values()) strs.push_back(v.to_string());
    keyed.push_back({{c.degree().rational(), std::move(strs)}, std::move(c)});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  out.chars.clear();
  for (auto& kv : keyed) out.chars.push_back(std::move(kv.second));
  return out;
}

std::uint32_t SO4Classes::index_of(const ClassLabel& l) const {
  auto it = index_of_key.find(l.key);
  if (it == index_of_key.end()) {
    throw PreconditionError("class label " + l.name + " not in SO4(F_" +
                            std::to_string(q()) + ")");
  }
  return it->second;
}

std::uint32_t SO4Classes::index_of_elem(const SO4Elem& x) const {
  return classes->class_of(group->id(x));
}

std::vector<std::uint32_t> SO4Classes::unipotent_classes() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < labels.size(); ++c) {
    if (is_unipotent(field(), labels[c].rep)) out.push_back(c);
  }
  return out;
}

std::shared_ptr<const SO4Classes> so4_classes(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const SO4Classes>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;

  auto g = std::make_shared<const SO4Group>(q);
  const Field& f = g->field();
  OrbitPartition p = conjugacy_orbits(*g, g->generators());
  const auto items = lemma_items();
  struct Row {
    std::size_t item;
    ClassLabel label;
    std::vector<ElemId> members;
  };
  std::vector<Row> rows;
  for (auto& orbit : p.orbits) {
    ClassLabel l = classify(f, g->elem(orbit.front()));
    const auto pos = std::find(items.begin(), items.end(), l.lemma_item);
    rows.push_back({static_cast<std::size_t>(pos - items.begin()), l,
                    std::move(orbit)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.item != b.item) return a.item < b.item;
    return a.label.key < b.label.key;
  });
  auto out = std::make_shared<SO4Classes>();
  out->group = g;
  std::vector<std::vector<ElemId>> cls;
  std::vector<std::string> names;
  for (auto& r : rows) {
    if (out->index_of_key.count(r.label.key)) {
      throw std::logic_error("two orbits share the label " + r.label.name);
    }
    out->index_of_key[r.label.key] = static_cast<std::uint32_t>(cls.size());
    names.push_back(r.label.name);
    out->labels.push_back(r.label);
    cls.push_back(std::move(r.members));
  }
  out->classes =
      std::make_shared<const ClassStructure>(g, std::move(cls), std::move(names));
  cache[q] = out;
  return out;
}

}  // namespace redchar
