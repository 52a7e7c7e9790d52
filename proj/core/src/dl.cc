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

#include "redchar/dl.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "redchar/error.h"

namespace redchar {

namespace {

Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

struct Table {
  std::vector<IrrSO4> irrs;
  std::vector<ClassFunction> chars;
};

const Table& table(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<Table>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[q];
  if (!slot) {
    auto t = std::make_unique<Table>();
    t->irrs = list_irreducibles(q);
    for (const auto& r : t->irrs) t->chars.push_back(character(r));
    slot = std::move(t);
  }
  return *slot;
}

std::size_t index_in_table(const Table& t, const IrrSO4& r) {
  for (std::size_t i = 0; i < t.irrs.size(); ++i) {
    if (t.irrs[i] == r) return i;
  }
  throw PreconditionError("not an irreducible of the table: " + r.name);
}

bool valid_char(const Field& f, const MultChar& c, CharDomain d) {
  return c.domain == d && c.exponent < f.domain_order(d);
}

MultChar central_char(const Field& f, bool split, const FactorChar& c) {
  return split ? f.mul_chars(c.a, c.b) : f.restrict_to_base(c.a);
}

void check_factor(const Field& f, bool split, const FactorChar& c) {
  bool ok = split ? valid_char(f, c.a, CharDomain::kFq) &&
                        valid_char(f, c.b, CharDomain::kFq)
                  : valid_char(f, c.a, CharDomain::kFq2);
  if (!ok) {
    throw PreconditionError(std::string("torus character has the wrong ") +
                            (split ? "split" : "nonsplit") + " factor data");
  }
}

Cyc gl2_virtual_eval(const Field& f,
                     const std::vector<std::pair<IrrGL2, long>>& v,
                     const Mat2& m) {
  Cyc s;
  for (const auto& [r, c] : v) s += gl2_eval(f, r, m) * Rat(c);
  return s;
}

std::string witness(const std::string& cls, const Cyc& lhs, const Cyc& rhs) {
  return cls + ": " + lhs.to_string() + " != " + rhs.to_string();
}

IdentityCheck compare(const std::string& name, const UnipotentProfile& lhs,
                      const UnipotentProfile& rhs) {
  IdentityCheck c;
  c.name = name;
  for (std::size_t i = 0; i < lhs.classes.size(); ++i) {
    ++c.classes_checked;
    if (lhs.values[i] != rhs.values[i]) {
      c.ok = false;
      c.witnesses.push_back(
          witness(lhs.classes[i].name, lhs.values[i], rhs.values[i]));
    }
  }
  return c;
}

}  // namespace

std::string to_string(TorusType w) {
  switch (w) {
    case TorusType::kSplit:
      return "1";
    case TorusType::kA1:
      return "A1";
    case TorusType::kA1Tilde:
      return "A1~";
    case TorusType::kA1xA1Tilde:
      return "A1xA1~";
  }
  return "?";
}

std::vector<TorusType> torus_types() {
  return {TorusType::kSplit, TorusType::kA1, TorusType::kA1Tilde,
          TorusType::kA1xA1Tilde};
}

int weyl_sign(TorusType w) {
  return (w == TorusType::kA1 || w == TorusType::kA1Tilde) ? -1 : 1;
}

bool first_factor_split(TorusType w) {
  return w == TorusType::kSplit || w == TorusType::kA1Tilde;
}

bool second_factor_split(TorusType w) {
  return w == TorusType::kSplit || w == TorusType::kA1;
}

TorusChar trivial_torus_char(TorusType w) {
  auto fc = [](bool split) {
    FactorChar c;
    c.a = {split ? CharDomain::kFq : CharDomain::kFq2, 0};
    c.b = {CharDomain::kFq, 0};
    return c;
  };
  return {fc(first_factor_split(w)), fc(second_factor_split(w))};
}

TorusChar sign_torus_char(std::uint32_t q, TorusType w) {
  const Field& f = *field(q);
  if (w == TorusType::kSplit) {
    FactorChar c{{CharDomain::kFq, 0}, f.epsilon()};
    return {c, c};
  }
  if (w == TorusType::kA1xA1Tilde) {
    for (const auto& r : list_irreducibles(q)) {
      if (r.tag == CaseTag::kOmegaCusp) {
        return {{r.pi1.a, {CharDomain::kFq, 0}},
                {r.pi2.a, {CharDomain::kFq, 0}}};
      }
    }
  }
  throw PreconditionError("no sign character on the torus of type " +
                          to_string(w));
}

TorusChar weyl_act(const Field& f, TorusType w, const TorusChar& t,
                   bool on_first, bool on_second) {
  auto act = [&f](bool split, FactorChar c) {
    if (split) {
      std::swap(c.a, c.b);
    } else {
      c.a = f.frobenius_twist(c.a);
    }
    return c;
  };
  TorusChar out = t;
  if (on_first) out.first = act(first_factor_split(w), t.first);
  if (on_second) out.second = act(second_factor_split(w), t.second);
  return out;
}

// VirtualChar

Cyc VirtualChar::eval(const ClassLabel& c) const {
  Cyc s;
  for (const auto& [r, k] : terms) s += redchar::eval(r, c) * Rat(k);
  return s;
}

ClassFunction VirtualChar::character() const {
  auto so4 = so4_classes(q);
  std::vector<Cyc> vals;
  vals.reserve(so4->labels.size());
  for (const auto& l : so4->labels) vals.push_back(eval(l));
  return ClassFunction(so4->classes, std::move(vals));
}

long VirtualChar::coefficient(const IrrSO4& r) const {
  for (const auto& [s, k] : terms) {
    if (s == r) return k;
  }
  return 0;
}

long VirtualChar::degree() const {
  long d = 0;
  for (const auto& [r, k] : terms) d += k * static_cast<long>(redchar::degree(r));
  return d;
}

std::string VirtualChar::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [r, k] : terms) {
    if (!s.empty()) s += k < 0 ? " - " : " + ";
    else if (k < 0) s += "-";
    long a = k < 0 ? -k : k;
    if (a != 1) s += std::to_string(a) + "*";
    s += r.name;
  }
  return s;
}

namespace {

VirtualChar combine(const VirtualChar& a, const VirtualChar& b, long sb) {
  if (a.q != b.q && !a.terms.empty() && !b.terms.empty()) {
    throw PreconditionError("virtual characters for different q");
  }
  const std::uint32_t q = a.q ? a.q : b.q;
  const Table& t = table(q);
  std::vector<long> coeff(t.irrs.size(), 0);
  for (const auto& [r, k] : a.terms) coeff[index_in_table(t, r)] += k;
  for (const auto& [r, k] : b.terms) coeff[index_in_table(t, r)] += sb * k;
  VirtualChar out;
  out.q = q;
  for (std::size_t i = 0; i < coeff.size(); ++i) {
    if (coeff[i] != 0) out.terms.emplace_back(t.irrs[i], coeff[i]);
  }
  return out;
}

}  // namespace

VirtualChar& VirtualChar::operator+=(const VirtualChar& o) {
  return *this = combine(*this, o, 1);
}

VirtualChar& VirtualChar::operator-=(const VirtualChar& o) {
  return *this = combine(*this, o, -1);
}

VirtualChar& VirtualChar::operator*=(long s) {
  if (s == 0) {
    terms.clear();
    return *this;
  }
  for (auto& term : terms) term.second *= s;
  return *this;
}

bool operator==(const VirtualChar& a, const VirtualChar& b) {
  return (a - b).terms.empty();
}

VirtualChar virtual_of(const IrrSO4& r) {
  VirtualChar v;
  v.q = r.q;
  v.terms.emplace_back(r, 1);
  return v;
}

VirtualChar decompose_virtual(std::uint32_t q, const ClassFunction& f) {
  const Table& t = table(q);
  VirtualChar out;
  out.q = q;
  for (std::size_t i = 0; i < t.irrs.size(); ++i) {
    Cyc c = inner_product(f, t.chars[i]);
    if (!c.is_rational() || c.rational().get_den() != 1) {
      throw PreconditionError("not a virtual character: multiplicity " +
                              c.to_string() + " at " + t.irrs[i].name);
    }
    long k = c.rational().get_num().get_si();
    if (k != 0) out.terms.emplace_back(t.irrs[i], k);
  }
  if (!(out.character() == f)) {
    throw PreconditionError("class function outside the span of the table");
  }
  return out;
}

std::vector<std::pair<IrrGL2, long>> gl2_dl(const Field& f, bool split,
                                            const FactorChar& c) {
  check_factor(f, split, c);
  if (split) {
    if (c.a != c.b) {
      return {{gl2_canonical(f, {IrrGL2::Kind::kPS, c.a, c.b}), 1}};
    }
    return {{{IrrGL2::Kind::kDet, c.a, {}}, 1},
            {{IrrGL2::Kind::kSt, c.a, {}}, 1}};
  }
  if (f.frobenius_twist(c.a) != c.a) {
    return {{gl2_canonical(f, {IrrGL2::Kind::kCusp, c.a, {}}), -1}};
  }
  for (const MultChar& l : f.list_chars(CharDomain::kFq)) {
    if (f.norm_pullback(l) == c.a) {
      return {{{IrrGL2::Kind::kDet, l, {}}, 1},
              {{IrrGL2::Kind::kSt, l, {}}, -1}};
    }
  }
  throw std::logic_error("Frobenius-fixed character is not a norm pullback");
}

VirtualChar dl_char(std::uint32_t q, TorusType w, const TorusChar& t) {
  const Field& f = *field(q);
  const bool s1 = first_factor_split(w), s2 = second_factor_split(w);
  check_factor(f, s1, t.first);
  check_factor(f, s2, t.second);
  if (f.mul_chars(central_char(f, s1, t.first),
                  central_char(f, s2, t.second))
          .exponent != 0) {
    throw PreconditionError(
        "torus character is nontrivial on the central F_q^x");
  }
  auto r1 = gl2_dl(f, s1, t.first);
  auto r2 = gl2_dl(f, s2, t.second);
  auto so4 = so4_classes(q);
  std::vector<Cyc> vals;
  vals.reserve(so4->labels.size());
  for (const auto& l : so4->labels) {
    Cyc v;
    for (const auto& [a, ka] : r1) {
      Cyc va = gl2_eval(f, a, l.f1);
      if (va.is_zero()) continue;
      for (const auto& [b, kb] : r2) {
        v += va * gl2_eval(f, b, l.f2) * Rat(ka * kb);
      }
    }
    vals.push_back(std::move(v));
  }
  return decompose_virtual(q, ClassFunction(so4->classes, std::move(vals)));
}

// UnipotentProfile

const Cyc& UnipotentProfile::at(const ClassLabel& c) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] == c) return values[i];
  }
  throw PreconditionError("not a unipotent class: " + c.name);
}

UnipotentProfile& UnipotentProfile::operator+=(const UnipotentProfile& o) {
  if (q != o.q) throw PreconditionError("profiles for different q");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

UnipotentProfile& UnipotentProfile::operator-=(const UnipotentProfile& o) {
  if (q != o.q) throw PreconditionError("profiles for different q");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

UnipotentProfile& UnipotentProfile::operator*=(const Cyc& s) {
  for (auto& v : values) v *= s;
  return *this;
}

bool operator==(const UnipotentProfile& a, const UnipotentProfile& b) {
  return a.q == b.q && a.values == b.values;
}

UnipotentProfile unipotent_profile(
    std::uint32_t q, const std::function<Cyc(const ClassLabel&)>& f) {
  auto so4 = so4_classes(q);
  UnipotentProfile p;
  p.q = q;
  for (std::uint32_t c : so4->unipotent_classes()) {
    p.classes.push_back(so4->labels[c]);
    p.values.push_back(f(so4->labels[c]));
  }
  return p;
}

UnipotentProfile unipotent_profile(const VirtualChar& v) {
  return unipotent_profile(v.q,
                           [&v](const ClassLabel& l) { return v.eval(l); });
}

UnipotentProfile unipotent_profile(const IrrSO4& r) {
  return unipotent_profile(r.q,
                           [&r](const ClassLabel& l) { return eval(r, l); });
}

UnipotentProfile green(std::uint32_t q, TorusType w) {
  return unipotent_profile(dl_char(q, w, trivial_torus_char(w)));
}

long q_star(std::uint32_t q) {
  return (q % 4 == 1) ? static_cast<long>(q) : -static_cast<long>(q);
}

UnipotentProfile g_sgn(std::uint32_t q) {
  UnipotentProfile d =
      unipotent_profile(find_irreducible(q, "omega_princ+")) -
      unipotent_profile(find_irreducible(q, "omega_princ-"));
  return Cyc(frac(1, q_star(q))) * d;
}

SO4Elem central_involution(const Field& f) {
  return so4_canonical(f, mat_identity(), mat(f, -1, 0, 0, -1));
}

namespace {

SO4Elem su_elem(const Field& f, const SO4Elem& s, const ClassLabel& u) {
  if (!is_unipotent(f, u.rep)) {
    throw PreconditionError("not a unipotent class: " + u.name);
  }
  const ClassKey one = class_key(f, so4_canonical(f, mat_identity(),
                                                  mat_identity()));
  const SO4Elem s2 =
      so4_canonical(f, mat_mul(f, s.g, s.g), mat_mul(f, s.h, s.h));
  if (class_key(f, s) == one || !(class_key(f, s2) == one)) {
    throw PreconditionError("s is not of order 2");
  }
  return so4_canonical(f, mat_mul(f, s.g, u.rep.g),
                       mat_mul(f, s.h, u.rep.h));
}

}  // namespace

Cyc su_eval(const IrrSO4& r, const SO4Elem& s, const ClassLabel& u) {
  const Field& f = *field(r.q);
  return eval(r, su_elem(f, s, u));
}

Cyc su_eval(const VirtualChar& v, const SO4Elem& s, const ClassLabel& u) {
  const Field& f = *field(v.q);
  return v.eval(classify(f, su_elem(f, s, u)));
}

std::uint64_t count_order2(std::uint32_t q, TorusType w) {
  const SO4Group& g = *so4_classes(q)->group;
  SO4Subgroup which = SO4Subgroup::kTorus;
  switch (w) {
    case TorusType::kSplit:
      which = SO4Subgroup::kTorus;
      break;
    case TorusType::kA1:
      which = SO4Subgroup::kTorusA1;
      break;
    case TorusType::kA1Tilde:
      which = SO4Subgroup::kTorusA1Tilde;
      break;
    case TorusType::kA1xA1Tilde:
      which = SO4Subgroup::kTorusA1xA1Tilde;
      break;
  }
  Subgroup t = so4_subgroup(g, which);
  std::uint64_t n = 0;
  for (ElemId x : t.members) {
    if (x != g.identity() && g.mul(x, x) == g.identity()) ++n;
  }
  return n;
}

bool IdentityReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.ok; });
}

namespace {

void steinberg_checks(std::uint32_t q, IdentityReport& rep) {
  const Field& f = *field(q);
  std::map<TorusType, VirtualChar> r;
  for (TorusType w : torus_types()) r[w] = dl_char(q, w, trivial_torus_char(w));
  const IrrSO4 st = find_irreducible(q, "St_SO4");
  const IrrSO4 one = find_irreducible(q, "1_SO4");

  VirtualChar alt, sum;
  alt.q = sum.q = q;
  for (TorusType w : torus_types()) {
    alt += weyl_sign(w) * r[w];
    sum += r[w];
  }
  IdentityCheck c;
  c.name = "steinberg: 4 St = R_A1xA1~ - R_A1 - R_A1~ + R_1";
  c.classes_checked = so4_classes(q)->labels.size();
  if (!(alt == 4 * virtual_of(st))) {
    c.ok = false;
    c.witnesses.push_back("virtual: " + alt.to_string());
  }
  rep.checks.push_back(c);

  IdentityCheck t;
  t.name = "trivial: 4 * 1 = sum of R_w";
  t.classes_checked = c.classes_checked;
  if (!(sum == 4 * virtual_of(one))) {
    t.ok = false;
    t.witnesses.push_back("virtual: " + sum.to_string());
  }
  rep.checks.push_back(t);

  UnipotentProfile lhs = Cyc(4) * unipotent_profile(st);
  UnipotentProfile rhs = green(q, TorusType::kA1xA1Tilde) -
                         green(q, TorusType::kA1) -
                         green(q, TorusType::kA1Tilde) +
                         green(q, TorusType::kSplit);
  rep.checks.push_back(
      compare("steinberg on unipotents via Green functions", lhs, rhs));

  IdentityCheck g;
  g.name = "GL2: 2 St = R_1 - R_(12)";
  const FactorChar triv_split{{CharDomain::kFq, 0}, {CharDomain::kFq, 0}};
  const FactorChar triv_ns{{CharDomain::kFq2, 0}, {CharDomain::kFq, 0}};
  auto r1 = gl2_dl(f, true, triv_split);
  auto r12 = gl2_dl(f, false, triv_ns);
  const IrrGL2 st2{IrrGL2::Kind::kSt, {CharDomain::kFq, 0}, {}};
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::uint32_t cc = 0; cc < q; ++cc) {
        for (std::uint32_t d = 0; d < q; ++d) {
          Mat2 m{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                 static_cast<std::uint8_t>(cc), static_cast<std::uint8_t>(d)};
          if (mat_det(f, m) == 0) continue;
          ++g.classes_checked;
          Cyc lhs2 = Cyc(2) * gl2_eval(f, st2, m);
          Cyc rhs2 = gl2_virtual_eval(f, r1, m) - gl2_virtual_eval(f, r12, m);
          if (lhs2 != rhs2 && g.witnesses.size() < 8) {
            g.ok = false;
            g.witnesses.push_back(witness(mat_format(f, m), lhs2, rhs2));
          }
        }
      }
    }
  }
  rep.checks.push_back(g);
}

void omega_checks(std::uint32_t q, IdentityReport& rep) {
  const Field& f = *field(q);
  const Cyc qs(q_star(q));
  const UnipotentProfile gs = g_sgn(q);
  const UnipotentProfile q1 = green(q, TorusType::kSplit);
  const UnipotentProfile qaa = green(q, TorusType::kA1xA1Tilde);
  const Cyc half(frac(1, 2));
  for (int s : {1, -1}) {
    const std::string sg = s > 0 ? "+" : "-";
    rep.checks.push_back(compare(
        "omega_princ" + sg + " = 1/2 (Q_1 " + sg + " q* G_sgn)",
        unipotent_profile(find_irreducible(q, "omega_princ" + sg)),
        half * (q1 + Cyc(s) * qs * gs)));
  }
  for (int s : {1, -1}) {
    const std::string sg = s > 0 ? "+" : "-";
    rep.checks.push_back(compare(
        "omega_cusp" + sg + " = 1/2 (Q_A1xA1~ " + sg + " q* G_sgn)",
        unipotent_profile(find_irreducible(q, "omega_cusp" + sg)),
        half * (qaa + Cyc(s) * qs * gs)));
  }

  IdentityCheck sup;
  sup.name = "G_sgn supported on c2 x c2";
  for (std::size_t i = 0; i < gs.classes.size(); ++i) {
    const ClassLabel& l = gs.classes[i];
    const bool reg = l.f1.kind == FactorKind::kC2 &&
                     l.f2.kind == FactorKind::kC2;
    ++sup.classes_checked;
    if (!reg && !gs.values[i].is_zero()) {
      sup.ok = false;
      sup.witnesses.push_back(witness(l.name, gs.values[i], Cyc(0)));
    }
  }
  rep.checks.push_back(sup);

  // Regular unipotent (u(x), u(y)) for every x, y.
  IdentityCheck tr;
  tr.name = "regular unipotent trace 1/2 (1 + sign eps(xy) q*)";
  for (const char* fam : {"omega_princ", "omega_cusp"}) {
    for (int s : {1, -1}) {
      const IrrSO4 r =
          find_irreducible(q, std::string(fam) + (s > 0 ? "+" : "-"));
      for (std::uint32_t x = 1; x < q; ++x) {
        for (std::uint32_t y = 1; y < q; ++y) {
          SO4Elem u = so4_canonical(f, mat(f, 1, x, 0, 1), mat(f, 1, y, 0, 1));
          Cyc lhs = eval(r, u);
          Cyc rhs = half * (Cyc(1) + Cyc(s * f.legendre(f.mul(x, y))) * qs);
          ++tr.classes_checked;
          if (lhs != rhs) {
            tr.ok = false;
            tr.witnesses.push_back(r.name + " at u(" + std::to_string(x) +
                                   "),u(" + std::to_string(y) + "): " +
                                   lhs.to_string() + " != " + rhs.to_string());
          }
        }
      }
    }
  }
  rep.checks.push_back(tr);

  // Both halves together are R_T(theta) for the sign characters.
  for (TorusType w : {TorusType::kSplit, TorusType::kA1xA1Tilde}) {
    const std::string fam =
        w == TorusType::kSplit ? "omega_princ" : "omega_cusp";
    IdentityCheck c;
    c.name = "R_" + to_string(w) + "(sign) = " + fam + "+ + " + fam + "-";
    c.classes_checked = so4_classes(q)->labels.size();
    VirtualChar lhs = dl_char(q, w, sign_torus_char(q, w));
    VirtualChar rhs = virtual_of(find_irreducible(q, fam + "+")) +
                      virtual_of(find_irreducible(q, fam + "-"));
    if (!(lhs == rhs)) {
      c.ok = false;
      c.witnesses.push_back("virtual: " + lhs.to_string());
    }
    rep.checks.push_back(c);
  }

  // Central s = c1(1) x c1(-1): omega_princ scales by (-1)^((q-1)/2),
  // omega_cusp by (-1)^((q+1)/2).
  const SO4Elem s = central_involution(f);
  const long sp = (q % 4 == 1) ? 1 : -1;
  IdentityCheck su;
  su.name = "s u: omega_princ scales by (-1)^((q-1)/2), omega_cusp by "
            "(-1)^((q+1)/2)";
  for (const char* fam : {"omega_princ", "omega_cusp"}) {
    const long factor = std::string(fam) == "omega_princ" ? sp : -sp;
    for (const char* sg : {"+", "-"}) {
      const IrrSO4 r = find_irreducible(q, std::string(fam) + sg);
      for (const ClassLabel& u : q1.classes) {
        ++su.classes_checked;
        Cyc lhs = su_eval(r, s, u);
        Cyc rhs = Cyc(factor) * eval(r, u);
        if (lhs != rhs) {
          su.ok = false;
          su.witnesses.push_back(r.name + " " + witness(u.name, lhs, rhs));
        }
      }
    }
  }
  rep.checks.push_back(su);
}

void face_checks(std::uint32_t q, IdentityReport& rep) {
  const Field& f = *field(q);
  const MultChar one{CharDomain::kFq, 0};
  const FactorChar triv_split{one, one};
  const FactorChar triv_ns{{CharDomain::kFq2, 0}, one};
  const auto q1 = gl2_dl(f, true, triv_split);
  const auto qa = gl2_dl(f, false, triv_ns);
  // eps St + Ind_B(1 x eps): N-invariants eps x eps + 1 x eps + eps x 1.
  const std::vector<std::pair<IrrGL2, long>> v{
      {{IrrGL2::Kind::kSt, f.epsilon(), {}}, 1},
      {gl2_canonical(f, {IrrGL2::Kind::kPS, one, f.epsilon()}), 1}};
  const Cyc three_half(frac(3, 2)), half(frac(1, 2));

  auto pattern = [&](const Mat2& m) {
    return three_half * gl2_virtual_eval(f, q1, m) -
           half * gl2_virtual_eval(f, qa, m);
  };

  IdentityCheck g;
  g.name = "face A1 (GL2): eps St + Ind_B(1 x eps) = 3/2 Q_1 - 1/2 Q_A1";
  for (const Mat2& m : {mat_identity(), mat(f, 1, 1, 0, 1)}) {
    ++g.classes_checked;
    Cyc lhs = gl2_virtual_eval(f, v, m);
    Cyc rhs = pattern(m);
    if (lhs != rhs) {
      g.ok = false;
      g.witnesses.push_back(witness(mat_format(f, m), lhs, rhs));
    }
  }
  rep.checks.push_back(g);

  IdentityCheck s;
  s.name = "face A1~ (SL2): St + omega_e+ + omega_e- = 3/2 Q_1 - 1/2 Q_A1";
  std::vector<IrrSL2> sl;
  for (const auto& r : sl2_irreducibles(f)) {
    if (r.kind == IrrSL2::Kind::kSt || r.kind == IrrSL2::Kind::kOmegaE) {
      sl.push_back(r);
    }
  }
  for (const Mat2& m : {mat_identity(), mat(f, 1, 1, 0, 1),
                        mat(f, 1, f.nonsquare(), 0, 1)}) {
    ++s.classes_checked;
    Cyc lhs;
    for (const auto& r : sl) lhs += sl2_eval(f, r, m);
    Cyc rhs = pattern(m);
    Cyc res = gl2_virtual_eval(f, v, m);
    if (lhs != rhs || lhs != res) {
      s.ok = false;
      s.witnesses.push_back(witness(mat_format(f, m), lhs, rhs));
    }
  }
  if (sl.size() != 3) {
    s.ok = false;
    s.witnesses.push_back("expected St and two omega_e halves");
  }
  rep.checks.push_back(s);

  IdentityCheck e;
  e.name = "face empty: N-invariants of the A1 face = 3 = 3 Q_1^{e}";
  Cyc sum;
  for (std::uint32_t x = 0; x < q; ++x) {
    sum += gl2_virtual_eval(f, v, mat(f, 1, x, 0, 1));
  }
  Cyc inv = sum / Rat(q);
  e.classes_checked = 1;
  if (inv != Cyc(3)) {
    e.ok = false;
    e.witnesses.push_back(witness("e", inv, Cyc(3)));
  }
  rep.checks.push_back(e);
}

}  // namespace

IdentityReport verify_identities(std::uint32_t q, IdentitySet which) {
  check_budget("dl identities");
  IdentityReport rep;
  rep.q = q;
  const bool all = which == IdentitySet::kAll;
  if (all || which == IdentitySet::kSteinberg) steinberg_checks(q, rep);
  if (all || which == IdentitySet::kOmega) omega_checks(q, rep);
  if (all || which == IdentitySet::kFaces) face_checks(q, rep);
  return rep;
}

}  // namespace redchar
