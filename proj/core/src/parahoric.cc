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

#include "redchar/parahoric.h"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "redchar/chartab.h"
#include "redchar/error.h"

namespace redchar {

namespace {

MultChar fq(std::uint32_t q, std::int64_t k) {
  const std::int64_t n = q - 1;
  return {CharDomain::kFq, static_cast<std::uint32_t>(((k % n) + n) % n)};
}

std::string factor_name(std::uint32_t q, std::uint32_t k) {
  if (k == 0) return "1";
  if (2 * k == q - 1) return "eps";
  if ((q - 1) % 3 == 0 && 3 * k == q - 1) return "zeta";
  if ((q - 1) % 3 == 0 && 3 * k == 2 * (q - 1)) return "zeta^-1";
  return "chi^" + std::to_string(k);
}

MultChar zeta_of(std::uint32_t q) {
  if (!is_odd_prime(q) || q % 3 != 1) {
    throw PreconditionError("zeta of order 3 needs q = 1 mod 3, got q = " +
                            std::to_string(q));
  }
  return fq(q, (q - 1) / 3);
}

std::vector<BorelChar> weyl_orbit(std::uint32_t q, const BorelChar& b) {
  auto e = [](const MultChar& m) { return m.exponent; };
  return {borel_char(q, e(b.c1), e(b.c2), e(b.f1), e(b.f2)),
          borel_char(q, e(b.c2), e(b.c1), e(b.f1), e(b.f2)),
          borel_char(q, e(b.c1), e(b.c2), e(b.f2), e(b.f1)),
          borel_char(q, e(b.c2), e(b.c1), e(b.f2), e(b.f1))};
}

const Subgroup& subgroup(std::uint32_t q, SO4Subgroup which) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, int>, std::unique_ptr<Subgroup>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{q, static_cast<int>(which)}];
  if (!slot) {
    slot = std::make_unique<Subgroup>(
        so4_subgroup(*so4_classes(q)->group, which));
  }
  return *slot;
}

ClassFunction table_char(std::uint32_t q, const std::string& name) {
  return character(find_irreducible(q, name));
}

}  // namespace

BorelChar borel_char(std::uint32_t q, std::uint32_t c1, std::uint32_t c2,
                     std::uint32_t f1, std::uint32_t f2) {
  const std::int64_t n = q - 1;
  if ((static_cast<std::int64_t>(c1) + c2 - f1 - f2) % n != 0) {
    throw PreconditionError("torus character needs c1 c2 = f1 f2");
  }
  BorelChar b;
  b.c1 = fq(q, static_cast<std::int64_t>(c1) - f2);
  b.c2 = fq(q, static_cast<std::int64_t>(c2) - f2);
  b.f1 = fq(q, static_cast<std::int64_t>(f1) - f2);
  b.f2 = fq(q, 0);
  return b;
}

std::string to_string(std::uint32_t q, const BorelChar& b) {
  return factor_name(q, b.c1.exponent) + " x " +
         factor_name(q, b.c2.exponent) + " x " +
         factor_name(q, b.f1.exponent) + " x " +
         factor_name(q, b.f2.exponent);
}

Cyc eval(const Field& f, const BorelChar& b, const SO4Elem& x) {
  if (x.g.c != 0 || x.h.c != 0) {
    throw PreconditionError("element is not in the Borel subgroup");
  }
  const std::int64_t k =
      static_cast<std::int64_t>(b.c1.exponent) * f.log(x.g.a) +
      static_cast<std::int64_t>(b.c2.exponent) * f.log(x.g.d) -
      static_cast<std::int64_t>(b.f1.exponent) * f.log(x.h.a) -
      static_cast<std::int64_t>(b.f2.exponent) * f.log(x.h.d);
  return Cyc::root_of_unity(f.q() - 1, k);
}

NamedRep pi_eta2_beta(std::uint32_t q, int sign) {
  NamedRep r;
  r.q = q;
  r.kind = NamedRep::Kind::kPiEta2Beta;
  const std::string s = sign > 0 ? "+" : "-";
  r.name = "pi_eta2_beta" + s;
  r.character = table_char(q, "St_SO4.zeta") + table_char(q, "omega_princ" + s);
  const std::uint32_t e = (q - 1) / 2;
  r.stated_n_invariants = {borel_char(q, e, e, 0, 0), borel_char(q, e, 0, e, 0),
                           borel_char(q, e, 0, 0, e)};
  return r;
}

NamedRep ind_borel(std::uint32_t q, const BorelChar& chi) {
  auto so4 = so4_classes(q);
  const SO4Group& g = *so4->group;
  const Field& f = g.field();
  NamedRep r;
  r.q = q;
  r.kind = NamedRep::Kind::kIndBorel;
  r.name = "Ind_B(" + to_string(q, chi) + ")";
  r.character = induce(so4->classes, subgroup(q, SO4Subgroup::kBorel),
                       [&](ElemId x) { return eval(f, chi, g.elem(x)); });
  r.stated_n_invariants = weyl_orbit(q, chi);
  return r;
}

NamedRep ind_p_chi_st(std::uint32_t q, const MultChar& chi) {
  if (chi.domain != CharDomain::kFq || chi.exponent >= q - 1) {
    throw PreconditionError("chi must be a character of F_q^x");
  }
  auto so4 = so4_classes(q);
  const SO4Group& g = *so4->group;
  const Field& f = g.field();
  const IrrGL2 st{IrrGL2::Kind::kSt, fq(q, 0), {}};
  const MultChar inv = f.inverse_char(chi);
  NamedRep r;
  r.q = q;
  r.kind = NamedRep::Kind::kIndPChiSt;
  r.name = "Ind_P(" + factor_name(q, chi.exponent) + " x " +
           factor_name(q, inv.exponent) + " x St)";
  r.character = induce(
      so4->classes, subgroup(q, SO4Subgroup::kMirrorParabolic),
      [&](ElemId x) {
        const SO4Elem& e = g.elem(x);
        return f.eval(chi, e.g.a) * f.eval(inv, e.g.d) * gl2_eval(f, st, e.h);
      });
  if (f.char_order(chi) == 3) {
    r.stated_n_invariants = {borel_char(q, chi.exponent, inv.exponent, 0, 0),
                             borel_char(q, inv.exponent, chi.exponent, 0, 0)};
  }
  return r;
}

NamedRep ind_p_zeta_st(std::uint32_t q) {
  return ind_p_chi_st(q, zeta_of(q));
}

NamedRep omega_princ_eps_shadow(std::uint32_t q) {
  const Field& f = *field(q);
  VirtualChar sum;
  sum.q = q;
  for (TorusType w : torus_types()) {
    TorusChar t = trivial_torus_char(w);
    // eps o det~ on the torus of type w: eps o det on the first factor.
    if (first_factor_split(w)) {
      t.first.a = t.first.b = f.epsilon();
    } else {
      t.first.a = f.norm_pullback(f.epsilon());
    }
    sum += weyl_sign(w) * dl_char(q, w, t);
  }
  NamedRep r;
  r.q = q;
  r.kind = NamedRep::Kind::kOmegaPrincEps;
  r.name = "omega_princ_eps_shadow";
  r.character = sum.character() * Cyc(Rat(1, 4));
  const std::uint32_t e = (q - 1) / 2;
  r.stated_n_invariants = {borel_char(q, e, e, 0, 0)};
  return r;
}

NamedRep mackey_sum_beta_rep(std::uint32_t q) {
  const std::uint32_t e = (q - 1) / 2;
  NamedRep a = ind_borel(q, borel_char(q, e, e, 0, 0));
  NamedRep b = ind_borel(q, borel_char(q, e, 0, e, 0));
  NamedRep r;
  r.q = q;
  r.kind = NamedRep::Kind::kMackeySumBeta;
  r.name = "mackey_sum_beta";
  r.character = a.character + b.character * Cyc(2);
  r.stated_n_invariants = a.stated_n_invariants;
  for (int k = 0; k < 2; ++k) {
    r.stated_n_invariants.insert(r.stated_n_invariants.end(),
                                 b.stated_n_invariants.begin(),
                                 b.stated_n_invariants.end());
  }
  return r;
}

NamedRep named_rep(std::uint32_t q, const std::string& name) {
  if (name == "pi_eta2_beta+" || name == "pi_eta2_beta") {
    return pi_eta2_beta(q, 1);
  }
  if (name == "pi_eta2_beta-") return pi_eta2_beta(q, -1);
  if (name == "ind_P_eps_St") return ind_p_chi_st(q, field(q)->epsilon());
  if (name == "ind_P_zeta_St") return ind_p_zeta_st(q);
  if (name == "omega_princ_eps_shadow") return omega_princ_eps_shadow(q);
  if (name == "mackey_sum_beta") return mackey_sum_beta_rep(q);
  const std::string prefix = "ind_borel:";
  if (name.rfind(prefix, 0) == 0) {
    std::vector<std::uint32_t> e;
    std::stringstream ss(name.substr(prefix.size()));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        e.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
      } catch (const std::exception&) {
        throw PreconditionError("bad exponent '" + tok + "' in " + name);
      }
    }
    if (e.size() != 4) {
      throw PreconditionError("ind_borel needs four exponents: " + name);
    }
    for (auto& k : e) k %= q - 1;
    return ind_borel(q, borel_char(q, e[0], e[1], e[2], e[3]));
  }
  throw PreconditionError("unknown representation: " + name);
}

NInvariants n_invariants_report(const NamedRep& rep) {
  const std::uint32_t q = rep.q;
  auto so4 = so4_classes(q);
  const SO4Group& g = *so4->group;
  const Field& f = g.field();
  const Subgroup& b = subgroup(q, SO4Subgroup::kBorel);

  // Sum of the character over each coset of N, keyed by the torus part.
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t,
                      std::uint32_t>,
           Cyc>
      coset;
  for (ElemId x : b.members) {
    const SO4Elem& e = g.elem(x);
    coset[{e.g.a, e.g.d, e.h.a, e.h.d}] += rep.character.at(x);
  }
  NInvariants out;
  for (std::uint32_t c1 = 0; c1 + 1 < q; ++c1) {
    for (std::uint32_t c2 = 0; c2 + 1 < q; ++c2) {
      const BorelChar lambda = borel_char(q, c1, c2, (c1 + c2) % (q - 1), 0);
      Cyc s;
      for (const auto& [t, v] : coset) {
        if (v.is_zero()) continue;
        SO4Elem e{{static_cast<std::uint8_t>(std::get<0>(t)), 0, 0,
                   static_cast<std::uint8_t>(std::get<1>(t))},
                  {static_cast<std::uint8_t>(std::get<2>(t)), 0, 0,
                   static_cast<std::uint8_t>(std::get<3>(t))}};
        s += v * eval(f, lambda, e).conj();
      }
      s /= Rat(b.order());
      if (!s.is_rational() || s.rational().get_den() != 1) {
        throw std::logic_error("non-integral torus multiplicity");
      }
      const long m = s.rational().get_num().get_si();
      if (m != 0) {
        out.chars.emplace_back(lambda, m);
        out.dimension += m;
      }
    }
  }
  out.expected = rep.stated_n_invariants;
  if (!out.expected.empty()) {
    std::map<BorelChar, long> want, got;
    for (const auto& c : out.expected) ++want[c];
    for (const auto& [c, m] : out.chars) got[c] = m;
    out.matches_expected = want == got;
  }
  return out;
}

MackeyReport mackey_sum_beta(std::uint32_t q) {
  const std::uint32_t e = (q - 1) / 2;
  MackeyReport r;
  r.q = q;
  const NamedRep total = mackey_sum_beta_rep(q);
  const NamedRep single = ind_borel(q, borel_char(q, e, 0, e, 0));
  r.degree = total.character.degree().rational().get_num().get_ui();
  r.decomposition = decompose_virtual(q, total.character);
  const VirtualChar one = decompose_virtual(q, single.character);
  const IrrSO4 st = find_irreducible(q, "St_SO4.zeta");
  const IrrSO4 wp = find_irreducible(q, "omega_princ+");
  const IrrSO4 wm = find_irreducible(q, "omega_princ-");
  r.eps_st_multiplicity = r.decomposition.coefficient(st);
  r.omega_in_summand = {one.coefficient(wp), one.coefficient(wm)};
  r.omega_in_total = {r.decomposition.coefficient(wp),
                      r.decomposition.coefficient(wm)};
  auto contains = [&](int sign) {
    const VirtualChar v =
        decompose_virtual(q, pi_eta2_beta(q, sign).character);
    for (const auto& [irr, k] : v.terms) {
      if (r.decomposition.coefficient(irr) < k) return false;
    }
    return true;
  };
  r.contains_pi_plus = contains(1);
  r.contains_pi_minus = contains(-1);
  return r;
}

PinReport component_pin(std::uint32_t q) {
  auto so4 = so4_classes(q);
  const Field& f = so4->field();
  PinReport r;
  r.q = q;
  const Cyc qs(q_star(q));
  const Cyc target = Cyc(Rat(1, 2)) * (Cyc(1) + qs);
  const SO4Elem u = so4_canonical(f, mat(f, 1, 1, 0, 1), mat(f, 1, 1, 0, 1));
  std::vector<std::string> hits;
  for (const char* s : {"+", "-"}) {
    if (eval(find_irreducible(q, std::string("omega_princ") + s), u) ==
        target) {
      hits.push_back(s);
    }
  }
  r.trace_plus = hits.size() == 1 ? hits.front() : "ambiguous";

  // (omega^a)(x) = omega(a x a^-1), a = diag(c,1) in the first factor.
  const IrrSO4 wp = find_irreducible(q, "omega_princ+");
  const IrrSO4 wm = find_irreducible(q, "omega_princ-");
  auto twisted_equals = [&](std::uint32_t c, const IrrSO4& other) {
    const Mat2 a = mat_diag(c, 1);
    for (const auto& l : so4->labels) {
      SO4Elem y = so4_canonical(f, mat_conj(f, a, l.rep.g), l.rep.h);
      if (eval(wp, y) != eval(other, l)) return false;
    }
    return true;
  };
  r.twist_swaps = true;
  for (std::uint32_t c = 1; c < q; ++c) {
    const bool ok = f.is_square(c) ? twisted_equals(c, wp)
                                   : twisted_equals(c, wm);
    if (!ok) r.twist_swaps = false;
  }
  // Definition shadow: "+" is the half whose restriction to SL2 x SL2
  // contains R_+(alpha0) x R_+(alpha0); "-" meets R_+ x R_+^{diag(D,1)}.
  const Subgroup& h = subgroup(q, SO4Subgroup::kSl2xSl2);
  const SO4Group& g = *so4->group;
  IrrSL2 rplus;
  for (const auto& x : sl2_irreducibles(f)) {
    if (x.kind == IrrSL2::Kind::kOmegaE && x.sign == 1) rplus = x;
  }
  auto rr = [&](ElemId x) {
    const SO4Elem& e = g.elem(x);
    const std::uint32_t s = *f.sqrt(mat_det(f, e.g));
    const std::uint32_t si = f.inv(s);
    return sl2_eval(f, rplus, mat_scale(f, si, e.g)) *
           sl2_eval(f, rplus, mat_scale(f, si, e.h));
  };
  std::vector<std::string> contain;
  for (const auto* w : {&wp, &wm}) {
    const ClassFunction chi = character(*w);
    Cyc m = subgroup_inner_product(
        h, [&](ElemId x) { return chi.at(x); }, rr);
    if (!m.is_zero()) contain.push_back(w == &wp ? "+" : "-");
  }
  r.twist_plus = contain.size() == 1 ? contain.front() : "ambiguous";
  r.agree = r.trace_plus == "+" && r.twist_plus == "+";
  r.candidates = {"St_SO4.zeta + omega_princ+", "St_SO4.zeta + omega_princ-"};
  r.pinned = r.agree ? r.candidates.front() : "unresolved";
  return r;
}

}  // namespace redchar
