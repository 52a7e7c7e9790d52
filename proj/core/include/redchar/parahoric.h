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

#ifndef REDCHAR_PARAHORIC_H_
#define REDCHAR_PARAHORIC_H_

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "redchar/classfn.h"
#include "redchar/dl.h"
#include "redchar/ff.h"

namespace redchar {

// Character of the diagonal torus of SO4:
//   (diag(a1,a2), diag(b1,b2)) -> c1(a1) c2(a2) f1(b1)^-1 f2(b2)^-1,
// with c1 c2 = f1 f2. Stored normalized so that f2 = 1.
struct BorelChar {
  MultChar c1{}, c2{}, f1{}, f2{};
  friend auto operator<=>(const BorelChar& a, const BorelChar& b) {
    return std::tuple(a.c1.exponent, a.c2.exponent, a.f1.exponent,
                      a.f2.exponent) <=> std::tuple(b.c1.exponent,
                                                    b.c2.exponent,
                                                    b.f1.exponent,
                                                    b.f2.exponent);
  }
  friend bool operator==(const BorelChar& a, const BorelChar& b) {
    return (a <=> b) == 0;
  }
};

// From exponents on F_q^x; PreconditionError unless c1 c2 = f1 f2.
BorelChar borel_char(std::uint32_t q, std::uint32_t c1, std::uint32_t c2,
                     std::uint32_t f1, std::uint32_t f2);
// Factors written as 1, eps, zeta, zeta^-1 where they apply, else chi^k.
std::string to_string(std::uint32_t q, const BorelChar& b);
Cyc eval(const Field& f, const BorelChar& b, const SO4Elem& x);

struct NamedRep {
  enum class Kind {
    kPiEta2Beta,       // eps St + omega_princ^{sign}
    kIndBorel,         // Ind_B(chi)
    kIndPChiSt,        // Ind_P(chi x chi^-1 x St), P = Borel x GL2
    kOmegaPrincEps,    // eps twist of St, the image of omega_princ^eps
    kMackeySumBeta,    // Ind_B(eps x eps x 1 x 1) + 2 Ind_B(eps x 1 x eps x 1)
  };
  std::uint32_t q = 0;
  Kind kind = Kind::kPiEta2Beta;
  std::string name;
  ClassFunction character;
  // N-invariants as a torus representation, where a list is stated.
  std::vector<BorelChar> stated_n_invariants;
};

NamedRep pi_eta2_beta(std::uint32_t q, int sign);
NamedRep ind_borel(std::uint32_t q, const BorelChar& chi);
// Inflated from (g, h) -> chi(a1) chi(a2)^-1 St(h), g = [[a1,*],[0,a2]].
NamedRep ind_p_chi_st(std::uint32_t q, const MultChar& chi);
// chi = zeta of order 3; q = 1 mod 3.
NamedRep ind_p_zeta_st(std::uint32_t q);
NamedRep omega_princ_eps_shadow(std::uint32_t q);
NamedRep mackey_sum_beta_rep(std::uint32_t q);

// Names accepted: pi_eta2_beta+, pi_eta2_beta-, ind_borel:c1,c2,f1,f2
// (exponents), ind_P_eps_St, ind_P_zeta_St, omega_princ_eps_shadow,
// mackey_sum_beta.
NamedRep named_rep(std::uint32_t q, const std::string& name);

struct NInvariants {
  std::vector<std::pair<BorelChar, long>> chars;  // nonzero multiplicities
  long dimension = 0;
  std::vector<BorelChar> expected;  // stated list, possibly empty
  bool matches_expected = true;     // as multisets
};

// The N-fixed space as a torus representation, from
// <Res_B V, chi>_B over every torus character chi.
NInvariants n_invariants_report(const NamedRep& rep);

struct MackeyReport {
  std::uint32_t q = 0;
  std::uint64_t degree = 0;
  VirtualChar decomposition;
  long eps_st_multiplicity = 0;
  // In Ind_B(eps x 1 x eps x 1) alone, and in the whole sum.
  std::pair<long, long> omega_in_summand{0, 0};
  std::pair<long, long> omega_in_total{0, 0};
  // Multiplicities of pi_eta2_beta+- are bounded by the sum's.
  bool contains_pi_plus = false;
  bool contains_pi_minus = false;
};
MackeyReport mackey_sum_beta(std::uint32_t q);

struct PinReport {
  std::uint32_t q = 0;
  // Component whose regular unipotent trace at eps(xy) = 1 is 1/2(1+q*).
  std::string trace_plus;
  // Conjugating omega_princ+ by diag(c,1) in one factor gives omega_princ-
  // exactly for nonsquare c, and fixes it for square c.
  bool twist_swaps = false;
  // Half whose restriction to SL2 x SL2 contains R_+ x R_+.
  std::string twist_plus;
  bool agree = false;
  std::vector<std::string> candidates;  // eps St + omega', eps St + omega''
  std::string pinned;
};
PinReport component_pin(std::uint32_t q);

}  // namespace redchar

#endif  // REDCHAR_PARAHORIC_H_
