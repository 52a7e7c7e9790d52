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

#ifndef REDCHAR_CHARTAB_H_
#define REDCHAR_CHARTAB_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "redchar/classes.h"
#include "redchar/classfn.h"
#include "redchar/cyclo.h"
#include "redchar/ff.h"
#include "redchar/groups.h"

namespace redchar {

// Irreducible of GL2(F_q). a, b are characters of F_q^x except for kCusp,
// where a is a character of F_{q^2}^x with a != a^q.
//   kDet   a o det
//   kSt    St (x) a o det
//   kPS    Ind_B(a (x) b), a != b
//   kCusp  rho_a
struct IrrGL2 {
  enum class Kind { kDet, kSt, kPS, kCusp };
  Kind kind = Kind::kDet;
  MultChar a{};
  MultChar b{};
  friend bool operator==(const IrrGL2&, const IrrGL2&) = default;
};

// Sorts the PS pair and picks the least of rho_a, rho_{a^q}.
IrrGL2 gl2_canonical(const Field& f, IrrGL2 r);
std::vector<IrrGL2> gl2_irreducibles(const Field& f);
Cyc gl2_eval(const Field& f, const IrrGL2& r, const FactorType& t);
Cyc gl2_eval(const Field& f, const IrrGL2& r, const Mat2& m);
std::uint64_t gl2_degree(const Field& f, const IrrGL2& r);
MultChar gl2_central_char(const Field& f, const IrrGL2& r);
// r (x) (lambda o det), canonicalized.
IrrGL2 gl2_twist(const Field& f, const IrrGL2& r, const MultChar& lambda);
std::string to_string(const Field& f, const IrrGL2& r);

// Irreducible of SL2(F_q).
//   kPS     Ind_B(chi), chi^2 != 1, chi ~ chi^-1
//   kCusp   cuspidal attached to chi on F_{q^2}^1, chi^2 != 1
//   kOmegaE halves of Ind_B(epsilon); the same as R_{sign}(alpha0)
//   kOmega0 halves of rho_{theta0}|SL2; the same as R'_{sign}(theta0)
// For the halves the value at c2(z, gamma) is
//   omega_e: 1/2 (eps(z) + sign eps(gamma) sqrt(q*))
//   omega_0: 1/2 theta0(z) (-1 + sign eps(gamma z) sqrt(q*)).
struct IrrSL2 {
  enum class Kind { kTriv, kSt, kPS, kCusp, kOmegaE, kOmega0 };
  Kind kind = Kind::kTriv;
  MultChar chi{};
  int sign = 1;
  friend bool operator==(const IrrSL2&, const IrrSL2&) = default;
};
std::vector<IrrSL2> sl2_irreducibles(const Field& f);
// m must have determinant 1.
Cyc sl2_eval(const Field& f, const IrrSL2& r, const Mat2& m);
std::string to_string(const Field& f, const IrrSL2& r);

// Families of irreducibles of SO4(F_q) = GL_{2,2}/F_q^x. Every irreducible
// is a constituent of pi1 x pi2 restricted from GL2 x GL2 with
// trivial product of central characters. The *Swap tags are the images
// under the outer automorphism exchanging the two factors.
enum class CaseTag {
  kTriv,
  kZeta,
  kOneBoxSt,
  kOneBoxStZeta,
  kStBoxOne,
  kStBoxOneZeta,
  kSteinberg,
  kSteinbergZeta,
  kIndPChiTriv,
  kIndPChiTrivSwap,
  kIndPChiSt,
  kIndPChiStSwap,
  kOneBoxRho,
  kOneBoxRhoSwap,
  kStBoxRho,
  kStBoxRhoSwap,
  kIndBorel,
  kOmegaPrinc,
  kIndGl2PairRho,
  kIndGl2PairRhoSwap,
  kRhoBoxRho,
  kOmegaCusp,
};
std::string to_string(CaseTag t);

struct IrrSO4 {
  std::uint32_t q = 0;
  CaseTag tag = CaseTag::kTriv;
  // Least representative of the twist orbit (pi1 (x) l, pi2 (x) l^-1).
  IrrGL2 pi1, pi2;
  // +1 / -1 for the two halves of an epsilon-stable pair, else 0.
  int sign = 0;
  int appendix_case = 0;  // 1..9
  bool swapped = false;   // outer image of an Appendix column
  std::string name;
  friend bool operator==(const IrrSO4& a, const IrrSO4& b) {
    return a.q == b.q && a.pi1 == b.pi1 && a.pi2 == b.pi2 && a.sign == b.sign;
  }
};

// Deterministic sweep over all twist orbits; sorted by tag then parameters.
std::vector<IrrSO4> list_irreducibles(std::uint32_t q);
std::uint64_t degree(const IrrSO4& r);

// Character value, computed from the GL2 and SL2 factor characters.
// PreconditionError if the label belongs to another q.
Cyc eval(const IrrSO4& r, const ClassLabel& c);
Cyc eval(const IrrSO4& r, const SO4Elem& x);
ClassFunction character(const IrrSO4& r);

// Appendix table entry as printed, with its parameters substituted at the
// display representative. nullopt when the entry names a parameter the row
// does not define, or the family has no printed column.
std::optional<Cyc> appendix_entry(const IrrSO4& r, const ClassLabel& c);
// Row 1..16 of the printed tables for a class.
int appendix_row(const ClassLabel& c);
bool has_appendix_column(CaseTag t);

// Finds an irreducible by name; PreconditionError if none.
IrrSO4 find_irreducible(std::uint32_t q, const std::string& name);
// Same class function, looked up in list_irreducibles.
IrrSO4 twist_by_zeta(const IrrSO4& r);
IrrSO4 outer_swap(const IrrSO4& r);

struct EntryNote {
  std::string irr;
  std::string cls;
  std::string appendix;  // printed value, or "undefined"
  std::string derived;
};

struct TableReport {
  std::uint32_t q = 0;
  std::size_t num_irreducibles = 0;
  std::size_t num_classes = 0;
  Rat degree_square_sum;
  std::uint64_t group_order = 0;
  bool count_ok = false;
  bool degrees_ok = false;
  bool row_orthogonality = false;
  bool column_orthogonality = false;
  // Set equality with brute_force_irreducibles; nullopt when not run.
  std::optional<bool> oracle_match;
  std::vector<std::string> failures;  // witnesses for failed checks
  std::vector<EntryNote> corrected;   // printed entries that were replaced
  std::size_t entries_verified = 0;   // printed entries equal to derived
  bool ok() const;
};

// Checks the derived table; run_oracle compares against the class-algebra
// oracle as well.
TableReport verify_table(std::uint32_t q, bool run_oracle,
                         std::uint64_t seed = 1);

}  // namespace redchar

#endif  // REDCHAR_CHARTAB_H_
