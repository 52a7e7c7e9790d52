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

#ifndef REDCHAR_DL_H_
#define REDCHAR_DL_H_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "redchar/chartab.h"
#include "redchar/classes.h"
#include "redchar/classfn.h"
#include "redchar/cyclo.h"
#include "redchar/ff.h"

namespace redchar {

// Maximal tori of SO4 up to rational conjugacy, one per element of
// W = mu2 x mu2.
enum class TorusType { kSplit, kA1, kA1Tilde, kA1xA1Tilde };
std::string to_string(TorusType w);
std::vector<TorusType> torus_types();
// Sign of w as a Weyl group element.
int weyl_sign(TorusType w);
bool first_factor_split(TorusType w);
bool second_factor_split(TorusType w);

// Character of one GL2 factor's torus: (a, b) on the diagonal torus,
// or a alone on F_{q^2}^x for the nonsplit one.
struct FactorChar {
  MultChar a{};
  MultChar b{};
  friend bool operator==(const FactorChar&, const FactorChar&) = default;
};

struct TorusChar {
  FactorChar first, second;
  friend bool operator==(const TorusChar&, const TorusChar&) = default;
};

TorusChar trivial_torus_char(TorusType w);
// (1, eps) x (1, eps) on the split torus, and the theta pair carried by
// omega_cusp on the anisotropic one. PreconditionError for the other types.
TorusChar sign_torus_char(std::uint32_t q, TorusType w);
// Image under the Weyl group element acting on the given factors.
TorusChar weyl_act(const Field& f, TorusType w, const TorusChar& t,
                   bool on_first, bool on_second);

// Integer combination of irreducibles.
struct VirtualChar {
  std::uint32_t q = 0;
  std::vector<std::pair<IrrSO4, long>> terms;  // nonzero coefficients

  Cyc eval(const ClassLabel& c) const;
  ClassFunction character() const;
  long coefficient(const IrrSO4& r) const;
  long degree() const;
  std::string to_string() const;

  VirtualChar& operator+=(const VirtualChar& o);
  VirtualChar& operator-=(const VirtualChar& o);
  VirtualChar& operator*=(long s);
  friend VirtualChar operator+(VirtualChar a, const VirtualChar& b) {
    return a += b;
  }
  friend VirtualChar operator-(VirtualChar a, const VirtualChar& b) {
    return a -= b;
  }
  friend VirtualChar operator*(long s, VirtualChar a) { return a *= s; }
  friend bool operator==(const VirtualChar& a, const VirtualChar& b);
};

VirtualChar virtual_of(const IrrSO4& r);
// Integer decomposition of a class function; PreconditionError if it is
// not a virtual character.
VirtualChar decompose_virtual(std::uint32_t q, const ClassFunction& f);

// GL2 part of R_T(theta) for one factor: (irreducible, coefficient).
std::vector<std::pair<IrrGL2, long>> gl2_dl(const Field& f, bool split,
                                            const FactorChar& c);

// PreconditionError if t is not a character of the torus of type w.
VirtualChar dl_char(std::uint32_t q, TorusType w, const TorusChar& t);

// Values on the unipotent classes, in so4_classes order.
struct UnipotentProfile {
  std::uint32_t q = 0;
  std::vector<ClassLabel> classes;
  std::vector<Cyc> values;

  const Cyc& at(const ClassLabel& c) const;
  UnipotentProfile& operator+=(const UnipotentProfile& o);
  UnipotentProfile& operator-=(const UnipotentProfile& o);
  UnipotentProfile& operator*=(const Cyc& s);
  friend UnipotentProfile operator+(UnipotentProfile a,
                                    const UnipotentProfile& b) {
    return a += b;
  }
  friend UnipotentProfile operator-(UnipotentProfile a,
                                    const UnipotentProfile& b) {
    return a -= b;
  }
  friend UnipotentProfile operator*(const Cyc& s, UnipotentProfile a) {
    return a *= s;
  }
  friend bool operator==(const UnipotentProfile& a,
                         const UnipotentProfile& b);
};

UnipotentProfile unipotent_profile(std::uint32_t q,
                                   const std::function<Cyc(const ClassLabel&)>& f);
UnipotentProfile unipotent_profile(const VirtualChar& v);
UnipotentProfile unipotent_profile(const IrrSO4& r);

UnipotentProfile green(std::uint32_t q, TorusType w);
// (omega_princ+ - omega_princ-) / q*.
UnipotentProfile g_sgn(std::uint32_t q);
// q* = eps(-1) q.
long q_star(std::uint32_t q);

// c1(1) x c1(-1).
SO4Elem central_involution(const Field& f);
// Value at the class of s u, u the representative of a unipotent class.
// PreconditionError unless s has order 2 and u is unipotent.
Cyc su_eval(const IrrSO4& r, const SO4Elem& s, const ClassLabel& u);
Cyc su_eval(const VirtualChar& v, const SO4Elem& s, const ClassLabel& u);
// Elements of order 2 in the rational points of the torus of type w.
std::uint64_t count_order2(std::uint32_t q, TorusType w);

enum class IdentitySet { kSteinberg, kOmega, kFaces, kAll };

struct IdentityCheck {
  std::string name;
  bool ok = true;
  std::size_t classes_checked = 0;
  std::vector<std::string> witnesses;  // "class: lhs != rhs"
};

struct IdentityReport {
  std::uint32_t q = 0;
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

IdentityReport verify_identities(std::uint32_t q,
                                 IdentitySet which = IdentitySet::kAll);

}  // namespace redchar

#endif  // REDCHAR_DL_H_
