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

#ifndef REDCHAR_FF_H_
#define REDCHAR_FF_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "redchar/cyclo.h"

namespace redchar {

// a + b*delta with delta^2 = Delta, the least non-residue mod q.
struct Fq2Elem {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend bool operator==(const Fq2Elem&, const Fq2Elem&) = default;
};

enum class CharDomain { kFq, kFq2, kFq2NormOne };

std::string to_string(CharDomain d);

// g -> zeta_m^(exponent * log(g)) for the field's fixed generator of the
// domain and m the domain order.
struct MultChar {
  CharDomain domain = CharDomain::kFq;
  std::uint32_t exponent = 0;
  friend bool operator==(const MultChar&, const MultChar&) = default;
};

// Arithmetic tables for F_q and F_{q^2}, q an odd prime.
class Field {
 public:
  explicit Field(std::uint32_t q);

  std::uint32_t q() const { return q_; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t s = x + y;
    return s >= q_ ? s - q_ : s;
  }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const {
    return x >= y ? x - y : x + q_ - y;
  }
  std::uint32_t neg(std::uint32_t x) const { return x == 0 ? 0 : q_ - x; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    return static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(x) * y % q_);
  }
  std::uint32_t inv(std::uint32_t x) const;
  std::uint32_t div(std::uint32_t x, std::uint32_t y) const {
    return mul(x, inv(y));
  }
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;
  std::uint32_t from_int(std::int64_t v) const;
  // Residue as a signed integer in (-q/2, q/2).
  std::int64_t signed_value(std::uint32_t x) const;

  // +1 for nonzero squares, -1 for non-squares; throws on 0.
  int legendre(std::uint32_t x) const;
  bool is_square(std::uint32_t x) const { return legendre(x) == 1; }
  std::optional<std::uint32_t> sqrt(std::uint32_t x) const;
  std::uint32_t nonsquare() const { return delta_; }
  std::uint32_t generator() const { return g0_; }
  std::uint32_t log(std::uint32_t x) const;
  std::uint32_t exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  // F_{q^2}.
  Fq2Elem e2(std::uint32_t a, std::uint32_t b = 0) const { return {a, b}; }
  Fq2Elem add2(Fq2Elem x, Fq2Elem y) const;
  Fq2Elem sub2(Fq2Elem x, Fq2Elem y) const;
  Fq2Elem mul2(Fq2Elem x, Fq2Elem y) const;
  Fq2Elem inv2(Fq2Elem x) const;
  Fq2Elem pow2(Fq2Elem x, std::uint64_t e) const;
  Fq2Elem frobenius(Fq2Elem x) const { return {x.a, neg(x.b)}; }
  std::uint32_t norm(Fq2Elem x) const;
  std::uint32_t trace(Fq2Elem x) const { return add(x.a, x.a); }
  bool in_base(Fq2Elem x) const { return x.b == 0; }
  std::uint32_t index2(Fq2Elem x) const { return x.a + x.b * q_; }
  Fq2Elem generator2() const { return G_; }
  std::uint32_t log2(Fq2Elem x) const;
  Fq2Elem exp2(std::uint64_t k) const { return exp2_[k % (q_ * q_ - 1)]; }
  // Exponent t with g0 = G^((q+1) t), G the generator of F_{q^2}^x.
  std::uint32_t base_in_ext() const { return base_in_ext_; }
  std::string format2(Fq2Elem x) const;

  std::uint32_t domain_order(CharDomain d) const;
  Cyc eval(const MultChar& chi, std::uint32_t x) const;
  Cyc eval(const MultChar& chi, Fq2Elem z) const;
  std::vector<MultChar> list_chars(CharDomain d) const;
  MultChar epsilon() const { return {CharDomain::kFq, (q_ - 1) / 2}; }
  MultChar theta0() const { return {CharDomain::kFq2NormOne, (q_ + 1) / 2}; }
  MultChar restrict_to_base(const MultChar& theta) const;
  MultChar restrict_to_norm_one(const MultChar& theta) const;
  MultChar frobenius_twist(const MultChar& theta) const;
  // lambda o Norm as a character of F_{q^2}^x.
  MultChar norm_pullback(const MultChar& lambda) const;
  MultChar mul_chars(const MultChar& a, const MultChar& b) const;
  MultChar inverse_char(const MultChar& a) const;
  std::uint32_t char_order(const MultChar& a) const;

 private:
  std::uint32_t q_;
  std::uint32_t delta_;
  std::uint32_t g0_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> inv_;
  Fq2Elem G_;
  std::vector<std::uint32_t> log2_;
  std::vector<Fq2Elem> exp2_;
  std::uint32_t base_in_ext_;
};

bool is_odd_prime(std::uint32_t q);

// Shared immutable field per q.
std::shared_ptr<const Field> field(std::uint32_t q);

}  // namespace redchar

#endif  // REDCHAR_FF_H_
