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

#ifndef REDCHAR_CYCLO_H_
#define REDCHAR_CYCLO_H_

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace redchar {

using Rat = mpq_class;

// Element of Q(zeta_N) stored in the power basis 1, z, ..., z^(phi(N)-1) of
// Q[x]/Phi_N. Orders congruent to 2 mod 4 are never stored; zeta_{2m} is
// rewritten through zeta_m so the representation stays canonical.
class Cyc {
 public:
  Cyc();
  Cyc(long v);  // NOLINT(runtime/explicit)
  Cyc(const Rat& v);  // NOLINT(runtime/explicit)

  // zeta_n^k, stored at order n / gcd(n, k).
  static Cyc root_of_unity(std::uint32_t n, std::int64_t k);
  // Coefficients in the power basis of order n (length phi(n)).
  static Cyc from_power_basis(std::uint32_t n, std::vector<Rat> coeffs);

  std::uint32_t order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  // Same number written at order n; n must be a multiple of order().
  Cyc lifted(std::uint32_t n) const;

  bool is_zero() const;
  bool is_rational() const;
  // Throws std::domain_error if the value is irrational.
  Rat rational() const;

  Cyc conj() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator*=(const Rat& r);
  Cyc& operator/=(const Rat& r);

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator*(Cyc a, const Rat& r) { return a *= r; }
  friend Cyc operator*(const Rat& r, Cyc a) { return a *= r; }
  friend Cyc operator/(Cyc a, const Rat& r) { return a /= r; }
  Cyc operator-() const;

  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

 private:
  Cyc(std::uint32_t order, std::vector<Rat> coeffs);
  void drop_to_rational_if_possible();

  std::uint32_t order_;
  std::vector<Rat> coeffs_;
};

// Integer coefficients of the cyclotomic polynomial Phi_n, constant term
// first. Cached per n.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);

std::uint32_t euler_phi(std::uint32_t n);

// Sum over x in F_p^x of legendre(x) zeta_p^x; its square is (-1)^((p-1)/2) p.
Cyc gauss_sqrt_qstar(std::uint32_t p);

std::string rat_to_string(const Rat& r);

}  // namespace redchar

#endif  // REDCHAR_CYCLO_H_
