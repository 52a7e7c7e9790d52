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

#include "redchar/cyclo.h"

#include <array>
#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace redchar {
namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;

struct CycloContext {
  std::uint32_t n = 0;
  std::uint32_t phi = 0;
  std::vector<std::int64_t> poly;
  // Row k holds x^k mod Phi_n for k in [0, n).
  std::vector<std::int64_t> powers;

  const std::int64_t* power(std::uint32_t k) const {
    return powers.data() + static_cast<std::size_t>(k % n) * phi;
  }
};

std::int64_t checked_mul_add(std::int64_t acc, std::int64_t a,
                             std::int64_t b) {
  std::int64_t prod;
  if (__builtin_mul_overflow(a, b, &prod) ||
      __builtin_add_overflow(acc, prod, &acc)) {
    throw std::overflow_error("cyclotomic polynomial coefficient overflow");
  }
  return acc;
}

std::vector<std::int64_t> compute_phi_poly(std::uint32_t n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    std::size_t dd = den.size() - 1;
    std::size_t nd = num.size() - 1;
    std::vector<std::int64_t> quo(nd - dd + 1, 0);
    for (std::size_t i = nd + 1; i-- > dd;) {
      std::int64_t c = num[i];  // den is monic
      quo[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) {
        num[i - dd + j] = checked_mul_add(num[i - dd + j], -c, den[j]);
      }
    }
    for (std::size_t i = 0; i < dd; ++i) {
      if (num[i] != 0) throw std::logic_error("inexact cyclotomic division");
    }
    num = std::move(quo);
  }
  return num;
}

std::array<std::atomic<CycloContext*>, kMaxOrder>& context_slots() {
  static std::array<std::atomic<CycloContext*>, kMaxOrder> slots{};
  return slots;
}

std::mutex& context_mutex() {
  static std::mutex m;
  return m;
}

std::unique_ptr<CycloContext> build_context(std::uint32_t n);

const CycloContext& context(std::uint32_t n) {
  if (n == 0 || n >= kMaxOrder) {
    throw std::out_of_range("cyclotomic order out of supported range");
  }
  auto& slot = context_slots()[n];
  if (CycloContext* c = slot.load(std::memory_order_acquire)) return *c;
  std::unique_ptr<CycloContext> fresh = build_context(n);
  std::lock_guard<std::mutex> lock(context_mutex());
  if (CycloContext* c = slot.load(std::memory_order_acquire)) return *c;
  CycloContext* raw = fresh.release();  // lives for the process
  slot.store(raw, std::memory_order_release);
  return *raw;
}

std::unique_ptr<CycloContext> build_context(std::uint32_t n) {
  auto c = std::make_unique<CycloContext>();
  c->n = n;
  c->poly = cyclotomic_polynomial(n);
  c->phi = static_cast<std::uint32_t>(c->poly.size() - 1);
  const std::uint32_t phi = c->phi;
  c->powers.assign(static_cast<std::size_t>(n) * phi, 0);
  std::vector<std::int64_t> cur(phi, 0);
  if (phi > 0) cur[0] = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    std::copy(cur.begin(), cur.end(),
              c->powers.begin() + static_cast<std::size_t>(k) * phi);
    // multiply by x
    std::int64_t top = cur[phi - 1];
    for (std::uint32_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::uint32_t i = 0; i < phi; ++i) {
        cur[i] = checked_mul_add(cur[i], -top, c->poly[i]);
      }
    }
  }
  return c;
}

std::uint32_t lcm32(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(std::lcm<std::uint64_t, std::uint64_t>(a, b));
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0 || n >= kMaxOrder) {
    throw std::out_of_range("cyclotomic order out of supported range");
  }
  static std::mutex m;
  static std::vector<std::unique_ptr<std::vector<std::int64_t>>> cache(
      kMaxOrder);
  {
    std::lock_guard<std::mutex> lock(m);
    if (cache[n]) return *cache[n];
  }
  std::vector<std::int64_t> p;
  if (n == 1) {
    p = {-1, 1};
  } else {
    p = compute_phi_poly(n);
  }
  std::lock_guard<std::mutex> lock(m);
  if (!cache[n]) {
    cache[n] = std::make_unique<std::vector<std::int64_t>>(std::move(p));
  }
  return *cache[n];
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {
// GMP arithmetic assumes canonical operands.
Rat canonical(Rat r) {
  r.canonicalize();
  return r;
}
}  // namespace

Cyc::Cyc() : order_(1), coeffs_(1) {}
Cyc::Cyc(long v) : order_(1), coeffs_{Rat(v)} {}
Cyc::Cyc(const Rat& v) : order_(1), coeffs_{canonical(v)} {}
Cyc::Cyc(std::uint32_t order, std::vector<Rat> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  drop_to_rational_if_possible();
}

void Cyc::drop_to_rational_if_possible() {
  if (order_ == 1) return;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return;
  }
  Rat c = coeffs_[0];
  order_ = 1;
  coeffs_.assign(1, c);
}

Cyc Cyc::root_of_unity(std::uint32_t n, std::int64_t k) {
  if (n == 0) throw std::invalid_argument("root_of_unity: n must be >= 1");
  std::int64_t kk = k % static_cast<std::int64_t>(n);
  if (kk < 0) kk += n;
  std::uint32_t e = static_cast<std::uint32_t>(kk);
  std::uint32_t g = std::gcd(n, e);
  std::uint32_t m = n / g;
  e /= g;
  bool negate = false;
  if (m % 4 == 2) {
    std::uint32_t half = m / 2;
    negate = (e % 2) == 1;
    e = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(e) * ((half + 1) / 2)) % half);
    m = half;
  }
  if (m == 1) return Cyc(negate ? -1L : 1L);
  const CycloContext& c = context(m);
  const std::int64_t* row = c.power(e);
  std::vector<Rat> coeffs(c.phi);
  for (std::uint32_t i = 0; i < c.phi; ++i) {
    coeffs[i] = negate ? -row[i] : row[i];
  }
  return Cyc(m, std::move(coeffs));
}

Cyc Cyc::from_power_basis(std::uint32_t n, std::vector<Rat> coeffs) {
  if (n == 0 || n % 4 == 2) throw std::invalid_argument("unsupported order");
  if (coeffs.size() != context(n).phi) {
    throw std::invalid_argument("coefficient count differs from phi(n)");
  }
  return Cyc(n, std::move(coeffs));
}

Cyc Cyc::lifted(std::uint32_t n) const {
  if (n == order_) return *this;
  if (n % order_ != 0) throw std::invalid_argument("lift to non-multiple");
  if (n % 4 == 2) throw std::invalid_argument("order 2 mod 4 not stored");
  const CycloContext& c = context(n);
  std::vector<Rat> out(c.phi);
  std::uint32_t step = n / order_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const std::int64_t* row = c.power(static_cast<std::uint32_t>(i) * step);
    for (std::uint32_t j = 0; j < c.phi; ++j) {
      if (row[j] != 0) out[j] += coeffs_[i] * row[j];
    }
  }
  Cyc r;
  r.order_ = n;
  r.coeffs_ = std::move(out);
  return r;
}

bool Cyc::is_zero() const { return order_ == 1 && sgn(coeffs_[0]) == 0; }
bool Cyc::is_rational() const { return order_ == 1; }

Rat Cyc::rational() const {
  if (order_ != 1) throw std::domain_error("cyclotomic value is irrational");
  return coeffs_[0];
}

Cyc Cyc::conj() const {
  if (order_ == 1) return *this;
  const CycloContext& c = context(order_);
  std::vector<Rat> out(c.phi);
  for (std::uint32_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const std::int64_t* row = c.power((order_ - i) % order_);
    for (std::uint32_t j = 0; j < c.phi; ++j) {
      if (row[j] != 0) out[j] += coeffs_[i] * row[j];
    }
  }
  return Cyc(order_, std::move(out));
}

std::complex<double> Cyc::to_complex() const {
  std::complex<double> acc = 0;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    double angle = two_pi * static_cast<double>(i) / order_;
    acc += coeffs_[i].get_d() * std::complex<double>(std::cos(angle),
                                                     std::sin(angle));
  }
  return acc;
}

std::string rat_to_string(const Rat& r) {
  return r.get_str();
}

std::string Cyc::to_string() const {
  if (order_ == 1) return rat_to_string(coeffs_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << rat_to_string(mag);
      continue;
    }
    if (mag != 1) os << rat_to_string(mag) << "*";
    os << "z" << order_;
    if (i != 1) os << "^" << i;
  }
  return os.str();
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (o.order_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    drop_to_rational_if_possible();
    return *this;
  }
  std::uint32_t n = lcm32(order_, o.order_);
  if (order_ != n) *this = lifted(n);
  if (o.order_ == n) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else {
    Cyc l = o.lifted(n);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += l.coeffs_[i];
  }
  drop_to_rational_if_possible();
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc& Cyc::operator*=(const Rat& r0) {
  const Rat r = canonical(r0);
  if (sgn(r) == 0) {
    *this = Cyc();
    return *this;
  }
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyc& Cyc::operator/=(const Rat& r0) {
  const Rat r = canonical(r0);
  if (sgn(r) == 0) throw std::domain_error("division by zero");
  for (auto& c : coeffs_) c /= r;
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  if (o.order_ == 1) return *this *= o.coeffs_[0];
  if (order_ == 1) {
    Rat r = coeffs_[0];
    *this = o;
    return *this *= r;
  }
  std::uint32_t n = lcm32(order_, o.order_);
  Cyc a = order_ == n ? std::move(*this) : lifted(n);
  const Cyc& b = o.order_ == n ? o : o.lifted(n);
  const CycloContext& c = context(n);
  const std::uint32_t phi = c.phi;
  std::vector<Rat> prod(2 * phi - 1);
  Rat t;
  for (std::uint32_t i = 0; i < phi; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::uint32_t j = 0; j < phi; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      mpq_mul(t.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      prod[i + j] += t;
    }
  }
  for (std::uint32_t k = phi; k < prod.size(); ++k) {
    if (sgn(prod[k]) == 0) continue;
    const std::int64_t* row = c.power(k);
    for (std::uint32_t j = 0; j < phi; ++j) {
      if (row[j] != 0) prod[j] += prod[k] * row[j];
    }
  }
  prod.resize(phi);
  *this = Cyc(n, std::move(prod));
  return *this;
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  std::uint32_t n = lcm32(a.order_, b.order_);
  return a.lifted(n).coeffs_ == b.lifted(n).coeffs_;
}

Cyc gauss_sqrt_qstar(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be odd prime");
  for (std::uint32_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) throw std::invalid_argument("p must be odd prime");
  }
  std::vector<Rat> coeffs(p - 1);
  // zeta_p^x for x < p-1 is a basis vector; zeta_p^(p-1) = -(1 + ... ).
  for (std::uint32_t x = 1; x < p; ++x) {
    std::uint64_t pw = 1;
    for (std::uint32_t i = 0; i < (p - 1) / 2; ++i) pw = pw * x % p;
    int leg = pw == 1 ? 1 : -1;
    if (x < p - 1) {
      coeffs[x] += leg;
    } else {
      for (auto& c : coeffs) c -= leg;
    }
  }
  return Cyc::from_power_basis(p, std::move(coeffs));
}

}  // namespace redchar
