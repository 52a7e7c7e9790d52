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

#include "redchar/ff.h"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace redchar {
namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    std::int64_t quo = r / nr;
    std::int64_t tmp = t - quo * nt;
    t = nt;
    nt = tmp;
    tmp = r - quo * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::logic_error("not invertible");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(t);
}

}  // namespace

std::string to_string(CharDomain d) {
  switch (d) {
    case CharDomain::kFq:
      return "Fq*";
    case CharDomain::kFq2:
      return "Fq2*";
    case CharDomain::kFq2NormOne:
      return "Fq2^1";
  }
  return "?";
}

bool is_odd_prime(std::uint32_t q) {
  if (q < 3 || q % 2 == 0) return false;
  for (std::uint32_t d = 3; d * d <= q; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t q) : q_(q) {
  if (!is_odd_prime(q)) {
    throw std::invalid_argument("q must be an odd prime, got " +
                                std::to_string(q));
  }
  inv_.assign(q, 0);
  for (std::uint32_t x = 1; x < q; ++x) {
    for (std::uint32_t y = 1; y < q; ++y) {
      if (mul(x, y) == 1) {
        inv_[x] = y;
        break;
      }
    }
  }
  delta_ = 0;
  for (std::uint32_t x = 2; x < q; ++x) {
    if (pow(x, (q - 1) / 2) == q - 1) {
      delta_ = x;
      break;
    }
  }
  auto factors = prime_factors(q - 1);
  g0_ = 0;
  for (std::uint32_t x = 2; x < q; ++x) {
    bool ok = true;
    for (auto r : factors) {
      if (pow(x, (q - 1) / r) == 1) ok = false;
    }
    if (ok) {
      g0_ = x;
      break;
    }
  }
  exp_.assign(q - 1, 0);
  log_.assign(q, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    exp_[k] = cur;
    log_[cur] = k;
    cur = mul(cur, g0_);
  }

  const std::uint64_t m2 = static_cast<std::uint64_t>(q) * q - 1;
  auto factors2 = prime_factors(m2);
  bool found = false;
  for (std::uint32_t idx = 1; idx < q * q && !found; ++idx) {
    Fq2Elem x{idx % q, idx / q};
    bool ok = true;
    for (auto r : factors2) {
      if (pow2(x, m2 / r) == Fq2Elem{1, 0}) ok = false;
    }
    if (ok) {
      G_ = x;
      found = true;
    }
  }
  exp2_.assign(m2, Fq2Elem{});
  log2_.assign(static_cast<std::size_t>(q) * q, 0);
  Fq2Elem c{1, 0};
  for (std::uint64_t k = 0; k < m2; ++k) {
    exp2_[k] = c;
    log2_[index2(c)] = static_cast<std::uint32_t>(k);
    c = mul2(c, G_);
  }
  std::uint32_t l = log2_[index2({g0_, 0})];
  base_in_ext_ = l / (q + 1);
}

std::uint32_t Field::inv(std::uint32_t x) const {
  if (x % q_ == 0) throw std::domain_error("inverse of zero in F_q");
  return inv_[x % q_];
}

std::uint32_t Field::pow(std::uint32_t x, std::uint64_t e) const {
  std::uint32_t r = 1;
  std::uint32_t b = x % q_;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return static_cast<std::uint32_t>(r);
}

std::int64_t Field::signed_value(std::uint32_t x) const {
  return x > q_ / 2 ? static_cast<std::int64_t>(x) - q_ : x;
}

int Field::legendre(std::uint32_t x) const {
  if (x % q_ == 0) throw std::domain_error("legendre symbol of zero");
  return log_[x % q_] % 2 == 0 ? 1 : -1;
}

std::optional<std::uint32_t> Field::sqrt(std::uint32_t x) const {
  x %= q_;
  if (x == 0) return 0u;
  std::uint32_t l = log_[x];
  if (l % 2 != 0) return std::nullopt;
  std::uint32_t r = exp_[l / 2];
  return std::min(r, neg(r));
}

std::uint32_t Field::log(std::uint32_t x) const {
  if (x % q_ == 0) throw std::domain_error("log of zero");
  return log_[x % q_];
}

Fq2Elem Field::add2(Fq2Elem x, Fq2Elem y) const {
  return {add(x.a, y.a), add(x.b, y.b)};
}

Fq2Elem Field::sub2(Fq2Elem x, Fq2Elem y) const {
  return {sub(x.a, y.a), sub(x.b, y.b)};
}

Fq2Elem Field::mul2(Fq2Elem x, Fq2Elem y) const {
  return {add(mul(x.a, y.a), mul(delta_, mul(x.b, y.b))),
          add(mul(x.a, y.b), mul(x.b, y.a))};
}

std::uint32_t Field::norm(Fq2Elem x) const {
  return sub(mul(x.a, x.a), mul(delta_, mul(x.b, x.b)));
}

Fq2Elem Field::inv2(Fq2Elem x) const {
  std::uint32_t n = norm(x);
  if (n == 0) throw std::domain_error("inverse of zero in F_q2");
  std::uint32_t ni = inv(n);
  Fq2Elem c = frobenius(x);
  return {mul(c.a, ni), mul(c.b, ni)};
}

Fq2Elem Field::pow2(Fq2Elem x, std::uint64_t e) const {
  Fq2Elem r{1, 0};
  while (e > 0) {
    if (e & 1) r = mul2(r, x);
    x = mul2(x, x);
    e >>= 1;
  }
  return r;
}

std::uint32_t Field::log2(Fq2Elem x) const {
  if (x.a == 0 && x.b == 0) throw std::domain_error("log of zero in F_q2");
  return log2_[index2(x)];
}

std::string Field::format2(Fq2Elem x) const {
  std::ostringstream os;
  if (x.b == 0) {
    os << signed_value(x.a);
    return os.str();
  }
  if (x.a != 0) os << signed_value(x.a) << "+";
  std::int64_t b = signed_value(x.b);
  if (b == -1) {
    os << "-";
  } else if (b != 1) {
    os << b << "*";
  }
  os << "d";
  return os.str();
}

std::uint32_t Field::domain_order(CharDomain d) const {
  switch (d) {
    case CharDomain::kFq:
      return q_ - 1;
    case CharDomain::kFq2:
      return q_ * q_ - 1;
    case CharDomain::kFq2NormOne:
      return q_ + 1;
  }
  return 0;
}

Cyc Field::eval(const MultChar& chi, std::uint32_t x) const {
  if (chi.domain == CharDomain::kFq) {
    return Cyc::root_of_unity(q_ - 1, static_cast<std::int64_t>(chi.exponent) *
                                          log(x));
  }
  return eval(chi, Fq2Elem{x % q_, 0});
}

Cyc Field::eval(const MultChar& chi, Fq2Elem z) const {
  switch (chi.domain) {
    case CharDomain::kFq:
      if (z.b != 0) throw std::domain_error("element outside F_q");
      return eval(chi, z.a);
    case CharDomain::kFq2:
      return Cyc::root_of_unity(q_ * q_ - 1,
                                static_cast<std::int64_t>(chi.exponent) *
                                    log2(z));
    case CharDomain::kFq2NormOne: {
      if (norm(z) != 1) throw std::domain_error("element outside F_q2^1");
      std::uint32_t j = log2(z) / (q_ - 1);
      return Cyc::root_of_unity(q_ + 1,
                                static_cast<std::int64_t>(chi.exponent) * j);
    }
  }
  return Cyc();
}

std::vector<MultChar> Field::list_chars(CharDomain d) const {
  std::vector<MultChar> out;
  for (std::uint32_t k = 0; k < domain_order(d); ++k) out.push_back({d, k});
  return out;
}

MultChar Field::restrict_to_base(const MultChar& theta) const {
  if (theta.domain != CharDomain::kFq2) {
    throw std::invalid_argument("restriction needs a character of F_q2^x");
  }
  std::uint64_t e = static_cast<std::uint64_t>(theta.exponent) * base_in_ext_;
  return {CharDomain::kFq, static_cast<std::uint32_t>(e % (q_ - 1))};
}

MultChar Field::restrict_to_norm_one(const MultChar& theta) const {
  if (theta.domain != CharDomain::kFq2) {
    throw std::invalid_argument("restriction needs a character of F_q2^x");
  }
  return {CharDomain::kFq2NormOne, theta.exponent % (q_ + 1)};
}

MultChar Field::frobenius_twist(const MultChar& theta) const {
  if (theta.domain == CharDomain::kFq) return theta;
  std::uint32_t m = domain_order(theta.domain);
  return {theta.domain, static_cast<std::uint32_t>(
                            static_cast<std::uint64_t>(theta.exponent) * q_ % m)};
}

MultChar Field::norm_pullback(const MultChar& lambda) const {
  if (lambda.domain != CharDomain::kFq) {
    throw std::invalid_argument("norm pullback needs a character of F_q^x");
  }
  std::uint32_t s = mod_inverse(base_in_ext_, q_ - 1);
  std::uint64_t e = static_cast<std::uint64_t>(lambda.exponent) * s % (q_ - 1);
  return {CharDomain::kFq2, static_cast<std::uint32_t>(e * (q_ + 1))};
}

MultChar Field::mul_chars(const MultChar& a, const MultChar& b) const {
  if (a.domain != b.domain) throw std::invalid_argument("domain mismatch");
  return {a.domain, (a.exponent + b.exponent) % domain_order(a.domain)};
}

MultChar Field::inverse_char(const MultChar& a) const {
  std::uint32_t m = domain_order(a.domain);
  return {a.domain, (m - a.exponent % m) % m};
}

std::uint32_t Field::char_order(const MultChar& a) const {
  std::uint32_t m = domain_order(a.domain);
  return m / std::gcd(m, a.exponent % m);
}

std::shared_ptr<const Field> field(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const Field>(q);
  cache.emplace(q, f);
  return f;
}

}  // namespace redchar
