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


#include <gtest/gtest.h>

#include <set>

#include "redchar/ff.h"

namespace redchar {
namespace {

TEST(Field, Legendre) {
  EXPECT_EQ(field(3)->legendre(2), -1);
  EXPECT_EQ(field(7)->legendre(4), 1);
  EXPECT_EQ(field(5)->nonsquare(), 2u);
  EXPECT_EQ(field(5)->pow(2, 2), 4u);
  EXPECT_THROW(field(5)->legendre(0), std::exception);
}

TEST(Field, Characters) {
  const auto f = field(5);
  EXPECT_EQ(f->eval(f->epsilon(), 2), Cyc(-1));
  for (std::uint32_t x = 1; x < 5; ++x) {
    EXPECT_EQ(f->eval(MultChar{}, x), Cyc(1));
  }
  const auto f7 = field(7);
  EXPECT_EQ(f7->generator(), 3u);
  EXPECT_EQ(f7->eval(MultChar{CharDomain::kFq, 2}, 3),
            Cyc::root_of_unity(3, 1));
}

TEST(Field, NormOneRestriction) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const auto f = field(q);
    const MultChar theta{CharDomain::kFq2, q - 1};  // order q+1
    EXPECT_EQ(f->restrict_to_base(theta), (MultChar{CharDomain::kFq, 0}));
    EXPECT_EQ(f->restrict_to_base(MultChar{CharDomain::kFq2, 0}),
              (MultChar{CharDomain::kFq, 0}));
    for (const auto& t : f->list_chars(CharDomain::kFq2)) {
      EXPECT_EQ(f->frobenius_twist(f->frobenius_twist(t)), t);
    }
  }
}

class FieldProperty : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldProperty, Arithmetic) {
  const std::uint32_t q = GetParam();
  const auto f = field(q);
  std::set<std::uint32_t> powers;
  for (std::uint32_t k = 0; k + 1 < q; ++k) powers.insert(f->exp(k));
  EXPECT_EQ(powers.size(), q - 1);
  for (std::uint32_t x = 1; x < q; ++x) {
    EXPECT_EQ(f->mul(x, f->inv(x)), 1u);
    EXPECT_EQ(f->exp(f->log(x)), x);
    EXPECT_EQ(f->legendre(x) == 1, f->sqrt(x).has_value());
  }
  std::set<std::uint32_t> n2;
  for (std::uint32_t k = 0; k < q * q - 1; ++k) {
    const Fq2Elem z = f->exp2(k);
    EXPECT_EQ(f->log2(z), k);
    EXPECT_EQ(f->mul2(z, f->inv2(z)), f->e2(1));
    EXPECT_EQ(f->norm(z), f->norm(f->frobenius(z)));
    n2.insert(f->index2(z));
  }
  EXPECT_EQ(n2.size(), q * q - 1);
}

TEST_P(FieldProperty, CharacterOrthogonality) {
  const std::uint32_t q = GetParam();
  const auto f = field(q);
  const auto chars = f->list_chars(CharDomain::kFq);
  EXPECT_EQ(chars.size(), q - 1);
  for (const auto& a : chars) {
    for (const auto& b : chars) {
      Cyc s;
      for (std::uint32_t x = 1; x < q; ++x) {
        s += f->eval(a, x) * f->eval(b, x).conj();
      }
      EXPECT_EQ(s, a == b ? Cyc(static_cast<long>(q - 1)) : Cyc());
    }
    const MultChar ab = f->mul_chars(a, f->inverse_char(a));
    EXPECT_EQ(ab.exponent, 0u);
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, FieldProperty,
                         ::testing::Values(3u, 5u, 7u, 11u, 13u));

TEST(Field, OddPrime) {
  EXPECT_TRUE(is_odd_prime(3));
  EXPECT_TRUE(is_odd_prime(13));
  EXPECT_FALSE(is_odd_prime(2));
  EXPECT_FALSE(is_odd_prime(9));
  EXPECT_FALSE(is_odd_prime(1));
}

}  // namespace
}  // namespace redchar
