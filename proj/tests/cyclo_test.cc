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

#include <random>

#include "redchar/cyclo.h"

namespace redchar {
namespace {

Cyc z(std::uint32_t n, std::int64_t k) { return Cyc::root_of_unity(n, k); }

TEST(Cyc, RootsOfUnity) {
  EXPECT_EQ(z(4, 2), Cyc(-1));
  EXPECT_EQ(z(1, 0), Cyc(1));
  EXPECT_EQ(z(3, 1) + z(3, 2), Cyc(-1));
  EXPECT_EQ(z(5, 1).conj(), z(5, 4));
  EXPECT_EQ(z(6, 1), -z(3, 2));
  EXPECT_EQ(z(12, 4), z(3, 1));
  EXPECT_EQ(z(8, -1), z(8, 7));
}

TEST(Cyc, SquareOfDifference) {
  const Cyc d = z(3, 1) - z(3, 2);
  EXPECT_EQ(d * d, Cyc(-3));
}

TEST(Cyc, GaussSum) {
  const Cyc g3 = gauss_sqrt_qstar(3);
  EXPECT_EQ(g3, z(3, 1) - z(3, 2));
  EXPECT_EQ(g3 * g3, Cyc(-3));
  EXPECT_EQ(gauss_sqrt_qstar(5) * gauss_sqrt_qstar(5), Cyc(5));
  EXPECT_EQ(gauss_sqrt_qstar(7) * gauss_sqrt_qstar(7), Cyc(-7));
  EXPECT_EQ(gauss_sqrt_qstar(13) * gauss_sqrt_qstar(13), Cyc(13));
}

TEST(Cyc, RationalRoundTrip) {
  const Cyc h = Cyc(Rat(1, 2));
  EXPECT_TRUE(h.is_rational());
  EXPECT_EQ(h.rational(), Rat(1, 2));
  EXPECT_FALSE(z(3, 1).is_rational());
  EXPECT_THROW(z(3, 1).rational(), std::domain_error);
  EXPECT_EQ((z(7, 2) * Rat(3)) / Rat(3), z(7, 2));
}

TEST(Cyc, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(euler_phi(24), 8u);
  EXPECT_EQ(euler_phi(13), 12u);
}

TEST(Cyc, ToStringHasNoCommas) {
  const Cyc c = Cyc(Rat(1, 2)) + z(8, 2) * Rat(3);
  EXPECT_EQ(c.to_string().find(','), std::string::npos);
  EXPECT_EQ(Cyc(-3).to_string(), "-3");
}

// Field axioms on random elements of Q(zeta_n) for a few n.
class CycProperty : public ::testing::TestWithParam<std::uint32_t> {};

Cyc random_cyc(std::mt19937& rng, std::uint32_t n) {
  std::uniform_int_distribution<int> d(-4, 4);
  Cyc c;
  for (std::uint32_t k = 0; k < n; ++k) {
    c += z(n, k) * Rat(d(rng), 1 + (d(rng) + 4) % 3);
  }
  return c;
}

TEST_P(CycProperty, RingAxioms) {
  const std::uint32_t n = GetParam();
  std::mt19937 rng(n);
  for (int it = 0; it < 40; ++it) {
    const Cyc a = random_cyc(rng, n);
    const Cyc b = random_cyc(rng, n);
    const Cyc c = random_cyc(rng, 2 * n);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, Cyc());
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ(a.lifted(3 * a.order()), a);
    const auto v = (a * b).to_complex();
    const auto w = a.to_complex() * b.to_complex();
    EXPECT_NEAR(v.real(), w.real(), 1e-9);
    EXPECT_NEAR(v.imag(), w.imag(), 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, CycProperty,
                         ::testing::Values(3u, 4u, 8u, 9u, 12u, 15u));

}  // namespace
}  // namespace redchar
