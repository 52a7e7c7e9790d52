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

#include "redchar/dl.h"
#include "redchar/stability.h"

namespace redchar {
namespace {

std::vector<std::string> names(const std::vector<ClassLabel>& v) {
  std::vector<std::string> r;
  for (const auto& c : v) r.push_back(c.name);
  return r;
}

TEST(Fusion, UnipotentOrbits) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    for (int gens : {0, 1}) {
      const FusionPartition p = fuse(q, Locus::kUnipotent, gens);
      ASSERT_EQ(p.orbits.size(), 4u);
      EXPECT_EQ(names(p.orbits[0]),
                (std::vector<std::string>{"c1(1)xc1(1)"}));
      EXPECT_EQ(names(p.orbits[1]),
                (std::vector<std::string>{"c1(1)xc2(1)"}));
      EXPECT_EQ(names(p.orbits[2]),
                (std::vector<std::string>{"c2(1)xc1(1)"}));
      EXPECT_EQ(names(p.orbits[3]),
                (std::vector<std::string>{"c2(1)xc2(1,1)", "c2(1)xc2(1,D)"}));
    }
  }
}

TEST(Fusion, SUnipotentLocusHasSameShape) {
  const FusionPartition p = fuse(5, Locus::kSUnipotent);
  EXPECT_EQ(p.orbits.size(), 4u);
  EXPECT_EQ(locus_classes(5, Locus::kSUnipotent).size(), 5u);
}

TEST(Stability, ZeroProfileIsStable) {
  const FusionPartition p = fuse(3, Locus::kUnipotent);
  UnipotentProfile z = g_sgn(3);
  z *= Cyc(0);
  EXPECT_TRUE(is_stable(locus_profile(z), p).stable);
}

class StabilityTest : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(StabilityTest, GSgnIsUnstable) {
  const std::uint32_t q = GetParam();
  const StabilityResult r =
      is_stable(locus_profile(g_sgn(q)), fuse(q, Locus::kUnipotent));
  EXPECT_FALSE(r.stable);
  ASSERT_TRUE(r.orbit.has_value());
  EXPECT_EQ(*r.orbit, 3u);
  EXPECT_EQ(r.class_a, "c2(1)xc2(1,1)");
  EXPECT_EQ(r.class_b, "c2(1)xc2(1,D)");
  EXPECT_EQ(r.value_a, Cyc(1));
  EXPECT_EQ(r.value_b, Cyc(-1));
}

TEST_P(StabilityTest, GreenFunctionsAreStable) {
  const std::uint32_t q = GetParam();
  const FusionPartition p = fuse(q, Locus::kUnipotent);
  for (auto w : torus_types()) {
    EXPECT_TRUE(is_stable(locus_profile(green(q, w)), p).stable)
        << to_string(w);
  }
}

TEST_P(StabilityTest, PacketScanUnipotent) {
  const PacketScan s = packet_scan_2x2(GetParam(), Locus::kUnipotent);
  ASSERT_EQ(s.results.size(), 4u);
  EXPECT_EQ(s.num_stable(), 2u);
  for (const auto& r : s.results) {
    const auto& c = r.candidate;
    EXPECT_EQ(r.result.stable, c.s_princ != c.s_cusp);
    EXPECT_TRUE(r.profile_formula_ok);
    Rat half(c.s_princ + c.s_cusp, 2);
    half.canonicalize();
    EXPECT_EQ(c.g_sgn_coefficient(), half);
    if (!r.result.stable) {
      EXPECT_EQ(r.result.class_a, "c2(1)xc2(1,1)");
      EXPECT_EQ(r.result.class_b, "c2(1)xc2(1,D)");
    }
  }
}

TEST_P(StabilityTest, PacketScanSUnipotent) {
  const PacketScan s = packet_scan_2x2(GetParam(), Locus::kSUnipotent);
  EXPECT_EQ(s.num_stable(), 2u);
  for (const auto& r : s.results) {
    EXPECT_EQ(r.result.stable, r.candidate.s_princ == r.candidate.s_cusp);
  }
}

INSTANTIATE_TEST_SUITE_P(Small, StabilityTest, ::testing::Values(3u, 5u, 7u));

TEST(Stability, LocusNames) {
  EXPECT_EQ(to_string(Locus::kUnipotent), "unipotent");
  EXPECT_EQ(to_string(Locus::kSUnipotent), "s_times_unipotent");
}

}  // namespace
}  // namespace redchar
