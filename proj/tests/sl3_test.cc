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

#include <algorithm>

#include "redchar/error.h"
#include "redchar/sl3.h"

namespace redchar {
namespace {

TEST(Sl3, RequiresCubicQ) {
  EXPECT_THROW(require_cubic(5), PreconditionError);
  EXPECT_THROW(require_cubic(11), PreconditionError);
  EXPECT_NO_THROW(require_cubic(7));
  EXPECT_THROW(triple_scan(5), PreconditionError);
}

TEST(Sl3, MatrixBasics) {
  const Field& f = *field(7);
  const Mat3 u = unitriangular(3, 1, 5);
  EXPECT_EQ(mat3_mul(f, u, mat3_inv(f, u)), mat3_identity());
  EXPECT_EQ(mat3_det(f, u), 1u);
  EXPECT_EQ(mat3_det(f, mat3_diag(2, 3, 4)), 3u);
  EXPECT_TRUE(is_regular_unipotent(f, u));
  EXPECT_FALSE(is_regular_unipotent(f, unitriangular(0, 1)));
  EXPECT_FALSE(is_regular_unipotent(f, mat3_identity()));
}

TEST(Sl3, Labels) {
  const Field& f = *field(7);
  EXPECT_EQ(reg_unip_label(f, unitriangular(1, 1)), 0u);
  EXPECT_EQ(reg_unip_label(f, unitriangular(3, 1)), 1u);
  EXPECT_EQ(reg_unip_label(f, unitriangular(1, 3)), 2u);
  EXPECT_EQ(cube_class(f, 3), 1u);
  EXPECT_EQ(cube_class(f, 6), 0u);  // -1 is a cube
  for (std::uint32_t l = 0; l < 3; ++l) {
    EXPECT_EQ(reg_unip_label(f, reg_unip_rep(f, l)), l);
    EXPECT_EQ(label_of_inverse(f, l), l);
    EXPECT_EQ(label_twist(f, l, 3), (l + 1) % 3);
    EXPECT_EQ(label_twist(f, l, 6), l);
  }
}

TEST(Sl3, PacketValues) {
  const std::uint32_t q = 7;
  const PacketChar st0{PacketChar::Family::kStPrime, 0};
  EXPECT_EQ(eval_reg(q, st0, 0), Cyc(5));
  EXPECT_EQ(eval_reg(q, st0, 1), Cyc(-2));
  for (std::uint32_t l = 0; l < 3; ++l) {
    Cyc s, c;
    for (std::uint32_t j = 0; j < 3; ++j) {
      s += eval_reg(q, {PacketChar::Family::kStPrime, j}, l);
      c += eval_reg(q, {PacketChar::Family::kR2sPrime, j}, l);
    }
    EXPECT_EQ(s, Cyc(1));
  }
}

TEST(Sl3, FrobeniusFormulaOracle) {
  for (std::uint32_t q : {7u, 13u}) {
    const Field& f = *field(q);
    const MultChar zeta{CharDomain::kFq, (q - 1) / 3};
    const MultChar one{CharDomain::kFq, 0};
    const MultChar zinv = f.inverse_char(zeta);
    EXPECT_EQ(induced_borel_value(f, zinv, one, zeta, mat3_identity()),
              Cyc(static_cast<long>((q + 1) * (q * q + q + 1))));
    for (std::uint32_t l = 0; l < 3; ++l) {
      Cyc s;
      for (std::uint32_t j = 0; j < 3; ++j) {
        s += eval_reg(q, {PacketChar::Family::kStPrime, j}, l);
      }
      EXPECT_EQ(induced_borel_value(f, zinv, one, zeta, reg_unip_rep(f, l)),
                s);
    }
  }
}

TEST(Sl3, TripleScan) {
  const std::uint32_t q = 7;
  const TripleScan s = triple_scan(q);
  ASSERT_EQ(s.results.size(), 27u);
  EXPECT_EQ(s.num_passing(), 6u);
  for (const auto& r : s.results) {
    auto e = r.effective;
    std::sort(e.begin(), e.end());
    const bool perm = e == std::array<std::uint32_t, 3>{0, 1, 2};
    EXPECT_EQ(r.constant, perm);
    if (perm) {
      EXPECT_EQ(r.values[0], Cyc(1));
    }
    if (r.effective == std::array<std::uint32_t, 3>{0, 0, 0}) {
      EXPECT_EQ(r.values[0], Cyc(3 * 7 - 6));
      EXPECT_EQ(r.values[1], Cyc(1 - 7));
      EXPECT_EQ(r.values[2], Cyc(1 - 7));
    }
  }
}

TEST(Sl3, FusionAtQ7) {
  const FusionReport r = pgl3_fusion(7);
  EXPECT_EQ(r.orbit_size, 38304u);
  EXPECT_EQ(r.orbit_size, r.expected_orbit_size);
  EXPECT_TRUE(r.distinct);
  EXPECT_TRUE(r.label_constant);
  EXPECT_TRUE(r.twist_cyclic);
  EXPECT_TRUE(r.cube_fixes);
  EXPECT_TRUE(r.gl3_fused);
  EXPECT_TRUE(r.ok());
}

TEST(Sl3, PacketDegrees) {
  const std::uint32_t q = 7;
  std::uint64_t st = 0;
  for (std::uint32_t j = 0; j < 3; ++j) {
    st += degree(q, {PacketChar::Family::kStPrime, j});
  }
  EXPECT_EQ(st, std::uint64_t{(q + 1) * (q * q + q + 1)});
}

}  // namespace
}  // namespace redchar
