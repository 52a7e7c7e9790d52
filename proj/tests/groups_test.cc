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

#include "redchar/classes.h"
#include "redchar/error.h"
#include "redchar/groups.h"

namespace redchar {
namespace {

TEST(SO4Group, Orders) {
  EXPECT_EQ(SO4Group(3).order(), 576u);
  EXPECT_EQ(SO4Group(5).order(), 14400u);
  for (std::uint32_t q : {3u, 5u, 7u}) {
    EXPECT_EQ(SO4Group::expected_order(q),
              std::uint64_t{q} * q * (q - 1) * (q - 1) * (q + 1) * (q + 1));
  }
  EXPECT_THROW(SO4Group(11), BudgetError);
}

TEST(SO4Group, Gl2Orders) {
  Gl2Group gl(5, Gl2Group::Kind::kGL);
  Gl2Group sl(5, Gl2Group::Kind::kSL);
  EXPECT_EQ(gl.order(), 480u);
  EXPECT_EQ(sl.order(), 120u);
  EXPECT_EQ(gl.closure_size(gl.generators()), 480u);
  EXPECT_EQ(sl.closure_size(sl.generators()), 120u);
}

TEST(SO4Group, WidetildeDet) {
  SO4Group g(5);
  const Field& f = g.field();
  const std::uint32_t d = f.nonsquare();
  EXPECT_EQ(g.widetilde_det(g.identity()), 1);
  EXPECT_EQ(g.widetilde_det(g.id_of(mat_diag(d, 1), mat_diag(d, 1))), -1);
  // Rescaling by (c, c) multiplies det by c^2.
  const SO4Elem a = so4_canonical(f, mat(f, 2, 1, 0, 1), mat(f, 1, 1, 0, 2));
  EXPECT_EQ(mat_det(f, a.g), mat_det(f, a.h));
  EXPECT_EQ(g.widetilde_det(g.id(a)),
            f.legendre(mat_det(f, mat(f, 2, 1, 0, 1))));
}

TEST(SO4Group, AdjointConjugationFusesGammaPair) {
  SO4Group g(3);
  const Field& f = g.field();
  const std::uint32_t d = f.nonsquare();
  const ElemId x = g.id_of(mat(f, 1, 1, 0, 1), mat(f, 1, 1, 0, 1));
  EXPECT_EQ(g.adjoint_conj(x, mat_identity(), mat_identity()), x);
  const ElemId y = g.adjoint_conj(x, mat_identity(), mat_diag(d, 1));
  EXPECT_EQ(classify(f, g.elem(x)).name, "c2(1)xc2(1,1)");
  EXPECT_EQ(classify(f, g.elem(y)).name, "c2(1)xc2(1,D)");
  EXPECT_EQ(g.widetilde_det(y), g.widetilde_det(x));
}

class GroupProperty : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(GroupProperty, GroupAxioms) {
  SO4Group g(GetParam());
  const Field& f = g.field();
  const std::size_t n = g.order();
  EXPECT_EQ(g.closure_size(g.generators()), n);
  for (ElemId x = 0; x < n; x += 7) {
    EXPECT_EQ(g.mul(x, g.inv(x)), g.identity());
    EXPECT_EQ(g.mul(g.identity(), x), x);
    const ElemId y = static_cast<ElemId>((x * 31 + 5) % n);
    const ElemId z = static_cast<ElemId>((x * 17 + 3) % n);
    EXPECT_EQ(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
    EXPECT_EQ(g.id(g.elem(x)), x);
    EXPECT_EQ(SO4Elem::unpack(g.elem(x).pack()), g.elem(x));
    // Conjugation by GL2 x GL2 preserves the twisted determinant.
    const ElemId c =
        g.adjoint_conj(x, mat_diag(f.nonsquare(), 1), mat(f, 1, 1, 0, 1));
    EXPECT_EQ(g.widetilde_det(c), g.widetilde_det(x));
  }
}

TEST_P(GroupProperty, SubgroupOrders) {
  const std::uint64_t q = GetParam();
  SO4Group g(static_cast<std::uint32_t>(q));
  auto order = [&](SO4Subgroup s) { return so4_subgroup(g, s).order(); };
  EXPECT_EQ(order(SO4Subgroup::kBorel), q * q * (q - 1) * (q - 1));
  EXPECT_EQ(order(SO4Subgroup::kTorus), (q - 1) * (q - 1));
  EXPECT_EQ(order(SO4Subgroup::kUnipotent), q * q);
  EXPECT_EQ(order(SO4Subgroup::kParabolic),
            q * q * (q - 1) * (q * q - 1));
  EXPECT_EQ(order(SO4Subgroup::kMirrorParabolic),
            q * q * (q - 1) * (q * q - 1));
  EXPECT_EQ(order(SO4Subgroup::kSl2xSl2), g.order() / 2);
  EXPECT_EQ(order(SO4Subgroup::kTorusA1), q * q - 1);
  EXPECT_EQ(order(SO4Subgroup::kTorusA1Tilde), q * q - 1);
  EXPECT_EQ(order(SO4Subgroup::kTorusA1xA1Tilde), (q + 1) * (q + 1));
}

INSTANTIATE_TEST_SUITE_P(Small, GroupProperty, ::testing::Values(3u, 5u));

}  // namespace
}  // namespace redchar
