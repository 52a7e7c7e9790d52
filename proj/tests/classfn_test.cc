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
#include <map>
#include <memory>

#include "redchar/chartab.h"
#include "redchar/classfn.h"
#include "redchar/groups.h"

namespace redchar {
namespace {

ClassFunction irr(std::uint32_t q, const std::string& name) {
  return character(find_irreducible(q, name));
}

Cyc one_fn(ElemId) { return Cyc(1); }

TEST(InnerProduct, Basics) {
  auto so4 = so4_classes(3);
  const ClassFunction one = ClassFunction::constant(so4->classes, Cyc(1));
  EXPECT_EQ(inner_product(one, one), Cyc(1));
  EXPECT_EQ(inner_product(irr(3, "St_SO4"), one), Cyc(0));
}

TEST(Induce, BorelTrivial) {
  for (std::uint32_t q : {3u, 5u}) {
    auto so4 = so4_classes(q);
    const Subgroup b = so4_subgroup(*so4->group, SO4Subgroup::kBorel);
    const ClassFunction ib = induce(so4->classes, b, one_fn);
    EXPECT_EQ(inner_product(ib, ib), Cyc(4));
    EXPECT_EQ(ib.degree(), Cyc(static_cast<long>((q + 1) * (q + 1))));
    EXPECT_EQ(ib, irr(q, "1_SO4") + irr(q, "1xSt") + irr(q, "Stx1") +
                      irr(q, "St_SO4"));
  }
}

TEST(Induce, BorelSignCharacterDegree) {
  const std::uint32_t q = 3;
  auto so4 = so4_classes(q);
  const SO4Group& g = *so4->group;
  const Field& f = g.field();
  const Subgroup b = so4_subgroup(g, SO4Subgroup::kBorel);
  const ClassFunction ind = induce(so4->classes, b, [&](ElemId x) {
    const Mat2& m = g.elem(x).g;
    return Cyc(f.legendre(f.mul(m.a, m.d)));
  });
  EXPECT_EQ(ind.degree(), Cyc(16));
}

TEST(Induce, FromIndexTwo) {
  const std::uint32_t q = 5;
  auto so4 = so4_classes(q);
  const SO4Group& g = *so4->group;
  const Field& f = g.field();
  const Subgroup s = so4_subgroup(g, SO4Subgroup::kSl2xSl2);
  const IrrSL2 plus{IrrSL2::Kind::kOmegaE, {}, 1};
  const ClassFunction ind = induce(so4->classes, s, [&](ElemId x) {
    const SO4Elem& e = g.elem(x);
    const std::uint32_t a = f.inv(*f.sqrt(mat_det(f, e.g)));
    return sl2_eval(f, plus, mat_scale(f, a, e.g)) *
           sl2_eval(f, plus, mat_scale(f, a, e.h));
  });
  EXPECT_EQ(ind.degree(), Cyc(18));
}

TEST(Invariants, UnipotentRadical) {
  auto so4 = so4_classes(3);
  const SO4Group& g = *so4->group;
  const Subgroup n = so4_subgroup(g, SO4Subgroup::kUnipotent);
  const Subgroup b = so4_subgroup(g, SO4Subgroup::kBorel);
  const ClassFunction one = ClassFunction::constant(so4->classes, Cyc(1));
  EXPECT_EQ(invariants_dim(one, n).value, Rat(1));
  EXPECT_EQ(invariants_dim(induce(so4->classes, b, one_fn), n).value, Rat(4));
  const InvariantsDim w = invariants_dim(irr(3, "omega_princ+"), n);
  EXPECT_TRUE(w.integral);
  EXPECT_EQ(w.value, Rat(2));
}

TEST(Oracle, So4AtQ3) {
  auto so4 = so4_classes(3);
  const OracleTable t = brute_force_irreducibles(so4->classes, 1);
  ASSERT_EQ(t.chars.size(), so4->classes->size());
  Cyc sum;
  std::map<long, int> degrees;
  for (const auto& c : t.chars) {
    sum += c.degree() * c.degree();
    ++degrees[c.degree().rational().get_num().get_si()];
  }
  EXPECT_EQ(sum, Cyc(576));
  EXPECT_EQ(degrees[8], 4);
  // Every evaluator character is an oracle character.
  for (const auto& r : list_irreducibles(3)) {
    const ClassFunction c = character(r);
    EXPECT_TRUE(std::any_of(t.chars.begin(), t.chars.end(),
                            [&](const ClassFunction& o) { return o == c; }))
        << r.name;
  }
  // omega_princ+- are among the degree-8 characters.
  EXPECT_EQ(irr(3, "omega_princ+").degree(), Cyc(8));
  EXPECT_EQ(irr(3, "omega_princ-").degree(), Cyc(8));
}

TEST(Oracle, SeedDoesNotChangeTable) {
  auto so4 = so4_classes(3);
  const OracleTable a = brute_force_irreducibles(so4->classes, 1);
  const OracleTable b = brute_force_irreducibles(so4->classes, 12345);
  ASSERT_EQ(a.chars.size(), b.chars.size());
  for (const auto& c : a.chars) {
    EXPECT_TRUE(std::any_of(b.chars.begin(), b.chars.end(),
                            [&](const ClassFunction& o) { return o == c; }));
  }
}

class Gl2Oracle
    : public ::testing::TestWithParam<std::pair<std::uint32_t, bool>> {};

TEST_P(Gl2Oracle, EvaluatorsMatchOracle) {
  const auto [q, special] = GetParam();
  auto g = std::make_shared<Gl2Group>(
      q, special ? Gl2Group::Kind::kSL : Gl2Group::Kind::kGL);
  auto cs = ClassStructure::of(g);
  const Field& f = g->field();
  const OracleTable t = brute_force_irreducibles(cs, 7);
  std::vector<ClassFunction> ours;
  if (special) {
    for (const auto& r : sl2_irreducibles(f)) {
      ours.push_back(ClassFunction::from_elements(
          cs, [&](ElemId x) { return sl2_eval(f, r, g->elem(x)); }));
    }
  } else {
    for (const auto& r : gl2_irreducibles(f)) {
      ours.push_back(ClassFunction::from_elements(
          cs, [&](ElemId x) { return gl2_eval(f, r, g->elem(x)); }));
    }
  }
  ASSERT_EQ(ours.size(), t.chars.size());
  for (const auto& c : ours) {
    EXPECT_TRUE(std::any_of(t.chars.begin(), t.chars.end(),
                            [&](const ClassFunction& o) { return o == c; }));
  }
}

INSTANTIATE_TEST_SUITE_P(Small, Gl2Oracle,
                         ::testing::Values(std::pair{3u, false},
                                           std::pair{5u, false},
                                           std::pair{3u, true},
                                           std::pair{5u, true},
                                           std::pair{7u, true}));

// <Ind_H f, chi>_G = <f, Res chi>_H for every irreducible chi.
class Reciprocity : public ::testing::TestWithParam<SO4Subgroup> {};

TEST_P(Reciprocity, FrobeniusReciprocity) {
  const std::uint32_t q = 3;
  auto so4 = so4_classes(q);
  const SO4Group& g = *so4->group;
  const Subgroup h = so4_subgroup(g, GetParam());
  const ElemFn det_sign = [&](ElemId x) { return Cyc(g.widetilde_det(x)); };
  const ClassFunction ind = induce(so4->classes, h, det_sign);
  for (const auto& r : list_irreducibles(q)) {
    const ClassFunction chi = character(r);
    const Cyc lhs = inner_product(ind, chi);
    const Cyc rhs = subgroup_inner_product(h, det_sign,
                                           [&](ElemId x) { return chi.at(x); });
    EXPECT_EQ(lhs, rhs) << r.name;
  }
}

INSTANTIATE_TEST_SUITE_P(Subgroups, Reciprocity,
                         ::testing::Values(SO4Subgroup::kBorel,
                                           SO4Subgroup::kTorus,
                                           SO4Subgroup::kParabolic,
                                           SO4Subgroup::kSl2xSl2,
                                           SO4Subgroup::kTorusA1xA1Tilde));

TEST(ClassStructure, PowerAndInverseMaps) {
  auto so4 = so4_classes(5);
  const ClassStructure& cs = *so4->classes;
  const FiniteGroup& g = cs.group();
  for (std::uint32_t c = 0; c < cs.size(); ++c) {
    const ElemId x = cs.rep(c);
    EXPECT_EQ(cs.inverse_class(c), cs.class_of(g.inv(x)));
    EXPECT_EQ(cs.power_class(c, 2), cs.class_of(g.mul(x, x)));
    EXPECT_EQ(cs.power_class(c, -1), cs.inverse_class(c));
    EXPECT_EQ(cs.exponent() % cs.rep_order(c), 0u);
  }
}

}  // namespace
}  // namespace redchar
