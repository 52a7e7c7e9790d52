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

#include "redchar/chartab.h"
#include "redchar/error.h"
#include "redchar/parahoric.h"

namespace redchar {
namespace {

TEST(BorelChars, Normalization) {
  const std::uint32_t q = 7;
  const BorelChar a = borel_char(q, 2, 0, 2, 0);
  EXPECT_EQ(a.f2.exponent, 0u);
  EXPECT_EQ(to_string(q, a), "zeta x 1 x zeta x 1");
  EXPECT_EQ(to_string(q, borel_char(q, 3, 3, 0, 0)), "eps x eps x 1 x 1");
  EXPECT_THROW(borel_char(q, 1, 0, 0, 0), PreconditionError);
}

TEST(NInvariants, StatedLists) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    for (int s : {1, -1}) {
      const NInvariants n = n_invariants_report(pi_eta2_beta(q, s));
      EXPECT_EQ(n.dimension, 3);
      EXPECT_TRUE(n.matches_expected);
    }
    const NInvariants e = n_invariants_report(named_rep(q, "ind_P_eps_St"));
    EXPECT_EQ(e.dimension, 2);
    EXPECT_TRUE(e.matches_expected);
  }
  {
    const std::uint32_t q = 7;
    const std::uint32_t z = (q - 1) / 3;
    const NInvariants a = n_invariants_report(ind_p_zeta_st(q));
    EXPECT_EQ(a.dimension, 2);
    EXPECT_EQ(a.expected.size(), 2u);
    EXPECT_TRUE(a.matches_expected);
    const NInvariants b =
        n_invariants_report(ind_borel(q, borel_char(q, z, 0, z, 0)));
    EXPECT_EQ(b.dimension, 4);
    EXPECT_EQ(b.expected.size(), 4u);
    EXPECT_TRUE(b.matches_expected);
  }
}

TEST(Induced, BorelDegrees) {
  for (std::uint32_t q : {3u, 5u}) {
    const std::uint32_t e = (q - 1) / 2;
    const NamedRep r = ind_borel(q, borel_char(q, e, e, 0, 0));
    const long qq = q;
    EXPECT_EQ(r.character.degree(), Cyc((qq + 1) * (qq + 1)));
  }
}

TEST(Induced, ParabolicZetaStIsIrreducible) {
  const NamedRep r = ind_p_zeta_st(7);
  EXPECT_EQ(inner_product(r.character, r.character), Cyc(1));
  EXPECT_THROW(ind_p_zeta_st(5), PreconditionError);
}

TEST(Mackey, SumBeta) {
  for (std::uint32_t q : {3u, 5u}) {
    const MackeyReport m = mackey_sum_beta(q);
    EXPECT_EQ(m.degree, 3u * (q + 1) * (q + 1));
    EXPECT_EQ(m.eps_st_multiplicity, 1);
    EXPECT_EQ(m.omega_in_summand, (std::pair<long, long>{1, 1}));
    EXPECT_EQ(m.omega_in_total, (std::pair<long, long>{2, 2}));
    EXPECT_TRUE(m.contains_pi_plus);
    EXPECT_TRUE(m.contains_pi_minus);
  }
}

TEST(Pin, ComponentsAgree) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const PinReport p = component_pin(q);
    EXPECT_EQ(p.trace_plus, "+");
    EXPECT_EQ(p.twist_plus, "+");
    EXPECT_TRUE(p.twist_swaps);
    EXPECT_TRUE(p.agree);
    EXPECT_EQ(p.candidates.size(), 2u);
    EXPECT_FALSE(p.pinned.empty());
  }
}

TEST(Shadow, IsSteinbergTwist) {
  for (std::uint32_t q : {3u, 5u}) {
    EXPECT_EQ(omega_princ_eps_shadow(q).character,
              character(find_irreducible(q, "St_SO4.zeta")));
  }
}

TEST(NamedReps, Parsing) {
  EXPECT_EQ(named_rep(5, "ind_borel:2,2,0,0").kind,
            NamedRep::Kind::kIndBorel);
  EXPECT_THROW(named_rep(5, "ind_borel:1,2"), PreconditionError);
  EXPECT_THROW(named_rep(5, "ind_borel:a,b,c,d"), PreconditionError);
  EXPECT_THROW(named_rep(5, "nope"), PreconditionError);
  EXPECT_EQ(named_rep(3, "pi_eta2_beta").character,
            named_rep(3, "pi_eta2_beta+").character);
}

}  // namespace
}  // namespace redchar
