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

#include <map>

#include "redchar/chartab.h"
#include "redchar/dl.h"
#include "redchar/error.h"

namespace redchar {
namespace {

VirtualChar v(std::uint32_t q, const std::string& name) {
  return virtual_of(find_irreducible(q, name));
}

const ClassLabel& unip(const UnipotentProfile& p, const std::string& name) {
  for (const auto& c : p.classes) {
    if (c.name == name) return c;
  }
  throw PreconditionError("no unipotent class " + name);
}

TEST(DeligneLusztig, TrivialCharacterDecompositions) {
  for (std::uint32_t q : {3u, 5u}) {
    const auto R = [&](TorusType w) {
      return dl_char(q, w, trivial_torus_char(w));
    };
    const VirtualChar one = v(q, "1_SO4"), a = v(q, "1xSt"),
                      b = v(q, "Stx1"), st = v(q, "St_SO4");
    EXPECT_EQ(R(TorusType::kSplit), one + a + b + st);
    EXPECT_EQ(R(TorusType::kA1), one + a - b - st);
    EXPECT_EQ(R(TorusType::kA1Tilde), one - a + b - st);
    EXPECT_EQ(R(TorusType::kA1xA1Tilde), one - a - b + st);
    const long qq = q;
    EXPECT_EQ(R(TorusType::kSplit).degree(), (qq + 1) * (qq + 1));
    EXPECT_EQ(R(TorusType::kA1xA1Tilde).degree(), (qq - 1) * (qq - 1));
  }
}

TEST(DeligneLusztig, SignCharacterGivesOmegaPairs) {
  const std::uint32_t q = 5;
  EXPECT_EQ(dl_char(q, TorusType::kSplit, sign_torus_char(q, TorusType::kSplit)),
            v(q, "omega_princ+") + v(q, "omega_princ-"));
  EXPECT_EQ(dl_char(q, TorusType::kA1xA1Tilde,
                    sign_torus_char(q, TorusType::kA1xA1Tilde)),
            v(q, "omega_cusp+") + v(q, "omega_cusp-"));
}

TEST(DeligneLusztig, SplitFactorWithSignSplitsOnSl2) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const Field& f = *field(q);
    const auto terms = gl2_dl(f, true, FactorChar{{}, f.epsilon()});
    ASSERT_EQ(terms.size(), 1u);
    const IrrSL2 p{IrrSL2::Kind::kOmegaE, {}, 1};
    const IrrSL2 m{IrrSL2::Kind::kOmegaE, {}, -1};
    for (std::uint32_t x = 0; x < q; ++x) {
      const Mat2 u = mat(f, 1, x, 0, 1);
      EXPECT_EQ(gl2_eval(f, terms[0].first, u) * Cyc(terms[0].second),
                sl2_eval(f, p, u) + sl2_eval(f, m, u));
    }
  }
}

TEST(DeligneLusztig, RejectsBadTorusCharacters) {
  const Field& f = *field(5);
  TorusChar t = trivial_torus_char(TorusType::kSplit);
  t.first.a = MultChar{CharDomain::kFq, 1};
  EXPECT_THROW(dl_char(5, TorusType::kSplit, t), PreconditionError);
  TorusChar n = trivial_torus_char(TorusType::kA1);
  n.first.a = f.theta0();
  EXPECT_THROW(dl_char(5, TorusType::kA1, n), PreconditionError);
}

TEST(GreenFunctions, GSgnValues) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const UnipotentProfile g = g_sgn(q);
    EXPECT_EQ(g.at(unip(g, "c1(1)xc1(1)")), Cyc(0));
    EXPECT_EQ(g.at(unip(g, "c1(1)xc2(1)")), Cyc(0));
    EXPECT_EQ(g.at(unip(g, "c2(1)xc1(1)")), Cyc(0));
    EXPECT_EQ(g.at(unip(g, "c2(1)xc2(1,1)")), Cyc(1));
    EXPECT_EQ(g.at(unip(g, "c2(1)xc2(1,D)")), Cyc(-1));
    EXPECT_EQ(g.classes.size(), 5u);
  }
}

TEST(GreenFunctions, DifferencesOfHalves) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const Cyc qs(q_star(q));
    const UnipotentProfile gs = g_sgn(q);
    for (const char* fam : {"omega_princ", "omega_cusp"}) {
      const UnipotentProfile d =
          unipotent_profile(find_irreducible(q, std::string(fam) + "+")) -
          unipotent_profile(find_irreducible(q, std::string(fam) + "-"));
      EXPECT_EQ(d, qs * gs) << fam << " " << q;
    }
  }
  EXPECT_EQ(q_star(3), -3);
  EXPECT_EQ(q_star(5), 5);
}

TEST(GreenFunctions, Degrees) {
  for (std::uint32_t q : {3u, 5u}) {
    const long qq = q;
    const UnipotentProfile p = green(q, TorusType::kSplit);
    EXPECT_EQ(p.at(unip(p, "c1(1)xc1(1)")), Cyc((qq + 1) * (qq + 1)));
    const UnipotentProfile a = green(q, TorusType::kA1xA1Tilde);
    EXPECT_EQ(a.at(unip(a, "c1(1)xc1(1)")), Cyc((qq - 1) * (qq - 1)));
  }
}

class IdentityTest : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(IdentityTest, AllHold) {
  const IdentityReport r = verify_identities(GetParam(), IdentitySet::kAll);
  EXPECT_TRUE(r.ok());
  for (const auto& c : r.checks) {
    EXPECT_TRUE(c.ok) << c.name;
    EXPECT_GT(c.classes_checked, 0u) << c.name;
    EXPECT_TRUE(c.witnesses.empty()) << c.name;
  }
  EXPECT_GE(r.checks.size(), 14u);
}

TEST_P(IdentityTest, SubsetsPartitionAll) {
  const std::uint32_t q = GetParam();
  const std::size_t n =
      verify_identities(q, IdentitySet::kSteinberg).checks.size() +
      verify_identities(q, IdentitySet::kOmega).checks.size() +
      verify_identities(q, IdentitySet::kFaces).checks.size();
  EXPECT_EQ(n, verify_identities(q, IdentitySet::kAll).checks.size());
}

INSTANTIATE_TEST_SUITE_P(Small, IdentityTest, ::testing::Values(3u, 5u, 7u));

TEST(Involutions, TorusCounts) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    EXPECT_EQ(count_order2(q, TorusType::kSplit), 3u);
    EXPECT_EQ(count_order2(q, TorusType::kA1), 1u);
    EXPECT_EQ(count_order2(q, TorusType::kA1Tilde), 1u);
    EXPECT_EQ(count_order2(q, TorusType::kA1xA1Tilde), 3u);
  }
}

TEST(Involutions, CentralValues) {
  const std::map<std::uint32_t, long> want = {{3, 2}, {5, -8}, {7, 18}};
  for (const auto& [q, val] : want) {
    const Field& f = *field(q);
    const SO4Elem s = central_involution(f);
    const IrrSO4 w = find_irreducible(q, "omega_cusp+");
    const UnipotentProfile p = unipotent_profile(w);
    EXPECT_EQ(su_eval(w, s, unip(p, "c1(1)xc1(1)")), Cyc(val));
    // Row c1(1) x c1(-1): -(q-1)^2/2 eps(-1).
    const long qq = q;
    EXPECT_EQ(Cyc(val), Cyc(-(qq - 1) * (qq - 1) / 2 * f.legendre(f.neg(1))));
  }
}

}  // namespace
}  // namespace redchar
