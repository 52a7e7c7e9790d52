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

#include "redchar/chartab.h"
#include "redchar/classfn.h"
#include "redchar/error.h"

namespace redchar {
namespace {

const ClassLabel& label(std::uint32_t q, const std::string& name) {
  auto so4 = so4_classes(q);
  for (const auto& l : so4->labels) {
    if (l.name == name) return l;
  }
  throw PreconditionError("no class " + name);
}

Cyc gauss(std::uint32_t q) { return gauss_sqrt_qstar(q); }

TEST(Chartab, PrintedValues) {
  for (std::uint32_t q : {3u, 5u}) {
    const IrrSO4 st = find_irreducible(q, "St_SO4");
    EXPECT_EQ(*appendix_entry(st, label(q, "c1(1)xc1(1)")),
              Cyc(static_cast<long>(q * q)));
    EXPECT_EQ(eval(st, label(q, "c1(1)xc1(1)")),
              Cyc(static_cast<long>(q * q)));
    const IrrSO4 triv = find_irreducible(q, "1_SO4");
    for (const auto& l : so4_classes(q)->labels) {
      EXPECT_EQ(eval(triv, l), Cyc(1));
    }
  }
}

TEST(Chartab, OmegaPrincMinusAtGammaPair) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const Field& f = *field(q);
    const IrrSO4 w = find_irreducible(q, "omega_princ-");
    const ClassLabel& c = label(q, "c2(1)xc2(1,D)");
    const int e = f.legendre(f.neg(f.nonsquare()));
    const Cyc want = Cyc(Rat(1, 2)) * Cyc(1 - e * static_cast<long>(q));
    EXPECT_EQ(*appendix_entry(w, c), want) << q;
    EXPECT_EQ(eval(w, c), want) << q;
  }
}

TEST(Chartab, OmegaCuspPrintedEntryIsCorrected) {
  // The printed 1/2 theta0(z)(1 -+ sqrt q*) splits the derived theta0(z).
  for (std::uint32_t q : {3u, 5u}) {
    const IrrSO4 p = find_irreducible(q, "omega_cusp+");
    const IrrSO4 m = find_irreducible(q, "omega_cusp-");
    for (const auto& l : so4_classes(q)->labels) {
      if (l.f1.kind != FactorKind::kC2 || l.f2.kind != FactorKind::kC4) {
        continue;
      }
      const Cyc d = eval(p, l);
      EXPECT_EQ(d, eval(m, l));
      EXPECT_EQ(*appendix_entry(p, l), d * (Cyc(1) - gauss(q)) / Rat(2));
      EXPECT_EQ(*appendix_entry(m, l), d * (Cyc(1) + gauss(q)) / Rat(2));
      EXPECT_NE(*appendix_entry(p, l), d);
    }
  }
}

TEST(Gl2Tables, RemarkValues) {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const Field& f = *field(q);
    const IrrGL2 st{IrrGL2::Kind::kSt, {}, {}};
    const IrrSL2 w0{IrrSL2::Kind::kOmega0, {}, 1};
    const IrrSL2 we{IrrSL2::Kind::kOmegaE, {}, 1};
    for (std::uint32_t x = 2; x < q; ++x) {
      EXPECT_EQ(gl2_eval(f, st, mat_diag(1, x)), Cyc(1));
      if (f.mul(x, x) != 1) {
        EXPECT_EQ(sl2_eval(f, w0, mat_diag(x, f.inv(x))), Cyc(0));
      }
    }
    for (std::uint32_t x = 1; x < q; ++x) {
      const Cyc want =
          (Cyc(1) + Cyc(f.legendre(x)) * gauss(q)) / Rat(2);
      EXPECT_EQ(sl2_eval(f, we, mat(f, 1, x, 0, 1)), want) << q << " " << x;
    }
  }
}

TEST(Chartab, FamilySizes) {
  auto count = [](std::uint32_t q, int c, bool with_swaps) {
    int n = 0;
    for (const auto& r : list_irreducibles(q)) {
      if (r.appendix_case == c && (with_swaps || !r.swapped)) ++n;
    }
    return n;
  };
  EXPECT_EQ(count(3, 1, true), 4);
  EXPECT_EQ(count(5, 3, false), 2);
  EXPECT_EQ(count(5, 3, true), 4);
  EXPECT_EQ(count(3, 5, true), 0);
  EXPECT_EQ(count(5, 5, true), 2);
  EXPECT_EQ(count(7, 5, true), 6);
}

class TableProperty : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(TableProperty, Verifies) {
  const std::uint32_t q = GetParam();
  const TableReport r = verify_table(q, false);
  EXPECT_TRUE(r.count_ok);
  EXPECT_TRUE(r.degrees_ok);
  EXPECT_TRUE(r.row_orthogonality);
  EXPECT_TRUE(r.column_orthogonality);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_EQ(r.num_irreducibles, r.num_classes);
  EXPECT_EQ(r.degree_square_sum, Rat(SO4Group::expected_order(q)));
}

TEST_P(TableProperty, NamesAreUnique) {
  std::set<std::string> names;
  for (const auto& r : list_irreducibles(GetParam())) {
    EXPECT_TRUE(names.insert(r.name).second) << r.name;
    EXPECT_EQ(find_irreducible(GetParam(), r.name), r);
  }
}

TEST_P(TableProperty, SymmetriesPermuteIrreducibles) {
  const std::uint32_t q = GetParam();
  const auto irrs = list_irreducibles(q);
  auto so4 = so4_classes(q);
  for (const auto& r : irrs) {
    const IrrSO4 z = twist_by_zeta(r);
    const IrrSO4 s = outer_swap(r);
    EXPECT_EQ(twist_by_zeta(z), r);
    EXPECT_EQ(outer_swap(s), r);
    EXPECT_EQ(degree(z), degree(r));
    EXPECT_EQ(degree(s), degree(r));
    const ClassFunction cr = character(r);
    const ClassFunction cz = character(z);
    for (std::uint32_t c = 0; c < so4->labels.size(); ++c) {
      const SO4Elem& x = so4->labels[c].rep;
      const int det = so4->group->widetilde_det(so4->group->id(x));
      EXPECT_EQ(cz[c], cr[c] * Cyc(det));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, TableProperty, ::testing::Values(3u, 5u, 7u));

TEST(Chartab, OracleMatchAtQ3) {
  const TableReport r = verify_table(3, true, 1);
  ASSERT_TRUE(r.oracle_match.has_value());
  EXPECT_TRUE(*r.oracle_match);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.entries_verified, 345u);
  EXPECT_EQ(r.corrected.size(), 15u);
}

TEST(Chartab, UnknownName) {
  EXPECT_THROW(find_irreducible(3, "nope"), PreconditionError);
}

}  // namespace
}  // namespace redchar
