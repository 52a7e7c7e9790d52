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
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "redchar/classes.h"
#include "redchar/groups.h"

namespace redchar {
namespace {

std::map<std::string, int> items_of(const ClassInventory& inv) {
  std::map<std::string, int> m;
  for (const auto& e : inv) ++m[e.label.lemma_item];
  return m;
}

TEST(Classify, NamedElements) {
  const auto f = field(3);
  const SO4Elem a = so4_canonical(*f, mat_identity(), mat(*f, -1, 0, 0, -1));
  EXPECT_EQ(classify(*f, a).name, "c1(1)xc1(-1)");
  EXPECT_EQ(classify(*f, a).lemma_item, "1");
  const SO4Elem b = so4_canonical(*f, mat_identity(), mat(*f, 1, 1, 0, 1));
  EXPECT_EQ(classify(*f, b).name, "c1(1)xc2(1)");
  EXPECT_EQ(classify(*f, b).lemma_item, "2");
  EXPECT_TRUE(is_unipotent(*f, b));
  EXPECT_FALSE(is_unipotent(*f, a));
}

TEST(Classify, AnisotropicPairIsUnique) {
  SO4Group g(3);
  const Field& f = g.field();
  std::set<std::string> names;
  for (ElemId x = 0; x < g.order(); ++x) {
    const ClassLabel l = classify(f, g.elem(x));
    if (l.lemma_item == "18") names.insert(l.name);
  }
  ASSERT_EQ(names.size(), 1u);
  EXPECT_EQ(*names.begin(), "c4(d)xc4(d)");
}

TEST(Inventory, SizesPartitionGroup) {
  SO4Group g(3);
  const ClassInventory inv = symbolic_classes(g);
  std::uint64_t total = 0;
  for (const auto& e : inv) {
    total += e.size;
    EXPECT_EQ(e.size * e.centralizer, g.order());
  }
  EXPECT_EQ(total, 576u);
  EXPECT_EQ(inv.size(), 20u);
}

TEST(Inventory, UnipotentOrCentralShapesAtQ3) {
  SO4Group g(3);
  const auto m = items_of(brute_force_classes(g));
  EXPECT_EQ(m.at("1") + m.at("2") + m.at("5") + m.at("6"), 10);
}

TEST(Inventory, StatedCounts) {
  SO4Group g3(3);
  SO4Group g5(5);
  const auto m3 = items_of(brute_force_classes(g3));
  const auto m5 = items_of(brute_force_classes(g5));
  EXPECT_EQ(m5.at("3"), 1);
  EXPECT_EQ(m3.at("4"), 1);
  EXPECT_EQ(m3.at("11c"), 1);
  EXPECT_EQ(m5.at("6"), 4);
  EXPECT_EQ(*lemma_count("4", 3), Rat(1));
  EXPECT_EQ(*lemma_count("6", 5), Rat(4));
  EXPECT_FALSE(lemma_count("17", 5).has_value());
  EXPECT_FALSE(lemma_count("12a", 5).has_value());
}

class ReconcileTest : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(ReconcileTest, SymbolicMatchesOrbits) {
  SO4Group g(GetParam());
  const ClassInventory sym = symbolic_classes(g);
  const ClassInventory orb = brute_force_classes(g);
  const ReconcileReport r = reconcile(g, sym, orb);
  EXPECT_TRUE(r.bijection);
  EXPECT_TRUE(r.sizes_ok);
  EXPECT_TRUE(r.mismatches.empty());
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.item11_reading, "stated");
  std::vector<std::string> uncounted;
  for (const auto& it : r.items) {
    if (!it.stated) uncounted.push_back(it.item);
  }
  EXPECT_EQ(uncounted, (std::vector<std::string>{"12a", "17"}));
}

INSTANTIATE_TEST_SUITE_P(Small, ReconcileTest, ::testing::Values(3u, 5u));

TEST(Reconcile, FlaggedItems) {
  // Stated counts for 12b, 15 and 16 overcount; the oracle gives these.
  const std::map<std::uint32_t, std::map<std::string, std::uint64_t>> want = {
      {3, {{"12b", 1}, {"16", 1}}},
      {5, {{"12b", 3}, {"15", 1}, {"16", 3}}},
  };
  for (const auto& [q, items] : want) {
    SO4Group g(q);
    const ReconcileReport r =
        reconcile(g, symbolic_classes(g), brute_force_classes(g));
    std::set<std::string> flagged;
    for (const auto& s : r.flagged_items()) flagged.insert(s);
    for (const auto& it : r.items) {
      if (!items.count(it.item)) continue;
      EXPECT_EQ(it.oracle, items.at(it.item)) << q << " " << it.item;
      EXPECT_FALSE(it.matches);
      EXPECT_FALSE(it.witness.empty());
      EXPECT_TRUE(flagged.count(it.item));
    }
  }
}

TEST(Reconcile, UncountedItemsAtQ5) {
  SO4Group g(5);
  const ReconcileReport r =
      reconcile(g, symbolic_classes(g), brute_force_classes(g));
  std::map<std::string, std::uint64_t> got;
  for (const auto& it : r.items) got[it.item] = it.oracle;
  EXPECT_EQ(got.at("12a"), 1u);
  EXPECT_EQ(got.at("17"), 6u);
}

}  // namespace
}  // namespace redchar
