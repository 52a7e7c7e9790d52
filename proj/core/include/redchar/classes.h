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

#ifndef REDCHAR_CLASSES_H_
#define REDCHAR_CLASSES_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redchar/cyclo.h"
#include "redchar/groups.h"

namespace redchar {

enum class FactorKind { kC1, kC2, kC3, kC4 };

// GL2 conjugacy type: c1(x) = xI, c2(x) = [[x,1],[0,x]], c3(x,y) split
// semisimple, c4(z) eigenvalues z, z^q with z outside F_q.
struct FactorType {
  FactorKind kind = FactorKind::kC1;
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  Fq2Elem z{};
};

FactorType factor_type(const Field& f, const Mat2& m);
std::string format_factor(const Field& f, const FactorType& t);

// Square class of det[(m - x)v, v] for m of type c2(x); c2(x, gamma) =
// [[x, gamma], [0, x]] has invariant gamma.
std::uint32_t c2_invariant(const Field& f, const Mat2& m);

// Conjugacy invariants of (g, h) minimized over the scalings
// (g, h) -> (ag, ah).
struct ClassKey {
  std::uint32_t tr1 = 0;
  std::uint32_t tr2 = 0;
  std::uint32_t det = 1;
  std::uint8_t scalar1 = 0;
  std::uint8_t scalar2 = 0;
  // 0 unless both factors are of type c2; then 1 (square) or 2 (non-square)
  // for the class of the product of the two c2 invariants.
  std::uint8_t gamma = 0;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

struct ClassLabel {
  std::uint32_t q = 0;
  ClassKey key;
  SO4Elem rep;          // canonical representative built from key
  SO4Elem display_rep;  // scaled so the factor data below reads naturally
  FactorType f1, f2;    // types of display_rep
  std::uint32_t gamma2 = 0;  // 1 or Delta for c2 x c2, else 0
  std::string name;
  std::string lemma_item;
  friend bool operator==(const ClassLabel& a, const ClassLabel& b) {
    return a.key == b.key;
  }
};

ClassKey class_key(const Field& f, const SO4Elem& x);
ClassLabel label_from_key(const Field& f, const ClassKey& k);
ClassLabel classify(const Field& f, const SO4Elem& x);
// Both factors unipotent up to the common scalar.
bool is_unipotent(const Field& f, const SO4Elem& x);

// Lemma item of a label: "1".."10", "11a", "11b", "11c", "12a", "12b",
// "13".."18".
std::string lemma_item(const Field& f, const ClassLabel& l);
std::vector<std::string> lemma_items();
// Stated class count for an item, or nullopt where none is stated.
std::optional<Rat> lemma_count(const std::string& item, std::uint32_t q);
std::string lemma_count_formula(const std::string& item);

struct ClassEntry {
  ClassLabel label;
  ElemId rep = 0;  // least element of the class
  std::uint64_t size = 0;
  std::uint64_t centralizer = 0;
};
using ClassInventory = std::vector<ClassEntry>;

// Conjugation orbits by BFS; centralizer orders counted directly.
ClassInventory brute_force_classes(const SO4Group& g);
// Partition of the enumeration by classify().
ClassInventory symbolic_classes(const SO4Group& g);

struct ItemCount {
  std::string item;
  std::string formula;
  std::optional<Rat> stated;
  std::uint64_t oracle = 0;
  bool matches = true;
  std::string witness;  // element of a class of this item, if any
};

struct ReconcileReport {
  std::uint32_t q = 0;
  bool bijection = true;
  std::vector<std::string> mismatches;
  std::vector<ItemCount> items;
  // Item 11(a)/(b): which q mod 4 reading of the stated formulas agrees.
  std::string item11_reading;
  bool sizes_ok = true;
  // Labels and orbits agree; count disagreements are reported, not fatal.
  bool ok() const;
  std::vector<std::string> flagged_items() const;
};

ReconcileReport reconcile(const SO4Group& g, const ClassInventory& symbolic,
                          const ClassInventory& oracle);

}  // namespace redchar

#endif  // REDCHAR_CLASSES_H_
