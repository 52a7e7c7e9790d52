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

#ifndef REDCHAR_CLASSFN_H_
#define REDCHAR_CLASSFN_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "redchar/classes.h"
#include "redchar/cyclo.h"
#include "redchar/groups.h"

namespace redchar {

// Conjugacy classes of an enumerated group with power maps.
class ClassStructure {
 public:
  // Classes are taken in the given order; labels may be empty.
  ClassStructure(std::shared_ptr<const FiniteGroup> g,
                 std::vector<std::vector<ElemId>> classes,
                 std::vector<std::string> labels);
  // Orbits of conjugation by the group's generators, numbered by least
  // element; labels default to the formatted representative.
  static std::shared_ptr<const ClassStructure> of(
      std::shared_ptr<const FiniteGroup> g);

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  std::uint64_t group_order() const { return group_->order(); }
  std::size_t size() const { return classes_.size(); }
  std::uint32_t class_of(ElemId x) const { return class_of_[x]; }
  ElemId rep(std::uint32_t c) const { return classes_[c].front(); }
  std::uint64_t class_size(std::uint32_t c) const {
    return classes_[c].size();
  }
  std::uint64_t centralizer_order(std::uint32_t c) const {
    return group_order() / class_size(c);
  }
  const std::vector<ElemId>& members(std::uint32_t c) const {
    return classes_[c];
  }
  const std::string& label(std::uint32_t c) const { return labels_[c]; }
  std::uint32_t identity_class() const { return class_of(group_->identity()); }
  std::uint32_t inverse_class(std::uint32_t c) const { return inverse_[c]; }
  std::uint64_t rep_order(std::uint32_t c) const {
    return powers_[c].size();
  }
  // Class of rep(c)^k for any integer k.
  std::uint32_t power_class(std::uint32_t c, std::int64_t k) const;
  // Least common multiple of the element orders.
  std::uint64_t exponent() const { return exponent_; }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<std::vector<ElemId>> classes_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::vector<std::uint32_t>> powers_;
  std::uint64_t exponent_ = 1;
};

using ElemFn = std::function<Cyc(ElemId)>;

// Exact class function: one value per class of a ClassStructure.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(std::shared_ptr<const ClassStructure> cs,
                std::vector<Cyc> values);
  static ClassFunction constant(std::shared_ptr<const ClassStructure> cs,
                                const Cyc& v);
  // Evaluates f at each class representative.
  static ClassFunction from_elements(std::shared_ptr<const ClassStructure> cs,
                                     const ElemFn& f);

  const ClassStructure& classes() const { return *cs_; }
  std::shared_ptr<const ClassStructure> classes_ptr() const { return cs_; }
  const std::vector<Cyc>& values() const { return values_; }
  const Cyc& operator[](std::uint32_t c) const { return values_[c]; }
  const Cyc& at(ElemId x) const { return values_[cs_->class_of(x)]; }
  const Cyc& degree() const { return values_[cs_->identity_class()]; }
  ClassFunction conj() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const ClassFunction& o);
  ClassFunction& operator*=(const Cyc& s);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) {
    return a += b;
  }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) {
    return a -= b;
  }
  friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) {
    return a *= b;
  }
  friend ClassFunction operator*(ClassFunction a, const Cyc& s) {
    return a *= s;
  }
  friend ClassFunction operator*(const Cyc& s, ClassFunction a) {
    return a *= s;
  }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  void check_same(const ClassFunction& o) const;
  std::shared_ptr<const ClassStructure> cs_;
  std::vector<Cyc> values_;
};

// (1/|G|) sum over classes of size * f * conj(g). PreconditionError if the
// functions live on different class structures.
Cyc inner_product(const ClassFunction& f, const ClassFunction& g);

// (1/|H|) sum over h in H of f(h) conj(g(h)).
Cyc subgroup_inner_product(const Subgroup& h, const ElemFn& f,
                           const ElemFn& g);

// Ind_H^G f. Throws PreconditionError if f is not constant on
// H-conjugacy classes.
ClassFunction induce(std::shared_ptr<const ClassStructure> cs,
                     const Subgroup& h, const ElemFn& f);

// <Res_H chi, 1_H>. integral is false when the pairing is not a
// nonnegative integer, which means chi was not a character.
struct InvariantsDim {
  Rat value;
  bool integral = true;
};
InvariantsDim invariants_dim(const ClassFunction& chi, const Subgroup& h);

// Multiplicities <f, b> against each basis function.
std::vector<Cyc> decompose(const ClassFunction& f,
                           const std::vector<ClassFunction>& basis);

// Irreducible characters computed from class multiplication coefficients:
// common eigenvectors of the class matrices over F_p with p = 1 mod the
// exponent, then values lifted to Cyc through the power maps. Characters
// are sorted by degree and then by value strings.
struct OracleTable {
  std::vector<ClassFunction> chars;
  std::uint64_t prime = 0;
  std::uint64_t attempts = 0;
};
OracleTable brute_force_irreducibles(
    std::shared_ptr<const ClassStructure> cs, std::uint64_t seed = 1);

// SO4(F_q) with its classes ordered by lemma item and labelled by
// classify(). Cached per q; throws BudgetError for q > 7.
struct SO4Classes {
  std::shared_ptr<const SO4Group> group;
  std::shared_ptr<const ClassStructure> classes;
  std::vector<ClassLabel> labels;  // parallel to classes
  std::map<ClassKey, std::uint32_t> index_of_key;

  std::uint32_t q() const { return group->q(); }
  const Field& field() const { return group->field(); }
  std::uint32_t index_of(const ClassLabel& l) const;
  std::uint32_t index_of_elem(const SO4Elem& x) const;
  std::vector<std::uint32_t> unipotent_classes() const;
};
std::shared_ptr<const SO4Classes> so4_classes(std::uint32_t q);

}  // namespace redchar

#endif  // REDCHAR_CLASSFN_H_
