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

#ifndef REDCHAR_GROUPS_H_
#define REDCHAR_GROUPS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "redchar/ff.h"

namespace redchar {

using ElemId = std::uint32_t;

// 2x2 matrix [[a, b], [c, d]] over F_q, entries reduced.
struct Mat2 {
  std::uint8_t a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 mat(const Field& f, std::int64_t a, std::int64_t b, std::int64_t c,
         std::int64_t d);
Mat2 mat_identity();
Mat2 mat_diag(std::uint32_t x, std::uint32_t y);
Mat2 mat_mul(const Field& f, const Mat2& x, const Mat2& y);
Mat2 mat_inv(const Field& f, const Mat2& x);
Mat2 mat_scale(const Field& f, std::uint32_t s, const Mat2& x);
Mat2 mat_conj(const Field& f, const Mat2& s, const Mat2& x);  // s x s^-1
std::uint32_t mat_det(const Field& f, const Mat2& x);
std::uint32_t mat_trace(const Field& f, const Mat2& x);
bool mat_is_scalar(const Mat2& x);
std::string mat_format(const Field& f, const Mat2& x);

// Abstract finite group with elements numbered 0..order()-1.
class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;
  virtual std::string name() const = 0;
  virtual std::size_t order() const = 0;
  virtual ElemId identity() const = 0;
  virtual ElemId mul(ElemId x, ElemId y) const = 0;
  virtual ElemId inv(ElemId x) const = 0;
  virtual const std::vector<ElemId>& generators() const = 0;
  virtual std::string format(ElemId x) const = 0;

  ElemId conj(ElemId x, ElemId y) const {  // y x y^-1
    return mul(mul(y, x), inv(y));
  }
  std::uint64_t element_order(ElemId x) const;
  // Size of the subgroup generated by gens, by BFS.
  std::size_t closure_size(const std::vector<ElemId>& gens) const;
};

// GL2(F_q) or SL2(F_q) with dense element numbering.
class Gl2Group : public FiniteGroup {
 public:
  enum class Kind { kGL, kSL };
  Gl2Group(std::uint32_t q, Kind kind);

  std::string name() const override;
  std::size_t order() const override { return elems_.size(); }
  ElemId identity() const override { return identity_; }
  ElemId mul(ElemId x, ElemId y) const override;
  ElemId inv(ElemId x) const override;
  const std::vector<ElemId>& generators() const override { return gens_; }
  std::string format(ElemId x) const override;

  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  const Mat2& elem(ElemId x) const { return elems_[x]; }
  ElemId id(const Mat2& m) const;
  Kind kind() const { return kind_; }

 private:
  std::uint32_t code(const Mat2& m) const;

  std::shared_ptr<const Field> field_;
  Kind kind_;
  std::vector<Mat2> elems_;
  std::vector<ElemId> index_;
  std::vector<ElemId> gens_;
  ElemId identity_ = 0;
};

// Canonical element of SO4(F_q) = GL_{2,2}(F_q) / F_q^x: (g, h) with
// det g = det h, scaled so the first nonzero entry of g is 1.
struct SO4Elem {
  Mat2 g, h;
  friend bool operator==(const SO4Elem&, const SO4Elem&) = default;
  // 4 bits per entry, g first, row-major; requires q <= 13.
  std::uint32_t pack() const;
  static SO4Elem unpack(std::uint32_t w);
};

SO4Elem so4_canonical(const Field& f, const Mat2& g, const Mat2& h);
std::string so4_format(const Field& f, const SO4Elem& x);

class SO4Group : public FiniteGroup {
 public:
  // Full enumeration; throws BudgetError for q > 7.
  explicit SO4Group(std::uint32_t q);

  std::string name() const override;
  std::size_t order() const override { return elems_.size(); }
  ElemId identity() const override { return identity_; }
  ElemId mul(ElemId x, ElemId y) const override;
  ElemId inv(ElemId x) const override;
  const std::vector<ElemId>& generators() const override { return gens_; }
  std::string format(ElemId x) const override;

  std::uint32_t q() const { return field_->q(); }
  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  const SO4Elem& elem(ElemId x) const { return elems_[x]; }
  ElemId id(const SO4Elem& e) const;
  ElemId id_of(const Mat2& g, const Mat2& h) const;

  // epsilon(det g).
  int widetilde_det(ElemId x) const;
  // (s g s^-1, t h t^-1) for any invertible s, t.
  ElemId adjoint_conj(ElemId x, const Mat2& s, const Mat2& t) const;

  static std::uint64_t expected_order(std::uint32_t q);

 private:
  std::uint32_t code(const SO4Elem& e) const;

  std::shared_ptr<const Field> field_;
  std::vector<SO4Elem> elems_;
  std::vector<ElemId> index_;
  std::vector<ElemId> gens_;
  ElemId identity_ = 0;
};

// Orbits of conjugation by the subgroup generated by conj_gens. Orbits are
// numbered by their least element; members are sorted.
struct OrbitPartition {
  std::vector<std::uint32_t> orbit_of;
  std::vector<std::vector<ElemId>> orbits;
};

OrbitPartition conjugacy_orbits(const FiniteGroup& g,
                                const std::vector<ElemId>& conj_gens);

// Subgroup given by its member list, with a generating set extracted
// greedily in member order.
struct Subgroup {
  std::string name;
  std::vector<ElemId> members;     // sorted
  std::vector<char> contains;      // indexed by ElemId of the ambient group
  std::vector<ElemId> generators;

  std::size_t order() const { return members.size(); }
  bool has(ElemId x) const { return contains[x] != 0; }
};

// Throws std::logic_error if the predicate does not cut out a subgroup.
Subgroup make_subgroup(const FiniteGroup& g, const std::string& name,
                       const std::function<bool(ElemId)>& pred);

enum class SO4Subgroup {
  kBorel,
  kTorus,
  kUnipotent,
  kParabolic,        // GL2 x Borel
  kMirrorParabolic,  // Borel x GL2
  kSl2xSl2,
  kTorusA1,          // nonsplit torus in the first factor
  kTorusA1Tilde,     // nonsplit torus in the second factor
  kTorusA1xA1Tilde,  // nonsplit in both
};

std::string to_string(SO4Subgroup s);
Subgroup so4_subgroup(const SO4Group& g, SO4Subgroup which);

// Matrix a + bJ, J = [[0, Delta], [1, 0]]: the nonsplit torus of GL2.
bool mat_in_nonsplit_torus(const Field& f, const Mat2& x);

}  // namespace redchar

#endif  // REDCHAR_GROUPS_H_
