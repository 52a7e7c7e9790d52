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

#ifndef REDCHAR_SL3_H_
#define REDCHAR_SL3_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "redchar/cyclo.h"
#include "redchar/ff.h"

namespace redchar {

// 3x3 matrix over F_q, row-major.
using Mat3 = std::array<std::uint32_t, 9>;

Mat3 mat3_identity();
Mat3 mat3_mul(const Field& f, const Mat3& x, const Mat3& y);
Mat3 mat3_inv(const Field& f, const Mat3& x);
std::uint32_t mat3_det(const Field& f, const Mat3& x);
Mat3 mat3_diag(std::uint32_t a, std::uint32_t b, std::uint32_t c);
// [[1,a,c],[0,1,b],[0,0,1]].
Mat3 unitriangular(std::uint32_t a, std::uint32_t b, std::uint32_t c = 0);
bool is_regular_unipotent(const Field& f, const Mat3& x);
std::string mat3_format(const Mat3& x);

// PreconditionError unless q is an odd prime with q = 1 mod 3.
void require_cubic(std::uint32_t q);

// Class of x in F_q^x / cubes, as k with x = g0^k * cube, g0 the field
// generator.
std::uint32_t cube_class(const Field& f, std::uint32_t x);

// SL3 class of a regular unipotent u. With u = P J P^-1, J the Jordan
// block with ones on the superdiagonal and P = [N^2 v | N v | v], the cube
// class of det P does not depend on v. For an upper unitriangular u with
// superdiagonal (a, b) this is the cube class of a b^2.
// PreconditionError for a non-regular input.
std::uint32_t reg_unip_label(const Field& f, const Mat3& u);
// Canonical representative u(g0^l, 1).
Mat3 reg_unip_rep(const Field& f, std::uint32_t label);
std::uint32_t label_of_inverse(const Field& f, std::uint32_t label);
// Label of diag(1,1,c) u_l diag(1,1,c)^-1.
std::uint32_t label_twist(const Field& f, std::uint32_t label,
                          std::uint32_t c);

struct PacketChar {
  enum class Family { kStPrime, kR2sPrime };
  Family family = Family::kStPrime;
  std::uint32_t j = 0;
};
std::string to_string(const PacketChar& c);
std::uint64_t degree(std::uint32_t q, const PacketChar& c);
// q delta_{l j} - (q - 1) / 3.
Cyc eval_reg(std::uint32_t q, const PacketChar& c, std::uint32_t label);

// Ind_B^SL3(chi1 x chi2 x chi3) at x by the Frobenius formula over a
// transversal of the full flags. The chis are characters of F_q^x with
// chi1 chi2 chi3 = 1 on the diagonal.
Cyc induced_borel_value(const Field& f, const MultChar& chi1,
                        const MultChar& chi2, const MultChar& chi3,
                        const Mat3& x);

struct TripleResult {
  std::uint32_t j1 = 0, j2 = 0, j3 = 0;
  // Labels seen at u_0, u_1, u_2 after transporting j3 through duality.
  std::array<std::uint32_t, 3> effective{};
  std::array<Cyc, 3> values;
  bool constant = false;
};

struct TripleScan {
  std::uint32_t q = 0;
  std::vector<TripleResult> results;  // all 27, j1 major
  std::size_t num_passing() const;
};

// omega_princ = (st', j1), omega_cusp = (r2s', j2) and the dual of
// (r2s', j3), summed on the three regular unipotent classes.
TripleScan triple_scan(std::uint32_t q);

struct FusionReport {
  std::uint32_t q = 0;
  // Size of the SL3-conjugacy orbit of u_0 among regular unipotents.
  std::uint64_t orbit_size = 0;
  std::uint64_t expected_orbit_size = 0;  // |SL3| / (3 q^2)
  bool distinct = false;       // u_1, u_2 not in the orbit of u_0
  bool label_constant = false; // reg_unip_label is 0 on the whole orbit
  bool twist_cyclic = false;   // non-cube c permutes the labels cyclically
  bool cube_fixes = false;     // cube c fixes every label
  bool gl3_fused = false;      // some diag(1,1,c) carries u_0 to each u_l
  // Labels of u(a, b) for a few (a, b), as "a,b:l".
  std::vector<std::string> samples;
  bool ok() const;
};

// Full orbit BFS of u_0 under conjugation by the elementary generators of
// SL3(F_q). BudgetError above q = 13.
FusionReport pgl3_fusion(std::uint32_t q);

}  // namespace redchar

#endif  // REDCHAR_SL3_H_
