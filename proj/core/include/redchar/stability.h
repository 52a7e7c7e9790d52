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

#ifndef REDCHAR_STABILITY_H_
#define REDCHAR_STABILITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redchar/classes.h"
#include "redchar/cyclo.h"
#include "redchar/dl.h"
#include "redchar/groups.h"

namespace redchar {

// Finite model of stability: a class function on SO4(F_q) is stable when
// it is constant on orbits of conjugation by GL2 x GL2 (equivalently
// PGL2 x PGL2). Only the finite reductive quotient is modeled; no p-adic
// descent, germ expansion or orbital integral enters.
enum class Locus {
  kUnipotent,
  kSUnipotent,  // s u, s = c1(1) x c1(-1) central
};
std::string to_string(Locus l);

// Values on the classes of a locus. For kSUnipotent, classes[i] is the
// class of s u_i where u_i runs over the unipotent classes.
struct LocusProfile {
  std::uint32_t q = 0;
  Locus locus = Locus::kUnipotent;
  std::vector<ClassLabel> classes;
  std::vector<Cyc> values;
};

LocusProfile locus_profile(const UnipotentProfile& p);
// A character restricted to the locus.
LocusProfile locus_profile(const IrrSO4& r, Locus l);
LocusProfile locus_profile(const VirtualChar& v, Locus l);
std::vector<ClassLabel> locus_classes(std::uint32_t q, Locus l);

struct FusionPartition {
  std::uint32_t q = 0;
  Locus locus = Locus::kUnipotent;
  std::vector<std::vector<ClassLabel>> orbits;
  // Index into orbits, for a class of the locus.
  std::size_t orbit_of(const ClassLabel& c) const;
};

// Adjoint generator sets: 0 uses the SO4 generators plus diag(Delta, 1) in
// each factor; 1 uses diag(g0, 1), [[1,1],[0,1]], [[0,1],[1,0]] in each
// factor.
FusionPartition fuse(std::uint32_t q, Locus l, int generator_set = 0);

struct StabilityResult {
  bool stable = true;
  // Witness orbit and two classes in it with different values.
  std::optional<std::size_t> orbit;
  std::string class_a, class_b;
  Cyc value_a, value_b;
};

StabilityResult is_stable(const LocusProfile& p, const FusionPartition& f);

struct PacketCandidate {
  int s_princ = 1;
  int s_cusp = 1;
  // Coefficient of q* G_sgn in the assembled unipotent profile.
  Rat g_sgn_coefficient() const;
};

struct PacketResult {
  PacketCandidate candidate;
  StabilityResult result;
  // On the unipotent locus: the assembled profile equals
  // St + 1/2 (Q_1 + s_p q* G) + 1/2 (Q_A1xA1~ + s_c q* G).
  bool profile_formula_ok = true;
};

struct PacketScan {
  std::uint32_t q = 0;
  Locus locus = Locus::kUnipotent;
  std::vector<PacketResult> results;  // (+,+), (+,-), (-,+), (-,-)
  std::size_t num_stable() const;
};

// Assembles St_SO4.zeta + omega_princ^{s_p} + omega_cusp^{s_c} on the locus
// and tests stability of each of the four sign pairs.
PacketScan packet_scan_2x2(std::uint32_t q, Locus l);

}  // namespace redchar

#endif  // REDCHAR_STABILITY_H_
