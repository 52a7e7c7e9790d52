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

#include "redchar/stability.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "redchar/chartab.h"
#include "redchar/classfn.h"
#include "redchar/error.h"

namespace redchar {

std::string to_string(Locus l) {
  return l == Locus::kUnipotent ? "unipotent" : "s_times_unipotent";
}

std::vector<ClassLabel> locus_classes(std::uint32_t q, Locus l) {
  auto so4 = so4_classes(q);
  const Field& f = so4->field();
  const SO4Elem s = central_involution(f);
  std::vector<ClassLabel> out;
  for (std::uint32_t c : so4->unipotent_classes()) {
    const ClassLabel& u = so4->labels[c];
    if (l == Locus::kUnipotent) {
      out.push_back(u);
    } else {
      out.push_back(classify(
          f, so4_canonical(f, mat_mul(f, s.g, u.rep.g),
                           mat_mul(f, s.h, u.rep.h))));
    }
  }
  return out;
}

LocusProfile locus_profile(const UnipotentProfile& p) {
  return {p.q, Locus::kUnipotent, p.classes, p.values};
}

LocusProfile locus_profile(const IrrSO4& r, Locus l) {
  return locus_profile(virtual_of(r), l);
}

LocusProfile locus_profile(const VirtualChar& v, Locus l) {
  LocusProfile p;
  p.q = v.q;
  p.locus = l;
  p.classes = locus_classes(v.q, l);
  for (const auto& c : p.classes) p.values.push_back(v.eval(c));
  return p;
}

std::size_t FusionPartition::orbit_of(const ClassLabel& c) const {
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (const auto& x : orbits[i]) {
      if (x == c) return i;
    }
  }
  throw PreconditionError("class not in the locus: " + c.name);
}

FusionPartition fuse(std::uint32_t q, Locus l, int generator_set) {
  check_budget("fusion");
  auto so4 = so4_classes(q);
  const SO4Group& g = *so4->group;
  const Field& f = g.field();
  const std::vector<ClassLabel> cls = locus_classes(q, l);

  std::set<ElemId> locus;
  for (const auto& c : cls) {
    for (ElemId x : so4->classes->members(so4->index_of(c))) locus.insert(x);
  }

  using Move = std::function<ElemId(ElemId)>;
  std::vector<Move> moves;
  const Mat2 one = mat_identity();
  auto adjoint = [&](const Mat2& a) {
    moves.push_back([&g, a, one](ElemId x) { return g.adjoint_conj(x, a, one); });
    moves.push_back([&g, a, one](ElemId x) { return g.adjoint_conj(x, one, a); });
  };
  if (generator_set == 0) {
    for (ElemId s : g.generators()) {
      moves.push_back([&g, s](ElemId x) { return g.conj(x, s); });
    }
    adjoint(mat_diag(f.nonsquare(), 1));
  } else {
    adjoint(mat_diag(f.generator(), 1));
    adjoint(mat(f, 1, 1, 0, 1));
    adjoint(mat(f, 0, 1, 1, 0));
  }

  std::map<ElemId, std::size_t> orbit_of;
  std::vector<std::vector<ElemId>> orbits;
  for (ElemId start : locus) {
    if (orbit_of.count(start)) continue;
    const std::size_t id = orbits.size();
    orbits.emplace_back();
    std::vector<ElemId> stack{start};
    orbit_of[start] = id;
    while (!stack.empty()) {
      ElemId x = stack.back();
      stack.pop_back();
      orbits[id].push_back(x);
      for (const auto& m : moves) {
        ElemId y = m(x);
        if (!locus.count(y)) {
          throw std::logic_error("adjoint action left the locus");
        }
        if (orbit_of.emplace(y, id).second) stack.push_back(y);
      }
    }
  }

  FusionPartition p;
  p.q = q;
  p.locus = l;
  std::map<std::size_t, std::size_t> renumber;
  for (const auto& c : cls) {
    ElemId rep = so4->classes->members(so4->index_of(c)).front();
    std::size_t o = orbit_of.at(rep);
    auto [it, fresh] = renumber.emplace(o, p.orbits.size());
    if (fresh) p.orbits.emplace_back();
    p.orbits[it->second].push_back(c);
  }
  return p;
}

StabilityResult is_stable(const LocusProfile& p, const FusionPartition& f) {
  if (p.q != f.q || p.locus != f.locus) {
    throw PreconditionError("profile and partition for different loci");
  }
  StabilityResult r;
  for (std::size_t o = 0; o < f.orbits.size(); ++o) {
    const Cyc* first = nullptr;
    std::string first_name;
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
      if (f.orbit_of(p.classes[i]) != o) continue;
      if (!first) {
        first = &p.values[i];
        first_name = p.classes[i].name;
      } else if (p.values[i] != *first) {
        r.stable = false;
        r.orbit = o;
        r.class_a = first_name;
        r.class_b = p.classes[i].name;
        r.value_a = *first;
        r.value_b = p.values[i];
        return r;
      }
    }
  }
  return r;
}

Rat PacketCandidate::g_sgn_coefficient() const {
  Rat r(s_princ + s_cusp, 2);
  r.canonicalize();
  return r;
}

std::size_t PacketScan::num_stable() const {
  return std::count_if(results.begin(), results.end(),
                       [](const PacketResult& r) { return r.result.stable; });
}

PacketScan packet_scan_2x2(std::uint32_t q, Locus l) {
  PacketScan scan;
  scan.q = q;
  scan.locus = l;
  const FusionPartition part = fuse(q, l);
  const VirtualChar st = virtual_of(find_irreducible(q, "St_SO4.zeta"));
  const UnipotentProfile q1 = green(q, TorusType::kSplit);
  const UnipotentProfile qaa = green(q, TorusType::kA1xA1Tilde);
  const UnipotentProfile gs = g_sgn(q);
  const UnipotentProfile st_u =
      unipotent_profile(find_irreducible(q, "St_SO4"));
  const Cyc qs(q_star(q));
  Rat half(1, 2);
  for (int sp : {1, -1}) {
    for (int sc : {1, -1}) {
      PacketResult pr;
      pr.candidate = {sp, sc};
      const auto sign = [](int s) { return std::string(s > 0 ? "+" : "-"); };
      VirtualChar v =
          st + virtual_of(find_irreducible(q, "omega_princ" + sign(sp))) +
          virtual_of(find_irreducible(q, "omega_cusp" + sign(sc)));
      LocusProfile p = locus_profile(v, l);
      pr.result = is_stable(p, part);
      if (l == Locus::kUnipotent) {
        UnipotentProfile expect =
            st_u + Cyc(half) * (q1 + Cyc(sp) * qs * gs) +
            Cyc(half) * (qaa + Cyc(sc) * qs * gs);
        pr.profile_formula_ok = expect.values == p.values;
      }
      scan.results.push_back(pr);
    }
  }
  return scan;
}

}  // namespace redchar
