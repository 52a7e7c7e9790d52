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

#include "redchar/groups.h"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "redchar/error.h"

namespace redchar {
namespace {

constexpr ElemId kNone = std::numeric_limits<ElemId>::max();

std::vector<ElemId> bfs_closure(const FiniteGroup& g,
                                const std::vector<ElemId>& gens,
                                std::vector<char>* seen_out) {
  std::vector<char> seen(g.order(), 0);
  std::vector<ElemId> out;
  ElemId e = g.identity();
  seen[e] = 1;
  out.push_back(e);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (ElemId s : gens) {
      ElemId y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  if (seen_out) *seen_out = std::move(seen);
  return out;
}

}  // namespace

Mat2 mat(const Field& f, std::int64_t a, std::int64_t b, std::int64_t c,
         std::int64_t d) {
  return {static_cast<std::uint8_t>(f.from_int(a)),
          static_cast<std::uint8_t>(f.from_int(b)),
          static_cast<std::uint8_t>(f.from_int(c)),
          static_cast<std::uint8_t>(f.from_int(d))};
}

Mat2 mat_identity() { return {1, 0, 0, 1}; }

Mat2 mat_diag(std::uint32_t x, std::uint32_t y) {
  return {static_cast<std::uint8_t>(x), 0, 0, static_cast<std::uint8_t>(y)};
}

Mat2 mat_mul(const Field& f, const Mat2& x, const Mat2& y) {
  auto e = [&](std::uint32_t p, std::uint32_t q, std::uint32_t r,
               std::uint32_t s) {
    return static_cast<std::uint8_t>(f.add(f.mul(p, q), f.mul(r, s)));
  };
  return {e(x.a, y.a, x.b, y.c), e(x.a, y.b, x.b, y.d), e(x.c, y.a, x.d, y.c),
          e(x.c, y.b, x.d, y.d)};
}

std::uint32_t mat_det(const Field& f, const Mat2& x) {
  return f.sub(f.mul(x.a, x.d), f.mul(x.b, x.c));
}

std::uint32_t mat_trace(const Field& f, const Mat2& x) {
  return f.add(x.a, x.d);
}

Mat2 mat_scale(const Field& f, std::uint32_t s, const Mat2& x) {
  return {static_cast<std::uint8_t>(f.mul(s, x.a)),
          static_cast<std::uint8_t>(f.mul(s, x.b)),
          static_cast<std::uint8_t>(f.mul(s, x.c)),
          static_cast<std::uint8_t>(f.mul(s, x.d))};
}

Mat2 mat_inv(const Field& f, const Mat2& x) {
  std::uint32_t det = mat_det(f, x);
  if (det == 0) throw std::domain_error("singular matrix");
  std::uint32_t di = f.inv(det);
  Mat2 adj{x.d, static_cast<std::uint8_t>(f.neg(x.b)),
           static_cast<std::uint8_t>(f.neg(x.c)), x.a};
  return mat_scale(f, di, adj);
}

Mat2 mat_conj(const Field& f, const Mat2& s, const Mat2& x) {
  return mat_mul(f, mat_mul(f, s, x), mat_inv(f, s));
}

bool mat_is_scalar(const Mat2& x) {
  return x.b == 0 && x.c == 0 && x.a == x.d;
}

std::string mat_format(const Field& f, const Mat2& x) {
  std::ostringstream os;
  os << "[[" << f.signed_value(x.a) << "," << f.signed_value(x.b) << "],["
     << f.signed_value(x.c) << "," << f.signed_value(x.d) << "]]";
  return os.str();
}

bool mat_in_nonsplit_torus(const Field& f, const Mat2& x) {
  return x.a == x.d && x.b == f.mul(f.nonsquare(), x.c);
}

std::uint64_t FiniteGroup::element_order(ElemId x) const {
  std::uint64_t n = 1;
  ElemId y = x;
  ElemId e = identity();
  while (y != e) {
    y = mul(y, x);
    ++n;
  }
  return n;
}

std::size_t FiniteGroup::closure_size(const std::vector<ElemId>& gens) const {
  return bfs_closure(*this, gens, nullptr).size();
}

Gl2Group::Gl2Group(std::uint32_t q, Kind kind) : field_(redchar::field(q)), kind_(kind) {
  const Field& f = *field_;
  if (q > 13) throw BudgetError("GL2 enumeration limited to q <= 13");
  index_.assign(static_cast<std::size_t>(q) * q * q * q, kNone);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::uint32_t c = 0; c < q; ++c) {
        for (std::uint32_t d = 0; d < q; ++d) {
          Mat2 m{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                 static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)};
          std::uint32_t det = mat_det(f, m);
          if (det == 0 || (kind == Kind::kSL && det != 1)) continue;
          index_[code(m)] = static_cast<ElemId>(elems_.size());
          elems_.push_back(m);
        }
      }
    }
  }
  identity_ = id(mat_identity());
  gens_.push_back(id(mat(f, 1, 1, 0, 1)));
  gens_.push_back(id(mat(f, 1, 0, 1, 1)));
  if (kind == Kind::kGL) gens_.push_back(id(mat_diag(f.generator(), 1)));
}

std::string Gl2Group::name() const {
  return std::string(kind_ == Kind::kGL ? "GL2" : "SL2") + "(F_" +
         std::to_string(field_->q()) + ")";
}

std::uint32_t Gl2Group::code(const Mat2& m) const {
  std::uint32_t q = field_->q();
  return ((m.a * q + m.b) * q + m.c) * q + m.d;
}

ElemId Gl2Group::id(const Mat2& m) const {
  ElemId r = index_[code(m)];
  if (r == kNone) throw std::invalid_argument("matrix not in group");
  return r;
}

ElemId Gl2Group::mul(ElemId x, ElemId y) const {
  return id(mat_mul(*field_, elems_[x], elems_[y]));
}

ElemId Gl2Group::inv(ElemId x) const {
  return id(mat_inv(*field_, elems_[x]));
}

std::string Gl2Group::format(ElemId x) const {
  return mat_format(*field_, elems_[x]);
}

std::uint32_t SO4Elem::pack() const {
  auto n = [](std::uint8_t v) { return static_cast<std::uint32_t>(v & 0xF); };
  return (n(g.a) << 28) | (n(g.b) << 24) | (n(g.c) << 20) | (n(g.d) << 16) |
         (n(h.a) << 12) | (n(h.b) << 8) | (n(h.c) << 4) | n(h.d);
}

SO4Elem SO4Elem::unpack(std::uint32_t w) {
  auto n = [w](int shift) { return static_cast<std::uint8_t>((w >> shift) & 0xF); };
  return {{n(28), n(24), n(20), n(16)}, {n(12), n(8), n(4), n(0)}};
}

SO4Elem so4_canonical(const Field& f, const Mat2& g, const Mat2& h) {
  std::uint32_t dg = mat_det(f, g);
  if (dg == 0 || dg != mat_det(f, h)) {
    throw std::invalid_argument("SO4 element needs det g = det h != 0");
  }
  std::uint32_t lead = g.a != 0 ? g.a : (g.b != 0 ? g.b : g.c);
  std::uint32_t s = f.inv(lead);
  return {mat_scale(f, s, g), mat_scale(f, s, h)};
}

std::string so4_format(const Field& f, const SO4Elem& x) {
  return mat_format(f, x.g) + "x" + mat_format(f, x.h) + " mod scalars";
}

std::uint64_t SO4Group::expected_order(std::uint32_t q) {
  std::uint64_t a = q, b = q - 1, c = q + 1;
  return a * a * b * b * c * c;
}

SO4Group::SO4Group(std::uint32_t q) : field_(redchar::field(q)) {
  if (q > 7) {
    throw BudgetError("SO4(F_q) enumeration is limited to q <= 7 (|G| = " +
                      std::to_string(expected_order(q)) + ")");
  }
  const Field& f = *field_;
  std::size_t span = 1;
  for (int i = 0; i < 8; ++i) span *= q;
  index_.assign(span, kNone);
  elems_.reserve(expected_order(q));
  std::vector<Mat2> all;
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::uint32_t c = 0; c < q; ++c) {
        for (std::uint32_t d = 0; d < q; ++d) {
          Mat2 m{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                 static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)};
          if (mat_det(f, m) != 0) all.push_back(m);
        }
      }
    }
  }
  std::vector<std::vector<Mat2>> by_det(q);
  for (const Mat2& m : all) by_det[mat_det(f, m)].push_back(m);
  for (const Mat2& g : all) {
    std::uint32_t lead = g.a != 0 ? g.a : g.b;
    if (lead != 1) continue;
    for (const Mat2& h : by_det[mat_det(f, g)]) {
      SO4Elem e{g, h};
      index_[code(e)] = static_cast<ElemId>(elems_.size());
      elems_.push_back(e);
    }
  }
  identity_ = id_of(mat_identity(), mat_identity());
  Mat2 s = mat(f, 1, 1, 0, 1);
  Mat2 t = mat(f, 1, 0, 1, 1);
  Mat2 one = mat_identity();
  Mat2 dg = mat_diag(f.generator(), 1);
  gens_ = {id_of(s, one), id_of(t, one), id_of(one, s), id_of(one, t),
           id_of(dg, dg)};
}

std::string SO4Group::name() const {
  return "SO4(F_" + std::to_string(field_->q()) + ")";
}

std::uint32_t SO4Group::code(const SO4Elem& e) const {
  std::uint32_t q = field_->q();
  std::uint32_t c = 0;
  for (std::uint8_t v : {e.g.a, e.g.b, e.g.c, e.g.d, e.h.a, e.h.b, e.h.c,
                         e.h.d}) {
    c = c * q + v;
  }
  return c;
}

ElemId SO4Group::id(const SO4Elem& e) const {
  ElemId r = index_[code(e)];
  if (r == kNone) throw std::invalid_argument("element is not canonical");
  return r;
}

ElemId SO4Group::id_of(const Mat2& g, const Mat2& h) const {
  return id(so4_canonical(*field_, g, h));
}

ElemId SO4Group::mul(ElemId x, ElemId y) const {
  const SO4Elem& a = elems_[x];
  const SO4Elem& b = elems_[y];
  return id_of(mat_mul(*field_, a.g, b.g), mat_mul(*field_, a.h, b.h));
}

ElemId SO4Group::inv(ElemId x) const {
  const SO4Elem& a = elems_[x];
  return id_of(mat_inv(*field_, a.g), mat_inv(*field_, a.h));
}

std::string SO4Group::format(ElemId x) const {
  return so4_format(*field_, elems_[x]);
}

int SO4Group::widetilde_det(ElemId x) const {
  return field_->legendre(mat_det(*field_, elems_[x].g));
}

ElemId SO4Group::adjoint_conj(ElemId x, const Mat2& s, const Mat2& t) const {
  const SO4Elem& a = elems_[x];
  return id_of(mat_conj(*field_, s, a.g), mat_conj(*field_, t, a.h));
}

OrbitPartition conjugacy_orbits(const FiniteGroup& g,
                                const std::vector<ElemId>& conj_gens) {
  OrbitPartition p;
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  p.orbit_of.assign(g.order(), kUnset);
  std::vector<ElemId> gens_inv;
  for (ElemId s : conj_gens) gens_inv.push_back(g.inv(s));
  for (ElemId x = 0; x < g.order(); ++x) {
    if (p.orbit_of[x] != kUnset) continue;
    auto k = static_cast<std::uint32_t>(p.orbits.size());
    std::vector<ElemId> orbit{x};
    p.orbit_of[x] = k;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t j = 0; j < conj_gens.size(); ++j) {
        ElemId y = g.mul(g.mul(conj_gens[j], orbit[i]), gens_inv[j]);
        if (p.orbit_of[y] == kUnset) {
          p.orbit_of[y] = k;
          orbit.push_back(y);
        }
      }
    }
    if ((k & 63) == 0) check_budget("conjugacy orbit enumeration");
    std::sort(orbit.begin(), orbit.end());
    p.orbits.push_back(std::move(orbit));
  }
  return p;
}

Subgroup make_subgroup(const FiniteGroup& g, const std::string& name,
                       const std::function<bool(ElemId)>& pred) {
  Subgroup h;
  h.name = name;
  h.contains.assign(g.order(), 0);
  for (ElemId x = 0; x < g.order(); ++x) {
    if (pred(x)) {
      h.members.push_back(x);
      h.contains[x] = 1;
    }
  }
  std::vector<char> reached;
  std::vector<ElemId> closure = bfs_closure(g, {}, &reached);
  for (ElemId x : h.members) {
    if (reached[x]) continue;
    h.generators.push_back(x);
    closure = bfs_closure(g, h.generators, &reached);
    if (closure.size() > h.members.size()) break;
  }
  if (closure.size() != h.members.size()) {
    throw std::logic_error(name + " is not a subgroup");
  }
  for (ElemId x : closure) {
    if (!h.contains[x]) throw std::logic_error(name + " is not closed");
  }
  return h;
}

std::string to_string(SO4Subgroup s) {
  switch (s) {
    case SO4Subgroup::kBorel:
      return "B";
    case SO4Subgroup::kTorus:
      return "T";
    case SO4Subgroup::kUnipotent:
      return "N";
    case SO4Subgroup::kParabolic:
      return "P";
    case SO4Subgroup::kMirrorParabolic:
      return "P'";
    case SO4Subgroup::kSl2xSl2:
      return "SL2xSL2/+-1";
    case SO4Subgroup::kTorusA1:
      return "T_A1";
    case SO4Subgroup::kTorusA1Tilde:
      return "T_A1~";
    case SO4Subgroup::kTorusA1xA1Tilde:
      return "T_A1xA1~";
  }
  return "?";
}

Subgroup so4_subgroup(const SO4Group& g, SO4Subgroup which) {
  const Field& f = g.field();
  auto upper = [](const Mat2& m) { return m.c == 0; };
  auto diag = [](const Mat2& m) { return m.b == 0 && m.c == 0; };
  auto nonsplit = [&f](const Mat2& m) { return mat_in_nonsplit_torus(f, m); };
  std::function<bool(ElemId)> pred;
  switch (which) {
    case SO4Subgroup::kBorel:
      pred = [&](ElemId x) { return upper(g.elem(x).g) && upper(g.elem(x).h); };
      break;
    case SO4Subgroup::kTorus:
      pred = [&](ElemId x) { return diag(g.elem(x).g) && diag(g.elem(x).h); };
      break;
    case SO4Subgroup::kUnipotent:
      pred = [&](ElemId x) {
        const SO4Elem& e = g.elem(x);
        return upper(e.g) && upper(e.h) && e.g.a == 1 && e.g.d == 1 &&
               e.h.a == 1 && e.h.d == 1;
      };
      break;
    case SO4Subgroup::kParabolic:
      pred = [&](ElemId x) { return upper(g.elem(x).h); };
      break;
    case SO4Subgroup::kMirrorParabolic:
      pred = [&](ElemId x) { return upper(g.elem(x).g); };
      break;
    case SO4Subgroup::kSl2xSl2:
      pred = [&](ElemId x) { return g.widetilde_det(x) == 1; };
      break;
    case SO4Subgroup::kTorusA1:
      pred = [&](ElemId x) {
        return nonsplit(g.elem(x).g) && diag(g.elem(x).h);
      };
      break;
    case SO4Subgroup::kTorusA1Tilde:
      pred = [&](ElemId x) {
        return diag(g.elem(x).g) && nonsplit(g.elem(x).h);
      };
      break;
    case SO4Subgroup::kTorusA1xA1Tilde:
      pred = [&](ElemId x) {
        return nonsplit(g.elem(x).g) && nonsplit(g.elem(x).h);
      };
      break;
  }
  return make_subgroup(g, to_string(which), pred);
}

}  // namespace redchar
