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

#include "redchar/sl3.h"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "redchar/error.h"

namespace redchar {

namespace {

std::uint64_t pack(const Mat3& x) {
  std::uint64_t w = 0;
  for (std::uint32_t v : x) w = (w << 4) | v;
  return w;
}

Mat3 sub_identity(const Field& f, const Mat3& x) {
  Mat3 n = x;
  for (int i = 0; i < 3; ++i) n[4 * i] = f.sub(n[4 * i], 1);
  return n;
}

bool is_zero(const Mat3& x) {
  return std::all_of(x.begin(), x.end(), [](std::uint32_t v) { return v == 0; });
}

std::array<std::uint32_t, 3> apply(const Field& f, const Mat3& m,
                                   const std::array<std::uint32_t, 3>& v) {
  std::array<std::uint32_t, 3> out{};
  for (int i = 0; i < 3; ++i) {
    std::uint32_t s = 0;
    for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(m[3 * i + k], v[k]));
    out[i] = s;
  }
  return out;
}

Mat3 from_columns(const std::array<std::uint32_t, 3>& a,
                  const std::array<std::uint32_t, 3>& b,
                  const std::array<std::uint32_t, 3>& c) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i) {
    m[3 * i] = a[i];
    m[3 * i + 1] = b[i];
    m[3 * i + 2] = c[i];
  }
  return m;
}

std::uint64_t sl3_order(std::uint64_t q) {
  return q * q * q * (q * q - 1) * (q * q * q - 1);
}

}  // namespace

Mat3 mat3_identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

Mat3 mat3_mul(const Field& f, const Mat3& x, const Mat3& y) {
  Mat3 z{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      std::uint32_t s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(x[3 * i + k], y[3 * k + j]));
      z[3 * i + j] = s;
    }
  }
  return z;
}

std::uint32_t mat3_det(const Field& f, const Mat3& x) {
  auto m = [&](int i, int j) { return x[3 * i + j]; };
  auto minor = [&](int a, int b, int c, int d) {
    return f.sub(f.mul(m(1, a), m(2, b)), f.mul(m(1, c), m(2, d)));
  };
  std::uint32_t d = f.mul(m(0, 0), minor(1, 2, 2, 1));
  d = f.sub(d, f.mul(m(0, 1), minor(0, 2, 2, 0)));
  return f.add(d, f.mul(m(0, 2), minor(0, 1, 1, 0)));
}

Mat3 mat3_inv(const Field& f, const Mat3& x) {
  const std::uint32_t d = mat3_det(f, x);
  if (d == 0) throw PreconditionError("singular 3x3 matrix");
  const std::uint32_t di = f.inv(d);
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // Cofactor of (j, i).
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      std::uint32_t c = f.sub(f.mul(x[3 * r0 + c0], x[3 * r1 + c1]),
                              f.mul(x[3 * r0 + c1], x[3 * r1 + c0]));
      out[3 * i + j] = f.mul(c, di);
    }
  }
  return out;
}

Mat3 mat3_diag(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return {a, 0, 0, 0, b, 0, 0, 0, c};
}

Mat3 unitriangular(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return {1, a, c, 0, 1, b, 0, 0, 1};
}

bool is_regular_unipotent(const Field& f, const Mat3& x) {
  const Mat3 n = sub_identity(f, x);
  const Mat3 n2 = mat3_mul(f, n, n);
  return !is_zero(n2) && is_zero(mat3_mul(f, n2, n));
}

std::string mat3_format(const Mat3& x) {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? ";" : "";
    for (int j = 0; j < 3; ++j) s += (j ? "," : "") + std::to_string(x[3 * i + j]);
  }
  return s + "]";
}

void require_cubic(std::uint32_t q) {
  if (!is_odd_prime(q) || q % 3 != 1) {
    throw PreconditionError("q = " + std::to_string(q) +
                            " must be an odd prime with q = 1 mod 3");
  }
}

std::uint32_t cube_class(const Field& f, std::uint32_t x) {
  return f.log(x) % 3;
}

std::uint32_t reg_unip_label(const Field& f, const Mat3& u) {
  require_cubic(f.q());
  if (!is_regular_unipotent(f, u)) {
    throw PreconditionError("not a regular unipotent: " + mat3_format(u));
  }
  const Mat3 n = sub_identity(f, u);
  const Mat3 n2 = mat3_mul(f, n, n);
  for (int j = 0; j < 3; ++j) {
    std::array<std::uint32_t, 3> v{};
    v[j] = 1;
    auto w2 = apply(f, n2, v);
    if (w2 == std::array<std::uint32_t, 3>{}) continue;
    return cube_class(f, mat3_det(f, from_columns(w2, apply(f, n, v), v)));
  }
  throw std::logic_error("N^2 vanishes on a regular unipotent");
}

Mat3 reg_unip_rep(const Field& f, std::uint32_t label) {
  return unitriangular(f.exp(label % 3), 1);
}

std::uint32_t label_of_inverse(const Field& f, std::uint32_t label) {
  return reg_unip_label(f, mat3_inv(f, reg_unip_rep(f, label)));
}

std::uint32_t label_twist(const Field& f, std::uint32_t label,
                          std::uint32_t c) {
  if (c % f.q() == 0) throw PreconditionError("twist by 0");
  const Mat3 d = mat3_diag(1, 1, c % f.q());
  return reg_unip_label(
      f, mat3_mul(f, mat3_mul(f, d, reg_unip_rep(f, label)), mat3_inv(f, d)));
}

std::string to_string(const PacketChar& c) {
  return std::string(c.family == PacketChar::Family::kStPrime ? "st'"
                                                               : "r2s'") +
         "(" + std::to_string(c.j) + ")";
}

std::uint64_t degree(std::uint32_t q, const PacketChar& c) {
  require_cubic(q);
  const std::uint64_t Q = q;
  const std::uint64_t total = c.family == PacketChar::Family::kStPrime
                                  ? (Q + 1) * (Q * Q + Q + 1)
                                  : (Q - 1) * (Q - 1) * (Q + 1);
  if (total % 3 != 0) throw std::logic_error("degree not divisible by 3");
  return total / 3;
}

Cyc eval_reg(std::uint32_t q, const PacketChar& c, std::uint32_t label) {
  require_cubic(q);
  const long v = (label % 3 == c.j % 3 ? static_cast<long>(q) : 0) -
                 static_cast<long>(q - 1) / 3;
  return Cyc(v);
}

Cyc induced_borel_value(const Field& f, const MultChar& chi1,
                        const MultChar& chi2, const MultChar& chi3,
                        const Mat3& x) {
  const std::uint32_t q = f.q();
  using Vec = std::array<std::uint32_t, 3>;
  // Projective points, first nonzero coordinate 1.
  std::vector<Vec> points;
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      points.push_back({1, a, b});
    }
  }
  for (std::uint32_t b = 0; b < q; ++b) points.push_back({0, 1, b});
  points.push_back({0, 0, 1});

  auto cross = [&f](const Vec& u, const Vec& v) {
    Vec w{f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1])),
          f.sub(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
          f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]))};
    std::uint32_t lead = w[0] ? w[0] : (w[1] ? w[1] : w[2]);
    std::uint32_t s = f.inv(lead);
    for (auto& e : w) e = f.mul(e, s);
    return w;
  };
  auto dot = [&f](const Vec& u, const Vec& v) {
    return f.add(f.add(f.mul(u[0], v[0]), f.mul(u[1], v[1])),
                 f.mul(u[2], v[2]));
  };

  Cyc sum;
  std::uint64_t flags = 0;
  for (const Vec& v1 : points) {
    std::set<Vec> planes;
    for (const Vec& w : points) {
      if (w == v1) continue;
      Vec nrm = cross(v1, w);
      if (!planes.insert(nrm).second) continue;
      ++flags;
      Vec v3{};
      for (int k = 0; k < 3; ++k) {
        Vec e{};
        e[k] = 1;
        if (dot(nrm, e) != 0) {
          v3 = e;
          break;
        }
      }
      Mat3 g = from_columns(v1, w, v3);
      std::uint32_t d = f.inv(mat3_det(f, g));
      for (int i = 0; i < 3; ++i) g[3 * i + 2] = f.mul(g[3 * i + 2], d);
      const Mat3 y = mat3_mul(f, mat3_mul(f, mat3_inv(f, g), x), g);
      if (y[3] != 0 || y[6] != 0 || y[7] != 0) continue;
      sum += f.eval(chi1, y[0]) * f.eval(chi2, y[4]) * f.eval(chi3, y[8]);
    }
  }
  const std::uint64_t Q = q;
  if (flags != (Q * Q + Q + 1) * (Q + 1)) {
    throw std::logic_error("flag transversal has the wrong size");
  }
  return sum;
}

std::size_t TripleScan::num_passing() const {
  return std::count_if(results.begin(), results.end(),
                       [](const TripleResult& r) { return r.constant; });
}

TripleScan triple_scan(std::uint32_t q) {
  require_cubic(q);
  const Field& f = *field(q);
  std::array<std::uint32_t, 3> inv{};
  for (std::uint32_t l = 0; l < 3; ++l) inv[l] = label_of_inverse(f, l);
  TripleScan scan;
  scan.q = q;
  using F = PacketChar::Family;
  for (std::uint32_t j1 = 0; j1 < 3; ++j1) {
    for (std::uint32_t j2 = 0; j2 < 3; ++j2) {
      for (std::uint32_t j3 = 0; j3 < 3; ++j3) {
        TripleResult r;
        r.j1 = j1;
        r.j2 = j2;
        r.j3 = j3;
        r.effective = {j1, j2, 3};
        for (std::uint32_t l = 0; l < 3; ++l) {
          if (inv[l] == j3) r.effective[2] = l;
        }
        for (std::uint32_t l = 0; l < 3; ++l) {
          // The dual takes its value at the inverse class.
          r.values[l] = eval_reg(q, {F::kStPrime, j1}, l) +
                        eval_reg(q, {F::kR2sPrime, j2}, l) +
                        eval_reg(q, {F::kR2sPrime, j3}, inv[l]);
        }
        r.constant = r.values[0] == r.values[1] && r.values[1] == r.values[2];
        scan.results.push_back(r);
      }
    }
  }
  return scan;
}

bool FusionReport::ok() const {
  return distinct && label_constant && twist_cyclic && cube_fixes &&
         gl3_fused && orbit_size == expected_orbit_size;
}

FusionReport pgl3_fusion(std::uint32_t q) {
  require_cubic(q);
  if (q > 13) {
    throw BudgetError("SL3 orbit search is limited to q <= 13");
  }
  const Field& f = *field(q);
  FusionReport rep;
  rep.q = q;
  rep.expected_orbit_size = sl3_order(q) / (3ull * q * q);

  std::vector<Mat3> gens, gens_inv;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Mat3 e = mat3_identity();
      e[3 * i + j] = 1;
      gens.push_back(e);
      gens_inv.push_back(mat3_inv(f, e));
    }
  }
  const Mat3 u0 = reg_unip_rep(f, 0);
  std::unordered_set<std::uint64_t> seen{pack(u0)};
  std::vector<Mat3> stack{u0};
  rep.label_constant = true;
  std::uint64_t steps = 0;
  while (!stack.empty()) {
    Mat3 x = stack.back();
    stack.pop_back();
    if (reg_unip_label(f, x) != 0) rep.label_constant = false;
    if ((++steps & 0xffff) == 0) check_budget("SL3 orbit search");
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Mat3 y = mat3_mul(f, mat3_mul(f, gens[k], x), gens_inv[k]);
      if (seen.insert(pack(y)).second) stack.push_back(y);
    }
  }
  rep.orbit_size = seen.size();
  rep.distinct = !seen.count(pack(reg_unip_rep(f, 1))) &&
                 !seen.count(pack(reg_unip_rep(f, 2)));

  rep.twist_cyclic = true;
  rep.cube_fixes = true;
  std::set<std::uint32_t> reached;
  for (std::uint32_t c = 1; c < q; ++c) {
    const bool cube = cube_class(f, c) == 0;
    std::set<std::uint32_t> images;
    for (std::uint32_t l = 0; l < 3; ++l) {
      std::uint32_t t = label_twist(f, l, c);
      images.insert(t);
      if (cube && t != l) rep.cube_fixes = false;
      if (!cube && t == l) rep.twist_cyclic = false;
      if (l == 0) reached.insert(t);
    }
    if (images.size() != 3) rep.twist_cyclic = false;
  }
  rep.gl3_fused = reached.size() == 3;

  for (auto [a, b] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {1, 1}, {3 % q, 1}, {1, 3 % q}, {f.generator(), 1},
           {1, f.generator()}}) {
    rep.samples.push_back(std::to_string(a) + "," + std::to_string(b) + ":" +
                          std::to_string(reg_unip_label(f, unitriangular(a, b))));
  }
  return rep;
}

}  // namespace redchar
