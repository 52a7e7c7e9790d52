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

#include <algorithm>
#include <stdexcept>

#include "redchar/chartab.h"
#include "redchar/error.h"

namespace redchar {

namespace {

std::uint32_t md(std::int64_t v, std::uint32_t m) {
  return static_cast<std::uint32_t>(((v % m) + m) % m);
}

Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

MultChar fq(const Field& f, std::int64_t k) {
  return {CharDomain::kFq, md(k, f.q() - 1)};
}

}  // namespace

IrrGL2 gl2_canonical(const Field& f, IrrGL2 r) {
  if (r.kind == IrrGL2::Kind::kPS) {
    if (r.a.exponent > r.b.exponent) std::swap(r.a, r.b);
    if (r.a == r.b) throw PreconditionError("principal series needs a != b");
  } else if (r.kind == IrrGL2::Kind::kCusp) {
    MultChar t = f.frobenius_twist(r.a);
    if (t == r.a) throw PreconditionError("cuspidal needs a regular character");
    if (t.exponent < r.a.exponent) r.a = t;
    r.b = {};
  } else {
    r.b = {};
  }
  return r;
}

std::vector<IrrGL2> gl2_irreducibles(const Field& f) {
  const std::uint32_t m = f.q() - 1;
  std::vector<IrrGL2> out;
  for (std::uint32_t a = 0; a < m; ++a) {
    out.push_back({IrrGL2::Kind::kDet, fq(f, a), {}});
  }
  for (std::uint32_t a = 0; a < m; ++a) {
    out.push_back({IrrGL2::Kind::kSt, fq(f, a), {}});
  }
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = a + 1; b < m; ++b) {
      out.push_back({IrrGL2::Kind::kPS, fq(f, a), fq(f, b)});
    }
  }
  for (const MultChar& phi : f.list_chars(CharDomain::kFq2)) {
    MultChar t = f.frobenius_twist(phi);
    if (t == phi || t.exponent < phi.exponent) continue;
    out.push_back({IrrGL2::Kind::kCusp, phi, {}});
  }
  return out;
}

Cyc gl2_eval(const Field& f, const IrrGL2& r, const FactorType& t) {
  const Cyc q(static_cast<long>(f.q()));
  auto ch = [&](const MultChar& c, std::uint32_t x) { return f.eval(c, x); };
  switch (r.kind) {
    case IrrGL2::Kind::kDet:
    case IrrGL2::Kind::kSt: {
      const bool st = r.kind == IrrGL2::Kind::kSt;
      switch (t.kind) {
        case FactorKind::kC1:
          return (st ? q : Cyc(1)) * ch(r.a, f.mul(t.x, t.x));
        case FactorKind::kC2:
          return st ? Cyc() : ch(r.a, f.mul(t.x, t.x));
        case FactorKind::kC3:
          return ch(r.a, f.mul(t.x, t.y));
        case FactorKind::kC4: {
          Cyc v = ch(r.a, f.norm(t.z));
          return st ? -v : v;
        }
      }
      break;
    }
    case IrrGL2::Kind::kPS:
      switch (t.kind) {
        case FactorKind::kC1:
          return Cyc(static_cast<long>(f.q() + 1)) * ch(r.a, t.x) *
                 ch(r.b, t.x);
        case FactorKind::kC2:
          return ch(r.a, t.x) * ch(r.b, t.x);
        case FactorKind::kC3:
          return ch(r.a, t.x) * ch(r.b, t.y) + ch(r.a, t.y) * ch(r.b, t.x);
        case FactorKind::kC4:
          return Cyc();
      }
      break;
    case IrrGL2::Kind::kCusp:
      switch (t.kind) {
        case FactorKind::kC1:
          return Cyc(static_cast<long>(f.q() - 1)) * ch(r.a, t.x);
        case FactorKind::kC2:
          return -ch(r.a, t.x);
        case FactorKind::kC3:
          return Cyc();
        case FactorKind::kC4:
          return -(f.eval(r.a, t.z) + f.eval(r.a, f.frobenius(t.z)));
      }
      break;
  }
  return Cyc();
}

Cyc gl2_eval(const Field& f, const IrrGL2& r, const Mat2& m) {
  return gl2_eval(f, r, factor_type(f, m));
}

std::uint64_t gl2_degree(const Field& f, const IrrGL2& r) {
  switch (r.kind) {
    case IrrGL2::Kind::kDet:
      return 1;
    case IrrGL2::Kind::kSt:
      return f.q();
    case IrrGL2::Kind::kPS:
      return f.q() + 1;
    case IrrGL2::Kind::kCusp:
      return f.q() - 1;
  }
  return 0;
}

MultChar gl2_central_char(const Field& f, const IrrGL2& r) {
  switch (r.kind) {
    case IrrGL2::Kind::kDet:
    case IrrGL2::Kind::kSt:
      return f.mul_chars(r.a, r.a);
    case IrrGL2::Kind::kPS:
      return f.mul_chars(r.a, r.b);
    case IrrGL2::Kind::kCusp:
      return f.restrict_to_base(r.a);
  }
  return {};
}

IrrGL2 gl2_twist(const Field& f, const IrrGL2& r, const MultChar& lambda) {
  IrrGL2 out = r;
  if (r.kind == IrrGL2::Kind::kCusp) {
    out.a = f.mul_chars(r.a, f.norm_pullback(lambda));
  } else {
    out.a = f.mul_chars(r.a, lambda);
    if (r.kind == IrrGL2::Kind::kPS) out.b = f.mul_chars(r.b, lambda);
  }
  return gl2_canonical(f, out);
}

std::string to_string(const Field&, const IrrGL2& r) {
  const std::string a = std::to_string(r.a.exponent);
  switch (r.kind) {
    case IrrGL2::Kind::kDet:
      return "det^" + a;
    case IrrGL2::Kind::kSt:
      return "St.det^" + a;
    case IrrGL2::Kind::kPS:
      return "PS(" + a + "," + std::to_string(r.b.exponent) + ")";
    case IrrGL2::Kind::kCusp:
      return "rho(" + a + ")";
  }
  return "?";
}

std::vector<IrrSL2> sl2_irreducibles(const Field& f) {
  const std::uint32_t q = f.q();
  std::vector<IrrSL2> out;
  out.push_back({IrrSL2::Kind::kTriv, {}, 1});
  out.push_back({IrrSL2::Kind::kSt, {}, 1});
  for (std::uint32_t k = 1; 2 * k < q - 1; ++k) {
    out.push_back({IrrSL2::Kind::kPS, {CharDomain::kFq, k}, 1});
  }
  for (std::uint32_t k = 1; 2 * k < q + 1; ++k) {
    out.push_back({IrrSL2::Kind::kCusp, {CharDomain::kFq2NormOne, k}, 1});
  }
  for (int s : {1, -1}) out.push_back({IrrSL2::Kind::kOmegaE, {}, s});
  for (int s : {1, -1}) out.push_back({IrrSL2::Kind::kOmega0, {}, s});
  return out;
}

Cyc sl2_eval(const Field& f, const IrrSL2& r, const Mat2& m) {
  if (mat_det(f, m) != 1) throw PreconditionError("matrix not in SL2");
  const std::uint32_t q = f.q();
  const FactorType t = factor_type(f, m);
  const Cyc half = Cyc(frac(1, 2));
  auto eps = [&](std::uint32_t x) { return Cyc(static_cast<long>(f.legendre(x))); };
  auto th0 = [&](std::uint32_t x) { return f.eval(f.theta0(), Fq2Elem{x, 0}); };
  switch (t.kind) {
    case FactorKind::kC1: {
      const std::uint32_t x = t.x;
      switch (r.kind) {
        case IrrSL2::Kind::kTriv:
          return 1;
        case IrrSL2::Kind::kSt:
          return static_cast<long>(q);
        case IrrSL2::Kind::kPS:
          return Cyc(static_cast<long>(q + 1)) * f.eval(r.chi, x);
        case IrrSL2::Kind::kCusp:
          return Cyc(static_cast<long>(q - 1)) * f.eval(r.chi, Fq2Elem{x, 0});
        case IrrSL2::Kind::kOmegaE:
          return Cyc(frac(q + 1, 2)) * eps(x);
        case IrrSL2::Kind::kOmega0:
          return Cyc(frac(q - 1, 2)) * th0(x);
      }
      break;
    }
    case FactorKind::kC2: {
      const std::uint32_t x = t.x;
      const std::uint32_t gamma = c2_invariant(f, m);
      const Cyc g = gauss_sqrt_qstar(q) * Rat(r.sign);
      switch (r.kind) {
        case IrrSL2::Kind::kTriv:
          return 1;
        case IrrSL2::Kind::kSt:
          return 0;
        case IrrSL2::Kind::kPS:
          return f.eval(r.chi, x);
        case IrrSL2::Kind::kCusp:
          return -f.eval(r.chi, Fq2Elem{x, 0});
        case IrrSL2::Kind::kOmegaE:
          return half * (eps(x) + eps(gamma) * g);
        case IrrSL2::Kind::kOmega0:
          return half * th0(x) * (Cyc(-1) + eps(f.mul(gamma, x)) * g);
      }
      break;
    }
    case FactorKind::kC3:
      switch (r.kind) {
        case IrrSL2::Kind::kTriv:
        case IrrSL2::Kind::kSt:
          return 1;
        case IrrSL2::Kind::kPS:
          return f.eval(r.chi, t.x) + f.eval(r.chi, t.y);
        case IrrSL2::Kind::kCusp:
        case IrrSL2::Kind::kOmega0:
          return 0;
        case IrrSL2::Kind::kOmegaE:
          return eps(t.x);
      }
      break;
    case FactorKind::kC4:
      switch (r.kind) {
        case IrrSL2::Kind::kTriv:
          return 1;
        case IrrSL2::Kind::kSt:
          return -1;
        case IrrSL2::Kind::kPS:
        case IrrSL2::Kind::kOmegaE:
          return 0;
        case IrrSL2::Kind::kCusp:
          return -(f.eval(r.chi, t.z) + f.eval(r.chi, f.frobenius(t.z)));
        case IrrSL2::Kind::kOmega0:
          return -f.eval(f.theta0(), t.z);
      }
      break;
  }
  return Cyc();
}

std::string to_string(const Field&, const IrrSL2& r) {
  const std::string s = r.sign > 0 ? "+" : "-";
  switch (r.kind) {
    case IrrSL2::Kind::kTriv:
      return "1";
    case IrrSL2::Kind::kSt:
      return "St";
    case IrrSL2::Kind::kPS:
      return "PS(" + std::to_string(r.chi.exponent) + ")";
    case IrrSL2::Kind::kCusp:
      return "rho(" + std::to_string(r.chi.exponent) + ")";
    case IrrSL2::Kind::kOmegaE:
      return "omega_e" + s;
    case IrrSL2::Kind::kOmega0:
      return "omega_0" + s;
  }
  return "?";
}

}  // namespace redchar
