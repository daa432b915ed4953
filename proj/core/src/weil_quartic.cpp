// Copyright 2026 The weillab Authors
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
#include "weillab/weil_quartic.hpp"

#include <limits>
#include <sstream>

#include "weillab/error.hpp"

namespace weillab {

namespace {

std::string describe(i64 q, i64 a, i64 b) {
  std::ostringstream os;
  os << "q=" << q << " a=" << a << " b=" << b;
  return os.str();
}

i128 eval(const std::array<i128, 5>& c, i128 x) {
  i128 acc = 0;
  for (i128 coeff : c) acc = acc * x + coeff;
  return acc;
}

// v_p(n), with v_p(0) = INT_MAX.
int valuation(i64 n, i64 p) {
  if (n == 0) return std::numeric_limits<int>::max();
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

std::array<i128, 5> WeilQuartic::coefficients() const {
  return {1, a, b, static_cast<i128>(a) * q, static_cast<i128>(q) * q};
}

std::string WeilQuartic::to_string() const {
  std::ostringstream os;
  os << "t^4";
  auto term = [&os](i128 coeff, const char* mono) {
    if (coeff == 0) return;
    os << (coeff < 0 ? " - " : " + ");
    i128 mag = coeff < 0 ? -coeff : coeff;
    bool has_mono = mono[0] != '\0';
    if (mag != 1 || !has_mono) os << static_cast<long long>(mag);
    os << mono;
  };
  auto c = coefficients();
  term(c[1], "t^3");
  term(c[2], "t^2");
  term(c[3], "t");
  term(c[4], "");
  return os.str();
}

bool satisfies_weil_bounds(i64 q, i64 a, i64 b) {
  const i128 a2 = static_cast<i128>(a) * a;
  const i128 Q = q;
  if (a2 > 16 * Q) return false;
  const i128 s = 2 * Q + b;
  if (s < 0) return false;
  if (s * s < 4 * a2 * Q) return false;
  return a2 - 4 * static_cast<i128>(b) + 8 * Q >= 0;
}

WeilQuartic make_weil_quartic(i64 q, i64 a, i64 b) {
  if (q > kMaxQ) throw Error(ErrorCode::QTooLarge, describe(q, a, b));
  auto pp = prime_power_decomposition(q);
  if (!pp) throw Error(ErrorCode::NotPrimePower, "q=" + std::to_string(q));
  if (!satisfies_weil_bounds(q, a, b)) throw Error(ErrorCode::NotWeil, describe(q, a, b));
  return WeilQuartic{q, pp->p, pp->r, a, b};
}

bool is_irreducible_over_Q(const WeilQuartic& f) {
  const auto c = f.coefficients();
  const i128 q2 = c[4];

  std::vector<i128> divisors;
  {
    i128 d = 1;
    for (int i = 0; i <= 2 * f.r; ++i) {
      divisors.push_back(d);
      d *= f.p;
    }
  }

  for (i128 d : divisors) {
    if (eval(c, d) == 0 || eval(c, -d) == 0) return false;
  }

  // (t^2 + u t + v)(t^2 + u' t + w) = f: u' = a - u, w = b - v - u u',
  // remaining checks on the t^1 and t^0 coefficients.
  const i64 u_bound = 2 * isqrt_ceil(4 * f.q);
  for (i128 d : divisors) {
    for (i128 v : {d, -d}) {
      const i128 w = q2 / v;
      for (i128 u = -u_bound; u <= u_bound; ++u) {
        const i128 u2 = f.a - u;
        if (v + w + u * u2 != f.b) continue;
        if (u * w + u2 * v != c[3]) continue;
        return false;
      }
    }
  }
  return true;
}

WeilQuartic base_change_quadratic(const WeilQuartic& f) {
  if (static_cast<i128>(f.q) * f.q > kMaxQ) {
    throw Error(ErrorCode::QTooLarge, "base change of q=" + std::to_string(f.q));
  }
  const i128 q = f.q;
  const i128 a = f.a;
  const i128 b = f.b;
  const i128 a2 = 2 * b - a * a;
  const i128 b2 = b * b - 2 * a * a * q + 2 * q * q;
  return WeilQuartic{f.q * f.q, f.p, 2 * f.r, static_cast<i64>(a2), static_cast<i64>(b2)};
}

bool has_surface_newton_polygon(const WeilQuartic& f) {
  const int va = valuation(f.a, f.p);
  const int vb = valuation(f.b, f.p);
  if (vb == 0) return true;
  if (va == 0) return 2 * static_cast<i64>(vb) >= f.r;
  return 2 * static_cast<i64>(va) >= f.r && vb >= f.r;
}

}  // namespace weillab
