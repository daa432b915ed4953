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

#pragma once

#include <array>
#include <compare>
#include <string>

#include "weillab/arith.hpp"

namespace weillab {

/// The Weil polynomial t^4 + a t^3 + b t^2 + a q t + q^2 of an isogeny class of
/// abelian surfaces over F_q, q = p^r. Only make_weil_quartic builds validated
/// values; the aggregate stays public so records can be compared and copied.
struct WeilQuartic {
  i64 q = 0;
  i64 p = 0;
  int r = 0;
  i64 a = 0;
  i64 b = 0;

  /// Coefficients from t^4 down to t^0.
  std::array<i128, 5> coefficients() const;

  /// Human-readable polynomial, e.g. "t^4 - t^2 + 4".
  std::string to_string() const;

  friend bool operator==(const WeilQuartic&, const WeilQuartic&) = default;
  friend auto operator<=>(const WeilQuartic&, const WeilQuartic&) = default;
};

/// Exact Weil test for the quartic with parameters (q, a, b): both roots of
/// f+(t) = t^2 + a t + (b - 2q) real and inside [-2 sqrt q, 2 sqrt q].
bool satisfies_weil_bounds(i64 q, i64 a, i64 b);

/// Validates and builds. Throws Error{NotPrimePower | NotWeil | QTooLarge}.
WeilQuartic make_weil_quartic(i64 q, i64 a, i64 b);

/// True iff f has no monic integer factor of degree 1 or 2.
///
/// Linear factors are found with the rational-root test on the divisors of
/// q^2. Quadratic factors t^2 + u t + v are searched exhaustively over the
/// signed divisors v of q^2 and |u| <= 2 * ceil(2 sqrt q), each candidate tested
/// by exact division.
bool is_irreducible_over_Q(const WeilQuartic& f);

/// The p-adic Newton polygon of f has only the slopes an abelian surface can
/// have: ordinary (v(b) = 0), p-rank one (v(a) = 0, v(b) >= r/2) or
/// supersingular (v(a) >= r/2, v(b) >= r). Valuations are in p, q = p^r.
bool has_surface_newton_polygon(const WeilQuartic& f);

/// Weil polynomial of A x F_{q^2}: roots squared. Closed form
/// a2 = 2b - a^2, b2 = b^2 - 2a^2 q + 2q^2 over the base q^2.
/// Throws Error{QTooLarge} when q^2 > kMaxQ.
WeilQuartic base_change_quadratic(const WeilQuartic& f);

}  // namespace weillab
