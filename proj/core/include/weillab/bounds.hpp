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

#include <string>
#include <string_view>

#include "weillab/arith.hpp"

namespace weillab {

enum class BoundFamily {
  General,          // |#C - (q+1+a)| <= |p_a - 2| floor(2 sqrt q)
  WeilRestriction,  // zero trace, p_a = 3
  NonPP,            // q + 1 +- 2 floor(2 sqrt q)
  NonPPExact,       // q + 1 +- (ceil sqrt(q - b) + floor(2 sqrt q))
  SerreWeil,        // q + 1 +- g floor(2 sqrt q)
};

std::string_view to_string(BoundFamily family) noexcept;

/// Closed interval for #C(F_q). lo is clamped at 0; raw_lo keeps the unclamped
/// value center - radius.
struct PointBounds {
  i64 lo = 0;
  i64 hi = 0;
  i64 center = 0;
  i64 radius = 0;
  i64 raw_lo = 0;
  BoundFamily family = BoundFamily::General;
  i64 genus = 0;  // p_a for General, g for SerreWeil, 3 otherwise

  bool contains(const PointBounds& other) const { return lo <= other.lo && other.hi <= hi; }
};

/// Curves of arithmetic genus p_a >= 1 on a surface with trace -a.
/// Throws Error{InvalidArgument} for a q that is not a prime power or p_a < 1.
PointBounds genus_bounds_on_surface(i64 q, i64 a, i64 p_a);

PointBounds weil_restriction_bounds(i64 q);
PointBounds non_pp_bounds(i64 q);

/// Requires q - b >= 0.
PointBounds non_pp_bounds_exact(i64 q, i64 b);

/// Requires g >= 0.
PointBounds serre_weil_interval(i64 q, i64 g);

/// Irreducible but not absolutely irreducible curves have at most p_a - 1 points.
inline constexpr std::string_view kNonAbsIrreducibleNote =
    "F_q-irreducible, not absolutely irreducible curves have at most p_a - 1 rational points";

}  // namespace weillab
