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
#include "weillab/bounds.hpp"

#include <algorithm>

#include "weillab/error.hpp"

namespace weillab {

std::string_view to_string(BoundFamily family) noexcept {
  switch (family) {
    case BoundFamily::General: return "general";
    case BoundFamily::WeilRestriction: return "wres";
    case BoundFamily::NonPP: return "nonpp";
    case BoundFamily::NonPPExact: return "nonpp-exact";
    case BoundFamily::SerreWeil: return "serre";
  }
  return "?";
}

namespace {

void require_prime_power(i64 q) {
  if (q > kMaxQ) throw Error(ErrorCode::QTooLarge, "q=" + std::to_string(q));
  if (!prime_power_decomposition(q)) {
    throw Error(ErrorCode::InvalidArgument, "q=" + std::to_string(q) + " is not a prime power");
  }
}

PointBounds make_bounds(i64 center, i64 radius, BoundFamily family, i64 genus) {
  PointBounds out;
  out.center = center;
  out.radius = radius;
  out.raw_lo = center - radius;
  out.lo = std::max<i64>(0, out.raw_lo);
  out.hi = center + radius;
  out.family = family;
  out.genus = genus;
  return out;
}

}  // namespace

PointBounds genus_bounds_on_surface(i64 q, i64 a, i64 p_a) {
  require_prime_power(q);
  if (p_a < 1) throw Error(ErrorCode::InvalidArgument, "arithmetic genus must be >= 1");
  const i64 spread = p_a >= 2 ? p_a - 2 : 2 - p_a;
  return make_bounds(q + 1 + a, spread * floor_2sqrt(q), BoundFamily::General, p_a);
}

PointBounds weil_restriction_bounds(i64 q) {
  require_prime_power(q);
  return make_bounds(q + 1, floor_2sqrt(q), BoundFamily::WeilRestriction, 3);
}

PointBounds non_pp_bounds(i64 q) {
  require_prime_power(q);
  return make_bounds(q + 1, 2 * floor_2sqrt(q), BoundFamily::NonPP, 3);
}

PointBounds non_pp_bounds_exact(i64 q, i64 b) {
  require_prime_power(q);
  if (q - b < 0) throw Error(ErrorCode::InvalidArgument, "q - b must be non-negative");
  return make_bounds(q + 1, isqrt_ceil(q - b) + floor_2sqrt(q), BoundFamily::NonPPExact, 3);
}

PointBounds serre_weil_interval(i64 q, i64 g) {
  require_prime_power(q);
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "genus must be >= 0");
  return make_bounds(q + 1, g * floor_2sqrt(q), BoundFamily::SerreWeil, g);
}

}  // namespace weillab
