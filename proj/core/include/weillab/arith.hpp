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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace weillab {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

// Largest field size accepted anywhere in the library. q^2 fits in i64 and
// every intermediate (b^2 - 2a^2q + 2q^2, quotient coefficients of the factor
// search) is evaluated in i128.
inline constexpr i64 kMaxQ = 1'000'000'000;

/// floor(sqrt(n)) for n >= 0, exact.
i64 isqrt_floor(i64 n);

/// floor(2*sqrt(q)) = isqrt_floor(4q).
i64 floor_2sqrt(i64 q);

/// ceil(sqrt(n)) for n >= 0.
i64 isqrt_ceil(i64 n);

/// Prime factorisation by trial division, primes ascending with exponents.
/// |n| is factored; n = 0 is rejected.
std::vector<std::pair<i64, int>> factorize(i64 n);

bool is_prime(i64 n);

struct PrimePower {
  i64 p;
  int r;
};

/// Returns (p, r) with q = p^r, or nullopt when q is not a prime power (q <= 1 included).
std::optional<PrimePower> prime_power_decomposition(i64 q);

struct SquarefreeDecomposition {
  i64 c;  // positive
  i64 d;  // squarefree, sign(d) = sign(n)
};

/// n = c^2 * d with d squarefree. n must be nonzero.
SquarefreeDecomposition squarefree_part(i64 n);

/// Remainder in [0, m) for m > 0.
constexpr i64 mod_floor(i64 n, i64 m) {
  i64 r = n % m;
  return r < 0 ? r + m : r;
}

i64 gcd(i64 a, i64 b);

}  // namespace weillab
