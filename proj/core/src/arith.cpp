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
#include "weillab/arith.hpp"

#include <cmath>
#include <cstdlib>

#include "weillab/error.hpp"

namespace weillab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::NotWeil: return "NotWeil";
    case ErrorCode::QTooLarge: return "QTooLarge";
    case ErrorCode::MalformedLabel: return "MalformedLabel";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

i64 isqrt_floor(i64 n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of negative number");
  auto x = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  // The floating estimate is off by at most one in either direction.
  while (static_cast<i128>(x) * x > n) --x;
  while (static_cast<i128>(x + 1) * (x + 1) <= n) ++x;
  return x;
}

i64 isqrt_ceil(i64 n) {
  i64 s = isqrt_floor(n);
  return s * s == n ? s : s + 1;
}

i64 floor_2sqrt(i64 q) {
  if (q < 0) throw Error(ErrorCode::InvalidArgument, "floor_2sqrt of negative number");
  return isqrt_floor(4 * q);
}

i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor 0");
  std::vector<std::pair<i64, int>> out;
  i64 m = n < 0 ? -n : n;
  for (i64 p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power_decomposition(i64 q) {
  if (q < 2) return std::nullopt;
  auto factors = factorize(q);
  if (factors.size() != 1) return std::nullopt;
  return PrimePower{factors.front().first, factors.front().second};
}

SquarefreeDecomposition squarefree_part(i64 n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "squarefree part of 0");
  i64 c = 1;
  i64 d = n < 0 ? -1 : 1;
  for (auto [p, e] : factorize(n)) {
    for (int i = 0; i < e / 2; ++i) c *= p;
    if (e % 2 == 1) d *= p;
  }
  return {c, d};
}

}  // namespace weillab
