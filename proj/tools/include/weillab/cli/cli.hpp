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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weillab/cli/record.hpp"

namespace weillab::cli {

inline constexpr i64 kDefaultSafeBound = 1'000'000;

/// Guard on q: --safe-bound if given, else WEILLAB_SAFE_BOUND, else the default.
/// Throws Error{InvalidArgument} for unparsable or out-of-range values.
i64 resolve_safe_bound(std::optional<i64> flag, const char* env_value);

/// Prime powers in [lo, hi] in increasing order.
std::vector<i64> prime_powers_in_range(i64 lo, i64 hi);

/// Records for every class at every prime power in [q_min, q_max], in (q, a, b)
/// order regardless of the worker count.
std::vector<ClassRecord> enumerate_records(i64 q_min, i64 q_max, unsigned threads);

struct Summary {
  std::int64_t total = 0;
  std::int64_t pirr_a = 0;
  std::int64_t pirr_b = 0;
  std::int64_t special_q2 = 0;
  std::int64_t special_q3 = 0;
  std::int64_t genus3 = 0;
  std::int64_t no_genus3 = 0;
  std::string to_string() const;
};

Summary summarise(const std::vector<ClassRecord>& records);

/// Full command line; returns the process exit code
/// (0 success, 1 invalid input, 2 internal invariant violation).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weillab::cli
