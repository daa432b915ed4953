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

#include <vector>

#include "weillab/classify.hpp"
#include "weillab/error.hpp"

namespace weillab::testing {

inline std::vector<i64> prime_powers_upto(i64 n) {
  std::vector<i64> out;
  for (i64 q = 2; q <= n; ++q) {
    if (prime_power_decomposition(q)) out.push_back(q);
  }
  return out;
}

/// PirrA and PirrB members (specials excluded) for every prime power q <= n.
inline std::vector<ClassifiedQuartic> members_upto(i64 n) {
  std::vector<ClassifiedQuartic> out;
  for (i64 q : prime_powers_upto(n)) {
    for (auto& cls : enumerate_classes(q)) {
      if (cls.kind.in_family()) out.push_back(cls);
    }
  }
  return out;
}

template <class Fn>
ErrorCode error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace weillab::testing
