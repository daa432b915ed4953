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

#include "weillab/weil_quartic.hpp"

namespace weillab {

// LMFDB-style isogeny labels "2.<q>.<a>_<b>" where each coefficient is written
// in base 26 with digits a..z and negative values carry a leading 'a'.

std::string encode_lmfdb_coefficient(i64 value);

/// Throws Error{MalformedLabel} on anything that encode_lmfdb_coefficient
/// could not have produced.
i64 decode_lmfdb_coefficient(std::string_view text);

std::string render_label(const WeilQuartic& f);

/// Parses and validates. Throws MalformedLabel for syntax errors and the
/// make_weil_quartic errors for well-formed labels of invalid polynomials.
WeilQuartic parse_label(std::string_view text);

}  // namespace weillab
