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
#include "weillab/label.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "weillab/error.hpp"

namespace weillab {

namespace {

[[noreturn]] void malformed(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::MalformedLabel, "'" + std::string(text) + "': " + std::string(why));
}

std::string encode_magnitude(i64 value) {
  if (value == 0) return "a";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('a' + value % 26));
    value /= 26;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

i64 decode_magnitude(std::string_view text) {
  i64 value = 0;
  for (char ch : text) {
    if (ch < 'a' || ch > 'z') malformed(text, "coefficient digits must be a-z");
    if (value > (std::numeric_limits<i64>::max() - 25) / 26) malformed(text, "coefficient overflow");
    value = value * 26 + (ch - 'a');
  }
  return value;
}

}  // namespace

std::string encode_lmfdb_coefficient(i64 value) {
  if (value == std::numeric_limits<i64>::min()) {
    throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
  }
  return value < 0 ? "a" + encode_magnitude(-value) : encode_magnitude(value);
}

i64 decode_lmfdb_coefficient(std::string_view text) {
  if (text.empty()) malformed(text, "empty coefficient");
  if (text == "a") return 0;
  if (text.front() == 'a') {
    auto rest = text.substr(1);
    // "aa..." would be a negative zero or a padded magnitude.
    if (rest.front() == 'a') malformed(text, "non-canonical coefficient");
    return -decode_magnitude(rest);
  }
  return decode_magnitude(text);
}

std::string render_label(const WeilQuartic& f) {
  return "2." + std::to_string(f.q) + "." + encode_lmfdb_coefficient(f.a) + "_" +
         encode_lmfdb_coefficient(f.b);
}

WeilQuartic parse_label(std::string_view text) {
  const auto dot1 = text.find('.');
  if (dot1 == std::string_view::npos) malformed(text, "expected '2.<q>.<a>_<b>'");
  const auto dot2 = text.find('.', dot1 + 1);
  if (dot2 == std::string_view::npos) malformed(text, "expected '2.<q>.<a>_<b>'");
  if (text.find('.', dot2 + 1) != std::string_view::npos) malformed(text, "too many fields");

  if (text.substr(0, dot1) != "2") malformed(text, "dimension must be 2");

  const auto q_text = text.substr(dot1 + 1, dot2 - dot1 - 1);
  if (q_text.empty() || q_text.front() == '0') malformed(text, "bad field size");
  i64 q = 0;
  const auto [ptr, ec] = std::from_chars(q_text.data(), q_text.data() + q_text.size(), q);
  if (ec != std::errc{} || ptr != q_text.data() + q_text.size()) malformed(text, "bad field size");

  const auto coeffs = text.substr(dot2 + 1);
  const auto sep = coeffs.find('_');
  if (sep == std::string_view::npos) malformed(text, "expected two coefficients");
  if (coeffs.find('_', sep + 1) != std::string_view::npos) malformed(text, "expected two coefficients");

  const i64 a = decode_lmfdb_coefficient(coeffs.substr(0, sep));
  const i64 b = decode_lmfdb_coefficient(coeffs.substr(sep + 1));
  return make_weil_quartic(q, a, b);
}

}  // namespace weillab
