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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weillab/classify.hpp"

namespace weillab::cli {

/// One output row. Column order is fixed and shared by the CSV header and the
/// JSON key order:
///
///   q p r a b label class_kind b_case ordinary irreducible fplus_disc c d
///   split2_Kplus K_over_Kplus_ramified shape2_K deg4_polarisation
///   genus3_exists rule curve_constraints notes
///
/// Empty optionals are JSON null and empty CSV cells.
struct ClassRecord {
  i64 q = 0;
  i64 p = 0;
  int r = 0;
  i64 a = 0;
  i64 b = 0;
  std::string label;
  std::string class_kind;
  std::optional<std::string> b_case;
  std::optional<bool> ordinary;
  bool irreducible = false;
  i64 fplus_disc = 0;
  std::optional<i64> c;
  std::optional<i64> d;
  std::optional<std::string> split2_Kplus;
  std::optional<bool> K_over_Kplus_ramified;
  std::optional<std::string> shape2_K;
  std::optional<bool> deg4_polarisation;
  std::optional<bool> genus3_exists;
  std::optional<std::string> rule;
  std::optional<std::string> curve_constraints;
  std::string notes;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

inline constexpr std::array<std::string_view, 21> kColumns = {
    "q",
    "p",
    "r",
    "a",
    "b",
    "label",
    "class_kind",
    "b_case",
    "ordinary",
    "irreducible",
    "fplus_disc",
    "c",
    "d",
    "split2_Kplus",
    "K_over_Kplus_ramified",
    "shape2_K",
    "deg4_polarisation",
    "genus3_exists",
    "rule",
    "curve_constraints",
    "notes",
};

/// Full record for a validated quartic. Throws Error{Internal} when the
/// ordinary/supersingular split disagrees with gcd(b, p).
ClassRecord make_record(const WeilQuartic& f, const ClassKind& kind);
ClassRecord make_record(const WeilQuartic& f);

/// Compact single line when indent < 0, pretty-printed otherwise.
std::string to_json(const ClassRecord& rec, int indent = -1);
ClassRecord record_from_json(std::string_view text);

std::string csv_header();
std::string to_csv_row(const ClassRecord& rec);
/// Splits one RFC-4180 record (no trailing newline).
std::vector<std::string> split_csv_row(std::string_view line);
ClassRecord record_from_csv(std::string_view line);

std::string table_header();
std::string to_table_row(const ClassRecord& rec);

}  // namespace weillab::cli
