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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weillab/weil_quartic.hpp"

namespace weillab {

/// Isogeny classes of abelian surfaces with no absolutely irreducible curve of
/// geometric genus <= 2 are partitioned into two families of irreducible
/// Weil polynomials and two exceptional squares:
///
///   PirrA      a^2 - b = q, b < 0, every prime dividing b is 1 mod 3
///              (not isogenous to a principally polarised surface)
///   PirrB      a = 0 and b in a finite list (Weil restrictions)
///   SpecialQ2  (t^2 - 2)^2
///   SpecialQ3  (t^2 - 3)^2
///
/// Everything else is Outside, including coefficient matches whose Newton
/// polygon is not that of an abelian surface (first at q = 7^4, a = -42).
enum class Family { PirrA, PirrB, SpecialQ2, SpecialQ3, Outside };

/// Which row of the Weil-restriction list matched.
enum class BCase {
  OneMinusTwoQ,        // b = 1 - 2q
  TwoMinusTwoQ,        // b = 2 - 2q, p > 2
  MinusQ_P11Mod12,     // b = -q, p = 11 mod 12, q square
  MinusQ_P3,           // b = -q, p = 3, q square
  MinusQ_P2Nonsquare,  // b = -q, p = 2, q nonsquare
  Q2BMinus4,           // q = 2, b = -4
  Q3BMinus6,           // q = 3, b = -6
};

std::string_view to_string(Family family) noexcept;
std::string_view to_string(BCase b_case) noexcept;

struct ClassKind {
  Family family = Family::Outside;
  std::optional<BCase> b_case;  // set for PirrB and the two specials
  std::string reason;           // set for Outside

  bool in_family() const { return family == Family::PirrA || family == Family::PirrB; }
  bool is_special() const { return family == Family::SpecialQ2 || family == Family::SpecialQ3; }

  friend bool operator==(const ClassKind&, const ClassKind&) = default;
};

enum class PRankClass { Ordinary, Supersingular };

std::string_view to_string(PRankClass p_rank) noexcept;

/// Condition (a) on the coefficients, without irreducibility.
bool matches_condition_a(const WeilQuartic& f);

/// Condition (b) on the coefficients, without irreducibility. Returns the
/// first matching row of the list.
std::optional<BCase> match_condition_b(const WeilQuartic& f);

/// Outside reasons. Stable strings meant for machine consumption.
namespace outside_reason {
inline constexpr std::string_view kASquareMinusBNotQ = "a2-minus-b-ne-q";
inline constexpr std::string_view kBNonNegative = "b-nonnegative";
inline constexpr std::string_view kBPrimeNotOneMod3 = "b-prime-not-1-mod-3";
inline constexpr std::string_view kANonZero = "a-nonzero";
inline constexpr std::string_view kBNotListed = "b-not-listed";
inline constexpr std::string_view kReducibleMatch = "reducible-family-match";
inline constexpr std::string_view kNonSurfacePolygon = "non-surface-newton-polygon";
}  // namespace outside_reason

ClassKind classify(const WeilQuartic& f);

struct ClassifiedQuartic {
  WeilQuartic f;
  ClassKind kind;
};

/// All PirrA, PirrB and special classes at q, sorted by (a, b).
/// Throws Error{NotPrimePower | QTooLarge}.
std::vector<ClassifiedQuartic> enumerate_classes(i64 q);

/// Ordinary/supersingular for PirrA and PirrB. Throws Error{WrongKind}.
PRankClass p_rank_class(const WeilQuartic& f, const ClassKind& kind);

/// Ordinary in the general sense: the middle coefficient b is prime to p.
bool is_ordinary_by_gcd(const WeilQuartic& f);

/// Q[t]/f(t) is Galois for every member of PirrA and PirrB. This is recorded,
/// not computed. Throws Error{WrongKind} for specials and Outside.
bool galois_metadata(const WeilQuartic& f, const ClassKind& kind);

}  // namespace weillab
