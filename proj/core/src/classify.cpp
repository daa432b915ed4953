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
#include "weillab/classify.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "weillab/error.hpp"

namespace weillab {

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::PirrA: return "PirrA";
    case Family::PirrB: return "PirrB";
    case Family::SpecialQ2: return "SpecialQ2";
    case Family::SpecialQ3: return "SpecialQ3";
    case Family::Outside: return "Outside";
  }
  return "?";
}

std::string_view to_string(BCase b_case) noexcept {
  switch (b_case) {
    case BCase::OneMinusTwoQ: return "b=1-2q";
    case BCase::TwoMinusTwoQ: return "b=2-2q";
    case BCase::MinusQ_P11Mod12: return "b=-q,p=11mod12,q-square";
    case BCase::MinusQ_P3: return "b=-q,p=3,q-square";
    case BCase::MinusQ_P2Nonsquare: return "b=-q,p=2,q-nonsquare";
    case BCase::Q2BMinus4: return "q=2,b=-4";
    case BCase::Q3BMinus6: return "q=3,b=-6";
  }
  return "?";
}

std::string_view to_string(PRankClass p_rank) noexcept {
  return p_rank == PRankClass::Ordinary ? "ordinary" : "supersingular";
}

namespace {

// Empty string when condition (a) holds, otherwise the first failing test.
std::string_view condition_a_failure(const WeilQuartic& f) {
  if (static_cast<i128>(f.a) * f.a - f.b != f.q) return outside_reason::kASquareMinusBNotQ;
  if (f.b >= 0) return outside_reason::kBNonNegative;
  for (auto [prime, e] : factorize(f.b)) {
    (void)e;
    if (prime % 3 != 1) return outside_reason::kBPrimeNotOneMod3;
  }
  return {};
}

[[noreturn]] void wrong_kind(std::string_view op, const ClassKind& kind) {
  throw Error(ErrorCode::WrongKind,
              std::string(op) + " requires PirrA or PirrB, got " + std::string(to_string(kind.family)));
}

}  // namespace

bool matches_condition_a(const WeilQuartic& f) { return condition_a_failure(f).empty(); }

std::optional<BCase> match_condition_b(const WeilQuartic& f) {
  if (f.a != 0) return std::nullopt;
  const bool q_square = f.r % 2 == 0;
  if (f.b == 1 - 2 * f.q) return BCase::OneMinusTwoQ;
  if (f.b == 2 - 2 * f.q && f.p > 2) return BCase::TwoMinusTwoQ;
  if (f.b == -f.q) {
    if (q_square && f.p % 12 == 11) return BCase::MinusQ_P11Mod12;
    if (q_square && f.p == 3) return BCase::MinusQ_P3;
    if (!q_square && f.p == 2) return BCase::MinusQ_P2Nonsquare;
  }
  if (f.q == 2 && f.b == -4) return BCase::Q2BMinus4;
  if (f.q == 3 && f.b == -6) return BCase::Q3BMinus6;
  return std::nullopt;
}

ClassKind classify(const WeilQuartic& f) {
  const auto a_failure = condition_a_failure(f);
  const bool cond_a = a_failure.empty();
  const auto cond_b = match_condition_b(f);

  if (cond_a && cond_b) {
    throw Error(ErrorCode::Internal, "conditions (a) and (b) both hold for " + f.to_string());
  }
  if (!cond_a && !cond_b) {
    ClassKind out;
    out.reason = std::string(a_failure) + "+" +
                 std::string(f.a != 0 ? outside_reason::kANonZero : outside_reason::kBNotListed);
    return out;
  }

  if (!has_surface_newton_polygon(f)) {
    return ClassKind{Family::Outside, std::nullopt, std::string(outside_reason::kNonSurfacePolygon)};
  }
  if (is_irreducible_over_Q(f)) {
    if (cond_a) return ClassKind{Family::PirrA, std::nullopt, {}};
    return ClassKind{Family::PirrB, cond_b, {}};
  }
  if (f.q == 2 && f.a == 0 && f.b == -4) return ClassKind{Family::SpecialQ2, cond_b, {}};
  if (f.q == 3 && f.a == 0 && f.b == -6) return ClassKind{Family::SpecialQ3, cond_b, {}};
  return ClassKind{Family::Outside, std::nullopt, std::string(outside_reason::kReducibleMatch)};
}

std::vector<ClassifiedQuartic> enumerate_classes(i64 q) {
  if (q > kMaxQ) throw Error(ErrorCode::QTooLarge, "q=" + std::to_string(q));
  if (!prime_power_decomposition(q)) throw Error(ErrorCode::NotPrimePower, "q=" + std::to_string(q));

  std::set<std::pair<i64, i64>> candidates;
  // Condition (a): b = a^2 - q < 0.
  for (i64 a = 0; a * a < q; ++a) {
    candidates.emplace(a, a * a - q);
    candidates.emplace(-a, a * a - q);
  }
  // Condition (b): a = 0 and b from the finite list.
  for (i64 b : {1 - 2 * q, 2 - 2 * q, -q}) candidates.emplace(0, b);
  if (q == 2) candidates.emplace(0, -4);
  if (q == 3) candidates.emplace(0, -6);

  std::vector<ClassifiedQuartic> out;
  for (auto [a, b] : candidates) {
    if (!satisfies_weil_bounds(q, a, b)) continue;
    WeilQuartic f = make_weil_quartic(q, a, b);
    ClassKind kind = classify(f);
    if (kind.family == Family::Outside) continue;
    out.push_back({f, std::move(kind)});
  }
  return out;
}

PRankClass p_rank_class(const WeilQuartic& f, const ClassKind& kind) {
  switch (kind.family) {
    case Family::PirrA:
      return f.a != 0 ? PRankClass::Ordinary : PRankClass::Supersingular;
    case Family::PirrB:
      if (f.b == 1 - 2 * f.q || (f.b == 2 - 2 * f.q && f.p > 2)) return PRankClass::Ordinary;
      return PRankClass::Supersingular;
    default:
      wrong_kind("p_rank_class", kind);
  }
}

bool is_ordinary_by_gcd(const WeilQuartic& f) { return gcd(f.b, f.p) == 1; }

bool galois_metadata(const WeilQuartic& /*f*/, const ClassKind& kind) {
  if (!kind.in_family()) wrong_kind("galois_metadata", kind);
  return true;
}

}  // namespace weillab
