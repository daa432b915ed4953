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

#include "weillab/classify.hpp"

namespace weillab {

/// Which clause decided the genus-3 verdict.
enum class VerdictRule {
  PirrAInert,
  PirrANonInert,
  PirrBOrdinaryCoeff,
  PirrBSupersingularParity,
  SpecialQ2,
  SpecialQ3,
};

std::string_view to_string(VerdictRule rule) noexcept;

inline constexpr std::string_view kSpecialQ3Witness = "y^4+xz^3+2x^3z";

/// Class-level verdict: does some surface in the isogeny class carry a
/// degree-4 polarisation, equivalently an F_q-irreducible curve of arithmetic
/// genus 3. For the two special classes the polarisation field is empty; they
/// are decided by searches among Jacobians of genus-3 curves instead.
struct Genus3Verdict {
  std::optional<bool> deg4_polarisation_exists;
  bool genus3_curve_exists = false;
  VerdictRule rule = VerdictRule::PirrAInert;
  bool ordinary_max_ring_equivalent = false;
  std::vector<std::string> notes;
};

/// Throws WrongKind outside PirrA and PirrB.
bool degree4_polarisation_exists(const WeilQuartic& f, const ClassKind& kind);

/// Throws WrongKind for Outside.
Genus3Verdict genus3_verdict(const WeilQuartic& f, const ClassKind& kind);

enum class NoSmallGenusClause { A, B };

struct NoSmallGenusCertificate {
  NoSmallGenusClause clause = NoSmallGenusClause::A;
  std::vector<i64> prime_divisors_of_b;  // clause A
  std::optional<BCase> b_pattern;        // clause B

  std::string to_string() const;
};

/// Throws WrongKind for Outside.
NoSmallGenusCertificate no_small_genus_certificate(const WeilQuartic& f, const ClassKind& kind);

/// Facts about a smooth genus-3 curve lying on a surface of the class. The
/// three curve facts are only known in odd characteristic; for p = 2 they are
/// empty (not asserted).
struct CurveConstraints {
  bool no_genus_le2 = false;
  NoSmallGenusCertificate certificate;
  std::optional<bool> not_hyperelliptic;
  std::optional<bool> bielliptic_plane_quartic_form;
  std::optional<bool> jacobian_splits_as_E_times_A;

  std::string to_string() const;
};

/// Throws WrongKind for Outside.
CurveConstraints curve_shape_constraints(const WeilQuartic& f, const ClassKind& kind);

}  // namespace weillab
