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
#include "weillab/verdict.hpp"

#include <sstream>

#include "weillab/error.hpp"
#include "weillab/two_adic.hpp"

namespace weillab {

std::string_view to_string(VerdictRule rule) noexcept {
  switch (rule) {
    case VerdictRule::PirrAInert: return "PirrA-inert";
    case VerdictRule::PirrANonInert: return "PirrA-noninert";
    case VerdictRule::PirrBOrdinaryCoeff: return "PirrB-ordinary-coeff";
    case VerdictRule::PirrBSupersingularParity: return "PirrB-supersingular-parity";
    case VerdictRule::SpecialQ2: return "Special-Q2";
    case VerdictRule::SpecialQ3: return "Special-Q3";
  }
  return "?";
}

namespace {

void reject_outside(std::string_view op, const ClassKind& kind) {
  if (kind.family == Family::Outside) {
    throw Error(ErrorCode::WrongKind, std::string(op) + " is undefined for Outside classes");
  }
}

}  // namespace

bool degree4_polarisation_exists(const WeilQuartic& f, const ClassKind& kind) {
  if (kind.family == Family::PirrA) return splitting_2_in_Kplus(f) != Splitting::Inert;
  if (kind.family == Family::PirrB) {
    const bool odd_q = f.q % 2 == 1;
    if (p_rank_class(f, kind) == PRankClass::Ordinary) return !(f.b == 1 - 2 * f.q && odd_q);
    return odd_q;
  }
  throw Error(ErrorCode::WrongKind, "degree4_polarisation_exists requires PirrA or PirrB, got " +
                                        std::string(to_string(kind.family)));
}

Genus3Verdict genus3_verdict(const WeilQuartic& f, const ClassKind& kind) {
  reject_outside("genus3_verdict", kind);
  Genus3Verdict v;
  switch (kind.family) {
    case Family::SpecialQ2:
      v.genus3_curve_exists = false;
      v.rule = VerdictRule::SpecialQ2;
      v.notes.emplace_back("no absolutely irreducible curve of geometric genus 3 on any surface in the class");
      v.notes.emplace_back("deg4 polarisation undecided: settled by genus-3 Jacobian search");
      return v;
    case Family::SpecialQ3:
      v.genus3_curve_exists = true;
      v.rule = VerdictRule::SpecialQ3;
      v.notes.emplace_back("smooth genus-3 witness " + std::string(kSpecialQ3Witness));
      v.notes.emplace_back("deg4 polarisation undecided: settled by genus-3 Jacobian search");
      return v;
    default:
      break;
  }

  const bool exists = degree4_polarisation_exists(f, kind);
  const bool ordinary = p_rank_class(f, kind) == PRankClass::Ordinary;
  v.deg4_polarisation_exists = exists;
  v.genus3_curve_exists = exists;
  v.ordinary_max_ring_equivalent = ordinary;
  if (kind.family == Family::PirrA) {
    v.rule = exists ? VerdictRule::PirrANonInert : VerdictRule::PirrAInert;
  } else {
    v.rule = ordinary ? VerdictRule::PirrBOrdinaryCoeff : VerdictRule::PirrBSupersingularParity;
  }
  if (exists) {
    v.notes.emplace_back("some surface in the class contains an F_q-irreducible curve of arithmetic genus 3");
  }
  return v;
}

std::string NoSmallGenusCertificate::to_string() const {
  std::ostringstream os;
  if (clause == NoSmallGenusClause::A) {
    os << "cond-a:primes=";
    if (prime_divisors_of_b.empty()) os << "none";
    for (std::size_t i = 0; i < prime_divisors_of_b.size(); ++i) {
      if (i > 0) os << "/";
      os << prime_divisors_of_b[i];
    }
  } else {
    os << "cond-b:" << (b_pattern ? weillab::to_string(*b_pattern) : std::string_view("?"));
  }
  return os.str();
}

NoSmallGenusCertificate no_small_genus_certificate(const WeilQuartic& f, const ClassKind& kind) {
  reject_outside("no_small_genus_certificate", kind);
  NoSmallGenusCertificate cert;
  if (kind.family == Family::PirrA) {
    cert.clause = NoSmallGenusClause::A;
    for (auto [prime, e] : factorize(f.b)) {
      (void)e;
      cert.prime_divisors_of_b.push_back(prime);
    }
  } else {
    cert.clause = NoSmallGenusClause::B;
    cert.b_pattern = kind.b_case;
  }
  return cert;
}

std::string CurveConstraints::to_string() const {
  std::string out = no_genus_le2 ? "no-genus<=2[" + certificate.to_string() + "]" : "genus<=2-possible";
  if (!not_hyperelliptic) return out + ";curve-facts-not-asserted(p=2)";
  if (*not_hyperelliptic) out += ";not-hyperelliptic";
  if (bielliptic_plane_quartic_form.value_or(false)) out += ";bielliptic-plane-quartic";
  if (jacobian_splits_as_E_times_A.value_or(false)) out += ";jac~ExA";
  return out;
}

CurveConstraints curve_shape_constraints(const WeilQuartic& f, const ClassKind& kind) {
  reject_outside("curve_shape_constraints", kind);
  CurveConstraints out;
  out.no_genus_le2 = true;
  out.certificate = no_small_genus_certificate(f, kind);
  if (f.p > 2) {
    out.not_hyperelliptic = true;
    out.bielliptic_plane_quartic_form = true;
    out.jacobian_splits_as_E_times_A = true;
  }
  return out;
}

}  // namespace weillab
