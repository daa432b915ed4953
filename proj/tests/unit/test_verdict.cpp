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
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "weillab/two_adic.hpp"
#include "weillab/verdict.hpp"

namespace weillab {
namespace {

using testing::error_code_of;
using testing::members_upto;

struct Member {
  WeilQuartic f;
  ClassKind kind;
};

Member member(i64 q, i64 a, i64 b) {
  const WeilQuartic f = make_weil_quartic(q, a, b);
  return {f, classify(f)};
}

bool deg4(i64 q, i64 a, i64 b) {
  const auto m = member(q, a, b);
  return degree4_polarisation_exists(m.f, m.kind);
}

TEST(Degree4, Examples) {
  EXPECT_FALSE(deg4(8, 1, -7));
  EXPECT_FALSE(deg4(7, 0, -13));
  EXPECT_TRUE(deg4(7, 0, -12));
  EXPECT_FALSE(deg4(2, 0, -2));
  EXPECT_TRUE(deg4(9, 0, -9));
  EXPECT_TRUE(deg4(5, 2, -1));
  EXPECT_TRUE(deg4(2, 0, -3));
  const auto s = member(2, 0, -4);
  EXPECT_EQ(error_code_of([&] { degree4_polarisation_exists(s.f, s.kind); }), ErrorCode::WrongKind);
}

TEST(Genus3Verdict, SpecialClasses) {
  auto m = member(2, 0, -4);
  auto v = genus3_verdict(m.f, m.kind);
  EXPECT_FALSE(v.genus3_curve_exists);
  EXPECT_FALSE(v.deg4_polarisation_exists.has_value());
  EXPECT_EQ(v.rule, VerdictRule::SpecialQ2);

  m = member(3, 0, -6);
  v = genus3_verdict(m.f, m.kind);
  EXPECT_TRUE(v.genus3_curve_exists);
  EXPECT_FALSE(v.deg4_polarisation_exists.has_value());
  EXPECT_EQ(v.rule, VerdictRule::SpecialQ3);
  bool witness = false;
  for (const auto& n : v.notes) witness |= n.find("y^4+xz^3+2x^3z") != std::string::npos;
  EXPECT_TRUE(witness);
}

TEST(Genus3Verdict, Families) {
  auto m = member(5, 2, -1);
  auto v = genus3_verdict(m.f, m.kind);
  EXPECT_TRUE(v.genus3_curve_exists);
  EXPECT_EQ(v.deg4_polarisation_exists, true);
  EXPECT_EQ(v.rule, VerdictRule::PirrANonInert);
  EXPECT_TRUE(v.ordinary_max_ring_equivalent);

  m = member(8, 1, -7);
  v = genus3_verdict(m.f, m.kind);
  EXPECT_FALSE(v.genus3_curve_exists);
  EXPECT_EQ(v.rule, VerdictRule::PirrAInert);

  m = member(7, 0, -13);
  EXPECT_EQ(genus3_verdict(m.f, m.kind).rule, VerdictRule::PirrBOrdinaryCoeff);

  m = member(2, 0, -2);
  v = genus3_verdict(m.f, m.kind);
  EXPECT_EQ(v.rule, VerdictRule::PirrBSupersingularParity);
  EXPECT_FALSE(v.ordinary_max_ring_equivalent);

  m = member(2, 0, -1);
  EXPECT_EQ(error_code_of([&] { genus3_verdict(m.f, m.kind); }), ErrorCode::WrongKind);
}

TEST(Certificate, Clauses) {
  auto m = member(8, 1, -7);
  auto c = no_small_genus_certificate(m.f, m.kind);
  EXPECT_EQ(c.clause, NoSmallGenusClause::A);
  EXPECT_EQ(c.prime_divisors_of_b, std::vector<i64>{7});
  EXPECT_EQ(c.to_string(), "cond-a:primes=7");

  m = member(2, 1, -1);
  EXPECT_EQ(no_small_genus_certificate(m.f, m.kind).to_string(), "cond-a:primes=none");

  m = member(7, 0, -13);
  c = no_small_genus_certificate(m.f, m.kind);
  EXPECT_EQ(c.clause, NoSmallGenusClause::B);
  EXPECT_EQ(c.b_pattern, BCase::OneMinusTwoQ);
  EXPECT_EQ(c.to_string(), "cond-b:b=1-2q");

  m = member(2, 0, -4);
  c = no_small_genus_certificate(m.f, m.kind);
  EXPECT_EQ(c.clause, NoSmallGenusClause::B);
  EXPECT_EQ(c.b_pattern, BCase::Q2BMinus4);

  m = member(13, 0, -11);
  EXPECT_EQ(error_code_of([&] { no_small_genus_certificate(m.f, m.kind); }), ErrorCode::WrongKind);
}

TEST(CurveConstraints, OddAndEvenCharacteristic) {
  auto m = member(9, 0, -9);
  auto cc = curve_shape_constraints(m.f, m.kind);
  EXPECT_TRUE(cc.no_genus_le2);
  EXPECT_EQ(cc.not_hyperelliptic, true);
  EXPECT_EQ(cc.bielliptic_plane_quartic_form, true);

  m = member(8, 1, -7);
  cc = curve_shape_constraints(m.f, m.kind);
  EXPECT_FALSE(cc.not_hyperelliptic.has_value());
  EXPECT_FALSE(cc.bielliptic_plane_quartic_form.has_value());
  EXPECT_FALSE(cc.jacobian_splits_as_E_times_A.has_value());
  EXPECT_EQ(cc.to_string(), "no-genus<=2[cond-a:primes=7];curve-facts-not-asserted(p=2)");

  m = member(5, 2, -1);
  cc = curve_shape_constraints(m.f, m.kind);
  EXPECT_EQ(cc.not_hyperelliptic, true);
  EXPECT_EQ(cc.bielliptic_plane_quartic_form, true);
  EXPECT_EQ(cc.jacobian_splits_as_E_times_A, true);

  m = member(2, 0, -1);
  EXPECT_EQ(error_code_of([&] { curve_shape_constraints(m.f, m.kind); }), ErrorCode::WrongKind);
}

TEST(VerdictSweep, EvenQPirrAHasNoGenus3) {
  int n = 0;
  for (const auto& m : members_upto(512)) {
    if (m.kind.family != Family::PirrA || m.f.q % 2 != 0) continue;
    ++n;
    EXPECT_FALSE(genus3_verdict(m.f, m.kind).genus3_curve_exists) << m.f.to_string();
  }
  EXPECT_GT(n, 10);
}

TEST(VerdictSweep, MatchesCoefficientOracle) {
  for (const auto& m : members_upto(512)) {
    EXPECT_EQ(genus3_verdict(m.f, m.kind).genus3_curve_exists, oracle::genus3_exists(m.f.q, m.f.a, m.f.b))
        << m.f.to_string();
  }
}

TEST(VerdictSweep, GenusThreeEqualsDegreeFour) {
  for (const auto& m : members_upto(200)) {
    const auto v = genus3_verdict(m.f, m.kind);
    ASSERT_TRUE(v.deg4_polarisation_exists.has_value());
    EXPECT_EQ(*v.deg4_polarisation_exists, v.genus3_curve_exists);
    EXPECT_EQ(v.ordinary_max_ring_equivalent, p_rank_class(m.f, m.kind) == PRankClass::Ordinary);
  }
}

TEST(VerdictSweep, OrdinaryWeilRestrictionsFailExactlyOnInertBranch) {
  for (const auto& m : members_upto(200)) {
    if (m.kind.family != Family::PirrB || p_rank_class(m.f, m.kind) != PRankClass::Ordinary) continue;
    const Shape2 s = shape_2_in_K(m.f, m.kind);
    const bool inert_branch = s.primes == std::vector<PrimeShape>{{2, 2, 1}};
    EXPECT_EQ(!degree4_polarisation_exists(m.f, m.kind), inert_branch) << m.f.to_string();
  }
}

TEST(VerdictSweep, Deterministic) {
  const auto first = members_upto(128);
  const auto second = members_upto(128);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    const auto v1 = genus3_verdict(first[i].f, first[i].kind);
    const auto v2 = genus3_verdict(second[i].f, second[i].kind);
    EXPECT_EQ(v1.genus3_curve_exists, v2.genus3_curve_exists);
    EXPECT_EQ(v1.rule, v2.rule);
    EXPECT_EQ(v1.notes, v2.notes);
  }
}

}  // namespace
}  // namespace weillab
