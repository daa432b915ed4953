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
#include "weillab/two_adic.hpp"

#include <sstream>

#include "weillab/error.hpp"

namespace weillab {

std::string_view to_string(Splitting s) noexcept {
  switch (s) {
    case Splitting::Split: return "split";
    case Splitting::Inert: return "inert";
    case Splitting::Ramified: return "ramified";
  }
  return "?";
}

std::string_view to_string(Conjugation c) noexcept {
  switch (c) {
    case Conjugation::ConjugatePair: return "pair";
    case Conjugation::EachSelfConjugate: return "self";
    case Conjugation::SingleSelfConjugate: return "single";
  }
  return "?";
}

int Shape2::degree_sum() const {
  int sum = 0;
  for (const auto& prime : primes) sum += prime.e * prime.f_res * prime.multiplicity;
  return sum;
}

std::string Shape2::to_string() const {
  std::ostringstream os;
  int count = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i > 0) os << ",";
    os << "e" << primes[i].e << "f" << primes[i].f_res;
    if (primes[i].multiplicity > 1) os << "x" << primes[i].multiplicity;
    count += primes[i].multiplicity;
  }
  if (count > 1) os << ":" << weillab::to_string(conjugation);
  return os.str();
}

namespace {

void require_family(std::string_view op, const ClassKind& kind) {
  if (!kind.in_family()) {
    throw Error(ErrorCode::WrongKind,
                std::string(op) + " requires PirrA or PirrB, got " + std::string(to_string(kind.family)));
  }
}

}  // namespace

i64 fplus_discriminant(const WeilQuartic& f) {
  const i128 delta = static_cast<i128>(f.a) * f.a - 4 * (static_cast<i128>(f.b) - 2 * static_cast<i128>(f.q));
  return static_cast<i64>(delta);
}

Splitting splitting_2_in_Kplus(const WeilQuartic& f) {
  const i64 delta = fplus_discriminant(f);
  if (delta <= 0) {
    throw Error(ErrorCode::DegenerateDiscriminant, "f+ discriminant " + std::to_string(delta));
  }
  const auto [c, d] = squarefree_part(delta);
  (void)c;
  if (d == 1) throw Error(ErrorCode::DegenerateDiscriminant, "d=1 for " + f.to_string());
  switch (mod_floor(d, 8)) {
    case 1: return Splitting::Split;
    case 5: return Splitting::Inert;
    default: return Splitting::Ramified;  // d = 2, 3 mod 4
  }
}

bool is_K_over_Kplus_ramified(const WeilQuartic& f, const ClassKind& kind) {
  require_family("is_K_over_Kplus_ramified", kind);
  return kind.family == Family::PirrB && f.b == 2 - 2 * f.q && f.q % 2 == 1;
}

Shape2 shape_2_in_K(const WeilQuartic& f, const ClassKind& kind) {
  require_family("shape_2_in_K", kind);

  if (kind.family == Family::PirrA) {
    switch (splitting_2_in_Kplus(f)) {
      case Splitting::Inert: return Shape2{{{1, 2, 2}}, Conjugation::ConjugatePair};
      case Splitting::Split: return Shape2{{{1, 2, 2}}, Conjugation::EachSelfConjugate};
      case Splitting::Ramified: return Shape2{{{2, 2, 1}}, Conjugation::SingleSelfConjugate};
    }
  }

  // PirrB: 2 = m^2 in K+, and m ramifies, stays inert or splits in K.
  if (is_K_over_Kplus_ramified(f, kind)) return Shape2{{{4, 1, 1}}, Conjugation::SingleSelfConjugate};
  const bool odd_q = f.q % 2 == 1;
  const bool ordinary = p_rank_class(f, kind) == PRankClass::Ordinary;
  // Supersingular: K contains sqrt(-3) (pi^2 = q zeta_6), where 2 is inert.
  const bool m_inert = ordinary ? (f.b == 1 - 2 * f.q && odd_q) : true;
  if (m_inert) return Shape2{{{2, 2, 1}}, Conjugation::SingleSelfConjugate};
  return Shape2{{{2, 1, 2}}, Conjugation::ConjugatePair};
}

TwoAdicData two_adic_data(const WeilQuartic& f, const ClassKind& kind) {
  require_family("two_adic_data", kind);
  TwoAdicData out;
  out.fplus_linear = f.a;
  out.fplus_constant = f.b - 2 * f.q;
  out.delta = fplus_discriminant(f);
  const auto sf = squarefree_part(out.delta);
  out.c = sf.c;
  out.d = sf.d;
  out.split2_Kplus = splitting_2_in_Kplus(f);
  out.K_over_Kplus_ramified = is_K_over_Kplus_ramified(f, kind);
  out.shape2_K = shape_2_in_K(f, kind);
  return out;
}

}  // namespace weillab
