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
#include "weillab/gf2.hpp"

#include <bit>
#include <sstream>

#include "weillab/error.hpp"

namespace weillab {

int Gf2Poly::degree() const {
  return bits == 0 ? -1 : static_cast<int>(std::bit_width(static_cast<unsigned>(bits))) - 1;
}

std::string Gf2Poly::to_string() const {
  if (bits == 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (((bits >> i) & 1U) == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << "1";
    } else if (i == 1) {
      os << "t";
    } else {
      os << "t^" << i;
    }
  }
  return os.str();
}

Gf2Poly gf2_mul(Gf2Poly x, Gf2Poly y) {
  unsigned acc = 0;
  for (int i = 0; i <= y.degree(); ++i) {
    if ((y.bits >> i) & 1U) acc ^= static_cast<unsigned>(x.bits) << i;
  }
  if (acc > 0xFFFFU) throw Error(ErrorCode::InvalidArgument, "F_2 product exceeds degree 15");
  return Gf2Poly{static_cast<std::uint16_t>(acc)};
}

std::pair<Gf2Poly, Gf2Poly> gf2_divmod(Gf2Poly x, Gf2Poly y) {
  if (y.bits == 0) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  unsigned rem = x.bits;
  unsigned quot = 0;
  const int dy = y.degree();
  for (int shift = Gf2Poly{static_cast<std::uint16_t>(rem)}.degree() - dy; shift >= 0; --shift) {
    if ((rem >> (shift + dy)) & 1U) {
      rem ^= static_cast<unsigned>(y.bits) << shift;
      quot |= 1U << shift;
    }
  }
  return {Gf2Poly{static_cast<std::uint16_t>(quot)}, Gf2Poly{static_cast<std::uint16_t>(rem)}};
}

const std::vector<Gf2Poly>& gf2_irreducibles_upto_4() {
  static const std::vector<Gf2Poly> kList = {
      {0b10},    {0b11},                            // t, t+1
      {0b111},                                      // t^2+t+1
      {0b1011},  {0b1101},                          // t^3+t+1, t^3+t^2+1
      {0b10011}, {0b11001}, {0b11111},              // t^4+t+1, t^4+t^3+1, t^4+t^3+t^2+t+1
  };
  return kList;
}

Gf2Poly Factorisation2::product() const {
  Gf2Poly acc{1};
  for (const auto& fac : factors) {
    for (int i = 0; i < fac.multiplicity; ++i) acc = gf2_mul(acc, fac.poly);
  }
  return acc;
}

int Factorisation2::total_degree() const {
  int sum = 0;
  for (const auto& fac : factors) sum += fac.poly.degree() * fac.multiplicity;
  return sum;
}

bool Factorisation2::is_product_of_two_quadratics() const {
  if (total_degree() != 4) return false;
  // Degree-3 and degree-4 irreducibles cannot be grouped; the rest always can.
  for (const auto& fac : factors) {
    if (fac.poly.degree() > 2) return false;
  }
  return true;
}

std::string Factorisation2::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& fac : factors) {
    if (!first) os << "*";
    first = false;
    const bool wrap = fac.poly.degree() > 1 || fac.poly.bits == 0b11;
    if (wrap) os << "(";
    os << fac.poly.to_string();
    if (wrap) os << ")";
    if (fac.multiplicity > 1) os << "^" << fac.multiplicity;
  }
  return first ? "1" : os.str();
}

Gf2Poly reduce_mod_2(const WeilQuartic& f) {
  std::uint16_t bits = 0;
  const auto c = f.coefficients();
  for (int i = 0; i <= 4; ++i) {
    // c[0] is the t^4 coefficient.
    if ((c[4 - i] % 2) != 0) bits |= static_cast<std::uint16_t>(1U << i);
  }
  return Gf2Poly{bits};
}

Factorisation2 factor_gf2(Gf2Poly poly) {
  if (poly.bits == 0) throw Error(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  if (poly.degree() > 8) throw Error(ErrorCode::InvalidArgument, "degree above 8");
  Factorisation2 out;
  Gf2Poly rest = poly;
  for (Gf2Poly p : gf2_irreducibles_upto_4()) {
    int mult = 0;
    for (;;) {
      auto [quot, rem] = gf2_divmod(rest, p);
      if (rem.bits != 0) break;
      rest = quot;
      ++mult;
    }
    if (mult > 0) out.factors.push_back({p, mult});
  }
  if (rest.degree() > 0) {
    // Only reachable for degree > 4 leftovers, which have no factor of degree <= 4
    // and hence no proper factor at all when the degree is at most 8.
    out.factors.push_back({rest, 1});
  }
  return out;
}

Factorisation2 factor_mod_2(const WeilQuartic& f) { return factor_gf2(reduce_mod_2(f)); }

}  // namespace weillab
