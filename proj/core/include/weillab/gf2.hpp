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

#include <cstdint>
#include <string>
#include <vector>

#include "weillab/weil_quartic.hpp"

namespace weillab {

// Polynomial over F_2 of degree <= 8, bit i = coefficient of t^i.
struct Gf2Poly {
  std::uint16_t bits = 0;

  int degree() const;
  std::string to_string() const;

  friend bool operator==(Gf2Poly, Gf2Poly) = default;
};

Gf2Poly gf2_mul(Gf2Poly x, Gf2Poly y);

/// Quotient and remainder of x / y; y must be nonzero.
std::pair<Gf2Poly, Gf2Poly> gf2_divmod(Gf2Poly x, Gf2Poly y);

/// Irreducible polynomials over F_2 of degree 1..4, ordered by degree then bits.
const std::vector<Gf2Poly>& gf2_irreducibles_upto_4();

struct Gf2Factor {
  Gf2Poly poly;
  int multiplicity = 0;

  friend bool operator==(const Gf2Factor&, const Gf2Factor&) = default;
};

/// Complete factorisation of f mod 2 into monic irreducibles.
struct Factorisation2 {
  std::vector<Gf2Factor> factors;

  Gf2Poly product() const;
  int total_degree() const;

  /// True when the irreducible factors can be grouped into two factors of degree 2.
  bool is_product_of_two_quadratics() const;

  std::string to_string() const;

  friend bool operator==(const Factorisation2&, const Factorisation2&) = default;
};

Gf2Poly reduce_mod_2(const WeilQuartic& f);

Factorisation2 factor_mod_2(const WeilQuartic& f);
Factorisation2 factor_gf2(Gf2Poly poly);

}  // namespace weillab
