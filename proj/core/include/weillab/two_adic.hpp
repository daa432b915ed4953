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

#include <string>
#include <string_view>
#include <vector>

#include "weillab/classify.hpp"

namespace weillab {

// Behaviour of the prime 2 in the real quadratic field K+ = Q(pi + q/pi) and
// in the quartic CM field K = Q[t]/f(t).

enum class Splitting { Split, Inert, Ramified };

std::string_view to_string(Splitting s) noexcept;

enum class Conjugation { ConjugatePair, EachSelfConjugate, SingleSelfConjugate };

std::string_view to_string(Conjugation c) noexcept;

struct PrimeShape {
  int e = 0;             // ramification index over Q
  int f_res = 0;         // residue degree over F_2
  int multiplicity = 0;  // number of primes of K with this (e, f_res)

  friend bool operator==(const PrimeShape&, const PrimeShape&) = default;
};

struct Shape2 {
  std::vector<PrimeShape> primes;
  Conjugation conjugation = Conjugation::SingleSelfConjugate;

  int degree_sum() const;  // sum of e * f_res * multiplicity, always 4

  /// "e4f1", "e2f2", "e2f1x2:pair", "e1f2x2:self", ...
  std::string to_string() const;

  friend bool operator==(const Shape2&, const Shape2&) = default;
};

struct TwoAdicData {
  i64 fplus_linear = 0;    // a
  i64 fplus_constant = 0;  // b - 2q
  i64 delta = 0;           // a^2 - 4(b - 2q)
  i64 c = 0;
  i64 d = 0;
  Splitting split2_Kplus = Splitting::Ramified;
  bool K_over_Kplus_ramified = false;
  Shape2 shape2_K;
};

/// Discriminant of f+(t) = t^2 + a t + (b - 2q).
i64 fplus_discriminant(const WeilQuartic& f);

/// Decided from the squarefree part d of the f+ discriminant:
/// d = 1 mod 8 split, d = 5 mod 8 inert, d = 2, 3 mod 4 ramified.
/// Throws Error{DegenerateDiscriminant} when the discriminant is 0 or d = 1.
Splitting splitting_2_in_Kplus(const WeilQuartic& f);

/// True iff the class is PirrB with b = 2 - 2q and q odd. Throws WrongKind
/// outside PirrA and PirrB.
bool is_K_over_Kplus_ramified(const WeilQuartic& f, const ClassKind& kind);

/// Throws WrongKind outside PirrA and PirrB.
Shape2 shape_2_in_K(const WeilQuartic& f, const ClassKind& kind);

/// Throws WrongKind outside PirrA and PirrB.
TwoAdicData two_adic_data(const WeilQuartic& f, const ClassKind& kind);

}  // namespace weillab
