// Copyright 2026 The etale Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace etale {

/// Exact rational in lowest terms with positive denominator. gmpxx keeps
/// every arithmetic result canonical, so equality is structural.
using Rational = mpq_class;

/// Builds num/den and canonicalizes. Throws std::invalid_argument on den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p", "p/q". Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// floor(q) as a long; q must fit.
long floor_to_long(const Rational& q);

/// Best rational approximation of v with denominator <= max_den via continued
/// fractions; empty when the approximation misses v by more than tol.
std::optional<Rational> rationalize(double v, long max_den, double tol);

/// A rational reduced into [0, 1): the exponent h of e^{2 pi i h}.
class PhaseExponent {
 public:
  PhaseExponent() = default;
  explicit PhaseExponent(const Rational& value);
  PhaseExponent(long num, long den) : PhaseExponent(make_rational(num, den)) {}

  const Rational& value() const noexcept { return value_; }
  /// Denominator of the reduced value (1 for the zero phase).
  long denominator() const;
  bool is_zero() const { return value_ == 0; }

  PhaseExponent operator+(const PhaseExponent& o) const { return PhaseExponent(value_ + o.value_); }
  PhaseExponent operator-(const PhaseExponent& o) const { return PhaseExponent(value_ - o.value_); }
  PhaseExponent operator-() const { return PhaseExponent(-value_); }
  PhaseExponent operator*(long k) const { return PhaseExponent(value_ * k); }

  bool operator==(const PhaseExponent& o) const { return value_ == o.value_; }
  std::strong_ordering operator<=>(const PhaseExponent& o) const;

 private:
  Rational value_{0};
};

std::string to_string(const PhaseExponent& h);
PhaseExponent parse_phase(std::string_view text);

}  // namespace etale
