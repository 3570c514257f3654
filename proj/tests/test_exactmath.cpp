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

#include <cmath>

#include "doctest.h"
#include "etale/cyclotomic.hpp"
#include "etale/errors.hpp"
#include "etale/interval.hpp"
#include "oracles.hpp"

using namespace etale;

TEST_CASE("rationals stay canonical") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(3, -6).get_den() == 2);
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("-7/21") == make_rational(-1, 3));
  CHECK_THROWS(make_rational(1, 0));
  CHECK_THROWS_AS(parse_rational("1/x"), ParseError);
  CHECK(floor_to_long(make_rational(-1, 2)) == -1);
  CHECK(*rationalize(0.4285714285714, 60, 1e-9) == make_rational(3, 7));
}

TEST_CASE("phase exponents reduce mod 1") {
  CHECK(PhaseExponent(5, 4) == PhaseExponent(1, 4));
  CHECK(PhaseExponent(-1, 3) == PhaseExponent(2, 3));
  CHECK(to_string(PhaseExponent(7, 7)) == "0");
  CHECK(PhaseExponent(3, 8).denominator() == 8);
  CHECK(parse_phase("-1/16") == PhaseExponent(15, 16));
}

TEST_CASE("roots of unity") {
  const CycNumber z = CycNumber::zeta(5);
  CHECK(z.pow(5) == CycNumber(1));
  CHECK(z.pow(-1) == z.conj());
  CHECK(CycNumber::root_of_unity(PhaseExponent(1, 2)) == CycNumber(-1));
  CHECK(CycNumber::root_of_unity(PhaseExponent(1, 4)) * CycNumber::root_of_unity(PhaseExponent(3, 4)) == CycNumber(1));
  CHECK(std::abs(CycNumber::zeta(12, 5).approx() - std::polar(1.0, 2 * M_PI * 5 / 12)) < 1e-12);
}

TEST_CASE("reality test") {
  CHECK_FALSE(cyc_real_part_check(CycNumber::zeta(4)));
  CHECK(cyc_real_part_check(CycNumber::zeta(5) + CycNumber::zeta(5, 4)));
  const CycNumber x = CycNumber::root_of_unity(PhaseExponent(-2, 3)) + CycNumber::root_of_unity(PhaseExponent(-1, 3)) * 2;
  const bool oracle_real = std::abs(oracle::evaluate(x).imag()) < 1e-12;
  CHECK(cyc_real_part_check(x) == oracle_real);
  CHECK_FALSE(oracle_real);
}

TEST_CASE("square roots and cosines") {
  for (long m : {2L, 3L, 5L, 6L, 7L, 12L, 15L}) {
    const CycNumber s = sqrt_of_integer(m);
    CHECK(s * s == CycNumber(m));
    CHECK(real_sign(s) == 1);
  }
  CHECK(sqrt_of_integer(4) == CycNumber(2));
  const CycNumber c = two_cos(7, 1);
  CHECK(std::abs(oracle::evaluate(c).real() - 2 * std::cos(2 * M_PI / 7)) < 1e-12);
  CHECK(c.is_real());
}

TEST_CASE("pretty printing") {
  const CycNumber phi = (1 + sqrt_of_integer(5)) * CycNumber(make_rational(1, 2));
  CHECK(to_pretty_string(phi) == "(1+√5)/2");
  CHECK(to_pretty_string(CycNumber(make_rational(-3, 4))) == "-3/4");
  CHECK(to_pretty_string(sqrt_of_integer(2) * -1) == "-√2");
}

TEST_CASE("reduction finds the smallest field") {
  const CycNumber x = sqrt_of_integer(5).promoted(40);
  CHECK(x.conductor() == 40);
  CHECK(x.reduced().conductor() == 5);
  CHECK(CycNumber::zeta(6).reduced().conductor() == 3);
  CHECK(CycNumber(make_rational(2, 3)).promoted(12).reduced().conductor() == 1);
}

TEST_CASE("certified intervals") {
  const CycNumber phi = (1 + sqrt_of_integer(5)) * CycNumber(make_rational(1, 2));
  const CertifiedInterval iv = cyc_to_float(phi, 3);
  CHECK(iv.contains(1.6180339887498949));
  CHECK(iv.lower.rfind("1.618", 0) == 0);
  CHECK(iv.width() <= 1e-3);
  const CertifiedInterval one = cyc_to_float(CycNumber(1), 5);
  CHECK(one.lo == 1.0);
  CHECK(one.hi == 1.0);
  CHECK_THROWS_AS(cyc_to_float(CycNumber::zeta(4), 3), std::invalid_argument);
  CHECK(real_floor(phi) == 1);
  CHECK(real_ceil(phi) == 2);
  CHECK(compare_real(phi, CycNumber(make_rational(8, 5))) == 1);
  CHECK(real_sign(sqrt_of_integer(2) - CycNumber(make_rational(141421, 100000))) == 1);
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(CycNumber(0).inverse(), NotInvertible);
}
