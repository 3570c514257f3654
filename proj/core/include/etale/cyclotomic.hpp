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

#include <complex>
#include <string>
#include <vector>

#include "etale/rational.hpp"

namespace etale {

/// Element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, zeta, ..., zeta^{phi(N)-1} reduced modulo the N-th cyclotomic
/// polynomial. The representation is canonical for a fixed conductor, and
/// binary operations promote both operands to Q(zeta_lcm) first. Values are
/// immutable once built.
class CycNumber {
 public:
  /// Zero in Q.
  CycNumber() : CycNumber(Rational(0)) {}
  CycNumber(const Rational& q);  // NOLINT: rationals embed implicitly
  CycNumber(long n) : CycNumber(Rational(n)) {}  // NOLINT
  /// Raw power-basis coefficients; size must equal phi(conductor).
  CycNumber(int conductor, std::vector<Rational> coeffs);

  /// zeta_N^k with N = conductor (k taken mod N).
  static CycNumber zeta(int conductor, long k = 1);
  /// e^{2 pi i h}, living in Q(zeta_d) for d = denominator of h.
  static CycNumber root_of_unity(const PhaseExponent& h);

  int conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Valid only when is_rational().
  Rational rational_value() const;

  /// The same number written over Q(zeta_M); M must be a multiple of the
  /// current conductor.
  CycNumber promoted(int m) const;
  /// Smallest conductor dividing the current one that still holds the value.
  CycNumber reduced() const;

  /// Galois automorphism zeta -> zeta^u, gcd(u, N) = 1.
  CycNumber galois(long u) const;
  CycNumber conj() const { return galois(-1); }
  bool is_real() const { return *this == conj(); }

  CycNumber inverse() const;  // throws NotInvertible on zero
  CycNumber pow(long e) const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator/=(const CycNumber& o) { return *this *= o.inverse(); }
  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }

  friend bool operator==(const CycNumber& a, const CycNumber& b);

  /// Floating evaluation under zeta_N -> e^{2 pi i u / N}. Diagnostics and
  /// search prefilters only; certified work goes through interval.hpp.
  std::complex<double> approx(long u = 1) const;

 private:
  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

/// Euler phi.
int euler_phi(int n);
long lcm_conductor(long a, long b);

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_polynomial(int n);

/// Exact square root of a positive integer m, as a cyclotomic number.
CycNumber sqrt_of_integer(long m);

/// 2 cos(2 pi k / N), real cyclotomic integer.
CycNumber two_cos(int conductor, long k);

/// Power-basis dump "c0 + c1*z + ..." with z = zeta_N.
std::string to_basis_string(const CycNumber& x);

/// Human form: rationals as "p/q", quadratic irrationals as "(a+b√m)/q",
/// everything else as a sum of powers of zeta_N.
std::string to_pretty_string(const CycNumber& x);

}  // namespace etale
