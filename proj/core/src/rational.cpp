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

#include "etale/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "etale/errors.hpp"

namespace etale {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return ParseError("malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto is_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  mpz_class n(num), d(den);
  if (d == 0) throw bad();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

long floor_to_long(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("floor does not fit in long");
  return f.get_si();
}

std::optional<Rational> rationalize(double v, long max_den, double tol) {
  if (!std::isfinite(v)) return std::nullopt;
  // Convergents h/k of the continued fraction of v.
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double x = v;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(x);
    if (std::fabs(a) > 1e15) break;
    long ai = static_cast<long>(a);
    long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (std::fabs(v - static_cast<double>(h1) / static_cast<double>(k1)) <= tol) {
      return make_rational(h1, k1);
    }
    double frac = x - a;
    if (frac < 1e-18) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

PhaseExponent::PhaseExponent(const Rational& value) : value_(value) {
  value_ -= floor_to_long(value_);
}

long PhaseExponent::denominator() const { return value_.get_den().get_si(); }

std::strong_ordering PhaseExponent::operator<=>(const PhaseExponent& o) const {
  int c = cmp(value_, o.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const PhaseExponent& h) { return h.value().get_str(); }

PhaseExponent parse_phase(std::string_view text) { return PhaseExponent(parse_rational(text)); }

}  // namespace etale
