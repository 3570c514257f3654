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

#include "etale/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "etale/errors.hpp"
#include "linalg_exact.hpp"

namespace etale {
namespace {

struct FieldTable {
  int n = 1;
  int degree = 1;
  // reduction[e] = x^e mod Phi_n for 0 <= e < 2n.
  std::vector<std::vector<long>> reduction;
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic and divides num.
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const long c = num[k + dn];
    q[k] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k + j] -= c * den[j];
  }
  return q;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

const std::vector<long>& cyclotomic_polynomial_locked(int n,
                                                      std::map<int, std::vector<long>>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    p = poly_divide_exact(p, cyclotomic_polynomial_locked(d, cache));
  }
  return cache.emplace(n, std::move(p)).first->second;
}

std::map<int, std::vector<long>>& poly_cache() {
  static std::map<int, std::vector<long>> c;
  return c;
}

const FieldTable& field(int n) {
  static std::map<int, std::unique_ptr<FieldTable>> tables;
  std::lock_guard lock(cache_mutex());
  auto it = tables.find(n);
  if (it != tables.end()) return *it->second;
  const auto& phi = cyclotomic_polynomial_locked(n, poly_cache());
  auto t = std::make_unique<FieldTable>();
  t->n = n;
  t->degree = static_cast<int>(phi.size()) - 1;
  const std::size_t deg = static_cast<std::size_t>(t->degree);
  std::vector<long> cur(deg, 0);
  cur[0] = 1;
  t->reduction.reserve(2 * static_cast<std::size_t>(n));
  for (int e = 0; e < 2 * n; ++e) {
    t->reduction.push_back(cur);
    // multiply by x and reduce the x^deg term with the monic polynomial.
    long top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * phi[i];
  }
  return *tables.emplace(n, std::move(t)).first->second;
}

int check_conductor(int n) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  return n;
}

long positive_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

long lcm_conductor(long a, long b) { return std::lcm(a, b); }

const std::vector<long>& cyclotomic_polynomial(int n) {
  std::lock_guard lock(cache_mutex());
  return cyclotomic_polynomial_locked(check_conductor(n), poly_cache());
}

CycNumber::CycNumber(const Rational& q) : conductor_(1), coeffs_{q} {}

CycNumber::CycNumber(int conductor, std::vector<Rational> coeffs)
    : conductor_(check_conductor(conductor)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field(conductor_).degree)
    throw std::invalid_argument("coefficient count must equal phi(conductor)");
}

CycNumber CycNumber::zeta(int conductor, long k) {
  const auto& f = field(check_conductor(conductor));
  const auto& red = f.reduction[static_cast<std::size_t>(positive_mod(k, conductor))];
  std::vector<Rational> c(red.size());
  for (std::size_t i = 0; i < red.size(); ++i) c[i] = Rational(red[i]);
  return CycNumber(conductor, std::move(c));
}

CycNumber CycNumber::root_of_unity(const PhaseExponent& h) {
  const long d = h.denominator();
  const long num = h.value().get_num().get_si();
  return zeta(static_cast<int>(d), num);
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  // 1 is a power-basis element, so rationals have no higher coefficients.
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

Rational CycNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("cyclotomic number is not rational");
  return coeffs_[0];
}

CycNumber CycNumber::promoted(int m) const {
  check_conductor(m);
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) throw std::invalid_argument("promotion target must be a multiple");
  const auto& f = field(m);
  const long step = m / conductor_;
  std::vector<Rational> out(static_cast<std::size_t>(f.degree), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& red = f.reduction[static_cast<std::size_t>((static_cast<long>(j) * step) % m)];
    for (std::size_t i = 0; i < red.size(); ++i)
      if (red[i]) out[i] += coeffs_[j] * red[i];
  }
  return CycNumber(m, std::move(out));
}

CycNumber CycNumber::reduced() const {
  if (conductor_ <= 2) {
    return CycNumber(coeffs_[0]);
  }
  for (int d = 1; d < conductor_; ++d) {
    if (conductor_ % d) continue;
    // x lies in Q(zeta_d) iff it is fixed by every u = 1 mod d.
    bool fixed = true;
    for (long u = 1 + d; u < conductor_ && fixed; u += d) {
      if (std::gcd(u, static_cast<long>(conductor_)) != 1) continue;
      fixed = galois(u) == *this;
    }
    if (!fixed) continue;
    const int deg = field(d).degree;
    detail::Matrix<Rational> a(coeffs_.size(), std::vector<Rational>(static_cast<std::size_t>(deg)));
    for (int j = 0; j < deg; ++j) {
      CycNumber basis = zeta(d, j).promoted(conductor_);
      for (std::size_t i = 0; i < coeffs_.size(); ++i)
        a[i][static_cast<std::size_t>(j)] = basis.coeffs_[i];
    }
    auto sol = detail::solve_linear(a, coeffs_);
    if (!sol) continue;
    return CycNumber(d, std::move(*sol));
  }
  return *this;
}

CycNumber CycNumber::galois(long u) const {
  const long n = conductor_;
  if (n <= 2) return *this;
  if (std::gcd(positive_mod(u, n), n) != 1) throw std::invalid_argument("Galois exponent must be a unit");
  const auto& f = field(conductor_);
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& red = f.reduction[static_cast<std::size_t>(positive_mod(static_cast<long>(j) * u, n))];
    for (std::size_t i = 0; i < red.size(); ++i)
      if (red[i]) out[i] += coeffs_[j] * red[i];
  }
  return CycNumber(conductor_, std::move(out));
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  const int m = static_cast<int>(lcm_conductor(conductor_, o.conductor_));
  if (m != conductor_) *this = promoted(m);
  if (o.conductor_ == m) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  } else {
    CycNumber p = o.promoted(m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += p.coeffs_[i];
  }
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  const int m = static_cast<int>(lcm_conductor(conductor_, o.conductor_));
  const CycNumber a = promoted(m);
  const CycNumber b = o.promoted(m);
  const auto& f = field(m);
  const std::size_t deg = static_cast<std::size_t>(f.degree);
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<Rational> out(deg, Rational(0));
  for (std::size_t e = 0; e < prod.size(); ++e) {
    if (prod[e] == 0) continue;
    if (e < deg) {
      out[e] += prod[e];
      continue;
    }
    const auto& red = f.reduction[e];
    for (std::size_t i = 0; i < deg; ++i)
      if (red[i]) out[i] += prod[e] * red[i];
  }
  conductor_ = m;
  coeffs_ = std::move(out);
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw NotInvertible("inverse of zero");
  if (conductor_ <= 2) return CycNumber(Rational(1) / coeffs_[0]);
  const std::size_t deg = coeffs_.size();
  detail::Matrix<Rational> mat(deg, std::vector<Rational>(deg));
  for (std::size_t j = 0; j < deg; ++j) {
    CycNumber col = *this * zeta(conductor_, static_cast<long>(j));
    for (std::size_t i = 0; i < deg; ++i) mat[i][j] = col.coeffs_[i];
  }
  std::vector<Rational> rhs(deg, Rational(0));
  rhs[0] = 1;
  auto sol = detail::solve_linear(std::move(mat), std::move(rhs));
  if (!sol) throw NotInvertible("singular multiplication map");
  return CycNumber(conductor_, std::move(*sol));
}

CycNumber CycNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNumber result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const int m = static_cast<int>(lcm_conductor(a.conductor_, b.conductor_));
  return a.promoted(m).coeffs_ == b.promoted(m).coeffs_;
}

std::complex<double> CycNumber::approx(long u) const {
  std::complex<double> sum = 0;
  const double n = conductor_;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(positive_mod(static_cast<long>(j) * u, conductor_)) / n;
    sum += coeffs_[j].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

CycNumber two_cos(int conductor, long k) {
  return CycNumber::zeta(conductor, k) + CycNumber::zeta(conductor, -k);
}

namespace {

CycNumber sqrt_prime(long p) {
  if (p == 2) return two_cos(8, 1);
  // Quadratic Gauss sum g with g^2 = (-1)^{(p-1)/2} p.
  const int n = static_cast<int>(p);
  CycNumber g;
  for (long a = 1; a < p; ++a) {
    long ls = 1;
    long e = (p - 1) / 2, base = a % p, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    ls = acc == 1 ? 1 : -1;
    g += ls > 0 ? CycNumber::zeta(n, a) : -CycNumber::zeta(n, a);
  }
  if (p % 4 == 3) g = g * -CycNumber::zeta(4, 1);  // -i g
  if (g.approx().real() < 0) g = -g;
  return g;
}

}  // namespace

CycNumber sqrt_of_integer(long m) {
  if (m < 0) throw std::invalid_argument("sqrt of negative integer");
  if (m == 0) return CycNumber(0);
  long square = 1, rest = 1;
  long x = m;
  for (long p = 2; p * p <= x; ++p) {
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square *= p;
    if (e % 2) rest *= p;
  }
  if (x > 1) rest *= x;
  CycNumber root(square);
  long r = rest;
  for (long p = 2; p <= r; ++p) {
    if (r % p) continue;
    r /= p;
    root *= sqrt_prime(p);
  }
  return root;
}

std::string to_basis_string(const CycNumber& x) {
  std::ostringstream os;
  const auto& c = x.coefficients();
  bool first = true;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(c[j]);
    if (j > 0) os << "*z" << x.conductor() << "^" << j;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

std::string format_quadratic(const Rational& a, const Rational& b, long m) {
  // (A + B sqrt m)/q with q the common denominator.
  mpz_class q = lcm(a.get_den(), b.get_den());
  mpz_class A = a.get_num() * (q / a.get_den());
  mpz_class B = b.get_num() * (q / b.get_den());
  std::ostringstream os;
  std::string root = "√" + std::to_string(m);
  std::string bpart;
  if (B == 1) bpart = root;
  else if (B == -1) bpart = "-" + root;
  else bpart = B.get_str() + root;
  std::string body;
  if (A == 0) body = bpart;
  else body = A.get_str() + (B > 0 ? "+" : "") + bpart;
  if (q == 1) return body;
  if (A == 0) return body + "/" + q.get_str();
  return "(" + body + ")/" + q.get_str();
}

// a + b * 2cos(k pi / n) for small integer b, when x has that shape.
std::optional<std::string> format_cosine(const CycNumber& x) {
  const int n = x.conductor();
  const int m = 2 * n;
  for (long k = 1; k < n; ++k) {
    const CycNumber c = CycNumber::zeta(m, k) + CycNumber::zeta(m, -k);
    for (long b : {1, -1, 2, -2}) {
      const CycNumber rest = x - CycNumber(b) * c;
      if (!rest.is_rational()) continue;
      const Rational a = rest.rational_value();
      const Rational angle = make_rational(k, n);
      std::string cos = "2cos(";
      if (angle.get_num() != 1) cos += angle.get_num().get_str();
      cos += "π/" + angle.get_den().get_str() + ")";
      std::string term = (b < 0 ? "-" : "") + (std::abs(b) == 2 ? std::string("2*") : std::string()) + cos;
      if (a == 0) return term;
      return to_string(a) + (b < 0 ? "" : "+") + term;
    }
  }
  return std::nullopt;
}

std::string format_cyclotomic(const CycNumber& x) {
  std::ostringstream os;
  const auto& c = x.coefficients();
  bool first = true;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    Rational v = c[j];
    bool neg = v < 0;
    if (neg) v = -v;
    if (!first) os << (neg ? "-" : "+");
    else if (neg) os << "-";
    first = false;
    if (j == 0) {
      os << to_string(v);
      continue;
    }
    if (v != 1) os << to_string(v) << "*";
    os << "ζ" << x.conductor();
    if (j > 1) os << "^" << j;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace

std::string to_pretty_string(const CycNumber& x) {
  if (x.is_rational()) return to_string(x.rational_value());
  const auto v = x.approx();
  if (std::abs(v.imag()) < 1e-12 && x.is_real()) {
    static const long squarefree[] = {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23};
    for (long m : squarefree) {
      CycNumber s = sqrt_of_integer(m);
      const long big = lcm_conductor(x.conductor(), s.conductor());
      CycNumber xs = x.promoted(static_cast<int>(big));
      CycNumber ss = s.promoted(static_cast<int>(big));
      const double sv = std::sqrt(static_cast<double>(m));
      for (long u = 2; u < big; ++u) {
        if (std::gcd(u, big) != 1) continue;
        if (std::abs(ss.approx(u).real() + sv) > 1e-9) continue;
        auto xb = xs.approx(u);
        if (std::abs(xb.imag()) > 1e-9) break;
        auto a = rationalize(0.5 * (v.real() + xb.real()), 100000, 1e-9);
        auto b = rationalize((v.real() - xb.real()) / (2 * sv), 100000, 1e-9);
        if (a && b && CycNumber(*a) + CycNumber(*b) * s == x) return format_quadratic(*a, *b, m);
        break;
      }
    }
  }
  const CycNumber r = x.reduced();
  if (std::abs(v.imag()) < 1e-12 && x.is_real())
    if (auto c = format_cosine(r)) return *c;
  return format_cyclotomic(r);
}

}  // namespace etale
