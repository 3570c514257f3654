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

#include "etale/interval.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace etale {
namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t p) { mpfr_init2(v_, p); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Encloses Re(x) at working precision p: fills lo/hi.
void enclose(const CycNumber& x, mpfr_prec_t p, mpfr_ptr lo, mpfr_ptr hi) {
  if (x.is_rational()) {
    const Rational v = x.rational_value();
    mpfr_set_q(lo, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi, v.get_mpq_t(), MPFR_RNDU);
    return;
  }
  const auto& c = x.coefficients();
  const int n = x.conductor();
  Mpfr sum(p), term(p), angle(p), q(p), bound(p);
  mpfr_set_zero(sum.get(), 1);
  mpfr_set_ui(bound.get(), 1, MPFR_RNDU);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    mpfr_set_q(q.get(), c[j].get_mpq_t(), MPFR_RNDN);
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_ui(angle.get(), angle.get(), 2 * static_cast<unsigned long>(j), MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), q.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    mpfr_abs(q.get(), q.get(), MPFR_RNDU);
    mpfr_add(bound.get(), bound.get(), q.get(), MPFR_RNDU);
  }
  // Each term carries a few ulps of relative error, and the running sum
  // picks up one rounding per step.
  mpfr_mul_ui(bound.get(), bound.get(), static_cast<unsigned long>(c.size() + 1), MPFR_RNDU);
  mpfr_mul_2si(bound.get(), bound.get(), -static_cast<long>(p) + 8, MPFR_RNDU);
  mpfr_sub(lo, sum.get(), bound.get(), MPFR_RNDD);
  mpfr_add(hi, sum.get(), bound.get(), MPFR_RNDU);
}

void require_real(const CycNumber& x) {
  if (!cyc_real_part_check(x)) throw std::invalid_argument("cyclotomic number is not real");
}

}  // namespace

bool cyc_real_part_check(const CycNumber& x) { return x.is_real(); }

CertifiedInterval cyc_to_float(const CycNumber& x, int precision) {
  require_real(x);
  if (precision < 0) throw std::invalid_argument("precision must be non-negative");
  mpfr_prec_t p = static_cast<mpfr_prec_t>(precision * 3.33) + 64;
  for (;;) {
    Mpfr lo(p), hi(p), w(p), target(p);
    enclose(x, p, lo.get(), hi.get());
    mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
    mpfr_set_ui(target.get(), 10, MPFR_RNDD);
    mpfr_pow_si(target.get(), target.get(), -precision, MPFR_RNDD);
    // Leave room for the decimal rounding of both endpoints.
    mpfr_div_ui(target.get(), target.get(), 4, MPFR_RNDD);
    if (mpfr_cmp(w.get(), target.get()) <= 0) {
      CertifiedInterval out;
      const int digits = precision + 1;
      char* s = nullptr;
      mpfr_asprintf(&s, "%.*RDf", digits, lo.get());
      out.lower = s;
      mpfr_free_str(s);
      mpfr_asprintf(&s, "%.*RUf", digits, hi.get());
      out.upper = s;
      mpfr_free_str(s);
      out.lo = mpfr_get_d(lo.get(), MPFR_RNDD);
      out.hi = mpfr_get_d(hi.get(), MPFR_RNDU);
      return out;
    }
    p *= 2;
  }
}

int real_sign(const CycNumber& x) {
  require_real(x);
  if (x.is_zero()) return 0;
  for (mpfr_prec_t p = 64;; p *= 2) {
    Mpfr lo(p), hi(p);
    enclose(x, p, lo.get(), hi.get());
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
  }
}

long real_floor(const CycNumber& x) {
  require_real(x);
  if (x.is_rational()) return floor_to_long(x.rational_value());
  // Irrational values are never integers, so refinement terminates.
  for (mpfr_prec_t p = 64;; p *= 2) {
    Mpfr lo(p), hi(p);
    enclose(x, p, lo.get(), hi.get());
    mpfr_floor(lo.get(), lo.get());
    mpfr_floor(hi.get(), hi.get());
    if (mpfr_equal_p(lo.get(), hi.get())) return mpfr_get_si(lo.get(), MPFR_RNDD);
  }
}

long real_ceil(const CycNumber& x) { return -real_floor(-x); }

int compare_real(const CycNumber& a, const CycNumber& b) { return real_sign(a - b); }

}  // namespace etale
