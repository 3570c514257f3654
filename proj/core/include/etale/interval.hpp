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

#include <string>

#include "etale/cyclotomic.hpp"

namespace etale {

/// Closed interval certified to contain the real value of a CycNumber under
/// the embedding zeta_N -> e^{2 pi i / N}. Endpoints are rendered with
/// outward rounding, so [lower, upper] in decimal still brackets the value.
struct CertifiedInterval {
  std::string lower;
  std::string upper;
  double lo = 0;  // rounded down
  double hi = 0;  // rounded up

  double midpoint() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool contains(double v) const { return lo <= v && v <= hi; }
};

/// Width of the returned interval is at most 10^-precision. Rejects
/// non-real input with std::invalid_argument.
CertifiedInterval cyc_to_float(const CycNumber& x, int precision);

/// True iff x equals its complex conjugate.
bool cyc_real_part_check(const CycNumber& x);

/// Sign of a real cyclotomic number: exact zero test, then interval
/// refinement until 0 is excluded.
int real_sign(const CycNumber& x);

/// Certified floor of a real cyclotomic number.
long real_floor(const CycNumber& x);

/// Certified ceiling.
long real_ceil(const CycNumber& x);

/// Three-way comparison of real numbers.
int compare_real(const CycNumber& a, const CycNumber& b);

}  // namespace etale
