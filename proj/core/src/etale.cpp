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

#include "etale/etale.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>

#include "etale/errors.hpp"
#include "etale/interval.hpp"

namespace etale {
namespace {

std::string ring_key(const FusionRing& ring) {
  std::string key = ring.id + "/" + std::to_string(ring.conductor) + ":";
  for (const auto& a : ring.n)
    for (const auto& b : a)
      for (int c : b) key += static_cast<char>('0' + c);
  return key;
}

template <class V>
const V& memo(std::map<std::string, V>& cache, std::mutex& mu, const std::string& key,
              const std::function<V()>& make) {
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  V value = make();
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(value)).first->second;
}

const FPData& cached_fp(const FusionRing& ring) {
  static std::map<std::string, FPData> cache;
  static std::mutex mu;
  return memo<FPData>(cache, mu, ring_key(ring), [&] { return fp_dims(ring); });
}

const std::vector<NimRep>& cached_nimreps(const FusionRing& ring, int r) {
  static std::map<std::string, std::vector<NimRep>> cache;
  static std::mutex mu;
  return memo<std::vector<NimRep>>(cache, mu, ring_key(ring) + "#" + std::to_string(r),
                                   [&] { return enumerate_nimreps(ring, r); });
}

PhaseExponent cached_charge(const PreModularCategory& cat) {
  static std::map<std::string, PhaseExponent> cache;
  static std::mutex mu;
  std::string key = ring_key(cat.ring) + "|" + std::to_string(cat.d_sign);
  for (const auto& d : cat.dims.dims) key += "|" + to_basis_string(d);
  for (const auto& h : cat.h) key += "|" + to_string(h);
  return memo<PhaseExponent>(cache, mu, key, [&] { return central_charge(cat); });
}

std::vector<int> support(const std::vector<int>& n) {
  std::vector<int> s;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] > 0) s.push_back(static_cast<int>(i));
  return s;
}

bool is_unit_vector(const std::vector<int>& n) {
  return n[0] == 1 && std::all_of(n.begin() + 1, n.end(), [](int x) { return x == 0; });
}

// Every self-dual n with n_0 in [n0_min, n0_max] and sum n_i d_i == target.
std::vector<std::vector<int>> realizations(const FusionRing& ring, const FPData& fp, const CycNumber& target,
                                           int n0_min, int n0_max) {
  const int r = ring.rank();
  std::vector<double> d(r);
  for (int i = 0; i < r; ++i) d[i] = fp.dims[i].approx().real();
  const double t = target.approx().real();
  std::vector<std::vector<int>> out;
  std::vector<int> n(r, 0);
  std::function<void(int, double)> rec = [&](int i, double rest) {
    if (i == r) {
      if (std::abs(rest) > 1e-7) return;
      CycNumber sum = algebra_fpdim(fp, n);
      if (sum == target) out.push_back(n);
      return;
    }
    const int dual = ring.dual[i];
    if (dual < i) {
      n[i] = n[dual];
      rec(i + 1, rest - n[i] * d[i]);
      return;
    }
    const double weight = dual == i ? d[i] : 2 * d[i];
    int lo = 0, hi = static_cast<int>(std::floor(rest / weight + 1e-9));
    if (i == 0) {
      lo = n0_min;
      hi = std::min(hi, n0_max);
    }
    for (int v = lo; v <= hi; ++v) {
      n[i] = v;
      rec(i + 1, rest - v * d[i]);
    }
    n[i] = 0;
  };
  rec(0, t);
  std::sort(out.begin(), out.end());
  return out;
}

bool has_matching_nimrep(const std::vector<NimRep>& reps, const std::vector<int>& n) {
  for (const auto& rep : reps) {
    if (!rep.indecomposable) continue;
    for (const auto& cand : internal_hom_candidates(rep))
      if (cand == n) return true;
  }
  return false;
}

bool certificate_applies(const Certificate& cert, const PreModularCategory& cat, const std::vector<int>& n) {
  if (cert.family != cat.family || cert.branch != cat.branch || cert.n != n) return false;
  if (cert.h && *cert.h != cat.h) return false;
  if (cert.dims && *cert.dims != cat.dims.dims) return false;
  return true;
}

std::string witness_text(const FusionRing& ring, const Witness& w) {
  return "theta(" + ring.labels[w.i] + "," + ring.labels[w.j] + "," + ring.labels[w.k] + ")=" + to_string(w.phase);
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::kEtale: return "etale";
    case Status::kRuledOut: return "ruled-out";
    case Status::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::kNone: return "none";
    case Reason::kTrivialAlgebra: return "trivial-algebra";
    case Reason::kInvertibleSelfBraiding: return "invertible-self-braiding";
    case Reason::kFPdimBound: return "fpdim-bound";
    case Reason::kNoMatchingModuleCategory: return "no-matching-module-category";
    case Reason::kNoNimRep: return "no-nim-rep";
    case Reason::kMonodromyFailure: return "monodromy-failure";
    case Reason::kSelfBraidingFailure: return "self-braiding-failure";
    case Reason::kCentralChargeMismatch: return "central-charge-mismatch";
    case Reason::kDyslecticBound: return "dyslectic-bound";
    case Reason::kVafaViolation: return "vafa-violation";
    case Reason::kTannakianPositivity: return "tannakian-positivity";
    case Reason::kCatalogCertificate: return "catalog-certificate";
  }
  return "?";
}

CycNumber algebra_fpdim(const FPData& fp, const std::vector<int>& n) {
  CycNumber sum;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i]) sum += CycNumber(n[i]) * fp.dims[i];
  return sum;
}

std::string algebra_label(const FusionRing& ring, const std::vector<int>& n) {
  std::string out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!n[i]) continue;
    if (!out.empty()) out += "+";
    if (n[i] > 1) out += std::to_string(n[i]);
    out += ring.labels[i];
  }
  return out.empty() ? "0" : out;
}

int r_max(const PreModularCategory& cat) { return static_cast<int>(real_floor(cached_fp(cat.ring).total)); }

std::vector<RingMatch> candidate_module_rings(const PreModularCategory& cat,
                                              const std::vector<FusionRing>& library) {
  const FPData& host = cached_fp(cat.ring);
  const int rmax = r_max(cat);
  std::vector<RingMatch> out;
  for (const auto& ring : library) {
    if (ring.rank() > rmax) continue;
    const FPData& fp = cached_fp(ring);
    if (compare_real(fp.total, host.total) > 0) continue;
    RingMatch m;
    m.ring_id = ring.id;
    m.rank = ring.rank();
    m.ring_fpdim = fp.total;
    m.required_fpdim = host.total / fp.total;
    const int top = static_cast<int>(real_floor(m.required_fpdim));
    m.vectors = realizations(cat.ring, host, m.required_fpdim, 1, std::max(top, 1));
    if (m.vectors.empty()) continue;
    m.trivial_only = m.vectors.size() == 1 && is_unit_vector(m.vectors[0]);
    out.push_back(std::move(m));
  }
  return out;
}

MonodromyResult monodromy_test(const PreModularCategory& cat, const std::vector<int>& n) {
  MonodromyResult out;
  const auto s = support(n);
  const std::set<int> in(s.begin(), s.end());
  for (int i : s)
    for (int j : s)
      for (int k = 0; k < cat.rank(); ++k) {
        if (!cat.ring.n[i][j][k]) continue;
        const PhaseExponent theta = cat.h[k] - cat.h[i] - cat.h[j];
        if (theta.is_zero()) continue;
        out.strict_witnesses.push_back({i, j, k, theta});
        if (in.count(k)) out.witnesses.push_back({i, j, k, theta});
      }
  out.passed = out.witnesses.empty();
  return out;
}

bool invertible_algebra_test(const PreModularCategory& cat, const std::vector<int>& n) {
  const auto s = support(n);
  if (s.size() != 2 || n[0] != 1 || n[s[1]] != 1) throw NotApplicable("support is not {1, X}");
  const int x = s[1];
  const FusionRing& ring = cat.ring;
  bool invertible = ring.dual[x] == x && ring.n[x][x][0] == 1;
  for (int k = 1; k < ring.rank() && invertible; ++k) invertible = ring.n[x][x][k] == 0;
  if (!invertible) throw NotApplicable(ring.labels[x] + " is not invertible and self-dual");
  return self_braiding_invertible(cat, x, nu2_of(cat, x)) == CycNumber(1);
}

ModularCheck modular_constraints_test(const PreModularCategory& cat, const std::vector<int>& n,
                                      const std::vector<PreModularCategory>& mfcs) {
  if (!is_modular(cat)) throw DegenerateError(cat.id + ": modular constraints need a modular host");
  const FPData& host = cached_fp(cat.ring);
  const CycNumber a = algebra_fpdim(host, n);
  const CycNumber a2 = a * a;
  ModularCheck out;
  if (compare_real(a2, host.total) > 0) {
    out.reason = Reason::kDyslecticBound;
    out.detail = "FPdim(A)^2 exceeds FPdim(B)";
    return out;
  }
  const CycNumber target = host.total / a2;
  const PhaseExponent c = cached_charge(cat);
  const int rmax = r_max(cat);
  bool dim_match = false;
  for (const auto& m : mfcs) {
    if (m.rank() > rmax || !(cached_fp(m.ring).total == target)) continue;
    dim_match = true;
    if (cached_charge(m) == c) {
      out.passed = true;
      out.matched = m.id;
      return out;
    }
  }
  out.reason = Reason::kCentralChargeMismatch;
  out.detail = dim_match ? "no reference MFC with FPdim " + to_pretty_string(target) + " has c/8 = " + to_string(c)
                         : "no reference MFC with FPdim " + to_pretty_string(target);
  return out;
}

Tannakian tannakian_test(const PreModularCategory& cat) {
  if (!is_symmetric(cat)) return Tannakian::kNotApplicable;
  // Dimensions for the spherical structure with trivial twists.
  for (int i = 0; i < cat.rank(); ++i) {
    const CycNumber d = cat.dims.dims[i] * CycNumber::root_of_unity(cat.h[i]);
    if (!d.is_rational()) return Tannakian::kFail;
    const Rational q = d.rational_value();
    if (q <= 0 || q.get_den() != 1) return Tannakian::kFail;
  }
  return Tannakian::kPass;
}

bool verify_commutative_certificate(const PreModularCategory& cat, const Certificate& cert) {
  const FusionRing& ring = cat.ring;
  const auto s = support(cert.n);
  const std::set<int> in(s.begin(), s.end());
  auto label = [&](int i, int j, int k) {
    return "R^{" + ring.labels[i] + "," + ring.labels[j] + "}_" + ring.labels[k];
  };
  bool identity = true;
  for (int i : s)
    for (int j : s)
      for (int k : s) {
        if (i == 0 || j == 0 || !ring.n[i][j][k]) continue;
        auto rij = cert.r.find({i, j, k});
        auto rji = cert.r.find({j, i, k});
        if (rij == cert.r.end() || rji == cert.r.end()) throw BadCertificate(cert.id + ": missing " + label(i, j, k));
        const PhaseExponent theta = cat.h[k] - cat.h[i] - cat.h[j];
        if (!(rij->second * rji->second == CycNumber::root_of_unity(theta)))
          throw BadCertificate(cert.id + ": " + label(i, j, k) + label(j, i, k) + " differs from the monodromy phase");
        if (i == j && k == 0 && ring.dual[i] == i && i != 0) {
          std::optional<CycNumber> nu;
          if (cat.nu2.count(i)) nu = cat.nu2.at(i);
          else if (is_modular(cat)) nu = fs_indicator(cat, i);
          if (nu && !(rij->second == CycNumber::root_of_unity(-cat.h[i]) * *nu))
            throw BadCertificate(cert.id + ": " + label(i, i, 0) + " differs from e^{-2 pi i h} nu2");
        }
        if (!(rij->second == CycNumber(1))) identity = false;
      }
  return identity;
}

namespace {

void fail(Verdict& v, const std::string& test, Reason reason, const std::string& detail) {
  v.checks.push_back({test, false, reason, detail});
}

void pass(Verdict& v, const std::string& test, const std::string& detail = "") {
  v.checks.push_back({test, true, Reason::kNone, detail});
}

Verdict judge(const PreModularCategory& cat, const AlgebraCandidate& cand, const Library& library,
              const ClassifyOptions& options, const ClassificationReport& report) {
  const FusionRing& ring = cat.ring;
  const FPData& fp = cached_fp(ring);
  Verdict v;
  v.target_ring = cand.target_ring;
  if (cand.target_rank > 0) v.target_rank = cand.target_rank;
  const CycNumber a = algebra_fpdim(fp, cand.n);
  v.lagrangian = a * a == fp.total;

  if (is_unit_vector(cand.n)) {
    // A = 1 has B_A = B, so only the host's own ring fits.
    const FusionRing* target = nullptr;
    for (const auto& r : library.rings)
      if (r.id == cand.target_ring) target = &r;
    if (cand.target_ring == ring.id || (target && rings_isomorphic(*target, ring))) {
      pass(v, "trivial");
      v.status = Status::kEtale;
      v.reason = Reason::kTrivialAlgebra;
    } else {
      fail(v, "trivial", Reason::kNoMatchingModuleCategory, "A = 1 gives B_A = B, not " + cand.target_ring);
      v.status = Status::kRuledOut;
      v.reason = Reason::kNoMatchingModuleCategory;
    }
    return v;
  }

  if (cand.target_rank > 0) {
    const auto& reps = cached_nimreps(ring, cand.target_rank);
    if (reps.empty()) {
      fail(v, "nim-rep", Reason::kNoNimRep, "no " + std::to_string(cand.target_rank) + "-dimensional NIM-rep");
    } else if (!has_matching_nimrep(reps, cand.n)) {
      fail(v, "nim-rep", Reason::kNoMatchingModuleCategory,
           "no indecomposable " + std::to_string(cand.target_rank) + "-dimensional NIM-rep has diagonal " +
               algebra_label(ring, cand.n));
    } else {
      pass(v, "nim-rep");
    }
  }

  const MonodromyResult mono = monodromy_test(cat, cand.n);
  v.witnesses = mono.witnesses;
  v.strict_witnesses = mono.strict_witnesses;
  const auto& relevant = options.strict_monodromy ? mono.strict_witnesses : mono.witnesses;
  if (relevant.empty()) {
    pass(v, "monodromy");
  } else {
    std::string detail;
    for (const auto& w : relevant) detail += (detail.empty() ? "" : ", ") + witness_text(ring, w);
    fail(v, "monodromy", Reason::kMonodromyFailure, detail);
  }

  bool invertible_ok = false;
  try {
    const bool ok = invertible_algebra_test(cat, cand.n);
    if (ok) {
      pass(v, "self-braiding");
      invertible_ok = true;
    } else {
      fail(v, "self-braiding", Reason::kSelfBraidingFailure, "c_{X,X} is not the identity on 1");
    }
  } catch (const NotApplicable&) {
  } catch (const DegenerateError&) {
    v.checks.push_back({"self-braiding", true, Reason::kNone, "skipped: nu2 unavailable for degenerate data"});
  }

  if (report.modular) {
    const ModularCheck mc = modular_constraints_test(cat, cand.n, library.mfcs);
    if (mc.passed) pass(v, "modular", "B_A^0 matches " + mc.matched);
    else fail(v, "modular", mc.reason, mc.detail);
  }

  bool tannakian_ok = false;
  if (report.symmetric) {
    bool regular = true;
    for (int i = 0; i < ring.rank(); ++i)
      regular = regular && CycNumber(cand.n[i]) == fp.dims[i];
    if (regular) {
      if (tannakian_test(cat) == Tannakian::kPass) {
        pass(v, "tannakian");
        tannakian_ok = true;
      } else {
        fail(v, "tannakian", Reason::kTannakianPositivity, "symmetric host is not positive");
      }
    }
  }

  bool certified = false;
  for (const auto& cert : library.certificates) {
    if (!certificate_applies(cert, cat, cand.n)) continue;
    try {
      if (verify_commutative_certificate(cat, cert)) {
        pass(v, "certificate", cert.id);
        certified = true;
      } else {
        fail(v, "certificate", Reason::kCatalogCertificate, cert.id + ": c_{A,A} is not the identity");
      }
    } catch (const BadCertificate& e) {
      fail(v, "certificate", Reason::kCatalogCertificate, e.what());
    }
  }

  for (const auto& c : v.checks)
    if (!c.passed) {
      v.status = Status::kRuledOut;
      v.reason = c.reason;
      return v;
    }
  if (invertible_ok) {
    v.status = Status::kEtale;
    v.reason = Reason::kInvertibleSelfBraiding;
  } else if (tannakian_ok) {
    v.status = Status::kEtale;
    v.reason = Reason::kTannakianPositivity;
  } else if (certified) {
    v.status = Status::kEtale;
    v.reason = Reason::kCatalogCertificate;
  } else {
    v.status = Status::kInconclusive;
  }
  return v;
}

// Connected self-dual n with (FPdim A)^2 <= FPdim B.
std::vector<std::vector<int>> bounded_vectors(const PreModularCategory& cat) {
  const FPData& fp = cached_fp(cat.ring);
  const int r = cat.rank();
  const double limit = std::sqrt(fp.total.approx().real()) + 1e-9;
  std::vector<double> d(r);
  for (int i = 0; i < r; ++i) d[i] = fp.dims[i].approx().real();
  std::vector<std::vector<int>> out;
  std::vector<int> n(r, 0);
  n[0] = 1;
  std::function<void(int, double)> rec = [&](int i, double used) {
    if (i == r) {
      const CycNumber a = algebra_fpdim(fp, n);
      if (compare_real(a * a, fp.total) <= 0) out.push_back(n);
      return;
    }
    const int dual = cat.ring.dual[i];
    if (dual < i) {
      n[i] = n[dual];
      rec(i + 1, used + n[i] * d[i]);
      return;
    }
    const double weight = dual == i ? d[i] : 2 * d[i];
    for (int v = 0; used + v * weight <= limit; ++v) {
      n[i] = v;
      rec(i + 1, used + v * d[i]);
    }
    n[i] = 0;
  };
  rec(1, 1.0);
  return out;
}

}  // namespace

ClassificationReport classify(const PreModularCategory& cat, const Library& library, const ClassifyOptions& options) {
  ClassificationReport rep;
  rep.category_id = cat.id;
  rep.family = cat.family;
  rep.branch = cat.branch;
  rep.params = cat.params;
  rep.labels = cat.ring.labels;
  rep.bound = options.bound;
  const FPData& fp = cached_fp(cat.ring);
  rep.fpdim = fp.total;
  rep.r_max = r_max(cat);
  rep.modular = is_modular(cat);
  rep.symmetric = is_symmetric(cat);
  if (rep.modular) rep.central_charge = cached_charge(cat);
  rep.rings = candidate_module_rings(cat, library.rings);

  std::vector<AlgebraCandidate> cands;
  bool has_trivial_host = false;
  for (const auto& m : rep.rings) {
    const FusionRing* target = nullptr;
    for (const auto& r : library.rings)
      if (r.id == m.ring_id) target = &r;
    for (const auto& n : m.vectors) {
      if (n[0] != 1) continue;
      cands.push_back({n, m.ring_id, m.rank});
      if (is_unit_vector(n) && target && rings_isomorphic(*target, cat.ring)) has_trivial_host = true;
    }
  }
  if (!has_trivial_host) {
    std::vector<int> unit(cat.rank(), 0);
    unit[0] = 1;
    cands.push_back({unit, cat.ring.id, cat.rank()});
  }
  if (rep.modular) {
    for (const auto& n : bounded_vectors(cat)) {
      const bool seen = std::any_of(cands.begin(), cands.end(), [&](const AlgebraCandidate& c) { return c.n == n; });
      if (!seen) cands.push_back({n, "", 0});
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [](const AlgebraCandidate& a, const AlgebraCandidate& b) {
    const int sa = std::accumulate(a.n.begin(), a.n.end(), 0), sb = std::accumulate(b.n.begin(), b.n.end(), 0);
    if (sa != sb) return sa < sb;
    return a.n > b.n;
  });
  for (const auto& c : cands) rep.candidates.push_back({c, judge(cat, c, library, options, rep)});

  std::set<int> ranks;
  for (const auto& [c, v] : rep.candidates) {
    if (v.status != Status::kEtale) continue;
    if (!is_unit_vector(c.n)) rep.completely_anisotropic = false;
    if (v.target_rank) ranks.insert(*v.target_rank);
  }
  rep.gsd.assign(ranks.begin(), ranks.end());
  // Without a modular bound, B_A beyond the library's ring range is only
  // covered under the multiplicity-free assumption.
  rep.gsd_open_ended = !rep.modular && rep.r_max >= 4;
  if (rep.gsd_open_ended) rep.notes.push_back("B_A restricted to the multiplicity-free ring library");
  if (rep.modular && rep.r_max >= 9)
    rep.notes.push_back("rank of B_A^0 below nine is not needed: the FPdim(A)^2 bound already closes the list");
  return rep;
}

GsdResult gsd_set(const ClassificationReport& report) {
  GsdResult out;
  out.values = report.gsd;
  out.open_ended = report.gsd_open_ended;
  out.spontaneously_broken = !out.values.empty() && out.values.front() > 1;
  return out;
}

}  // namespace etale
