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

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "etale/nimrep.hpp"
#include "etale/premodular.hpp"

namespace etale {

enum class Status { kEtale, kRuledOut, kInconclusive };

enum class Reason {
  kNone,
  kTrivialAlgebra,
  kInvertibleSelfBraiding,
  kFPdimBound,
  kNoMatchingModuleCategory,
  kNoNimRep,
  kMonodromyFailure,
  kSelfBraidingFailure,
  kCentralChargeMismatch,
  kDyslecticBound,
  kVafaViolation,
  kTannakianPositivity,
  kCatalogCertificate,
};

std::string to_string(Status s);
std::string to_string(Reason r);

/// Scalar data R^{ij}_k of the half-braiding on A (x) A, keyed by support
/// channel, for one family branch.
struct Certificate {
  std::string id;
  std::string family;
  std::string branch;
  /// Restricts the certificate to datasets with these twists / dimensions.
  std::optional<std::vector<PhaseExponent>> h;
  std::optional<std::vector<CycNumber>> dims;
  std::vector<int> n;
  std::map<std::tuple<int, int, int>, CycNumber> r;
  std::string provenance;
};

/// Rings and modular data consulted by the classification.
struct Library {
  std::vector<FusionRing> rings;
  std::vector<PreModularCategory> mfcs;
  std::vector<Certificate> certificates;
};

struct AlgebraCandidate {
  std::vector<int> n;
  /// Ring of B_A matched by Frobenius-Perron dimension; empty when the
  /// candidate comes from the modular bound alone.
  std::string target_ring;
  int target_rank = 0;
};

struct Witness {
  int i = 0, j = 0, k = 0;
  PhaseExponent phase;
};

struct CheckRecord {
  std::string test;
  bool passed = true;
  Reason reason = Reason::kNone;
  std::string detail;
};

struct Verdict {
  Status status = Status::kInconclusive;
  Reason reason = Reason::kNone;
  std::optional<int> target_rank;
  std::string target_ring;
  bool lagrangian = false;
  std::vector<CheckRecord> checks;
  std::vector<Witness> witnesses;
  std::vector<Witness> strict_witnesses;
};

struct RingMatch {
  std::string ring_id;
  int rank = 0;
  CycNumber ring_fpdim;
  CycNumber required_fpdim;  // FPdim_B(A) = FPdim(B) / FPdim(ring)
  std::vector<std::vector<int>> vectors;
  bool trivial_only = false;
};

struct ClassifyOptions {
  bool strict_monodromy = false;
  int bound = 60;
};

struct ClassificationReport {
  std::string category_id;
  std::string family;
  std::string branch;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> labels;
  int r_max = 0;
  bool modular = false;
  bool symmetric = false;
  PhaseExponent central_charge;  // c/8, meaningful when modular
  CycNumber fpdim;
  int bound = 60;
  std::vector<RingMatch> rings;
  std::vector<std::pair<AlgebraCandidate, Verdict>> candidates;
  bool completely_anisotropic = true;
  std::vector<int> gsd;
  bool gsd_open_ended = false;
  std::vector<std::string> notes;
};

/// floor(FPdim(B)), certified.
int r_max(const PreModularCategory& cat);

/// Library rings admissible as K(B_A): rank <= r_max, FPdim <= FPdim(B) and
/// FPdim(B) / FPdim(ring) realized as sum n_i FPdim_i, n self-dual, n_0 >= 1.
std::vector<RingMatch> candidate_module_rings(const PreModularCategory& cat,
                                              const std::vector<FusionRing>& library);

struct MonodromyResult {
  bool passed = true;
  std::vector<Witness> witnesses;         // channels inside the support
  std::vector<Witness> strict_witnesses;  // all channels
};

/// theta(i,j,k) = 0 for i, j, k in the support of n.
MonodromyResult monodromy_test(const PreModularCategory& cat, const std::vector<int>& n);

/// c_{X,X} = +1 for A = 1 + X, X invertible and self-dual. Throws
/// NotApplicable otherwise.
bool invertible_algebra_test(const PreModularCategory& cat, const std::vector<int>& n);

struct ModularCheck {
  bool passed = false;
  Reason reason = Reason::kNone;
  std::string matched;
  std::string detail;
};

/// (FPdim A)^2 <= FPdim B and a reference MFC with FPdim(B)/(FPdim A)^2
/// and the host's central charge. Throws DegenerateError on degenerate hosts.
ModularCheck modular_constraints_test(const PreModularCategory& cat, const std::vector<int>& n,
                                      const std::vector<PreModularCategory>& mfcs);

enum class Tannakian { kNotApplicable, kPass, kFail };

/// Symmetric hosts only: Tannakian iff every d_i e^{2 pi i h_i} is a
/// positive integer.
Tannakian tannakian_test(const PreModularCategory& cat);

/// Checks R^{ij}_k R^{ji}_k = e^{2 pi i theta(i,j,k)} on the support, the
/// self-dual diagonal values, and returns whether c_{A,A} is the identity.
/// Throws BadCertificate naming the violated relation.
bool verify_commutative_certificate(const PreModularCategory& cat, const Certificate& cert);

ClassificationReport classify(const PreModularCategory& cat, const Library& library,
                              const ClassifyOptions& options = {});

struct GsdResult {
  std::vector<int> values;
  bool open_ended = false;
  bool spontaneously_broken = false;
};

GsdResult gsd_set(const ClassificationReport& report);

/// sum_i n_i d_i with FP dimensions.
CycNumber algebra_fpdim(const FPData& fp, const std::vector<int>& n);

/// "1+X+2Y" style rendering.
std::string algebra_label(const FusionRing& ring, const std::vector<int>& n);

}  // namespace etale
