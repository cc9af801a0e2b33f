/*
 * Copyright 2026 The fuzzdist authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef FUZZDIST_SKOROKHOD_HPP
#define FUZZDIST_SKOROKHOD_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fuzzdist/level_metric.hpp"
#include "fuzzdist/reparam.hpp"
#include "fuzzdist/step_fuzzy_set.hpp"

namespace fuzzdist {

/** One band of the second operand meeting a certificate's probe window. */
struct CertificateBand {
  std::size_t band_index;  // 1-based into v's levels
  Rational level_lo;       // band is (level_lo, level_hi]
  Rational level_hi;
  Rational hausdorff_value;
};

/**
 * A machine-checkable lower bound on the Skorokhod distance. Any
 * reparameterization within epsilon of the identity must send the probe
 * level into the open window (probe - epsilon, probe + epsilon), so the
 * probe's cut of u gets compared against one of the listed bands of v.
 * Hence d0 >= min(epsilon, floor) where floor is the smallest listed
 * Hausdorff value; a certificate is only issued when floor > epsilon,
 * which proves d0 >= epsilon.
 */
struct LowerBoundCertificate {
  Rational probe_level;
  Rational epsilon;
  std::vector<CertificateBand> window_bands;
  Rational floor;
};

enum class DistanceMethod { kExactDp, kBruteForce, kBoundOnly };

std::string to_string(DistanceMethod method);

/** Outcome of a distance computation, with optional proof artifacts. */
struct DistanceReport {
  Rational lower;  // lower == upper for exact methods
  Rational upper;
  std::optional<Reparam> witness;  // re-evaluates to exactly `upper`
  std::optional<LowerBoundCertificate> certificate;
  DistanceMethod method = DistanceMethod::kExactDp;

  bool exact() const { return lower == upper; }
  const Rational& value() const;  // requires exact()
};

/**
 * Exact Skorokhod distance d0(u, v): the infimum over strictly increasing
 * homeomorphisms t of [0, 1] of
 *
 *     max( sup |t(x) - x| ,  d_inf(u, t(v)) ).
 *
 * The objective depends on t only through the images of v's level
 * breakpoints, and the piecewise-linear interpolant through those images
 * minimizes the sup-deviation among all homeomorphisms realizing them, so
 * the problem reduces to placing v's breakpoints against u's fixed level
 * grid. A bottleneck dynamic program over monotone alignments of the two
 * band sequences, evaluated over the closure of admissible placements and
 * combined with an exact candidate-value search, yields the infimum as an
 * exact rational. The infimum may be attained only in the limit; the
 * witness is attached exactly when a strict reparameterization achieving
 * the value exists (it then re-evaluates to the reported value).
 */
DistanceReport skorokhod_d0(const StepFuzzySet& u, const StepFuzzySet& v);

/// Same value; additionally tries to attach an epsilon-witness whose
/// objective is within `witness_slack` above the infimum when the infimum
/// itself is not attained. The report's upper bound is the witness's exact
/// objective. witness_slack must be > 0.
DistanceReport skorokhod_d0(const StepFuzzySet& u, const StepFuzzySet& v,
                            const Rational& witness_slack);

/**
 * Independent brute-force bracket for d0. Places v's interior breakpoints
 * on the grid {0, h, 2h, ...} merged with both operands' exact breakpoints
 * (strictly increasing placements only, so every candidate is a genuine
 * homeomorphism), evaluates each candidate's objective from scratch, and
 * returns upper = best objective found, lower = max(0, upper - h).
 */
DistanceReport d0_bruteforce(const StepFuzzySet& u, const StepFuzzySet& v,
                             const Rational& resolution);

/// Searches u's breakpoints as probe levels; returns a certificate proving
/// d0(u, v) >= epsilon if some probe's window floor exceeds epsilon,
/// nothing otherwise (inconclusive, not a disproof). epsilon must be > 0.
std::optional<LowerBoundCertificate> d0_lower_bound_certificate(const StepFuzzySet& u,
                                                                const StepFuzzySet& v,
                                                                const Rational& epsilon);

/// Re-derives the certificate's window bands and Hausdorff values from
/// scratch and confirms floor > epsilon; true iff everything matches.
bool check_certificate(const StepFuzzySet& u, const StepFuzzySet& v,
                       const LowerBoundCertificate& certificate);

}  // namespace fuzzdist

#endif  // FUZZDIST_SKOROKHOD_HPP
