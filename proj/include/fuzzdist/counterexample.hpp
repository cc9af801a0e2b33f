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
#ifndef FUZZDIST_COUNTEREXAMPLE_HPP
#define FUZZDIST_COUNTEREXAMPLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "fuzzdist/reparam.hpp"
#include "fuzzdist/skorokhod.hpp"
#include "fuzzdist/step_fuzzy_set.hpp"

namespace fuzzdist {

/**
 * The fuzzy-set pair witnessing that the Zadeh extension of a contraction
 * need not contract in the Skorokhod metric, built at a finite truncation
 * depth. Both sets are monotone staircases climbing toward 1; u jumps at
 * the a' positions with grades a_n, v lags behind by a quarter at the
 * bottom and runs ahead by a half in the middle, so no small level warp
 * can line their cuts up. The sequences follow the recursions
 *
 *   a_0 = a,        a_{n+1} = a_n + (1 - a) / 2^{n+1},
 *   a'_0 = a,       a'_1 = a + 1/2,   a'_{n+1} = a'_n + (1 - a - 1/2) / 2^n,
 *   b'_0 = a - 1/4, b'_1 = a + 1/2,   b'_{n+1} = b'_n + (1 - a - 1/2) / 2^n,
 *
 * and b_n is the exact t-preimage of a_n (checked equal to a_n for n >= 1
 * instead of assumed). The untruncated sets have infinitely many levels
 * accumulating at 1; depth N keeps the bands through a_N (resp. b_N) and
 * lets the top band carry the next cut in the pattern, which replaces the
 * singleton 1-cut by a short interval without affecting either side of the
 * d0 = 1/4 argument.
 */
struct CounterexampleInstance {
  Rational a;
  int depth = 0;
  Reparam t;
  StepFuzzySet u;
  StepFuzzySet v;
  // prefixes up to index depth + 2
  std::vector<Rational> a_seq;
  std::vector<Rational> b_seq;        // b_seq[0] = t^{-1}(a_0); b_n = a_n from 1 on
  std::vector<Rational> a_prime_seq;
  std::vector<Rational> b_prime_seq;
};

/**
 * The three-piece reparameterization with knots (0, 0), (a - 1/4, a),
 * (a + 1/4, a + 1/4), (1, 1): steep below, slope 1/2 across the middle,
 * identity above. Its sup-deviation from the identity is exactly 1/4.
 * Requires 1/4 < a < 3/4.
 */
Reparam build_t(const Rational& a);

/// Builds the instance at truncation depth N >= 2. The parameter a must
/// satisfy 1/4 < a < 1/2: the exact b_n = a_n identity that the
/// construction of v depends on fails beyond 1/2. Defaults to a = 3/8.
CounterexampleInstance build_instance(int depth);
CounterexampleInstance build_instance(int depth, const Rational& a);

/** Outcome of one verification run. */
struct ClaimReport {
  std::string claim;
  int depth = 0;
  std::optional<Rational> lambda;
  Rational value;       // computed d0
  Rational expected;    // 1/4
  bool at_least = false;  // pass condition is value >= expected instead of ==
  bool pass = false;
  DistanceReport distance;
  std::optional<LowerBoundCertificate> certificate;
  std::optional<Rational> oracle_lower;
  std::optional<Rational> oracle_upper;
  std::vector<std::string> failures;  // human-readable reasons when !pass
};

/// d0(u, v) = 1/4: exact DP value, brute-force bracket at resolution
/// 2^-(N+3), and a lower-bound certificate at 1/4 - 2^-(N+4).
ClaimReport verify_claim1(const CounterexampleInstance& inst);

/// d0 of the Zadeh extensions under x -> lambda * x stays exactly 1/4 for
/// lambda in [1/2, 1), certificate band showing d_H = lambda / 2, so the
/// extension of this contraction does not contract.
ClaimReport verify_claim2(const CounterexampleInstance& inst, const Rational& lambda);

/// The two-map union extension under x/2 and 3x/4 keeps d0 >= 1/4, with
/// the certificate's Hausdorff computation equal to 1/4.
ClaimReport verify_remark9(const CounterexampleInstance& inst);

}  // namespace fuzzdist

#endif  // FUZZDIST_COUNTEREXAMPLE_HPP
