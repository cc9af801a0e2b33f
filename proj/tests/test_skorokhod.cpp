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
#include <doctest.h>

#include <stdexcept>

#include "fuzzdist/counterexample.hpp"
#include "fuzzdist/hausdorff.hpp"
#include "fuzzdist/level_metric.hpp"
#include "fuzzdist/skorokhod.hpp"
#include "support/generators.hpp"

using namespace fuzzdist;

namespace {

Rational witness_objective(const StepFuzzySet& u, const StepFuzzySet& v, const Reparam& t) {
  return Rational::max(reparam_sup_deviation(t), level_metric_dinf(u, apply_reparam(t, v)));
}

StepFuzzySet crisp(const IntervalUnion& cut) {
  return StepFuzzySet::make({Level{Rational(1), cut}});
}

}  // namespace

TEST_CASE("d0 of a set with itself is zero with an identity-grade witness") {
  auto inst = build_instance(3);
  DistanceReport report = skorokhod_d0(inst.u, inst.u);
  CHECK(report.method == DistanceMethod::kExactDp);
  CHECK(report.value() == Rational(0));
  REQUIRE(report.witness.has_value());
  CHECK(reparam_sup_deviation(*report.witness) == Rational(0));
}

TEST_CASE("crisp sets reduce d0 to the hausdorff distance") {
  // a single band on each side leaves nothing for the warp to move
  StepFuzzySet u = crisp(IntervalUnion::interval(Rational(0), Rational(1, 2)));
  StepFuzzySet v = crisp(IntervalUnion::interval(Rational(1, 4), Rational(3, 4)));
  DistanceReport report = skorokhod_d0(u, v);
  CHECK(report.value() == Rational(1, 4));
  REQUIRE(report.witness.has_value());
  CHECK(witness_objective(u, v, *report.witness) == Rational(1, 4));
}

TEST_CASE("a lone breakpoint shift costs the cheaper of warp and mismatch") {
  // u jumps from A to B at 1/2, v at 1/2 + 1/8; warping costs 1/8, not
  // warping costs d_H(A, B) on the sliver between the jumps
  auto make_pair = [](const IntervalUnion& a, const IntervalUnion& b, const Rational& shift) {
    StepFuzzySet u = StepFuzzySet::make({Level{Rational(1, 2), a}, Level{Rational(1), b}});
    StepFuzzySet v =
        StepFuzzySet::make({Level{Rational(1, 2) + shift, a}, Level{Rational(1), b}});
    return std::make_pair(u, v);
  };

  SUBCASE("mismatch dominates, warping wins") {
    auto [u, v] = make_pair(IntervalUnion::interval(Rational(0), Rational(1)),
                            IntervalUnion::interval(Rational(1, 2), Rational(1)),
                            Rational(1, 8));
    // d_H(A, B) = 1/2 > 1/8
    DistanceReport oracle = d0_bruteforce(u, v, Rational(1, 64));
    CHECK(oracle.lower <= Rational(1, 8));
    CHECK(Rational(1, 8) <= oracle.upper);
    CHECK(skorokhod_d0(u, v).value() == Rational(1, 8));
  }

  SUBCASE("mismatch is cheap, staying put wins") {
    auto [u, v] = make_pair(IntervalUnion::interval(Rational(0), Rational(1)),
                            IntervalUnion::interval(Rational(0), Rational(31, 32)),
                            Rational(1, 8));
    // d_H(A, B) = 1/32 < 1/8
    DistanceReport oracle = d0_bruteforce(u, v, Rational(1, 256));
    CHECK(oracle.lower <= Rational(1, 32));
    CHECK(Rational(1, 32) <= oracle.upper);
    CHECK(skorokhod_d0(u, v).value() == Rational(1, 32));
  }
}

TEST_CASE("the staircase pair: oracle brackets 1/4 first, DP hits it exactly") {
  for (int depth : {2, 3, 4, 5}) {
    CAPTURE(depth);
    auto inst = build_instance(depth);
    // oracle before DP: resolution 2^-(depth+3)
    Rational h(1);
    for (int i = 0; i < depth + 3; ++i) h = h / Rational(2);
    DistanceReport oracle = d0_bruteforce(inst.u, inst.v, h);
    CHECK(oracle.lower <= Rational(1, 4));
    CHECK(Rational(1, 4) <= oracle.upper);

    DistanceReport dp = skorokhod_d0(inst.u, inst.v);
    CHECK(dp.value() == Rational(1, 4));
    CHECK(oracle.lower <= dp.value());
    CHECK(dp.value() <= oracle.upper);

    REQUIRE(dp.witness.has_value());
    CHECK(witness_objective(inst.u, inst.v, *dp.witness) == Rational(1, 4));
  }
}

TEST_CASE("an oversized support dominates every warp") {
  // identical levels, but u's stored support is wider: no warp touches the
  // supports, so the support mismatch is a constant floor for both the DP
  // and the brute force
  IntervalUnion cut = IntervalUnion::interval(Rational(1, 2), Rational(3, 4));
  StepFuzzySet u = StepFuzzySet::make({Level{Rational(1), cut}},
                                      IntervalUnion::interval(Rational(0), Rational(3, 4)));
  StepFuzzySet v = StepFuzzySet::make({Level{Rational(1), cut}});
  REQUIRE(!u.is_genuine());
  DistanceReport dp = skorokhod_d0(u, v);
  CHECK(dp.value() == Rational(1, 2));
  CHECK(level_metric_dinf(u, v) == Rational(1, 2));
  DistanceReport oracle = d0_bruteforce(u, v, Rational(1, 32));
  CHECK(oracle.upper == Rational(1, 2));
  CHECK(oracle.lower == Rational(1, 2) - Rational(1, 32));

  // and on random non-genuine pairs the oracle bracket still holds
  testgen::Rng rng(96);
  for (int trial = 0; trial < 40; ++trial) {
    StepFuzzySet a = testgen::random_fuzzy_set(rng, 4);
    std::vector<Level> levels(a.levels().begin(), a.levels().end());
    StepFuzzySet widened = StepFuzzySet::make(
        std::move(levels),
        IntervalUnion::unite(a.support(),
                             IntervalUnion::interval(Rational(0), Rational(1, 16))));
    StepFuzzySet b = testgen::random_fuzzy_set(rng, 4);
    Rational d = skorokhod_d0(widened, b).value();
    DistanceReport bracket = d0_bruteforce(widened, b, Rational(1, 64));
    CHECK(bracket.lower <= d);
    CHECK(d <= bracket.upper);
    CHECK(d >= hausdorff(widened.support(), b.support()));
  }
}

TEST_CASE("d0 is symmetric and wedged between its exact bounds") {
  testgen::Rng rng(91);
  for (int trial = 0; trial < 120; ++trial) {
    StepFuzzySet u = testgen::random_fuzzy_set(rng, 4);
    StepFuzzySet v = testgen::random_fuzzy_set(rng, 4);
    Rational uv = skorokhod_d0(u, v).value();
    CHECK(uv == skorokhod_d0(v, u).value());
    CHECK(uv <= level_metric_dinf(u, v));
    CHECK(uv >= hausdorff(u.support(), v.support()));
    CHECK(uv >= hausdorff(u.top_cut(), v.top_cut()));
  }
}

TEST_CASE("witnesses re-evaluate to the reported value") {
  testgen::Rng rng(92);
  int with_witness = 0;
  for (int trial = 0; trial < 120; ++trial) {
    StepFuzzySet u = testgen::random_fuzzy_set(rng, 4);
    StepFuzzySet v = testgen::random_fuzzy_set(rng, 4);
    DistanceReport report = skorokhod_d0(u, v);
    if (report.witness) {
      ++with_witness;
      CHECK(witness_objective(u, v, *report.witness) == report.upper);
    }
  }
  // attainment is the norm on these instances
  CHECK(with_witness > 100);
}

TEST_CASE("epsilon-witnesses stay within the requested slack") {
  auto inst = build_instance(2);
  DistanceReport report = skorokhod_d0(inst.u, inst.v, Rational(1, 128));
  CHECK(report.lower == Rational(1, 4));
  REQUIRE(report.witness.has_value());
  CHECK(report.upper <= Rational(1, 4) + Rational(1, 128));
  CHECK(witness_objective(inst.u, inst.v, *report.witness) == report.upper);
  CHECK_THROWS_AS(skorokhod_d0(inst.u, inst.v, Rational(0)), std::invalid_argument);
}

TEST_CASE("brute force bracket properties") {
  auto inst = build_instance(2);

  SUBCASE("identical operands give the zero bracket at any resolution") {
    for (auto h : {Rational(1, 3), Rational(1, 32), Rational(2, 7)}) {
      DistanceReport report = d0_bruteforce(inst.u, inst.u, h);
      CHECK(report.lower == Rational(0));
      CHECK(report.upper == Rational(0));
    }
  }

  SUBCASE("halving the resolution never raises the upper bound") {
    testgen::Rng rng(93);
    for (int trial = 0; trial < 40; ++trial) {
      StepFuzzySet u = testgen::random_fuzzy_set(rng, 4);
      StepFuzzySet v = testgen::random_fuzzy_set(rng, 4);
      Rational coarse = d0_bruteforce(u, v, Rational(1, 16)).upper;
      Rational fine = d0_bruteforce(u, v, Rational(1, 32)).upper;
      CHECK(fine <= coarse);
    }
  }

  SUBCASE("the bracket always contains the DP value") {
    testgen::Rng rng(94);
    for (int trial = 0; trial < 60; ++trial) {
      StepFuzzySet u = testgen::random_fuzzy_set(rng, 4);
      StepFuzzySet v = testgen::random_fuzzy_set(rng, 4);
      Rational dp = skorokhod_d0(u, v).value();
      for (auto h : {Rational(1, 32), Rational(1, 64)}) {
        DistanceReport oracle = d0_bruteforce(u, v, h);
        CHECK(oracle.lower <= dp);
        CHECK(dp <= oracle.upper);
        CHECK(oracle.upper - dp <= h);
      }
    }
  }

  SUBCASE("resolution must be positive") {
    CHECK_THROWS_AS(d0_bruteforce(inst.u, inst.v, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(d0_bruteforce(inst.u, inst.v, Rational(-1, 4)), std::invalid_argument);
  }
}

TEST_CASE("lower-bound certificates") {
  auto inst = build_instance(3);

  SUBCASE("the staircase pair certifies just below 1/4 at probe 3/8") {
    Rational eps = Rational(1, 4) - Rational(1, 128);  // 2^-(N+4) at depth 3
    auto cert = d0_lower_bound_certificate(inst.u, inst.v, eps);
    REQUIRE(cert.has_value());
    CHECK(cert->probe_level == Rational(3, 8));
    CHECK(cert->floor == Rational(1, 2));
    REQUIRE(cert->window_bands.size() == 1);
    CHECK(cert->window_bands[0].band_index == 2);
    CHECK(cert->window_bands[0].hausdorff_value == Rational(1, 2));
    CHECK(check_certificate(inst.u, inst.v, *cert));

    // tampering must fail the re-check
    LowerBoundCertificate tampered = *cert;
    tampered.floor = Rational(3, 4);
    CHECK(!check_certificate(inst.u, inst.v, tampered));
  }

  SUBCASE("identical operands yield no certificate") {
    CHECK(!d0_lower_bound_certificate(inst.u, inst.u, Rational(1, 8)).has_value());
  }

  SUBCASE("epsilon must be positive") {
    CHECK_THROWS_AS(d0_lower_bound_certificate(inst.u, inst.v, Rational(0)),
                    std::invalid_argument);
  }

  SUBCASE("certificates are sound against the exact value") {
    testgen::Rng rng(95);
    int produced = 0;
    for (int trial = 0; trial < 200; ++trial) {
      StepFuzzySet u = testgen::random_fuzzy_set(rng, 4);
      StepFuzzySet v = testgen::random_fuzzy_set(rng, 4);
      Rational eps(1 + static_cast<long long>(rng.next(16)), 32);
      auto cert = d0_lower_bound_certificate(u, v, eps);
      if (cert) {
        ++produced;
        CHECK(check_certificate(u, v, *cert));
        CHECK(skorokhod_d0(u, v).value() >= eps);
      }
    }
    CHECK(produced > 20);  // the probe argument fires often enough to test
  }
}
