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
#include <vector>

#include "fuzzdist/counterexample.hpp"
#include "fuzzdist/level_metric.hpp"
#include "fuzzdist/skorokhod.hpp"
#include "fuzzdist/zadeh.hpp"
#include "support/generators.hpp"

using namespace fuzzdist;

TEST_CASE("zadeh extension through cut images") {
  auto inst = build_instance(3);
  CHECK(zadeh_extend(PLMap::identity(), inst.u) == inst.u);

  StepFuzzySet eu = zadeh_extend(PLMap::linear(Rational(1, 2)), inst.u);
  CHECK(eu.alpha_cut(Rational(3, 8)) ==
        IntervalUnion::interval(Rational(3, 16), Rational(1, 2)));
  CHECK(eu.support() == IntervalUnion::interval(Rational(3, 16), Rational(1, 2)));
  CHECK(validate(eu).empty());

  // a singleton top cut maps to the singleton image
  StepFuzzySet point_top = StepFuzzySet::make(
      {Level{Rational(1, 2), IntervalUnion::interval(Rational(0), Rational(1))},
       Level{Rational(1), IntervalUnion::point(Rational(1))}});
  StepFuzzySet mapped = zadeh_extend(PLMap::linear(Rational(3, 4)), point_top);
  CHECK(mapped.top_cut() == IntervalUnion::point(Rational(3, 4)));
}

TEST_CASE("cut images commute with alpha_cut") {
  testgen::Rng rng(81);
  for (int trial = 0; trial < 200; ++trial) {
    PLMap f = testgen::random_contraction(rng);
    StepFuzzySet u = testgen::random_fuzzy_set(rng);
    StepFuzzySet eu = zadeh_extend(f, u);
    Rational alpha(static_cast<long long>(rng.next(65)), 64);
    CHECK(eu.alpha_cut(alpha) == pl_image(f, u.alpha_cut(alpha)));
    CHECK(validate(eu).empty());
  }
}

TEST_CASE("cut-image route matches the pointwise sup-over-preimage route") {
  testgen::Rng rng(82);
  PLMap tent = PLMap::make({Knot{Rational(0), Rational(0)}, Knot{Rational(1, 2), Rational(1)},
                            Knot{Rational(1), Rational(0)}});
  PLMap plateau = PLMap::make(
      {Knot{Rational(0), Rational(1, 4)}, Knot{Rational(1, 2), Rational(1, 4)},
       Knot{Rational(1), Rational(3, 4)}});
  for (int trial = 0; trial < 150; ++trial) {
    StepFuzzySet u = testgen::random_fuzzy_set(rng, 4);
    const PLMap& f = trial % 3 == 0 ? tent : (trial % 3 == 1 ? plateau
                                              : testgen::random_contraction(rng));
    StepFuzzySet eu = zadeh_extend(f, u);
    Rational x = testgen::random_unit_rational(rng, 32);
    CHECK(eu.membership(x) == zadeh_membership_pointwise(f, u, x));
  }
}

TEST_CASE("union extension on the two-map family") {
  auto inst = build_instance(3);
  std::vector<PLMap> family = {PLMap::linear(Rational(1, 2)), PLMap::linear(Rational(3, 4))};
  StepFuzzySet fu = union_extension(family, inst.u);
  StepFuzzySet fv = union_extension(family, inst.v);

  // images of [3/8, 1]: [3/16, 1/2] and [9/32, 3/4] overlap and merge
  CHECK(fu.alpha_cut(Rational(3, 8)) ==
        IntervalUnion::interval(Rational(3, 16), Rational(3, 4)));
  // images of [7/8, 1]: [7/16, 1/2] and [21/32, 3/4] stay separated
  CHECK(fv.alpha_cut(Rational(1, 2)) ==
        IntervalUnion::canonicalize(
            {{Rational(7, 16), Rational(1, 2)}, {Rational(21, 32), Rational(3, 4)}}));
  CHECK(validate(fu).empty());
  CHECK(validate(fv).empty());
}

TEST_CASE("union extension of a single map is the zadeh extension") {
  testgen::Rng rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    PLMap f = testgen::random_contraction(rng);
    StepFuzzySet u = testgen::random_fuzzy_set(rng);
    std::vector<PLMap> single = {f};
    CHECK(union_extension(single, u) == zadeh_extend(f, u));
  }
  CHECK_THROWS_AS(union_extension({}, testgen::random_fuzzy_set(rng)), std::invalid_argument);
}

TEST_CASE("contractions contract dinf by their factor") {
  testgen::Rng rng(84);
  for (int trial = 0; trial < 150; ++trial) {
    PLMap f = testgen::random_contraction(rng);
    Rational factor = lipschitz_constant(f);
    StepFuzzySet u = testgen::random_fuzzy_set(rng, 4);
    StepFuzzySet v = testgen::random_fuzzy_set(rng, 4);
    CHECK(level_metric_dinf(zadeh_extend(f, u), zadeh_extend(f, v)) <=
          factor * level_metric_dinf(u, v));
  }
}

TEST_CASE("extensions of contractions never increase d0") {
  testgen::Rng rng(85);
  for (int trial = 0; trial < 60; ++trial) {
    PLMap f = testgen::random_contraction(rng);
    StepFuzzySet u = testgen::random_fuzzy_set(rng, 4);
    StepFuzzySet v = testgen::random_fuzzy_set(rng, 4);
    CHECK(skorokhod_d0(zadeh_extend(f, u), zadeh_extend(f, v)).value() <=
          skorokhod_d0(u, v).value());
  }
}

TEST_CASE("contraction ratio report") {
  auto inst = build_instance(2);
  std::vector<std::pair<StepFuzzySet, StepFuzzySet>> pairs;
  pairs.emplace_back(inst.u, inst.v);
  pairs.emplace_back(inst.u, inst.u);  // distance zero, must be skipped

  SUBCASE("d0 ratio is exactly 1 for the halving map") {
    std::vector<PLMap> maps = {PLMap::linear(Rational(1, 2))};
    auto report = contraction_ratio_report(maps, pairs, Metric::kD0);
    REQUIRE(report.max_ratio.has_value());
    CHECK(*report.max_ratio == Rational(1));
    CHECK(report.contraction_refuted);
    CHECK(*report.witness_pair == 0);
    CHECK(report.entries[1].skipped);
    CHECK(!report.entries[1].ratio.has_value());
  }

  SUBCASE("dinf ratio equals the contraction factor for a scaling map") {
    std::vector<PLMap> maps = {PLMap::linear(Rational(1, 2))};
    auto report = contraction_ratio_report(maps, pairs, Metric::kDinf);
    REQUIRE(report.max_ratio.has_value());
    CHECK(*report.max_ratio == Rational(1, 2));
    CHECK(!report.contraction_refuted);
  }

  SUBCASE("the two-map family also reaches ratio 1 under d0") {
    std::vector<PLMap> maps = {PLMap::linear(Rational(1, 2)), PLMap::linear(Rational(3, 4))};
    auto report = contraction_ratio_report(maps, pairs, Metric::kD0);
    REQUIRE(report.max_ratio.has_value());
    CHECK(*report.max_ratio >= Rational(1));
    CHECK(report.contraction_refuted);
  }

  SUBCASE("non-contractions are rejected") {
    std::vector<PLMap> maps = {PLMap::identity()};
    CHECK_THROWS_AS(contraction_ratio_report(maps, pairs, Metric::kD0), std::invalid_argument);
  }
}
