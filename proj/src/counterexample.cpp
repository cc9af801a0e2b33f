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
#include "fuzzdist/counterexample.hpp"

#include <stdexcept>

#include "fuzzdist/level_metric.hpp"
#include "fuzzdist/pl_map.hpp"
#include "fuzzdist/zadeh.hpp"

namespace fuzzdist {

namespace {

Rational pow2_reciprocal(int k) {
  BigInt den(1);
  const BigInt two(2);
  for (int i = 0; i < k; ++i) den = den * two;
  return Rational(BigInt(1), den);
}

Rational quarter() { return Rational(1, 4); }

}  // namespace

Reparam build_t(const Rational& a) {
  if (a <= Rational(1, 4) || a >= Rational(3, 4))
    throw std::invalid_argument("build_t: a must lie strictly between 1/4 and 3/4");
  const Rational q = quarter();
  return Reparam::make({Knot{Rational(0), Rational(0)}, Knot{a - q, a}, Knot{a + q, a + q},
                        Knot{Rational(1), Rational(1)}});
}

CounterexampleInstance build_instance(int depth) { return build_instance(depth, Rational(3, 8)); }

CounterexampleInstance build_instance(int depth, const Rational& a) {
  if (depth < 2) throw std::invalid_argument("build_instance: depth must be at least 2");
  if (a <= Rational(1, 4) || a >= Rational(1, 2))
    throw std::invalid_argument(
        "build_instance: a must lie strictly between 1/4 and 1/2 for the exact b_n = a_n "
        "identity to hold");
  const int top = depth + 2;
  const Rational one(1), half(1, 2), q = quarter();
  const Rational tail = one - (a + half);  // the 1 - (a + 1/2) in the primed recursions

  CounterexampleInstance inst{a, depth, build_t(a), StepFuzzySet::make({Level{one,
                              IntervalUnion::point(one)}}), StepFuzzySet::make({Level{one,
                              IntervalUnion::point(one)}}), {}, {}, {}, {}};

  inst.a_seq.push_back(a);
  for (int k = 0; k < top; ++k)
    inst.a_seq.push_back(inst.a_seq.back() + (one - a) * pow2_reciprocal(k + 1));
  // recursion sanity: the closed form 1 - (1 - a) / 2^n must agree exactly
  for (int k = 0; k <= top; ++k) {
    if (inst.a_seq[k] != one - (one - a) * pow2_reciprocal(k))
      throw std::logic_error("build_instance: a_n recursion/closed-form mismatch");
  }

  inst.a_prime_seq.push_back(a);
  inst.a_prime_seq.push_back(a + half);
  inst.a_prime_seq.push_back(a + half + tail * half);
  for (int k = 2; k < top; ++k)
    inst.a_prime_seq.push_back(inst.a_prime_seq.back() + tail * pow2_reciprocal(k));
  // the explicitly listed a'_2 coincides with the n = 1 step of the
  // recursion; check rather than assume
  if (inst.a_prime_seq[2] != inst.a_prime_seq[1] + tail * pow2_reciprocal(1))
    throw std::logic_error("build_instance: a'_2 inconsistent with the primed recursion");

  inst.b_prime_seq.push_back(a - q);
  inst.b_prime_seq.push_back(a + half);
  inst.b_prime_seq.push_back(a + half + tail * half);
  for (int k = 2; k < top; ++k)
    inst.b_prime_seq.push_back(inst.b_prime_seq.back() + tail * pow2_reciprocal(k));
  for (int k = 1; k <= top; ++k) {
    if (inst.b_prime_seq[k] != inst.a_prime_seq[k])
      throw std::logic_error("build_instance: a'_n and b'_n diverge for n >= 1");
  }

  // b_n by exact inversion of t, then the b_n = a_n identity as a check
  const Reparam t_inv = inst.t.inverse();
  for (int k = 0; k <= top; ++k) inst.b_seq.push_back(t_inv.evaluate(inst.a_seq[k]));
  for (int k = 1; k <= top; ++k) {
    if (inst.b_seq[k] != inst.a_seq[k])
      throw std::logic_error("build_instance: b_n = t^{-1}(a_n) differs from a_n at n = " +
                             std::to_string(k));
  }

  // u: grade a_n on [a'_n, a'_{n+1}); cuts are suffix intervals
  std::vector<Level> u_levels;
  u_levels.push_back(Level{a, IntervalUnion::interval(a, one)});
  for (int k = 1; k <= depth; ++k)
    u_levels.push_back(Level{inst.a_seq[k], IntervalUnion::interval(inst.a_prime_seq[k], one)});
  u_levels.push_back(Level{one, IntervalUnion::interval(inst.a_prime_seq[depth + 1], one)});
  inst.u = StepFuzzySet::make(std::move(u_levels), IntervalUnion::interval(a, one));

  // v: quarter-lag at the bottom, half-lead in the middle, then the primed
  // staircase shifted by two
  std::vector<Level> v_levels;
  v_levels.push_back(Level{a - q, IntervalUnion::interval(a - q, one)});
  v_levels.push_back(Level{a + q, IntervalUnion::interval(a + half, one)});
  for (int k = 1; k <= depth; ++k)
    v_levels.push_back(
        Level{inst.b_seq[k], IntervalUnion::interval(inst.b_prime_seq[k + 1], one)});
  v_levels.push_back(Level{one, IntervalUnion::interval(inst.b_prime_seq[depth + 2], one)});
  inst.v = StepFuzzySet::make(std::move(v_levels), IntervalUnion::interval(a - q, one));

  return inst;
}

namespace {

void require(ClaimReport& report, bool condition, const std::string& what) {
  if (!condition) {
    report.pass = false;
    report.failures.push_back(what);
  }
}

}  // namespace

ClaimReport verify_claim1(const CounterexampleInstance& inst) {
  ClaimReport report;
  report.claim = "claim1";
  report.depth = inst.depth;
  report.expected = quarter();
  report.pass = true;

  report.distance = skorokhod_d0(inst.u, inst.v);
  report.value = report.distance.value();
  require(report, report.value == report.expected,
          "d0(u, v) = " + report.value.to_fraction_string() + ", expected 1/4");

  const Rational resolution = pow2_reciprocal(inst.depth + 3);
  DistanceReport oracle = d0_bruteforce(inst.u, inst.v, resolution);
  report.oracle_lower = oracle.lower;
  report.oracle_upper = oracle.upper;
  require(report, oracle.lower <= report.expected && report.expected <= oracle.upper,
          "brute-force bracket [" + oracle.lower.to_fraction_string() + ", " +
              oracle.upper.to_fraction_string() + "] misses 1/4");

  const Rational eps = quarter() - pow2_reciprocal(inst.depth + 4);
  report.certificate = d0_lower_bound_certificate(inst.u, inst.v, eps);
  require(report, report.certificate.has_value(), "no lower-bound certificate at 1/4 - 2^-(N+4)");
  if (report.certificate)
    require(report, check_certificate(inst.u, inst.v, *report.certificate),
            "certificate failed re-validation");
  return report;
}

ClaimReport verify_claim2(const CounterexampleInstance& inst, const Rational& lambda) {
  if (lambda < Rational(1, 2) || lambda >= Rational(1))
    throw std::invalid_argument("verify_claim2: lambda must lie in [1/2, 1)");
  ClaimReport report;
  report.claim = "claim2";
  report.depth = inst.depth;
  report.lambda = lambda;
  report.expected = quarter();
  report.pass = true;

  const PLMap f = PLMap::linear(lambda);
  const StepFuzzySet eu = zadeh_extend(f, inst.u);
  const StepFuzzySet ev = zadeh_extend(f, inst.v);

  report.distance = skorokhod_d0(eu, ev);
  report.value = report.distance.value();
  require(report, report.value == report.expected,
          "d0 of the extended pair = " + report.value.to_fraction_string() + ", expected 1/4");

  const Rational base = skorokhod_d0(inst.u, inst.v).value();
  require(report, report.value <= base, "d0 increased under a contraction's extension");
  if (!base.is_zero())
    require(report, report.value / base == Rational(1), "contraction ratio is not exactly 1");

  const Rational eps = quarter() - pow2_reciprocal(inst.depth + 4);
  report.certificate = d0_lower_bound_certificate(eu, ev, eps);
  require(report, report.certificate.has_value(), "no lower-bound certificate for the images");
  if (report.certificate) {
    require(report, check_certificate(eu, ev, *report.certificate),
            "certificate failed re-validation");
    require(report, report.certificate->floor == lambda / Rational(2),
            "certificate band shows d_H = " + report.certificate->floor.to_fraction_string() +
                ", expected lambda/2");
  }
  return report;
}

ClaimReport verify_remark9(const CounterexampleInstance& inst) {
  ClaimReport report;
  report.claim = "remark9";
  report.depth = inst.depth;
  report.expected = quarter();
  report.at_least = true;
  report.pass = true;

  const std::vector<PLMap> family = {PLMap::linear(Rational(1, 2)), PLMap::linear(Rational(3, 4))};
  const StepFuzzySet fu = union_extension(family, inst.u);
  const StepFuzzySet fv = union_extension(family, inst.v);

  report.distance = skorokhod_d0(fu, fv);
  report.value = report.distance.value();
  require(report, report.value >= report.expected,
          "d0(F(u), F(v)) = " + report.value.to_fraction_string() + ", expected >= 1/4");

  const Rational eps = quarter() - pow2_reciprocal(inst.depth + 4);
  report.certificate = d0_lower_bound_certificate(fu, fv, eps);
  require(report, report.certificate.has_value(), "no lower-bound certificate for F(u), F(v)");
  if (report.certificate) {
    require(report, check_certificate(fu, fv, *report.certificate),
            "certificate failed re-validation");
    require(report, report.certificate->floor == quarter(),
            "certificate band shows d_H = " + report.certificate->floor.to_fraction_string() +
                ", expected 1/4");
  }
  return report;
}

}  // namespace fuzzdist
