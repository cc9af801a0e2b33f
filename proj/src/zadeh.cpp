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
#include "fuzzdist/zadeh.hpp"

#include <stdexcept>

#include "fuzzdist/level_metric.hpp"
#include "fuzzdist/skorokhod.hpp"

namespace fuzzdist {

StepFuzzySet zadeh_extend(const PLMap& f, const StepFuzzySet& u) {
  std::vector<Level> levels;
  levels.reserve(u.levels().size());
  for (const Level& l : u.levels()) levels.push_back(Level{l.alpha, pl_image(f, l.cut)});
  return StepFuzzySet::make(std::move(levels), pl_image(f, u.support()));
}

namespace {

// sup of u over the closed interval [p, q]; cuts are nested, so the highest
// level whose cut meets the interval wins
Rational sup_membership_over(const StepFuzzySet& u, const Rational& p, const Rational& q) {
  const auto& levels = u.levels();
  for (std::size_t k = levels.size(); k-- > 0;) {
    for (const Interval& part : levels[k].cut.parts()) {
      if (part.lo <= q && part.hi >= p) return levels[k].alpha;
    }
  }
  return Rational(0);
}

}  // namespace

Rational zadeh_membership_pointwise(const PLMap& f, const StepFuzzySet& u, const Rational& x) {
  Rational grade(0);
  const auto& ks = f.knots();
  for (std::size_t i = 1; i < ks.size(); ++i) {
    const Knot& a = ks[i - 1];
    const Knot& b = ks[i];
    if (a.y == b.y) {
      if (a.y == x) grade = Rational::max(grade, sup_membership_over(u, a.x, b.x));
      continue;
    }
    if (x < Rational::min(a.y, b.y) || x > Rational::max(a.y, b.y)) continue;
    Rational z = a.x + (x - a.y) * (b.x - a.x) / (b.y - a.y);
    grade = Rational::max(grade, u.membership(z));
  }
  return grade;
}

StepFuzzySet union_extension(std::span<const PLMap> maps, const StepFuzzySet& u) {
  if (maps.empty()) throw std::invalid_argument("union_extension: empty map list");
  std::vector<Level> levels;
  levels.reserve(u.levels().size());
  for (const Level& l : u.levels()) {
    IntervalUnion cut = pl_image(maps[0], l.cut);
    for (std::size_t i = 1; i < maps.size(); ++i)
      cut = IntervalUnion::unite(cut, pl_image(maps[i], l.cut));
    levels.push_back(Level{l.alpha, std::move(cut)});
  }
  IntervalUnion support = pl_image(maps[0], u.support());
  for (std::size_t i = 1; i < maps.size(); ++i)
    support = IntervalUnion::unite(support, pl_image(maps[i], u.support()));
  return StepFuzzySet::make(std::move(levels), std::move(support));
}

ContractionRatioReport contraction_ratio_report(
    std::span<const PLMap> maps,
    std::span<const std::pair<StepFuzzySet, StepFuzzySet>> pairs, Metric metric) {
  if (maps.empty()) throw std::invalid_argument("contraction_ratio_report: empty map list");
  for (const PLMap& f : maps) {
    if (!is_contraction(f))
      throw std::invalid_argument("contraction_ratio_report: map with Lipschitz constant " +
                                  lipschitz_constant(f).to_fraction_string() +
                                  " is not a contraction");
  }
  auto distance = [&](const StepFuzzySet& a, const StepFuzzySet& b) {
    if (metric == Metric::kDinf) return level_metric_dinf(a, b);
    return skorokhod_d0(a, b).lower;
  };

  ContractionRatioReport report;
  report.metric = metric;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [u, v] = pairs[i];
    Rational base = distance(u, v);
    RatioEntry entry{i, Rational(0), base, std::nullopt, false};
    if (base.is_zero()) {
      entry.skipped = true;
    } else {
      StepFuzzySet eu = union_extension(maps, u);
      StepFuzzySet ev = union_extension(maps, v);
      entry.extended_distance = distance(eu, ev);
      entry.ratio = entry.extended_distance / base;
      if (!report.max_ratio || *entry.ratio > *report.max_ratio) {
        report.max_ratio = entry.ratio;
        report.witness_pair = i;
      }
    }
    report.entries.push_back(std::move(entry));
  }
  report.contraction_refuted = report.max_ratio && *report.max_ratio >= Rational(1);
  return report;
}

}  // namespace fuzzdist
