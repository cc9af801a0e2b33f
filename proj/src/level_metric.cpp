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
#include "fuzzdist/level_metric.hpp"

#include <algorithm>

#include "fuzzdist/hausdorff.hpp"

namespace fuzzdist {

DinfBreakdown level_metric_dinf_breakdown(const StepFuzzySet& u, const StepFuzzySet& v) {
  // merged level grid; both cut maps are constant on each merged band and
  // left-continuous, so evaluating at the band's right end is exact
  std::vector<Rational> grid;
  grid.reserve(u.levels().size() + v.levels().size());
  for (const Level& l : u.levels()) grid.push_back(l.alpha);
  for (const Level& l : v.levels()) grid.push_back(l.alpha);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  DinfBreakdown out{Rational(0), Rational(0), Rational(0)};
  for (const Rational& alpha : grid) {
    out.over_positive_bands =
        Rational::max(out.over_positive_bands, hausdorff(u.alpha_cut(alpha), v.alpha_cut(alpha)));
  }
  out.support_comparison = hausdorff(u.support(), v.support());
  out.value = Rational::max(out.over_positive_bands, out.support_comparison);
  return out;
}

Rational level_metric_dinf(const StepFuzzySet& u, const StepFuzzySet& v) {
  return level_metric_dinf_breakdown(u, v).value;
}

StepFuzzySet apply_reparam(const Reparam& t, const StepFuzzySet& u) {
  std::vector<Level> levels;
  levels.reserve(u.levels().size());
  for (const Level& l : u.levels()) levels.push_back(Level{t.evaluate(l.alpha), l.cut});
  return StepFuzzySet::make(std::move(levels), u.support());
}

}  // namespace fuzzdist
