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
#ifndef FUZZDIST_LEVEL_METRIC_HPP
#define FUZZDIST_LEVEL_METRIC_HPP

#include "fuzzdist/reparam.hpp"
#include "fuzzdist/step_fuzzy_set.hpp"

namespace fuzzdist {

/** The two routes to the level-wise distance, for the checked mode. */
struct DinfBreakdown {
  Rational over_positive_bands;  // sup over alpha in (0, 1]
  Rational support_comparison;   // the alpha = 0 term
  Rational value;                // max of the two, i.e. sup over alpha in [0, 1]
};

DinfBreakdown level_metric_dinf_breakdown(const StepFuzzySet& u, const StepFuzzySet& v);

/**
 * Level-wise metric: sup over alpha of the Hausdorff distance between the
 * alpha-cuts. Merging the two level grids makes both cut maps constant on
 * each band, so the sup is an exact max over finitely many bands plus the
 * support comparison. For genuine fuzzy sets (support = largest cut) the
 * support term never exceeds the band max, so the sup over (0, 1] already
 * equals the sup over [0, 1].
 */
Rational level_metric_dinf(const StepFuzzySet& u, const StepFuzzySet& v);

/// The fuzzy set t(u): level breakpoints move through t, cuts and support
/// stay. Exact, since t maps rationals to rationals.
StepFuzzySet apply_reparam(const Reparam& t, const StepFuzzySet& u);

}  // namespace fuzzdist

#endif  // FUZZDIST_LEVEL_METRIC_HPP
