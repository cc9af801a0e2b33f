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
#ifndef FUZZDIST_ZADEH_HPP
#define FUZZDIST_ZADEH_HPP

#include <optional>
#include <span>
#include <vector>

#include "fuzzdist/pl_map.hpp"
#include "fuzzdist/step_fuzzy_set.hpp"

namespace fuzzdist {

/**
 * Zadeh extension of f applied to u. For continuous f the extension's
 * alpha-cuts are exactly the images of u's alpha-cuts, so the lift is
 * computed cut by cut: same level breakpoints, image cuts, image support.
 * Points outside f's range end up in no cut and keep membership 0.
 */
StepFuzzySet zadeh_extend(const PLMap& f, const StepFuzzySet& u);

/// Pointwise route to the same value: sup of u over the preimage f^{-1}(x).
/// Exists as an independent cross-check of the cut-image construction.
Rational zadeh_membership_pointwise(const PLMap& f, const StepFuzzySet& u, const Rational& x);

/// The multi-map lift: per level, the union of the individual extensions'
/// cuts (the fuzzy counterpart of an iterated-function-system step).
StepFuzzySet union_extension(std::span<const PLMap> maps, const StepFuzzySet& u);

enum class Metric { kDinf, kD0 };

struct RatioEntry {
  std::size_t pair_index;
  Rational extended_distance;
  Rational base_distance;
  std::optional<Rational> ratio;  // empty when the pair was skipped
  bool skipped;                   // base distance was zero
};

struct ContractionRatioReport {
  Metric metric;
  std::vector<RatioEntry> entries;
  std::optional<Rational> max_ratio;
  std::optional<std::size_t> witness_pair;
  /// A ratio >= 1 on some pair: no factor < 1 can work, contractivity of
  /// the extension is refuted on this data.
  bool contraction_refuted = false;
};

/**
 * For each pair (u, v), the ratio distance(ext(u), ext(v)) / distance(u, v)
 * where ext is the Zadeh extension of a single map or the union extension
 * of several. Every map must be a contraction. Pairs at distance zero are
 * skipped and reported as such.
 */
ContractionRatioReport contraction_ratio_report(
    std::span<const PLMap> maps,
    std::span<const std::pair<StepFuzzySet, StepFuzzySet>> pairs, Metric metric);

}  // namespace fuzzdist

#endif  // FUZZDIST_ZADEH_HPP
