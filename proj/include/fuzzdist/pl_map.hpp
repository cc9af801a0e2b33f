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
#ifndef FUZZDIST_PL_MAP_HPP
#define FUZZDIST_PL_MAP_HPP

#include <vector>

#include "fuzzdist/interval_union.hpp"
#include "fuzzdist/rational.hpp"
#include "fuzzdist/reparam.hpp"

namespace fuzzdist {

/**
 * Continuous piecewise-linear self-map of [0, 1]: knot abscissas strictly
 * increase from 0 to 1, ordinates stay inside [0, 1]. Not required to be
 * monotone or surjective. This is the dynamics the Zadeh extension lifts.
 */
class PLMap {
 public:
  static PLMap make(std::vector<Knot> knots);
  static PLMap identity();
  /// The linear map x -> slope * x; the slope must land the range in [0, 1].
  static PLMap linear(const Rational& slope);

  const std::vector<Knot>& knots() const { return knots_; }
  Rational evaluate(const Rational& x) const;

 private:
  explicit PLMap(std::vector<Knot> knots) : knots_(std::move(knots)) {}
  std::vector<Knot> knots_;
};

/// Exact image f(A) of an interval union under the map: each interval is
/// split at the knots, the per-piece monotone images are unioned and
/// canonicalized. Throws when A is not contained in [0, 1].
IntervalUnion pl_image(const PLMap& f, const IntervalUnion& a);

/// Max over segments of |slope|; the map contracts iff this is < 1.
Rational lipschitz_constant(const PLMap& f);

bool is_contraction(const PLMap& f);

}  // namespace fuzzdist

#endif  // FUZZDIST_PL_MAP_HPP
