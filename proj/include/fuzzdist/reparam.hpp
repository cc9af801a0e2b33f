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
#ifndef FUZZDIST_REPARAM_HPP
#define FUZZDIST_REPARAM_HPP

#include <utility>
#include <vector>

#include "fuzzdist/rational.hpp"

namespace fuzzdist {

/** A knot (x, y) of a piecewise-linear graph. */
struct Knot {
  Rational x;
  Rational y;
  friend bool operator==(const Knot& a, const Knot& b) { return a.x == b.x && a.y == b.y; }
};

/**
 * Strictly increasing piecewise-linear homeomorphism of [0, 1] onto itself:
 * knots run from (0, 0) to (1, 1) and are strictly increasing in both
 * coordinates. These are the level reparameterizations the Skorokhod metric
 * optimizes over; the inverse is again one (swap the coordinates).
 */
class Reparam {
 public:
  static Reparam make(std::vector<Knot> knots);
  static Reparam identity();

  const std::vector<Knot>& knots() const { return knots_; }

  Rational evaluate(const Rational& x) const;
  Reparam inverse() const;

  friend bool operator==(const Reparam& a, const Reparam& b) { return a.knots_ == b.knots_; }

 private:
  explicit Reparam(std::vector<Knot> knots) : knots_(std::move(knots)) {}
  std::vector<Knot> knots_;
};

/// Exact sup of |t(x) - x| over [0, 1]. t - id is piecewise linear and
/// vanishes at both ends, so the sup is attained at a knot.
Rational reparam_sup_deviation(const Reparam& t);

}  // namespace fuzzdist

#endif  // FUZZDIST_REPARAM_HPP
