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
#ifndef FUZZDIST_INTERVAL_UNION_HPP
#define FUZZDIST_INTERVAL_UNION_HPP

#include <string>
#include <utility>
#include <vector>

#include "fuzzdist/rational.hpp"

namespace fuzzdist {

/** Closed interval [lo, hi] of rationals; lo == hi is a point. */
struct Interval {
  Rational lo;
  Rational hi;
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

/**
 * Canonical finite union of closed intervals: sorted by left endpoint,
 * pairwise disjoint with actual gaps between parts (touching or overlapping
 * input intervals get merged). Always non-empty: this is the value of an
 * alpha-cut, and cuts of a valid fuzzy set are never empty.
 */
class IntervalUnion {
 public:
  /// Merges and sorts raw [lo, hi] pairs. Throws std::invalid_argument on an
  /// empty list or any pair with lo > hi. Idempotent on canonical input.
  static IntervalUnion canonicalize(const std::vector<std::pair<Rational, Rational>>& raw);

  /// Single interval [lo, hi].
  static IntervalUnion interval(const Rational& lo, const Rational& hi);
  /// Degenerate single point {x}.
  static IntervalUnion point(const Rational& x);

  const std::vector<Interval>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }

  const Rational& min() const { return parts_.front().lo; }
  const Rational& max() const { return parts_.back().hi; }

  bool contains(const Rational& x) const;
  /// Set inclusion: every point of `other` lies in *this.
  bool encloses(const IntervalUnion& other) const;

  /// Distance from x to the nearest point of the union (0 when contained).
  Rational distance_to(const Rational& x) const;

  static IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b);

  friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const IntervalUnion& a, const IntervalUnion& b) { return !(a == b); }

  /// "[3/8, 1]" or "[7/16, 1/2] u [21/32, 3/4]"; points print as "{1}".
  std::string to_string() const;

 private:
  IntervalUnion() = default;
  std::vector<Interval> parts_;
};

}  // namespace fuzzdist

#endif  // FUZZDIST_INTERVAL_UNION_HPP
