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
#include "fuzzdist/hausdorff.hpp"

namespace fuzzdist {

Rational directed_hausdorff(const IntervalUnion& a, const IntervalUnion& b) {
  Rational best(0);
  // dist(., b) restricted to an interval of `a` is piecewise linear and
  // peaks either at the interval's endpoints or at a gap midpoint of `b`
  // lying inside it.
  for (const Interval& iv : a.parts()) {
    best = Rational::max(best, b.distance_to(iv.lo));
    best = Rational::max(best, b.distance_to(iv.hi));
  }
  const auto& bp = b.parts();
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    Rational mid = (bp[i].hi + bp[i + 1].lo) / Rational(2);
    if (a.contains(mid)) best = Rational::max(best, b.distance_to(mid));
  }
  return best;
}

Rational hausdorff(const IntervalUnion& a, const IntervalUnion& b) {
  return Rational::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

}  // namespace fuzzdist
