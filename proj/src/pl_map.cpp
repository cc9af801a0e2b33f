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
#include "fuzzdist/pl_map.hpp"

#include <stdexcept>

namespace fuzzdist {

PLMap PLMap::make(std::vector<Knot> knots) {
  if (knots.size() < 2) throw std::invalid_argument("PLMap: needs at least two knots");
  const Rational zero(0), one(1);
  if (knots.front().x != zero || knots.back().x != one)
    throw std::invalid_argument("PLMap: knot abscissas must run from 0 to 1");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (i > 0 && knots[i].x <= knots[i - 1].x)
      throw std::invalid_argument("PLMap: knot abscissas must increase strictly");
    if (knots[i].y < zero || knots[i].y > one)
      throw std::invalid_argument("PLMap: value " + knots[i].y.to_fraction_string() +
                                  " outside [0, 1]");
  }
  return PLMap(std::move(knots));
}

PLMap PLMap::identity() {
  return make({Knot{Rational(0), Rational(0)}, Knot{Rational(1), Rational(1)}});
}

PLMap PLMap::linear(const Rational& slope) {
  return make({Knot{Rational(0), Rational(0)}, Knot{Rational(1), slope}});
}

Rational PLMap::evaluate(const Rational& x) const {
  if (x < Rational(0) || x > Rational(1))
    throw std::invalid_argument("PLMap: argument outside [0, 1]");
  std::size_t lo = 0, hi = knots_.size() - 1;
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (knots_[mid].x <= x)
      lo = mid;
    else
      hi = mid;
  }
  const Knot& a = knots_[lo];
  const Knot& b = knots_[hi];
  if (x == a.x) return a.y;
  if (x == b.x) return b.y;
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

IntervalUnion pl_image(const PLMap& f, const IntervalUnion& a) {
  if (a.min() < Rational(0) || a.max() > Rational(1))
    throw std::invalid_argument("pl_image: set reaches outside the map's domain [0, 1]");
  std::vector<std::pair<Rational, Rational>> images;
  for (const Interval& iv : a.parts()) {
    // split [lo, hi] at the knots; on each piece f is monotone linear
    Rational left = iv.lo;
    Rational fleft = f.evaluate(left);
    for (const Knot& k : f.knots()) {
      if (k.x <= left || k.x >= iv.hi) continue;
      images.emplace_back(Rational::min(fleft, k.y), Rational::max(fleft, k.y));
      left = k.x;
      fleft = k.y;
    }
    Rational fright = f.evaluate(iv.hi);
    images.emplace_back(Rational::min(fleft, fright), Rational::max(fleft, fright));
  }
  return IntervalUnion::canonicalize(images);
}

Rational lipschitz_constant(const PLMap& f) {
  Rational best(0);
  const auto& ks = f.knots();
  for (std::size_t i = 1; i < ks.size(); ++i) {
    Rational slope = (ks[i].y - ks[i - 1].y) / (ks[i].x - ks[i - 1].x);
    best = Rational::max(best, slope.abs());
  }
  return best;
}

bool is_contraction(const PLMap& f) { return lipschitz_constant(f) < Rational(1); }

}  // namespace fuzzdist
