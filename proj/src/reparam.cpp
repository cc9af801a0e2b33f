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
#include "fuzzdist/reparam.hpp"

#include <stdexcept>

namespace fuzzdist {

Reparam Reparam::make(std::vector<Knot> knots) {
  if (knots.size() < 2) throw std::invalid_argument("Reparam: needs at least the two end knots");
  const Rational zero(0), one(1);
  if (knots.front().x != zero || knots.front().y != zero)
    throw std::invalid_argument("Reparam: first knot must be (0, 0)");
  if (knots.back().x != one || knots.back().y != one)
    throw std::invalid_argument("Reparam: last knot must be (1, 1)");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (knots[i].x <= knots[i - 1].x || knots[i].y <= knots[i - 1].y)
      throw std::invalid_argument("Reparam: knots must increase strictly in both coordinates");
  }
  return Reparam(std::move(knots));
}

Reparam Reparam::identity() {
  return Reparam({Knot{Rational(0), Rational(0)}, Knot{Rational(1), Rational(1)}});
}

Rational Reparam::evaluate(const Rational& x) const {
  if (x < Rational(0) || x > Rational(1))
    throw std::invalid_argument("Reparam: argument outside [0, 1]");
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

Reparam Reparam::inverse() const {
  std::vector<Knot> swapped;
  swapped.reserve(knots_.size());
  for (const Knot& k : knots_) swapped.push_back(Knot{k.y, k.x});
  return Reparam::make(std::move(swapped));
}

Rational reparam_sup_deviation(const Reparam& t) {
  Rational best(0);
  for (const Knot& k : t.knots()) best = Rational::max(best, (k.y - k.x).abs());
  return best;
}

}  // namespace fuzzdist
