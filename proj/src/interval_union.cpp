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
#include "fuzzdist/interval_union.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzzdist {

IntervalUnion IntervalUnion::canonicalize(
    const std::vector<std::pair<Rational, Rational>>& raw) {
  if (raw.empty()) throw std::invalid_argument("IntervalUnion: empty interval list");
  std::vector<Interval> sorted;
  sorted.reserve(raw.size());
  for (const auto& [lo, hi] : raw) {
    if (lo > hi) {
      throw std::invalid_argument("IntervalUnion: interval with lo > hi: [" +
                                  lo.to_fraction_string() + ", " + hi.to_fraction_string() + "]");
    }
    sorted.push_back(Interval{lo, hi});
  }
  std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  IntervalUnion out;
  for (const Interval& iv : sorted) {
    // touching intervals merge too: [0, 1/2] + [1/2, 1] = [0, 1]
    if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi) {
      if (iv.hi > out.parts_.back().hi) out.parts_.back().hi = iv.hi;
    } else {
      out.parts_.push_back(iv);
    }
  }
  return out;
}

IntervalUnion IntervalUnion::interval(const Rational& lo, const Rational& hi) {
  return canonicalize({{lo, hi}});
}

IntervalUnion IntervalUnion::point(const Rational& x) { return interval(x, x); }

bool IntervalUnion::contains(const Rational& x) const {
  for (const Interval& iv : parts_) {
    if (x < iv.lo) return false;
    if (x <= iv.hi) return true;
  }
  return false;
}

bool IntervalUnion::encloses(const IntervalUnion& other) const {
  // canonical parts are sorted and separated, so each part of `other` must
  // fit inside a single part of *this
  std::size_t i = 0;
  for (const Interval& b : other.parts_) {
    while (i < parts_.size() && parts_[i].hi < b.lo) ++i;
    if (i == parts_.size() || b.lo < parts_[i].lo || parts_[i].hi < b.hi) return false;
  }
  return true;
}

Rational IntervalUnion::distance_to(const Rational& x) const {
  Rational best;
  bool have = false;
  for (const Interval& iv : parts_) {
    Rational d;
    if (x < iv.lo)
      d = iv.lo - x;
    else if (x > iv.hi)
      d = x - iv.hi;
    else
      return Rational(0);
    if (!have || d < best) {
      best = d;
      have = true;
    }
  }
  return best;
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<std::pair<Rational, Rational>> raw;
  raw.reserve(a.parts_.size() + b.parts_.size());
  for (const Interval& iv : a.parts_) raw.emplace_back(iv.lo, iv.hi);
  for (const Interval& iv : b.parts_) raw.emplace_back(iv.lo, iv.hi);
  return canonicalize(raw);
}

std::string IntervalUnion::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " u ";
    if (parts_[i].lo == parts_[i].hi) {
      out += "{" + parts_[i].lo.to_fraction_string() + "}";
    } else {
      out += "[" + parts_[i].lo.to_fraction_string() + ", " +
             parts_[i].hi.to_fraction_string() + "]";
    }
  }
  return out;
}

}  // namespace fuzzdist
