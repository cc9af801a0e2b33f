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
#ifndef FUZZDIST_HAUSDORFF_HPP
#define FUZZDIST_HAUSDORFF_HPP

#include "fuzzdist/interval_union.hpp"
#include "fuzzdist/rational.hpp"

namespace fuzzdist {

/// sup over x in A of dist(x, B), exact.
Rational directed_hausdorff(const IntervalUnion& a, const IntervalUnion& b);

/**
 * Exact Hausdorff distance between two canonical interval unions:
 * max of the two directed distances. The point-to-set distance function is
 * piecewise linear with peaks only at gap midpoints, so the supremum is
 * attained at an interval endpoint of one union or at a gap midpoint of the
 * other union, all of which are rational.
 */
Rational hausdorff(const IntervalUnion& a, const IntervalUnion& b);

}  // namespace fuzzdist

#endif  // FUZZDIST_HAUSDORFF_HPP
