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
#ifndef FUZZDIST_STEP_FUZZY_SET_HPP
#define FUZZDIST_STEP_FUZZY_SET_HPP

#include <string>
#include <vector>

#include "fuzzdist/interval_union.hpp"
#include "fuzzdist/rational.hpp"

namespace fuzzdist {

/** One band of a step fuzzy set: the cut valid on (previous alpha, alpha]. */
struct Level {
  Rational alpha;
  IntervalUnion cut;
};

/** A single validation finding; `index` is the 0-based level it refers to. */
struct Diagnostic {
  enum class Code {
    kNoLevels,
    kAlphaOutOfRange,
    kAlphaNotIncreasing,
    kTopLevelMissing,
    kCutNotCanonical,
    kNestednessViolation,
    kSupportViolation,
  };
  Code code;
  std::size_t index;
  std::string message;
};

std::string to_string(Diagnostic::Code code);

/**
 * Upper semicontinuous fuzzy set on the line taking finitely many values,
 * stored as its alpha-cuts. levels() is strictly increasing in alpha and
 * ends at alpha = 1; the cut map is constant on each band (alpha_{k-1},
 * alpha_k] and the cut for alpha in (0, alpha_1] is the first level's cut.
 * The support (the 0-cut) is stored explicitly; it defaults to the first
 * cut, which is the closure of the union of all cuts, but a larger
 * canonical union is accepted.
 *
 * Values are immutable after construction; every operation on them is a
 * pure function, so sharing across threads is safe.
 */
class StepFuzzySet {
 public:
  /// Validates and canonicalizes (consecutive levels with equal cuts merge
  /// into one band). Throws std::invalid_argument listing the diagnostics
  /// when the input is not a valid step fuzzy set.
  static StepFuzzySet make(std::vector<Level> levels, IntervalUnion support);
  /// Same, with support defaulted to the first (largest) cut.
  static StepFuzzySet make(std::vector<Level> levels);
  /// No validation, no canonicalization; for building intentionally broken
  /// values to feed through validate().
  static StepFuzzySet unchecked(std::vector<Level> levels, IntervalUnion support);

  const std::vector<Level>& levels() const { return levels_; }
  const IntervalUnion& support() const { return support_; }
  std::size_t band_count() const { return levels_.size(); }

  /// The alpha-cut. alpha = 0 returns the support; alpha in (0, 1] returns
  /// the cut of the band containing alpha. Throws outside [0, 1].
  const IntervalUnion& alpha_cut(const Rational& alpha) const;

  /// Membership grade of a point: the largest level whose cut contains x,
  /// or 0 when x lies in no cut.
  Rational membership(const Rational& x) const;

  /// True when the support equals the closure of the union of all cuts,
  /// i.e. the stored value really is the 0-cut of the membership function.
  bool is_genuine() const { return support_ == levels_.front().cut; }

  const IntervalUnion& top_cut() const { return levels_.back().cut; }

  friend bool operator==(const StepFuzzySet& a, const StepFuzzySet& b) {
    return a.support_ == b.support_ && a.levels_.size() == b.levels_.size() &&
           std::equal(a.levels_.begin(), a.levels_.end(), b.levels_.begin(),
                      [](const Level& x, const Level& y) {
                        return x.alpha == y.alpha && x.cut == y.cut;
                      });
  }
  friend bool operator!=(const StepFuzzySet& a, const StepFuzzySet& b) { return !(a == b); }

 private:
  StepFuzzySet(std::vector<Level> levels, IntervalUnion support)
      : levels_(std::move(levels)), support_(std::move(support)) {}
  std::vector<Level> levels_;
  IntervalUnion support_;
};

/// Reports every violated invariant of the value (nestedness, canonical
/// cuts, top level present, support consistency) with offending indices.
/// Empty result iff the value is valid.
std::vector<Diagnostic> validate(const StepFuzzySet& u);

}  // namespace fuzzdist

#endif  // FUZZDIST_STEP_FUZZY_SET_HPP
