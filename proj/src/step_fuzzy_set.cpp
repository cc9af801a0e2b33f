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
#include "fuzzdist/step_fuzzy_set.hpp"

#include <stdexcept>

namespace fuzzdist {

std::string to_string(Diagnostic::Code code) {
  switch (code) {
    case Diagnostic::Code::kNoLevels: return "no-levels";
    case Diagnostic::Code::kAlphaOutOfRange: return "alpha-out-of-range";
    case Diagnostic::Code::kAlphaNotIncreasing: return "alpha-not-increasing";
    case Diagnostic::Code::kTopLevelMissing: return "top-level-missing";
    case Diagnostic::Code::kCutNotCanonical: return "cut-not-canonical";
    case Diagnostic::Code::kNestednessViolation: return "nestedness-violation";
    case Diagnostic::Code::kSupportViolation: return "support-violation";
  }
  return "unknown";
}

namespace {

void check_canonical(const IntervalUnion& iu, std::size_t index,
                     std::vector<Diagnostic>& out) {
  const auto& parts = iu.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].lo > parts[i].hi) {
      out.push_back({Diagnostic::Code::kCutNotCanonical, index, "interval with lo > hi"});
      return;
    }
    if (i > 0 && parts[i].lo <= parts[i - 1].hi) {
      out.push_back({Diagnostic::Code::kCutNotCanonical, index,
                     "parts overlap or touch and should be merged"});
      return;
    }
  }
}

std::vector<Diagnostic> validate_parts(const std::vector<Level>& levels,
                                       const IntervalUnion& support) {
  std::vector<Diagnostic> out;
  if (levels.empty()) {
    out.push_back({Diagnostic::Code::kNoLevels, 0, "a step fuzzy set needs at least one level"});
    return out;
  }
  const Rational zero(0), one(1);
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k].alpha <= zero || levels[k].alpha > one) {
      out.push_back({Diagnostic::Code::kAlphaOutOfRange, k,
                     "alpha " + levels[k].alpha.to_fraction_string() + " outside (0, 1]"});
    }
    if (k > 0 && levels[k].alpha <= levels[k - 1].alpha) {
      out.push_back({Diagnostic::Code::kAlphaNotIncreasing, k,
                     "alpha " + levels[k].alpha.to_fraction_string() +
                         " does not increase past " +
                         levels[k - 1].alpha.to_fraction_string()});
    }
    check_canonical(levels[k].cut, k, out);
    if (k > 0 && !levels[k - 1].cut.encloses(levels[k].cut)) {
      out.push_back({Diagnostic::Code::kNestednessViolation, k,
                     "cut at level " + std::to_string(k + 1) +
                         " is not contained in the one below"});
    }
  }
  if (levels.back().alpha != one) {
    out.push_back({Diagnostic::Code::kTopLevelMissing, levels.size() - 1,
                   "last level must sit at alpha = 1, found " +
                       levels.back().alpha.to_fraction_string()});
  }
  check_canonical(support, 0, out);
  if (!support.encloses(levels.front().cut)) {
    out.push_back({Diagnostic::Code::kSupportViolation, 0,
                   "support does not contain the largest cut"});
  }
  return out;
}

}  // namespace

StepFuzzySet StepFuzzySet::make(std::vector<Level> levels, IntervalUnion support) {
  auto diagnostics = validate_parts(levels, support);
  if (!diagnostics.empty()) {
    std::string msg = "invalid step fuzzy set:";
    for (const auto& d : diagnostics) msg += " [" + to_string(d.code) + "] " + d.message + ";";
    throw std::invalid_argument(msg);
  }
  // canonical form: adjacent bands with identical cuts collapse into one
  std::vector<Level> merged;
  merged.reserve(levels.size());
  for (auto& level : levels) {
    if (!merged.empty() && merged.back().cut == level.cut) {
      merged.back().alpha = level.alpha;
    } else {
      merged.push_back(std::move(level));
    }
  }
  return StepFuzzySet(std::move(merged), std::move(support));
}

StepFuzzySet StepFuzzySet::make(std::vector<Level> levels) {
  if (levels.empty()) throw std::invalid_argument("invalid step fuzzy set: no levels");
  IntervalUnion support = levels.front().cut;
  return make(std::move(levels), std::move(support));
}

StepFuzzySet StepFuzzySet::unchecked(std::vector<Level> levels, IntervalUnion support) {
  return StepFuzzySet(std::move(levels), std::move(support));
}

const IntervalUnion& StepFuzzySet::alpha_cut(const Rational& alpha) const {
  if (alpha.sign() < 0 || alpha > Rational(1)) {
    throw std::invalid_argument("alpha_cut: alpha " + alpha.to_fraction_string() +
                                " outside [0, 1]");
  }
  if (alpha.is_zero()) return support_;
  // left-continuous band lookup: first level with alpha_k >= alpha
  std::size_t lo = 0, hi = levels_.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (levels_[mid].alpha >= alpha)
      hi = mid;
    else
      lo = mid + 1;
  }
  return levels_[lo].cut;
}

Rational StepFuzzySet::membership(const Rational& x) const {
  // cuts are nested, so the levels containing x form a prefix
  Rational grade(0);
  for (const Level& level : levels_) {
    if (!level.cut.contains(x)) break;
    grade = level.alpha;
  }
  return grade;
}

std::vector<Diagnostic> validate(const StepFuzzySet& u) {
  return validate_parts(u.levels(), u.support());
}

}  // namespace fuzzdist
