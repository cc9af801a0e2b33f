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
#ifndef FUZZDIST_JSON_IO_HPP
#define FUZZDIST_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "fuzzdist/counterexample.hpp"
#include "fuzzdist/pl_map.hpp"
#include "fuzzdist/skorokhod.hpp"
#include "fuzzdist/step_fuzzy_set.hpp"

namespace fuzzdist::jsonio {

using nlohmann::json;

// Rationals travel as "p/q" strings (integers are also accepted on input,
// as are exact decimal strings). Binary floating-point JSON numbers are
// rejected: they cannot round-trip the exact values this library computes.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const IntervalUnion& iu);                 // [[lo, hi], ...]
IntervalUnion interval_union_from_json(const json& j);  // also accepts {"intervals": [...]}

// {"support": [[lo, hi], ...], "levels": [{"alpha": "p/q", "cut": [[lo, hi], ...]}, ...]}
json to_json(const StepFuzzySet& u);
StepFuzzySet step_fuzzy_set_from_json(const json& j);

json to_json(const PLMap& f);  // {"knots": [["x", "y"], ...]}
PLMap pl_map_from_json(const json& j);

json to_json(const Reparam& t);
Reparam reparam_from_json(const json& j);

json to_json(const LowerBoundCertificate& cert);
json to_json(const DistanceReport& report);
json to_json(const ClaimReport& report);

json load_json_file(const std::string& path);          // throws std::runtime_error
void save_json_file(const std::string& path, const json& j);

StepFuzzySet load_fuzzy_set(const std::string& path);
IntervalUnion load_interval_union(const std::string& path);
PLMap load_pl_map(const std::string& path);

}  // namespace fuzzdist::jsonio

#endif  // FUZZDIST_JSON_IO_HPP
