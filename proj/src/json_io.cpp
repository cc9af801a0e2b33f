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
#include "fuzzdist/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace fuzzdist::jsonio {

json to_json(const Rational& r) { return r.to_fraction_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    auto parsed = Rational::parse(j.get<std::string>());
    if (!parsed) throw std::runtime_error("cannot parse rational \"" + j.get<std::string>() + "\"");
    return *parsed;
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) {
    throw std::runtime_error(
        "rational values must be strings like \"3/8\" or \"0.375\" (or integers); binary "
        "floating point does not round-trip exactly");
  }
  throw std::runtime_error("expected a rational, found " + std::string(j.type_name()));
}

json to_json(const IntervalUnion& iu) {
  json arr = json::array();
  for (const Interval& part : iu.parts())
    arr.push_back(json::array({to_json(part.lo), to_json(part.hi)}));
  return arr;
}

IntervalUnion interval_union_from_json(const json& j) {
  const json& arr = j.is_object() && j.contains("intervals") ? j.at("intervals") : j;
  if (!arr.is_array()) throw std::runtime_error("expected an array of [lo, hi] pairs");
  std::vector<std::pair<Rational, Rational>> raw;
  for (const json& pair : arr) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::runtime_error("each interval must be a [lo, hi] pair");
    raw.emplace_back(rational_from_json(pair[0]), rational_from_json(pair[1]));
  }
  return IntervalUnion::canonicalize(raw);
}

json to_json(const StepFuzzySet& u) {
  json levels = json::array();
  for (const Level& l : u.levels())
    levels.push_back(json{{"alpha", to_json(l.alpha)}, {"cut", to_json(l.cut)}});
  return json{{"support", to_json(u.support())}, {"levels", levels}};
}

StepFuzzySet step_fuzzy_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("levels"))
    throw std::runtime_error("a fuzzy set needs a \"levels\" array");
  std::vector<Level> levels;
  for (const json& l : j.at("levels")) {
    levels.push_back(
        Level{rational_from_json(l.at("alpha")), interval_union_from_json(l.at("cut"))});
  }
  if (j.contains("support"))
    return StepFuzzySet::make(std::move(levels), interval_union_from_json(j.at("support")));
  return StepFuzzySet::make(std::move(levels));
}

namespace {

std::vector<Knot> knots_from_json(const json& j) {
  if (!j.is_object() || !j.contains("knots"))
    throw std::runtime_error("expected an object with a \"knots\" array");
  std::vector<Knot> knots;
  for (const json& k : j.at("knots")) {
    if (!k.is_array() || k.size() != 2)
      throw std::runtime_error("each knot must be an [x, y] pair");
    knots.push_back(Knot{rational_from_json(k[0]), rational_from_json(k[1])});
  }
  return knots;
}

json knots_to_json(const std::vector<Knot>& knots) {
  json arr = json::array();
  for (const Knot& k : knots) arr.push_back(json::array({to_json(k.x), to_json(k.y)}));
  return json{{"knots", arr}};
}

}  // namespace

json to_json(const PLMap& f) { return knots_to_json(f.knots()); }

PLMap pl_map_from_json(const json& j) { return PLMap::make(knots_from_json(j)); }

json to_json(const Reparam& t) { return knots_to_json(t.knots()); }

Reparam reparam_from_json(const json& j) { return Reparam::make(knots_from_json(j)); }

json to_json(const LowerBoundCertificate& cert) {
  json bands = json::array();
  for (const CertificateBand& b : cert.window_bands) {
    bands.push_back(json{{"band", b.band_index},
                         {"level_lo", to_json(b.level_lo)},
                         {"level_hi", to_json(b.level_hi)},
                         {"hausdorff", to_json(b.hausdorff_value)}});
  }
  return json{{"probe_level", to_json(cert.probe_level)},
              {"epsilon", to_json(cert.epsilon)},
              {"floor", to_json(cert.floor)},
              {"window_bands", bands}};
}

json to_json(const DistanceReport& report) {
  json j{{"method", to_string(report.method)},
         {"lower", to_json(report.lower)},
         {"upper", to_json(report.upper)}};
  if (report.exact()) j["value"] = to_json(report.lower);
  if (report.witness) j["witness"] = to_json(*report.witness);
  if (report.certificate) j["certificate"] = to_json(*report.certificate);
  return j;
}

json to_json(const ClaimReport& report) {
  json j{{"claim", report.claim},
         {"depth", report.depth},
         {"value", to_json(report.value)},
         {"expected", to_json(report.expected)},
         {"comparison", report.at_least ? "ge" : "eq"},
         {"pass", report.pass}};
  if (report.lambda) j["lambda"] = to_json(*report.lambda);
  if (report.distance.witness) j["witness"] = to_json(*report.distance.witness);
  if (report.certificate) j["certificate"] = to_json(*report.certificate);
  if (report.oracle_lower) j["oracle_lower"] = to_json(*report.oracle_lower);
  if (report.oracle_upper) j["oracle_upper"] = to_json(*report.oracle_upper);
  if (!report.failures.empty()) j["failures"] = report.failures;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

StepFuzzySet load_fuzzy_set(const std::string& path) {
  try {
    return step_fuzzy_set_from_json(load_json_file(path));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path + ": " + e.what());
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

IntervalUnion load_interval_union(const std::string& path) {
  try {
    return interval_union_from_json(load_json_file(path));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path + ": " + e.what());
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

PLMap load_pl_map(const std::string& path) {
  try {
    return pl_map_from_json(load_json_file(path));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path + ": " + e.what());
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace fuzzdist::jsonio
