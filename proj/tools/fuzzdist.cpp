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

// Command-line front end: distance queries between fuzzy-set files, Zadeh
// extension of piecewise-linear maps, the counterexample reproduction, and
// plot-ready convergence tables. Results go to stdout, diagnostics to
// stderr; exit 0 on success, 1 on a failed verification, 2 on bad flags or
// unparseable input.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzdist/counterexample.hpp"
#include "fuzzdist/hausdorff.hpp"
#include "fuzzdist/json_io.hpp"
#include "fuzzdist/level_metric.hpp"
#include "fuzzdist/skorokhod.hpp"
#include "fuzzdist/zadeh.hpp"

namespace {

using namespace fuzzdist;
namespace jio = fuzzdist::jsonio;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string metric = "d0";
  std::string format = "text";
  std::vector<std::string> inputs;
  std::vector<std::string> map_paths;
  std::string output_path;
  std::string out_dir = ".";
  int depth = 3;
  int min_depth = 2;
  int max_depth = 6;
  std::string lambda = "1/2";
  std::string resolution;  // empty: per-depth default 2^-(N+3)
};

std::string display(const Rational& r) {
  std::string frac = r.to_fraction_string();
  std::string dec = r.to_decimal_string();
  if (dec != frac) return frac + " (= " + dec + ")";
  if (!r.den().is_one()) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", r.to_double());
    return frac + " (~ " + std::string(buf) + ")";
  }
  return frac;
}

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  auto parsed = Rational::parse(text);
  if (!parsed) throw std::invalid_argument(flag + ": cannot parse rational \"" + text + "\"");
  return *parsed;
}

void print_certificate_text(const LowerBoundCertificate& cert) {
  std::cout << "certificate: probe " << cert.probe_level.to_fraction_string() << ", epsilon "
            << cert.epsilon.to_fraction_string() << ", window floor d_H = "
            << cert.floor.to_fraction_string() << " over " << cert.window_bands.size()
            << " band(s)\n";
}

int cmd_dist(const RunConfig& cfg) {
  if (cfg.metric == "hausdorff") {
    IntervalUnion a = jio::load_interval_union(cfg.inputs[0]);
    IntervalUnion b = jio::load_interval_union(cfg.inputs[1]);
    Rational d = hausdorff(a, b);
    if (cfg.format == "json") {
      std::cout << jio::json{{"metric", "hausdorff"}, {"value", jio::to_json(d)}}.dump(2) << "\n";
    } else {
      std::cout << "metric: hausdorff\nvalue: " << display(d) << "\n";
    }
    return kExitPass;
  }

  StepFuzzySet u = jio::load_fuzzy_set(cfg.inputs[0]);
  StepFuzzySet v = jio::load_fuzzy_set(cfg.inputs[1]);

  if (cfg.metric == "dinf") {
    Rational d = level_metric_dinf(u, v);
    if (cfg.format == "json") {
      std::cout << jio::json{{"metric", "dinf"}, {"value", jio::to_json(d)}}.dump(2) << "\n";
    } else {
      std::cout << "metric: dinf\nvalue: " << display(d) << "\n";
    }
    return kExitPass;
  }

  DistanceReport report = skorokhod_d0(u, v);
  if (!report.value().is_zero()) {
    // best-effort certificate a hair under the computed value
    Rational eps = report.value() - report.value() / Rational(1024);
    report.certificate = d0_lower_bound_certificate(u, v, eps);
  }
  if (cfg.format == "json") {
    jio::json j = jio::to_json(report);
    j["metric"] = "d0";
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "metric: d0\nvalue: " << display(report.value()) << "\nmethod: "
            << to_string(report.method) << "\n";
  if (report.witness) {
    std::cout << "witness knots:";
    for (const Knot& k : report.witness->knots())
      std::cout << " (" << k.x.to_fraction_string() << ", " << k.y.to_fraction_string() << ")";
    std::cout << "\n";
  }
  if (report.certificate) print_certificate_text(*report.certificate);
  return kExitPass;
}

int cmd_extend(const RunConfig& cfg) {
  std::vector<PLMap> maps;
  maps.reserve(cfg.map_paths.size());
  for (const std::string& path : cfg.map_paths) maps.push_back(jio::load_pl_map(path));
  StepFuzzySet u = jio::load_fuzzy_set(cfg.inputs[0]);
  StepFuzzySet extended = union_extension(maps, u);
  jio::json j = jio::to_json(extended);
  if (cfg.output_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    jio::save_json_file(cfg.output_path, j);
    std::cout << "wrote " << cfg.output_path << "\n";
  }
  return kExitPass;
}

void print_claim_text(const ClaimReport& report) {
  std::cout << report.claim << " depth=" << report.depth;
  if (report.lambda) std::cout << " lambda=" << report.lambda->to_fraction_string();
  std::cout << ": d0 = " << report.value.to_fraction_string() << " (expected "
            << (report.at_least ? ">= " : "= ") << report.expected.to_fraction_string() << ") "
            << (report.pass ? "PASS" : "FAIL") << "\n";
  if (report.oracle_lower)
    std::cout << "  oracle bracket: [" << report.oracle_lower->to_fraction_string() << ", "
              << report.oracle_upper->to_fraction_string() << "]\n";
  if (report.certificate) {
    std::cout << "  ";
    print_certificate_text(*report.certificate);
  }
  for (const std::string& why : report.failures) std::cout << "  failure: " << why << "\n";
}

int cmd_counterexample(const RunConfig& cfg) {
  if (cfg.depth < 2) {
    std::cerr << "counterexample: --depth must be at least 2\n";
    return kExitUsage;
  }
  Rational lambda = parse_rational_flag(cfg.lambda, "--lambda");
  if (lambda < Rational(1, 2) || lambda >= Rational(1)) {
    std::cerr << "counterexample: --lambda must lie in [1/2, 1)\n";
    return kExitUsage;
  }

  CounterexampleInstance inst = build_instance(cfg.depth);
  std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);
  jio::save_json_file((dir / "u.json").string(), jio::to_json(inst.u));
  jio::save_json_file((dir / "v.json").string(), jio::to_json(inst.v));

  std::vector<ClaimReport> reports;
  reports.push_back(verify_claim1(inst));
  reports.push_back(verify_claim2(inst, lambda));
  reports.push_back(verify_remark9(inst));

  bool all_pass = true;
  for (const ClaimReport& r : reports) all_pass = all_pass && r.pass;

  if (cfg.format == "json") {
    jio::json arr = jio::json::array();
    for (const ClaimReport& r : reports) arr.push_back(jio::to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const ClaimReport& r : reports) print_claim_text(r);
    std::cout << "fuzzy sets written to " << (dir / "u.json").string() << " and "
              << (dir / "v.json").string() << "\n";
    std::cout << (all_pass ? "all claims PASS" : "some claims FAIL") << "\n";
  }
  return all_pass ? kExitPass : kExitFail;
}

int cmd_convergence(const RunConfig& cfg) {
  if (cfg.min_depth < 2 || cfg.max_depth < cfg.min_depth) {
    std::cerr << "convergence: need 2 <= min-depth <= max-depth\n";
    return kExitUsage;
  }
  std::optional<Rational> fixed_resolution;
  if (!cfg.resolution.empty()) {
    Rational r = parse_rational_flag(cfg.resolution, "--resolution");
    if (r.sign() <= 0) {
      std::cerr << "convergence: --resolution must be positive\n";
      return kExitUsage;
    }
    fixed_resolution = r;
  }

  std::cout << "depth,d0_dp,oracle_lower,oracle_upper,runtime_ms\n";
  for (int depth = cfg.min_depth; depth <= cfg.max_depth; ++depth) {
    auto started = std::chrono::steady_clock::now();
    CounterexampleInstance inst = build_instance(depth);
    Rational resolution;
    if (fixed_resolution) {
      resolution = *fixed_resolution;
    } else {
      resolution = Rational(1);
      for (int i = 0; i < depth + 3; ++i) resolution = resolution / Rational(2);
    }
    DistanceReport dp = skorokhod_d0(inst.u, inst.v);
    DistanceReport oracle = d0_bruteforce(inst.u, inst.v, resolution);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cout << depth << "," << dp.value().to_decimal_string() << ","
              << oracle.lower.to_decimal_string() << "," << oracle.upper.to_decimal_string()
              << "," << elapsed << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hausdorff / level-wise / Skorokhod distances between step fuzzy sets"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* dist = app.add_subcommand(
      "dist", "distance between two fuzzy-set files (interval-union files for hausdorff)");
  dist->add_option("--metric", cfg.metric, "hausdorff | dinf | d0")
      ->check(CLI::IsMember({"hausdorff", "dinf", "d0"}))
      ->capture_default_str();
  dist->add_option("--format", cfg.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  dist->add_option("inputs", cfg.inputs, "two input files")->expected(2)->required();

  CLI::App* extend = app.add_subcommand(
      "extend", "apply the Zadeh extension of one map, or the union extension of several");
  extend->add_option("--map", cfg.map_paths, "piecewise-linear map file (repeatable)")
      ->required();
  extend->add_option("-o,--output", cfg.output_path, "output file (stdout when omitted)");
  extend->add_option("input", cfg.inputs, "fuzzy-set file")->expected(1)->required();

  CLI::App* cex = app.add_subcommand(
      "counterexample", "build the staircase pair and verify the three distance claims");
  cex->add_option("--depth", cfg.depth, "truncation depth (>= 2)")->capture_default_str();
  cex->add_option("--lambda", cfg.lambda, "contraction factor in [1/2, 1)")
      ->capture_default_str();
  cex->add_option("--out-dir", cfg.out_dir, "directory for u.json / v.json")
      ->capture_default_str();
  cex->add_option("--format", cfg.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  CLI::App* conv = app.add_subcommand(
      "convergence", "CSV of exact d0 and oracle brackets across truncation depths");
  conv->add_option("--min-depth", cfg.min_depth, "first depth (>= 2)")->capture_default_str();
  conv->add_option("--max-depth", cfg.max_depth, "last depth")->capture_default_str();
  conv->add_option("--resolution", cfg.resolution,
                   "oracle grid step (default: 2^-(depth+3) per depth)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (dist->parsed()) return cmd_dist(cfg);
    if (extend->parsed()) return cmd_extend(cfg);
    if (cex->parsed()) return cmd_counterexample(cfg);
    if (conv->parsed()) return cmd_convergence(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
