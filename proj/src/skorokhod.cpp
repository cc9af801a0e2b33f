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
#include "fuzzdist/skorokhod.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "fuzzdist/hausdorff.hpp"

namespace fuzzdist {

std::string to_string(DistanceMethod method) {
  switch (method) {
    case DistanceMethod::kExactDp: return "exact-dp";
    case DistanceMethod::kBruteForce: return "bruteforce";
    case DistanceMethod::kBoundOnly: return "bound-only";
  }
  return "unknown";
}

const Rational& DistanceReport::value() const {
  if (!exact()) throw std::logic_error("DistanceReport: value() called on a bracket");
  return lower;
}

namespace {

/**
 * Shared geometry of one d0 instance. u's level grid is fixed; v's gets
 * moved. The cost of aligning u-band i against v-band j is H[i][j], the
 * Hausdorff distance of their cuts. alpha[0] = beta[0] = 0 and the last
 * entries are both 1.
 */
struct Instance {
  std::vector<Rational> alpha;            // 0, u's breakpoints
  std::vector<Rational> beta;             // 0, v's breakpoints
  std::vector<std::vector<Rational>> H;   // H[i][j], 1-based
  int m = 0;
  int n = 0;

  Instance(const StepFuzzySet& u, const StepFuzzySet& v)
      : m(static_cast<int>(u.band_count())), n(static_cast<int>(v.band_count())) {
    alpha.reserve(m + 1);
    beta.reserve(n + 1);
    alpha.push_back(Rational(0));
    for (const Level& l : u.levels()) alpha.push_back(l.alpha);
    beta.push_back(Rational(0));
    for (const Level& l : v.levels()) beta.push_back(l.alpha);
    H.assign(m + 1, std::vector<Rational>(n + 1, Rational(0)));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j)
        H[i][j] = hausdorff(u.levels()[i - 1].cut, v.levels()[j - 1].cut);
  }
};

/**
 * Decision procedure: can v's breakpoints be placed (in the closure of the
 * strictly increasing placements) so that every breakpoint moves at most
 * eps and every pair of overlapping bands has H <= eps?
 *
 * The alignment is a monotone staircase over the band lattice. The state
 * after choosing gamma_j is the column where row j+1 enters; for each state
 * only the minimal feasible gamma_j needs to be kept, since a smaller image
 * only relaxes the monotonicity constraint downstream. A row exits either
 * "up" (gamma_j strictly inside a u-band in the strict world, giving the
 * closed bounds [alpha_{q-1}, alpha_q]) or "diagonally" (gamma_j lands
 * exactly on alpha_q, so neither off-diagonal cell is charged).
 */
struct Feasibility {
  struct Parent {
    int entry = -1;
    bool diag = false;
  };
  bool ok = false;
  int final_entry = -1;
  std::vector<std::vector<Parent>> trace;  // trace[j][q], j in 1..n-1
};

Feasibility solve_feasible(const Instance& inst, const Rational& eps, bool want_trace) {
  const int m = inst.m, n = inst.n;
  Feasibility out;
  if (want_trace) out.trace.assign(n, std::vector<Feasibility::Parent>(m + 1));

  std::vector<std::optional<Rational>> cur(m + 1), nxt(m + 1);
  cur[1] = Rational(0);  // gamma_0 = 0, row 1 enters at column 1

  for (int j = 1; j <= n - 1; ++j) {
    std::fill(nxt.begin(), nxt.end(), std::nullopt);
    for (int p = 1; p <= m; ++p) {
      if (!cur[p]) continue;
      const Rational& prev = *cur[p];
      for (int q = p; q <= m; ++q) {
        if (inst.H[q][j] > eps) break;  // cell (q, j) sits on every continuation
        // up-exit at column q; row j+1 enters at q
        Rational lo = Rational::max(Rational::max(inst.alpha[q - 1], inst.beta[j] - eps), prev);
        Rational hi = Rational::min(inst.alpha[q], inst.beta[j] + eps);
        if (lo <= hi && (!nxt[q] || lo < *nxt[q])) {
          nxt[q] = lo;
          if (want_trace) out.trace[j][q] = {p, false};
        }
        // diagonal exit: gamma_j = alpha_q exactly; row j+1 enters at q+1
        if (q < m) {
          const Rational& g = inst.alpha[q];
          if (g >= prev && (inst.beta[j] - g).abs() <= eps && (!nxt[q + 1] || g < *nxt[q + 1])) {
            nxt[q + 1] = g;
            if (want_trace) out.trace[j][q + 1] = {p, true};
          }
        }
      }
    }
    cur.swap(nxt);
  }

  for (int p = 1; p <= m; ++p) {
    if (!cur[p]) continue;
    bool all_ok = true;
    for (int q = p; q <= m && all_ok; ++q) all_ok = inst.H[q][n] <= eps;
    if (all_ok) {
      out.ok = true;
      out.final_entry = p;
      break;
    }
  }
  return out;
}

struct RowBounds {
  Rational lo;
  Rational hi;
};

// Per-row closed alpha-interval for gamma_j along the traced optimal path.
std::optional<std::vector<RowBounds>> backtrack_bounds(const Instance& inst,
                                                       const Feasibility& feas) {
  const int n = inst.n;
  std::vector<RowBounds> bounds(n);
  int c = feas.final_entry;
  for (int j = n - 1; j >= 1; --j) {
    const auto& par = feas.trace[j][c];
    if (par.entry < 0) return std::nullopt;
    if (par.diag)
      bounds[j] = {inst.alpha[c - 1], inst.alpha[c - 1]};
    else
      bounds[j] = {inst.alpha[c - 1], inst.alpha[c]};
    c = par.entry;
  }
  if (c != 1) return std::nullopt;
  return bounds;
}

// Strictly increasing interior placement inside the per-row closed bounds
// intersected with the displacement boxes [beta_j - box, beta_j + box],
// staying at beta_j wherever the bounds allow. With the tightened bounds
// both monotone, a strict selection exists iff lo_j < hi_{j+1} throughout;
// keeping every pick strictly below the next row's ceiling makes the
// forward pass never pinch. Fails (nullopt) when the closure optimum is
// achievable only with collapsed placements.
std::optional<std::vector<Rational>> place_strict(const Instance& inst,
                                                  const std::vector<RowBounds>& rows,
                                                  const Rational& box) {
  const int n = inst.n;
  const int last = n - 1;
  const Rational one(1), two(2);
  std::vector<Rational> lo(n), hi(n);
  for (int j = 1; j <= last; ++j) {
    lo[j] = Rational::max(rows[j].lo, inst.beta[j] - box);
    hi[j] = Rational::min(rows[j].hi, inst.beta[j] + box);
    if (lo[j] > hi[j]) return std::nullopt;
  }
  for (int j = 2; j <= last; ++j) lo[j] = Rational::max(lo[j], lo[j - 1]);
  for (int j = last - 1; j >= 1; --j) hi[j] = Rational::min(hi[j], hi[j + 1]);

  if (hi[1].sign() <= 0) return std::nullopt;  // gamma_1 must be positive
  for (int j = 1; j < last; ++j) {
    if (lo[j] >= hi[j + 1]) return std::nullopt;  // two rows forced to coincide
  }

  std::vector<Rational> gamma(n);
  Rational prev(0);
  for (int j = 1; j <= last; ++j) {
    // ceiling: strictly below the next row's upper bound (so the next row
    // always has room), and strictly below 1 for the final interior knot
    const Rational& ceiling = j < last ? hi[j + 1] : one;
    Rational g = inst.beta[j];
    if (g < lo[j]) g = lo[j];
    if (g > hi[j]) g = hi[j];
    if (g <= prev) {
      g = (prev + Rational::min(hi[j], ceiling)) / two;
    } else if (g >= ceiling) {
      g = (Rational::max(lo[j], prev) + ceiling) / two;
    }
    gamma[j] = g;
    prev = g;
  }
  return gamma;
}

Reparam build_witness(const Instance& inst, const std::vector<Rational>& gamma) {
  std::vector<Knot> knots;
  knots.reserve(inst.n + 1);
  knots.push_back(Knot{Rational(0), Rational(0)});
  for (int j = 1; j <= inst.n - 1; ++j) knots.push_back(Knot{inst.beta[j], gamma[j]});
  knots.push_back(Knot{Rational(1), Rational(1)});
  return Reparam::make(std::move(knots));
}

Rational witness_objective(const StepFuzzySet& u, const StepFuzzySet& v, const Reparam& t) {
  return Rational::max(reparam_sup_deviation(t), level_metric_dinf(u, apply_reparam(t, v)));
}

DistanceReport skorokhod_impl(const StepFuzzySet& u, const StepFuzzySet& v,
                              const std::optional<Rational>& slack) {
  Instance inst(u, v);

  // Exact candidate search: at an optimal alignment the bottleneck is a
  // band mismatch H[i][j] or a displacement clamped against a fixed
  // breakpoint, |alpha_i - beta_j| with alpha_0 = 0, alpha_m = 1. The
  // minimum feasible candidate is the infimum (feasibility is monotone and
  // closed under the limit).
  std::vector<Rational> cands;
  cands.push_back(Rational(0));
  for (int i = 1; i <= inst.m; ++i)
    for (int j = 1; j <= inst.n; ++j) cands.push_back(inst.H[i][j]);
  for (int i = 0; i <= inst.m; ++i)
    for (int j = 1; j <= inst.n; ++j) cands.push_back((inst.alpha[i] - inst.beta[j]).abs());
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  Rational eps_star;
  if (solve_feasible(inst, cands.front(), false).ok) {
    eps_star = cands.front();
  } else {
    std::size_t bad = 0, good = cands.size() - 1;
    while (good - bad > 1) {
      std::size_t mid = bad + (good - bad) / 2;
      if (solve_feasible(inst, cands[mid], false).ok)
        good = mid;
      else
        bad = mid;
    }
    eps_star = cands[good];
  }

  // Reparameterizations never move the supports, so the support comparison
  // is a constant term of the objective.
  const Rational support_term = hausdorff(u.support(), v.support());
  const Rational value = Rational::max(eps_star, support_term);

  DistanceReport report;
  report.method = DistanceMethod::kExactDp;
  report.lower = value;
  report.upper = value;

  std::optional<std::vector<Rational>> gamma;
  if (inst.n == 1) {
    gamma.emplace(1);  // nothing to place, witness is the identity
  } else {
    Feasibility feas = solve_feasible(inst, eps_star, true);
    if (auto bounds = backtrack_bounds(inst, feas)) {
      gamma = place_strict(inst, *bounds, eps_star);
      if (!gamma && slack) gamma = place_strict(inst, *bounds, eps_star + *slack);
    }
  }
  if (gamma) {
    Reparam t = build_witness(inst, *gamma);
    Rational objective = witness_objective(u, v, t);
    if (objective == value) {
      report.witness = std::move(t);
    } else if (slack && objective <= value + *slack) {
      report.upper = objective;
      report.witness = std::move(t);
    }
  }
  return report;
}

}  // namespace

DistanceReport skorokhod_d0(const StepFuzzySet& u, const StepFuzzySet& v) {
  return skorokhod_impl(u, v, std::nullopt);
}

DistanceReport skorokhod_d0(const StepFuzzySet& u, const StepFuzzySet& v,
                            const Rational& witness_slack) {
  if (witness_slack.sign() <= 0)
    throw std::invalid_argument("skorokhod_d0: witness slack must be positive");
  return skorokhod_impl(u, v, witness_slack);
}

DistanceReport d0_bruteforce(const StepFuzzySet& u, const StepFuzzySet& v,
                             const Rational& resolution) {
  if (resolution.sign() <= 0)
    throw std::invalid_argument("d0_bruteforce: resolution must be positive");
  Instance inst(u, v);
  const int m = inst.m, n = inst.n;
  const Rational zero(0), one(1);

  auto finish = [&](Reparam t) {
    DistanceReport report;
    report.method = DistanceMethod::kBruteForce;
    report.upper = witness_objective(u, v, t);
    report.lower = Rational::max(zero, report.upper - resolution);
    report.witness = std::move(t);
    return report;
  };

  if (n == 1) return finish(Reparam::identity());

  // the placement grid: multiples of the resolution plus both operands'
  // exact breakpoints (those make the identity-like placements available at
  // any resolution)
  std::vector<Rational> grid;
  for (Rational x(0); x <= one; x += resolution) grid.push_back(x);
  grid.push_back(one);
  for (int i = 1; i <= m; ++i) grid.push_back(inst.alpha[i]);
  for (int j = 1; j <= n; ++j) grid.push_back(inst.beta[j]);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<Rational> pos;  // interior candidate knot images
  pos.reserve(grid.size());
  for (const Rational& x : grid)
    if (x > zero && x < one) pos.push_back(x);
  const int np = static_cast<int>(pos.size());

  // col[k]: u-band containing pos[k]; nxt[k]: first u-band strictly above
  // pos[k]. A placement gamma_{j-1} = pos[a], gamma_j = pos[b] makes v-band
  // j overlap exactly the u-bands nxt[a] .. col[b].
  std::vector<int> col(np), nxt(np);
  for (int k = 0; k < np; ++k) {
    int c = 1;
    while (inst.alpha[c] < pos[k]) ++c;
    col[k] = c;
    nxt[k] = (inst.alpha[c] == pos[k]) ? c + 1 : c;
  }

  // the support comparison is immune to reparameterization and enters every
  // objective as a constant term
  const Rational support_term = hausdorff(u.support(), v.support());

  // rank-compress every value the bottleneck can take; the DP then runs on
  // plain ints
  std::vector<Rational> vals;
  vals.reserve(static_cast<std::size_t>(m) * n + static_cast<std::size_t>(np) * (n - 1) + 1);
  vals.push_back(support_term);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) vals.push_back(inst.H[i][j]);
  for (int j = 1; j <= n - 1; ++j)
    for (int k = 0; k < np; ++k) vals.push_back((pos[k] - inst.beta[j]).abs());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  auto rank_of = [&](const Rational& x) {
    return static_cast<int>(std::lower_bound(vals.begin(), vals.end(), x) - vals.begin());
  };

  // per-row interval maxima of the H ranks
  std::vector<std::vector<std::vector<int>>> rowmax(
      n + 1, std::vector<std::vector<int>>(m + 1, std::vector<int>(m + 1, 0)));
  for (int j = 1; j <= n; ++j) {
    for (int c1 = 1; c1 <= m; ++c1) {
      int run = rank_of(inst.H[c1][j]);
      rowmax[j][c1][c1] = run;
      for (int c2 = c1 + 1; c2 <= m; ++c2) {
        run = std::max(run, rank_of(inst.H[c2][j]));
        rowmax[j][c1][c2] = run;
      }
    }
  }

  std::vector<std::vector<int>> dist_rank(n, std::vector<int>(np));
  for (int j = 1; j <= n - 1; ++j)
    for (int k = 0; k < np; ++k) dist_rank[j][k] = rank_of((pos[k] - inst.beta[j]).abs());

  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<std::vector<int>> parent(n, std::vector<int>(np, -1));
  std::vector<int> dcur(np, kInf), dprev;
  for (int k = 0; k < np; ++k)
    dcur[k] = std::max(rowmax[1][1][col[k]], dist_rank[1][k]);
  for (int j = 2; j <= n - 1; ++j) {
    dprev = dcur;
    dcur.assign(np, kInf);
    for (int k = 1; k < np; ++k) {
      int best = kInf, bestp = -1;
      const int dk = dist_rank[j][k];
      const int c2 = col[k];
      for (int kp = 0; kp < k; ++kp) {
        if (dprev[kp] >= best) continue;
        int cost = std::max(std::max(dprev[kp], rowmax[j][nxt[kp]][c2]), dk);
        if (cost < best) {
          best = cost;
          bestp = kp;
        }
      }
      dcur[k] = best;
      parent[j][k] = bestp;
    }
  }
  int best = kInf, best_k = -1;
  for (int k = 0; k < np; ++k) {
    if (dcur[k] == kInf) continue;
    int cost = std::max(dcur[k], rowmax[n][nxt[k]][m]);
    if (cost < best) {
      best = cost;
      best_k = k;
    }
  }
  if (best_k < 0) throw std::logic_error("d0_bruteforce: no placement found");

  std::vector<int> chosen(n, -1);
  chosen[n - 1] = best_k;
  for (int j = n - 1; j >= 2; --j) chosen[j - 1] = parent[j][chosen[j]];

  std::vector<Knot> knots;
  knots.push_back(Knot{zero, zero});
  for (int j = 1; j <= n - 1; ++j) knots.push_back(Knot{inst.beta[j], pos[chosen[j]]});
  knots.push_back(Knot{one, one});
  DistanceReport report = finish(Reparam::make(std::move(knots)));
  if (rank_of(report.upper) != std::max(best, rank_of(support_term)))
    throw std::logic_error("d0_bruteforce: placement cost mismatch on re-evaluation");
  return report;
}

namespace {

std::optional<LowerBoundCertificate> probe_certificate(const StepFuzzySet& u,
                                                       const StepFuzzySet& v,
                                                       const Rational& probe,
                                                       const Rational& eps) {
  const IntervalUnion& probe_cut = u.alpha_cut(probe);
  const Rational window_lo = probe - eps;
  const Rational window_hi = probe + eps;
  LowerBoundCertificate cert{probe, eps, {}, Rational(0)};
  bool first = true;
  Rational band_lo(0);
  for (std::size_t j = 0; j < v.levels().size(); ++j) {
    const Rational& band_hi = v.levels()[j].alpha;
    if (band_lo < window_hi && band_hi > window_lo) {
      Rational val = hausdorff(probe_cut, v.levels()[j].cut);
      if (first || val < cert.floor) cert.floor = val;
      first = false;
      cert.window_bands.push_back(CertificateBand{j + 1, band_lo, band_hi, std::move(val)});
    }
    band_lo = band_hi;
  }
  if (cert.window_bands.empty() || cert.floor <= eps) return std::nullopt;
  return cert;
}

}  // namespace

std::optional<LowerBoundCertificate> d0_lower_bound_certificate(const StepFuzzySet& u,
                                                                const StepFuzzySet& v,
                                                                const Rational& epsilon) {
  if (epsilon.sign() <= 0)
    throw std::invalid_argument("d0_lower_bound_certificate: epsilon must be positive");
  for (const Level& l : u.levels()) {
    if (auto cert = probe_certificate(u, v, l.alpha, epsilon)) return cert;
  }
  return std::nullopt;
}

bool check_certificate(const StepFuzzySet& u, const StepFuzzySet& v,
                       const LowerBoundCertificate& certificate) {
  if (certificate.epsilon.sign() <= 0) return false;
  if (certificate.probe_level.sign() <= 0 || certificate.probe_level > Rational(1)) return false;
  auto rebuilt = probe_certificate(u, v, certificate.probe_level, certificate.epsilon);
  if (!rebuilt) return false;
  if (rebuilt->floor != certificate.floor) return false;
  if (rebuilt->window_bands.size() != certificate.window_bands.size()) return false;
  for (std::size_t i = 0; i < rebuilt->window_bands.size(); ++i) {
    const auto& a = rebuilt->window_bands[i];
    const auto& b = certificate.window_bands[i];
    if (a.band_index != b.band_index || a.level_lo != b.level_lo || a.level_hi != b.level_hi ||
        a.hausdorff_value != b.hausdorff_value)
      return false;
  }
  return true;
}

}  // namespace fuzzdist
