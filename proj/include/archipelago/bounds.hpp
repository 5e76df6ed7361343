// Copyright 2026 The Archipelago Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Multi-start derivative-free maximization of |t1 t2 t3| and
// |t1| + |t2| + |t3| over a model's physical (or PPT) set.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "archipelago/errors.hpp"
#include "archipelago/models.hpp"
#include "archipelago/parallel.hpp"
#include "archipelago/random.hpp"
#include "archipelago/sampling.hpp"

namespace archipelago {

enum class Objective { abs_product, l1_norm };
enum class FeasibleSet { physical, ppt_and_physical };

inline std::string_view to_string(Objective o) {
  return o == Objective::abs_product ? "abs_product" : "l1_norm";
}
inline std::string_view to_string(FeasibleSet f) {
  return f == FeasibleSet::physical ? "physical" : "ppt_and_physical";
}

inline double objective_value(Objective o, const ParamPoint& t) {
  return o == Objective::abs_product ? std::abs(t.t1 * t.t2 * t.t3)
                                     : std::abs(t.t1) + std::abs(t.t2) + std::abs(t.t3);
}

struct BoundsConfig {
  int restarts = 64;
  std::uint64_t seed = 0;
  std::optional<PhysicalMode> physical_mode;
  /// Feasibility slack: analytic inequalities are widened by it, eigenvalue
  /// tests accept eigenvalues >= -eps_psd.
  double eps_psd = kDefaultEpsPsd;
  /// Random unit directions added to the 26 lattice directions at each poll.
  int random_directions = 16;
  int max_polls = 20'000;
  unsigned workers = 1;
};

struct OptResult {
  ParamPoint best_point;
  double best_value = 0.0;
  int restarts = 0;
  bool feasible = false;
  Objective objective = Objective::abs_product;
  FeasibleSet feasible_set = FeasibleSet::physical;
  PhysicalMode physical_mode = PhysicalMode::analytic;
  std::uint64_t evaluations = 0;
};

/// Feasibility predicate with slack.
inline bool is_feasible(const ModelSpec& spec, const ParamPoint& t, FeasibleSet set,
                        PhysicalMode mode, double eps) {
  if (mode == PhysicalMode::psd_oracle || spec.id == ModelId::M5) {
    if (!is_psd(build_state(spec, t), eps)) return false;
    return set == FeasibleSet::physical || is_ppt_oracle(spec, t, eps);
  }
  if (!is_physical_analytic(spec, t, mode, eps)) return false;
  if (set == FeasibleSet::physical) return true;
  if (spec.id == ModelId::M2) return true;  // partial transpose leaves M2 unchanged
  return is_physical_analytic(spec, {t.t1, -t.t2, t.t3}, mode, eps);
}

namespace detail {

inline const std::vector<std::array<double, 3>>& lattice_directions() {
  static const std::vector<std::array<double, 3>> dirs = [] {
    std::vector<std::array<double, 3>> d;
    for (int x = -1; x <= 1; ++x)
      for (int y = -1; y <= 1; ++y)
        for (int z = -1; z <= 1; ++z) {
          if (x == 0 && y == 0 && z == 0) continue;
          const double n = std::sqrt(static_cast<double>(x * x + y * y + z * z));
          d.push_back({x / n, y / n, z / n});
        }
    return d;
  }();
  return dirs;
}

inline bool better(double va, const ParamPoint& a, double vb, const ParamPoint& b) {
  if (va != vb) return va > vb;
  return std::tie(a.t1, a.t2, a.t3) < std::tie(b.t1, b.t2, b.t3);
}

struct LocalResult {
  ParamPoint point;
  double value = 0.0;
  std::uint64_t evaluations = 0;
};

// One restart: a feasible start (inside the given sign octant for the
// first eight restarts), then compass/pattern ascent.
inline LocalResult local_search(const ModelSpec& spec, Objective objective, FeasibleSet set,
                                PhysicalMode mode, const BoundsConfig& cfg, int restart) {
  auto engine = keyed_engine(cfg.seed, static_cast<std::uint64_t>(restart));
  const double h = spec.half_width;
  LocalResult res;

  bool found = false;
  constexpr int kMaxStartAttempts = 100'000;
  for (int attempt = 0; attempt < kMaxStartAttempts && !found; ++attempt) {
    ParamPoint t;
    for (std::size_t d = 0; d < 3; ++d) {
      const double u = uniform01(engine);
      if (restart < 8) {
        const bool negative = (restart >> d) & 1;
        t[d] = (negative ? -u : u) * h;
      } else {
        t[d] = (2.0 * u - 1.0) * h;
      }
    }
    ++res.evaluations;
    if (is_feasible(spec, t, set, mode, cfg.eps_psd)) {
      res.point = t;
      found = true;
    }
  }
  if (!found)
    throw SearchError("no feasible start for " + std::string(spec.name) + " after " +
                      std::to_string(kMaxStartAttempts) + " attempts");
  res.value = objective_value(objective, res.point);

  const auto& lattice = lattice_directions();
  double step = 0.25 * h;
  const double min_step = 1e-12 * h;
  std::vector<std::array<double, 3>> dirs;
  for (int poll = 0; poll < cfg.max_polls && step >= min_step; ++poll) {
    dirs.assign(lattice.begin(), lattice.end());
    for (int r = 0; r < cfg.random_directions; ++r) {
      std::array<double, 3> v{};
      double n2 = 0.0;
      do {
        n2 = 0.0;
        for (auto& x : v) {
          x = 2.0 * uniform01(engine) - 1.0;
          n2 += x * x;
        }
      } while (n2 > 1.0 || n2 < 1e-6);
      const double n = std::sqrt(n2);
      for (auto& x : v) x /= n;
      dirs.push_back(v);
    }

    ParamPoint best = res.point;
    double best_value = res.value;
    for (const auto& d : dirs) {
      const ParamPoint cand{res.point.t1 + step * d[0], res.point.t2 + step * d[1],
                            res.point.t3 + step * d[2]};
      const double v = objective_value(objective, cand);
      if (v <= best_value) continue;
      ++res.evaluations;
      if (!is_feasible(spec, cand, set, mode, cfg.eps_psd)) continue;
      best = cand;
      best_value = v;
    }
    if (best_value > res.value) {
      res.point = best;
      res.value = best_value;
    } else {
      step *= 0.5;
    }
  }
  return res;
}

}  // namespace detail

/// Best of `restarts` independent local searches. Restart r depends only on
/// (seed, r), so adding restarts never lowers the result.
inline OptResult maximize(const ModelSpec& spec, Objective objective, FeasibleSet set,
                          const BoundsConfig& cfg) {
  if (cfg.restarts < 1) throw ContractError("maximize: restarts must be positive");
  const PhysicalMode mode = cfg.physical_mode.value_or(spec.default_mode);
  if (!spec.supports(mode))
    throw UnsupportedModeError(std::string("model ") + std::string(spec.name) +
                               " does not support physical mode " + std::string(to_string(mode)));

  std::vector<detail::LocalResult> runs(static_cast<std::size_t>(cfg.restarts));
  parallel_for(runs.size(), cfg.workers, [&](std::size_t r) {
    runs[r] = detail::local_search(spec, objective, set, mode, cfg, static_cast<int>(r));
  });

  OptResult out;
  out.objective = objective;
  out.feasible_set = set;
  out.physical_mode = mode;
  out.restarts = cfg.restarts;
  out.best_point = runs.front().point;
  out.best_value = runs.front().value;
  for (const auto& r : runs) {
    out.evaluations += r.evaluations;
    if (detail::better(r.value, r.point, out.best_value, out.best_point)) {
      out.best_point = r.point;
      out.best_value = r.value;
    }
  }
  out.best_value = objective_value(objective, out.best_point);
  out.feasible = is_feasible(spec, out.best_point, set, mode, cfg.eps_psd);
  return out;
}

struct ThresholdReport {
  ModelId model = ModelId::M1;
  PhysicalMode physical_mode = PhysicalMode::analytic;
  /// largest |t1 t2 t3| found over the physical set
  double max_abs_product = 0.0;
  ParamPoint best_point;
  /// sqrt(multiplicative threshold)
  double bound = 0.0;
  bool region_nonempty = false;
  bool expected_empty = false;
  std::uint64_t n_samples = 0;
  std::uint64_t n_physical = 0;
  std::uint64_t sample_hits = 0;
  bool consistent = false;
};

/// Tolerance on the product maximum when the multiplicative region is
/// expected to be empty.
inline constexpr double kThresholdSlack = 1e-9;

/// Compares the largest attainable |t1 t2 t3| with the multiplicative bound
/// and cross-checks with a sample scan. M5 is expected to have an empty
/// entangled region, every other model a nonempty one.
inline ThresholdReport threshold_consistency(const ModelSpec& spec, const BoundsConfig& bcfg,
                                             const SamplerConfig& scfg) {
  ThresholdReport rep;
  rep.model = spec.id;
  rep.physical_mode = bcfg.physical_mode.value_or(spec.default_mode);
  const OptResult opt = maximize(spec, Objective::abs_product, FeasibleSet::physical, bcfg);
  rep.max_abs_product = opt.best_value;
  rep.best_point = opt.best_point;
  rep.bound = std::sqrt(spec.multiplicative_threshold);
  rep.region_nonempty = rep.max_abs_product > rep.bound;
  rep.expected_empty = spec.id == ModelId::M5;

  SamplerConfig s = scfg;
  s.physical_mode = rep.physical_mode;
  const auto est = estimate_probability(spec, Constraint::multiplicative, s);
  rep.n_samples = est.n_samples;
  rep.n_physical = est.n_physical;
  rep.sample_hits = est.n_hits;
  rep.consistent = rep.expected_empty
                       ? rep.max_abs_product <= rep.bound + kThresholdSlack && rep.sample_hits == 0
                       : rep.region_nonempty && rep.sample_hits > 0;
  return rep;
}

}  // namespace archipelago
