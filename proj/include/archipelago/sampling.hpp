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

// Monte Carlo and low-discrepancy estimation of region probabilities,
// i.e. volumes normalized by the volume of a model's physical set.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "archipelago/errors.hpp"
#include "archipelago/models.hpp"
#include "archipelago/parallel.hpp"
#include "archipelago/random.hpp"
#include "archipelago/special_functions.hpp"

namespace archipelago {

enum class Stream { pseudo, low_discrepancy };

inline std::string_view to_string(Stream s) {
  return s == Stream::pseudo ? "pseudo" : "low_discrepancy";
}

struct SamplerConfig {
  std::uint64_t seed = 0;
  /// Number of proposals. Direct samplers accept every proposal; rejection
  /// samplers keep those inside the physical set.
  std::uint64_t n_samples = 1'000'000;
  Stream stream = Stream::pseudo;
  std::uint64_t chunk_size = 65'536;
  /// Empty selects the model's default mode.
  std::optional<PhysicalMode> physical_mode;
  double eps_psd = kDefaultEpsPsd;
  /// Threads; 0 uses all hardware threads. Never affects results.
  unsigned workers = 1;
};

/// Rejection samplers give up below this acceptance rate.
inline constexpr double kMinAcceptanceRate = 1e-3;

/// Maps unit-cube coordinates onto a model's physical set (direct) or its
/// bounding box (rejection).
class Proposal {
 public:
  Proposal(const ModelSpec& spec, PhysicalMode mode) : spec_(&spec), mode_(mode) {
    if (!spec.supports(mode))
      throw UnsupportedModeError(std::string("model ") + std::string(spec.name) +
                                 " does not support physical mode " +
                                 std::string(to_string(mode)));
    if (mode == PhysicalMode::paper_cube) {
      kind_ = Kind::cube;
    } else if (mode == PhysicalMode::analytic &&
               (spec.id == ModelId::M1 || spec.id == ModelId::M2)) {
      kind_ = Kind::prism;
    } else {
      kind_ = Kind::rejection;
    }
  }

  [[nodiscard]] bool direct() const noexcept { return kind_ != Kind::rejection; }
  [[nodiscard]] std::string_view name() const noexcept { return direct() ? "direct" : "rejection"; }

  [[nodiscard]] ParamPoint map(const std::array<double, 3>& u) const noexcept {
    const double h = spec_->half_width;
    const double x = (2.0 * u[0] - 1.0) * h;
    const double y = (2.0 * u[1] - 1.0) * h;
    const double z = (2.0 * u[2] - 1.0) * h;
    if (kind_ == Kind::prism) {
      // the square [-h,h]^2 rotated onto the diamond |t1| + |t3| <= h
      return {(x + z) / 2.0, y, (x - z) / 2.0};
    }
    return {x, y, z};
  }

  /// Whether a mapped point is physical; trivially true for direct kinds.
  [[nodiscard]] bool accept(const ParamPoint& t, double eps_psd) const {
    return direct() || is_physical(*spec_, t, mode_, eps_psd);
  }

 private:
  enum class Kind { cube, prism, rejection };
  const ModelSpec* spec_;
  PhysicalMode mode_;
  Kind kind_ = Kind::rejection;
};

inline PhysicalMode resolve_mode(const ModelSpec& spec, const SamplerConfig& cfg) {
  return cfg.physical_mode.value_or(spec.default_mode);
}

inline std::uint64_t chunk_count(const SamplerConfig& cfg) {
  if (cfg.chunk_size == 0) throw ConfigurationError("chunk_size must be positive");
  return (cfg.n_samples + cfg.chunk_size - 1) / cfg.chunk_size;
}

/// Visits the proposals of one chunk in sequence order, calling
/// visit(point, accepted) for each.
template <class Visit>
void visit_chunk(const SamplerConfig& cfg, const Proposal& proposal, std::uint64_t chunk,
                 Visit&& visit) {
  const std::uint64_t begin = chunk * cfg.chunk_size;
  const std::uint64_t end = std::min(cfg.n_samples, begin + cfg.chunk_size);
  if (cfg.stream == Stream::pseudo) {
    auto engine = keyed_engine(cfg.seed, chunk);
    for (std::uint64_t i = begin; i < end; ++i) {
      std::array<double, 3> u{uniform01(engine), uniform01(engine), uniform01(engine)};
      const ParamPoint t = proposal.map(u);
      visit(t, proposal.accept(t, cfg.eps_psd));
    }
  } else {
    const Halton3 halton(cfg.seed);
    for (std::uint64_t i = begin; i < end; ++i) {
      const ParamPoint t = proposal.map(halton.point(i));
      visit(t, proposal.accept(t, cfg.eps_psd));
    }
  }
}

inline void check_acceptance(const ModelSpec& spec, std::uint64_t proposals,
                             std::uint64_t accepted) {
  if (proposals >= 1000 &&
      static_cast<double>(accepted) < kMinAcceptanceRate * static_cast<double>(proposals))
    throw ConfigurationError("rejection sampler for " + std::string(spec.name) + " accepted " +
                             std::to_string(accepted) + " of " + std::to_string(proposals) +
                             " proposals; bounding box does not fit the physical set");
}

/// Physical points in sequence order (uniform on the physical set).
inline std::vector<ParamPoint> sample_physical(const ModelSpec& spec, const SamplerConfig& cfg) {
  const Proposal proposal(spec, resolve_mode(spec, cfg));
  const std::uint64_t chunks = chunk_count(cfg);
  std::vector<std::vector<ParamPoint>> parts(chunks);
  parallel_for(chunks, cfg.workers, [&](std::size_t c) {
    visit_chunk(cfg, proposal, c, [&](const ParamPoint& t, bool ok) {
      if (ok) parts[c].push_back(t);
    });
  });
  std::vector<ParamPoint> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  check_acceptance(spec, cfg.n_samples, out.size());
  return out;
}

/// Known value of a region probability, either exact (closed form or
/// elementary geometry) or a published numerical value.
struct ReferenceValue {
  double value = 0.0;
  std::string kind;  // "exact" or "reported"
  std::string source;
};

inline std::optional<ReferenceValue> reference_value(ModelId id, Constraint c, PhysicalMode mode) {
  using C = Constraint;
  switch (id) {
    case ModelId::M1:
      if (c == C::multiplicative || c == C::mult_minus_additive)
        return ReferenceValue{p1_simplified().value, "exact", "p1_simplified"};
      return ReferenceValue{0.0, "exact", "empty region"};
    case ModelId::M2:
      if (mode != PhysicalMode::paper_cube) return std::nullopt;
      if (c == C::multiplicative || c == C::mult_minus_additive)
        return ReferenceValue{p2_closed().value, "exact", "p2_closed"};
      return ReferenceValue{0.0, "exact", "empty region"};
    case ModelId::M3:
    case ModelId::M4:
      switch (c) {
        case C::non_ppt:
        case C::additive: return ReferenceValue{0.5, "exact", "octahedron in tetrahedron"};
        case C::multiplicative:
          return ReferenceValue{kM3MultiplicativeReported, "reported", "two-qubit multiplicative"};
        case C::additive_minus_mult:
          return ReferenceValue{kM3AdditiveMinusMultReported, "reported",
                                "two-qubit additive minus multiplicative"};
        case C::mult_minus_additive:
          return ReferenceValue{0.0, "exact", "multiplicative region lies outside the octahedron"};
      }
      break;
    case ModelId::M5:
      if (c == C::multiplicative || c == C::mult_minus_additive)
        return ReferenceValue{0.0, "exact", "separable for all parameters"};
      return std::nullopt;
  }
  return std::nullopt;
}

struct VolumeEstimate {
  ModelId model = ModelId::M1;
  Constraint constraint = Constraint::multiplicative;
  double probability = 0.0;
  /// sqrt(p (1 - p) / n_physical)
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t n_physical = 0;
  std::uint64_t n_hits = 0;
  std::string method;
  SamplerConfig config;
  PhysicalMode physical_mode = PhysicalMode::analytic;
  std::optional<ReferenceValue> closed_form;
  std::optional<double> sigmas_from_closed_form;
};

/// Fraction of physical samples that fall in `constraint`.
inline VolumeEstimate estimate_probability(const ModelSpec& spec, Constraint constraint,
                                           const SamplerConfig& cfg) {
  const PhysicalMode mode = resolve_mode(spec, cfg);
  const Proposal proposal(spec, mode);
  const std::uint64_t chunks = chunk_count(cfg);

  struct Tally {
    std::uint64_t physical = 0;
    std::uint64_t hits = 0;
  };
  std::vector<Tally> tallies(chunks);
  parallel_for(chunks, cfg.workers, [&](std::size_t c) {
    Tally tally;
    visit_chunk(cfg, proposal, c, [&](const ParamPoint& t, bool physical) {
      if (!physical) return;
      ++tally.physical;
      if (in_constraint(spec, t, constraint, [&] { return is_ppt(spec, t, mode, cfg.eps_psd); }))
        ++tally.hits;
    });
    tallies[c] = tally;
  });

  VolumeEstimate est;
  est.model = spec.id;
  est.constraint = constraint;
  est.config = cfg;
  est.physical_mode = mode;
  est.n_samples = cfg.n_samples;
  for (const auto& t : tallies) {
    est.n_physical += t.physical;
    est.n_hits += t.hits;
  }
  if (!proposal.direct()) check_acceptance(spec, est.n_samples, est.n_physical);
  est.method = std::string(to_string(cfg.stream)) + "/" + std::string(proposal.name());
  if (est.n_physical > 0) {
    const double n = static_cast<double>(est.n_physical);
    est.probability = static_cast<double>(est.n_hits) / n;
    est.std_error = std::sqrt(est.probability * (1.0 - est.probability) / n);
  }
  return est;
}

/// Attaches the known reference value (if any) and the deviation in units
/// of the standard error.
inline void attach_reference(VolumeEstimate& est) {
  est.closed_form = reference_value(est.model, est.constraint, est.physical_mode);
  if (est.closed_form && est.std_error > 0.0)
    est.sigmas_from_closed_form = (est.probability - est.closed_form->value) / est.std_error;
}

struct EmptinessReport {
  ModelId model = ModelId::M1;
  PhysicalMode physical_mode = PhysicalMode::analytic;
  /// sup of (|t1| + |t2| + |t3|)^2 over the physical set
  double sup_l1_squared = 0.0;
  ParamPoint sup_point;
  double threshold = 0.0;
  /// The strict additive constraint can never hold.
  bool analytically_empty = false;
  std::uint64_t n_samples = 0;
  std::uint64_t n_physical = 0;
  std::uint64_t hits = 0;
};

/// Decides whether the additive constraint can be met anywhere on the
/// physical set: the supremum of the l1 norm is attained at a vertex of the
/// (polyhedral) set; a sample scan counts actual hits.
inline EmptinessReport emptiness_check(const ModelSpec& spec, const SamplerConfig& cfg) {
  if (!spec.additive_threshold)
    throw UnsupportedModeError("model " + std::string(spec.name) + " has no additive constraint");
  EmptinessReport rep;
  rep.model = spec.id;
  rep.physical_mode = resolve_mode(spec, cfg);
  rep.threshold = *spec.additive_threshold;
  switch (spec.id) {
    case ModelId::M1: rep.sup_point = {0.5, 0.5, 0.0}; break;
    case ModelId::M2:
      rep.sup_point = rep.physical_mode == PhysicalMode::paper_cube
                          ? ParamPoint{0.25, 0.25, 0.25}
                          : ParamPoint{0.25, 0.25, 0.0};
      break;
    case ModelId::M3: rep.sup_point = {1.0, 1.0, -1.0}; break;
    case ModelId::M4: rep.sup_point = {4.0 / 9.0, 4.0 / 9.0, -4.0 / 9.0}; break;
    case ModelId::M5: break;
  }
  const double l1 =
      std::abs(rep.sup_point.t1) + std::abs(rep.sup_point.t2) + std::abs(rep.sup_point.t3);
  rep.sup_l1_squared = l1 * l1;
  rep.analytically_empty = rep.sup_l1_squared <= rep.threshold;

  const auto est = estimate_probability(spec, Constraint::additive, cfg);
  rep.n_samples = est.n_samples;
  rep.n_physical = est.n_physical;
  rep.hits = est.n_hits;
  return rep;
}

}  // namespace archipelago
