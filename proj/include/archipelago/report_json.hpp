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

// JSON encodings of every report type.

#include <nlohmann/json.hpp>

#include "archipelago/bounds.hpp"
#include "archipelago/islands.hpp"
#include "archipelago/models.hpp"
#include "archipelago/sampling.hpp"
#include "archipelago/special_functions.hpp"
#include "archipelago/verification.hpp"

namespace archipelago {

using nlohmann::json;

inline void to_json(json& j, const ParamPoint& t) { j = {{"t1", t.t1}, {"t2", t.t2}, {"t3", t.t3}}; }

inline std::string rational_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

inline void to_json(json& j, const ModelSpec& m) {
  json terms = json::array();
  for (const auto& t : m.terms) terms.push_back({{"a", t.a.symbol()}, {"b", t.b.symbol()}});
  json modes = json::array();
  for (auto mode : m.modes) modes.push_back(to_string(mode));
  j = {{"id", m.name},
       {"description", m.description},
       {"dim_a", m.dim_a},
       {"dim_b", m.dim_b},
       {"identity_weight", rational_string(m.identity_weight)},
       {"coefficient", rational_string(m.coefficient)},
       {"terms", terms},
       {"additive_threshold", m.additive_threshold ? json(*m.additive_threshold) : json(nullptr)},
       {"additive_threshold_expr", m.additive_threshold_expr},
       {"multiplicative_threshold", m.multiplicative_threshold},
       {"multiplicative_threshold_expr", m.multiplicative_threshold_expr},
       {"physical_region", m.physical_region},
       {"physical_modes", modes},
       {"default_physical_mode", to_string(m.default_mode)},
       {"half_width", m.half_width},
       {"notes", m.notes}};
}

inline json catalog_json() {
  json arr = json::array();
  for (const auto& m : all_models()) arr.push_back(m);
  return arr;
}

inline void to_json(json& j, const Classification& c) {
  j = {{"physical", c.physical},
       {"ppt", c.ppt},
       {"additive", c.additive},
       {"multiplicative", c.multiplicative},
       {"label", to_string(c.label)},
       {"min_eigenvalue", c.min_eigenvalue},
       {"min_pt_eigenvalue", c.min_pt_eigenvalue},
       {"physical_mode", to_string(c.mode)}};
}

inline void to_json(json& j, const FormulaReport& r) {
  j = {{"name", r.name}, {"value", r.value}, {"parts", r.parts},
       {"identity_checks", r.identity_checks}};
}

inline void to_json(json& j, const Check& c) {
  j = {{"name", c.name},           {"value", c.value},         {"expected", c.expected},
       {"residual", c.residual},   {"tolerance", c.tolerance}, {"pass", c.pass}};
}

inline void to_json(json& j, const VolumeEstimate& e) {
  j = {{"model", model(e.model).name},
       {"constraint", to_string(e.constraint)},
       {"probability", e.probability},
       {"std_error", e.std_error},
       {"n_samples", e.n_samples},
       {"n_physical", e.n_physical},
       {"n_hits", e.n_hits},
       {"method", e.method},
       {"seed", e.config.seed},
       {"stream", to_string(e.config.stream)},
       {"chunk_size", e.config.chunk_size},
       {"physical_mode", to_string(e.physical_mode)},
       {"eps_psd", e.config.eps_psd}};
  if (e.closed_form) {
    j["closed_form"] = e.closed_form->value;
    j["closed_form_kind"] = e.closed_form->kind;
    j["closed_form_source"] = e.closed_form->source;
  }
  if (e.sigmas_from_closed_form) j["sigmas_from_closed_form"] = *e.sigmas_from_closed_form;
}

inline void to_json(json& j, const EmptinessReport& r) {
  j = {{"model", model(r.model).name},
       {"physical_mode", to_string(r.physical_mode)},
       {"sup_l1_squared", r.sup_l1_squared},
       {"sup_point", r.sup_point},
       {"threshold", r.threshold},
       {"analytically_empty", r.analytically_empty},
       {"n_samples", r.n_samples},
       {"n_physical", r.n_physical},
       {"hits", r.hits}};
}

inline void to_json(json& j, const Island& is) {
  j = {{"id", is.id},
       {"voxel_count", is.voxel_count},
       {"volume_fraction", is.volume_fraction},
       {"centroid", is.centroid},
       {"octant_signature", is.octant_signature},
       {"bbox", {{"min", is.bbox_min}, {"max", is.bbox_max}}}};
}

inline void to_json(json& j, const IslandReport& r) {
  const double h = r.half_width;
  j = {{"model", model(r.model).name},
       {"constraint", to_string(r.constraint)},
       {"physical_mode", to_string(r.physical_mode)},
       {"resolution", r.resolution},
       {"bounding_box", {{-h, h}, {-h, h}, {-h, h}}},
       {"voxel_size", r.voxel_size},
       {"physical_voxels", r.physical_voxels},
       {"region_voxels", r.region_voxels},
       {"island_count", r.island_count},
       {"islands", r.islands},
       {"total_volume_fraction", r.total_volume_fraction},
       {"shell_voxels", r.shell_voxels},
       {"shell_bound", r.shell_bound}};
}

inline void to_json(json& j, const OptResult& r) {
  j = {{"best_point", r.best_point},
       {"best_value", r.best_value},
       {"restarts", r.restarts},
       {"feasible", r.feasible},
       {"objective", to_string(r.objective)},
       {"feasible_set", to_string(r.feasible_set)},
       {"physical_mode", to_string(r.physical_mode)},
       {"evaluations", r.evaluations}};
}

inline void to_json(json& j, const ThresholdReport& r) {
  j = {{"model", model(r.model).name},
       {"physical_mode", to_string(r.physical_mode)},
       {"max_abs_product", r.max_abs_product},
       {"best_point", r.best_point},
       {"bound", r.bound},
       {"region_nonempty", r.region_nonempty},
       {"expected_empty", r.expected_empty},
       {"n_samples", r.n_samples},
       {"n_physical", r.n_physical},
       {"sample_hits", r.sample_hits},
       {"consistent", r.consistent}};
}

inline void to_json(json& j, const ExportSummary& s) {
  j = {{"path", s.path},
       {"format", s.format == CloudFormat::csv ? "csv" : "ply"},
       {"n_points", s.n_points},
       {"island_count", s.island_count}};
}

}  // namespace archipelago
