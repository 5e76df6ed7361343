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

// Connected components ("islands") of a constraint region on a voxel grid.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <string>
#include <system_error>
#include <tuple>
#include <vector>

#include "archipelago/errors.hpp"
#include "archipelago/models.hpp"
#include "archipelago/parallel.hpp"
#include "archipelago/sampling.hpp"

namespace archipelago {

struct GridConfig {
  /// Voxels per axis; odd and >= 33 so that the coordinate planes t_i = 0
  /// carry a layer of voxel centers.
  int resolution = 121;
  std::optional<PhysicalMode> physical_mode;
  double eps_psd = kDefaultEpsPsd;
  unsigned workers = 1;
};

struct Island {
  int id = 0;
  std::uint64_t voxel_count = 0;
  /// voxel_count / number of physical voxels
  double volume_fraction = 0.0;
  ParamPoint centroid;
  /// sign (-1, 0, +1) of each centroid coordinate
  std::array<int, 3> octant_signature{};
  ParamPoint bbox_min;
  ParamPoint bbox_max;
};

struct IslandReport {
  ModelId model = ModelId::M1;
  Constraint constraint = Constraint::multiplicative;
  PhysicalMode physical_mode = PhysicalMode::analytic;
  int resolution = 0;
  /// The grid covers [-half_width, half_width]^3.
  double half_width = 0.0;
  double voxel_size = 0.0;
  std::uint64_t physical_voxels = 0;
  std::uint64_t region_voxels = 0;
  int island_count = 0;
  std::vector<Island> islands;
  /// region_voxels / physical_voxels
  double total_volume_fraction = 0.0;
  /// Region voxels with a face neighbour outside the region.
  std::uint64_t shell_voxels = 0;
  /// shell_voxels / physical_voxels; bounds the discretization error of
  /// total_volume_fraction.
  double shell_bound = 0.0;
};

/// Report plus the island id of every voxel (-1 outside the region), in
/// x-major order: index = (i * R + j) * R + k for coordinates (t1, t2, t3).
struct IslandGrid {
  IslandReport report;
  std::vector<std::int32_t> voxel_island;

  [[nodiscard]] ParamPoint center(int i, int j, int k) const {
    const double h = report.voxel_size;
    const int mid = (report.resolution - 1) / 2;
    return {(i - mid) * h, (j - mid) * h, (k - mid) * h};
  }
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // smaller index is the root
  }

 private:
  std::vector<std::size_t> parent_;
};

inline int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace detail

/// Labels the 6-connected components of {physical and constraint} over
/// voxel centers. Islands are sorted by voxel count (descending), ties
/// broken by octant signature then centroid.
inline IslandGrid label_islands(const ModelSpec& spec, Constraint constraint,
                                const GridConfig& cfg) {
  const int r = cfg.resolution;
  if (r < 33 || r % 2 == 0)
    throw ContractError("resolution must be odd and >= 33 (got " + std::to_string(r) +
                        "): odd grids put voxel centers on the planes t_i = 0, which keeps "
                        "sign octants from merging through them");
  const PhysicalMode mode = cfg.physical_mode.value_or(spec.default_mode);
  if (!spec.supports(mode))
    throw UnsupportedModeError(std::string("model ") + std::string(spec.name) +
                               " does not support physical mode " + std::string(to_string(mode)));

  IslandGrid grid;
  IslandReport& rep = grid.report;
  rep.model = spec.id;
  rep.constraint = constraint;
  rep.physical_mode = mode;
  rep.resolution = r;
  rep.half_width = spec.half_width;
  rep.voxel_size = 2.0 * spec.half_width / r;

  const auto n = static_cast<std::size_t>(r);
  auto index = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };

  // 0 unphysical, 1 physical, 2 physical and in region
  std::vector<std::uint8_t> state(n * n * n, 0);
  parallel_for(n, cfg.workers, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const ParamPoint t = grid.center(static_cast<int>(i), static_cast<int>(j),
                                         static_cast<int>(k));
        const auto m = region_membership(spec, t, constraint, mode, cfg.eps_psd);
        state[index(i, j, k)] = m.in_region ? 2 : (m.physical ? 1 : 0);
      }
  });

  detail::DisjointSets sets(state.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t v = index(i, j, k);
        if (state[v]) ++rep.physical_voxels;
        if (state[v] != 2) continue;
        ++rep.region_voxels;
        bool shell = i == 0 || j == 0 || k == 0 || i + 1 == n || j + 1 == n || k + 1 == n;
        if (i + 1 < n && state[index(i + 1, j, k)] == 2) sets.unite(v, index(i + 1, j, k));
        if (j + 1 < n && state[index(i, j + 1, k)] == 2) sets.unite(v, index(i, j + 1, k));
        if (k + 1 < n && state[index(i, j, k + 1)] == 2) sets.unite(v, index(i, j, k + 1));
        if (!shell)
          shell = state[index(i + 1, j, k)] != 2 || state[index(i - 1, j, k)] != 2 ||
                  state[index(i, j + 1, k)] != 2 || state[index(i, j - 1, k)] != 2 ||
                  state[index(i, j, k + 1)] != 2 || state[index(i, j, k - 1)] != 2;
        if (shell) ++rep.shell_voxels;
      }

  // accumulate per root
  struct Acc {
    std::size_t root;
    std::uint64_t count = 0;
    std::array<double, 3> sum{};
    std::array<int, 3> lo{}, hi{};
  };
  std::vector<Acc> accs;
  std::vector<std::int32_t> slot(state.size(), -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t v = index(i, j, k);
        if (state[v] != 2) continue;
        const std::size_t root = sets.find(v);
        if (slot[root] < 0) {
          slot[root] = static_cast<std::int32_t>(accs.size());
          Acc a;
          a.root = root;
          a.lo = {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
          a.hi = a.lo;
          accs.push_back(a);
        }
        Acc& a = accs[static_cast<std::size_t>(slot[root])];
        const std::array<int, 3> ijk = {static_cast<int>(i), static_cast<int>(j),
                                        static_cast<int>(k)};
        ++a.count;
        const ParamPoint c = grid.center(ijk[0], ijk[1], ijk[2]);
        for (std::size_t d = 0; d < 3; ++d) {
          a.sum[d] += c[d];
          a.lo[d] = std::min(a.lo[d], ijk[d]);
          a.hi[d] = std::max(a.hi[d], ijk[d]);
        }
      }

  const double phys = static_cast<double>(rep.physical_voxels);
  std::vector<std::pair<Island, std::size_t>> found;
  for (const auto& a : accs) {
    Island is;
    is.voxel_count = a.count;
    is.volume_fraction = phys > 0 ? static_cast<double>(a.count) / phys : 0.0;
    for (std::size_t d = 0; d < 3; ++d) {
      is.centroid[d] = a.sum[d] / static_cast<double>(a.count);
      is.octant_signature[d] = detail::sign_of(is.centroid[d]);
    }
    is.bbox_min = grid.center(a.lo[0], a.lo[1], a.lo[2]);
    is.bbox_max = grid.center(a.hi[0], a.hi[1], a.hi[2]);
    found.emplace_back(is, a.root);
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    const Island& a = x.first;
    const Island& b = y.first;
    if (a.voxel_count != b.voxel_count) return a.voxel_count > b.voxel_count;
    if (a.octant_signature != b.octant_signature) return a.octant_signature < b.octant_signature;
    return std::tie(a.centroid.t1, a.centroid.t2, a.centroid.t3) <
           std::tie(b.centroid.t1, b.centroid.t2, b.centroid.t3);
  });

  std::vector<std::int32_t> root_to_id(state.size(), -1);
  for (std::size_t id = 0; id < found.size(); ++id) {
    found[id].first.id = static_cast<int>(id);
    root_to_id[found[id].second] = static_cast<std::int32_t>(id);
    rep.islands.push_back(found[id].first);
  }
  rep.island_count = static_cast<int>(rep.islands.size());
  rep.total_volume_fraction = phys > 0 ? static_cast<double>(rep.region_voxels) / phys : 0.0;
  rep.shell_bound = phys > 0 ? static_cast<double>(rep.shell_voxels) / phys : 0.0;

  grid.voxel_island.assign(state.size(), -1);
  for (std::size_t v = 0; v < state.size(); ++v)
    if (state[v] == 2) grid.voxel_island[v] = root_to_id[sets.find(v)];
  return grid;
}

inline IslandReport enumerate_islands(const ModelSpec& spec, Constraint constraint,
                                      const GridConfig& cfg) {
  return label_islands(spec, constraint, cfg).report;
}

enum class CloudFormat { csv, ply };

inline std::optional<CloudFormat> parse_cloud_format(std::string_view s) {
  if (s == "csv") return CloudFormat::csv;
  if (s == "ply") return CloudFormat::ply;
  return std::nullopt;
}

struct CloudPoint {
  ParamPoint t;
  Label label = Label::unphysical;
  int island_id = -1;
};

/// RGB colour of each label in PLY output.
inline std::array<int, 3> label_color(Label l) {
  switch (l) {
    case Label::bound_entangled: return {230, 97, 1};
    case Label::free_entangled: return {44, 123, 182};
    case Label::undetermined: return {160, 160, 160};
    case Label::unphysical: return {0, 0, 0};
  }
  return {0, 0, 0};
}

/// Region points from an island grid, in voxel order, with island ids.
inline std::vector<CloudPoint> cloud_from_grid(const ModelSpec& spec, const IslandGrid& grid,
                                               double eps_psd = kDefaultEpsPsd) {
  std::vector<CloudPoint> out;
  const int r = grid.report.resolution;
  std::size_t v = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k, ++v) {
        if (grid.voxel_island[v] < 0) continue;
        const ParamPoint t = grid.center(i, j, k);
        out.push_back({t, quick_label(spec, t, grid.report.physical_mode, eps_psd),
                       grid.voxel_island[v]});
      }
  return out;
}

/// Region points from the sampler, in sequence order; island ids are -1.
inline std::vector<CloudPoint> cloud_from_samples(const ModelSpec& spec, Constraint constraint,
                                                  const SamplerConfig& cfg) {
  const PhysicalMode mode = resolve_mode(spec, cfg);
  std::vector<CloudPoint> out;
  for (const ParamPoint& t : sample_physical(spec, cfg)) {
    if (!in_constraint(spec, t, constraint, [&] { return is_ppt(spec, t, mode, cfg.eps_psd); }))
      continue;
    out.push_back({t, quick_label(spec, t, mode, cfg.eps_psd), -1});
  }
  return out;
}

namespace detail {

inline void append_double(std::string& s, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  s.append(buf, res.ptr);
}

}  // namespace detail

/// CSV: header "t1,t2,t3,label,island_id", one row per point.
inline std::string format_csv(const std::vector<CloudPoint>& points) {
  std::string s = "t1,t2,t3,label,island_id\n";
  for (const auto& p : points) {
    detail::append_double(s, p.t.t1);
    s += ',';
    detail::append_double(s, p.t.t2);
    s += ',';
    detail::append_double(s, p.t.t3);
    s += ',';
    s += to_string(p.label);
    s += ',';
    s += std::to_string(p.island_id);
    s += '\n';
  }
  return s;
}

/// ASCII PLY with per-vertex colour (see label_color) and island id.
inline std::string format_ply(const std::vector<CloudPoint>& points, std::string_view comment) {
  std::string s = "ply\nformat ascii 1.0\n";
  if (!comment.empty()) {
    s += "comment ";
    s += comment;
    s += '\n';
  }
  s += "element vertex " + std::to_string(points.size()) + "\n";
  s += "property double x\nproperty double y\nproperty double z\n";
  s += "property uchar red\nproperty uchar green\nproperty uchar blue\n";
  s += "property int island\nend_header\n";
  for (const auto& p : points) {
    detail::append_double(s, p.t.t1);
    s += ' ';
    detail::append_double(s, p.t.t2);
    s += ' ';
    detail::append_double(s, p.t.t3);
    for (int c : label_color(p.label)) s += ' ' + std::to_string(c);
    s += ' ' + std::to_string(p.island_id) + '\n';
  }
  return s;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

struct ExportSummary {
  std::string path;
  CloudFormat format = CloudFormat::csv;
  std::uint64_t n_points = 0;
  int island_count = -1;  // -1 when islands were not computed
};

inline ExportSummary export_point_cloud(const ModelSpec& spec, Constraint constraint,
                                        const std::vector<CloudPoint>& points,
                                        const std::filesystem::path& path, CloudFormat format,
                                        int island_count = -1) {
  const std::string comment = "model=" + std::string(spec.name) +
                              " constraint=" + std::string(to_string(constraint));
  write_text_file(path, format == CloudFormat::csv ? format_csv(points)
                                                   : format_ply(points, comment));
  return {path.string(), format, points.size(), island_count};
}

}  // namespace archipelago
