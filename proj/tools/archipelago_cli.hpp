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

// Command-line front end. JSON documents go to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 2 usage error, 3 numeric or contract failure,
// 4 I/O error.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "archipelago/bounds.hpp"
#include "archipelago/islands.hpp"
#include "archipelago/models.hpp"
#include "archipelago/report_json.hpp"
#include "archipelago/sampling.hpp"
#include "archipelago/verification.hpp"
#include "archipelago/version.hpp"

namespace archipelago::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitIo = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

inline std::string catalog_hint() {
  std::string names;
  for (const auto& m : all_models()) names += (names.empty() ? "" : ", ") + std::string(m.name);
  return " (known models: " + names + "; run `list-models` for details)";
}

inline const ModelSpec& lookup_model(const std::string& name) {
  const auto id = parse_model_id(name);
  if (!id) throw UsageError("unknown model '" + name + "'" + catalog_hint());
  return model(*id);
}

inline std::optional<PhysicalMode> lookup_mode(const ModelSpec& spec, const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto mode = parse_physical_mode(s);
  if (!mode) throw UsageError("unknown physical mode '" + s + "'");
  if (!spec.supports(*mode))
    throw UsageError("model " + std::string(spec.name) + " does not support physical mode " + s);
  return mode;
}

inline Constraint lookup_constraint(const std::string& s) {
  const auto c = parse_constraint(s);
  if (!c) throw UsageError("unknown constraint '" + s + "'");
  return *c;
}

// Appends "--key value" for every key of the JSON config that is not
// already given on the command line.
inline std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config '" + path + "' must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back(flag);
    } else if (value.is_string()) {
      args.push_back(flag);
      args.push_back(value.get<std::string>());
    } else if (value.is_number()) {
      args.push_back(flag);
      args.push_back(value.dump());
    } else {
      throw UsageError("config key '" + key + "' must be a string, number or boolean");
    }
  }
  return args;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err,
                   bool with_timestamp = true) {
  CLI::App app{"Region geometry, probabilities and islands of three-parameter bipartite "
               "state families",
               "archipelago"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ARCHIPELAGO_VERSION);

  std::string config_path;
  std::string model_name;
  std::string constraint_name = "multiplicative";
  std::string mode_name;
  std::string method = "mc";
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  std::uint64_t chunk = 65'536;
  unsigned workers = 0;
  double eps_psd = kDefaultEpsPsd;
  bool compare = false;
  double t1 = 0, t2 = 0, t3 = 0;
  int resolution = 121;
  std::string out_path;
  std::string format = "csv";
  std::string objective_name;
  std::string set_name = "physical";
  int restarts = 64;

  auto add_common = [&](CLI::App* sub, bool with_model) {
    sub->add_option("--config", config_path, "JSON file with flag values (flags win)");
    if (with_model) sub->add_option("model", model_name, "model id (M1..M5)")->required();
  };

  auto* list = app.add_subcommand("list-models", "model catalog");
  add_common(list, false);

  auto* prob = app.add_subcommand("prob", "estimate a region probability");
  add_common(prob, true);
  prob->add_option("--constraint", constraint_name,
                   "multiplicative|additive|non-ppt|additive-minus-mult|mult-minus-additive");
  prob->add_option("--method", method, "mc|lds")->check(CLI::IsMember({"mc", "lds"}));
  prob->add_option("--samples", samples, "number of proposals");
  prob->add_option("--seed", seed);
  prob->add_option("--chunk", chunk, "proposals per chunk");
  prob->add_option("--physical-mode", mode_name, "analytic|psd-oracle|paper-cube");
  prob->add_option("--eps-psd", eps_psd);
  prob->add_option("--workers", workers, "threads (0: all); never changes results");
  prob->add_flag("--compare-closed-form", compare);

  auto* classify_cmd = app.add_subcommand("classify", "classify one parameter point");
  add_common(classify_cmd, true);
  classify_cmd->add_option("--t1", t1)->required();
  classify_cmd->add_option("--t2", t2)->required();
  classify_cmd->add_option("--t3", t3)->required();
  classify_cmd->add_option("--eps-psd", eps_psd);
  classify_cmd->add_option("--physical-mode", mode_name);

  auto* islands_cmd = app.add_subcommand("islands", "connected components of a region");
  add_common(islands_cmd, true);
  islands_cmd->add_option("--constraint", constraint_name);
  islands_cmd->add_option("--resolution", resolution, "odd, >= 33");
  islands_cmd->add_option("--physical-mode", mode_name);
  islands_cmd->add_option("--eps-psd", eps_psd);
  islands_cmd->add_option("--workers", workers);

  auto* export_cmd = app.add_subcommand("export", "write a region point cloud");
  add_common(export_cmd, true);
  export_cmd->add_option("--constraint", constraint_name);
  auto* res_opt = export_cmd->add_option("--resolution", resolution, "grid source");
  auto* samples_opt = export_cmd->add_option("--samples", samples, "sample source");
  res_opt->excludes(samples_opt);
  export_cmd->add_option("--seed", seed);
  export_cmd->add_option("--out", out_path)->required();
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "ply"}));
  export_cmd->add_option("--physical-mode", mode_name);
  export_cmd->add_option("--eps-psd", eps_psd);
  export_cmd->add_option("--workers", workers);

  auto* verify = app.add_subcommand("verify", "closed forms and identities");
  add_common(verify, false);

  auto* bounds_cmd = app.add_subcommand("bounds", "maximize |t1 t2 t3| or |t|_1");
  add_common(bounds_cmd, true);
  bounds_cmd->add_option("--objective", objective_name, "product|l1")
      ->required()
      ->check(CLI::IsMember({"product", "l1"}));
  bounds_cmd->add_option("--set", set_name, "physical|ppt")
      ->check(CLI::IsMember({"physical", "ppt"}));
  bounds_cmd->add_option("--restarts", restarts);
  bounds_cmd->add_option("--seed", seed);
  bounds_cmd->add_option("--physical-mode", mode_name);
  bounds_cmd->add_option("--eps-psd", eps_psd);
  bounds_cmd->add_option("--workers", workers);

  auto* thresholds = app.add_subcommand(
      "thresholds", "compare the product maximum with the multiplicative bound");
  add_common(thresholds, true);
  thresholds->add_option("--restarts", restarts);
  thresholds->add_option("--samples", samples);
  thresholds->add_option("--seed", seed);
  thresholds->add_option("--physical-mode", mode_name);
  thresholds->add_option("--workers", workers);

  auto* emptiness = app.add_subcommand("emptiness", "can the additive constraint hold?");
  add_common(emptiness, true);
  emptiness->add_option("--samples", samples);
  emptiness->add_option("--seed", seed);
  emptiness->add_option("--physical-mode", mode_name);
  emptiness->add_option("--workers", workers);

  try {
    std::vector<std::string> args = detail::merge_config(raw_args);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }

    nlohmann::json config;
    nlohmann::json result;
    std::string command;
    int exit_code = kExitOk;

    if (*list) {
      command = "list-models";
      result = catalog_json();
    } else if (*prob) {
      command = "prob";
      const ModelSpec& spec = detail::lookup_model(model_name);
      SamplerConfig cfg;
      cfg.seed = seed;
      cfg.n_samples = samples;
      cfg.chunk_size = chunk;
      cfg.stream = method == "lds" ? Stream::low_discrepancy : Stream::pseudo;
      cfg.physical_mode = detail::lookup_mode(spec, mode_name);
      cfg.eps_psd = eps_psd;
      cfg.workers = workers;
      if (samples == 0 || chunk == 0) throw UsageError("--samples and --chunk must be positive");
      const Constraint c = detail::lookup_constraint(constraint_name);
      config = {{"model", spec.name},   {"constraint", to_string(c)}, {"method", method},
                {"samples", samples},   {"seed", seed},               {"chunk", chunk},
                {"physical_mode", to_string(resolve_mode(spec, cfg))},
                {"eps_psd", eps_psd},   {"compare_closed_form", compare}};
      VolumeEstimate est = estimate_probability(spec, c, cfg);
      if (compare) attach_reference(est);
      result = est;
    } else if (*classify_cmd) {
      command = "classify";
      const ModelSpec& spec = detail::lookup_model(model_name);
      const PhysicalMode mode =
          detail::lookup_mode(spec, mode_name).value_or(spec.default_mode);
      const ParamPoint t{t1, t2, t3};
      if (!t.finite()) throw UsageError("parameters must be finite");
      config = {{"model", spec.name}, {"t", t}, {"eps_psd", eps_psd},
                {"physical_mode", to_string(mode)}};
      result = classify(spec, t, mode, eps_psd);
      result["model"] = spec.name;
      result["t"] = t;
    } else if (*islands_cmd) {
      command = "islands";
      const ModelSpec& spec = detail::lookup_model(model_name);
      GridConfig g;
      g.resolution = resolution;
      g.physical_mode = detail::lookup_mode(spec, mode_name);
      g.eps_psd = eps_psd;
      g.workers = workers;
      if (resolution < 33 || resolution % 2 == 0)
        throw UsageError("--resolution must be odd and >= 33 so voxel centers lie on the "
                         "coordinate planes");
      const Constraint c = detail::lookup_constraint(constraint_name);
      config = {{"model", spec.name}, {"constraint", to_string(c)}, {"resolution", resolution},
                {"physical_mode", to_string(g.physical_mode.value_or(spec.default_mode))},
                {"eps_psd", eps_psd}};
      result = enumerate_islands(spec, c, g);
    } else if (*export_cmd) {
      command = "export";
      const ModelSpec& spec = detail::lookup_model(model_name);
      const Constraint c = detail::lookup_constraint(constraint_name);
      const auto mode = detail::lookup_mode(spec, mode_name);
      const CloudFormat fmt = *parse_cloud_format(format);
      const bool from_samples = samples_opt->count() > 0;
      config = {{"model", spec.name},
                {"constraint", to_string(c)},
                {"out", out_path},
                {"format", format},
                {"physical_mode", to_string(mode.value_or(spec.default_mode))},
                {"eps_psd", eps_psd}};
      ExportSummary summary;
      if (from_samples) {
        SamplerConfig cfg;
        cfg.seed = seed;
        cfg.n_samples = samples;
        cfg.physical_mode = mode;
        cfg.eps_psd = eps_psd;
        cfg.workers = workers;
        config["samples"] = samples;
        config["seed"] = seed;
        summary = export_point_cloud(spec, c, cloud_from_samples(spec, c, cfg), out_path, fmt);
      } else {
        if (resolution < 33 || resolution % 2 == 0)
          throw UsageError("--resolution must be odd and >= 33");
        GridConfig g;
        g.resolution = resolution;
        g.physical_mode = mode;
        g.eps_psd = eps_psd;
        g.workers = workers;
        config["resolution"] = resolution;
        const IslandGrid grid = label_islands(spec, c, g);
        summary = export_point_cloud(spec, c, cloud_from_grid(spec, grid, eps_psd), out_path,
                                     fmt, grid.report.island_count);
      }
      result = summary;
    } else if (*verify) {
      command = "verify";
      const auto checks = verify_all();
      bool all = true;
      for (const auto& ch : checks) all = all && ch.pass;
      result = nlohmann::json::object();
      result["all_pass"] = all;
      result["checks"] = checks;
      result["reports"] = nlohmann::json::array({p1_original(), p1_simplified(), p2_closed()});
      if (!all) exit_code = kExitNumeric;
    } else if (*bounds_cmd) {
      command = "bounds";
      const ModelSpec& spec = detail::lookup_model(model_name);
      BoundsConfig b;
      b.restarts = restarts;
      b.seed = seed;
      b.physical_mode = detail::lookup_mode(spec, mode_name);
      b.eps_psd = eps_psd;
      b.workers = workers;
      if (restarts < 1) throw UsageError("--restarts must be positive");
      const Objective o = objective_name == "l1" ? Objective::l1_norm : Objective::abs_product;
      const FeasibleSet fs = set_name == "ppt" ? FeasibleSet::ppt_and_physical
                                               : FeasibleSet::physical;
      config = {{"model", spec.name},      {"objective", objective_name}, {"set", set_name},
                {"restarts", restarts},    {"seed", seed},
                {"physical_mode", to_string(b.physical_mode.value_or(spec.default_mode))},
                {"eps_psd", eps_psd}};
      result = maximize(spec, o, fs, b);
    } else if (*thresholds) {
      command = "thresholds";
      const ModelSpec& spec = detail::lookup_model(model_name);
      BoundsConfig b;
      b.restarts = restarts;
      b.seed = seed;
      b.physical_mode = detail::lookup_mode(spec, mode_name);
      b.workers = workers;
      SamplerConfig s;
      s.seed = seed;
      s.n_samples = samples;
      s.workers = workers;
      config = {{"model", spec.name}, {"restarts", restarts}, {"samples", samples},
                {"seed", seed},
                {"physical_mode", to_string(b.physical_mode.value_or(spec.default_mode))}};
      const ThresholdReport rep = threshold_consistency(spec, b, s);
      result = rep;
      if (!rep.consistent) exit_code = kExitNumeric;
    } else if (*emptiness) {
      command = "emptiness";
      const ModelSpec& spec = detail::lookup_model(model_name);
      SamplerConfig s;
      s.seed = seed;
      s.n_samples = samples;
      s.physical_mode = detail::lookup_mode(spec, mode_name);
      s.workers = workers;
      if (!spec.additive_threshold)
        throw UsageError("model " + std::string(spec.name) + " has no additive constraint");
      config = {{"model", spec.name}, {"samples", samples}, {"seed", seed},
                {"physical_mode", to_string(resolve_mode(spec, s))}};
      result = emptiness_check(spec, s);
    }

    nlohmann::json doc = {{"command", command},
                          {"version", ARCHIPELAGO_VERSION},
                          {"config", config},
                          {"result", result}};
    if (with_timestamp) doc["timestamp"] = detail::utc_timestamp();
    out << doc.dump(2) << '\n';
    return exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace archipelago::cli
