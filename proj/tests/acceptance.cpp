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

// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "archipelago/bounds.hpp"
#include "archipelago/islands.hpp"
#include "archipelago/sampling.hpp"
#include "archipelago/verification.hpp"
#include "archipelago_cli.hpp"

using namespace archipelago;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

SamplerConfig sampler(std::uint64_t n, std::uint64_t seed) {
  SamplerConfig c;
  c.n_samples = n;
  c.seed = seed;
  return c;
}

bool within(const VolumeEstimate& e, double ref, double k = 4.0) {
  return std::abs(e.probability - ref) <= k * e.std_error;
}

std::string describe(const char* name, const VolumeEstimate& e, double ref) {
  return fmt("%s %.7f se %.2e (ref %.7f, %+.2f sigma)", name, e.probability, e.std_error, ref,
             (e.probability - ref) / e.std_error);
}

const std::vector<std::string> kTwoQuquartArgs = {"prob", "M2", "--samples", "10000000",
                                                  "--seed", "2026", "--compare-closed-form"};

std::string cli_payload(std::vector<std::string> args) {
  std::ostringstream out, err;
  if (archipelago::cli::run_cli(args, out, err, false) != 0)
    throw std::runtime_error("cli failed: " + err.str());
  return out.str();
}

Outcome closed_form_chain() {
  const double a = p1_original().value, b = p1_simplified().value;
  const bool ok = std::abs(a - b) <= 1e-12 && std::abs(a - kP1Reported) <= 1e-11 &&
                  std::abs(b - kP1Reported) <= 1e-11;
  return {ok, fmt("original %.17g simplified %.17g |diff| %.1e", a, b, std::abs(a - b))};
}

Outcome identity_suite() {
  const auto o = p1_original();
  const auto s = p1_simplified();
  const double r[] = {o.identity_checks.at("radical"),
                      o.identity_checks.at("log_difference_vs_acoth"),
                      o.identity_checks.at("log_minus_acoth"), li1_identity_check(),
                      s.identity_checks.at("log_ratio_vs_acoth")};
  double worst = 0.0;
  for (double x : r) worst = std::max(worst, x);
  return {worst <= 1e-13, fmt("max residual %.2e over %zu identities", worst, std::size(r))};
}

Outcome two_ququart_closed_form() {
  const auto p = p2_closed();
  const double cross = p.identity_checks.at("cross_form");
  return {std::abs(p.value - kP2Reported) <= 5e-7 && cross <= 1e-14,
          fmt("p2 %.15f vs %.7f, cross-form residual %.1e", p.value, kP2Reported, cross)};
}

Outcome two_ququart_monte_carlo() {
  const auto j = nlohmann::json::parse(cli_payload(kTwoQuquartArgs))["result"];
  const double p = j["probability"], se = j["std_error"];
  const double ref = p2_closed().value;
  return {std::abs(p - ref) <= 4 * se && se <= 1.2e-4,
          fmt("estimate %.7f se %.2e vs %.7f (%+.2f sigma), %s", p, se, ref, (p - ref) / se,
              j["method"].get<std::string>().c_str())};
}

Outcome qubit_ququart_monte_carlo() {
  const auto e =
      estimate_probability(model(ModelId::M1), Constraint::multiplicative, sampler(10'000'000, 2026));
  const double ref = p1_simplified().value;
  return {within(e, ref) && e.std_error <= 1.0e-4, describe("estimate", e, ref)};
}

Outcome two_qubit_suite(ModelId id, bool full) {
  const auto& spec = model(id);
  struct Item {
    const char* name;
    Constraint c;
    double ref;
  };
  std::vector<Item> items = {{"non-ppt", Constraint::non_ppt, 0.5},
                             {"mult", Constraint::multiplicative, kM3MultiplicativeReported}};
  if (full) {
    items.insert(items.begin() + 1, {"additive", Constraint::additive, 0.5});
    items.push_back({"add-mult", Constraint::additive_minus_mult, kM3AdditiveMinusMultReported});
  }
  bool ok = true;
  std::string detail;
  std::uint64_t seed = 2026;
  for (const auto& it : items) {
    const auto e = estimate_probability(spec, it.c, sampler(10'000'000, seed++));
    ok = ok && within(e, it.ref);
    detail += (detail.empty() ? "" : "; ") + describe(it.name, e, it.ref);
  }
  return {ok, detail};
}

Outcome separable_qutrit_family() {
  BoundsConfig b;
  b.restarts = 64;
  const auto rep = threshold_consistency(model(ModelId::M5), b, sampler(2'000'000, 2026));
  const bool ok = rep.n_physical >= 1'000'000 && rep.sample_hits == 0 &&
                  rep.max_abs_product <= rep.bound + kThresholdSlack && rep.consistent;
  return {ok, fmt("%llu physical samples, %llu hits; max |t1t2t3| %.13f vs bound %.13f "
                  "(excess %.1e, tolerance %.0e)",
                  static_cast<unsigned long long>(rep.n_physical),
                  static_cast<unsigned long long>(rep.sample_hits), rep.max_abs_product, rep.bound,
                  rep.max_abs_product - rep.bound, kThresholdSlack)};
}

Outcome island_counts() {
  bool ok = true;
  std::string detail;
  for (auto id : {ModelId::M1, ModelId::M2}) {
    for (int r : {81, 121, 161}) {
      GridConfig g;
      g.resolution = r;
      const auto rep = enumerate_islands(model(id), Constraint::multiplicative, g);
      std::set<std::array<int, 3>> octants;
      for (const auto& is : rep.islands) octants.insert(is.octant_signature);
      ok = ok && rep.island_count == 8 && octants.size() == 8;
      detail += fmt("%s@%d:%d ", std::string(model(id).name).c_str(), r, rep.island_count);
    }
  }
  return {ok, detail + "islands"};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  std::uint64_t mismatches = 0, skipped = 0, compared = 0;
  auto band = [](ModelId id, const ParamPoint& t) {
    const double a1 = std::abs(t.t1), a2 = std::abs(t.t2), a3 = std::abs(t.t3);
    if (id == ModelId::M1) return std::min(std::abs(a2 - 0.5), std::abs(a1 + a3 - 0.5));
    const double r = id == ModelId::M3 ? 1.0 : 4.0 / 9.0;
    return std::min({std::abs(r + t.t1 - t.t2 + t.t3), std::abs(r - t.t1 + t.t2 + t.t3),
                     std::abs(r + t.t1 + t.t2 - t.t3), std::abs(r - t.t1 - t.t2 - t.t3)});
  };
  for (auto id : {ModelId::M1, ModelId::M3, ModelId::M4}) {
    const auto& spec = model(id);
    for (int i = 0; i < 100'000; ++i) {
      const ParamPoint t{u(rng) * spec.half_width, u(rng) * spec.half_width,
                         u(rng) * spec.half_width};
      if (band(id, t) < 1e-9 || band(id, {t.t1, -t.t2, t.t3}) < 1e-9) {
        ++skipped;
        continue;
      }
      ++compared;
      if (is_physical(spec, t, PhysicalMode::analytic) !=
          is_physical(spec, t, PhysicalMode::psd_oracle))
        ++mismatches;
      if (id == ModelId::M1 && is_ppt(spec, t, PhysicalMode::analytic) != is_ppt_oracle(spec, t))
        ++mismatches;
    }
  }
  const auto& m2 = model(ModelId::M2);
  std::uniform_real_distribution<double> q(-0.25, 0.25);
  std::uint64_t pt_differs = 0;
  for (int i = 0; i < 10'000; ++i) {
    const auto rho = build_state(m2, {q(rng), q(rng), q(rng)});
    if (!(partial_transpose_b(rho, 4, 4) == rho)) ++pt_differs;
  }
  return {mismatches == 0 && pt_differs == 0,
          fmt("%llu mismatches in %llu points (%llu in boundary band); M2 partial transpose "
              "differs at %llu of 10000",
              static_cast<unsigned long long>(mismatches),
              static_cast<unsigned long long>(compared), static_cast<unsigned long long>(skipped),
              static_cast<unsigned long long>(pt_differs))};
}

Outcome extremal_validity() {
  int a = 0, b = 0;
  bool ok = true;
  double worst = 0.0;
  for (const auto& s : extremal_states()) {
    ok = ok && std::abs(s.trace - 1.0) <= 1e-12;
    if (s.family == "A") {
      ++a;
      for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        const double d = std::abs(s.eigenvalues[i] - (i == 0 ? 0.0 : 1.0));
        worst = std::max(worst, d);
        ok = ok && d <= 1e-12;
      }
    } else {
      ++b;
      ok = ok && s.min_eigenvalue >= -1e-12;
    }
  }
  return {ok && a == 8 && b == 4, fmt("%d qubit states (max eigenvalue error %.1e), %d ququart "
                                      "states", a, worst, b)};
}

Outcome additive_emptiness() {
  const auto r1 = emptiness_check(model(ModelId::M1), sampler(1'000'000, 2026));
  const auto r2 = emptiness_check(model(ModelId::M2), sampler(1'000'000, 2026));
  const bool ok = r1.hits == 0 && r2.hits == 0 && r1.sup_l1_squared == 1.0 &&
                  r2.sup_l1_squared == 9.0 / 16.0 && r1.analytically_empty &&
                  r2.analytically_empty;
  return {ok, fmt("M1 sup %.6g hits %llu; M2 sup %.6g hits %llu", r1.sup_l1_squared,
                  static_cast<unsigned long long>(r1.hits), r2.sup_l1_squared,
                  static_cast<unsigned long long>(r2.hits))};
}

Outcome bound_optimization() {
  BoundsConfig b;
  b.restarts = 64;
  const auto oct = maximize(model(ModelId::M3), Objective::abs_product,
                            FeasibleSet::ppt_and_physical, b);
  const auto m1 = maximize(model(ModelId::M1), Objective::abs_product, FeasibleSet::physical, b);
  const bool ok = std::abs(oct.best_value - 1.0 / 27.0) <= 1e-6 &&
                  std::abs(m1.best_value - 1.0 / 32.0) <= 1e-6;
  return {ok, fmt("octahedron %.13f (1/27 %+.1e), M1 %.13f (1/32 %+.1e)", oct.best_value,
                  oct.best_value - 1.0 / 27.0, m1.best_value, m1.best_value - 1.0 / 32.0)};
}

Outcome determinism() {
  const std::string a = cli_payload(kTwoQuquartArgs);
  const std::string b = cli_payload(kTwoQuquartArgs);
  auto parallel = kTwoQuquartArgs;
  parallel.insert(parallel.end(), {"--workers", "4"});
  const std::string c = cli_payload(parallel);
  const auto pa = nlohmann::json::parse(a)["result"];
  const auto pc = nlohmann::json::parse(c)["result"];
  const bool ok = a == b && pa["probability"] == pc["probability"] &&
                  pa["n_hits"] == pc["n_hits"] && a == c;
  return {ok, fmt("repeat byte-identical: %s; 4 workers same estimate: %s",
                  a == b ? "yes" : "no", a == c ? "yes" : "no")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "closed-form chain", closed_form_chain},
      {2, "identity suite", identity_suite},
      {3, "two-ququart closed form", two_ququart_closed_form},
      {4, "Monte Carlo vs closed form, M2 cube", two_ququart_monte_carlo},
      {5, "Monte Carlo vs closed form, M1", qubit_ququart_monte_carlo},
      {6, "two-qubit suite, M3", [] { return two_qubit_suite(ModelId::M3, true); }},
      {7, "two-qutrit M4, scaled thresholds", [] { return two_qubit_suite(ModelId::M4, false); }},
      {8, "M5 emptiness", separable_qutrit_family},
      {9, "island counts", island_counts},
      {10, "oracle equivalence", oracle_equivalence},
      {11, "extremal-state validity", extremal_validity},
      {12, "additive emptiness", additive_emptiness},
      {13, "bound optimization", bound_optimization},
      {14, "determinism", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
