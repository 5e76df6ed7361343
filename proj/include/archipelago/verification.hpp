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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "archipelago/models.hpp"
#include "archipelago/special_functions.hpp"

namespace archipelago {

struct Check {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Every closed-form value, identity and extremal-state property, each with
/// its tolerance.
inline std::vector<Check> verify_all(const FormulaConstants& k = {}) {
  std::vector<Check> checks;
  auto add = [&](std::string name, double value, double expected, double tol) {
    const double res = std::abs(value - expected);
    checks.push_back({std::move(name), value, expected, res, tol, res <= tol});
  };
  auto add_residual = [&](std::string name, double residual, double tol) {
    add(std::move(name), residual, 0.0, tol);
  };

  const FormulaReport orig = p1_original(k);
  const FormulaReport simp = p1_simplified(k);
  add("p1_original", orig.value, kP1Reported, 1e-11);
  add("p1_simplified", simp.value, kP1Reported, 1e-11);
  add("p1_original_vs_simplified", simp.value, orig.value, 1e-12);
  add_residual("identity_radical", orig.identity_checks.at("radical"), 1e-13);
  add_residual("identity_log_difference_vs_acoth",
               orig.identity_checks.at("log_difference_vs_acoth"), 1e-13);
  add_residual("identity_log_minus_acoth", orig.identity_checks.at("log_minus_acoth"), 1e-13);
  add_residual("identity_li1_difference_vs_acoth", li1_identity_check(k), 1e-13);
  add_residual("identity_log_ratio_vs_acoth", simp.identity_checks.at("log_ratio_vs_acoth"),
               1e-13);
  add("c_term_negative", orig.parts.at("C") < 0.0 ? 1.0 : 0.0, 1.0, 0.0);

  const FormulaReport p2 = p2_closed();
  add("p2_closed", p2.value, kP2Reported, 5e-7);
  add_residual("p2_cross_form", p2.identity_checks.at("cross_form"), 1e-14);

  const double ln2 = std::numbers::ln2;
  add("dilog_half", dilog(0.5), std::numbers::pi * std::numbers::pi / 12.0 - ln2 * ln2 / 2.0,
      1e-14);
  add("dilog_one", dilog(1.0), std::numbers::pi * std::numbers::pi / 6.0, 1e-15);
  add("chi_tilde_1_at_one", chi_tilde_1(1.0), 1.0, 1e-15);

  for (const auto& s : extremal_states()) {
    const std::string tag = "extremal_" + s.family + "_" + s.signs;
    add(tag + "_trace", s.trace, 1.0, 1e-14);
    if (s.family == "A") {
      add(tag + "_eigenvalue_low", s.eigenvalues.front(), 0.0, 1e-12);
      add(tag + "_eigenvalue_high", s.eigenvalues.back(), 1.0, 1e-12);
    } else {
      checks.push_back({tag + "_min_eigenvalue", s.min_eigenvalue, 0.0,
                        std::max(0.0, -s.min_eigenvalue), 1e-12, s.min_eigenvalue >= -1e-12});
    }
  }
  return checks;
}

}  // namespace archipelago
