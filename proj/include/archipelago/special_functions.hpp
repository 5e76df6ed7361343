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

// Dilogarithm and the closed-form probabilities built on it.

#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "archipelago/errors.hpp"

namespace archipelago {

namespace detail {

// sum_{k>=1} x^k / k^2 for |x| <= 1/2.
inline double dilog_series(double x) {
  double sum = 0.0;
  double power = x;
  for (int k = 1; k < 200; ++k) {
    const double term = power / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    power *= x;
  }
  return sum;
}

}  // namespace detail

/// Real dilogarithm Li2(x) for x <= 1.
inline double dilog(double x) {
  constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  if (std::isnan(x) || x > 1.0) throw DomainError("dilog: argument must be <= 1");
  if (x == 1.0) return pi2_6;
  if (x == 0.0) return 0.0;
  if (x > 0.5) {
    // reflection: Li2(x) + Li2(1-x) = pi^2/6 - ln x ln(1-x)
    return pi2_6 - std::log(x) * std::log1p(-x) - detail::dilog_series(1.0 - x);
  }
  if (x >= -0.5) return detail::dilog_series(x);
  if (x >= -1.0) {
    // Landen: Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2, with x/(x-1) in (1/3, 1/2]
    const double l = std::log1p(-x);
    return -detail::dilog_series(x / (x - 1.0)) - 0.5 * l * l;
  }
  // inversion: Li2(x) = -pi^2/6 - ln^2(-x)/2 - Li2(1/x)
  const double l = std::log(-x);
  return -pi2_6 - 0.5 * l * l - dilog(1.0 / x);
}

/// Li1(x) = -ln(1 - x), x < 1.
inline double li1(double x) {
  if (std::isnan(x) || x >= 1.0) throw DomainError("li1: argument must be < 1");
  return -std::log1p(-x);
}

/// Inverse hyperbolic cotangent, |x| > 1.
inline double acoth(double x) {
  if (std::isnan(x) || std::abs(x) <= 1.0) throw DomainError("acoth: requires |x| > 1");
  return std::atanh(1.0 / x);
}

/// Named sub-terms and identity residuals of one closed-form evaluation.
struct FormulaReport {
  std::string name;
  double value = 0.0;
  std::map<std::string, double> parts;
  std::map<std::string, double> identity_checks;
};

/// Elementary constants entering the qubit-ququart formulas. Computed from
/// their radical/log expressions; individual fields can be overridden to
/// check that verification detects a corrupted constant.
struct FormulaConstants {
  double sqrt3 = std::sqrt(3.0);
  double ln2 = std::log(2.0);
  double ln3 = std::log(3.0);
  /// sqrt(81 - 64/sqrt(3))
  double root = std::sqrt(81.0 - 64.0 / std::sqrt(3.0));
  /// sqrt(729 - 192 sqrt(3))
  double big_root = std::sqrt(729.0 - 192.0 * std::sqrt(3.0));

  [[nodiscard]] double acoth_term() const { return acoth(9.0 / root); }
  /// (9 - root)/18 and (9 + root)/18, the two dilogarithm arguments.
  [[nodiscard]] double arg_minus() const { return (9.0 - root) / 18.0; }
  [[nodiscard]] double arg_plus() const { return (9.0 + root) / 18.0; }
};

/// Reported value of the qubit-ququart bound entanglement probability.
inline constexpr double kP1Reported = 0.08655423366978987;
/// Reported value of the two-ququart bound entanglement probability.
inline constexpr double kP2Reported = 0.0890496;
/// Reported two-qubit multiplicative-constraint probability.
inline constexpr double kM3MultiplicativeReported = 0.3911855600402;
/// Reported two-qubit additive-but-not-multiplicative probability.
inline constexpr double kM3AdditiveMinusMultReported = 0.108814;

/// Bound entanglement probability of the qubit-ququart family in its
/// original dilogarithm/log form with sub-terms A, B, C.
inline FormulaReport p1_original(const FormulaConstants& k = {}) {
  const double r = k.root;
  const double big = k.big_root;
  const double ac = k.acoth_term();

  const double a = 2.0 * std::log(1024.0 / 243.0 * (9.0 + r)) * std::log(27.0 - big) -
                   3.0 * std::log(48.0) * std::log(108.0);
  const double lp = std::log(27.0 + big);
  const double b = 2.0 * lp * lp + 3.0 * std::log(2187.0 / 256.0) * lp;
  const double c = 8.0 * dilog(k.arg_minus()) - 8.0 * dilog(k.arg_plus());

  FormulaReport rep;
  rep.name = "p1_original";
  rep.value = (9.0 * std::sqrt(243.0 - 64.0 * k.sqrt3) - 4.0 * (16.0 * ac + a + b + c)) /
              (81.0 * k.sqrt3);
  rep.parts = {{"A", a}, {"B", b}, {"C", c}, {"acoth", ac}};
  rep.identity_checks["radical"] = std::abs(big - 3.0 * r);
  rep.identity_checks["log_difference_vs_acoth"] =
      std::abs(lp - std::log(27.0 - big) - 2.0 * ac);
  rep.identity_checks["log_minus_acoth"] =
      std::abs(lp - ac - (3.0 * k.ln2 + 0.75 * k.ln3));
  return rep;
}

/// |[Li1(x+) - Li1(x-)] - 2 acoth(9/root)|; Li1 reduces the dilogarithm
/// difference to plain logarithms.
inline double li1_identity_check(const FormulaConstants& k = {}) {
  return std::abs(li1(k.arg_plus()) - li1(k.arg_minus()) - 2.0 * k.acoth_term());
}

/// Same probability after eliminating the log terms with the two identities.
inline FormulaReport p1_simplified(const FormulaConstants& k = {}) {
  const double r = k.root;
  const double ac = k.acoth_term();
  const double dilog_diff = dilog(k.arg_plus()) - dilog(k.arg_minus());

  FormulaReport rep;
  rep.name = "p1_simplified";
  rep.value = (16.0 * (-4.0 - 9.0 * k.ln3 + 8.0 * k.ln2) * ac + 32.0 * dilog_diff +
               9.0 * k.sqrt3 * r) /
              (81.0 * k.sqrt3);
  rep.parts = {{"acoth", ac}, {"dilog_difference", dilog_diff}};
  rep.identity_checks["li1_difference_vs_acoth"] = li1_identity_check(k);
  rep.identity_checks["log_ratio_vs_acoth"] =
      std::abs(std::log(k.arg_plus()) - std::log(k.arg_minus()) - 2.0 * ac);
  rep.identity_checks["agreement_with_original"] = std::abs(rep.value - p1_original(k).value);
  return rep;
}

/// Two-ququart bound entanglement probability (473 - 512 L (1 + L))/729,
/// L = ln(27/16). Also the volume fraction of {u in [0,1]^3 : u1 u2 u3 > c},
/// c = 256/729, which gives the cross form 1 - c + c ln c - c ln^2(c)/2.
inline FormulaReport p2_closed() {
  const double l = std::log(27.0 / 16.0);
  const double c = 256.0 / 729.0;
  const double lc = std::log(c);
  const double cross = 1.0 - c + c * lc - c * lc * lc / 2.0;

  FormulaReport rep;
  rep.name = "p2_closed";
  rep.value = (473.0 - 512.0 * l * (1.0 + l)) / 729.0;
  rep.parts = {{"L", l}, {"cross_form", cross}};
  rep.identity_checks["cross_form"] = std::abs(rep.value - cross);
  return rep;
}

/// Auxiliary two-rebit separability function
///   2 (e^2 (4 Li2(e) - Li2(e^2)) - e^4 atanh(e) + e^3 - e + atanh(e)) / (pi^2 e^2)
/// for 0 < e <= 1, with its limit 1 at e = 1.
inline double chi_tilde_1(double eps) {
  if (!(eps > 0.0) || eps > 1.0) throw DomainError("chi_tilde_1: requires 0 < eps <= 1");
  if (eps == 1.0) return 1.0;
  const double e2 = eps * eps;
  // atanh(e) - e, by series when cancellation would cost digits
  double atanh_minus = 0.0;
  if (eps < 0.1) {
    double power = eps * e2;
    for (int k = 1; k < 40; ++k) {
      atanh_minus += power / (2.0 * k + 1.0);
      power *= e2;
    }
  } else {
    atanh_minus = std::atanh(eps) - eps;
  }
  const double num = e2 * (4.0 * dilog(eps) - dilog(e2)) - e2 * e2 * std::atanh(eps) +
                     eps * e2 + atanh_minus;
  return 2.0 * num / (std::numbers::pi * std::numbers::pi * e2);
}

}  // namespace archipelago
