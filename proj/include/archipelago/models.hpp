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

// Catalog of the five three-parameter state families
//
//   rho(t) = w * 1 (x) 1 + (1/4) * sum_i t_i * A_i (x) B_i
//
// together with their physicality, PPT and entanglement-constraint
// predicates.

#include <algorithm>
#include <cctype>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "archipelago/errors.hpp"
#include "archipelago/generators.hpp"
#include "archipelago/matrix.hpp"

namespace archipelago {

enum class ModelId { M1, M2, M3, M4, M5 };

/// How the physical set of a model is decided.
///   analytic    closed-form predicate equivalent to positive semidefiniteness
///   psd_oracle  eigenvalue test on the built density matrix
///   paper_cube  M2 only: the cube [-1/4, 1/4]^3 used for the published M2
///               probability (larger than the true PSD set)
enum class PhysicalMode { analytic, psd_oracle, paper_cube };

enum class Label { unphysical, undetermined, bound_entangled, free_entangled };

/// Subsets of the physical set whose normalized volume can be estimated.
enum class Constraint { multiplicative, additive, non_ppt, mult_minus_additive, additive_minus_mult };

struct ParamPoint {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;

  [[nodiscard]] double operator[](std::size_t i) const noexcept {
    return i == 0 ? t1 : (i == 1 ? t2 : t3);
  }
  double& operator[](std::size_t i) noexcept { return i == 0 ? t1 : (i == 1 ? t2 : t3); }

  [[nodiscard]] bool finite() const noexcept {
    return std::isfinite(t1) && std::isfinite(t2) && std::isfinite(t3);
  }

  friend ParamPoint operator+(ParamPoint a, ParamPoint b) noexcept {
    return {a.t1 + b.t1, a.t2 + b.t2, a.t3 + b.t3};
  }
  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  [[nodiscard]] double value() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

/// Generator reference: n = 2 selects a Pauli matrix, n = 3/4 a Gell-Mann
/// generator of SU(n).
struct GeneratorRef {
  int n = 2;
  int index = 1;

  [[nodiscard]] const ComplexMatrix& matrix() const {
    return n == 2 ? pauli(index) : gell_mann(n, index);
  }
  [[nodiscard]] std::string symbol() const {
    return (n == 2 ? "sigma" : "lambda") + std::to_string(index);
  }
};

struct Term {
  GeneratorRef a;
  GeneratorRef b;
};

struct ModelSpec {
  ModelId id;
  std::string_view name;
  std::string_view description;
  int dim_a;
  int dim_b;
  Rational identity_weight;
  std::array<Term, 3> terms;
  Rational coefficient{1, 4};
  /// Threshold on (|t1|+|t2|+|t3|)^2; empty when no additive criterion applies.
  std::optional<double> additive_threshold;
  std::string_view additive_threshold_expr;
  /// Threshold on (t1 t2 t3)^2.
  double multiplicative_threshold;
  std::string_view multiplicative_threshold_expr;
  std::string_view physical_region;
  std::vector<PhysicalMode> modes;
  PhysicalMode default_mode;
  /// Every physical point (in every supported mode) lies in [-h, h]^3.
  double half_width;
  std::string_view notes;

  [[nodiscard]] int dim() const noexcept { return dim_a * dim_b; }
  [[nodiscard]] bool supports(PhysicalMode m) const {
    return std::find(modes.begin(), modes.end(), m) != modes.end();
  }
};

namespace detail {

inline std::vector<ModelSpec> make_catalog() {
  using enum PhysicalMode;
  const GeneratorRef s1{2, 1}, s2{2, 2}, s3{2, 3};
  auto l4 = [](int k) { return GeneratorRef{4, k}; };
  auto l3 = [](int k) { return GeneratorRef{3, k}; };
  constexpr double four_ninths = 4.0 / 9.0;

  std::vector<ModelSpec> c;
  c.push_back({ModelId::M1, "M1", "qubit-ququart (2x4)", 2, 4, {1, 8},
               {Term{s1, l4(1)}, Term{s2, l4(13)}, Term{s3, l4(3)}}, {1, 4},
               1.0, "1",
               4.0 / 19683.0, "4/27^3 = 4/19683",
               "|t2| <= 1/2 and |t1|+|t3| <= 1/2",
               {analytic, psd_oracle}, analytic, 0.5,
               "physical set is the prism of volume 1/2; every physical state is PPT"});
  c.push_back({ModelId::M2, "M2", "two-ququart (4x4)", 4, 4, {1, 16},
               {Term{l4(1), l4(1)}, Term{l4(13), l4(13)}, Term{l4(3), l4(3)}}, {1, 4},
               1.0, "1",
               16.0 / 531441.0, "(2/27)^4 = 16/531441",
               "paper_cube: max|ti| <= 1/4; analytic (true PSD set): |t2| <= 1/4 and |t1|+|t3| <= 1/4",
               {paper_cube, analytic, psd_oracle}, paper_cube, 0.25,
               "probabilities default to the cube [-1/4,1/4]^3; the eigenvalue test gives the "
               "smaller prism, available as the analytic mode; the state equals its partial "
               "transpose"});
  c.push_back({ModelId::M3, "M3", "two-qubit Bell-diagonal (2x2)", 2, 2, {1, 4},
               {Term{s1, s1}, Term{s2, s2}, Term{s3, s3}}, {1, 4},
               1.0, "1",
               1.0 / 729.0, "(1/27)^2 = 1/729",
               "tetrahedron: 1+t1-t2+t3, 1-t1+t2+t3, 1+t1+t2-t3, 1-t1-t2-t3 all >= 0",
               {analytic, psd_oracle}, analytic, 1.0,
               "second term read as sigma2 (x) sigma2 (Bell-diagonal family); spectrum "
               "(1 +- t1 +- t2 +- t3)/4 over even sign products"});
  c.push_back({ModelId::M4, "M4", "two-qutrit, first member (3x3)", 3, 3, {1, 9},
               {Term{l3(1), l3(1)}, Term{l3(2), l3(2)}, Term{l3(3), l3(3)}}, {1, 4},
               four_ninths * four_ninths, "(4/9)^2 (M3 threshold under t -> (4/9) t)",
               4096.0 / 387420489.0, "2^12/3^18 = 4096/387420489",
               "tetrahedron scaled by 4/9: 4/9+t1-t2+t3, 4/9-t1+t2+t3, 4/9+t1+t2-t3, 4/9-t1-t2-t3 all >= 0",
               {analytic, psd_oracle}, analytic, four_ninths,
               "the image of M3 under t -> (4/9) t; additive threshold (4/9)^2 is inferred "
               "from that scaling"});
  c.push_back({ModelId::M5, "M5", "two-qutrit, second member (3x3)", 3, 3, {1, 9},
               {Term{l3(1), l3(1)}, Term{l3(2), l3(4)}, Term{l3(3), l3(6)}}, {1, 4},
               std::nullopt, "none",
               4096.0 / 14348907.0, "2^12/3^15 = 4096/14348907",
               "eigenvalue test only", {psd_oracle}, psd_oracle, four_ninths,
               "no additive criterion; the state equals its partial transpose"});
  return c;
}

}  // namespace detail

inline const std::vector<ModelSpec>& all_models() {
  static const std::vector<ModelSpec> catalog = detail::make_catalog();
  return catalog;
}

inline const ModelSpec& model(ModelId id) { return all_models()[static_cast<std::size_t>(id)]; }

/// Looks up a model by its name ("M1".."M5", case-insensitive).
inline std::optional<ModelId> parse_model_id(std::string_view name) {
  for (const auto& m : all_models()) {
    if (m.name.size() == name.size() &&
        std::equal(name.begin(), name.end(), m.name.begin(),
                   [](char a, char b) { return std::toupper(a) == std::toupper(b); }))
      return m.id;
  }
  return std::nullopt;
}

inline std::string_view to_string(PhysicalMode m) {
  switch (m) {
    case PhysicalMode::analytic: return "analytic";
    case PhysicalMode::psd_oracle: return "psd-oracle";
    case PhysicalMode::paper_cube: return "paper-cube";
  }
  return "?";
}

inline std::optional<PhysicalMode> parse_physical_mode(std::string_view s) {
  if (s == "analytic") return PhysicalMode::analytic;
  if (s == "psd-oracle" || s == "psd_oracle") return PhysicalMode::psd_oracle;
  if (s == "paper-cube" || s == "paper_cube") return PhysicalMode::paper_cube;
  return std::nullopt;
}

inline std::string_view to_string(Label l) {
  switch (l) {
    case Label::unphysical: return "unphysical";
    case Label::undetermined: return "undetermined";
    case Label::bound_entangled: return "bound_entangled";
    case Label::free_entangled: return "free_entangled";
  }
  return "?";
}

inline std::string_view to_string(Constraint c) {
  switch (c) {
    case Constraint::multiplicative: return "multiplicative";
    case Constraint::additive: return "additive";
    case Constraint::non_ppt: return "non-ppt";
    case Constraint::mult_minus_additive: return "mult-minus-additive";
    case Constraint::additive_minus_mult: return "additive-minus-mult";
  }
  return "?";
}

inline std::optional<Constraint> parse_constraint(std::string_view s) {
  for (auto c : {Constraint::multiplicative, Constraint::additive, Constraint::non_ppt,
                 Constraint::mult_minus_additive, Constraint::additive_minus_mult}) {
    std::string alt(to_string(c));
    std::replace(alt.begin(), alt.end(), '-', '_');
    if (s == to_string(c) || s == alt) return c;
  }
  return std::nullopt;
}

inline ComplexMatrix build_state(const ModelSpec& spec, const ParamPoint& t) {
  ComplexMatrix rho = ComplexMatrix::identity(static_cast<std::size_t>(spec.dim()));
  rho *= spec.identity_weight.value();
  const double coeff = spec.coefficient.value();
  for (std::size_t i = 0; i < 3; ++i) {
    if (t[i] == 0.0) continue;
    rho += kron(spec.terms[i].a.matrix(), spec.terms[i].b.matrix()) * Complex(coeff * t[i]);
  }
  return rho;
}

/// Closed-form physicality. `slack` widens every inequality by that amount
/// (used by the optimizer's feasibility test); 0 gives the exact predicate.
inline bool is_physical_analytic(const ModelSpec& spec, const ParamPoint& t,
                                 PhysicalMode mode, double slack = 0.0) {
  const double a1 = std::abs(t.t1), a2 = std::abs(t.t2), a3 = std::abs(t.t3);
  auto tetrahedron = [&](double r) {
    return r + t.t1 - t.t2 + t.t3 >= -slack && r - t.t1 + t.t2 + t.t3 >= -slack &&
           r + t.t1 + t.t2 - t.t3 >= -slack && r - t.t1 - t.t2 - t.t3 >= -slack;
  };
  if (mode == PhysicalMode::psd_oracle)
    throw UnsupportedModeError("is_physical_analytic: psd-oracle is not an analytic mode");
  if (!spec.supports(mode))
    throw UnsupportedModeError(std::string("model ") + std::string(spec.name) +
                               " does not support physical mode " + std::string(to_string(mode)));
  switch (spec.id) {
    case ModelId::M1: return a2 <= 0.5 + slack && a1 + a3 <= 0.5 + slack;
    case ModelId::M2:
      if (mode == PhysicalMode::paper_cube) return std::max({a1, a2, a3}) <= 0.25 + slack;
      return a2 <= 0.25 + slack && a1 + a3 <= 0.25 + slack;
    case ModelId::M3: return tetrahedron(1.0);
    case ModelId::M4: return tetrahedron(4.0 / 9.0);
    case ModelId::M5: break;
  }
  throw UnsupportedModeError("is_physical_analytic: no closed form for this model");
}

/// Physicality under `mode`: the eigenvalue test for psd_oracle, the closed
/// form otherwise.
inline bool is_physical(const ModelSpec& spec, const ParamPoint& t, PhysicalMode mode,
                        double eps_psd = kDefaultEpsPsd) {
  if (mode == PhysicalMode::psd_oracle) {
    if (!spec.supports(mode)) throw UnsupportedModeError("psd-oracle not supported");
    return is_psd(build_state(spec, t), eps_psd);
  }
  return is_physical_analytic(spec, t, mode);
}

inline ComplexMatrix partial_transpose_state(const ModelSpec& spec, const ParamPoint& t) {
  return partial_transpose_b(build_state(spec, t), static_cast<std::size_t>(spec.dim_a),
                             static_cast<std::size_t>(spec.dim_b));
}

inline bool is_ppt_oracle(const ModelSpec& spec, const ParamPoint& t,
                          double eps_psd = kDefaultEpsPsd) {
  return is_psd(partial_transpose_state(spec, t), eps_psd);
}

/// PPT test. Outside psd_oracle mode the closed forms are used: partial
/// transposition maps the family onto itself with t2 -> -t2 (M1, M3, M4), or
/// leaves the state unchanged (M2), so PPT reduces to a physicality test.
/// M5 always uses the eigenvalue test.
inline bool is_ppt(const ModelSpec& spec, const ParamPoint& t, PhysicalMode mode,
                   double eps_psd = kDefaultEpsPsd) {
  if (mode == PhysicalMode::psd_oracle || spec.id == ModelId::M5)
    return is_ppt_oracle(spec, t, eps_psd);
  switch (spec.id) {
    case ModelId::M1:
    case ModelId::M3:
    case ModelId::M4: return is_physical_analytic(spec, {t.t1, -t.t2, t.t3}, mode);
    case ModelId::M2: return is_physical_analytic(spec, t, mode);
    case ModelId::M5: break;
  }
  return is_ppt_oracle(spec, t, eps_psd);
}

inline bool satisfies_additive(const ModelSpec& spec, const ParamPoint& t) {
  if (!spec.additive_threshold) return false;
  const double s = std::abs(t.t1) + std::abs(t.t2) + std::abs(t.t3);
  return s * s > *spec.additive_threshold;
}

inline bool satisfies_multiplicative(const ModelSpec& spec, const ParamPoint& t) {
  const double p = t.t1 * t.t2 * t.t3;
  return p * p > spec.multiplicative_threshold;
}

inline Label label_for(bool physical, bool ppt, bool additive, bool multiplicative) {
  if (!physical) return Label::unphysical;
  if (!ppt) return Label::free_entangled;
  if (additive || multiplicative) return Label::bound_entangled;
  return Label::undetermined;
}

/// Membership of a point in a constraint region, given its physicality and
/// the lazily evaluated PPT property.
template <class PptFn>
bool in_constraint(const ModelSpec& spec, const ParamPoint& t, Constraint c, PptFn&& ppt) {
  switch (c) {
    case Constraint::multiplicative: return satisfies_multiplicative(spec, t);
    case Constraint::additive: return satisfies_additive(spec, t);
    case Constraint::non_ppt: return !ppt();
    case Constraint::mult_minus_additive:
      return satisfies_multiplicative(spec, t) && !satisfies_additive(spec, t);
    case Constraint::additive_minus_mult:
      return satisfies_additive(spec, t) && !satisfies_multiplicative(spec, t);
  }
  return false;
}

/// Result of region_membership: physical and (physical && constraint).
struct Membership {
  bool physical = false;
  bool in_region = false;
};

inline Membership region_membership(const ModelSpec& spec, const ParamPoint& t, Constraint c,
                                    PhysicalMode mode, double eps_psd = kDefaultEpsPsd) {
  Membership m;
  m.physical = is_physical(spec, t, mode, eps_psd);
  if (m.physical)
    m.in_region = in_constraint(spec, t, c, [&] { return is_ppt(spec, t, mode, eps_psd); });
  return m;
}

/// Fast label using the mode's predicates (no eigenvalues unless the mode
/// requires them).
inline Label quick_label(const ModelSpec& spec, const ParamPoint& t, PhysicalMode mode,
                         double eps_psd = kDefaultEpsPsd) {
  const bool phys = is_physical(spec, t, mode, eps_psd);
  if (!phys) return Label::unphysical;
  return label_for(true, is_ppt(spec, t, mode, eps_psd), satisfies_additive(spec, t),
                   satisfies_multiplicative(spec, t));
}

struct Classification {
  bool physical = false;
  bool ppt = false;
  bool additive = false;
  bool multiplicative = false;
  Label label = Label::unphysical;
  double min_eigenvalue = 0.0;
  double min_pt_eigenvalue = 0.0;
  PhysicalMode mode = PhysicalMode::analytic;
};

/// Full classification. Physicality and PPT follow `mode`; both minimum
/// eigenvalues are always computed from the matrices.
inline Classification classify(const ModelSpec& spec, const ParamPoint& t, PhysicalMode mode,
                               double eps_psd = kDefaultEpsPsd) {
  Classification c;
  c.mode = mode;
  c.physical = is_physical(spec, t, mode, eps_psd);
  c.ppt = is_ppt(spec, t, mode, eps_psd);
  c.additive = satisfies_additive(spec, t);
  c.multiplicative = satisfies_multiplicative(spec, t);
  c.label = label_for(c.physical, c.ppt, c.additive, c.multiplicative);
  c.min_eigenvalue = min_eigenvalue(build_state(spec, t));
  c.min_pt_eigenvalue = min_eigenvalue(partial_transpose_state(spec, t));
  return c;
}

inline Classification classify(const ModelSpec& spec, const ParamPoint& t,
                               double eps_psd = kDefaultEpsPsd) {
  return classify(spec, t, spec.default_mode, eps_psd);
}

struct ExtremalState {
  std::string family;  // "A" (qubit) or "B" (ququart)
  std::string signs;   // e.g. "+-+"
  ComplexMatrix rho;
  double trace = 0.0;
  std::vector<double> eigenvalues;
  double min_eigenvalue = 0.0;
};

/// The qubit states 1/2 + (+-s1 +-s2 +-s3)/(2 sqrt 3) and the ququart states
///   1/4 + (1/2)(+-(sqrt2/3) l1 +- (sqrt2/3) l3 + l13/3 + l8/(3 sqrt3) + l15/(3 sqrt6))
/// attached to the two factors of the M1 multiplicative bound.
inline std::vector<ExtremalState> extremal_states() {
  std::vector<ExtremalState> out;
  auto finish = [&](std::string family, std::string signs, ComplexMatrix rho) {
    ExtremalState s{std::move(family), std::move(signs), std::move(rho), 0.0, {}, 0.0};
    s.trace = s.rho.trace().real();
    s.eigenvalues = hermitian_eigenvalues(s.rho).values;
    s.min_eigenvalue = s.eigenvalues.front();
    out.push_back(std::move(s));
  };
  auto sign_char = [](double s) { return s > 0 ? '+' : '-'; };

  const double q = 1.0 / (2.0 * std::sqrt(3.0));
  for (double a : {1.0, -1.0})
    for (double b : {1.0, -1.0})
      for (double c : {1.0, -1.0}) {
        ComplexMatrix rho = ComplexMatrix::identity(2) * Complex(0.5);
        rho += pauli(1) * Complex(q * a) + pauli(2) * Complex(q * b) + pauli(3) * Complex(q * c);
        finish("A", {sign_char(a), sign_char(b), sign_char(c)}, std::move(rho));
      }

  const double r2 = std::sqrt(2.0) / 3.0;
  for (double a : {1.0, -1.0})
    for (double b : {1.0, -1.0}) {
      ComplexMatrix x = gell_mann(4, 1) * Complex(a * r2) + gell_mann(4, 3) * Complex(b * r2);
      x += gell_mann(4, 13) * Complex(1.0 / 3.0);
      x += gell_mann(4, 8) * Complex(1.0 / (3.0 * std::sqrt(3.0)));
      x += gell_mann(4, 15) * Complex(1.0 / (3.0 * std::sqrt(6.0)));
      ComplexMatrix rho = ComplexMatrix::identity(4) * Complex(0.25) + x * Complex(0.5);
      finish("B", {sign_char(a), sign_char(b)}, std::move(rho));
    }
  return out;
}

}  // namespace archipelago
