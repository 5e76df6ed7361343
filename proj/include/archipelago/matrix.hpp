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

// Dense complex matrices sized for small bipartite density matrices
// (dimension at most 16), with a cyclic Jacobi Hermitian eigensolver.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "archipelago/errors.hpp"

namespace archipelago {

using Complex = std::complex<double>;

/// Largest matrix dimension any operation will produce.
inline constexpr std::size_t kMaxDim = 16;

/// Default tolerance for positive-semidefiniteness tests.
inline constexpr double kDefaultEpsPsd = 1e-12;

/// Square, row-major complex matrix with value semantics.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw ContractError("ComplexMatrix: dimension must be positive");
  }

  /// Builds a matrix from nested rows; every row must have the same length
  /// as the number of rows.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : ComplexMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) throw ContractError("ComplexMatrix: ragged initializer");
      std::copy(row.begin(), row.end(), entries_.begin() + static_cast<std::ptrdiff_t>(i * dim_));
      ++i;
    }
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * dim_ + j];
  }

  [[nodiscard]] std::span<const Complex> entries() const noexcept { return entries_; }
  [[nodiscard]] std::span<Complex> entries() noexcept { return entries_; }

  [[nodiscard]] Complex trace() const noexcept {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  [[nodiscard]] ComplexMatrix adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  [[nodiscard]] ComplexMatrix transpose() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  /// max |M[i][j]|
  [[nodiscard]] double max_abs() const noexcept {
    double m = 0.0;
    for (const auto& z : entries_) m = std::max(m, std::abs(z));
    return m;
  }

  /// max |M[i][j] - conj(M[j][i])|
  [[nodiscard]] double hermiticity_defect() const noexcept {
    double d = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
  }

  [[nodiscard]] bool is_hermitian(double tol = 1e-12) const noexcept {
    return hermiticity_defect() <= tol;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) noexcept {
    for (auto& z : entries_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_same_dim(b);
    const std::size_t n = a.dim_;
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void require_same_dim(const ComplexMatrix& o) const {
    if (o.dim_ != dim_) throw ContractError("ComplexMatrix: dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

/// max |a - b| entrywise.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ContractError("max_abs_diff: dimension mismatch");
  double d = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    d = std::max(d, std::abs(a.entries()[k] - b.entries()[k]));
  return d;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  if (na * nb > kMaxDim)
    throw DimensionOverflowError("kron: result dimension " + std::to_string(na * nb) +
                                 " exceeds " + std::to_string(kMaxDim));
  ComplexMatrix r(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return r;
}

/// Transpose on the second tensor factor of a (dim_a * dim_b)-dimensional
/// matrix. Pure index permutation, so it is an exact involution.
inline ComplexMatrix partial_transpose_b(const ComplexMatrix& m, std::size_t dim_a,
                                         std::size_t dim_b) {
  if (dim_a == 0 || dim_b == 0 || m.dim() != dim_a * dim_b)
    throw ContractError("partial_transpose_b: matrix dimension " + std::to_string(m.dim()) +
                        " != " + std::to_string(dim_a) + " x " + std::to_string(dim_b));
  ComplexMatrix r(m.dim());
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_a; ++j)
      for (std::size_t a = 0; a < dim_b; ++a)
        for (std::size_t b = 0; b < dim_b; ++b)
          r(i * dim_b + b, j * dim_b + a) = m(i * dim_b + a, j * dim_b + b);
  return r;
}

struct EigenResult {
  std::vector<double> values;  // ascending
  int iterations = 0;          // completed Jacobi sweeps
  double residual = 0.0;       // max off-diagonal magnitude at termination
};

inline constexpr int kMaxJacobiSweeps = 64;

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Each rotation first removes the phase of the pivot a_pq, then applies the
/// real symmetric Jacobi rotation that annihilates it. Sweeps stop once every
/// off-diagonal entry is below 1e-15 of the largest initial entry. Throws
/// ContractError if the input is not Hermitian within 1e-12 and NumericError
/// after kMaxJacobiSweeps sweeps without convergence.
inline EigenResult hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.dim() == 0) throw ContractError("hermitian_eigenvalues: empty matrix");
  if (!m.is_hermitian(1e-12))
    throw ContractError("hermitian_eigenvalues: input not Hermitian (defect " +
                        std::to_string(m.hermiticity_defect()) + ")");
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  const double scale = m.max_abs();
  const double stop = 1e-15 * scale;
  const double negligible = 1e-18 * scale;

  auto off_max = [&] {
    double o = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) o = std::max(o, std::abs(a(p, q)));
    return o;
  };

  EigenResult out;
  double off = off_max();
  while (off > stop) {
    if (out.iterations >= kMaxJacobiSweeps)
      throw NumericError("hermitian_eigenvalues: no convergence after " +
                         std::to_string(kMaxJacobiSweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= negligible) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const Complex phase = apq / r;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        const Complex s_conj_phase = s * std::conj(phase);
        const Complex s_phase = s * phase;

        // A <- A G with G_pp = c, G_pq = s, G_qp = -s e^{-i phi}, G_qq = c e^{-i phi}.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s_conj_phase * akq;
          a(k, q) = s * akp + c * std::conj(phase) * akq;
        }
        // A <- G^dagger A
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s_phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        a(p, q) = a(q, p) = 0.0;
      }
    }
    ++out.iterations;
    off = off_max();
  }

  out.residual = off;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i).real();
  std::sort(out.values.begin(), out.values.end());
  return out;
}

inline double min_eigenvalue(const ComplexMatrix& m) {
  return hermitian_eigenvalues(m).values.front();
}

/// True iff the smallest eigenvalue is at least -eps_psd.
inline bool is_psd(const ComplexMatrix& m, double eps_psd = kDefaultEpsPsd) {
  return min_eigenvalue(m) >= -eps_psd;
}

}  // namespace archipelago
