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

// Test-only helpers: random matrices and unitaries built independently of
// the library's solver.

#include <cmath>
#include <random>

#include "archipelago/matrix.hpp"

namespace archipelago::testing {

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = u(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex(u(rng), u(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// Product of random complex Givens rotations exp(theta (e^{i phi} E_pq -
/// e^{-i phi} E_qp)); each factor is the exponential of an anti-Hermitian
/// generator, available in closed form.
inline ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793);
  ComplexMatrix u = ComplexMatrix::identity(n);
  for (int rep = 0; rep < 3; ++rep)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double theta = angle(rng);
        const Complex e = std::polar(1.0, angle(rng));
        ComplexMatrix g = ComplexMatrix::identity(n);
        g(p, p) = std::cos(theta);
        g(q, q) = std::cos(theta);
        g(p, q) = e * std::sin(theta);
        g(q, p) = -std::conj(e) * std::sin(theta);
        u = u * g;
      }
  return u;
}

}  // namespace archipelago::testing
