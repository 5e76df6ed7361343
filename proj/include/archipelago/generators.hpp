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

// Pauli matrices and generalized Gell-Mann generators of SU(3) and SU(4).
//
// Indexing (1-based), with E_ij the matrix unit:
//   SU(3)  1: E12+E21   2: -i(E12-E21)   3: diag(1,-1,0)
//          4: E13+E31   5: -i(E13-E31)   6: E23+E32   7: -i(E23-E32)
//          8: diag(1,1,-2)/sqrt(3)
//   SU(4)  1..8 as above in the upper-left 3x3 block
//          9: E14+E41  10: -i(E14-E41)  11: E24+E42  12: -i(E24-E42)
//         13: E34+E43  14: -i(E34-E43)  15: diag(1,1,1,-3)/sqrt(6)

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "archipelago/errors.hpp"
#include "archipelago/matrix.hpp"

namespace archipelago {

namespace detail {

inline ComplexMatrix symmetric_unit(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix m(n);
  m(i, j) = 1.0;
  m(j, i) = 1.0;
  return m;
}

inline ComplexMatrix antisymmetric_unit(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix m(n);
  m(i, j) = Complex(0.0, -1.0);
  m(j, i) = Complex(0.0, 1.0);
  return m;
}

// Diagonal generator diag(1,..,1,-l,0,..)/sqrt(l(l+1)/2) occupying the first
// l+1 entries, l >= 1.
inline ComplexMatrix cartan(std::size_t n, std::size_t l) {
  ComplexMatrix m(n);
  const double norm = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
  for (std::size_t k = 0; k < l; ++k) m(k, k) = norm;
  m(l, l) = -static_cast<double>(l) * norm;
  return m;
}

inline ComplexMatrix build_gell_mann(std::size_t n, std::size_t k) {
  // Generators are grouped per new row/column index c = 1..n-1: for each
  // r < c the symmetric then antisymmetric pair (r, c), then the Cartan
  // element of level c. This reproduces the listing in the header comment.
  std::size_t idx = 0;
  for (std::size_t c = 1; c < n; ++c) {
    for (std::size_t r = 0; r < c; ++r) {
      if (++idx == k) return symmetric_unit(n, r, c);
      if (++idx == k) return antisymmetric_unit(n, r, c);
    }
    if (++idx == k) return cartan(n, c);
  }
  throw IndexError("gell_mann: index out of range");
}

}  // namespace detail

inline const ComplexMatrix& pauli(int i) {
  static const std::array<ComplexMatrix, 3> basis = {
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  if (i < 1 || i > 3) throw IndexError("pauli: index " + std::to_string(i) + " not in 1..3");
  return basis[static_cast<std::size_t>(i - 1)];
}

/// The n^2-1 generators of SU(n), n in {2,3,4}; element k-1 is generator k.
/// For n = 2 this is the Pauli basis.
inline const std::vector<ComplexMatrix>& generator_basis(int n) {
  auto make = [](std::size_t dim) {
    std::vector<ComplexMatrix> b;
    for (std::size_t k = 1; k < dim * dim; ++k) b.push_back(detail::build_gell_mann(dim, k));
    return b;
  };
  static const std::vector<ComplexMatrix> su2 = make(2);
  static const std::vector<ComplexMatrix> su3 = make(3);
  static const std::vector<ComplexMatrix> su4 = make(4);
  switch (n) {
    case 2: return su2;
    case 3: return su3;
    case 4: return su4;
    default: throw IndexError("generator_basis: n = " + std::to_string(n) + " not in {2,3,4}");
  }
}

inline const ComplexMatrix& gell_mann(int n, int k) {
  if (n != 3 && n != 4) throw IndexError("gell_mann: n = " + std::to_string(n) + " not in {3,4}");
  const auto& basis = generator_basis(n);
  if (k < 1 || static_cast<std::size_t>(k) > basis.size())
    throw IndexError("gell_mann: index " + std::to_string(k) + " not in 1.." +
                     std::to_string(basis.size()));
  return basis[static_cast<std::size_t>(k - 1)];
}

}  // namespace archipelago
