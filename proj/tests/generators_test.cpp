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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "archipelago/generators.hpp"
#include "archipelago/models.hpp"

namespace archipelago {
namespace {

TEST(Pauli, SquaresToIdentity) {
  EXPECT_EQ(pauli(1) * pauli(1), ComplexMatrix::identity(2));
  EXPECT_EQ(pauli(2) * pauli(2), ComplexMatrix::identity(2));
}

TEST(Pauli, SigmaYSpectrum) {
  const auto r = hermitian_eigenvalues(pauli(2));
  EXPECT_NEAR(r.values[0], -1.0, 1e-15);
  EXPECT_NEAR(r.values[1], 1.0, 1e-15);
}

TEST(Pauli, Orthogonal) { EXPECT_EQ((pauli(1) * pauli(3)).trace(), Complex(0.0)); }

TEST(Pauli, IndexRange) {
  EXPECT_THROW(pauli(0), IndexError);
  EXPECT_THROW(pauli(4), IndexError);
}

TEST(GellMann, Su3FirstGenerator) {
  ComplexMatrix expected(3);
  expected(0, 1) = expected(1, 0) = 1.0;
  EXPECT_EQ(gell_mann(3, 1), expected);
}

TEST(GellMann, Su3ListedConvention) {
  const Complex i(0.0, 1.0);
  EXPECT_EQ(gell_mann(3, 2)(0, 1), -i);
  EXPECT_EQ(gell_mann(3, 4)(0, 2), Complex(1.0));
  EXPECT_EQ(gell_mann(3, 5)(2, 0), i);
  EXPECT_EQ(gell_mann(3, 6)(1, 2), Complex(1.0));
  EXPECT_EQ(gell_mann(3, 7)(1, 2), -i);
  EXPECT_NEAR(gell_mann(3, 8)(2, 2).real(), -2.0 / std::sqrt(3.0), 1e-15);
}

TEST(GellMann, Su4LastGenerator) {
  const auto& l15 = gell_mann(4, 15);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(l15(k, k).real(), 1.0 / std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(l15(3, 3).real(), -3.0 / std::sqrt(6.0), 1e-15);
  EXPECT_NEAR((l15 * l15).trace().real(), 2.0, 1e-14);
}

TEST(GellMann, Su4Lambda13CouplesLevelsThreeAndFour) {
  ComplexMatrix expected(4);
  expected(2, 3) = expected(3, 2) = 1.0;
  EXPECT_EQ(gell_mann(4, 13), expected);
}

TEST(GellMann, Su4EmbedsSu3) {
  for (int k = 1; k <= 8; ++k) {
    const auto& big = gell_mann(4, k);
    const auto& small = gell_mann(3, k);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        EXPECT_EQ(big(i, j), (i < 3 && j < 3) ? small(i, j) : Complex(0.0)) << k;
  }
}

TEST(GellMann, IndexRange) {
  EXPECT_THROW(gell_mann(3, 9), IndexError);
  EXPECT_THROW(gell_mann(4, 0), IndexError);
  EXPECT_THROW(gell_mann(5, 1), IndexError);
}

class BasisTest : public ::testing::TestWithParam<int> {};

TEST_P(BasisTest, HermitianTracelessOrthonormal) {
  const auto& basis = generator_basis(GetParam());
  const int n = GetParam();
  ASSERT_EQ(basis.size(), static_cast<std::size_t>(n * n - 1));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    EXPECT_LE(basis[a].hermiticity_defect(), 1e-14);
    EXPECT_LE(std::abs(basis[a].trace()), 1e-14);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Complex g = (basis[a] * basis[b]).trace();
      EXPECT_NEAR(g.real(), a == b ? 2.0 : 0.0, 1e-13) << a << "," << b;
      EXPECT_NEAR(g.imag(), 0.0, 1e-13);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllGroups, BasisTest, ::testing::Values(2, 3, 4));

// Under lambda13 = E34 + E43 the eigenvalue-based physical set of the
// qubit-ququart family is exactly {|t2| <= 1/2, |t1|+|t3| <= 1/2}.
TEST(GellMann, ConventionReproducesQubitQuquartRegion) {
  const auto& spec = model(ModelId::M1);
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  int compared = 0;
  for (int i = 0; i < 100'000; ++i) {
    const ParamPoint t{u(rng), u(rng), u(rng)};
    const double margin = std::min(std::abs(std::abs(t.t2) - 0.5),
                                   std::abs(std::abs(t.t1) + std::abs(t.t3) - 0.5));
    if (margin < 1e-9) continue;
    ++compared;
    ASSERT_EQ(is_physical_analytic(spec, t, PhysicalMode::analytic),
              is_psd(build_state(spec, t)))
        << t.t1 << " " << t.t2 << " " << t.t3;
  }
  EXPECT_GT(compared, 99'000);
}

}  // namespace
}  // namespace archipelago
