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

// Reproducible random and low-discrepancy streams. Every chunk of work owns
// an engine derived only from (seed, chunk index), so results do not depend
// on how chunks are distributed over threads.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

namespace archipelago {

/// std::mt19937_64 keyed by (seed, stream); both words enter std::seed_seq,
/// whose mixing is fixed by the standard.
inline std::mt19937_64 keyed_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x9e3779b9u};
  return std::mt19937_64(seq);
}

/// Uniform double in [0, 1) from the top 53 bits of one 64-bit draw.
inline double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Radical inverse of `index` in `base`.
inline double radical_inverse(std::uint64_t index, std::uint32_t base) {
  const double inv_base = 1.0 / base;
  double inv = inv_base;
  double result = 0.0;
  while (index > 0) {
    result += static_cast<double>(index % base) * inv;
    index /= base;
    inv *= inv_base;
  }
  return result;
}

/// Three-dimensional Halton sequence (bases 2, 3, 5) with a seed-derived
/// Cranley-Patterson rotation. Point i is a pure function of (seed, i).
class Halton3 {
 public:
  explicit Halton3(std::uint64_t seed) {
    auto engine = keyed_engine(seed, ~std::uint64_t{0});
    for (auto& s : shift_) s = uniform01(engine);
  }

  [[nodiscard]] std::array<double, 3> point(std::uint64_t index) const {
    static constexpr std::array<std::uint32_t, 3> bases = {2, 3, 5};
    std::array<double, 3> u{};
    for (std::size_t d = 0; d < 3; ++d) {
      double v = radical_inverse(index + 1, bases[d]) + shift_[d];
      u[d] = v >= 1.0 ? v - 1.0 : v;
    }
    return u;
  }

 private:
  std::array<double, 3> shift_{};
};

}  // namespace archipelago
