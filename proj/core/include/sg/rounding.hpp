#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sg/matrix.hpp"

namespace sg {

struct RoundingResult {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double best_value = 0.0;
  std::vector<int> best_assignment; // +-1 per vertex, first trial attaining the best
  double mean = 0.0;
  double std_error = 0.0; // sample standard deviation / sqrt(trials)
};

/// Random-hyperplane rounding of unit vectors (one per vertex).
///
/// Trial t draws its normal from std::mt19937_64 seeded with seed + t; each
/// coordinate is a standard normal from the Box-Muller transform
/// sqrt(-2 ln(1 - u1)) cos(2 pi u2), with u1, u2 the top 53 bits of
/// consecutive draws scaled to [0, 1). x_v = sign(<v, r>), with 0 mapped to
/// +1. The value is <L, xx^T>/4 when K is empty and <(L + K)/2, xx^T>
/// otherwise. Throws InputError when a vector's norm is off by more than
/// 1e-6 or trials == 0.
RoundingResult round_hyperplane(const std::vector<std::vector<double>>& vectors, const Matrix& L,
                                const Matrix& K, std::size_t trials, std::uint64_t seed);

} // namespace sg
