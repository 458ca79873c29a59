#pragma once

#include <cstdint>

#include "exactcomb/formulas.hpp"
#include "sampling/random_code.hpp"

namespace starprod::sampling {

enum class Quantity {
  kStarDim,          // dim(C1 * C2)
  kKernelSize,       // q^(k1 k2 - dim(C1 * C2))
  kFullDim,          // 1 when dim(C1 * C2) = min(k1 k2, n), else 0
  kIntersectionDim,  // dim(C1 ∩ C2)
};

const char* quantity_name(Quantity q) noexcept;

struct Estimate {
  Quantity quantity = Quantity::kStarDim;
  exact::Params params;
  RandomModel model = RandomModel::kSystematic;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  exact::BigInt sum;
  exact::BigInt sum_squares;
  exact::BigRat mean;
  double std_error = 0;  // sample standard deviation / sqrt(samples)
};

// Sample i uses RngStream(seed, i) and draws C1 then C2, so the result does not
// depend on `threads` (0 = all cores). Errors: InvalidArgument when samples = 0.
Estimate mc_star_dim(const exact::Params& p, RandomModel model, std::uint64_t samples, std::uint64_t seed,
                     unsigned threads = 1);
Estimate mc_kernel_size(const exact::Params& p, RandomModel model, std::uint64_t samples, std::uint64_t seed,
                        unsigned threads = 1);
Estimate mc_full_dim_frequency(const exact::Params& p, RandomModel model, std::uint64_t samples,
                               std::uint64_t seed, unsigned threads = 1);
// Always uses the UniformSubspace model.
Estimate mc_intersection_dim(const exact::Params& p, std::uint64_t samples, std::uint64_t seed,
                             unsigned threads = 1);

Estimate mc_estimate(Quantity quantity, const exact::Params& p, RandomModel model, std::uint64_t samples,
                     std::uint64_t seed, unsigned threads = 1);

}  // namespace starprod::sampling
