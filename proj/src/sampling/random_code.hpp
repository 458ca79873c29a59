#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "codes/linear_code.hpp"
#include "sampling/philox.hpp"

namespace starprod::sampling {

enum class RandomModel {
  kSystematic,       // [I_k | A] with A uniform
  kUniformSubspace,  // uniform over k-dimensional subspaces
};

const char* model_name(RandomModel model) noexcept;
// Accepts "systematic" and "uniform". Errors: InvalidArgument.
RandomModel parse_model(const std::string& name);

inline constexpr unsigned kRejectionBudget = 1000;

// Writes a k x n generator (row-major) for a code drawn from `model`.
// UniformSubspace redraws until the matrix has full rank.
// Errors: InvalidArgument unless 1 <= k <= n; RejectionBudgetExceeded.
void sample_generator(const fq::Field& field, std::size_t n, std::size_t k, RandomModel model, RngStream& rng,
                      fq::Elem* out);

codes::LinearCode sample_code(const fq::FieldPtr& field, std::size_t n, std::size_t k, RandomModel model,
                              RngStream& rng);

}  // namespace starprod::sampling
