#include "sampling/random_code.hpp"

#include <algorithm>
#include <string>

#include "common/error.hpp"
#include "fqlinalg/rowspace.hpp"

namespace starprod::sampling {

using fq::Elem;

const char* model_name(RandomModel model) noexcept {
  return model == RandomModel::kSystematic ? "systematic" : "uniform";
}

RandomModel parse_model(const std::string& name) {
  if (name == "systematic") return RandomModel::kSystematic;
  if (name == "uniform") return RandomModel::kUniformSubspace;
  fail(ErrorCode::kInvalidArgument, "unknown random model '" + name + "' (expected systematic or uniform)");
}

void sample_generator(const fq::Field& field, std::size_t n, std::size_t k, RandomModel model, RngStream& rng,
                      Elem* out) {
  require(k >= 1 && k <= n, ErrorCode::kInvalidArgument, "need 1 <= k <= n");
  const std::uint32_t q = field.q();
  if (model == RandomModel::kSystematic) {
    for (std::size_t r = 0; r < k; ++r) {
      Elem* row = out + r * n;
      std::fill(row, row + k, Elem{0});
      row[r] = 1;
      for (std::size_t c = k; c < n; ++c) row[c] = static_cast<Elem>(rng.uniform(q));
    }
    return;
  }
  std::vector<Elem> scratch;
  for (unsigned attempt = 0; attempt < kRejectionBudget; ++attempt) {
    for (std::size_t i = 0; i < k * n; ++i) out[i] = static_cast<Elem>(rng.uniform(q));
    if (fq::buffer_rank(field, k, n, out, scratch) == k) return;
  }
  fail(ErrorCode::kRejectionBudgetExceeded, "no full-rank generator after " + std::to_string(kRejectionBudget) +
                                                " draws");
}

codes::LinearCode sample_code(const fq::FieldPtr& field, std::size_t n, std::size_t k, RandomModel model,
                              RngStream& rng) {
  std::vector<Elem> g(k * n);
  sample_generator(*field, n, k, model, rng, g.data());
  return codes::LinearCode::from_matrix(fq::Mat(field, k, n, std::move(g)));
}

}  // namespace starprod::sampling
