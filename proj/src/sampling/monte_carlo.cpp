#include "sampling/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "common/error.hpp"
#include "common/parallel.hpp"
#include "fqlinalg/rowspace.hpp"

namespace starprod::sampling {

using exact::BigInt;
using exact::BigRat;
using fq::Elem;

const char* quantity_name(Quantity q) noexcept {
  switch (q) {
    case Quantity::kStarDim: return "star_dim";
    case Quantity::kKernelSize: return "kernel_size";
    case Quantity::kFullDim: return "full_dim";
    case Quantity::kIntersectionDim: return "intersection_dim";
  }
  return "unknown";
}

namespace {

// Every sample reduces to a small integer outcome (a dimension), so workers
// keep histograms; the mapping to sample values and all sums are exact.
std::vector<std::uint64_t> sample_histogram(Quantity quantity, const exact::Params& p, RandomModel model,
                                            std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  require(samples >= 1, ErrorCode::kInvalidArgument, "samples must be >= 1");
  require(p.q <= fq::kMaxFieldOrder, ErrorCode::kTooLarge, "field order exceeds 2^16");
  const fq::FieldPtr field = fq::Field::of_order(static_cast<std::uint32_t>(p.q));
  const std::size_t n = p.n, k1 = p.k1, k2 = p.k2;
  const std::size_t outcomes = std::max(n, k1 * k2) + 1;
  const unsigned workers = resolve_threads(threads);
  std::vector<std::vector<std::uint64_t>> per_worker(std::max(1u, workers), std::vector<std::uint64_t>(outcomes));

  parallel_blocks(samples, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    auto& hist = per_worker[w];
    std::vector<Elem> g1(k1 * n), g2(k2 * n), scratch;
    for (std::uint64_t i = begin; i < end; ++i) {
      RngStream rng(seed, i);
      sample_generator(*field, n, k1, model, rng, g1.data());
      sample_generator(*field, n, k2, model, rng, g2.data());
      std::size_t outcome;
      if (quantity == Quantity::kIntersectionDim) {
        outcome = k1 + k2 - fq::stacked_rank(*field, n, g1.data(), k1, g2.data(), k2, scratch);
      } else {
        outcome = fq::star_rank(*field, n, g1.data(), k1, g2.data(), k2, scratch);
      }
      ++hist[outcome];
    }
  });

  std::vector<std::uint64_t> total(outcomes, 0);
  for (const auto& h : per_worker) {
    for (std::size_t d = 0; d < outcomes; ++d) total[d] += h[d];
  }
  return total;
}

BigInt outcome_value(Quantity quantity, const exact::Params& p, std::size_t outcome) {
  switch (quantity) {
    case Quantity::kKernelSize: return exact::pow_int(p.q, p.k1 * p.k2 - outcome);
    case Quantity::kFullDim: return outcome == std::min(p.k1 * p.k2, p.n) ? 1 : 0;
    default: return BigInt(static_cast<unsigned long>(outcome));
  }
}

}  // namespace

Estimate mc_estimate(Quantity quantity, const exact::Params& p, RandomModel model, std::uint64_t samples,
                     std::uint64_t seed, unsigned threads) {
  if (quantity == Quantity::kIntersectionDim) model = RandomModel::kUniformSubspace;
  const auto hist = sample_histogram(quantity, p, model, samples, seed, threads);
  Estimate e;
  e.quantity = quantity;
  e.params = p;
  e.model = model;
  e.samples = samples;
  e.seed = seed;
  e.sum = 0;
  e.sum_squares = 0;
  for (std::size_t d = 0; d < hist.size(); ++d) {
    if (hist[d] == 0) continue;
    const BigInt v = outcome_value(quantity, p, d);
    const BigInt count = BigInt(static_cast<unsigned long>(hist[d]));
    e.sum += count * v;
    e.sum_squares += count * v * v;
  }
  const BigInt nsamp = BigInt(static_cast<unsigned long>(samples));
  e.mean = exact::make_rational(e.sum, nsamp);
  if (samples > 1) {
    // Unbiased variance (sum_sq - sum^2 / N) / (N - 1), exactly, then / N.
    const BigRat var = exact::make_rational(e.sum_squares * nsamp - e.sum * e.sum, nsamp * (nsamp - 1) * nsamp);
    e.std_error = std::sqrt(std::max(0.0, exact::to_double(var)));
  }
  return e;
}

Estimate mc_star_dim(const exact::Params& p, RandomModel model, std::uint64_t samples, std::uint64_t seed,
                     unsigned threads) {
  return mc_estimate(Quantity::kStarDim, p, model, samples, seed, threads);
}

Estimate mc_kernel_size(const exact::Params& p, RandomModel model, std::uint64_t samples, std::uint64_t seed,
                        unsigned threads) {
  return mc_estimate(Quantity::kKernelSize, p, model, samples, seed, threads);
}

Estimate mc_full_dim_frequency(const exact::Params& p, RandomModel model, std::uint64_t samples,
                               std::uint64_t seed, unsigned threads) {
  return mc_estimate(Quantity::kFullDim, p, model, samples, seed, threads);
}

Estimate mc_intersection_dim(const exact::Params& p, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  return mc_estimate(Quantity::kIntersectionDim, p, RandomModel::kUniformSubspace, samples, seed, threads);
}

}  // namespace starprod::sampling
