#pragma once

#include <cstddef>
#include <cstdint>

#include "exactcomb/bigrat.hpp"

namespace starprod::exact {

// (q, n, k1, k2) with q a prime power and 1 <= k1 <= k2 <= n. Construction
// swaps the dimensions when k1 > k2.
struct Params {
  std::uint64_t q = 2;
  std::size_t n = 1;
  std::size_t k1 = 1;
  std::size_t k2 = 1;

  // Errors: NotPrime when q is not a prime power, InvalidArgument on dims.
  static Params make(std::uint64_t q, std::size_t n, std::size_t k1, std::size_t k2);
};

void require_prime_power(std::uint64_t q);

// Both return 0 for negative arguments or k > n.
BigInt binom(long n, long k);
BigInt qbinom(long n, long k, std::uint64_t q);

// Number of rank-r k1 x k2 matrices with zero diagonal. Errors: BadRange
// unless 0 <= r <= k1 <= k2.
BigInt count_zero_diag_rank(long k1, long k2, long r, std::uint64_t q);
// Rank-r zero-diagonal matrices whose off-diagonal block columns vanish
// exactly on a fixed l-subset. Errors: BadRange unless also 0 <= l <= k2 - k1.
BigInt count_zero_diag_rank_zerocols(long k1, long k2, long r, long l, std::uint64_t q);
// Zeros (v1, v2) of a rank-r bilinear form on F_q^k1 x F_q^k2.
// Errors: BadRange unless 0 <= r <= min(k1, k2).
BigInt zeros_of_form(long r, long k1, long k2, std::uint64_t q);

// Upper limit of the innermost j-sum in the kernel expectation. All three give
// the same value because the extra terms vanish.
enum class JLimit { kR, kMinRK1MinusI, kK1 };

// E|ker psi| for systematic random generators.
BigRat expected_kernel_size(const Params& p, JLimit limit = JLimit::kMinRK1MinusI);
// The same expectation assembled from rank classes, zero-column classes and
// zero counts of bilinear forms, before the sums are collapsed.
BigRat expected_kernel_size_by_classes(const Params& p);

struct StarDimBound {
  double value = 0;      // k1*k2 - log_q E
  std::size_t k1k2 = 0;
  BigRat expected_kernel;
};
StarDimBound star_dim_lower_bound(const Params& p);

// E dim(C1 * C2) for a fixed MDS [n, k_mds] code C1 and C2 uniform over
// k_random-dimensional subspaces. The two roles are not interchangeable, so this
// takes raw dimensions instead of Params.
// Errors: InvalidArgument on dims, UncoveredCase when 2 <= k_random <= n - k_mds.
BigRat expected_star_dim_mds(std::uint64_t q, std::size_t n, std::size_t k_mds, std::size_t k_random);

// l-dimensional subspaces of F_q^n with support exactly a fixed s-set.
// Errors: BadRange.
BigInt count_subspaces_with_support(std::uint64_t q, long n, long l, long s);

// E dim(C1 ∩ C2) for independent uniform subspaces.
BigRat expected_intersection_dim(const Params& p);

// 1 + q^(k1 k2 - n).
BigRat kernel_limit_value(const Params& p);

// 1 - ((2q-1)/q^2)^exponent. Errors: BadRange for a negative exponent.
BigRat full_dim_probability_bound_exact(std::uint64_t q, long exponent);
double full_dim_probability_bound(std::uint64_t q, long exponent);

// exp((q-1) k2 (k1-1) / q^k1) + 1.
double kernel_conjecture_value(std::uint64_t q, std::size_t k1, std::size_t k2);

}  // namespace starprod::exact
