#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fqlinalg/matrix.hpp"

namespace starprod::codes {

using fq::Elem;
using fq::FieldPtr;
using fq::Mat;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1ull << 24;

// A nonzero k-dimensional subspace of F_q^n, stored by its RREF basis. Two
// codes are equal iff their bases are equal.
class LinearCode {
 public:
  // Errors: ZeroCode when rank(m) = 0.
  static LinearCode from_matrix(const Mat& m);

  const FieldPtr& field() const noexcept { return basis_.field(); }
  std::size_t length() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Mat& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  // [I_k | A] generator, present when the first k columns are pivots.
  const std::optional<Mat>& systematic() const noexcept { return systematic_; }

  bool operator==(const LinearCode& other) const noexcept { return basis_ == other.basis_; }

 private:
  LinearCode(Mat basis, std::vector<std::size_t> pivots);

  Mat basis_;
  std::vector<std::size_t> pivots_;
  std::optional<Mat> systematic_;
};

LinearCode full_space(const FieldPtr& field, std::size_t n);
LinearCode repetition_code(const FieldPtr& field, std::size_t n);
// Evaluations of polynomials of degree < k at the given distinct points.
LinearCode evaluation_code(const FieldPtr& field, std::span<const Elem> points, std::size_t k);

// Span of all componentwise products of basis rows.
// Errors: LengthMismatch, FieldMismatch, ZeroCode when the supports are
// disjoint.
LinearCode star_product(const LinearCode& c1, const LinearCode& c2);
// Errors: ZeroDual when k = n.
LinearCode dual(const LinearCode& c);

// Minimum Hamming weight over nonzero codewords by enumeration.
// Errors: BudgetExceeded when q^k > budget.
std::size_t min_distance(const LinearCode& c, std::uint64_t budget = kDefaultEnumerationBudget);
// d(C^perp) computed from C alone: the least number of linearly dependent
// columns of a generator matrix (k + 1 when every k columns are independent).
// Errors: ZeroDual when k = n; BudgetExceeded when the column subsets to test
// exceed the budget.
std::size_t dual_distance(const LinearCode& c, std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<std::size_t> support(const LinearCode& c);
bool is_degenerate(const LinearCode& c);

// Errors: BadRange for an empty or out-of-range index set, ZeroCode when the
// projection vanishes.
LinearCode project(const LinearCode& c, std::span<const std::size_t> coords);

// d(C) = n - k + 1, decided through the dual distance (C is MDS iff C^perp is).
bool is_mds(const LinearCode& c, std::uint64_t budget = kDefaultEnumerationBudget);

std::size_t intersection_dim(const LinearCode& c1, const LinearCode& c2);
// std::nullopt when the intersection is {0}.
std::optional<LinearCode> intersection(const LinearCode& c1, const LinearCode& c2);
// D subset of C.
bool contains(const LinearCode& c, const LinearCode& d);

// min{n, k1 + d(C2^perp) - 2, k2 + d(C1^perp) - 2}, valid for non-degenerate
// codes. Errors: DegenerateInput, ZeroDual.
std::size_t star_lower_bound_dual_distance(const LinearCode& c1, const LinearCode& c2);
// min{n, k1 + k2 - 1} when at least one code is MDS.
// Errors: DegenerateInput, NeitherMDS.
std::size_t star_lower_bound_mds(const LinearCode& c1, const LinearCode& c2);

// Checks that m is an n x n monomial matrix. Errors: NotMonomial.
void require_monomial(const Mat& m);
// Code generated by basis * m. Errors: NotMonomial, LengthMismatch.
LinearCode apply_monomial(const LinearCode& c, const Mat& m);

void require_compatible(const LinearCode& c1, const LinearCode& c2);

}  // namespace starprod::codes
