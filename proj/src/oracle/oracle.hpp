#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "exactcomb/formulas.hpp"
#include "oracle/enumerate.hpp"
#include "sampling/random_code.hpp"

namespace starprod::oracle {

using exact::BigInt;
using exact::BigRat;
using sampling::RandomModel;

// All functions here enumerate exhaustively; `threads` only splits the work
// (0 = all cores) and never changes the result.

// Mean of q^(k1 k2 - dim(C1 * C2)) over all systematic generator pairs.
// Errors: BudgetExceeded when the pair count exceeds the budget.
BigRat exact_expected_kernel(const exact::Params& p, unsigned threads = 1, const EnumBudget& budget = {});

// Mean of dim(C1 * C2) over all pairs of the model's support (generator
// matrices for Systematic, subspaces for UniformSubspace).
BigRat exact_expected_star_dim(const exact::Params& p, RandomModel model, unsigned threads = 1,
                               const EnumBudget& budget = {});

// Mean of dim(C * D) over all l-dimensional subspaces D.
BigRat exact_expected_star_dim_fixed(const codes::LinearCode& c, std::size_t l, unsigned threads = 1,
                                     const EnumBudget& budget = {});

// Mean of dim(C1 ∩ C2) over all subspace pairs.
BigRat exact_expected_intersection(const exact::Params& p, unsigned threads = 1, const EnumBudget& budget = {});

struct ZeroDiagCounts {
  std::map<std::size_t, BigInt> by_rank;
  // (rank, zero set) where bit t of the zero set marks column k1 + t as zero;
  // every off-diagonal-block column not in the set is nonzero.
  std::map<std::pair<std::size_t, std::uint32_t>, BigInt> by_rank_zero_set;
};

// All k1 x k2 matrices with A_ii = 0, bucketed.
// Errors: InvalidArgument unless 1 <= k1 <= k2; BudgetExceeded when q^(k1 k2)
// exceeds the budget.
ZeroDiagCounts count_zero_diag_oracle(std::size_t k1, std::size_t k2, std::uint64_t q,
                                      const EnumBudget& budget = {});

// Number of l-dimensional subspaces of F_q^n whose support is {0, ..., s-1}.
BigInt count_subspaces_with_support_oracle(std::uint64_t q, std::size_t n, std::size_t l, std::size_t s,
                                           const EnumBudget& budget = {});

struct MonomialCheck {
  bool equal = false;
  BigRat original;
  BigRat transformed;
};

// Compares exact_expected_star_dim_fixed for C and C*M.
// Errors: NotMonomial, BudgetExceeded.
MonomialCheck monomial_invariance_check(const codes::LinearCode& c, const fq::Mat& m, std::size_t l,
                                        unsigned threads = 1, const EnumBudget& budget = {});

}  // namespace starprod::oracle
