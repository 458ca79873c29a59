#pragma once

#include <cstddef>
#include <optional>

#include "codes/linear_code.hpp"
#include "exactcomb/bigrat.hpp"

namespace starprod::apps {

struct PirReport {
  std::size_t n = 0;
  std::size_t star_dim = 0;
  exact::BigRat rate_upper;                 // 1 - dim(C * D) / n
  std::optional<exact::BigRat> rate_lower;  // (d(C * D) - 1) / n, when enumerable
};

struct SdmmReport {
  std::size_t servers = 0;
  std::size_t d_star = 0;
  std::size_t recovery = 0;    // N - d + 1
  std::size_t stragglers = 0;  // d - 1
};

struct CsstReport {
  bool feasible = false;       // the envelope C1 ∩ (C1 * C1)^perp is nonzero
  std::size_t envelope_dim = 0;
  bool c2_supplied = false;
  bool c2_in_c1 = false;
  bool c2_in_star_dual = false;
  bool c2_admissible = false;  // both of the above
  std::optional<std::size_t> distance_floor;  // d(C2^perp)
};

// Errors: LengthMismatch, FieldMismatch. A star code too large to enumerate
// only drops rate_lower.
PirReport pir_rate_bounds(const codes::LinearCode& c, const codes::LinearCode& d,
                          std::uint64_t budget = codes::kDefaultEnumerationBudget);
// Errors: LengthMismatch, FieldMismatch, BudgetExceeded.
SdmmReport sdmm_thresholds(const codes::LinearCode& ca, const codes::LinearCode& cb,
                           std::uint64_t budget = codes::kDefaultEnumerationBudget);
// Errors: NotBinary, LengthMismatch, BudgetExceeded.
CsstReport csst_envelope(const codes::LinearCode& c1, const std::optional<codes::LinearCode>& c2,
                         std::uint64_t budget = codes::kDefaultEnumerationBudget);

}  // namespace starprod::apps
