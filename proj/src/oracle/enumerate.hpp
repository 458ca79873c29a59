#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codes/linear_code.hpp"
#include "exactcomb/bigrat.hpp"

namespace starprod::oracle {

using fq::Elem;

inline constexpr std::uint64_t kDefaultBudget = 1ull << 26;

// Enumerations refuse to start, rather than truncate, past max_items.
struct EnumBudget {
  std::uint64_t max_items = kDefaultBudget;

  // Errors: BudgetExceeded when items > max_items.
  std::uint64_t check(const exact::BigInt& items, const std::string& what) const;
};

// Generators [I_k | A] with A over all of F_q^{k x (n-k)}. Index i lists the
// entries of A row by row as base-q digits, most significant first.
class SystematicEnumerator {
 public:
  SystematicEnumerator(fq::FieldPtr field, std::size_t n, std::size_t k, const EnumBudget& budget = {});

  std::uint64_t count() const noexcept { return count_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  // Writes the k x n generator with the given index.
  void decode(std::uint64_t index, Elem* out) const noexcept;

 private:
  fq::FieldPtr field_;
  std::size_t n_, k_;
  std::uint64_t count_;
};

// Every k-dimensional subspace exactly once, as its RREF basis. Order: pivot
// sets lexicographically, then the free entries (row by row, most significant
// first) as base-q digits.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(fq::FieldPtr field, std::size_t n, std::size_t k, const EnumBudget& budget = {});

  std::uint64_t count() const noexcept { return count_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }

  // Calls fn(basis) for items [begin, end), basis a k x n row-major buffer
  // valid only during the call.
  template <class Fn>
  void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const;

 private:
  struct PivotSet {
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> free_cells;  // row * n + col
    std::uint64_t first = 0;              // global index of the first item
    std::uint64_t size = 0;
  };

  void load(const PivotSet& ps, std::uint64_t local, Elem* basis, std::vector<std::uint32_t>& digits) const;

  fq::FieldPtr field_;
  std::size_t n_, k_;
  std::uint64_t count_ = 0;
  std::vector<PivotSet> sets_;
};

std::vector<codes::LinearCode> enumerate_systematic(const fq::FieldPtr& field, std::size_t n, std::size_t k,
                                                    const EnumBudget& budget = {});
std::vector<codes::LinearCode> enumerate_subspaces(const fq::FieldPtr& field, std::size_t n, std::size_t k,
                                                   const EnumBudget& budget = {});

template <class Fn>
void SubspaceEnumerator::for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
  if (end > count_) end = count_;
  if (begin >= end) return;
  std::vector<Elem> basis(k_ * n_);
  std::vector<std::uint32_t> digits;
  const std::uint32_t q = field_->q();
  // First pivot set overlapping [begin, end).
  std::size_t s = 0;
  while (sets_[s].first + sets_[s].size <= begin) ++s;
  std::uint64_t index = begin;
  for (; s < sets_.size() && index < end; ++s) {
    const PivotSet& ps = sets_[s];
    load(ps, index - ps.first, basis.data(), digits);
    const std::uint64_t stop = std::min(end, ps.first + ps.size);
    while (true) {
      fn(static_cast<const Elem*>(basis.data()));
      if (++index == stop) break;
      // Odometer step on the free entries.
      for (std::size_t d = ps.free_cells.size(); d-- > 0;) {
        if (++digits[d] < q) {
          basis[ps.free_cells[d]] = static_cast<Elem>(digits[d]);
          break;
        }
        digits[d] = 0;
        basis[ps.free_cells[d]] = 0;
      }
    }
  }
}

}  // namespace starprod::oracle
