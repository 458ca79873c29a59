#include "oracle/enumerate.hpp"

#include "common/error.hpp"
#include "exactcomb/formulas.hpp"

namespace starprod::oracle {

std::uint64_t EnumBudget::check(const exact::BigInt& items, const std::string& what) const {
  require(items <= exact::BigInt(static_cast<unsigned long>(max_items)), ErrorCode::kBudgetExceeded,
          what + ": " + items.get_str() + " items exceed budget " + std::to_string(max_items));
  return items.get_ui();
}

namespace {

void require_dims(std::size_t n, std::size_t k) {
  require(k >= 1 && k <= n, ErrorCode::kInvalidArgument, "need 1 <= k <= n");
}

}  // namespace

SystematicEnumerator::SystematicEnumerator(fq::FieldPtr field, std::size_t n, std::size_t k,
                                           const EnumBudget& budget)
    : field_(std::move(field)), n_(n), k_(k) {
  require_dims(n, k);
  count_ = budget.check(exact::pow_int(field_->q(), k * (n - k)), "systematic generators");
}

void SystematicEnumerator::decode(std::uint64_t index, Elem* out) const noexcept {
  const std::uint32_t q = field_->q();
  for (std::size_t r = k_; r-- > 0;) {
    Elem* row = out + r * n_;
    for (std::size_t c = n_; c-- > k_;) {
      row[c] = static_cast<Elem>(index % q);
      index /= q;
    }
    for (std::size_t c = 0; c < k_; ++c) row[c] = c == r ? 1 : 0;
  }
}

SubspaceEnumerator::SubspaceEnumerator(fq::FieldPtr field, std::size_t n, std::size_t k, const EnumBudget& budget)
    : field_(std::move(field)), n_(n), k_(k) {
  require_dims(n, k);
  const std::uint32_t q = field_->q();
  budget.check(exact::qbinom(static_cast<long>(n), static_cast<long>(k), q), "subspaces");
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    PivotSet ps;
    ps.pivots = pivots;
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (!is_pivot[c]) ps.free_cells.push_back(r * n + c);
      }
    }
    ps.first = count_;
    ps.size = exact::pow_int(q, ps.free_cells.size()).get_ui();
    count_ += ps.size;
    sets_.push_back(std::move(ps));
    // Next k-combination of {0..n-1} in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

void SubspaceEnumerator::load(const PivotSet& ps, std::uint64_t local, Elem* basis,
                              std::vector<std::uint32_t>& digits) const {
  const std::uint32_t q = field_->q();
  std::fill(basis, basis + k_ * n_, Elem{0});
  for (std::size_t r = 0; r < k_; ++r) basis[r * n_ + ps.pivots[r]] = 1;
  digits.assign(ps.free_cells.size(), 0);
  for (std::size_t d = ps.free_cells.size(); d-- > 0;) {
    digits[d] = static_cast<std::uint32_t>(local % q);
    basis[ps.free_cells[d]] = static_cast<Elem>(digits[d]);
    local /= q;
  }
}

std::vector<codes::LinearCode> enumerate_systematic(const fq::FieldPtr& field, std::size_t n, std::size_t k,
                                                    const EnumBudget& budget) {
  SystematicEnumerator en(field, n, k, budget);
  std::vector<codes::LinearCode> out;
  out.reserve(en.count());
  std::vector<Elem> g(n * k);
  for (std::uint64_t i = 0; i < en.count(); ++i) {
    en.decode(i, g.data());
    out.push_back(codes::LinearCode::from_matrix(fq::Mat(field, k, n, g)));
  }
  return out;
}

std::vector<codes::LinearCode> enumerate_subspaces(const fq::FieldPtr& field, std::size_t n, std::size_t k,
                                                   const EnumBudget& budget) {
  SubspaceEnumerator en(field, n, k, budget);
  std::vector<codes::LinearCode> out;
  out.reserve(en.count());
  en.for_each(0, en.count(), [&](const Elem* basis) {
    out.push_back(codes::LinearCode::from_matrix(fq::Mat(field, k, n, std::vector<Elem>(basis, basis + k * n))));
  });
  return out;
}

}  // namespace starprod::oracle
