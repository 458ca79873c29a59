#include "codes/linear_code.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "common/error.hpp"
#include "fqlinalg/field_ops.hpp"

namespace starprod::codes {

LinearCode::LinearCode(Mat basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {
  bool leading_identity = true;
  for (std::size_t i = 0; i < pivots_.size(); ++i) leading_identity = leading_identity && pivots_[i] == i;
  if (leading_identity) systematic_ = basis_;
}

LinearCode LinearCode::from_matrix(const Mat& m) {
  auto [reduced, pivots] = fq::rref(m);
  require(!pivots.empty(), ErrorCode::kZeroCode, "generator matrix has rank 0");
  Mat basis = fq::take_rows(reduced, pivots.size());
  return LinearCode(std::move(basis), std::move(pivots));
}

LinearCode full_space(const FieldPtr& field, std::size_t n) { return LinearCode::from_matrix(Mat::identity(field, n)); }

LinearCode repetition_code(const FieldPtr& field, std::size_t n) {
  return LinearCode::from_matrix(Mat(field, 1, n, std::vector<Elem>(n, 1)));
}

LinearCode evaluation_code(const FieldPtr& field, std::span<const Elem> points, std::size_t k) {
  require(k >= 1 && k <= points.size(), ErrorCode::kInvalidArgument, "evaluation code needs 1 <= k <= #points");
  std::vector<Elem> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorCode::kInvalidArgument,
          "evaluation points must be distinct");
  Mat g(field, k, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    Elem power = 1;
    for (std::size_t i = 0; i < k; ++i) {
      g.set(i, j, power);
      power = field->mul(power, points[j]);
    }
  }
  return LinearCode::from_matrix(g);
}

void require_compatible(const LinearCode& c1, const LinearCode& c2) {
  require(c1.field()->q() == c2.field()->q(), ErrorCode::kFieldMismatch,
          c1.field()->name() + " vs " + c2.field()->name());
  require(c1.length() == c2.length(), ErrorCode::kLengthMismatch,
          "lengths " + std::to_string(c1.length()) + " and " + std::to_string(c2.length()));
}

LinearCode star_product(const LinearCode& c1, const LinearCode& c2) {
  require_compatible(c1, c2);
  const auto& field = c1.field();
  const std::size_t n = c1.length();
  const Mat& a = c1.basis();
  const Mat& b = c2.basis();
  // Products are accumulated in batches so no intermediate matrix exceeds the
  // side limit; after each batch only the independent rows are kept (<= n).
  std::vector<Elem> pending;
  std::size_t pending_rows = 0;
  auto flush = [&] {
    auto [reduced, pivots] = fq::rref(Mat(field, pending_rows, n, std::move(pending)));
    pending.assign(reduced.data().begin(), reduced.data().begin() + static_cast<std::ptrdiff_t>(pivots.size() * n));
    pending_rows = pivots.size();
  };
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      if (pending_rows == fq::kMaxMatrixSide) flush();
      for (std::size_t c = 0; c < n; ++c) pending.push_back(field->mul(a.at(i, c), b.at(j, c)));
      ++pending_rows;
    }
  }
  return LinearCode::from_matrix(Mat(field, pending_rows, n, std::move(pending)));
}

LinearCode dual(const LinearCode& c) {
  require(c.dim() < c.length(), ErrorCode::kZeroDual, "dual of the full space is zero");
  return LinearCode::from_matrix(fq::right_kernel_basis(c.basis()));
}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (result > (~std::uint64_t{0}) / base) return ~std::uint64_t{0};
    result *= base;
  }
  return result;
}

}  // namespace

std::size_t min_distance(const LinearCode& c, std::uint64_t budget) {
  const fq::Field& f = *c.field();
  const std::size_t k = c.dim();
  const std::size_t n = c.length();
  require(saturating_pow(f.q(), k) <= budget, ErrorCode::kBudgetExceeded,
          "q^k = " + std::to_string(f.q()) + "^" + std::to_string(k) + " codewords exceed budget " +
              std::to_string(budget));
  // multiples[(i * q + v) * n + col] = v * row_i[col]
  std::vector<Elem> multiples(k * f.q() * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::uint32_t v = 0; v < f.q(); ++v) {
      for (std::size_t col = 0; col < n; ++col) {
        multiples[(i * f.q() + v) * n + col] = f.mul(static_cast<Elem>(v), c.basis().at(i, col));
      }
    }
  }
  std::size_t best = n;
  std::vector<Elem> word(n);
  std::vector<Elem> digits(k);
  // Codewords up to scalars: the first nonzero coefficient is 1.
  for (std::size_t lead = 0; lead < k && best > 1; ++lead) {
    std::copy_n(c.basis().row(lead).begin(), n, word.begin());
    std::fill(digits.begin(), digits.end(), 0);
    while (true) {
      const auto weight = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem e) { return e != 0; }));
      best = std::min(best, weight);
      if (best == 1) break;
      bool advanced = false;
      for (std::size_t pos = k; pos > lead + 1 && !advanced;) {
        --pos;
        const Elem old = digits[pos];
        const Elem next = static_cast<Elem>(std::uint32_t{old} + 1 == f.q() ? 0 : old + 1);
        digits[pos] = next;
        const Elem* from = &multiples[(pos * f.q() + old) * n];
        const Elem* to = &multiples[(pos * f.q() + next) * n];
        for (std::size_t col = 0; col < n; ++col) word[col] = f.add(f.sub(word[col], from[col]), to[col]);
        advanced = next != 0;
      }
      if (!advanced) break;
    }
  }
  return best;
}

std::size_t dual_distance(const LinearCode& c, std::uint64_t budget) {
  require(c.dim() < c.length(), ErrorCode::kZeroDual, "dual of the full space is zero");
  const std::size_t k = c.dim();
  const std::size_t n = c.length();
  const Mat& g = c.basis();
  for (std::size_t col = 0; col < n; ++col) {
    bool zero = true;
    for (std::size_t r = 0; r < k && zero; ++r) zero = g.at(r, col) == 0;
    if (zero) return 1;
  }
  std::uint64_t tested = 0;
  std::vector<Elem> scratch;
  return fq::dispatch_ops(*c.field(), [&](const auto& ops) -> std::size_t {
    for (std::size_t s = 2; s <= k; ++s) {
      std::vector<std::size_t> idx(s);
      std::iota(idx.begin(), idx.end(), 0);
      scratch.resize(s * k);
      while (true) {
        require(++tested <= budget, ErrorCode::kBudgetExceeded, "column subsets exceed budget");
        // Rows of scratch are the chosen columns of g.
        for (std::size_t t = 0; t < s; ++t) {
          for (std::size_t r = 0; r < k; ++r) scratch[t * k + r] = g.at(r, idx[t]);
        }
        if (fq::rank_in_place(ops, scratch.data(), s, k) < s) return s;
        std::size_t pos = s;
        while (pos > 0 && idx[pos - 1] == n - s + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t t = pos; t < s; ++t) idx[t] = idx[t - 1] + 1;
      }
    }
    return k + 1;
  });
}

std::vector<std::size_t> support(const LinearCode& c) {
  std::vector<std::size_t> out;
  for (std::size_t col = 0; col < c.length(); ++col) {
    for (std::size_t r = 0; r < c.dim(); ++r) {
      if (c.basis().at(r, col) != 0) {
        out.push_back(col);
        break;
      }
    }
  }
  return out;
}

bool is_degenerate(const LinearCode& c) { return support(c).size() != c.length(); }

LinearCode project(const LinearCode& c, std::span<const std::size_t> coords) {
  require(!coords.empty(), ErrorCode::kBadRange, "projection onto an empty index set");
  for (auto i : coords) require(i < c.length(), ErrorCode::kBadRange, "coordinate " + std::to_string(i) + " out of range");
  return LinearCode::from_matrix(fq::select_columns(c.basis(), coords));
}

bool is_mds(const LinearCode& c, std::uint64_t budget) {
  if (c.dim() == c.length()) return true;
  return dual_distance(c, budget) == c.dim() + 1;
}

std::size_t intersection_dim(const LinearCode& c1, const LinearCode& c2) {
  require_compatible(c1, c2);
  return c1.dim() + c2.dim() - fq::rank(fq::vstack(c1.basis(), c2.basis()));
}

std::optional<LinearCode> intersection(const LinearCode& c1, const LinearCode& c2) {
  require_compatible(c1, c2);
  const Mat stacked = fq::vstack(c1.basis(), c2.basis());
  // (a, b) with a*B1 + b*B2 = 0 gives a*B1 in the intersection.
  const Mat relations = fq::right_kernel_basis(fq::transpose(stacked));
  if (relations.rows() == 0) return std::nullopt;
  const auto& f = *c1.field();
  Mat words(c1.field(), relations.rows(), c1.length());
  for (std::size_t r = 0; r < relations.rows(); ++r) {
    for (std::size_t i = 0; i < c1.dim(); ++i) {
      const Elem a = relations.at(r, i);
      if (a == 0) continue;
      for (std::size_t col = 0; col < c1.length(); ++col) {
        words.set(r, col, f.add(words.at(r, col), f.mul(a, c1.basis().at(i, col))));
      }
    }
  }
  return LinearCode::from_matrix(words);
}

bool contains(const LinearCode& c, const LinearCode& d) {
  require_compatible(c, d);
  return fq::rank(fq::vstack(c.basis(), d.basis())) == c.dim();
}

std::size_t star_lower_bound_dual_distance(const LinearCode& c1, const LinearCode& c2) {
  require_compatible(c1, c2);
  require(!is_degenerate(c1) && !is_degenerate(c2), ErrorCode::kDegenerateInput,
          "the dual-distance bound needs non-degenerate codes");
  const std::size_t d1 = dual_distance(c1);
  const std::size_t d2 = dual_distance(c2);
  const std::size_t n = c1.length();
  return std::min({n, c1.dim() + d2 - 2, c2.dim() + d1 - 2});
}

std::size_t star_lower_bound_mds(const LinearCode& c1, const LinearCode& c2) {
  require_compatible(c1, c2);
  require(!is_degenerate(c1) && !is_degenerate(c2), ErrorCode::kDegenerateInput,
          "the MDS bound needs non-degenerate codes");
  require(is_mds(c1) || is_mds(c2), ErrorCode::kNeitherMds, "neither code is MDS");
  return std::min(c1.length(), c1.dim() + c2.dim() - 1);
}

void require_monomial(const Mat& m) {
  require(m.rows() == m.cols(), ErrorCode::kNotMonomial, "monomial matrix must be square");
  std::vector<int> col_count(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    int row_count = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) != 0) {
        ++row_count;
        ++col_count[c];
      }
    }
    require(row_count == 1, ErrorCode::kNotMonomial, "row " + std::to_string(r) + " is not a scaled unit vector");
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    require(col_count[c] == 1, ErrorCode::kNotMonomial, "column " + std::to_string(c) + " is not a scaled unit vector");
  }
}

LinearCode apply_monomial(const LinearCode& c, const Mat& m) {
  require_monomial(m);
  require(m.rows() == c.length(), ErrorCode::kLengthMismatch, "monomial matrix size differs from code length");
  return LinearCode::from_matrix(fq::multiply(c.basis(), m));
}

}  // namespace starprod::codes
