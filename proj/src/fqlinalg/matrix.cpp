#include "fqlinalg/matrix.hpp"

#include <string>

#include "common/error.hpp"
#include "fqlinalg/field_ops.hpp"

namespace starprod::fq {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
  require(rows <= kMaxMatrixSide && cols <= kMaxMatrixSide, ErrorCode::kTooLarge,
          "matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " exceeds side limit " +
              std::to_string(kMaxMatrixSide));
}

}  // namespace

Mat::Mat(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  require(field_ != nullptr, ErrorCode::kInvalidArgument, "matrix without a field");
  check_dims(rows, cols);
  data_.assign(rows * cols, 0);
}

Mat::Mat(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(field_ != nullptr, ErrorCode::kInvalidArgument, "matrix without a field");
  check_dims(rows, cols);
  require(data_.size() == rows * cols, ErrorCode::kInvalidArgument,
          "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(data_.size()));
  for (Elem v : data_) {
    require(field_->contains(v), ErrorCode::kInvalidArgument,
            "entry " + std::to_string(v) + " outside " + field_->name());
  }
}

Mat Mat::identity(FieldPtr field, std::size_t n) {
  Mat m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

RrefResult rref(const Mat& m) {
  Mat reduced = m;
  std::vector<std::size_t> pivots(std::min(m.rows(), m.cols()));
  const std::size_t r = dispatch_ops(*m.field(), [&](const auto& ops) {
    return rref_in_place(ops, reduced.data().data(), reduced.rows(), reduced.cols(), pivots.data());
  });
  pivots.resize(r);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Mat& m) {
  std::vector<Elem> scratch(m.data().begin(), m.data().end());
  return dispatch_ops(*m.field(), [&](const auto& ops) {
    return rank_in_place(ops, scratch.data(), m.rows(), m.cols());
  });
}

Mat right_kernel_basis(const Mat& m) {
  const auto [reduced, pivots] = rref(m);
  const Field& f = *m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis(m.field(), m.cols() - pivots.size(), m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(out, free, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      basis.set(out, pivots[i], f.neg(reduced.at(i, free)));
    }
    ++out;
  }
  return basis;
}

Mat transpose(const Mat& m) {
  Mat t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t.set(c, r, m.at(r, c));
  }
  return t;
}

void require_same_field(const Mat& a, const Mat& b) {
  require(a.field()->q() == b.field()->q(), ErrorCode::kFieldMismatch,
          a.field()->name() + " vs " + b.field()->name());
}

Mat multiply(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  require(a.cols() == b.rows(), ErrorCode::kLengthMismatch,
          "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
              std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const Field& f = *a.field();
  Mat out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.set(i, j, f.add(out.at(i, j), f.mul(x, b.at(k, j))));
      }
    }
  }
  return out;
}

Mat vstack(const Mat& top, const Mat& bottom) {
  require_same_field(top, bottom);
  require(top.cols() == bottom.cols(), ErrorCode::kLengthMismatch, "vstack column mismatch");
  std::vector<Elem> entries(top.data().begin(), top.data().end());
  entries.insert(entries.end(), bottom.data().begin(), bottom.data().end());
  return Mat(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(entries));
}

Mat select_columns(const Mat& m, std::span<const std::size_t> columns) {
  Mat out(m.field(), m.rows(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require(columns[j] < m.cols(), ErrorCode::kBadRange, "column index out of range");
    for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, j, m.at(r, columns[j]));
  }
  return out;
}

Mat take_rows(const Mat& m, std::size_t rows) {
  rows = std::min(rows, m.rows());
  std::vector<Elem> entries(m.data().begin(), m.data().begin() + static_cast<std::ptrdiff_t>(rows * m.cols()));
  return Mat(m.field(), rows, m.cols(), std::move(entries));
}

}  // namespace starprod::fq
