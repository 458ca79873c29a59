#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fqlinalg/field.hpp"

namespace starprod::fq {

inline constexpr std::size_t kMaxMatrixSide = 4096;

// Dense row-major matrix over a finite field.
class Mat {
 public:
  // Zero matrix. Errors: TooLarge when a side exceeds kMaxMatrixSide.
  Mat(FieldPtr field, std::size_t rows, std::size_t cols);
  // Errors: InvalidArgument on size mismatch or entries >= q; TooLarge.
  Mat(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Mat identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v) noexcept { data_[r * cols_ + c] = v; }

  std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> data() const noexcept { return data_; }
  std::span<Elem> data() noexcept { return data_; }

  bool operator==(const Mat& other) const noexcept {
    return field_->q() == other.field_->q() && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

// Pivot choice: first nonzero entry scanning down the current column.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
// Rows form a basis of {x : m * x^T = 0}; the basis is the canonical one read
// off the RREF (one vector per free column).
Mat right_kernel_basis(const Mat& m);

Mat transpose(const Mat& m);
// Errors: FieldMismatch, LengthMismatch.
Mat multiply(const Mat& a, const Mat& b);
Mat vstack(const Mat& top, const Mat& bottom);
Mat select_columns(const Mat& m, std::span<const std::size_t> columns);
// First `rows` rows of m.
Mat take_rows(const Mat& m, std::size_t rows);

void require_same_field(const Mat& a, const Mat& b);

}  // namespace starprod::fq
