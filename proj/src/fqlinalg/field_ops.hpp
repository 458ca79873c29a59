#pragma once

// Row-operation kernels specialised per field representation. Callers pick the
// specialisation once with dispatch_ops() and run their inner loops against a
// concrete Ops type, so the per-element work is branch free.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>

#include "fqlinalg/field.hpp"

namespace starprod::fq {

struct BinaryOps {
  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>(a & b); }
  Elem inv(Elem) const noexcept { return 1; }
  Elem neg(Elem a) const noexcept { return a; }
  void scale_row(Elem*, std::size_t, Elem) const noexcept {}
  // dst -= f * src
  void sub_scaled(Elem* dst, const Elem* src, std::size_t len, Elem) const noexcept {
    for (std::size_t c = 0; c < len; ++c) dst[c] ^= src[c];
  }
};

// q <= 256: full addition/multiplication tables.
struct SmallTableOps {
  const std::uint8_t* add;
  const std::uint8_t* mul_tbl;
  const Elem* inv_tbl;
  std::uint32_t q;
  Elem neg_one;

  Elem mul(Elem a, Elem b) const noexcept { return mul_tbl[a * q + b]; }
  Elem inv(Elem a) const noexcept { return inv_tbl[a]; }
  Elem neg(Elem a) const noexcept { return mul(neg_one, a); }
  void scale_row(Elem* row, std::size_t len, Elem f) const noexcept {
    const std::uint8_t* mrow = mul_tbl + f * q;
    for (std::size_t c = 0; c < len; ++c) row[c] = mrow[row[c]];
  }
  void sub_scaled(Elem* dst, const Elem* src, std::size_t len, Elem f) const noexcept {
    const std::uint8_t* mrow = mul_tbl + neg(f) * q;
    for (std::size_t c = 0; c < len; ++c) dst[c] = add[dst[c] * q + mrow[src[c]]];
  }
};

struct PrimeOps {
  std::uint32_t p;
  const Elem* inv_tbl;

  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>((std::uint32_t{a} * b) % p); }
  Elem inv(Elem a) const noexcept { return inv_tbl[a]; }
  Elem neg(Elem a) const noexcept { return static_cast<Elem>(a == 0 ? 0 : p - a); }
  void scale_row(Elem* row, std::size_t len, Elem f) const noexcept {
    for (std::size_t c = 0; c < len; ++c) row[c] = mul(row[c], f);
  }
  void sub_scaled(Elem* dst, const Elem* src, std::size_t len, Elem f) const noexcept {
    const std::uint32_t nf = p - f;
    for (std::size_t c = 0; c < len; ++c) dst[c] = static_cast<Elem>((dst[c] + nf * src[c]) % p);
  }
};

struct BinaryExtOps {
  const Elem* exp;
  const std::uint32_t* log;
  const Elem* inv_tbl;

  Elem mul(Elem a, Elem b) const noexcept { return (a == 0 || b == 0) ? Elem{0} : exp[log[a] + log[b]]; }
  Elem inv(Elem a) const noexcept { return inv_tbl[a]; }
  Elem neg(Elem a) const noexcept { return a; }
  void scale_row(Elem* row, std::size_t len, Elem f) const noexcept {
    const std::uint32_t lf = log[f];
    for (std::size_t c = 0; c < len; ++c) {
      if (row[c]) row[c] = exp[lf + log[row[c]]];
    }
  }
  void sub_scaled(Elem* dst, const Elem* src, std::size_t len, Elem f) const noexcept {
    const std::uint32_t lf = log[f];
    for (std::size_t c = 0; c < len; ++c) {
      if (src[c]) dst[c] ^= exp[lf + log[src[c]]];
    }
  }
};

struct OddExtOps {
  const Field* field;
  const Elem* exp;
  const std::uint32_t* log;
  const Elem* inv_tbl;

  Elem mul(Elem a, Elem b) const noexcept { return (a == 0 || b == 0) ? Elem{0} : exp[log[a] + log[b]]; }
  Elem inv(Elem a) const noexcept { return inv_tbl[a]; }
  Elem neg(Elem a) const noexcept { return field->neg(a); }
  void scale_row(Elem* row, std::size_t len, Elem f) const noexcept {
    for (std::size_t c = 0; c < len; ++c) row[c] = mul(row[c], f);
  }
  void sub_scaled(Elem* dst, const Elem* src, std::size_t len, Elem f) const noexcept {
    const Elem nf = field->neg(f);
    for (std::size_t c = 0; c < len; ++c) {
      if (src[c]) dst[c] = field->add(dst[c], mul(nf, src[c]));
    }
  }
};

template <class Fn>
decltype(auto) dispatch_ops(const Field& f, Fn&& fn) {
  if (f.kind() == Field::Kind::kBinary) return std::forward<Fn>(fn)(BinaryOps{});
  if (f.q() <= Field::kSmallTableOrder) {
    return std::forward<Fn>(fn)(SmallTableOps{f.small_add_table().data(), f.small_mul_table().data(),
                                              f.inverse_table().data(), f.q(), f.neg(1)});
  }
  switch (f.kind()) {
    case Field::Kind::kPrime:
      return std::forward<Fn>(fn)(PrimeOps{f.p(), f.inverse_table().data()});
    case Field::Kind::kBinaryExt:
      return std::forward<Fn>(fn)(BinaryExtOps{f.exp_table().data(), f.log_table().data(), f.inverse_table().data()});
    default:
      return std::forward<Fn>(fn)(
          OddExtOps{&f, f.exp_table().data(), f.log_table().data(), f.inverse_table().data()});
  }
}

// Forward elimination on a dense row-major rows x cols buffer; returns the
// rank. The buffer is clobbered.
template <class Ops>
std::size_t rank_in_place(const Ops& ops, Elem* a, std::size_t rows, std::size_t cols) noexcept {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(a + piv * cols + c, a + piv * cols + cols, a + r * cols + c);
    const Elem* prow = a + r * cols;
    const Elem pinv = ops.inv(prow[c]);
    for (std::size_t i = piv + 1; i < rows; ++i) {
      Elem* row = a + i * cols;
      if (row[c] == 0) continue;
      ops.sub_scaled(row + c, prow + c, cols - c, ops.mul(row[c], pinv));
    }
    ++r;
  }
  return r;
}

// Reduced row echelon form in place; pivot columns are appended to `pivots`
// (which must have room for min(rows, cols) entries). Returns the rank.
template <class Ops>
std::size_t rref_in_place(const Ops& ops, Elem* a, std::size_t rows, std::size_t cols,
                          std::size_t* pivots) noexcept {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(a + piv * cols, a + piv * cols + cols, a + r * cols);
    Elem* prow = a + r * cols;
    if (prow[c] != 1) ops.scale_row(prow + c, cols - c, ops.inv(prow[c]));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Elem* row = a + i * cols;
      if (row[c] == 0) continue;
      ops.sub_scaled(row + c, prow + c, cols - c, row[c]);
    }
    pivots[r] = c;
    ++r;
  }
  return r;
}

}  // namespace starprod::fq
