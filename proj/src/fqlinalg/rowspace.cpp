#include "fqlinalg/rowspace.hpp"

#include <algorithm>

#include "fqlinalg/field_ops.hpp"

namespace starprod::fq {

std::size_t star_rank(const Field& field, std::size_t n, const Elem* g1, std::size_t k1, const Elem* g2,
                      std::size_t k2, std::vector<Elem>& scratch) {
  return dispatch_ops(field, [&](const auto& ops) -> std::size_t {
    // Rows 0..rank-1 of the buffer hold an echelon basis of the products seen
    // so far; new products are appended in batches of n.
    scratch.resize(2 * n * n);
    std::size_t rank = 0, filled = 0;
    for (std::size_t i = 0; i < k1; ++i) {
      const Elem* a = g1 + i * n;
      for (std::size_t j = 0; j < k2; ++j) {
        const Elem* b = g2 + j * n;
        Elem* dst = scratch.data() + filled * n;
        for (std::size_t c = 0; c < n; ++c) dst[c] = ops.mul(a[c], b[c]);
        if (++filled == 2 * n) {
          rank = filled = rank_in_place(ops, scratch.data(), filled, n);
          if (rank == n) return n;
        }
      }
    }
    return rank_in_place(ops, scratch.data(), filled, n);
  });
}

std::size_t stacked_rank(const Field& field, std::size_t n, const Elem* a, std::size_t ka, const Elem* b,
                         std::size_t kb, std::vector<Elem>& scratch) {
  scratch.resize((ka + kb) * n);
  std::copy(a, a + ka * n, scratch.begin());
  std::copy(b, b + kb * n, scratch.begin() + static_cast<std::ptrdiff_t>(ka * n));
  return dispatch_ops(field, [&](const auto& ops) { return rank_in_place(ops, scratch.data(), ka + kb, n); });
}

std::size_t buffer_rank(const Field& field, std::size_t rows, std::size_t n, const Elem* a,
                        std::vector<Elem>& scratch) {
  scratch.assign(a, a + rows * n);
  return dispatch_ops(field, [&](const auto& ops) { return rank_in_place(ops, scratch.data(), rows, n); });
}

}  // namespace starprod::fq
