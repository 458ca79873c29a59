#pragma once

#include <cstddef>
#include <vector>

#include "fqlinalg/field.hpp"

namespace starprod::fq {

// Raw-buffer helpers for hot loops (sampling, enumeration) that cannot afford
// Mat allocations per item. Buffers are row-major with n columns.

// Rank of the span of all componentwise products g1_i * g2_j.
std::size_t star_rank(const Field& field, std::size_t n, const Elem* g1, std::size_t k1, const Elem* g2,
                      std::size_t k2, std::vector<Elem>& scratch);

// Rank of the rows of a and b stacked.
std::size_t stacked_rank(const Field& field, std::size_t n, const Elem* a, std::size_t ka, const Elem* b,
                         std::size_t kb, std::vector<Elem>& scratch);

std::size_t buffer_rank(const Field& field, std::size_t rows, std::size_t n, const Elem* a,
                        std::vector<Elem>& scratch);

}  // namespace starprod::fq
