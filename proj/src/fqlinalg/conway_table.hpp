#pragma once

#include <cstdint>
#include <span>

namespace starprod::fq {

// Flat records {p, m, c_0, ..., c_{m-1}} of monic Conway polynomials.
std::span<const std::uint16_t> conway_raw_table();

}  // namespace starprod::fq
