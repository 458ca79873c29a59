#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sampling/monte_carlo.hpp"

namespace starprod::sampling {

struct TableRow {
  exact::Params params;
  Estimate mc;
  double bound = 0;
  double ratio = 0;  // mc mean / bound
};

// The 36 parameter rows: n in {7, 11, 15}, (k1, k2) in {(2,3), (3,3), (3,4)},
// q in {2, 3, 5, 7}, in that nesting order.
std::vector<exact::Params> table1_grid();

// Row i is sampled with seed table1_row_seed(seed, i).
std::uint64_t table1_row_seed(std::uint64_t seed, std::size_t row) noexcept;

std::vector<TableRow> reproduce_table1(std::uint64_t samples, std::uint64_t seed, unsigned threads = 1,
                                       RandomModel model = RandomModel::kSystematic);

// Four decimals below 10, three from 10 on.
std::string format_table_value(double v);
// Header "n,k1,k2,q,mc_mean,bound,ratio" followed by one line per row.
std::string table1_csv(const std::vector<TableRow>& rows);

}  // namespace starprod::sampling
