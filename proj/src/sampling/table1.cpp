#include "sampling/table1.hpp"

#include <cstdio>

namespace starprod::sampling {

std::vector<exact::Params> table1_grid() {
  static constexpr std::size_t kLengths[] = {7, 11, 15};
  static constexpr std::size_t kDims[][2] = {{2, 3}, {3, 3}, {3, 4}};
  static constexpr std::uint64_t kFields[] = {2, 3, 5, 7};
  std::vector<exact::Params> grid;
  for (auto n : kLengths) {
    for (const auto& d : kDims) {
      for (auto q : kFields) grid.push_back(exact::Params::make(q, n, d[0], d[1]));
    }
  }
  return grid;
}

std::uint64_t table1_row_seed(std::uint64_t seed, std::size_t row) noexcept { return mix_seed(seed + row); }

std::vector<TableRow> reproduce_table1(std::uint64_t samples, std::uint64_t seed, unsigned threads,
                                       RandomModel model) {
  std::vector<TableRow> rows;
  const auto grid = table1_grid();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    TableRow row;
    row.params = grid[i];
    row.mc = mc_star_dim(grid[i], model, samples, table1_row_seed(seed, i), threads);
    row.bound = exact::star_dim_lower_bound(grid[i]).value;
    row.ratio = exact::to_double(row.mc.mean) / row.bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_table_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, v < 10 ? "%.4f" : "%.3f", v);
  return buf;
}

std::string table1_csv(const std::vector<TableRow>& rows) {
  std::string out = "n,k1,k2,q,mc_mean,bound,ratio\n";
  char ratio[64];
  for (const auto& r : rows) {
    std::snprintf(ratio, sizeof ratio, "%.5f", r.ratio);
    out += std::to_string(r.params.n) + "," + std::to_string(r.params.k1) + "," + std::to_string(r.params.k2) +
           "," + std::to_string(r.params.q) + "," + format_table_value(exact::to_double(r.mc.mean)) + "," +
           format_table_value(r.bound) + "," + ratio + "\n";
  }
  return out;
}

}  // namespace starprod::sampling
