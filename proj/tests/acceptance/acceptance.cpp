// Acceptance suite. Usage: acceptance [criterion...]; no arguments runs all ten.
// Prints one "AC<n> PASS|FAIL ..." line per criterion and exits nonzero if any
// criterion fails.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "codes/linear_code.hpp"
#include "common/error.hpp"
#include "exactcomb/formulas.hpp"
#include "fqlinalg/field.hpp"
#include "fqlinalg/rowspace.hpp"
#include "oracle/enumerate.hpp"
#include "oracle/oracle.hpp"
#include "sampling/monte_carlo.hpp"
#include "sampling/philox.hpp"
#include "sampling/random_code.hpp"
#include "sampling/table1.hpp"

using namespace starprod;
using exact::BigInt;
using exact::BigRat;
using exact::Params;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first few mismatches; a criterion fails on any of them.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) first_failures_ += (first_failures_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << ": " << checked_ - failed_ << "/" << checked_ << " ok";
    if (failed_) os << " (first failures: " << first_failures_ << ")";
    return {failed_ == 0 && checked_ > 0, os.str()};
  }

 private:
  std::size_t checked_ = 0, failed_ = 0;
  std::string first_failures_;
};

std::string params_label(const Params& p) {
  std::ostringstream os;
  os << "(q=" << p.q << ",n=" << p.n << ",k1=" << p.k1 << ",k2=" << p.k2 << ")";
  return os.str();
}

// Reference table values, rows in grid order: n in {7,11,15}, (k1,k2) in
// {(2,3),(3,3),(3,4)}, q in {2,3,5,7}.
const char* const kBounds[36] = {
    "4.3629", "5.1610", "5.6761", "5.8348", "5.4339", "6.2843", "6.7708", "6.8982", "5.9594",
    "6.6232", "6.9011", "6.9582", "5.3628", "5.9117", "5.9960", "5.9996", "7.3205", "8.5237",
    "8.9360", "8.9822", "8.5278", "9.9850", "10.691", "10.851", "5.7877", "5.9922", "5.999",
    "6.0000", "8.3906", "8.9642", "8.9995", "9.0000", "10.473", "11.793", "11.990", "11.998"};
const double kMeans[36] = {4.6264, 5.4398, 5.8522, 5.9415, 5.7123, 6.5425, 6.9000, 6.9663, 6.1949,
                           6.7812, 6.9595, 6.9858, 5.5339, 5.9514, 5.9984, 5.9999, 7.6598, 8.7159,
                           8.9731, 8.9943, 8.9618, 10.336, 10.859, 10.947, 5.8525, 5.9963, 6.0000,
                           6.0000, 8.5608, 8.9812, 8.9999, 9.0000, 10.843, 11.885, 11.996, 11.999};

// One unit in the last printed digit of a decimal string.
double last_digit_unit(const std::string& s) {
  const auto dot = s.find('.');
  return dot == std::string::npos ? 1.0 : std::pow(10.0, -static_cast<double>(s.size() - dot - 1));
}

Outcome ac1_kernel_formula() {
  Tally t;
  const BigInt limit = BigInt(1) << 26;
  for (std::uint64_t q : {2u, 3u})
    for (std::size_t k1 = 1; k1 <= 3; ++k1)
      for (std::size_t k2 = k1; k2 <= 3; ++k2)
        for (std::size_t n = k2; n <= 5; ++n) {
          const auto p = Params::make(q, n, k1, k2);
          const BigInt pairs = exact::pow_int(q, k1 * (n - k1) + k2 * (n - k2));
          if (pairs > limit) continue;
          t.check(exact::expected_kernel_size(p) == oracle::exact_expected_kernel(p, 0), params_label(p));
        }
  return t.outcome("E|ker psi| formula equals enumeration");
}

Outcome ac2_zero_diagonal() {
  Tally t;
  for (std::uint64_t q : {2u, 3u})
    for (std::size_t k1 = 1; k1 <= 3; ++k1)
      for (std::size_t k2 = k1; k2 <= 4; ++k2) {
        const auto counts = oracle::count_zero_diag_oracle(k1, k2, q);
        const long a = static_cast<long>(k1), b = static_cast<long>(k2);
        for (long r = 0; r <= a; ++r) {
          const auto it = counts.by_rank.find(static_cast<std::size_t>(r));
          const BigInt seen = it == counts.by_rank.end() ? BigInt(0) : it->second;
          t.check(exact::count_zero_diag_rank(a, b, r, q) == seen, "S_r " + std::to_string(r));
          for (std::uint32_t mask = 0; mask < (1u << (k2 - k1)); ++mask) {
            const auto jt = counts.by_rank_zero_set.find({static_cast<std::size_t>(r), mask});
            const BigInt seen_l = jt == counts.by_rank_zero_set.end() ? BigInt(0) : jt->second;
            const long l = __builtin_popcount(mask);
            t.check(exact::count_zero_diag_rank_zerocols(a, b, r, l, q) == seen_l,
                    "S_{r,l} q=" + std::to_string(q) + " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) +
                        " r=" + std::to_string(r) + " mask=" + std::to_string(mask));
          }
        }
      }
  for (std::uint64_t q : {2u, 3u, 4u, 5u})
    for (long k1 = 1; k1 <= 5; ++k1)
      for (long k2 = k1; k2 <= 5; ++k2) {
        BigInt total = 0;
        for (long r = 0; r <= k1; ++r) total += exact::count_zero_diag_rank(k1, k2, r, q);
        t.check(total == exact::pow_int(q, static_cast<std::uint64_t>(k1 * k2 - k1)), "checksum");
      }
  return t.outcome("zero-diagonal counts equal enumeration, checksums hold");
}

Outcome ac3_table1_bounds() {
  Tally t;
  const auto grid = sampling::table1_grid();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double got = exact::star_dim_lower_bound(grid[i]).value;
    const std::string reference = kBounds[i];
    const double tol = last_digit_unit(reference) * (1 + 1e-9);
    std::ostringstream what;
    what << params_label(grid[i]) << " got " << got << " reference " << reference;
    t.check(std::abs(got - std::stod(reference)) <= tol, what.str());
  }
  return t.outcome("comparison-table bounds within one unit of the last printed digit");
}

Outcome ac4_table1_mc() {
  Tally t;
  const auto rows = sampling::reproduce_table1(100000, 42, 0);
  double worst = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double mean = exact::to_double(rows[i].mc.mean);
    const double tol = std::max(0.02, 4 * rows[i].mc.std_error);
    const double dev = std::abs(mean - kMeans[i]);
    worst = std::max(worst, dev / tol);
    std::ostringstream what;
    what << params_label(rows[i].params) << " mean " << mean << " reference " << kMeans[i] << " tol " << tol;
    t.check(dev <= tol, what.str());
  }
  std::ostringstream summary;
  summary << "comparison-table Monte Carlo means within max(0.02, 4 stderr), worst deviation/tolerance "
          << std::round(worst * 1000) / 1000;
  return t.outcome(summary.str());
}

codes::LinearCode gf7_code(const std::vector<fq::Elem>& entries) {
  return codes::LinearCode::from_matrix(fq::Mat(fq::Field::of_order(7), 3, 6, entries));
}

Outcome ac5_example() {
  Tally t;
  const auto c = gf7_code({1, 0, 0, 4, 5, 2, 0, 1, 0, 6, 1, 1, 0, 0, 1, 5, 6, 5});
  const auto c_prime = gf7_code({1, 0, 0, 1, 1, 6, 0, 1, 0, 4, 1, 4, 0, 0, 1, 6, 2, 4});
  const auto check = [&](const codes::LinearCode& code, std::size_t l, const char* want, const char* name) {
    const auto got = oracle::exact_expected_star_dim_fixed(code, l, 0);
    t.check(got == exact::parse_rational(want),
            std::string(name) + " l=" + std::to_string(l) + " got " + exact::to_fraction_string(got));
  };
  check(c, 2, "13138498/2288417", "C");
  check(c_prime, 2, "13154050/2288417", "C'");
  check(c, 3, "72051027/12044300", "C");
  check(c_prime, 3, "72051027/12044300", "C'");
  return t.outcome("GF(7) example rationals reproduced exactly at l = 2 and l = 3");
}

Outcome ac6_mds_formula() {
  Tally t;
  const std::size_t grid[4][3] = {{2, 3, 2}, {3, 4, 2}, {3, 4, 3}, {5, 4, 2}};
  std::size_t codes_found = 0;
  for (const auto& g : grid) {
    const std::uint64_t q = g[0];
    const std::size_t n = g[1], k1 = g[2];
    auto field = fq::Field::of_order(static_cast<std::uint32_t>(q));
    std::vector<std::size_t> covered;
    for (std::size_t k2 = 1; k2 <= n; ++k2)
      if (k2 == 1 || k2 > n - k1) covered.push_back(k2);
    std::vector<BigRat> formula;
    for (auto k2 : covered) formula.push_back(exact::expected_star_dim_mds(q, n, k1, k2));
    std::size_t found_here = 0;
    for (const auto& code : oracle::enumerate_subspaces(field, n, k1)) {
      if (!codes::is_mds(code)) continue;
      ++found_here;
      for (std::size_t i = 0; i < covered.size(); ++i) {
        t.check(oracle::exact_expected_star_dim_fixed(code, covered[i]) == formula[i],
                "q=" + std::to_string(q) + " n=" + std::to_string(n) + " k1=" + std::to_string(k1) +
                    " k2=" + std::to_string(covered[i]));
      }
    }
    t.check(found_here > 0, "no MDS code found for q=" + std::to_string(q));
    codes_found += found_here;
  }
  return t.outcome("MDS formula equals enumeration over " + std::to_string(codes_found) + " MDS codes");
}

Outcome ac7_intersection() {
  Tally t;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k1 = 1; k1 <= n; ++k1)
      for (std::size_t k2 = k1; k2 <= n; ++k2) {
        const auto p = Params::make(2, n, k1, k2);
        t.check(exact::expected_intersection_dim(p) == oracle::exact_expected_intersection(p, 0), params_label(p));
      }
  BigRat prev = -1;
  std::string trend;
  for (std::size_t k = 2; k <= 5; ++k) {
    const BigRat v = exact::expected_intersection_dim(Params::make(2, k * k, k, k));
    trend += (trend.empty() ? "" : " > ") + exact::to_decimal_string(v, 4);
    if (k > 2) t.check(v < prev, "trend breaks at k=" + std::to_string(k));
    prev = v;
  }
  return t.outcome("intersection formula equals enumeration; n=k^2 trend " + trend);
}

Outcome ac8_limits() {
  Tally t;
  const std::uint64_t qs[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  BigRat prev_gap = -1;
  for (auto q : qs) {
    const auto p = Params::make(q, 7, 2, 3);
    BigRat gap = exact::expected_kernel_size(p) - (1 + BigRat(1, static_cast<unsigned long>(q)));
    gap = abs(gap);
    if (prev_gap >= 0) t.check(gap < prev_gap, "(7,2,3) q=" + std::to_string(q));
    prev_gap = gap;
  }
  BigRat prev = -1;
  std::string excesses;
  for (auto q : qs) {
    const BigRat excess = exact::expected_kernel_size(Params::make(q, 6, 2, 3)) - 2;
    excesses += (excesses.empty() ? "" : ", ") + exact::to_decimal_string(excess, 4);
    if (prev >= 0) t.check(excess >= 0 && excess < prev, "(6,2,3) E-2 not decreasing at q=" + std::to_string(q));
    prev = excess;
  }
  return t.outcome("kernel expectation approaches its q -> infinity limit monotonically; (6,2,3) E-2 = " +
                   excesses);
}

Outcome ac9_instance_bounds() {
  Tally t;
  constexpr std::uint64_t kPairs = 10000;
  std::uint64_t pairs = 0, mds_pairs = 0, grid_points = 0;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    auto field = fq::Field::of_order(q);
    for (std::size_t n = 2; n <= 8; ++n)
      for (std::size_t k1 = 1; k1 < n; ++k1)
        for (std::size_t k2 = k1; k2 < n; ++k2) {
          ++grid_points;
          const std::uint64_t seed = sampling::mix_seed(q * 1000003u + n * 1009u + k1 * 31u + k2);
          std::uint64_t violations = 0, stream = 0;
          for (std::uint64_t i = 0; i < kPairs; ++i) {
            // Redraw until both codes are non-degenerate.
            std::optional<codes::LinearCode> c1, c2;
            while (!c1 || codes::is_degenerate(*c1)) {
              sampling::RngStream rng(seed, stream++);
              c1 = sampling::sample_code(field, n, k1, sampling::RandomModel::kUniformSubspace, rng);
            }
            while (!c2 || codes::is_degenerate(*c2)) {
              sampling::RngStream rng(seed, stream++);
              c2 = sampling::sample_code(field, n, k2, sampling::RandomModel::kUniformSubspace, rng);
            }
            const std::size_t dim = codes::star_product(*c1, *c2).dim();
            bool ok = dim >= codes::star_lower_bound_dual_distance(*c1, *c2);
            if (codes::is_mds(*c1) || codes::is_mds(*c2)) {
              ++mds_pairs;
              ok = ok && dim >= std::min(n, k1 + k2 - 1);
            }
            violations += !ok;
            ++pairs;
          }
          t.check(violations == 0, params_label(Params::make(q, n, k1, k2)) + " " + std::to_string(violations) +
                                       " violations");
        }
  }
  return t.outcome("no bound violations in " + std::to_string(pairs) + " pairs (" + std::to_string(mds_pairs) +
                   " with an MDS code) over " + std::to_string(grid_points) + " grid points");
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string("'") + STARPROD_CLI_PATH + "' " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

Outcome ac10_determinism() {
  Tally t;
  const char* const runs[] = {
      "mc -q 2 -n 7 -k1 2 -k2 3 --samples 100000 --seed 42",
      "mc -q 7 -n 15 -k1 3 -k2 4 --samples 20000 --seed 9 --quantity kernel_size",
      "mc -q 3 -n 6 -k1 2 -k2 3 --samples 20000 --seed 5 --model uniform --quantity full_dim",
  };
  for (const char* args : runs) {
    int status = 0;
    const std::string reference = run_cli(std::string("--threads 1 ") + args, status);
    t.check(status == 0 && !reference.empty(), std::string("threads 1 failed: ") + args);
    for (int threads : {4, 8}) {
      const std::string out = run_cli("--threads " + std::to_string(threads) + " " + args, status);
      t.check(status == 0 && out == reference, "threads " + std::to_string(threads) + " differs: " + args);
    }
  }
  return t.outcome("mc JSON byte-identical at 1, 4 and 8 threads");
}

const std::vector<std::function<Outcome()>> kCriteria = {
    ac1_kernel_formula, ac2_zero_diagonal, ac3_table1_bounds, ac4_table1_mc,    ac5_example,
    ac6_mds_formula,    ac7_intersection,  ac8_limits,        ac9_instance_bounds, ac10_determinism,
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    const long v = std::strtol(argv[i], nullptr, 10);
    if (v < 1 || v > static_cast<long>(kCriteria.size())) {
      std::cerr << "usage: acceptance [criterion 1-10 ...]\n";
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(v));
  }
  if (selected.empty())
    for (std::size_t i = 1; i <= kCriteria.size(); ++i) selected.push_back(i);

  bool all = true;
  for (auto id : selected) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = kCriteria[id - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("AC%zu %s %s [%.1fs]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
