#include "oracle/checks.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "common/error.hpp"
#include "fqlinalg/field.hpp"

namespace starprod::oracle {

using exact::Params;

namespace {

std::string label_of(const Params& p) {
  return "q=" + std::to_string(p.q) + " n=" + std::to_string(p.n) + " k1=" + std::to_string(p.k1) +
         " k2=" + std::to_string(p.k2);
}

// Runs body and turns library errors into failing cases.
void run_case(std::vector<CheckCase>& out, const std::string& label, const std::function<CheckCase()>& body) {
  try {
    CheckCase c = body();
    c.label = label;
    out.push_back(std::move(c));
  } catch (const Error& e) {
    out.push_back({label, false, e.what()});
  }
}

CheckCase compare(const BigRat& formula, const BigRat& oracle) {
  return {"", formula == oracle,
          "formula " + exact::to_fraction_string(formula) + ", oracle " + exact::to_fraction_string(oracle)};
}

std::vector<Params> dim_grid(const CheckGrid& g, std::size_t kmax) {
  std::vector<Params> out;
  for (auto q : prime_powers_up_to(g.qmax)) {
    for (std::size_t n = 1; n <= g.nmax; ++n) {
      for (std::size_t k1 = 1; k1 <= std::min(n, kmax); ++k1) {
        for (std::size_t k2 = k1; k2 <= std::min(n, kmax); ++k2) out.push_back(Params::make(q, n, k1, k2));
      }
    }
  }
  return out;
}

std::vector<CheckCase> check_kernel(const CheckGrid& g) {
  std::vector<CheckCase> out;
  for (const auto& p : dim_grid(g, 3)) {
    run_case(out, label_of(p), [&] {
      return compare(exact::expected_kernel_size(p), exact_expected_kernel(p, g.threads, g.budget));
    });
  }
  return out;
}

std::vector<CheckCase> check_jensen(const CheckGrid& g) {
  std::vector<CheckCase> out;
  for (const auto& p : dim_grid(g, 3)) {
    run_case(out, label_of(p), [&] {
      const double bound = exact::star_dim_lower_bound(p).value;
      const BigRat mean = exact_expected_star_dim(p, RandomModel::kSystematic, g.threads, g.budget);
      // Compare bound <= mean without rounding the rational: bound is a double
      // carrying ~16 digits, the slack only absorbs its last-ulp error.
      const bool ok = bound <= exact::to_double(mean) + 1e-12;
      return CheckCase{"", ok,
                       "bound " + std::to_string(bound) + ", exact mean " + exact::to_fraction_string(mean)};
    });
  }
  return out;
}

std::vector<CheckCase> check_zerodiag(const CheckGrid& g) {
  std::vector<CheckCase> out;
  for (auto q : prime_powers_up_to(g.qmax)) {
    for (std::size_t k1 = 1; k1 <= 3; ++k1) {
      for (std::size_t k2 = k1; k2 <= 4; ++k2) {
        const std::string label =
            "q=" + std::to_string(q) + " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2);
        run_case(out, label, [&] {
          const auto counts = count_zero_diag_oracle(k1, k2, q, g.budget);
          const long a = static_cast<long>(k1), b = static_cast<long>(k2);
          std::string bad;
          for (long r = 0; r <= a; ++r) {
            const auto it = counts.by_rank.find(static_cast<std::size_t>(r));
            const BigInt seen = it == counts.by_rank.end() ? BigInt(0) : it->second;
            if (exact::count_zero_diag_rank(a, b, r, q) != seen) bad += " S_" + std::to_string(r);
            for (std::uint32_t set = 0; set < (1u << (k2 - k1)); ++set) {
              const auto jt = counts.by_rank_zero_set.find({static_cast<std::size_t>(r), set});
              const BigInt got = jt == counts.by_rank_zero_set.end() ? BigInt(0) : jt->second;
              const long l = std::popcount(set);
              if (exact::count_zero_diag_rank_zerocols(a, b, r, l, q) != got) {
                bad += " S_{" + std::to_string(r) + ",set" + std::to_string(set) + "}";
              }
            }
          }
          return CheckCase{"", bad.empty(), bad.empty() ? "all buckets match" : "mismatch:" + bad};
        });
      }
    }
  }
  return out;
}

std::vector<CheckCase> check_intersection(const CheckGrid& g) {
  std::vector<CheckCase> out;
  for (const auto& p : dim_grid(g, g.nmax)) {
    run_case(out, label_of(p), [&] {
      return compare(exact::expected_intersection_dim(p), exact_expected_intersection(p, g.threads, g.budget));
    });
  }
  return out;
}

std::vector<CheckCase> check_support(const CheckGrid& g) {
  std::vector<CheckCase> out;
  for (auto q : prime_powers_up_to(g.qmax)) {
    for (std::size_t n = 1; n <= g.nmax; ++n) {
      for (std::size_t l = 1; l <= n; ++l) {
        for (std::size_t s = 0; s <= n; ++s) {
          const std::string label = "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                    " l=" + std::to_string(l) + " s=" + std::to_string(s);
          run_case(out, label, [&] {
            const BigInt f = exact::count_subspaces_with_support(q, static_cast<long>(n), static_cast<long>(l),
                                                                 static_cast<long>(s));
            const BigInt o = count_subspaces_with_support_oracle(q, n, l, s, g.budget);
            return CheckCase{"", f == o, "formula " + f.get_str() + ", oracle " + o.get_str()};
          });
        }
      }
    }
  }
  return out;
}

std::vector<CheckCase> check_mds(const CheckGrid& g) {
  std::vector<CheckCase> out;
  for (auto q : prime_powers_up_to(g.qmax)) {
    const auto field = fq::Field::of_order(static_cast<std::uint32_t>(q));
    for (std::size_t n = 2; n <= g.nmax; ++n) {
      for (std::size_t k1 = 1; k1 <= n; ++k1) {
        const std::string base = "q=" + std::to_string(q) + " n=" + std::to_string(n) + " k1=" + std::to_string(k1);
        run_case(out, base + " enumerate", [&] {
          std::size_t mds_codes = 0;
          std::string bad;
          for (const auto& c : enumerate_subspaces(field, n, k1, g.budget)) {
            if (!codes::is_mds(c)) continue;
            ++mds_codes;
            for (std::size_t k2 = 1; k2 <= n; ++k2) {
              if (k2 != 1 && k2 + k1 < n + 1) continue;
              const BigRat f = exact::expected_star_dim_mds(q, n, k1, k2);
              if (f != exact_expected_star_dim_fixed(c, k2, g.threads, g.budget)) {
                bad += " k2=" + std::to_string(k2);
              }
            }
          }
          return CheckCase{"", bad.empty(),
                           std::to_string(mds_codes) + " MDS codes" + (bad.empty() ? "" : ", mismatch at" + bad)};
        });
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t qmax) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= qmax; ++q) {
    if (fq::prime_power_decompose(q).first != 0) out.push_back(q);
  }
  return out;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"kernel", "zerodiag", "intersection", "mds", "support", "jensen"};
  return names;
}

std::vector<CheckCase> run_check(const std::string& name, const CheckGrid& grid) {
  if (name == "kernel") return check_kernel(grid);
  if (name == "zerodiag") return check_zerodiag(grid);
  if (name == "intersection") return check_intersection(grid);
  if (name == "mds") return check_mds(grid);
  if (name == "support") return check_support(grid);
  if (name == "jensen") return check_jensen(grid);
  fail(ErrorCode::kInvalidArgument, "unknown check '" + name + "'");
}

}  // namespace starprod::oracle
