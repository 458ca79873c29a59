#include <doctest.h>

#include <cmath>
#include <optional>
#include <set>
#include <vector>

#include "common/error.hpp"
#include "exactcomb/bigrat.hpp"
#include "exactcomb/formulas.hpp"
#include "fqlinalg/field.hpp"
#include "fqlinalg/matrix.hpp"
#include "oracle/oracle.hpp"

using namespace starprod;
using namespace starprod::exact;
using fq::Elem;
using fq::Field;
using fq::Mat;

namespace {

std::optional<ErrorCode> code_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Gaussian binomial by the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
BigInt qbinom_pascal(long n, long k, std::uint64_t q) {
  if (k < 0 || k > n) return 0;
  if (k == 0 || k == n) return 1;
  return qbinom_pascal(n - 1, k - 1, q) + pow_int(q, static_cast<std::uint64_t>(k)) * qbinom_pascal(n - 1, k, q);
}

// Visits every rows x cols matrix over GF(q).
template <typename Fn>
void for_each_matrix(const fq::FieldPtr& f, std::size_t rows, std::size_t cols, Fn&& fn) {
  std::vector<Elem> e(rows * cols, 0);
  while (true) {
    fn(Mat(f, rows, cols, e));
    std::size_t i = 0;
    while (i < e.size() && ++e[i] == f->q()) e[i++] = 0;
    if (i == e.size()) break;
  }
}

std::vector<std::size_t> support_of(const Mat& m) {
  std::vector<std::size_t> s;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m.at(r, c) != 0) {
        s.push_back(c);
        break;
      }
    }
  }
  return s;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(to_fraction_string(make_rational(6, 4)) == "3/2");
  CHECK(to_fraction_string(make_rational(4, 2)) == "2");
  CHECK(to_fraction_string(make_rational(-3, 6)) == "-1/2");
  CHECK(to_decimal_string(make_rational(1, 3)) == "0.3333333333");
  CHECK(to_decimal_string(make_rational(13138498, 2288417), 10) == "5.741304142");
  CHECK(parse_rational("13138498/2288417") == make_rational(13138498, 2288417));
  CHECK(parse_rational("7") == BigRat(7));
  CHECK(code_of([] { parse_rational("1/x"); }) == ErrorCode::kParse);
  CHECK(code_of([] { make_rational(1, 0); }) == ErrorCode::kDivisionByZero);
  CHECK(pow_rat(2, -3) == make_rational(1, 8));
  CHECK(pow_int(3, 40) == BigInt("12157665459056928801"));
  CHECK(log_base(BigRat(1024), 2) == doctest::Approx(10.0).epsilon(1e-15));
}

TEST_CASE("params") {
  const auto p = Params::make(4, 5, 3, 2);
  CHECK(p.k1 == 2);
  CHECK(p.k2 == 3);
  CHECK(code_of([] { Params::make(6, 5, 2, 2); }) == ErrorCode::kNotPrime);
  CHECK(code_of([] { Params::make(2, 3, 2, 4); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { Params::make(2, 3, 0, 1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("q-binomial") {
  CHECK(qbinom(5, 0, 2) == 1);
  CHECK(qbinom(3, 1, 2) == 7);
  CHECK(qbinom(4, 2, 2) == 35);
  CHECK(qbinom(2, 3, 5) == 0);
  CHECK(qbinom(4, -1, 3) == 0);
  CHECK(qbinom(-2, 1, 3) == 0);
  CHECK(binom(5, 2) == 10);
  CHECK(binom(2, 5) == 0);
  CHECK(binom(3, -1) == 0);
  for (std::uint64_t q : {2u, 3u, 4u, 7u, 9u})
    for (long n = 0; n <= 9; ++n)
      for (long k = -1; k <= n + 1; ++k) CHECK(qbinom(n, k, q) == qbinom_pascal(n, k, q));
  // Subspace count by RREF enumeration: 2-dim subspaces of F_2^4.
  std::set<std::vector<Elem>> planes;
  for_each_matrix(Field::of_order(2), 2, 4, [&](const Mat& m) {
    if (fq::rank(m) == 2) {
      const auto rr = fq::rref(m).reduced;
      const auto d = rr.data();
      planes.emplace(d.begin(), d.end());
    }
  });
  CHECK(planes.size() == 35);
}

TEST_CASE("zero-diagonal rank counts") {
  CHECK(count_zero_diag_rank(2, 2, 0, 2) == 1);
  CHECK(count_zero_diag_rank(3, 4, 0, 5) == 1);
  CHECK(count_zero_diag_rank(2, 2, 1, 2) == 2);
  CHECK(count_zero_diag_rank(2, 2, 2, 2) == 1);
  CHECK(code_of([] { count_zero_diag_rank(3, 2, 1, 2); }) == ErrorCode::kBadRange);
  CHECK(code_of([] { count_zero_diag_rank(2, 3, 3, 2); }) == ErrorCode::kBadRange);

  // Brute force over all zero-diagonal matrices.
  for (std::uint64_t q : {2u, 3u}) {
    auto f = Field::of_order(static_cast<std::uint32_t>(q));
    for (std::size_t k1 = 1; k1 <= 3; ++k1) {
      for (std::size_t k2 = k1; k2 <= (q == 2 ? 4u : 3u); ++k2) {
        std::vector<BigInt> by_rank(k1 + 1, 0);
        for_each_matrix(f, k1, k2, [&](const Mat& m) {
          for (std::size_t i = 0; i < k1; ++i)
            if (m.at(i, i) != 0) return;
          by_rank[fq::rank(m)] += 1;
        });
        for (std::size_t r = 0; r <= k1; ++r) {
          CAPTURE(q);
          CAPTURE(k1);
          CAPTURE(k2);
          CAPTURE(r);
          CHECK(count_zero_diag_rank(static_cast<long>(k1), static_cast<long>(k2), static_cast<long>(r), q) ==
                by_rank[r]);
        }
      }
    }
  }
}

TEST_CASE("zero-diagonal checksum") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u})
    for (long k1 = 1; k1 <= 5; ++k1)
      for (long k2 = k1; k2 <= 5; ++k2) {
        BigInt total = 0;
        for (long r = 0; r <= k1; ++r) total += count_zero_diag_rank(k1, k2, r, q);
        CHECK(total == pow_int(q, static_cast<std::uint64_t>(k1 * k2 - k1)));
      }
}

TEST_CASE("zero-diagonal counts with prescribed zero columns") {
  CHECK(count_zero_diag_rank_zerocols(1, 2, 1, 1, 2) == 0);
  CHECK(count_zero_diag_rank_zerocols(1, 2, 1, 0, 2) == 1);
  for (long r = 0; r <= 3; ++r) CHECK(count_zero_diag_rank_zerocols(3, 3, r, 0, 2) == count_zero_diag_rank(3, 3, r, 2));
  CHECK(code_of([] { count_zero_diag_rank_zerocols(2, 3, 1, 2, 2); }) == ErrorCode::kBadRange);

  // Brute force with the zero set fixed to the first l off-diagonal columns.
  for (std::uint64_t q : {2u, 3u}) {
    auto f = Field::of_order(static_cast<std::uint32_t>(q));
    for (std::size_t k1 = 1; k1 <= 2; ++k1) {
      for (std::size_t k2 = k1; k2 <= k1 + 2; ++k2) {
        for (std::size_t l = 0; l <= k2 - k1; ++l) {
          std::vector<BigInt> by_rank(k1 + 1, 0);
          for_each_matrix(f, k1, k2, [&](const Mat& m) {
            for (std::size_t i = 0; i < k1; ++i)
              if (m.at(i, i) != 0) return;
            for (std::size_t c = k1; c < k2; ++c) {
              bool zero = true;
              for (std::size_t i = 0; i < k1; ++i) zero = zero && m.at(i, c) == 0;
              if (zero != (c < k1 + l)) return;
            }
            by_rank[fq::rank(m)] += 1;
          });
          for (std::size_t r = 0; r <= k1; ++r) {
            CHECK(count_zero_diag_rank_zerocols(static_cast<long>(k1), static_cast<long>(k2), static_cast<long>(r),
                                                static_cast<long>(l), q) == by_rank[r]);
          }
        }
      }
    }
  }
}

TEST_CASE("zeros of bilinear forms") {
  CHECK(zeros_of_form(0, 2, 3, 5) == pow_int(5, 5));
  CHECK(zeros_of_form(1, 1, 1, 2) == 3);
  CHECK(zeros_of_form(2, 2, 2, 3) == 33);
  CHECK(code_of([] { zeros_of_form(3, 2, 4, 2); }) == ErrorCode::kBadRange);
  // Canonical form sum_{i<r} x_i y_i, enumerated.
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto f = Field::of_order(q);
    for (std::size_t k1 = 1; k1 <= 3; ++k1) {
      for (std::size_t k2 = k1; k2 <= 3; ++k2) {
        for (std::size_t r = 0; r <= k1; ++r) {
          BigInt zeros = 0;
          for_each_matrix(f, 1, k1 + k2, [&](const Mat& v) {
            Elem s = 0;
            for (std::size_t i = 0; i < r; ++i) s = f->add(s, f->mul(v.at(0, i), v.at(0, k1 + i)));
            if (s == 0) zeros += 1;
          });
          CHECK(zeros_of_form(static_cast<long>(r), static_cast<long>(k1), static_cast<long>(k2), q) == zeros);
        }
      }
    }
  }
}

TEST_CASE("expected kernel size") {
  CHECK(expected_kernel_size(Params::make(2, 2, 1, 1)) == 1);
  CHECK(expected_kernel_size(Params::make(2, 3, 2, 2)) == make_rational(25, 8));
  CHECK(expected_kernel_size(Params::make(2, 3, 2, 2)) == oracle::exact_expected_kernel(Params::make(2, 3, 2, 2)));
  CHECK(expected_kernel_size(Params::make(2, 7, 2, 3)) == make_rational(25481, 8192));

  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 9u, 16u})
    for (std::size_t n = 1; n <= 12; ++n)
      for (std::size_t k1 = 1; k1 <= std::min<std::size_t>(n, 4); ++k1)
        for (std::size_t k2 = k1; k2 <= std::min<std::size_t>(n, 5); ++k2) {
          const auto p = Params::make(q, n, k1, k2);
          const auto e = expected_kernel_size(p);
          CAPTURE(q);
          CAPTURE(n);
          CAPTURE(k1);
          CAPTURE(k2);
          CHECK(e >= 1);
          CHECK(expected_kernel_size(p, JLimit::kR) == e);
          CHECK(expected_kernel_size(p, JLimit::kK1) == e);
          CHECK(expected_kernel_size_by_classes(p) == e);
        }
}

TEST_CASE("star dimension lower bound") {
  CHECK(star_dim_lower_bound(Params::make(2, 7, 2, 3)).value == doctest::Approx(4.3629).epsilon(2e-5));
  CHECK(star_dim_lower_bound(Params::make(3, 11, 3, 3)).value == doctest::Approx(8.5237).epsilon(2e-5));
  CHECK(star_dim_lower_bound(Params::make(7, 15, 3, 4)).value == doctest::Approx(11.998).epsilon(1e-4));
  const auto b = star_dim_lower_bound(Params::make(2, 2, 1, 1));
  CHECK(b.value == 1.0);
  CHECK(b.k1k2 == 1);
  CHECK(b.expected_kernel == 1);
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 1; k <= n; ++k) CHECK(star_dim_lower_bound(Params::make(3, n, k, n)).value <= double(k * n));
}

TEST_CASE("MDS expectation") {
  CHECK(expected_star_dim_mds(2, 2, 2, 1) == make_rational(4, 3));
  CHECK(expected_star_dim_mds(2, 2, 2, 2) == 2);
  CHECK(expected_star_dim_mds(2, 3, 2, 2) == make_rational(18, 7));
  CHECK(code_of([] { expected_star_dim_mds(7, 6, 3, 2); }) == ErrorCode::kUncoveredCase);
  CHECK(code_of([] { expected_star_dim_mds(7, 6, 7, 2); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("subspaces with prescribed support") {
  CHECK(count_subspaces_with_support(2, 2, 1, 2) == 1);
  CHECK(count_subspaces_with_support(2, 3, 2, 3) == 4);
  CHECK(count_subspaces_with_support(3, 4, 3, 2) == 0);
  // Enumerate every subspace of F_q^n by RREF and bucket by support.
  for (std::uint32_t q : {2u, 3u}) {
    auto f = Field::of_order(q);
    for (std::size_t n = 1; n <= (q == 2 ? 4u : 3u); ++n) {
      for (std::size_t l = 1; l <= n; ++l) {
        std::set<std::vector<Elem>> seen;
        std::vector<BigInt> with_support(n + 1, 0);  // indexed by s, support = {0..s-1}
        for_each_matrix(f, l, n, [&](const Mat& m) {
          if (fq::rank(m) != l) return;
          const auto rr = fq::rref(m).reduced;
          if (!seen.emplace(rr.data().begin(), rr.data().end()).second) return;
          const auto s = support_of(rr);
          if (s.back() + 1 == s.size()) with_support[s.size()] += 1;
        });
        for (std::size_t s = 0; s <= n; ++s) {
          CHECK(count_subspaces_with_support(q, static_cast<long>(n), static_cast<long>(l), static_cast<long>(s)) ==
                with_support[s]);
        }
      }
    }
  }
}

TEST_CASE("expected intersection dimension") {
  CHECK(expected_intersection_dim(Params::make(2, 2, 1, 1)) == make_rational(1, 3));
  CHECK(expected_intersection_dim(Params::make(2, 3, 1, 2)) == make_rational(3, 7));
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 1; k <= n; ++k) CHECK(expected_intersection_dim(Params::make(5, n, k, n)) == BigRat(k));
}

TEST_CASE("limits, probability bound and conjecture") {
  CHECK(kernel_limit_value(Params::make(3, 4, 2, 2)) == 2);
  CHECK(kernel_limit_value(Params::make(2, 7, 2, 3)) == make_rational(3, 2));
  CHECK(kernel_limit_value(Params::make(5, 5, 2, 3)) == 6);
  CHECK(full_dim_probability_bound_exact(2, 0) == 0);
  CHECK(full_dim_probability_bound_exact(2, 4) == make_rational(175, 256));
  CHECK(full_dim_probability_bound(2, 4) == 0.68359375);
  CHECK(full_dim_probability_bound(7, 2) == doctest::Approx(1.0 - (13.0 / 49) * (13.0 / 49)));
  CHECK(full_dim_probability_bound(7, 2) == doctest::Approx(0.92961).epsilon(1e-5));
  CHECK(code_of([] { full_dim_probability_bound(2, -1); }) == ErrorCode::kBadRange);
  CHECK(kernel_conjecture_value(5, 1, 4) == 2.0);
  CHECK(kernel_conjecture_value(2, 2, 2) == doctest::Approx(std::exp(0.5) + 1));

  // Kernel expectation approaches the limit as q grows.
  double prev = 1e300;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 101u}) {
    const auto p = Params::make(q, 7, 2, 3);
    const double gap = std::abs(to_double(expected_kernel_size(p) - kernel_limit_value(p)));
    CHECK(gap < prev);
    prev = gap;
  }
}
