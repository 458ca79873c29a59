#include "exactcomb/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "common/error.hpp"
#include "fqlinalg/field.hpp"

namespace starprod::exact {

namespace {

BigInt sign(long e) { return (e % 2 == 0) ? BigInt(1) : BigInt(-1); }

long choose2(long m) { return m >= 2 ? m * (m - 1) / 2 : 0; }

BigInt pow_q(std::uint64_t q, long e) { return pow_int(q, static_cast<std::uint64_t>(e)); }

}  // namespace

void require_prime_power(std::uint64_t q) {
  require(fq::prime_power_decompose(q).first != 0, ErrorCode::kNotPrime,
          std::to_string(q) + " is not a prime power");
}

Params Params::make(std::uint64_t q, std::size_t n, std::size_t k1, std::size_t k2) {
  require_prime_power(q);
  if (k1 > k2) std::swap(k1, k2);
  require(n >= 1, ErrorCode::kInvalidArgument, "length must be >= 1");
  require(k1 >= 1 && k2 <= n, ErrorCode::kInvalidArgument,
          "dimensions must satisfy 1 <= k1 <= k2 <= n (got n=" + std::to_string(n) + ", k1=" +
              std::to_string(k1) + ", k2=" + std::to_string(k2) + ")");
  return Params{q, n, k1, k2};
}

BigInt binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt qbinom(long n, long k, std::uint64_t q) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= pow_q(q, n - i) - 1;
    den *= pow_q(q, i + 1) - 1;
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

BigInt count_zero_diag_rank(long k1, long k2, long r, std::uint64_t q) {
  require(0 <= r && r <= k1 && k1 <= k2, ErrorCode::kBadRange,
          "need 0 <= r <= k1 <= k2 for zero-diagonal counts");
  BigInt total = 0;
  for (long i = 0; i <= k1; ++i) {
    const BigInt ci = binom(k1, i) * pow_q(q - 1, i);
    for (long j = 0; j <= k1; ++j) {
      const BigInt qb = qbinom(k1 - i, j, q) * qbinom(k1 - j, k1 - r, q);
      if (qb == 0) continue;
      total += ci * sign(r - j) * pow_q(q, j * k2 + choose2(r - j)) * qb;
    }
  }
  const BigInt scale = pow_q(q, k1);
  BigInt out;
  mpz_divexact(out.get_mpz_t(), total.get_mpz_t(), scale.get_mpz_t());
  return out;
}

BigInt count_zero_diag_rank_zerocols(long k1, long k2, long r, long l, std::uint64_t q) {
  require(0 <= r && r <= k1 && k1 <= k2 && 0 <= l && l <= k2 - k1, ErrorCode::kBadRange,
          "need 0 <= r <= k1 <= k2 and 0 <= l <= k2 - k1");
  // Moebius inversion over the supersets J of the fixed zero set.
  const long free = k2 - k1 - l;
  BigInt out = 0;
  for (long t = 0; t <= free; ++t) {
    out += sign(t) * binom(free, t) * count_zero_diag_rank(k1, k2 - l - t, r, q);
  }
  return out;
}

BigInt zeros_of_form(long r, long k1, long k2, std::uint64_t q) {
  require(0 <= r && r <= std::min(k1, k2), ErrorCode::kBadRange, "need 0 <= r <= min(k1, k2)");
  return (pow_q(q, r) + q - 1) * pow_q(q, k1 + k2 - r - 1);
}

BigRat expected_kernel_size(const Params& p, JLimit limit) {
  const long n = static_cast<long>(p.n), k1 = static_cast<long>(p.k1), k2 = static_cast<long>(p.k2);
  const std::uint64_t q = p.q;
  // gamma(x)^e = (q^x + q - 1)^e q^(-x e); q-powers are collected into one
  // exponent so that each term is an integer times q^exponent.
  BigRat total = 0;
  for (long r = 0; r <= k1; ++r) {
    BigInt gamma_r;
    mpz_pow_ui(gamma_r.get_mpz_t(), BigInt(pow_q(q, r) + q - 1).get_mpz_t(), static_cast<unsigned long>(n - k2));
    for (long i = 0; i <= k1; ++i) {
      long jmax = k1;
      if (limit == JLimit::kR) jmax = r;
      if (limit == JLimit::kMinRK1MinusI) jmax = std::min(r, k1 - i);
      const BigInt ci = binom(k1, i) * pow_q(q - 1, i);
      for (long j = 0; j <= jmax; ++j) {
        const BigInt qb = qbinom(k1 - i, j, q) * qbinom(k1 - j, k1 - r, q);
        if (qb == 0) continue;
        BigInt gamma_j;
        mpz_pow_ui(gamma_j.get_mpz_t(), BigInt(pow_q(q, j) + q - 1).get_mpz_t(),
                   static_cast<unsigned long>(k2 - k1));
        const long e = j * k2 - n + choose2(r - j) - r * (n - k2) - j * (k2 - k1);
        total += BigRat(sign(r - j) * gamma_r * gamma_j * ci * qb) * pow_rat(q, e);
      }
    }
  }
  return total;
}

BigRat expected_kernel_size_by_classes(const Params& p) {
  const long n = static_cast<long>(p.n), k1 = static_cast<long>(p.k1), k2 = static_cast<long>(p.k2);
  const std::uint64_t q = p.q;
  // Count systematic pairs (A1, A2) with star kernel element phi = [A] fixed:
  // diagonal columns force A zero-diagonal, columns k1..k2-1 of G1 are free
  // with q^k1 (zero column of A) or q^(k1-1) solutions, the remaining n-k2
  // columns contribute Z(rank A) each.
  BigInt pairs = 0;
  for (long r = 0; r <= k1; ++r) {
    BigInt z;
    mpz_pow_ui(z.get_mpz_t(), zeros_of_form(r, k1, k2, q).get_mpz_t(), static_cast<unsigned long>(n - k2));
    for (long l = 0; l <= k2 - k1; ++l) {
      const BigInt classes = binom(k2 - k1, l) * count_zero_diag_rank_zerocols(k1, k2, r, l, q);
      if (classes == 0) continue;
      pairs += classes * z * pow_q(q, k1 * l) * pow_q(q, (k1 - 1) * (k2 - k1 - l));
    }
  }
  return make_rational(pairs, pow_q(q, (n - k1) * k1 + (n - k2) * k2));
}

StarDimBound star_dim_lower_bound(const Params& p) {
  StarDimBound out;
  out.expected_kernel = expected_kernel_size(p);
  out.k1k2 = p.k1 * p.k2;
  out.value = static_cast<double>(out.k1k2) - log_base(out.expected_kernel, p.q);
  return out;
}

BigRat expected_star_dim_mds(std::uint64_t q, std::size_t n_, std::size_t k_mds, std::size_t k_random) {
  require_prime_power(q);
  require(n_ >= 1 && k_mds >= 1 && k_mds <= n_ && k_random >= 1 && k_random <= n_, ErrorCode::kInvalidArgument,
          "dimensions must lie in [1, n]");
  const long n = static_cast<long>(n_), k1 = static_cast<long>(k_mds), k2 = static_cast<long>(k_random);
  if (k2 == 1) {
    BigInt sum = 0;
    for (long i = 1; i <= n; ++i) sum += binom(n, i) * pow_q(q - 1, i) * std::min(k1, i);
    return make_rational(sum, pow_q(q, n) - 1);
  }
  require(k2 >= n - k1 + 1, ErrorCode::kUncoveredCase,
          "MDS expectation is only determined for k2 = 1 or k2 >= n - k1 + 1");
  BigInt sum = 0;
  for (long s = k2; s <= n; ++s) {
    BigInt inner = 0;
    for (long i = 0; i <= s - k2; ++i) inner += sign(i) * qbinom(s - i, k2, q) * binom(s, s - i);
    sum += s * binom(n, s) * inner;
  }
  return make_rational(sum, qbinom(n, k2, q));
}

BigInt count_subspaces_with_support(std::uint64_t q, long n, long l, long s) {
  require(0 <= l && l <= n && 0 <= s && s <= n, ErrorCode::kBadRange, "need 0 <= l, s <= n");
  BigInt out = 0;
  for (long i = l; i <= s; ++i) out += sign(s - i) * binom(s, i) * qbinom(i, l, q);
  return out;
}

BigRat expected_intersection_dim(const Params& p) {
  const long n = static_cast<long>(p.n), k1 = static_cast<long>(p.k1), k2 = static_cast<long>(p.k2);
  const std::uint64_t q = p.q;
  BigInt sum = 0;
  for (long i = 1; i <= k1; ++i) {
    sum += i * qbinom(n, i, q) * qbinom(n - i, k1 - i, q) * pow_q(q, (k1 - i) * (k2 - i)) *
           qbinom(n - k1, k2 - i, q);
  }
  return make_rational(sum, qbinom(n, k1, q) * qbinom(n, k2, q));
}

BigRat kernel_limit_value(const Params& p) {
  return BigRat(1) + pow_rat(p.q, static_cast<long>(p.k1 * p.k2) - static_cast<long>(p.n));
}

BigRat full_dim_probability_bound_exact(std::uint64_t q, long exponent) {
  require(exponent >= 0, ErrorCode::kBadRange, "exponent must be non-negative");
  require(q >= 2, ErrorCode::kInvalidArgument, "q must be >= 2");
  const BigRat ratio = make_rational(BigInt(2 * q - 1), pow_q(q, 2));
  return BigRat(1) - pow_rat(ratio, static_cast<std::uint64_t>(exponent));
}

double full_dim_probability_bound(std::uint64_t q, long exponent) {
  return to_double(full_dim_probability_bound_exact(q, exponent));
}

double kernel_conjecture_value(std::uint64_t q, std::size_t k1, std::size_t k2) {
  require(q >= 2 && k1 >= 1 && k2 >= 1, ErrorCode::kInvalidArgument, "need q >= 2 and positive dimensions");
  const long double x = static_cast<long double>(q - 1) * static_cast<long double>(k2) *
                        static_cast<long double>(k1 - 1) / std::pow(static_cast<long double>(q), k1);
  return static_cast<double>(std::exp(x) + 1.0L);
}

}  // namespace starprod::exact
