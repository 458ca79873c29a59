#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace starprod::exact {

using BigInt = mpz_class;
// mpq_class keeps values canonical (reduced, positive denominator) through
// arithmetic; construct from num/den pairs only via make_rational().
using BigRat = mpq_class;

BigInt pow_int(std::uint64_t base, std::uint64_t exp);
// base^exp for a possibly negative exponent.
BigRat pow_rat(std::uint64_t base, long exp);
BigRat pow_rat(const BigRat& base, std::uint64_t exp);
BigRat make_rational(const BigInt& num, const BigInt& den);

// "num/den", or just "num" when the denominator is 1.
std::string to_fraction_string(const BigRat& x);
// Decimal rendering with the given number of significant digits.
std::string to_decimal_string(const BigRat& x, int significant_digits = 10);
// Errors: Parse.
BigRat parse_rational(const std::string& text);
double to_double(const BigRat& x);

// log_base(x) for x > 0, evaluated with 256-bit MPFR arithmetic and rounded to
// double at the end.
double log_base(const BigRat& x, std::uint64_t base);

}  // namespace starprod::exact
