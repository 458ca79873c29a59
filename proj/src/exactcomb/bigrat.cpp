#include "exactcomb/bigrat.hpp"

#include <mpfr.h>

#include <vector>

#include "common/error.hpp"

namespace starprod::exact {

namespace {

constexpr mpfr_prec_t kPrecisionBits = 256;

class MpfrValue {
 public:
  MpfrValue() { mpfr_init2(v_, kPrecisionBits); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace

BigInt pow_int(std::uint64_t base, std::uint64_t exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

BigRat pow_rat(std::uint64_t base, long exp) {
  if (exp >= 0) return BigRat(pow_int(base, static_cast<std::uint64_t>(exp)));
  return make_rational(BigInt(1), pow_int(base, static_cast<std::uint64_t>(-exp)));
}

BigRat pow_rat(const BigRat& base, std::uint64_t exp) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exp);
  return make_rational(num, den);
}

BigRat make_rational(const BigInt& num, const BigInt& den) {
  require(den != 0, ErrorCode::kDivisionByZero, "rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const BigRat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_decimal_string(const BigRat& x, int significant_digits) {
  MpfrValue v;
  mpfr_set_q(v.get(), x.get_mpq_t(), MPFR_RNDN);
  const int len = mpfr_snprintf(nullptr, 0, "%.*Rg", significant_digits, v.get());
  std::vector<char> buf(static_cast<std::size_t>(len) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", significant_digits, v.get());
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

BigRat parse_rational(const std::string& text) {
  BigRat r;
  require(!text.empty() && r.set_str(text, 10) == 0, ErrorCode::kParse, "not a rational: '" + text + "'");
  require(r.get_den() != 0, ErrorCode::kParse, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

double to_double(const BigRat& x) {
  MpfrValue v;
  mpfr_set_q(v.get(), x.get_mpq_t(), MPFR_RNDN);
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

double log_base(const BigRat& x, std::uint64_t base) {
  require(x > 0, ErrorCode::kBadRange, "logarithm of a non-positive value");
  require(base >= 2, ErrorCode::kBadRange, "logarithm base must be >= 2");
  MpfrValue num, b;
  mpfr_set_q(num.get(), x.get_mpq_t(), MPFR_RNDN);
  mpfr_log(num.get(), num.get(), MPFR_RNDN);
  mpfr_set_ui(b.get(), base, MPFR_RNDN);
  mpfr_log(b.get(), b.get(), MPFR_RNDN);
  mpfr_div(num.get(), num.get(), b.get(), MPFR_RNDN);
  return mpfr_get_d(num.get(), MPFR_RNDN);
}

}  // namespace starprod::exact
