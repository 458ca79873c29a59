#include "fqlinalg/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "common/error.hpp"
#include "fqlinalg/conway_table.hpp"

namespace starprod::fq {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint64_t, std::uint32_t> prime_power_decompose(std::uint64_t q) noexcept {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return {0, 0};
  return {p, m};
}

namespace {

std::vector<std::uint32_t> lookup_modulus(std::uint32_t p, std::uint32_t m) {
  const auto raw = conway_raw_table();
  std::size_t i = 0;
  while (i + 2 <= raw.size()) {
    const std::uint32_t rp = raw[i];
    const std::uint32_t rm = raw[i + 1];
    if (rp == p && rm == m) {
      std::vector<std::uint32_t> coeffs(raw.begin() + static_cast<std::ptrdiff_t>(i + 2),
                                        raw.begin() + static_cast<std::ptrdiff_t>(i + 2 + m));
      coeffs.push_back(1);
      return coeffs;
    }
    i += 2 + rm;
  }
  fail(ErrorCode::kNoModulusTableEntry,
       "no modulus for GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
}

}  // namespace

FieldPtr Field::make(std::uint32_t p, std::uint32_t m) {
  require(is_prime(p), ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  require(m >= 1, ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    require(q <= kMaxFieldOrder, ErrorCode::kTooLarge,
            "field order exceeds 2^16 for p=" + std::to_string(p) + ", m=" + std::to_string(m));
  }

  static std::mutex mu;
  static std::map<std::uint32_t, FieldPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(static_cast<std::uint32_t>(q)); it != cache.end()) return it->second;
  std::vector<std::uint32_t> modulus;
  if (m > 1) modulus = lookup_modulus(p, m);
  FieldPtr field(new Field(p, m, std::move(modulus)));
  cache.emplace(static_cast<std::uint32_t>(q), field);
  return field;
}

FieldPtr Field::of_order(std::uint32_t q) {
  require(q <= kMaxFieldOrder, ErrorCode::kTooLarge, "field order " + std::to_string(q) + " exceeds 2^16");
  const auto [p, m] = prime_power_decompose(q);
  require(p != 0, ErrorCode::kNotPrime, std::to_string(q) + " is not a prime power");
  return make(static_cast<std::uint32_t>(p), m);
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m; ++i) q_ *= p;
  if (m == 1) {
    kind_ = p == 2 ? Kind::kBinary : Kind::kPrime;
    inv_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) {
      if (inv_[a] != 0) continue;
      // Fermat: a^(p-2).
      std::uint64_t result = 1, base = a, e = p - 2;
      while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
      }
      inv_[a] = static_cast<Elem>(result);
      inv_[result] = static_cast<Elem>(a);
    }
  } else {
    kind_ = p == 2 ? Kind::kBinaryExt : Kind::kOddExt;
    build_extension_tables();
  }
  if (q_ <= kSmallTableOrder) build_small_tables();
}

void Field::build_extension_tables() {
  const std::uint32_t order = q_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  log_.assign(q_, 0);
  std::vector<std::uint32_t> digits(m_, 0);
  digits[0] = 1;
  std::vector<bool> seen(q_, false);
  for (std::uint32_t i = 0; i < order; ++i) {
    std::uint32_t value = 0;
    for (std::uint32_t d = m_; d-- > 0;) value = value * p_ + digits[d];
    // The modulus is primitive iff x^0..x^(q-2) are pairwise distinct and
    // nonzero; primitivity implies irreducibility.
    require(value != 0 && !seen[value], ErrorCode::kInvalidArgument,
            "modulus for " + name() + " is not primitive");
    seen[value] = true;
    exp_[i] = static_cast<Elem>(value);
    exp_[i + order] = static_cast<Elem>(value);
    log_[value] = i;
    // digits <- digits * x mod modulus
    const std::uint32_t top = digits[m_ - 1];
    for (std::uint32_t d = m_ - 1; d > 0; --d) digits[d] = digits[d - 1];
    digits[0] = 0;
    if (top != 0) {
      for (std::uint32_t d = 0; d < m_; ++d) {
        digits[d] = (digits[d] + (p_ - top) * modulus_[d]) % p_;
      }
    }
  }
  require(digits[0] == 1 && std::all_of(digits.begin() + 1, digits.end(), [](auto v) { return v == 0; }),
          ErrorCode::kInvalidArgument, "modulus for " + name() + " is not primitive");

  inv_.assign(q_, 0);
  for (std::uint32_t a = 1; a < q_; ++a) inv_[a] = exp_[(order - log_[a]) % order];

  if (kind_ == Kind::kOddExt) {
    zech_.assign(order, -1);
    for (std::uint32_t d = 0; d < order; ++d) {
      const std::uint32_t e = exp_[d];
      const std::uint32_t low = e % p_;
      const std::uint32_t one_plus = e - low + (low + 1) % p_;
      zech_[d] = one_plus == 0 ? -1 : static_cast<std::int32_t>(log_[one_plus]);
    }
  }
}

void Field::build_small_tables() {
  small_add_.assign(static_cast<std::size_t>(q_) * q_, 0);
  small_mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b) {
      small_add_[a * q_ + b] = static_cast<std::uint8_t>(add(static_cast<Elem>(a), static_cast<Elem>(b)));
      small_mul_[a * q_ + b] = static_cast<std::uint8_t>(mul(static_cast<Elem>(a), static_cast<Elem>(b)));
    }
  }
}

Elem Field::inv(Elem a) const {
  require(a != 0 && a < q_, ErrorCode::kDivisionByZero, "inverse of zero in " + name());
  return inv_[a];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

std::string Field::name() const {
  if (m_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

}  // namespace starprod::fq
