#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace starprod::fq {

// Elements of GF(p^m) are integers in [0, q): sum a_i x^i  <->  sum a_i p^i.
using Elem = std::uint16_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Immutable after construction. Two fields with the same order are the same
// object (see Field::make), so pointer equality is field equality.
class Field {
 public:
  enum class Kind {
    kBinary,        // q = 2
    kPrime,         // q = p, p odd
    kBinaryExt,     // q = 2^m, m > 1
    kOddExt,        // q = p^m, p odd, m > 1
  };

  // Errors: NotPrime, TooLarge, NoModulusTableEntry.
  static FieldPtr make(std::uint32_t p, std::uint32_t m);
  // Accepts any prime power q <= 2^16.
  static FieldPtr of_order(std::uint32_t q);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  Kind kind() const noexcept { return kind_; }
  // Coefficients c_0..c_m of the monic modulus (empty for prime fields).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::string name() const;

  Elem add(Elem a, Elem b) const noexcept {
    switch (kind_) {
      case Kind::kBinary:
      case Kind::kBinaryExt:
        return static_cast<Elem>(a ^ b);
      case Kind::kPrime: {
        const std::uint32_t s = std::uint32_t{a} + b;
        return static_cast<Elem>(s >= p_ ? s - p_ : s);
      }
      case Kind::kOddExt:
        return zech_add(a, b);
    }
    return 0;
  }

  Elem neg(Elem a) const noexcept {
    switch (kind_) {
      case Kind::kBinary:
      case Kind::kBinaryExt:
        return a;
      case Kind::kPrime:
        return static_cast<Elem>(a == 0 ? 0 : p_ - a);
      case Kind::kOddExt:
        return a == 0 ? Elem{0} : exp_[log_[a] + (q_ - 1) / 2];
    }
    return 0;
  }

  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const noexcept {
    if (kind_ == Kind::kBinary) return static_cast<Elem>(a & b);
    if (kind_ == Kind::kPrime) return static_cast<Elem>((std::uint32_t{a} * b) % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  // Errors: DivisionByZero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;

  bool contains(std::uint32_t v) const noexcept { return v < q_; }

  // Lookup tables exposed for the elimination kernels in field_ops.hpp.
  const std::vector<Elem>& inverse_table() const noexcept { return inv_; }
  const std::vector<Elem>& exp_table() const noexcept { return exp_; }
  const std::vector<std::uint32_t>& log_table() const noexcept { return log_; }
  const std::vector<std::int32_t>& zech_table() const noexcept { return zech_; }
  // Full q*q tables, present only when q <= kSmallTableOrder.
  static constexpr std::uint32_t kSmallTableOrder = 256;
  const std::vector<std::uint8_t>& small_add_table() const noexcept { return small_add_; }
  const std::vector<std::uint8_t>& small_mul_table() const noexcept { return small_mul_; }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  Elem zech_add(Elem a, Elem b) const noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t la = log_[a];
    const std::uint32_t lb = log_[b];
    const std::uint32_t d = lb >= la ? lb - la : lb + (q_ - 1) - la;
    const std::int32_t z = zech_[d];
    if (z < 0) return 0;
    return exp_[la + static_cast<std::uint32_t>(z)];
  }

  void build_extension_tables();
  void build_small_tables();

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  Kind kind_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> inv_;
  std::vector<Elem> exp_;             // exp_[i] = x^i, length 2(q-1)
  std::vector<std::uint32_t> log_;    // log_[a] for a != 0
  std::vector<std::int32_t> zech_;    // log(1 + x^d), -1 when 1 + x^d = 0
  std::vector<std::uint8_t> small_add_;
  std::vector<std::uint8_t> small_mul_;
};

bool is_prime(std::uint64_t n) noexcept;
// Returns {p, m} with q = p^m, or {0, 0} when q is not a prime power.
std::pair<std::uint64_t, std::uint32_t> prime_power_decompose(std::uint64_t q) noexcept;

}  // namespace starprod::fq
