#include "apps/apps.hpp"

#include "common/error.hpp"

namespace starprod::apps {

using exact::BigInt;

namespace {

BigInt big(std::size_t v) { return BigInt(static_cast<unsigned long>(v)); }

}  // namespace

PirReport pir_rate_bounds(const codes::LinearCode& c, const codes::LinearCode& d, std::uint64_t budget) {
  const auto star = codes::star_product(c, d);
  PirReport r;
  r.n = c.length();
  r.star_dim = star.dim();
  r.rate_upper = exact::make_rational(big(r.n - r.star_dim), big(r.n));
  try {
    r.rate_lower = exact::make_rational(big(codes::min_distance(star, budget) - 1), big(r.n));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
  }
  return r;
}

SdmmReport sdmm_thresholds(const codes::LinearCode& ca, const codes::LinearCode& cb, std::uint64_t budget) {
  const auto star = codes::star_product(ca, cb);
  SdmmReport r;
  r.servers = ca.length();
  r.d_star = codes::min_distance(star, budget);
  r.recovery = r.servers - r.d_star + 1;
  r.stragglers = r.d_star - 1;
  return r;
}

CsstReport csst_envelope(const codes::LinearCode& c1, const std::optional<codes::LinearCode>& c2,
                         std::uint64_t budget) {
  require(c1.field()->q() == 2, ErrorCode::kNotBinary, "CSS-T pairs are defined over GF(2)");
  if (c2) {
    codes::require_compatible(c1, *c2);
  }
  const auto square = codes::star_product(c1, c1);
  // (C1 * C1)^perp is zero when the square fills the space.
  std::optional<codes::LinearCode> square_dual;
  if (square.dim() < square.length()) square_dual = codes::dual(square);

  CsstReport r;
  r.envelope_dim = square_dual ? codes::intersection_dim(c1, *square_dual) : 0;
  r.feasible = r.envelope_dim >= 1;
  if (c2) {
    r.c2_supplied = true;
    r.c2_in_c1 = codes::contains(c1, *c2);
    r.c2_in_star_dual = square_dual && codes::contains(*square_dual, *c2);
    r.c2_admissible = r.c2_in_c1 && r.c2_in_star_dual;
    if (c2->dim() < c2->length()) r.distance_floor = codes::dual_distance(*c2, budget);
  }
  return r;
}

}  // namespace starprod::apps
