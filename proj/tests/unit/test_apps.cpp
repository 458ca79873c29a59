#include <doctest.h>

#include <vector>

#include "apps/apps.hpp"
#include "common/error.hpp"
#include "fqlinalg/field.hpp"

using namespace starprod;
using exact::make_rational;
using fq::Elem;
using fq::Field;

namespace {

codes::LinearCode grs_5_2() {
  const std::vector<Elem> points{0, 1, 2, 3, 4};
  return codes::evaluation_code(Field::of_order(5), points, 2);
}

}  // namespace

TEST_CASE("PIR rate bounds") {
  auto f3 = Field::of_order(3);
  const auto full = apps::pir_rate_bounds(codes::full_space(f3, 4), codes::full_space(f3, 4));
  CHECK(full.star_dim == 4);
  CHECK(full.rate_upper == 0);

  const auto grs = apps::pir_rate_bounds(grs_5_2(), grs_5_2());
  CHECK(grs.n == 5);
  CHECK(grs.star_dim == 3);
  CHECK(grs.rate_upper == make_rational(2, 5));
  REQUIRE(grs.rate_lower.has_value());
  CHECK(*grs.rate_lower == make_rational(2, 5));  // d = 3

  auto f2 = Field::of_order(2);
  const auto d = codes::LinearCode::from_matrix(fq::Mat(f2, 2, 5, {1, 0, 1, 1, 0, 0, 1, 0, 1, 1}));
  const auto rep = apps::pir_rate_bounds(codes::repetition_code(f2, 5), d);
  CHECK(rep.rate_upper == make_rational(3, 5));

  CHECK_THROWS_AS(apps::pir_rate_bounds(grs_5_2(), codes::full_space(f2, 5)), Error);
  // A star code too large to enumerate drops only the lower bound.
  auto f7 = Field::of_order(7);
  const auto big = apps::pir_rate_bounds(codes::full_space(f7, 12), codes::full_space(f7, 12), 1000);
  CHECK_FALSE(big.rate_lower.has_value());
}

TEST_CASE("SDMM thresholds") {
  auto f2 = Field::of_order(2);
  const auto full = apps::sdmm_thresholds(codes::full_space(f2, 4), codes::full_space(f2, 4));
  CHECK(full.d_star == 1);
  CHECK(full.recovery == 4);
  CHECK(full.stragglers == 0);

  const auto grs = apps::sdmm_thresholds(grs_5_2(), grs_5_2());
  CHECK(grs.servers == 5);
  CHECK(grs.d_star == 3);
  CHECK(grs.recovery == 3);
  CHECK(grs.stragglers == 2);

  const auto rep = apps::sdmm_thresholds(codes::repetition_code(f2, 4), codes::repetition_code(f2, 4));
  CHECK(rep.d_star == 4);
  CHECK(rep.recovery == 1);
  CHECK(rep.stragglers == 3);
}

TEST_CASE("CSS-T envelope") {
  auto f2 = Field::of_order(2);
  const auto r2 = apps::csst_envelope(codes::repetition_code(f2, 2), std::nullopt);
  CHECK(r2.feasible);
  CHECK(r2.envelope_dim == 1);
  CHECK_FALSE(r2.c2_supplied);

  const auto r3 = apps::csst_envelope(codes::repetition_code(f2, 3), std::nullopt);
  CHECK_FALSE(r3.feasible);
  CHECK(r3.envelope_dim == 0);

  CHECK_FALSE(apps::csst_envelope(codes::full_space(f2, 4), std::nullopt).feasible);

  // C1 = even-weight [4,3]: C1*C1 = F_2^4, so nothing is admissible.
  const auto even4 = codes::dual(codes::repetition_code(f2, 4));
  CHECK_FALSE(apps::csst_envelope(even4, std::nullopt).feasible);

  // C1 = <1111, 1100>: C1*C1 = C1 and C1^perp = <1100, 0011> contains C1.
  const auto c1 = codes::LinearCode::from_matrix(fq::Mat(f2, 2, 4, {1, 1, 1, 1, 1, 1, 0, 0}));
  const auto rep4 = codes::repetition_code(f2, 4);
  const auto r = apps::csst_envelope(c1, rep4);
  CHECK(r.feasible);
  CHECK(r.envelope_dim == 2);
  CHECK(r.c2_supplied);
  CHECK(r.c2_in_c1);
  CHECK(r.c2_in_star_dual);
  CHECK(r.c2_admissible);
  REQUIRE(r.distance_floor.has_value());
  CHECK(*r.distance_floor == 2);

  CHECK(apps::csst_envelope(c1, c1).c2_admissible);
  const auto outside = codes::LinearCode::from_matrix(fq::Mat(f2, 1, 4, {1, 0, 1, 0}));
  const auto bad = apps::csst_envelope(c1, outside);
  CHECK_FALSE(bad.c2_in_c1);
  CHECK_FALSE(bad.c2_admissible);
  // 1001 = 1110 + 0111 lies in C1, but 1001 . 1110 = 1 with 1110 in C1*C1.
  const auto c1b = codes::LinearCode::from_matrix(fq::Mat(f2, 2, 4, {1, 1, 1, 0, 0, 1, 1, 1}));
  const auto c2b = codes::LinearCode::from_matrix(fq::Mat(f2, 1, 4, {1, 0, 0, 1}));
  const auto notdual = apps::csst_envelope(c1b, c2b);
  CHECK(notdual.c2_in_c1);
  CHECK_FALSE(notdual.c2_in_star_dual);
  CHECK_FALSE(notdual.c2_admissible);

  try {
    apps::csst_envelope(codes::repetition_code(Field::of_order(3), 2), std::nullopt);
    FAIL("expected NotBinary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotBinary);
  }
}
