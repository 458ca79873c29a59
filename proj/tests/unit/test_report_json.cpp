#include <doctest.h>

#include "common/error.hpp"
#include "common/report_json.hpp"
#include "fqlinalg/field.hpp"

using namespace starprod;
using exact::make_rational;

TEST_CASE("estimate round trip") {
  const auto e = sampling::mc_kernel_size(exact::Params::make(3, 6, 2, 3), sampling::RandomModel::kSystematic, 3000, 8);
  const auto j = report::estimate_to_json(e, 4.5);
  CHECK(j["quantity"] == "kernel_size");
  CHECK(j["model"] == "systematic");
  CHECK(j["samples"] == 3000);
  CHECK(j["bound"] == 4.5);
  CHECK(j["sum"].is_string());
  const auto back = report::estimate_from_json(report::Json::parse(j.dump()));
  CHECK(back.sum == e.sum);
  CHECK(back.sum_squares == e.sum_squares);
  CHECK(back.mean == e.mean);
  CHECK(back.std_error == e.std_error);
  CHECK(back.params.q == 3);
  CHECK(back.params.k2 == 3);
  CHECK(back.seed == 8);
  CHECK(report::estimate_to_json(back, 4.5).dump() == j.dump());

  auto broken = j;
  broken.erase("sum");
  CHECK_THROWS_AS(report::estimate_from_json(broken), Error);
  broken = j;
  broken["mean_num"] = "abc";
  CHECK_THROWS_AS(report::estimate_from_json(broken), Error);
}

TEST_CASE("application reports round trip") {
  apps::PirReport pir{5, 3, make_rational(2, 5), make_rational(2, 5)};
  const auto pj = report::pir_to_json(pir);
  CHECK(pj["rate_upper"] == "2/5");
  const auto pb = report::pir_from_json(pj);
  CHECK(pb.star_dim == 3);
  CHECK(pb.rate_upper == pir.rate_upper);
  CHECK(pb.rate_lower == pir.rate_lower);
  apps::PirReport no_lower{5, 3, make_rational(2, 5), std::nullopt};
  CHECK_FALSE(report::pir_from_json(report::pir_to_json(no_lower)).rate_lower.has_value());

  apps::SdmmReport sdmm{5, 3, 3, 2};
  const auto sb = report::sdmm_from_json(report::sdmm_to_json(sdmm));
  CHECK(sb.servers == 5);
  CHECK(sb.recovery == 3);
  CHECK(sb.stragglers == 2);

  apps::CsstReport csst;
  csst.feasible = true;
  csst.envelope_dim = 1;
  csst.c2_supplied = true;
  csst.c2_in_c1 = true;
  csst.c2_in_star_dual = true;
  csst.c2_admissible = true;
  csst.distance_floor = 2;
  const auto cb = report::csst_from_json(report::csst_to_json(csst));
  CHECK(cb.feasible);
  CHECK(cb.c2_admissible);
  CHECK(cb.distance_floor == std::optional<std::size_t>(2));
  CHECK_THROWS_AS(report::csst_from_json(report::Json::object()), Error);
}
