#include "common/report_json.hpp"

#include <string>

#include "common/error.hpp"

namespace starprod::report {

using exact::BigInt;
using exact::BigRat;

namespace {

sampling::Quantity parse_quantity(const std::string& s) {
  for (auto q : {sampling::Quantity::kStarDim, sampling::Quantity::kKernelSize, sampling::Quantity::kFullDim,
                 sampling::Quantity::kIntersectionDim}) {
    if (s == sampling::quantity_name(q)) return q;
  }
  fail(ErrorCode::kParse, "unknown quantity '" + s + "'");
}

template <class Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParse, std::string(what) + ": " + e.what());
  }
}

BigInt parse_int(const Json& v) {
  BigInt out;
  require(v.is_string() && out.set_str(v.get<std::string>(), 10) == 0, ErrorCode::kParse, "bad integer field");
  return out;
}

}  // namespace

Json estimate_to_json(const sampling::Estimate& e, std::optional<double> bound) {
  Json j;
  j["quantity"] = sampling::quantity_name(e.quantity);
  j["q"] = e.params.q;
  j["n"] = e.params.n;
  j["k1"] = e.params.k1;
  j["k2"] = e.params.k2;
  j["model"] = sampling::model_name(e.model);
  j["samples"] = e.samples;
  j["seed"] = e.seed;
  j["sum"] = e.sum.get_str();
  j["sum_squares"] = e.sum_squares.get_str();
  j["mean_num"] = e.mean.get_num().get_str();
  j["mean_den"] = e.mean.get_den().get_str();
  j["mean_f64"] = exact::to_double(e.mean);
  j["stderr"] = e.std_error;
  if (bound) {
    j["bound"] = *bound;
    j["ratio"] = exact::to_double(e.mean) / *bound;
  } else {
    j["bound"] = nullptr;
    j["ratio"] = nullptr;
  }
  return j;
}

sampling::Estimate estimate_from_json(const Json& j) {
  return guarded("estimate", [&] {
    sampling::Estimate e;
    e.quantity = parse_quantity(j.at("quantity").get<std::string>());
    e.params = exact::Params::make(j.at("q").get<std::uint64_t>(), j.at("n").get<std::size_t>(),
                                   j.at("k1").get<std::size_t>(), j.at("k2").get<std::size_t>());
    e.model = sampling::parse_model(j.at("model").get<std::string>());
    e.samples = j.at("samples").get<std::uint64_t>();
    e.seed = j.at("seed").get<std::uint64_t>();
    e.sum = parse_int(j.at("sum"));
    e.sum_squares = parse_int(j.at("sum_squares"));
    e.mean = exact::make_rational(parse_int(j.at("mean_num")), parse_int(j.at("mean_den")));
    e.std_error = j.at("stderr").get<double>();
    return e;
  });
}

Json pir_to_json(const apps::PirReport& r) {
  Json j;
  j["n"] = r.n;
  j["star_dim"] = r.star_dim;
  j["rate_upper"] = exact::to_fraction_string(r.rate_upper);
  j["rate_lower"] = r.rate_lower ? Json(exact::to_fraction_string(*r.rate_lower)) : Json(nullptr);
  return j;
}

apps::PirReport pir_from_json(const Json& j) {
  return guarded("pir report", [&] {
    apps::PirReport r;
    r.n = j.at("n").get<std::size_t>();
    r.star_dim = j.at("star_dim").get<std::size_t>();
    r.rate_upper = exact::parse_rational(j.at("rate_upper").get<std::string>());
    if (!j.at("rate_lower").is_null()) r.rate_lower = exact::parse_rational(j.at("rate_lower").get<std::string>());
    return r;
  });
}

Json sdmm_to_json(const apps::SdmmReport& r) {
  Json j;
  j["servers"] = r.servers;
  j["d_star"] = r.d_star;
  j["recovery"] = r.recovery;
  j["stragglers"] = r.stragglers;
  return j;
}

apps::SdmmReport sdmm_from_json(const Json& j) {
  return guarded("sdmm report", [&] {
    apps::SdmmReport r;
    r.servers = j.at("servers").get<std::size_t>();
    r.d_star = j.at("d_star").get<std::size_t>();
    r.recovery = j.at("recovery").get<std::size_t>();
    r.stragglers = j.at("stragglers").get<std::size_t>();
    return r;
  });
}

Json csst_to_json(const apps::CsstReport& r) {
  Json j;
  j["feasible"] = r.feasible;
  j["envelope_dim"] = r.envelope_dim;
  j["c2_supplied"] = r.c2_supplied;
  j["c2_in_c1"] = r.c2_in_c1;
  j["c2_in_star_dual"] = r.c2_in_star_dual;
  j["c2_admissible"] = r.c2_admissible;
  j["distance_floor"] = r.distance_floor ? Json(*r.distance_floor) : Json(nullptr);
  return j;
}

apps::CsstReport csst_from_json(const Json& j) {
  return guarded("csst report", [&] {
    apps::CsstReport r;
    r.feasible = j.at("feasible").get<bool>();
    r.envelope_dim = j.at("envelope_dim").get<std::size_t>();
    r.c2_supplied = j.at("c2_supplied").get<bool>();
    r.c2_in_c1 = j.at("c2_in_c1").get<bool>();
    r.c2_in_star_dual = j.at("c2_in_star_dual").get<bool>();
    r.c2_admissible = j.at("c2_admissible").get<bool>();
    if (!j.at("distance_floor").is_null()) r.distance_floor = j.at("distance_floor").get<std::size_t>();
    return r;
  });
}

}  // namespace starprod::report
