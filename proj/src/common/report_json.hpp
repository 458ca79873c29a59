#pragma once

#include <optional>

#include <json.hpp>

#include "apps/apps.hpp"
#include "sampling/monte_carlo.hpp"

namespace starprod::report {

using Json = nlohmann::ordered_json;

// Big integers and rationals are emitted as decimal strings ("num/den" for
// rationals) so nothing is lost to double precision.
Json estimate_to_json(const sampling::Estimate& e, std::optional<double> bound = std::nullopt);
// Errors: Parse on missing or malformed fields.
sampling::Estimate estimate_from_json(const Json& j);

Json pir_to_json(const apps::PirReport& r);
apps::PirReport pir_from_json(const Json& j);
Json sdmm_to_json(const apps::SdmmReport& r);
apps::SdmmReport sdmm_from_json(const Json& j);
Json csst_to_json(const apps::CsstReport& r);
apps::CsstReport csst_from_json(const Json& j);

}  // namespace starprod::report
