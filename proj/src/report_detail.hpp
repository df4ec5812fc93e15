#pragma once

#include <json.hpp>

#include "charvanish/nonvanish.hpp"

namespace charvanish::detail {

// JSON object form of a verification report (shared between the single-report
// and whole-run serializers).  Deterministic: carries no timing.
nlohmann::ordered_json report_to_json(const VerificationReport& r);

}  // namespace charvanish::detail
