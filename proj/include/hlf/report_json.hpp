#pragma once

#include "hlf/sweep.hpp"

#include <json.hpp>

namespace hlf {

/// Serializers used by the CLI and golden tests. All emit nlohmann
/// ordered_json so key order, and therefore the serialized bytes, are
/// deterministic. Exact values appear as "p/q" strings; integer fields are
/// JSON numbers when they fit in int64 and decimal strings beyond that;
/// advisory decimals live under *_dec keys.
nlohmann::ordered_json json_of_int(const Int& v);
nlohmann::ordered_json invariants_json(const FibrationNumerics& f, const InvariantSet& inv);
nlohmann::ordered_json check_result_json(const CheckResult& r);
nlohmann::ordered_json check_run_json(const FibrationNumerics& f, const std::vector<CheckResult>& results);
nlohmann::ordered_json sweep_report_json(const SweepReport& report);

}  // namespace hlf
