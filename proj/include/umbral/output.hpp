#pragma once

#include <json.hpp>

#include <string>

#include "umbral/identity_suite.hpp"
#include "umbral/power_sums.hpp"

namespace umbral {

// Insertion-ordered JSON keeps key order deterministic across runs.
using Json = nlohmann::ordered_json;

inline constexpr const char* kOutputFormatVersion = "1";

/**
 * Everything a command emits: a canonical echo of the invocation, the
 * parsed parameters, and the payload rows. The JSON rendering is the
 * machine contract (schemas/output.schema.json); it round-trips through
 * to_json / output_record_from_json exactly. Scalars are always "p/q"
 * strings -- no floating point anywhere.
 */
struct OutputRecord {
    std::string version = kOutputFormatVersion;
    std::string command;
    Json parameters = Json::object();
    Json results = Json::array();

    bool operator==(const OutputRecord&) const = default;
};

Json to_json(const OutputRecord& record);
OutputRecord output_record_from_json(const Json& j);

/// Full JSON rendering (2-space indent, trailing newline).
std::string render_json(const OutputRecord& record);

/// One verify row: identity, indices, status, and mismatch diagnostics.
Json report_entry(const VerificationReport& report);

/// One power-sum row.
Json power_sum_entry(const PowerSumValue& value, PowerSumAlgorithm algorithm);

std::string_view power_sum_family_name(PowerSumFamily family);  // "plain" / "alt" / "lambda"
std::string_view verdict_name(Verdict verdict);

/// RFC-4180-ish quoting: wraps in quotes when the field contains , " or newline.
std::string csv_field(std::string_view field);

}  // namespace umbral
