#include "umbral/output.hpp"

namespace umbral {

namespace {

Json coefficients_json(const Polynomial& p) {
    Json a = Json::array();
    for (const Rational& c : p.coefficients()) a.push_back(c.to_string());
    return a;
}

}  // namespace

Json to_json(const OutputRecord& record) {
    Json j = Json::object();
    j["version"] = record.version;
    j["command"] = record.command;
    j["parameters"] = record.parameters;
    j["results"] = record.results;
    return j;
}

OutputRecord output_record_from_json(const Json& j) {
    OutputRecord record;
    record.version = j.at("version").get<std::string>();
    record.command = j.at("command").get<std::string>();
    record.parameters = j.at("parameters");
    record.results = j.at("results");
    return record;
}

std::string render_json(const OutputRecord& record) { return to_json(record).dump(2) + "\n"; }

Json report_entry(const VerificationReport& report) {
    const IdentityInstance& inst = report.instance;
    Json e = Json::object();
    e["identity"] = std::string(identity_name(inst.id));
    e["n"] = inst.n;
    e["m"] = inst.m;
    if (inst.lambda) e["lambda"] = inst.lambda->to_string();
    if (inst.alpha) e["alpha"] = inst.alpha->to_string();
    e["trunc"] = inst.truncation;
    e["status"] = std::string(verdict_name(report.verdict));
    if (report.verdict == Verdict::mismatch) {
        if (report.first_mismatch_degree) e["first_mismatch_degree"] = *report.first_mismatch_degree;
        if (report.orthogonality_failure) {
            e["orthogonality_failure"] =
                Json::array({report.orthogonality_failure->first, report.orthogonality_failure->second});
        } else {
            e["lhs"] = coefficients_json(report.lhs);
            e["rhs"] = coefficients_json(report.rhs);
        }
    }
    if (report.verdict == Verdict::skipped) e["reason"] = report.skip_reason;
    return e;
}

Json power_sum_entry(const PowerSumValue& value, PowerSumAlgorithm algorithm) {
    Json e = Json::object();
    e["family"] = std::string(power_sum_family_name(value.family));
    e["k"] = value.k;
    e["n"] = value.n;
    e["m"] = value.m;
    if (value.lambda) e["lambda"] = value.lambda->to_string();
    e["algorithm"] = algorithm == PowerSumAlgorithm::series ? "series" : "enum";
    e["value"] = value.value.to_string();
    return e;
}

std::string_view power_sum_family_name(PowerSumFamily family) {
    switch (family) {
        case PowerSumFamily::plain:
            return "plain";
        case PowerSumFamily::alternating:
            return "alt";
        case PowerSumFamily::lambda_analogue:
            return "lambda";
    }
    return "?";
}

std::string_view verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::equal:
            return "equal";
        case Verdict::mismatch:
            return "mismatch";
        case Verdict::skipped:
            return "skipped";
    }
    return "?";
}

std::string csv_field(std::string_view field) {
    if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace umbral
