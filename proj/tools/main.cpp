// umbral: exact tables of higher-order Bernoulli/Euler/Frobenius-Euler
// polynomials, multiple power sums, and machine verification of the
// umbral-calculus identities relating them. All arithmetic is exact
// rational; output is deterministic byte-for-byte.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "umbral/errors.hpp"
#include "umbral/identity_suite.hpp"
#include "umbral/output.hpp"
#include "umbral/power_sums.hpp"
#include "umbral/special_sequences.hpp"

namespace {

using umbral::Json;
using umbral::OutputRecord;
using umbral::Rational;

enum class Format { text, csv, json };

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    return Format::text;
}

Rational parse_rational(const std::string& text) { return Rational::from_string(text); }

struct KRange {
    unsigned lo = 0;
    unsigned hi = 0;
};

// Inclusive "a..b"; a bare "k" means k..k.
KRange parse_k_range(const std::string& text) {
    const auto parse_unsigned = [&](const std::string& part) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
            throw umbral::ParseError("bad k-range '" + text + "'");
        }
        return static_cast<unsigned>(std::stoul(part));
    };
    const std::size_t dots = text.find("..");
    KRange range;
    if (dots == std::string::npos) {
        range.lo = range.hi = parse_unsigned(text);
    } else {
        range.lo = parse_unsigned(text.substr(0, dots));
        range.hi = parse_unsigned(text.substr(dots + 2));
    }
    if (range.lo > range.hi) throw umbral::ParseError("empty k-range '" + text + "'");
    return range;
}

std::string join_rationals(const std::vector<Rational>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += values[i].to_string();
    }
    return out;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("UMBRAL_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

// ---------------------------------------------------------------- poly ----

struct PolyArgs {
    std::string kind;
    std::string order = "1";
    unsigned n = 0;
    std::string lambda;
    unsigned scale = 1;
    bool order_normalized = false;
    std::string format = "text";
    bool pretty = false;
};

int run_poly(const PolyArgs& args) {
    umbral::SequenceFamily family;
    if (args.kind == "bernoulli") {
        family.kind = umbral::PolyFamily::bernoulli;
    } else if (args.kind == "euler") {
        family.kind = umbral::PolyFamily::euler;
    } else {
        family.kind = umbral::PolyFamily::frobenius_euler;
        if (args.lambda.empty()) throw umbral::ParseError("frobenius-euler needs --lambda");
        family.lambda = parse_rational(args.lambda);
    }
    if (family.kind != umbral::PolyFamily::frobenius_euler && !args.lambda.empty()) {
        throw umbral::ParseError("--lambda only applies to frobenius-euler");
    }
    family.alpha = parse_rational(args.order);
    family.scale = args.scale;
    family.order_normalized = args.order_normalized;
    if (family.order_normalized && family.kind != umbral::PolyFamily::bernoulli) {
        throw umbral::ParseError("--order-normalized only applies to bernoulli");
    }

    const umbral::Polynomial p = args.scale == 1 && !args.order_normalized
                                     ? umbral::family_polynomial(family, args.n)
                                     : umbral::scaled_family_polynomial(family, args.n);

    std::string command = "poly " + args.kind + " --order " + family.alpha.to_string() +
                          " --n " + std::to_string(args.n);
    if (family.lambda) command += " --lambda " + family.lambda->to_string();
    command += " --scale " + std::to_string(args.scale);
    if (args.order_normalized) command += " --order-normalized";
    command += " --format " + args.format;
    if (args.pretty) command += " --pretty";

    const Format format = parse_format(args.format);
    if (format == Format::text) {
        std::cout << (args.pretty ? p.to_pretty_string() : p.to_list_string()) << "\n";
        return 0;
    }
    if (format == Format::csv) {
        std::cout << "kind,alpha,n,lambda,scale,coefficients,pretty\n";
        std::cout << args.kind << ',' << family.alpha.to_string() << ',' << args.n << ','
                  << (family.lambda ? family.lambda->to_string() : "") << ',' << args.scale << ','
                  << umbral::csv_field(p.to_list_string()) << ','
                  << umbral::csv_field(p.to_pretty_string()) << "\n";
        return 0;
    }

    OutputRecord record;
    record.command = command;
    record.parameters["kind"] = args.kind;
    record.parameters["alpha"] = family.alpha.to_string();
    record.parameters["n"] = args.n;
    if (family.lambda) record.parameters["lambda"] = family.lambda->to_string();
    record.parameters["scale"] = args.scale;
    record.parameters["order_normalized"] = args.order_normalized;
    Json entry = Json::object();
    entry["kind"] = args.kind;
    entry["alpha"] = family.alpha.to_string();
    entry["n"] = args.n;
    if (family.lambda) entry["lambda"] = family.lambda->to_string();
    entry["scale"] = args.scale;
    Json coeffs = Json::array();
    for (const Rational& c : p.coefficients()) coeffs.push_back(c.to_string());
    entry["coefficients"] = coeffs;
    entry["pretty"] = p.to_pretty_string();
    record.results.push_back(entry);
    std::cout << umbral::render_json(record);
    return 0;
}

// ---------------------------------------------------------------- sums ----

struct SumsArgs {
    std::string family;
    std::string k_range = "0..0";
    unsigned n = 1;
    unsigned m = 1;
    std::string lambda;
    std::string algorithm = "series";
    std::string format = "text";
    std::optional<unsigned> trunc;
};

int run_sums(const SumsArgs& args) {
    umbral::PowerSumFamily family;
    std::optional<Rational> lambda;
    if (args.family == "plain") {
        family = umbral::PowerSumFamily::plain;
    } else if (args.family == "alt") {
        family = umbral::PowerSumFamily::alternating;
    } else {
        family = umbral::PowerSumFamily::lambda_analogue;
        if (args.lambda.empty()) throw umbral::ParseError("sums lambda needs --lambda");
        lambda = parse_rational(args.lambda);
    }
    if (family != umbral::PowerSumFamily::lambda_analogue && !args.lambda.empty()) {
        throw umbral::ParseError("--lambda only applies to the lambda family");
    }
    const KRange range = parse_k_range(args.k_range);
    const auto algorithm = args.algorithm == "enum" ? umbral::PowerSumAlgorithm::enumeration
                                                    : umbral::PowerSumAlgorithm::series;

    if (args.trunc && *args.trunc < range.hi) {
        throw umbral::TruncationTooShort("--trunc " + std::to_string(*args.trunc) +
                                         " is below the top of the k range");
    }
    const unsigned k_top = args.trunc.value_or(range.hi);
    const auto table = umbral::power_sum_table(family, k_top, args.n, args.m, lambda, algorithm);

    std::string command = "sums " + args.family + " --k " + std::to_string(range.lo) + ".." +
                          std::to_string(range.hi) + " --n " + std::to_string(args.n) + " --m " +
                          std::to_string(args.m);
    if (lambda) command += " --lambda " + lambda->to_string();
    command += " --algorithm " + args.algorithm + " --format " + args.format;

    const char* symbol = family == umbral::PowerSumFamily::alternating ? "T" : "S";
    const Format format = parse_format(args.format);
    if (format == Format::text) {
        for (unsigned k = range.lo; k <= range.hi; ++k) {
            std::cout << symbol << "_" << k << "^(" << args.n << ")(" << args.m;
            if (lambda) std::cout << "|" << lambda->to_string();
            std::cout << ") = " << table[k].to_string() << "\n";
        }
        return 0;
    }
    if (format == Format::csv) {
        std::cout << "family,k,n,m,lambda,algorithm,value\n";
        for (unsigned k = range.lo; k <= range.hi; ++k) {
            std::cout << args.family << ',' << k << ',' << args.n << ',' << args.m << ','
                      << (lambda ? lambda->to_string() : "") << ',' << args.algorithm << ','
                      << table[k].to_string() << "\n";
        }
        return 0;
    }

    OutputRecord record;
    record.command = command;
    record.parameters["family"] = args.family;
    record.parameters["k"] = std::to_string(range.lo) + ".." + std::to_string(range.hi);
    record.parameters["n"] = args.n;
    record.parameters["m"] = args.m;
    if (lambda) record.parameters["lambda"] = lambda->to_string();
    record.parameters["algorithm"] = args.algorithm;
    for (unsigned k = range.lo; k <= range.hi; ++k) {
        umbral::PowerSumValue value{family, k, args.n, args.m, lambda, table[k]};
        record.results.push_back(umbral::power_sum_entry(value, algorithm));
    }
    std::cout << umbral::render_json(record);
    return 0;
}

// -------------------------------------------------------------- verify ----

struct VerifyArgs {
    std::string selection;
    unsigned n_max = 4;
    unsigned m_max = 3;
    std::vector<std::string> lambdas;
    std::vector<std::string> alphas;
    std::string expect;
    unsigned jobs = default_jobs();
    std::string format = "text";
    std::optional<unsigned> trunc;
};

std::vector<umbral::IdentityId> selection_ids(const std::string& selection) {
    using umbral::IdentityId;
    if (selection == "lemma1") {
        return {IdentityId::lemma1_b, IdentityId::lemma1_bhat, IdentityId::lemma1_e,
                IdentityId::lemma1_h};
    }
    if (selection == "thm3") return {IdentityId::thm3};
    if (selection == "thm4-corrected") return {IdentityId::thm4_corrected};
    if (selection == "thm4-printed") return {IdentityId::thm4_printed};
    if (selection == "thm5") return {IdentityId::thm5};
    if (selection == "thm6") return {IdentityId::thm6};
    if (selection == "eq16") return {IdentityId::eq16};
    if (selection == "eq17") return {IdentityId::eq17};
    // "all"
    return {IdentityId::lemma1_b, IdentityId::lemma1_bhat, IdentityId::lemma1_e,
            IdentityId::lemma1_h,  IdentityId::thm3,        IdentityId::thm4_corrected,
            IdentityId::thm4_printed, IdentityId::thm5,     IdentityId::thm6,
            IdentityId::eq16,      IdentityId::eq17};
}

std::string report_text_line(const umbral::VerificationReport& report) {
    const auto& inst = report.instance;
    std::string line(umbral::identity_name(inst.id));
    const bool lemma = inst.id <= umbral::IdentityId::lemma1_h;
    if (lemma) {
        line += " alpha=" + inst.alpha->to_string();
        line += " m=" + std::to_string(inst.m);
        if (inst.lambda) line += " lambda=" + inst.lambda->to_string();
        line += " n_max=" + std::to_string(inst.n);
    } else {
        line += " n=" + std::to_string(inst.n);
        line += " m=" + std::to_string(inst.m);
        if (inst.lambda) line += " lambda=" + inst.lambda->to_string();
    }
    line += " trunc=" + std::to_string(inst.truncation);
    switch (report.verdict) {
        case umbral::Verdict::equal:
            line += ": equal";
            break;
        case umbral::Verdict::mismatch:
            line += ": MISMATCH";
            if (report.orthogonality_failure) {
                line += " at (n,k)=(" + std::to_string(report.orthogonality_failure->first) + "," +
                        std::to_string(report.orthogonality_failure->second) + ")";
            } else {
                if (report.first_mismatch_degree) {
                    line += " at degree " + std::to_string(*report.first_mismatch_degree);
                }
                line += "; lhs=" + report.lhs.to_list_string() + "; rhs=" + report.rhs.to_list_string();
            }
            break;
        case umbral::Verdict::skipped:
            line += ": skipped (" + report.skip_reason + ")";
            break;
    }
    return line;
}

int run_verify(const VerifyArgs& args) {
    umbral::SweepConfig config;
    config.identities = selection_ids(args.selection);
    config.n_max = args.n_max;
    config.m_max = args.m_max;
    config.jobs = std::max(1u, args.jobs);
    config.truncation = args.trunc;
    if (!args.lambdas.empty()) {
        config.lambdas.clear();
        for (const auto& text : args.lambdas) config.lambdas.push_back(parse_rational(text));
    }
    if (!args.alphas.empty()) {
        config.alphas.clear();
        for (const auto& text : args.alphas) config.alphas.push_back(parse_rational(text));
    }
    const bool expect_equal = args.expect == "equal";

    const auto reports = umbral::run_sweep(config);

    unsigned equal = 0, mismatch = 0, skipped = 0;
    bool failed = false;
    for (const auto& report : reports) {
        switch (report.verdict) {
            case umbral::Verdict::equal:
                ++equal;
                break;
            case umbral::Verdict::mismatch:
                ++mismatch;
                if (expect_equal || umbral::expected_equal(report.instance.id)) failed = true;
                break;
            case umbral::Verdict::skipped:
                ++skipped;
                break;
        }
    }

    // canonical echo: jobs deliberately left out so output is identical
    // across --jobs values
    std::string command = "verify " + args.selection + " --n-max " + std::to_string(args.n_max) +
                          " --m-max " + std::to_string(args.m_max);
    command += " --lambda " + join_rationals(config.lambdas);
    command += " --alpha " + join_rationals(config.alphas);
    if (args.trunc) command += " --trunc " + std::to_string(*args.trunc);
    if (expect_equal) command += " --expect equal";
    command += " --format " + args.format;

    const Format format = parse_format(args.format);
    if (format == Format::text) {
        for (const auto& report : reports) std::cout << report_text_line(report) << "\n";
        std::cout << "summary: equal=" << equal << " mismatch=" << mismatch
                  << " skipped=" << skipped << "\n";
    } else if (format == Format::csv) {
        std::cout << "identity,n,m,lambda,alpha,trunc,status,first_mismatch_degree,reason,lhs,rhs\n";
        for (const auto& report : reports) {
            const auto& inst = report.instance;
            std::cout << umbral::identity_name(inst.id) << ',' << inst.n << ',' << inst.m << ','
                      << (inst.lambda ? inst.lambda->to_string() : "") << ','
                      << (inst.alpha ? inst.alpha->to_string() : "") << ',' << inst.truncation << ','
                      << umbral::verdict_name(report.verdict) << ','
                      << (report.first_mismatch_degree ? std::to_string(*report.first_mismatch_degree)
                                                       : "")
                      << ',' << umbral::csv_field(report.skip_reason) << ','
                      << umbral::csv_field(report.lhs.to_list_string()) << ','
                      << umbral::csv_field(report.rhs.to_list_string()) << "\n";
        }
    } else {
        OutputRecord record;
        record.command = command;
        record.parameters["selection"] = args.selection;
        record.parameters["n_max"] = args.n_max;
        record.parameters["m_max"] = args.m_max;
        Json lambdas = Json::array();
        for (const auto& l : config.lambdas) lambdas.push_back(l.to_string());
        record.parameters["lambda"] = lambdas;
        Json alphas = Json::array();
        for (const auto& a : config.alphas) alphas.push_back(a.to_string());
        record.parameters["alpha"] = alphas;
        if (args.trunc) record.parameters["trunc"] = *args.trunc;
        record.parameters["expect_equal"] = expect_equal;
        for (const auto& report : reports) record.results.push_back(umbral::report_entry(report));
        std::cout << umbral::render_json(record);
    }
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact higher-order Bernoulli/Euler/Frobenius-Euler polynomials,\n"
                 "multiple power sums, and identity verification"};
    app.require_subcommand(1);
    const auto format_check = CLI::IsMember({"text", "csv", "json"});

    PolyArgs poly;
    CLI::App* poly_cmd = app.add_subcommand("poly", "print one family polynomial");
    poly_cmd->add_option("kind", poly.kind, "bernoulli | euler | frobenius-euler")
        ->required()
        ->check(CLI::IsMember({"bernoulli", "euler", "frobenius-euler"}));
    poly_cmd->add_option("--order", poly.order, "order alpha as a rational, e.g. 2 or 1/2");
    poly_cmd->add_option("--n", poly.n, "polynomial index n")->required();
    poly_cmd->add_option("--lambda", poly.lambda, "Frobenius-Euler lambda (rational, != 1)");
    poly_cmd->add_option("--scale", poly.scale, "Lemma-1 scale m: emit m^n K_n(x/m)")
        ->check(CLI::PositiveNumber);
    poly_cmd->add_flag("--order-normalized", poly.order_normalized,
                       "divide by m^alpha (scaled Bernoulli only)");
    poly_cmd->add_option("--format", poly.format)->check(format_check);
    poly_cmd->add_flag("--pretty", poly.pretty, "print 'x^2 - x' instead of the coefficient list");

    SumsArgs sums;
    CLI::App* sums_cmd = app.add_subcommand("sums", "table of multiple power sums");
    sums_cmd->add_option("family", sums.family, "plain | alt | lambda")
        ->required()
        ->check(CLI::IsMember({"plain", "alt", "lambda"}));
    sums_cmd->add_option("--k", sums.k_range, "inclusive k range, e.g. 0..12")->required();
    sums_cmd->add_option("--n", sums.n)->required()->check(CLI::PositiveNumber);
    sums_cmd->add_option("--m", sums.m)->required()->check(CLI::PositiveNumber);
    sums_cmd->add_option("--lambda", sums.lambda, "lambda (rational, != 0)");
    sums_cmd->add_option("--algorithm", sums.algorithm, "series (default) or enum")
        ->check(CLI::IsMember({"series", "enum"}));
    sums_cmd->add_option("--format", sums.format)->check(format_check);
    sums_cmd->add_option("--trunc", sums.trunc, "series truncation override");

    VerifyArgs verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "machine-verify the polynomial identities");
    verify_cmd
        ->add_option("selection", verify.selection,
                     "lemma1 | thm3 | thm4-corrected | thm4-printed | thm5 | thm6 | eq16 | eq17 | all")
        ->required()
        ->check(CLI::IsMember({"lemma1", "thm3", "thm4-corrected", "thm4-printed", "thm5", "thm6",
                               "eq16", "eq17", "all"}));
    verify_cmd->add_option("--n-max", verify.n_max)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--m-max", verify.m_max)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--lambda", verify.lambdas,
                           "lambda sweep values (repeatable; default 2,-1,1/2,-2/3)");
    verify_cmd->add_option("--alpha", verify.alphas,
                           "Lemma-1 order sweep values (repeatable; default 1,2,3)");
    verify_cmd->add_option("--expect", verify.expect, "equal: fail on any mismatch at all")
        ->check(CLI::IsMember({"equal"}));
    verify_cmd->add_option("--jobs", verify.jobs, "parallel instances (default $UMBRAL_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", verify.format)->check(format_check);
    verify_cmd->add_option("--trunc", verify.trunc, "series truncation override");

    try {
        app.parse(argc, argv);
        if (poly_cmd->parsed()) return run_poly(poly);
        if (sums_cmd->parsed()) return run_sums(sums);
        return run_verify(verify);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const umbral::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
