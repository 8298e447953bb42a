// Acceptance suite: runs every contract criterion end to end at full size
// and prints one PASS/FAIL line per criterion. Exact arithmetic throughout;
// there is no tolerance knob anywhere.

#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "support/bivariate_oracle.hpp"
#include "support/schema_check.hpp"
#include "support/subprocess.hpp"
#include "umbral/combinatorics.hpp"
#include "umbral/errors.hpp"
#include "umbral/identity_suite.hpp"
#include "umbral/output.hpp"
#include "umbral/power_sums.hpp"
#include "umbral/special_sequences.hpp"
#include "umbral/umbral_ops.hpp"

using namespace umbral;

namespace {

int failures = 0;

void criterion(int number, const std::string& description, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("%s criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number, description.c_str(),
                note.c_str());
    if (!ok) ++failures;
}

bool theorem3_grid() {
    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned m = 1; m <= 5; ++m) {
            if (verify_theorem3(n, m).verdict != Verdict::equal) return false;
        }
    }
    return true;
}

bool theorem4_grid_and_counterexample() {
    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned m = 1; m <= 5; ++m) {
            if (verify_theorem4(n, m, false).verdict != Verdict::equal) return false;
        }
    }
    // Independent brute-force expansion of the printed right side at (2,1),
    // using only enumeration power sums and direct binomial/stirling values.
    Polynomial brute;
    const unsigned n = 2, m = 1;
    for (unsigned r = 0; r < n; ++r) {
        for (unsigned s = 0; s <= r; ++s) {
            for (unsigned k = 0; k <= s; ++k) {
                const Rational c = Rational(binomial(r, s) * binomial(n - 1, r) * binomial(s, k)) /
                                   Rational(binomial(2 * n - 1 - r, n)) *
                                   Rational(-static_cast<long>(n)).pow(s - k) *
                                   Rational(stirling2(2 * n - 1 - r, n)) *
                                   multiple_power_sum(k, n, m, PowerSumAlgorithm::enumeration).value;
                brute += Polynomial::monomial(r - s, c);
            }
        }
    }
    if (brute != Polynomial{Rational(1), Rational(1)}) return false;  // x + 1

    const VerificationReport printed = verify_theorem4(2, 1, true);
    return printed.verdict == Verdict::mismatch &&
           printed.lhs == Polynomial{Rational(-1), Rational(1)} &&
           printed.rhs == brute;
}

bool theorem5_grid_and_precondition() {
    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned m : {1u, 3u, 5u}) {
            if (verify_theorem5(n, m).verdict != Verdict::equal) return false;
        }
    }
    for (unsigned m : {2u, 4u}) {
        try {
            verify_theorem5(3, m);
            return false;
        } catch (const EvenModulus&) {
        }
    }
    return true;
}

bool theorem6_grid_with_skips() {
    SweepConfig config;
    config.identities = {IdentityId::thm6};
    config.n_max = 6;
    config.m_max = 4;
    config.lambdas = {Rational(2), Rational(-1), Rational(1, 2), Rational(-2, 3)};
    const auto reports = run_sweep(config);
    if (reports.size() != 6 * 4 * 4) return false;
    unsigned skipped = 0;
    for (const auto& report : reports) {
        const bool unit_power = report.instance.lambda->pow(report.instance.m).is_one();
        if (unit_power) {
            if (report.verdict != Verdict::skipped || report.skip_reason.empty()) return false;
            ++skipped;
        } else if (report.verdict != Verdict::equal) {
            return false;
        }
    }
    return skipped == 6 * 2;  // lambda = -1 at m = 2 and m = 4, for each n
}

bool dual_algorithm_power_sums() {
    const std::vector<std::optional<Rational>> lambdas{Rational(1), Rational(2), Rational(-1),
                                                       Rational(1, 2)};
    for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned m = 1; m <= 5; ++m) {
            for (const PowerSumFamily family :
                 {PowerSumFamily::plain, PowerSumFamily::alternating, PowerSumFamily::lambda_analogue}) {
                if (family == PowerSumFamily::lambda_analogue) {
                    for (const auto& lambda : lambdas) {
                        if (power_sum_table(family, 12, n, m, lambda, PowerSumAlgorithm::series) !=
                            power_sum_table(family, 12, n, m, lambda, PowerSumAlgorithm::enumeration)) {
                            return false;
                        }
                    }
                } else if (power_sum_table(family, 12, n, m, std::nullopt, PowerSumAlgorithm::series) !=
                           power_sum_table(family, 12, n, m, std::nullopt,
                                           PowerSumAlgorithm::enumeration)) {
                    return false;
                }
            }
        }
    }
    if (multiple_power_sum(1, 2, 2).value != Rational(12)) return false;
    if (alternating_power_sum(1, 2, 3).value != Rational(4)) return false;
    for (const auto& lambda : lambdas) {
        for (unsigned n = 1; n <= 6; ++n) {
            for (unsigned k = 0; k <= 12; ++k) {
                if (lambda_power_sum(k, n, 1, *lambda).value !=
                    lambda->pow(-static_cast<long>(n)) * Rational(n).pow(k)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool lemma1_orthogonality_and_fault() {
    const std::vector<Rational> alphas{Rational(1), Rational(2), Rational(3)};
    const std::vector<Rational> lambdas{Rational(2), Rational(-1), Rational(1, 2), Rational(-2, 3)};
    for (unsigned m = 1; m <= 4; ++m) {
        for (const Rational& alpha : alphas) {
            for (const IdentityId id :
                 {IdentityId::lemma1_b, IdentityId::lemma1_bhat, IdentityId::lemma1_e}) {
                if (verify_lemma1(id, alpha, m, 10).verdict != Verdict::equal) return false;
            }
            for (const Rational& lambda : lambdas) {
                if (verify_lemma1(IdentityId::lemma1_h, alpha, m, 10, lambda).verdict !=
                    Verdict::equal) {
                    return false;
                }
            }
        }
    }
    // single-coefficient fault must be caught
    SequenceFamily family{PolyFamily::euler, Rational(2), std::nullopt, 3, false};
    std::vector<Polynomial> polys;
    for (unsigned j = 0; j <= 10; ++j) polys.push_back(scaled_family_polynomial(family, j));
    polys[7] += Polynomial::monomial(3, Rational(1, 999));
    const TruncatedSeries g = lemma1_g_series(family, 22);
    const TruncatedSeries f = TruncatedSeries::monomial(1, 22);
    return !sheffer_orthogonality_check(g, f, polys).ok;
}

bool transfer_and_bivariate_consistency() {
    for (unsigned n = 1; n <= 8; ++n) {
        if (verify_eq16(n).verdict != Verdict::equal) return false;
        for (unsigned m = 1; m <= 4; ++m) {
            if (verify_eq17(n, m).verdict != Verdict::equal) return false;
        }
    }
    const std::vector<Rational> alphas{Rational(1), Rational(2), Rational(3), Rational(1, 2)};
    for (const Rational& alpha : alphas) {
        for (unsigned n = 0; n <= 10; ++n) {
            if (bernoulli_polynomial(alpha, n) !=
                testing::bivariate_family_polynomial(PolyFamily::bernoulli, alpha, std::nullopt, n)) {
                return false;
            }
            if (euler_polynomial(alpha, n) !=
                testing::bivariate_family_polynomial(PolyFamily::euler, alpha, std::nullopt, n)) {
                return false;
            }
            for (const Rational& lambda : {Rational(2), Rational(-2, 3)}) {
                if (frobenius_euler_polynomial(alpha, n, lambda) !=
                    testing::bivariate_family_polynomial(PolyFamily::frobenius_euler, alpha, lambda, n)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool cross_family_collapses() {
    for (unsigned n = 0; n <= 20; ++n) {
        if (frobenius_euler_polynomial(Rational(1), n, Rational(-1)) !=
            euler_polynomial(Rational(1), n)) {
            return false;
        }
    }
    for (unsigned n = 0; n <= 12; ++n) {
        if (bernoulli_polynomial(Rational(0), n) != Polynomial::monomial(n)) return false;
        if (euler_polynomial(Rational(0), n) != Polynomial::monomial(n)) return false;
    }
    const auto bernoulli = sequence_numbers(PolyFamily::bernoulli, Rational(1), std::nullopt, 16);
    for (unsigned n = 1; n <= 15; ++n) {
        Rational acc(0);
        for (unsigned k = 0; k <= n; ++k) {
            acc += Rational(binomial(n + 1, static_cast<long>(k))) * bernoulli[k];
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

bool cli_determinism_and_schema() {
    const std::string cli = testing::cli_path();
    std::ifstream in(testing::schema_path());
    if (!in.good()) return false;
    const testing::SchemaChecker schema(nlohmann::json::parse(in));

    const std::vector<std::string> json_commands{
        " poly bernoulli --order 2 --n 4 --format json",
        " poly euler --order 1/2 --n 3 --format json",
        " poly frobenius-euler --order 2 --n 3 --lambda -2/3 --scale 3 --format json",
        " sums plain --n 3 --m 3 --k 0..6 --format json",
        " sums alt --n 2 --m 3 --k 0..4 --algorithm enum --format json",
        " sums lambda --n 2 --m 2 --k 0..4 --lambda 1/2 --format json",
        " verify thm3 --n-max 3 --m-max 3 --format json",
        " verify thm4-printed --n-max 2 --m-max 2 --format json",
        " verify lemma1 --n-max 4 --m-max 2 --format json",
        " verify all --n-max 2 --m-max 2 --format json",
    };
    for (const auto& command : json_commands) {
        const auto first = testing::run_command(cli + command);
        const auto second = testing::run_command(cli + command);
        if (first.exit_code != 0 || first.output != second.output) return false;
        if (!schema.validate(nlohmann::json::parse(first.output))) return false;
    }

    // byte-identical payloads regardless of --jobs
    const std::string sweep = cli + " verify all --n-max 3 --m-max 2 --format json";
    const auto reference = testing::run_command(sweep);
    if (reference.exit_code != 0) return false;
    for (const std::string jobs : {" --jobs 1", " --jobs 2", " --jobs 4"}) {
        const auto run = testing::run_command(sweep + jobs);
        if (run.exit_code != 0 || run.output != reference.output) return false;
    }
    const auto text_a = testing::run_command(cli + " verify all --n-max 2 --m-max 2");
    const auto text_b = testing::run_command(cli + " verify all --n-max 2 --m-max 2 --jobs 3");
    return text_a.exit_code == 0 && text_a.output == text_b.output;
}

}  // namespace

int main() {
    criterion(1, "Theorem 3 sweep equal for n <= 8, m <= 5", theorem3_grid);
    criterion(2, "Theorem 4 corrected equal on grid; printed mismatches at (2,1) as x-1 vs x+1",
              theorem4_grid_and_counterexample);
    criterion(3, "Theorem 5 equal for n <= 8, m in {1,3,5}; even m raises", theorem5_grid_and_precondition);
    criterion(4, "Theorem 6 equal for n <= 6, m <= 4 over the lambda set; lambda^m = 1 skipped",
              theorem6_grid_with_skips);
    criterion(5, "power sums: enumeration = series on the full grid, spot values hold",
              dual_algorithm_power_sums);
    criterion(6, "Lemma 1 orthogonality for all four families; injected fault detected",
              lemma1_orthogonality_and_fault);
    criterion(7, "transfer formula matches closed forms; construction matches bivariate oracle",
              transfer_and_bivariate_consistency);
    criterion(8, "cross-family collapses (H|-1 = E, order 0, Bernoulli recurrence)",
              cross_family_collapses);
    criterion(9, "CLI determinism across runs and --jobs; JSON schema validates",
              cli_determinism_and_schema);

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
