#include "umbral/identity_suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <mutex>
#include <thread>

#include "umbral/combinatorics.hpp"
#include "umbral/errors.hpp"
#include "umbral/power_sums.hpp"
#include "umbral/umbral_ops.hpp"

namespace umbral {

namespace {

constexpr std::string_view kIdentityNames[] = {
    "Lemma1.B", "Lemma1.Bhat", "Lemma1.E", "Lemma1.H", "Thm3", "Thm4.corrected",
    "Thm4.printed", "Thm5", "Thm6", "Eq16", "Eq17",
};

unsigned default_truncation(unsigned n) { return 2 * n + 2; }

VerificationReport compare(IdentityInstance instance, Polynomial lhs, Polynomial rhs) {
    VerificationReport report;
    report.instance = std::move(instance);
    report.verdict = lhs == rhs ? Verdict::equal : Verdict::mismatch;
    if (report.verdict == Verdict::mismatch) {
        const unsigned top = static_cast<unsigned>(std::max(lhs.degree(), rhs.degree()));
        for (unsigned d = 0; d <= top; ++d) {
            if (lhs.coeff(d) != rhs.coeff(d)) {
                report.first_mismatch_degree = d;
                break;
            }
        }
    }
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    return report;
}

Rational minus_n_power(unsigned n, unsigned e) { return Rational(-static_cast<long>(n)).pow(e); }

// Theorem 3's left side, which Thm4.printed reuses verbatim.
Polynomial theorem3_lhs(unsigned n, unsigned m) {
    const auto sums = power_sum_table(PowerSumFamily::plain, n - 1, n, m, std::nullopt);
    std::vector<Rational> coeffs(n, Rational(0));
    for (unsigned r = 0; r < n; ++r) {
        const Rational outer = Rational(binomial(n - 1, r) * stirling2(2 * n - 1 - r, n)) /
                               Rational(binomial(2 * n - 1 - r, n));
        for (unsigned s = 0; s <= r; ++s) {
            Rational inner(0);
            for (unsigned k = 0; k <= s; ++k) {
                inner += Rational(binomial(s, k)) * minus_n_power(n, s - k) * sums[k];
            }
            coeffs[r - s] += outer * Rational(binomial(r, s)) * inner;
        }
    }
    return Polynomial(std::move(coeffs));
}

Polynomial theorem3_rhs(unsigned n, unsigned m) {
    Polynomial rhs;
    const Rational mr(static_cast<long>(m));
    for (unsigned r = 0; r < n; ++r) {
        for (unsigned s = 0; s <= r; ++s) {
            const Rational c = Rational(binomial(r, s) * binomial(n - 1, r)) /
                               Rational(binomial(s + n, n) * binomial(2 * n - 1 - r, n)) *
                               Rational(stirling2(s + n, n) * stirling2(2 * n - 1 - r, n)) *
                               mr.pow(n + s);
            rhs += bernoulli_polynomial(Rational(static_cast<long>(n)), r - s) * c;
        }
    }
    return rhs;
}

// f = t^2/(e^{mt}-1) built at the given truncation order.
TruncatedSeries transfer_delta_series(unsigned m, unsigned order) {
    const TruncatedSeries emt =
        series_from_exponential(Rational(static_cast<long>(m)), order + 1) - TruncatedSeries::one(order + 1);
    return TruncatedSeries::monomial(1, order) * series_recip(emt.shift_div_t(1));
}

Polynomial stirling_transfer_closed_form(unsigned n, unsigned m) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    const Rational mr(static_cast<long>(m));
    for (unsigned r = 0; r < n; ++r) {
        coeffs[r + 1] = Rational(binomial(n - 1, r) * stirling2(2 * n - 1 - r, n)) /
                        Rational(binomial(2 * n - 1 - r, n)) * mr.pow(2 * n - 1 - r);
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace

std::string_view identity_name(IdentityId id) { return kIdentityNames[static_cast<int>(id)]; }

std::optional<IdentityId> identity_from_name(std::string_view name) {
    for (int i = 0; i < static_cast<int>(std::size(kIdentityNames)); ++i) {
        if (kIdentityNames[i] == name) return static_cast<IdentityId>(i);
    }
    return std::nullopt;
}

bool expected_equal(IdentityId id) { return id != IdentityId::thm4_printed; }

VerificationReport verify_lemma1(IdentityId family_id, const Rational& alpha, unsigned m, unsigned n_max,
                                 const std::optional<Rational>& lambda,
                                 std::optional<unsigned> truncation) {
    SequenceFamily family;
    family.alpha = alpha;
    family.scale = m;
    switch (family_id) {
        case IdentityId::lemma1_b:
            family.kind = PolyFamily::bernoulli;
            break;
        case IdentityId::lemma1_bhat:
            family.kind = PolyFamily::bernoulli;
            family.order_normalized = true;
            break;
        case IdentityId::lemma1_e:
            family.kind = PolyFamily::euler;
            break;
        case IdentityId::lemma1_h:
            family.kind = PolyFamily::frobenius_euler;
            family.lambda = lambda;
            break;
        default:
            throw Error("verify_lemma1 needs a Lemma1.* identity id");
    }

    const unsigned trunc = truncation.value_or(default_truncation(n_max));
    IdentityInstance instance{family_id, n_max, m, family.lambda, alpha, trunc};

    std::vector<Polynomial> polys;
    polys.reserve(n_max + 1);
    for (unsigned j = 0; j <= n_max; ++j) polys.push_back(scaled_family_polynomial(family, j));

    const TruncatedSeries g = lemma1_g_series(family, trunc);
    const TruncatedSeries f = TruncatedSeries::monomial(1, trunc);
    const ShefferCheckResult check = sheffer_orthogonality_check(g, f, polys);

    VerificationReport report;
    report.instance = std::move(instance);
    report.verdict = check.ok ? Verdict::equal : Verdict::mismatch;
    report.orthogonality_failure = check.first_failure;
    return report;
}

VerificationReport verify_theorem3(unsigned n, unsigned m, std::optional<unsigned> truncation) {
    if (n == 0 || m == 0) throw Error("Theorem 3 needs n, m >= 1");
    const unsigned trunc = truncation.value_or(default_truncation(n));
    return compare({IdentityId::thm3, n, m, std::nullopt, std::nullopt, trunc},
                   theorem3_lhs(n, m), theorem3_rhs(n, m));
}

VerificationReport verify_theorem4(unsigned n, unsigned m, bool printed,
                                   std::optional<unsigned> truncation) {
    if (n == 0 || m == 0) throw Error("Theorem 4 needs n, m >= 1");
    const unsigned trunc = truncation.value_or(default_truncation(n));
    const IdentityId id = printed ? IdentityId::thm4_printed : IdentityId::thm4_corrected;
    const Rational order(static_cast<long>(n));
    const Polynomial lhs = bernoulli_polynomial(order, n - 1);

    Polynomial rhs;
    if (printed) {
        rhs = theorem3_lhs(n, m);
    } else {
        const auto sums = power_sum_table(PowerSumFamily::plain, n - 1, n, m, std::nullopt);
        const Rational mr(static_cast<long>(m));
        for (unsigned s = 0; s < n; ++s) {
            Rational inner(0);
            for (unsigned k = 0; k <= s; ++k) {
                inner += Rational(binomial(s, k)) * minus_n_power(n, s - k) * sums[k];
            }
            rhs += bernoulli_polynomial(order, n - 1 - s).scale_argument(m) *
                   (inner * Rational(binomial(n - 1, s)) * mr.pow(-static_cast<long>(s) - 1));
        }
    }
    return compare({id, n, m, std::nullopt, std::nullopt, trunc}, lhs, rhs);
}

VerificationReport verify_theorem5(unsigned n, unsigned m, std::optional<unsigned> truncation) {
    if (n == 0 || m == 0) throw Error("Theorem 5 needs n, m >= 1");
    if (m % 2 == 0) throw EvenModulus("Theorem 5 needs odd m, got " + std::to_string(m));
    const unsigned trunc = truncation.value_or(default_truncation(n));
    const Rational order(static_cast<long>(n));
    const Polynomial lhs = euler_polynomial(order, n - 1);

    const auto sums = power_sum_table(PowerSumFamily::alternating, n - 1, n, m, std::nullopt);
    const Rational mr(static_cast<long>(m));
    const Rational sign = n % 2 ? Rational(-1) : Rational(1);
    Polynomial rhs;
    for (unsigned s = 0; s < n; ++s) {
        Rational inner(0);
        for (unsigned k = 0; k <= s; ++k) {
            inner += Rational(binomial(s, k)) * minus_n_power(n, s - k) * sums[k];
        }
        rhs += euler_polynomial(order, n - 1 - s).scale_argument(m) *
               (inner * Rational(binomial(n - 1, s)) * mr.pow(static_cast<long>(n) - s - 1));
    }
    rhs *= sign;
    return compare({IdentityId::thm5, n, m, std::nullopt, std::nullopt, trunc}, lhs, rhs);
}

VerificationReport verify_theorem6(unsigned n, unsigned m, const Rational& lambda,
                                   std::optional<unsigned> truncation) {
    if (n == 0 || m == 0) throw Error("Theorem 6 needs n, m >= 1");
    if (lambda.is_zero()) throw LambdaForbidden("Theorem 6 needs lambda != 0");
    if (lambda.is_one()) throw LambdaForbidden("Theorem 6 needs lambda != 1");
    const Rational lambda_m = lambda.pow(static_cast<long>(m));
    if (lambda_m.is_one()) {
        throw LambdaForbidden("Theorem 6 needs lambda^m != 1, got lambda = " + lambda.to_string() +
                              ", m = " + std::to_string(m));
    }
    const unsigned trunc = truncation.value_or(default_truncation(n));
    const Rational order(static_cast<long>(n));
    const Polynomial lhs = frobenius_euler_polynomial(order, n - 1, lambda);

    const auto sums = power_sum_table(PowerSumFamily::lambda_analogue, n - 1, n, m, lambda);
    const Rational mr(static_cast<long>(m));
    const Rational prefactor =
        ((Rational(1) - lambda) / (Rational(1) - lambda_m)).pow(n) *
        lambda.pow(static_cast<long>(m) * static_cast<long>(n));
    Polynomial rhs;
    for (unsigned s = 0; s < n; ++s) {
        Rational inner(0);
        for (unsigned k = 0; k <= s; ++k) {
            inner += Rational(binomial(s, k)) * minus_n_power(n, s - k) * sums[k];
        }
        rhs += frobenius_euler_polynomial(order, n - 1 - s, lambda_m).scale_argument(m) *
               (inner * Rational(binomial(n - 1, s)) * mr.pow(static_cast<long>(n) - 1 - s));
    }
    rhs *= prefactor;
    return compare({IdentityId::thm6, n, m, lambda, std::nullopt, trunc}, lhs, rhs);
}

VerificationReport verify_eq16(unsigned n, std::optional<unsigned> truncation) {
    if (n == 0) throw Error("Eq16 needs n >= 1");
    const unsigned trunc = truncation.value_or(default_truncation(n));
    const Polynomial via_transfer =
        transfer_polynomial(TruncatedSeries::one(trunc), transfer_delta_series(1, trunc), n);
    return compare({IdentityId::eq16, n, 1, std::nullopt, std::nullopt, trunc},
                   stirling_transfer_closed_form(n, 1), via_transfer);
}

VerificationReport verify_eq17(unsigned n, unsigned m, std::optional<unsigned> truncation) {
    if (n == 0 || m == 0) throw Error("Eq17 needs n, m >= 1");
    const unsigned trunc = truncation.value_or(default_truncation(n));
    const Polynomial via_transfer =
        transfer_polynomial(TruncatedSeries::one(trunc), transfer_delta_series(m, trunc), n);
    return compare({IdentityId::eq17, n, m, std::nullopt, std::nullopt, trunc},
                   stirling_transfer_closed_form(n, m), via_transfer);
}

std::vector<Rational> SweepConfig::default_sweep_lambdas() {
    return {Rational(-1), Rational(-2, 3), Rational(1, 2), Rational(2)};
}

std::vector<Rational> SweepConfig::default_sweep_alphas() {
    return {Rational(1), Rational(2), Rational(3)};
}

namespace {

std::vector<Rational> sorted_unique(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::vector<IdentityInstance> enumerate_instances(const SweepConfig& config) {
    std::vector<IdentityId> ids = config.identities;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    const auto lambdas = sorted_unique(config.lambdas);
    const auto alphas = sorted_unique(config.alphas);

    std::vector<IdentityInstance> instances;
    for (const IdentityId id : ids) {
        switch (id) {
            case IdentityId::lemma1_b:
            case IdentityId::lemma1_bhat:
            case IdentityId::lemma1_e:
                for (unsigned m = 1; m <= config.m_max; ++m) {
                    for (const Rational& alpha : alphas) {
                        instances.push_back({id, config.n_max, m, std::nullopt, alpha, 0});
                    }
                }
                break;
            case IdentityId::lemma1_h:
                for (unsigned m = 1; m <= config.m_max; ++m) {
                    for (const Rational& lambda : lambdas) {
                        for (const Rational& alpha : alphas) {
                            instances.push_back({id, config.n_max, m, lambda, alpha, 0});
                        }
                    }
                }
                break;
            case IdentityId::thm3:
            case IdentityId::thm4_corrected:
            case IdentityId::thm4_printed:
            case IdentityId::thm5:
            case IdentityId::eq17:
                for (unsigned n = 1; n <= config.n_max; ++n) {
                    for (unsigned m = 1; m <= config.m_max; ++m) {
                        instances.push_back({id, n, m, std::nullopt, std::nullopt, 0});
                    }
                }
                break;
            case IdentityId::thm6:
                for (unsigned n = 1; n <= config.n_max; ++n) {
                    for (unsigned m = 1; m <= config.m_max; ++m) {
                        for (const Rational& lambda : lambdas) {
                            instances.push_back({id, n, m, lambda, std::nullopt, 0});
                        }
                    }
                }
                break;
            case IdentityId::eq16:
                for (unsigned n = 1; n <= config.n_max; ++n) {
                    instances.push_back({id, n, 1, std::nullopt, std::nullopt, 0});
                }
                break;
        }
    }
    return instances;
}

VerificationReport evaluate_instance(const IdentityInstance& instance,
                                     std::optional<unsigned> truncation) {
    const auto skip = [&](const std::string& reason) {
        VerificationReport report;
        report.instance = instance;
        report.verdict = Verdict::skipped;
        report.skip_reason = reason;
        return report;
    };
    try {
        switch (instance.id) {
            case IdentityId::lemma1_b:
            case IdentityId::lemma1_bhat:
            case IdentityId::lemma1_e:
            case IdentityId::lemma1_h:
                return verify_lemma1(instance.id, *instance.alpha, instance.m, instance.n,
                                     instance.lambda, truncation);
            case IdentityId::thm3:
                return verify_theorem3(instance.n, instance.m, truncation);
            case IdentityId::thm4_corrected:
                return verify_theorem4(instance.n, instance.m, false, truncation);
            case IdentityId::thm4_printed:
                return verify_theorem4(instance.n, instance.m, true, truncation);
            case IdentityId::thm5:
                return verify_theorem5(instance.n, instance.m, truncation);
            case IdentityId::thm6:
                return verify_theorem6(instance.n, instance.m, *instance.lambda, truncation);
            case IdentityId::eq16:
                return verify_eq16(instance.n, truncation);
            case IdentityId::eq17:
                return verify_eq17(instance.n, instance.m, truncation);
        }
    } catch (const EvenModulus& e) {
        return skip(e.what());
    } catch (const LambdaForbidden& e) {
        return skip(e.what());
    } catch (const NonRationalScale& e) {
        return skip(e.what());
    }
    throw Error("unreachable identity id");
}

}  // namespace

std::vector<VerificationReport> run_sweep(const SweepConfig& config) {
    const std::vector<IdentityInstance> instances = enumerate_instances(config);
    std::vector<std::optional<VerificationReport>> slots(instances.size());

    const unsigned jobs = std::max(1u, config.jobs);
    if (jobs == 1 || instances.size() <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i) {
            slots[i] = evaluate_instance(instances[i], config.truncation);
        }
    } else {
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= instances.size()) return;
                try {
                    slots[i] = evaluate_instance(instances[i], config.truncation);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        const unsigned count = std::min<std::size_t>(jobs, instances.size());
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    std::vector<VerificationReport> reports;
    reports.reserve(slots.size());
    for (auto& slot : slots) reports.push_back(std::move(*slot));
    return reports;
}

}  // namespace umbral
