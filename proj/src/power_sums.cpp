#include "umbral/power_sums.hpp"

#include "umbral/combinatorics.hpp"
#include "umbral/errors.hpp"
#include "umbral/series.hpp"

namespace umbral {

namespace {

void check_args(PowerSumFamily family, unsigned n, unsigned m, const std::optional<Rational>& lambda) {
    if (n == 0) throw Error("power sums need n >= 1");
    if (m == 0) throw Error("power sums need m >= 1");
    if (family == PowerSumFamily::lambda_analogue) {
        if (!lambda) throw Error("lambda analogue needs lambda");
        if (lambda->is_zero()) throw LambdaForbidden("lambda analogue needs lambda != 0");
    }
}

// Weight attached to the composition weight w: 1, (-1)^w, or lambda^{-w}.
Rational composition_factor(PowerSumFamily family, unsigned long w, const std::optional<Rational>& lambda) {
    switch (family) {
        case PowerSumFamily::plain:
            return Rational(1);
        case PowerSumFamily::alternating:
            return w % 2 ? Rational(-1) : Rational(1);
        case PowerSumFamily::lambda_analogue:
            return lambda->pow(-static_cast<long>(w));
    }
    throw Error("unreachable power-sum family");
}

std::vector<Rational> table_by_enumeration(PowerSumFamily family, unsigned k_max, unsigned n, unsigned m,
                                           const std::optional<Rational>& lambda) {
    std::vector<Rational> table(k_max + 1, Rational(0));
    for (auto walk = compositions(n, m); !walk.done(); walk.next()) {
        const Rational base = Rational(walk.multinomial()) * composition_factor(family, walk.weight(), lambda);
        const Rational w(static_cast<long>(walk.weight()));
        Rational w_power(1);
        for (unsigned k = 0; k <= k_max; ++k) {
            table[k] += base * w_power;
            w_power *= w;
        }
    }
    return table;
}

std::vector<Rational> table_by_series(PowerSumFamily family, unsigned k_max, unsigned n, unsigned m,
                                      const std::optional<Rational>& lambda) {
    TruncatedSeries sum(k_max);
    for (unsigned l = 1; l <= m; ++l) {
        const Rational weight = composition_factor(family, l, lambda);
        sum = sum + series_from_exponential(Rational(static_cast<long>(l)), k_max).scale(weight);
    }
    const TruncatedSeries powered = sum.pow(n);
    std::vector<Rational> table(k_max + 1);
    for (unsigned k = 0; k <= k_max; ++k) table[k] = powered.egf_coeff(k);
    return table;
}

PowerSumValue single(PowerSumFamily family, unsigned k, unsigned n, unsigned m,
                     const std::optional<Rational>& lambda, PowerSumAlgorithm algorithm) {
    auto table = power_sum_table(family, k, n, m, lambda, algorithm);
    return {family, k, n, m, lambda, std::move(table[k])};
}

}  // namespace

std::vector<Rational> power_sum_table(PowerSumFamily family, unsigned k_max, unsigned n, unsigned m,
                                      const std::optional<Rational>& lambda, PowerSumAlgorithm algorithm) {
    check_args(family, n, m, lambda);
    return algorithm == PowerSumAlgorithm::enumeration
               ? table_by_enumeration(family, k_max, n, m, lambda)
               : table_by_series(family, k_max, n, m, lambda);
}

PowerSumValue multiple_power_sum(unsigned k, unsigned n, unsigned m, PowerSumAlgorithm algorithm) {
    return single(PowerSumFamily::plain, k, n, m, std::nullopt, algorithm);
}

PowerSumValue alternating_power_sum(unsigned k, unsigned n, unsigned m, PowerSumAlgorithm algorithm) {
    return single(PowerSumFamily::alternating, k, n, m, std::nullopt, algorithm);
}

PowerSumValue lambda_power_sum(unsigned k, unsigned n, unsigned m, const Rational& lambda,
                               PowerSumAlgorithm algorithm) {
    return single(PowerSumFamily::lambda_analogue, k, n, m, lambda, algorithm);
}

}  // namespace umbral
