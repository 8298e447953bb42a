#include "umbral/special_sequences.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "umbral/combinatorics.hpp"
#include "umbral/errors.hpp"

namespace umbral {

Stirling2Table::Stirling2Table(unsigned n_max) {
    rows_.resize(n_max + 1);
    rows_[0] = {Integer(1)};
    for (unsigned n = 1; n <= n_max; ++n) {
        rows_[n].assign(n + 1, Integer(0));
        for (unsigned k = 1; k <= n; ++k) {
            const Integer above = k < n ? rows_[n - 1][k] : Integer(0);
            rows_[n][k] = Integer(k) * above + rows_[n - 1][k - 1];
        }
    }
}

const Integer& Stirling2Table::at(unsigned n, unsigned k) const {
    if (n >= rows_.size() || k > n) {
        throw IndexOutOfRange("S2(" + std::to_string(n) + ", " + std::to_string(k) + ") outside table");
    }
    return rows_[n][k];
}

namespace {

std::mutex stirling_mutex;
std::vector<std::vector<Integer>> stirling_rows = {{Integer(1)}};

struct NumbersKey {
    PolyFamily kind;
    Rational alpha;
    std::optional<Rational> lambda;

    bool operator<(const NumbersKey& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (alpha != o.alpha) return alpha < o.alpha;
        if (lambda.has_value() != o.lambda.has_value()) return !lambda.has_value();
        if (lambda && *lambda != *o.lambda) return *lambda < *o.lambda;
        return false;
    }
};

std::mutex numbers_mutex;
std::map<NumbersKey, std::vector<Rational>> numbers_cache;

// (t/(e^t-1))^a, (2/(e^t+1))^a, ((1-l)/(e^t-l))^a at the given truncation.
TruncatedSeries number_series(PolyFamily kind, const Rational& alpha,
                              const std::optional<Rational>& lambda, unsigned order) {
    TruncatedSeries base = TruncatedSeries::one(order);
    switch (kind) {
        case PolyFamily::bernoulli: {
            const TruncatedSeries et = series_from_exponential(Rational(1), order + 1);
            base = series_recip((et - TruncatedSeries::one(order + 1)).shift_div_t(1));
            break;
        }
        case PolyFamily::euler: {
            const TruncatedSeries et = series_from_exponential(Rational(1), order);
            base = series_recip((et + TruncatedSeries::one(order)).scale(Rational(1, 2)));
            break;
        }
        case PolyFamily::frobenius_euler: {
            if (!lambda) throw Error("frobenius_euler needs lambda");
            if (lambda->is_one()) throw LambdaForbidden("frobenius_euler needs lambda != 1");
            const TruncatedSeries et = series_from_exponential(Rational(1), order);
            const TruncatedSeries shifted =
                et - TruncatedSeries::one(order).scale(*lambda);  // e^t - lambda
            base = series_recip(shifted.scale((Rational(1) - *lambda).recip()));
            break;
        }
    }
    return series_pow_rational(base, alpha);
}

}  // namespace

Integer stirling2(unsigned n, unsigned k) {
    if (k > n) throw IndexOutOfRange("stirling2(" + std::to_string(n) + ", " + std::to_string(k) + ")");
    std::lock_guard lock(stirling_mutex);
    while (stirling_rows.size() <= n) {
        const auto& prev = stirling_rows.back();
        const unsigned row_n = static_cast<unsigned>(stirling_rows.size());
        std::vector<Integer> row(row_n + 1, Integer(0));
        for (unsigned j = 1; j <= row_n; ++j) {
            row[j] = Integer(j) * (j < row_n ? prev[j] : Integer(0)) + prev[j - 1];
        }
        stirling_rows.push_back(std::move(row));
    }
    return stirling_rows[n][k];
}

std::vector<Rational> sequence_numbers(PolyFamily kind, const Rational& alpha,
                                       const std::optional<Rational>& lambda, unsigned count) {
    if (count == 0) return {};
    const NumbersKey key{kind, alpha, lambda};
    std::lock_guard lock(numbers_mutex);
    auto& cached = numbers_cache[key];
    if (cached.size() < count) {
        const unsigned order = count - 1;
        const TruncatedSeries s = number_series(kind, alpha, lambda, order);
        cached.resize(count);
        for (unsigned l = 0; l < count; ++l) cached[l] = s.egf_coeff(l);
    }
    return {cached.begin(), cached.begin() + count};
}

namespace {

Polynomial polynomial_from_numbers(const std::vector<Rational>& numbers, unsigned n) {
    std::vector<Rational> coeffs(n + 1);
    for (unsigned l = 0; l <= n; ++l) {
        coeffs[n - l] = Rational(binomial(n, static_cast<long>(l))) * numbers[l];
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial bernoulli_polynomial(const Rational& alpha, unsigned n) {
    return polynomial_from_numbers(sequence_numbers(PolyFamily::bernoulli, alpha, std::nullopt, n + 1), n);
}

Polynomial euler_polynomial(const Rational& alpha, unsigned n) {
    return polynomial_from_numbers(sequence_numbers(PolyFamily::euler, alpha, std::nullopt, n + 1), n);
}

Polynomial frobenius_euler_polynomial(const Rational& alpha, unsigned n, const Rational& lambda) {
    if (lambda.is_one()) throw LambdaForbidden("frobenius_euler needs lambda != 1");
    return polynomial_from_numbers(sequence_numbers(PolyFamily::frobenius_euler, alpha, lambda, n + 1), n);
}

Polynomial family_polynomial(const SequenceFamily& family, unsigned n) {
    switch (family.kind) {
        case PolyFamily::bernoulli:
            return bernoulli_polynomial(family.alpha, n);
        case PolyFamily::euler:
            return euler_polynomial(family.alpha, n);
        case PolyFamily::frobenius_euler:
            if (!family.lambda) throw Error("frobenius_euler needs lambda");
            return frobenius_euler_polynomial(family.alpha, n, *family.lambda);
    }
    throw Error("unreachable family kind");
}

Polynomial scaled_family_polynomial(const SequenceFamily& family, unsigned n) {
    if (family.scale == 0) throw Error("scale m must be >= 1");
    if (family.order_normalized && family.kind != PolyFamily::bernoulli) {
        throw Error("order normalization only applies to the Bernoulli family");
    }
    Polynomial p = family_polynomial(family, n);
    const unsigned m = family.scale;
    if (m > 1) p = p.scale_argument(m) * Rational(m).pow(n);
    if (family.order_normalized && m > 1) {
        if (!family.alpha.is_integer()) {
            throw NonRationalScale("m^alpha is irrational for m = " + std::to_string(m) +
                                   ", alpha = " + family.alpha.to_string());
        }
        p *= Rational(m).pow(-family.alpha.to_integer().get_si());
    }
    return p;
}

Polynomial poly_scale_arg(const Polynomial& p, unsigned m) {
    if (m == 0) throw Error("scale m must be >= 1");
    return p.scale_argument(m);
}

TruncatedSeries lemma1_g_series(const SequenceFamily& family, unsigned order) {
    const unsigned m = family.scale;
    if (m == 0) throw Error("scale m must be >= 1");
    const Rational mr(static_cast<long>(m));
    switch (family.kind) {
        case PolyFamily::bernoulli: {
            const TruncatedSeries emt = series_from_exponential(mr, order + 1);
            const TruncatedSeries base = (emt - TruncatedSeries::one(order + 1)).shift_div_t(1);
            if (!family.order_normalized) {
                // ((e^{mt}-1)/(mt))^a
                return series_pow_rational(base.scale(mr.recip()), family.alpha);
            }
            // ((e^{mt}-1)/t)^a; constant term is m, so non-integer a needs m = 1.
            if (family.alpha.is_integer()) {
                return series_pow_int(base, family.alpha.to_integer().get_si());
            }
            if (m == 1) return series_pow_rational(base, family.alpha);
            throw NonRationalScale("((e^{mt}-1)/t)^alpha needs integer alpha when m > 1");
        }
        case PolyFamily::euler: {
            const TruncatedSeries emt = series_from_exponential(mr, order);
            return series_pow_rational((emt + TruncatedSeries::one(order)).scale(Rational(1, 2)),
                                       family.alpha);
        }
        case PolyFamily::frobenius_euler: {
            if (!family.lambda) throw Error("frobenius_euler needs lambda");
            const Rational& lambda = *family.lambda;
            if (lambda.is_one()) throw LambdaForbidden("frobenius_euler needs lambda != 1");
            const TruncatedSeries emt = series_from_exponential(mr, order);
            const TruncatedSeries base =
                (emt - TruncatedSeries::one(order).scale(lambda)).scale((Rational(1) - lambda).recip());
            return series_pow_rational(base, family.alpha);
        }
    }
    throw Error("unreachable family kind");
}

}  // namespace umbral
