#include "umbral/series.hpp"

namespace umbral {

TruncatedSeries series_from_exponential(const Rational& c, unsigned order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    std::vector<Rational> coeffs(order + 1);
    coeffs[0] = Rational(1);
    for (unsigned k = 1; k <= order; ++k) {
        coeffs[k] = coeffs[k - 1] * c / Rational(static_cast<long>(k));
    }
    return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries series_recip(const TruncatedSeries& a) {
    const Rational& a0 = a.coeff(0);
    if (a0.is_zero()) throw ZeroConstantTerm("reciprocal of a series with zero constant term");
    const unsigned n = a.truncation_order();
    std::vector<Rational> b(n + 1);
    const Rational inv0 = a0.recip();
    b[0] = inv0;
    for (unsigned k = 1; k <= n; ++k) {
        Rational acc(0);
        for (unsigned i = 1; i <= k; ++i) acc += a.coeff(i) * b[k - i];
        b[k] = -(inv0 * acc);
    }
    return TruncatedSeries(n, std::move(b));
}

TruncatedSeries series_log(const TruncatedSeries& a) {
    if (!a.coeff(0).is_one()) throw BadConstantTerm("series_log needs constant term 1");
    const unsigned n = a.truncation_order();
    std::vector<Rational> l(n + 1);
    if (n == 0) return TruncatedSeries(0, std::move(l));
    // (log a)' = a'/a, integrated termwise.
    const TruncatedSeries q = a.derivative() * series_recip(a.truncate(n - 1));
    for (unsigned k = 1; k <= n; ++k) {
        l[k] = q.coeff(k - 1) / Rational(static_cast<long>(k));
    }
    return TruncatedSeries(n, std::move(l));
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (!a.coeff(0).is_zero()) throw BadConstantTerm("series_exp needs constant term 0");
    const unsigned n = a.truncation_order();
    std::vector<Rational> e(n + 1);
    e[0] = Rational(1);
    // e' = a' e gives (k+1) e_{k+1} = sum_{i} (i+1) a_{i+1} e_{k-i}.
    for (unsigned k = 0; k < n; ++k) {
        Rational acc(0);
        for (unsigned i = 0; i <= k; ++i) {
            acc += Rational(static_cast<long>(i + 1)) * a.coeff(i + 1) * e[k - i];
        }
        e[k + 1] = acc / Rational(static_cast<long>(k + 1));
    }
    return TruncatedSeries(n, std::move(e));
}

TruncatedSeries series_pow_rational(const TruncatedSeries& a, const Rational& alpha) {
    if (!a.coeff(0).is_one()) throw BadConstantTerm("series_pow_rational needs constant term 1");
    return series_exp(series_log(a).scale(alpha));
}

TruncatedSeries series_pow_int(const TruncatedSeries& a, long e) {
    if (e >= 0) return a.pow(static_cast<unsigned>(e));
    if (a.coeff(0).is_zero()) {
        throw ZeroConstantTerm("negative power of a series with zero constant term");
    }
    return series_recip(a).pow(static_cast<unsigned>(-e));
}

std::string to_string(const TruncatedSeries& s) {
    std::string out;
    for (unsigned k = 0; k <= s.truncation_order(); ++k) {
        if (k) out += " + ";
        out += s.coeff(k).to_string();
        if (k == 1) out += "*t";
        if (k > 1) out += "*t^" + std::to_string(k);
    }
    out += " + O(t^" + std::to_string(s.truncation_order() + 1) + ")";
    return out;
}

}  // namespace umbral
