#include "umbral/umbral_ops.hpp"

#include <string>
#include <vector>

#include "umbral/combinatorics.hpp"
#include "umbral/errors.hpp"

namespace umbral {

Polynomial umbral_apply(const TruncatedSeries& f, const Polynomial& p) {
    Polynomial result;
    Polynomial deriv = p;
    const unsigned top = std::min<long>(f.truncation_order(), std::max(p.degree(), 0));
    for (unsigned k = 0; k <= top && !deriv.is_zero(); ++k) {
        if (!f.coeff(k).is_zero()) result += deriv * f.coeff(k);
        deriv = deriv.derivative();
    }
    return result;
}

Rational pairing(const TruncatedSeries& f, const Polynomial& p) {
    if (p.degree() > static_cast<int>(f.truncation_order())) {
        throw TruncationTooShort("pairing against degree " + std::to_string(p.degree()) +
                                 " needs truncation order >= that degree");
    }
    Rational acc(0);
    for (int n = 0; n <= p.degree(); ++n) {
        const Rational& c = p.coeff(static_cast<unsigned>(n));
        if (!c.is_zero()) acc += c * Rational(factorial(static_cast<unsigned>(n))) * f.coeff(static_cast<unsigned>(n));
    }
    return acc;
}

ShefferCheckResult sheffer_orthogonality_check(const TruncatedSeries& g, const TruncatedSeries& f,
                                               std::span<const Polynomial> polys) {
    if (f.order() != 1u) throw OrderViolation("f must be a delta series (o(f) = 1)");
    if (g.order() != 0u) throw OrderViolation("g must be invertible (o(g) = 0)");
    const unsigned count = static_cast<unsigned>(polys.size());
    for (unsigned n = 0; n < count; ++n) {
        if (polys[n].degree() != static_cast<int>(n)) {
            throw Error("polys[" + std::to_string(n) + "] must have degree " + std::to_string(n));
        }
    }

    std::vector<TruncatedSeries> gfk;
    gfk.reserve(count);
    gfk.push_back(g);
    for (unsigned k = 1; k < count; ++k) gfk.push_back(gfk.back() * f);

    for (unsigned n = 0; n < count; ++n) {
        for (unsigned k = 0; k < count; ++k) {
            const Rational expected = n == k ? Rational(factorial(n)) : Rational(0);
            if (pairing(gfk[k], polys[n]) != expected) {
                return {false, std::make_pair(n, k)};
            }
        }
    }
    return {true, std::nullopt};
}

Polynomial transfer_polynomial(const TruncatedSeries& g, const TruncatedSeries& f, unsigned n) {
    if (n == 0) throw Error("transfer_polynomial needs n >= 1");
    if (f.order() != 1u) throw OrderViolation("f must be a delta series (o(f) = 1)");
    if (g.order() != 0u) throw OrderViolation("g must be invertible (o(g) = 0)");
    if (f.truncation_order() < n || g.truncation_order() < n) {
        throw TruncationTooShort("transfer_polynomial at n = " + std::to_string(n) +
                                 " needs truncation order >= n");
    }

    // (t/f)^n applied to x^{n-1}, times x, then 1/g(t) applied to the lot.
    const TruncatedSeries t_over_f = series_recip(f.shift_div_t(1));
    const Polynomial q = umbral_apply(t_over_f.pow(n), Polynomial::monomial(n - 1));
    return umbral_apply(series_recip(g), q.times_x());
}

}  // namespace umbral
