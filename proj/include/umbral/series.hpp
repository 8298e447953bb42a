#pragma once

#include <optional>
#include <string>
#include <vector>

#include "umbral/combinatorics.hpp"
#include "umbral/errors.hpp"
#include "umbral/polynomial.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/**
 * Truncated formal power series sum a_k t^k, k = 0..N, over a commutative
 * ring C with exact Rational scalars (C is Rational almost everywhere; the
 * test oracles instantiate C = Polynomial to work with e^{xt} symbolically).
 *
 * The truncation order N is explicit and carried by every value; binary
 * operations truncate to the shorter operand. Coefficients are ordinary
 * (t^k) coefficients; egf_coeff(k) = k! a_k exposes the exponential-
 * generating-function view. Asking for a coefficient past N throws
 * TruncationTooShort rather than inventing a zero.
 */
template <typename C>
class BasicTruncatedSeries {
  public:
    /// Zero series at the given truncation order.
    explicit BasicTruncatedSeries(unsigned order) : coeffs_(order + 1) {}

    /// Coefficients a_0.. (padded with zeros / cut to order+1 entries).
    BasicTruncatedSeries(unsigned order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1);
    }

    static BasicTruncatedSeries one(unsigned order) {
        BasicTruncatedSeries s(order);
        s.coeffs_[0] = C(1);
        return s;
    }

    /// c * t^k.
    static BasicTruncatedSeries monomial(unsigned k, unsigned order, C c = C(1)) {
        if (k > order) throw TruncationTooShort("monomial degree exceeds truncation order");
        BasicTruncatedSeries s(order);
        s.coeffs_[k] = std::move(c);
        return s;
    }

    unsigned truncation_order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const std::vector<C>& coefficients() const { return coeffs_; }

    const C& coeff(unsigned k) const {
        if (k >= coeffs_.size()) {
            throw TruncationTooShort("coefficient " + std::to_string(k) + " beyond truncation order " +
                                     std::to_string(truncation_order()));
        }
        return coeffs_[k];
    }

    /// EGF coefficient k! a_k, k <= N.
    C egf_coeff(unsigned k) const { return coeff(k) * Rational(factorial(k)); }

    /// o(f): smallest k with a_k != 0, or nullopt when zero up to N.
    std::optional<unsigned> order() const {
        for (unsigned k = 0; k < coeffs_.size(); ++k) {
            if (!(coeffs_[k] == C())) return k;
        }
        return std::nullopt;
    }

    bool is_zero() const { return !order().has_value(); }

    BasicTruncatedSeries truncate(unsigned new_order) const {
        if (new_order > truncation_order()) {
            throw TruncationTooShort("cannot extend a truncated series");
        }
        return BasicTruncatedSeries(new_order, {coeffs_.begin(), coeffs_.begin() + new_order + 1});
    }

    BasicTruncatedSeries operator-() const {
        BasicTruncatedSeries r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend BasicTruncatedSeries operator+(const BasicTruncatedSeries& a, const BasicTruncatedSeries& b) {
        const unsigned n = std::min(a.truncation_order(), b.truncation_order());
        BasicTruncatedSeries r(n);
        for (unsigned k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }

    friend BasicTruncatedSeries operator-(const BasicTruncatedSeries& a, const BasicTruncatedSeries& b) {
        const unsigned n = std::min(a.truncation_order(), b.truncation_order());
        BasicTruncatedSeries r(n);
        for (unsigned k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return r;
    }

    /// Cauchy product, truncated at min(N_a, N_b).
    friend BasicTruncatedSeries operator*(const BasicTruncatedSeries& a, const BasicTruncatedSeries& b) {
        const unsigned n = std::min(a.truncation_order(), b.truncation_order());
        BasicTruncatedSeries r(n);
        for (unsigned i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == C()) continue;
            for (unsigned j = 0; i + j <= n; ++j) {
                r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    BasicTruncatedSeries scale(const Rational& c) const {
        BasicTruncatedSeries r(*this);
        for (auto& x : r.coeffs_) x = x * c;
        return r;
    }

    /// a^e for e >= 0 by binary exponentiation (negative powers are the
    /// Rational-only series_pow_int).
    BasicTruncatedSeries pow(unsigned e) const {
        BasicTruncatedSeries result = one(truncation_order());
        BasicTruncatedSeries base(*this);
        while (e) {
            if (e & 1u) result = result * base;
            if (e >>= 1) base = base * base;
        }
        return result;
    }

    /// Divide by t^k: shifts coefficients down, truncation order drops to N-k.
    /// The k low coefficients must vanish.
    BasicTruncatedSeries shift_div_t(unsigned k) const {
        if (k > truncation_order()) throw TruncationTooShort("dividing away the whole series");
        for (unsigned i = 0; i < k; ++i) {
            if (!(coeffs_[i] == C())) {
                throw NonDivisible("coefficient of t^" + std::to_string(i) + " is nonzero");
            }
        }
        return BasicTruncatedSeries(truncation_order() - k, {coeffs_.begin() + k, coeffs_.end()});
    }

    /// Formal d/dt, truncation order drops by one.
    BasicTruncatedSeries derivative() const {
        if (truncation_order() == 0) throw TruncationTooShort("derivative of order-0 truncation");
        BasicTruncatedSeries r(truncation_order() - 1);
        for (unsigned k = 1; k < coeffs_.size(); ++k) {
            r.coeffs_[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
        }
        return r;
    }

    bool operator==(const BasicTruncatedSeries&) const = default;

  private:
    std::vector<C> coeffs_;
};

using TruncatedSeries = BasicTruncatedSeries<Rational>;

/// e^{ct}: coefficients c^k / k!.
TruncatedSeries series_from_exponential(const Rational& c, unsigned order);

/// Multiplicative inverse up to truncation; needs a_0 != 0.
TruncatedSeries series_recip(const TruncatedSeries& a);

/// Formal log; needs a_0 = 1.
TruncatedSeries series_log(const TruncatedSeries& a);

/// Formal exp; needs a_0 = 0.
TruncatedSeries series_exp(const TruncatedSeries& a);

/// a^alpha = exp(alpha log a) for rational alpha; needs a_0 = 1.
TruncatedSeries series_pow_rational(const TruncatedSeries& a, const Rational& alpha);

/// a^e for any integer e; negative e needs a_0 != 0.
TruncatedSeries series_pow_int(const TruncatedSeries& a, long e);

/// String form "a_0 + a_1 t + ..." for diagnostics.
std::string to_string(const TruncatedSeries& s);

}  // namespace umbral
