#pragma once

#include <optional>

#include "umbral/polynomial.hpp"
#include "umbral/series.hpp"

namespace umbral {

/// Triangular table of Stirling numbers of the second kind, 0 <= k <= n <= n_max.
class Stirling2Table {
  public:
    explicit Stirling2Table(unsigned n_max);

    unsigned max_n() const { return static_cast<unsigned>(rows_.size()) - 1; }
    /// S2(n, k); IndexOutOfRange outside the triangle.
    const Integer& at(unsigned n, unsigned k) const;

  private:
    std::vector<std::vector<Integer>> rows_;
};

/// S2(n, k) from a shared table grown on demand. IndexOutOfRange when k > n.
Integer stirling2(unsigned n, unsigned k);

enum class PolyFamily { bernoulli, euler, frobenius_euler };

/**
 * One of the polynomial families of order alpha, optionally in the Lemma-1
 * scaled form: scale m substitutes x -> x/m and multiplies by m^n, and
 * order_normalized (Bernoulli only) divides by m^alpha on top, giving the
 * four Sheffer families
 *
 *   m^n B_n^(a)(x/m), (m^n/m^a) B_n^(a)(x/m), m^n E_n^(a)(x/m), m^n H_n^(a)(x/m | l).
 */
struct SequenceFamily {
    PolyFamily kind = PolyFamily::bernoulli;
    Rational alpha = Rational(1);
    std::optional<Rational> lambda;  // frobenius_euler only; lambda != 1
    unsigned scale = 1;              // m
    bool order_normalized = false;   // bernoulli only
};

/**
 * The first count numbers of the family: l!-th EGF coefficients of
 * (t/(e^t-1))^alpha, (2/(e^t+1))^alpha, or ((1-lambda)/(e^t-lambda))^alpha.
 * Cached per (kind, alpha, lambda).
 */
std::vector<Rational> sequence_numbers(PolyFamily kind, const Rational& alpha,
                                       const std::optional<Rational>& lambda, unsigned count);

/// B_n^(alpha)(x) = sum_l C(n,l) B_l^(alpha) x^{n-l}.
Polynomial bernoulli_polynomial(const Rational& alpha, unsigned n);

/// E_n^(alpha)(x), numbers from (2/(e^t+1))^alpha.
Polynomial euler_polynomial(const Rational& alpha, unsigned n);

/// H_n^(alpha)(x | lambda), lambda != 1 (LambdaForbidden otherwise).
Polynomial frobenius_euler_polynomial(const Rational& alpha, unsigned n, const Rational& lambda);

/// The family polynomial ignoring scale/order normalization.
Polynomial family_polynomial(const SequenceFamily& family, unsigned n);

/**
 * The Lemma-1 scaled polynomial for the family. NonRationalScale when the
 * order-normalized variant is asked with m > 1 and non-integer alpha
 * (m^alpha would be irrational).
 */
Polynomial scaled_family_polynomial(const SequenceFamily& family, unsigned n);

/// p(x/m): coefficient c_i becomes c_i / m^i.
Polynomial poly_scale_arg(const Polynomial& p, unsigned m);

/**
 * The invertible series g(t) the scaled family is Sheffer for (with
 * f(t) = t): ((e^{mt}-1)/(mt))^a, ((e^{mt}-1)/t)^a, ((e^{mt}+1)/2)^a,
 * or ((e^{mt}-lambda)/(1-lambda))^a.
 */
TruncatedSeries lemma1_g_series(const SequenceFamily& family, unsigned order);

}  // namespace umbral
