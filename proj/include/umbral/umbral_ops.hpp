#pragma once

#include <optional>
#include <span>
#include <utility>

#include "umbral/polynomial.hpp"
#include "umbral/series.hpp"

namespace umbral {

/**
 * Operator action of a series on a polynomial: t^k acts as d^k/dx^k, so
 * f(t) p(x) = sum_k a_k p^(k)(x). Derivatives beyond min(N, deg p) vanish,
 * so a short truncation is not an error here.
 */
Polynomial umbral_apply(const TruncatedSeries& f, const Polynomial& p);

/**
 * The umbral pairing <f | p> = sum_n p_n n! a_n, i.e. <t^k | x^n> = n! d_{n,k}
 * extended linearly. Equals the constant term of umbral_apply(f, p).
 * Throws TruncationTooShort when N < deg p.
 */
Rational pairing(const TruncatedSeries& f, const Polynomial& p);

struct ShefferCheckResult {
    bool ok = true;
    /// First (n, k) with <g f^k | polys[n]> != n! d_{n,k}, scanned n-major.
    std::optional<std::pair<unsigned, unsigned>> first_failure;
};

/**
 * Tests <g(t) f(t)^k | polys[n]> = n! d_{n,k} for all n, k below
 * polys.size(), i.e. that polys is the Sheffer sequence for (g, f).
 * Needs o(f) = 1 and o(g) = 0 (OrderViolation otherwise) and polys[n]
 * of degree n.
 */
ShefferCheckResult sheffer_orthogonality_check(const TruncatedSeries& g, const TruncatedSeries& f,
                                               std::span<const Polynomial> polys);

/**
 * S_n(x) = (1/g(t)) x (t/f(t))^n x^{n-1} for the Sheffer pair (g, f),
 * n >= 1. The operator (t/f(t)) carries the power n here: the printed
 * transfer formula omits it, but every application of the formula
 * downstream uses the n-th power. Needs o(f) = 1, o(g) = 0, and both
 * truncation orders >= n.
 */
Polynomial transfer_polynomial(const TruncatedSeries& g, const TruncatedSeries& f, unsigned n);

}  // namespace umbral
