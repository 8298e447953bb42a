"""Exact umbral-calculus toolkit.

Higher-order Bernoulli, Euler and Frobenius-Euler polynomials, multiple
power sums computed by two independent exact algorithms, and machine
verification of the polynomial identities relating them. All values are
exact rationals; the string form is always "p/q".
"""

from fractions import Fraction

from umbral._core import (
    Polynomial,
    Rational,
    UmbralError,
    __version__,
    bernoulli_polynomial,
    binomial,
    euler_polynomial,
    factorial,
    falling_factorial,
    frobenius_euler_polynomial,
    multinomial,
    power_sum,
    power_sum_table,
    run_sweep,
    stirling2,
    verify,
)

__all__ = [
    "Polynomial",
    "Rational",
    "UmbralError",
    "__version__",
    "bernoulli_polynomial",
    "binomial",
    "euler_polynomial",
    "factorial",
    "falling_factorial",
    "frobenius_euler_polynomial",
    "multinomial",
    "power_sum",
    "power_sum_table",
    "run_sweep",
    "stirling2",
    "to_fraction",
    "to_fractions",
    "verify",
]


def to_fraction(value) -> Fraction:
    """Exact conversion of a Rational (or its string form) to Fraction."""
    return Fraction(str(value))


def to_fractions(polynomial) -> list:
    """Ascending coefficient list of a Polynomial as Fractions."""
    return [Fraction(c) for c in polynomial.coefficients()]
