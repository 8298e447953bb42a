#pragma once

#include <string>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/**
 * Dense univariate polynomial in x over Rational.
 *
 * Coefficients are stored ascending (index i = coefficient of x^i) with
 * trailing zeros trimmed; the zero polynomial has an empty coefficient
 * sequence and degree -1. Equality is exact coefficient-wise equality.
 */
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    /// Constant polynomial (also makes Polynomial a coefficient ring for
    /// BasicTruncatedSeries).
    Polynomial(const Rational& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }

    static Polynomial constant(Rational c);
    /// c * x^degree
    static Polynomial monomial(unsigned degree, Rational c = Rational(1));
    /// The variable x itself.
    static Polynomial variable() { return monomial(1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    const Rational& coeff(unsigned i) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    Polynomial operator/(const Rational& c) const { return *this * c.recip(); }

    bool operator==(const Polynomial& o) const = default;

    Rational evaluate(const Rational& x) const;

    Polynomial derivative() const;

    /// p(x/m): coefficient c_i becomes c_i / m^i.
    Polynomial scale_argument(unsigned m) const;

    /// x * p(x).
    Polynomial times_x() const;

    /// Ascending coefficient list, e.g. "[-1, 1]" for x - 1; "[]" for zero.
    std::string to_list_string() const;
    /// Human form, e.g. "x^2 - x"; "0" for zero.
    std::string to_pretty_string() const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace umbral
