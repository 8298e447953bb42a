#include "umbral/polynomial.hpp"

#include <algorithm>

namespace umbral {

namespace {
const Rational kZero(0);
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::monomial(unsigned degree, Rational c) {
    Polynomial p;
    if (!c.is_zero()) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_[degree] = std::move(c);
    }
    return p;
}

const Rational& Polynomial::coeff(unsigned i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(r));
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
    } else {
        for (auto& x : coeffs_) x *= c;
    }
    return *this;
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational r(0);  // Horner
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> r(coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::scale_argument(unsigned m) const {
    if (m == 1) return *this;
    Polynomial r(*this);
    Rational inv_power(1);
    const Rational inv = Rational(1, static_cast<long>(m));
    for (std::size_t i = 1; i < r.coeffs_.size(); ++i) {
        inv_power *= inv;
        r.coeffs_[i] *= inv_power;
    }
    return r;
}

Polynomial Polynomial::times_x() const {
    if (is_zero()) return Polynomial();
    std::vector<Rational> r;
    r.reserve(coeffs_.size() + 1);
    r.emplace_back(0);
    r.insert(r.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(r));
}

std::string Polynomial::to_list_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ", ";
        s += coeffs_[i].to_string();
    }
    s += ']';
    return s;
}

std::string Polynomial::to_pretty_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const bool leading = s.empty();
        const bool negative = c.sign() < 0;
        if (leading) {
            if (negative) s += '-';
        } else {
            s += negative ? " - " : " + ";
        }
        const Rational a = negative ? -c : c;
        if (i == 0) {
            s += a.to_string();
        } else {
            if (!a.is_one()) {
                s += a.to_string();
                s += '*';
            }
            s += 'x';
            if (i > 1) {
                s += '^';
                s += std::to_string(i);
            }
        }
    }
    return s;
}

}  // namespace umbral
