#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "umbral/errors.hpp"

namespace umbral {

using Integer = mpz_class;

/**
 * Exact rational scalar.
 *
 * Always held in lowest terms with a positive denominator; every operation
 * is exact. This is the only scalar type in the library -- no floating
 * point anywhere. Text form is "p/q" with "/q" omitted when q = 1.
 */
class Rational {
  public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(static_cast<signed long>(n)) {}
    Rational(unsigned n) : value_(static_cast<unsigned long>(n)) {}
    Rational(unsigned long n) : value_(n) {}
    Rational(const Integer& n) : value_(n) {}

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw ZeroDivision("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// GMP expression templates (e.g. products of Integers) land here.
    template <typename T, typename U>
    Rational(const __gmp_expr<T, U>& e) : value_(e) {
        value_.canonicalize();
    }

    /// Parses the "p/q" form, e.g. "-3/4", "7".
    static Rational from_string(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Integer value; only valid when is_integer().
    Integer to_integer() const {
        if (!is_integer()) throw Error("rational " + to_string() + " is not an integer");
        return value_.get_num();
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDivision("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational recip() const {
        if (is_zero()) throw ZeroDivision("reciprocal of zero");
        return Rational(mpq_class(1) / value_);
    }

    /// Integer power; negative exponents go through recip().
    Rational pow(long e) const {
        if (e < 0) return recip().pow(-e);
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(std::move(r));  // powers of a canonical form stay canonical
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    std::string to_string() const {
        std::string s = value_.get_num().get_str();
        if (value_.get_den() != 1) {
            s += '/';
            s += value_.get_den().get_str();
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

  private:
    mpq_class value_;
};

inline Rational Rational::from_string(std::string_view text) {
    const auto fail = [&] { throw ParseError("not a rational: '" + std::string(text) + "'"); };
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    const std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) fail();
    Integer num(std::string(text.substr(num_begin, i - num_begin)), 10);
    if (negative) num = -num;
    Integer den(1);
    if (i < text.size()) {
        if (text[i] != '/') fail();
        const std::size_t den_begin = ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size()) fail();
        den = Integer(std::string(text.substr(den_begin)), 10);
        if (den == 0) throw ZeroDivision("rational with zero denominator: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

}  // namespace umbral
