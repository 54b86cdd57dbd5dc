#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "combi/natural.hpp"

namespace combi {

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(Integer num, Natural den); // reduces; throws DomainError if den == 0
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(std::string_view text); // "p", "-p", or "p/q"

    const Integer& numerator() const { return num_; }
    const Natural& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    double to_double() const;
    std::string to_string() const; // "p/q", or "p" when q == 1

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws DomainError on zero divisor

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational abs() const { return num_.is_negative() ? -*this : *this; }
    Rational reciprocal() const;

    std::strong_ordering operator<=>(const Rational& o) const;
    bool operator==(const Rational& o) const = default;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    Integer num_;
    Natural den_ = Natural(1);

    void reduce();
};

} // namespace combi
