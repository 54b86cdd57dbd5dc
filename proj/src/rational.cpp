#include "combi/rational.hpp"

#include <ostream>

#include "combi/error.hpp"

namespace combi {

Rational::Rational(Integer num, Natural den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational with zero denominator");
    reduce();
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    bool neg = (num < 0) != (den < 0);
    Integer n(num);
    Integer d(den);
    num_ = Integer(n.magnitude(), neg);
    den_ = d.magnitude();
    reduce();
}

Rational::Rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        num_ = Integer(text);
        den_ = Natural(1);
    } else {
        num_ = Integer(text.substr(0, slash));
        den_ = Natural(text.substr(slash + 1));
        if (den_.is_zero()) throw ParseError("rational with zero denominator");
    }
    reduce();
}

void Rational::reduce() {
    if (num_.is_zero()) {
        den_ = Natural(1);
        return;
    }
    Natural g = Natural::gcd(num_.magnitude(), den_);
    if (!g.is_one()) {
        num_ = Integer(num_.magnitude() / g, num_.is_negative());
        den_ = den_ / g;
    }
}

double Rational::to_double() const {
    return num_.to_double() / den_.to_double();
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * Integer(o.den_) + o.num_ * Integer(den_);
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    num_ = num_ * Integer(o.den_);
    Integer d = Integer(den_) * o.num_;
    num_ = Integer(num_.magnitude(), num_.is_negative() != d.is_negative());
    den_ = d.magnitude();
    reduce();
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    return Rational(Integer(den_, num_.is_negative()), num_.magnitude());
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    Integer lhs = num_ * Integer(o.den_);
    Integer rhs = o.num_ * Integer(den_);
    return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace combi
