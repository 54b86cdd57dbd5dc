#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace combi {

// Arbitrary-precision nonnegative integer, base 2^32 limbs (little endian).
// All counting in the library is done with this type; it never overflows.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v);
    explicit Natural(std::string_view decimal);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

    // Number of significant bits; 0 for zero.
    std::size_t bit_length() const;
    bool bit(std::size_t i) const;
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    // Throws DomainError if the value does not fit.
    std::uint64_t to_uint64() const;
    bool fits_uint64() const { return limbs_.size() <= 2; }
    double to_double() const;

    std::string to_string() const;

    Natural& operator+=(const Natural& o);
    Natural& operator-=(const Natural& o); // throws DomainError if o > *this
    Natural& operator*=(const Natural& o);
    Natural& operator/=(const Natural& o) { return *this = divmod(o).first; }
    Natural& operator%=(const Natural& o) { return *this = divmod(o).second; }

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
    friend Natural operator*(const Natural& a, const Natural& b);
    friend Natural operator/(const Natural& a, const Natural& b) { return a.divmod(b).first; }
    friend Natural operator%(const Natural& a, const Natural& b) { return a.divmod(b).second; }

    // Quotient and remainder in one pass; throws DomainError on division by zero.
    std::pair<Natural, Natural> divmod(const Natural& divisor) const;

    Natural& operator<<=(std::size_t bits);
    Natural& operator>>=(std::size_t bits);
    friend Natural operator<<(Natural a, std::size_t bits) { return a <<= bits; }
    friend Natural operator>>(Natural a, std::size_t bits) { return a >>= bits; }

    std::strong_ordering operator<=>(const Natural& o) const;
    bool operator==(const Natural& o) const = default;

    friend std::ostream& operator<<(std::ostream& os, const Natural& n);

    static Natural pow(const Natural& base, std::uint64_t exp);
    static Natural gcd(Natural a, Natural b);

private:
    std::vector<std::uint32_t> limbs_;

    void trim();
    void sub_in_place_at(const Natural& o, std::size_t limb_shift);
    std::uint32_t div_small(std::uint32_t divisor); // returns remainder
};

// Signed arbitrary-precision integer built on Natural.
class Integer {
public:
    Integer() = default;
    Integer(std::int64_t v);
    Integer(Natural mag, bool negative = false);
    explicit Integer(std::string_view decimal);

    bool is_zero() const { return mag_.is_zero(); }
    bool is_negative() const { return negative_; }
    const Natural& magnitude() const { return mag_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    std::int64_t to_int64() const;
    double to_double() const;
    std::string to_string() const;

    Integer operator-() const;
    Integer& operator+=(const Integer& o);
    Integer& operator-=(const Integer& o) { return *this += -o; }
    Integer& operator*=(const Integer& o);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(const Integer& a, const Integer& b);

    // Truncated division (quotient rounds toward zero, remainder has dividend sign).
    std::pair<Integer, Integer> divmod(const Integer& divisor) const;
    friend Integer operator/(const Integer& a, const Integer& b) { return a.divmod(b).first; }
    friend Integer operator%(const Integer& a, const Integer& b) { return a.divmod(b).second; }

    std::strong_ordering operator<=>(const Integer& o) const;
    bool operator==(const Integer& o) const = default;

    friend std::ostream& operator<<(std::ostream& os, const Integer& n);

    static Natural gcd(const Integer& a, const Integer& b) {
        return Natural::gcd(a.mag_, b.mag_);
    }

private:
    Natural mag_;
    bool negative_ = false; // never set when mag_ is zero

    void normalize() {
        if (mag_.is_zero()) negative_ = false;
    }
};

} // namespace combi
