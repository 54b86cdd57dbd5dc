#include "combi/natural.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "combi/error.hpp"

namespace combi {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

Natural::Natural(std::uint64_t v) {
    if (v) limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

Natural::Natural(std::string_view decimal) {
    if (decimal.empty()) throw ParseError("empty natural literal");
    for (char c : decimal) {
        if (c < '0' || c > '9') throw ParseError("invalid digit in natural literal");
        // *this = *this * 10 + digit, done limb-wise
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * 10 + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }
    trim();
}

void Natural::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t Natural::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool Natural::bit(std::size_t i) const {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

std::uint64_t Natural::to_uint64() const {
    if (!fits_uint64()) throw DomainError("natural too large for uint64");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

double Natural::to_double() const {
    double v = 0.0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it)
        v = v * static_cast<double>(kBase) + static_cast<double>(*it);
    return v;
}

Natural& Natural::operator+=(const Natural& o) {
    if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t cur = carry + limbs_[i];
        if (i < o.limbs_.size()) cur += o.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

Natural& Natural::operator-=(const Natural& o) {
    if (*this < o) throw DomainError("natural subtraction would be negative");
    sub_in_place_at(o, 0);
    return *this;
}

void Natural::sub_in_place_at(const Natural& o, std::size_t limb_shift) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < o.limbs_.size() || borrow; ++i) {
        std::size_t idx = i + limb_shift;
        std::int64_t cur = static_cast<std::int64_t>(limbs_[idx]) - borrow -
                           (i < o.limbs_.size() ? static_cast<std::int64_t>(o.limbs_[i]) : 0);
        borrow = cur < 0;
        if (borrow) cur += static_cast<std::int64_t>(kBase);
        limbs_[idx] = static_cast<std::uint32_t>(cur);
    }
    trim();
}

Natural operator*(const Natural& a, const Natural& b) {
    Natural out;
    if (a.is_zero() || b.is_zero()) return out;
    out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

Natural& Natural::operator*=(const Natural& o) { return *this = *this * o; }

std::uint32_t Natural::div_small(std::uint32_t divisor) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

std::pair<Natural, Natural> Natural::divmod(const Natural& divisor) const {
    if (divisor.is_zero()) throw DomainError("division by zero");
    if (*this < divisor) return {Natural(), *this};
    if (divisor.limbs_.size() == 1) {
        Natural q = *this;
        std::uint32_t r = q.div_small(divisor.limbs_[0]);
        return {std::move(q), Natural(r)};
    }
    // Binary long division: adequate at the scales this library works at.
    Natural quotient, remainder;
    std::size_t nbits = bit_length();
    quotient.limbs_.assign(limbs_.size(), 0);
    for (std::size_t i = nbits; i-- > 0;) {
        remainder <<= 1;
        if (bit(i)) {
            if (remainder.limbs_.empty()) remainder.limbs_.push_back(1);
            else remainder.limbs_[0] |= 1u;
        }
        if (remainder >= divisor) {
            remainder.sub_in_place_at(divisor, 0);
            quotient.limbs_[i / 32] |= (1u << (i % 32));
        }
    }
    quotient.trim();
    return {std::move(quotient), std::move(remainder)};
}

Natural& Natural::operator<<=(std::size_t bits) {
    if (is_zero() || bits == 0) return *this;
    std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
    std::size_t old = limbs_.size();
    limbs_.resize(old + limb_shift + 1, 0);
    for (std::size_t i = old; i-- > 0;) {
        std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
        limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
        limbs_[i + limb_shift] = static_cast<std::uint32_t>(v & 0xffffffffu);
    }
    for (std::size_t i = 0; i < limb_shift; ++i) limbs_[i] = 0;
    trim();
    return *this;
}

Natural& Natural::operator>>=(std::size_t bits) {
    std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) {
        limbs_.clear();
        return *this;
    }
    limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift));
    if (bit_shift) {
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            limbs_[i] >>= bit_shift;
            if (i + 1 < limbs_.size())
                limbs_[i] |= limbs_[i + 1] << (32 - bit_shift);
        }
    }
    trim();
    return *this;
}

std::strong_ordering Natural::operator<=>(const Natural& o) const {
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() <=> o.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
    return std::strong_ordering::equal;
}

std::string Natural::to_string() const {
    if (is_zero()) return "0";
    Natural tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint32_t chunk = tmp.div_small(1000000000u);
        if (tmp.is_zero()) {
            out = std::to_string(chunk) + out;
        } else {
            std::string part = std::to_string(chunk);
            out = std::string(9 - part.size(), '0') + part + out;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.to_string();
}

Natural Natural::pow(const Natural& base, std::uint64_t exp) {
    Natural result(1), b = base;
    while (exp) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return result;
}

Natural Natural::gcd(Natural a, Natural b) {
    while (!b.is_zero()) {
        Natural r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// ---- Integer ----

Integer::Integer(std::int64_t v)
    : mag_(v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v)),
      negative_(v < 0) {}

Integer::Integer(Natural mag, bool negative)
    : mag_(std::move(mag)), negative_(negative) {
    normalize();
}

Integer::Integer(std::string_view decimal) {
    if (!decimal.empty() && (decimal.front() == '-' || decimal.front() == '+')) {
        negative_ = decimal.front() == '-';
        decimal.remove_prefix(1);
    }
    mag_ = Natural(decimal);
    normalize();
}

std::int64_t Integer::to_int64() const {
    std::uint64_t m = mag_.to_uint64();
    if (negative_) {
        if (m > static_cast<std::uint64_t>(INT64_MAX) + 1)
            throw DomainError("integer too small for int64");
        return m == static_cast<std::uint64_t>(INT64_MAX) + 1
                   ? INT64_MIN
                   : -static_cast<std::int64_t>(m);
    }
    if (m > static_cast<std::uint64_t>(INT64_MAX))
        throw DomainError("integer too large for int64");
    return static_cast<std::int64_t>(m);
}

double Integer::to_double() const {
    double v = mag_.to_double();
    return negative_ ? -v : v;
}

std::string Integer::to_string() const {
    return negative_ ? "-" + mag_.to_string() : mag_.to_string();
}

Integer Integer::operator-() const {
    Integer out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

Integer& Integer::operator+=(const Integer& o) {
    if (negative_ == o.negative_) {
        mag_ += o.mag_;
    } else if (mag_ >= o.mag_) {
        mag_ -= o.mag_;
    } else {
        mag_ = o.mag_ - mag_;
        negative_ = o.negative_;
    }
    normalize();
    return *this;
}

Integer& Integer::operator*=(const Integer& o) {
    mag_ *= o.mag_;
    negative_ = negative_ != o.negative_;
    normalize();
    return *this;
}

Integer operator*(const Integer& a, const Integer& b) {
    Integer out = a;
    out *= b;
    return out;
}

std::pair<Integer, Integer> Integer::divmod(const Integer& divisor) const {
    auto [q, r] = mag_.divmod(divisor.mag_);
    bool qneg = negative_ != divisor.negative_;
    return {Integer(std::move(q), qneg), Integer(std::move(r), negative_)};
}

std::strong_ordering Integer::operator<=>(const Integer& o) const {
    if (negative_ != o.negative_)
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    auto cmp = mag_ <=> o.mag_;
    if (!negative_) return cmp;
    if (cmp == std::strong_ordering::less) return std::strong_ordering::greater;
    if (cmp == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Integer& n) {
    return os << n.to_string();
}

} // namespace combi
