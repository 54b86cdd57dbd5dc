#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combi/natural.hpp"
#include "combi/rational.hpp"

namespace combi::gf {

// Polynomial with exact rational coefficients, index = exponent,
// normalized so the zero polynomial stores no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(Rational c);
    static Polynomial monomial(Rational c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational();
    }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& x) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    bool operator==(const Polynomial& o) const = default;

    // Quotient and remainder with deg(rem) < deg(divisor).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;

    void trim();
};

// Formal power series truncated at a fixed order T: exactly T+1 stored
// coefficients. Binary operations demand equal truncation orders.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs); // order = size-1
    TruncatedSeries(const Polynomial& p, std::size_t order);

    // 1 + x + x^2 + ... truncated at T.
    static TruncatedSeries geometric(std::size_t order);
    static TruncatedSeries zero(std::size_t order);
    static TruncatedSeries one(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& coeff(std::size_t i) const { return coeffs_[i]; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool operator==(const TruncatedSeries& o) const = default;

    std::string to_string() const; // a0 + a1*x + ... + aT*x^T (+O(x^{T+1}))

private:
    std::vector<Rational> coeffs_;
};

// Coefficientwise sum / difference; throws DomainError on mismatched orders.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
// Cauchy convolution truncated at the common order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Coefficient n of the shift is a_{n-k} (0 for n < k).
TruncatedSeries series_shift(const TruncatedSeries& a, std::size_t k);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c);

// Coefficient n is (n+1) a_{n+1}; output order T-1.
TruncatedSeries series_derivative(const TruncatedSeries& a);

// Substitute the monomial c*x^m (m >= 1): coefficient of x^{mn} becomes a_n c^n.
TruncatedSeries substitute_monomial(const TruncatedSeries& a, const Rational& c,
                                    std::size_t m);

// Rational generating function num/den with den(0) != 0.
struct RationalGF {
    Polynomial numerator;
    Polynomial denominator;

    RationalGF(Polynomial num, Polynomial den);
};

// Unique series S with S*den = num through order T (long-division recurrence).
TruncatedSeries expand_rational(const RationalGF& r, std::size_t order);

// Decomposition R = polynomial_part + sum z_i / (1 - r_i x). Rational roots are
// produced exactly; otherwise the terms are numeric. Throws RepeatedFactor when
// the denominator has a repeated linear factor.
struct PartialFractions {
    bool exact = false;
    std::vector<std::pair<Rational, Rational>> exact_terms; // (weight, root)
    std::vector<std::pair<std::complex<double>, std::complex<double>>> numeric_terms;
    Polynomial polynomial_part;
};
PartialFractions partial_fractions(const RationalGF& r);

} // namespace combi::gf

namespace combi::seq {
struct LinearRecurrence; // sequences.hpp
}

namespace combi::gf {

// Generating function of the sequence (indexed from the recurrence's first
// index): denominator is the reversed characteristic polynomial.
RationalGF recurrence_to_gf(const seq::LinearRecurrence& rec);

// S with S*S = A through order T; requires a_0 = 1 (positive branch).
TruncatedSeries series_sqrt(const TruncatedSeries& a);

// (1 - sqrt(1-4x)) / (2x) truncated at T; coefficient n is the n-th Catalan number.
TruncatedSeries catalan_gf(std::size_t order);

// A pile of identical coins of one value; count is empty for an unlimited supply.
struct CoinSpec {
    std::uint64_t value = 1;
    std::optional<std::uint64_t> count;
};

// Product of the per-coin polynomials truncated at the given order.
TruncatedSeries coin_change_series(const std::vector<CoinSpec>& coins,
                                   std::size_t order);
// Exact polynomial product; rejects unlimited coins.
Polynomial coin_change_polynomial(const std::vector<CoinSpec>& coins);
// Coefficient of x^amount in the coin-change product.
Natural ways_to_pay(const std::vector<CoinSpec>& coins, std::uint64_t amount);

// Coefficient n of prod_{k=1..n} 1/(1-x^k) truncated at T >= n.
Natural partition_count(std::uint64_t n, std::size_t order);
inline Natural partition_count(std::uint64_t n) {
    return partition_count(n, static_cast<std::size_t>(n));
}
// From prod_k (1 + x^k): partitions into distinct parts.
Natural partition_count_distinct(std::uint64_t n);
// From prod_{k odd} 1/(1-x^k): partitions into odd parts.
Natural partition_count_odd(std::uint64_t n);

} // namespace combi::gf
