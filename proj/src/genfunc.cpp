#include "combi/genfunc.hpp"

#include <algorithm>
#include <cmath>

#include "combi/error.hpp"
#include "combi/sequences.hpp"

namespace combi::gf {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::constant(Rational c) {
    return Polynomial(std::vector<Rational>{std::move(c)});
}

Polynomial Polynomial::monomial(Rational c, std::size_t degree) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = std::move(c);
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational v;
    for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
    return v;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> coeffs(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(coeffs));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> coeffs(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(coeffs));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    Polynomial rem = *this;
    if (rem.degree() < divisor.degree()) return {Polynomial(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1);
    const Rational& lead = divisor.coeffs_.back();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
        Rational factor = rem.coeffs_.back() / lead;
        q[shift] = factor;
        rem = rem - Polynomial::monomial(factor, shift) * divisor;
    }
    return {Polynomial(std::move(q)), rem};
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += coeffs_[i].to_string();
        if (i == 1) out += "*x";
        else if (i > 1) out += "*x^" + std::to_string(i);
    }
    return out;
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("series needs at least the constant term");
}

TruncatedSeries::TruncatedSeries(const Polynomial& p, std::size_t order) {
    coeffs_.resize(order + 1);
    for (std::size_t i = 0; i <= order; ++i) coeffs_[i] = p.coeff(i);
}

TruncatedSeries TruncatedSeries::geometric(std::size_t order) {
    return TruncatedSeries(std::vector<Rational>(order + 1, Rational(1)));
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
    return TruncatedSeries(std::vector<Rational>(order + 1));
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    std::vector<Rational> coeffs(order + 1);
    coeffs[0] = Rational(1);
    return TruncatedSeries(std::move(coeffs));
}

std::string TruncatedSeries::to_string() const {
    std::string out = coeffs_[0].to_string();
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out += " + " + coeffs_[i].to_string();
        out += i == 1 ? "*x" : "*x^" + std::to_string(i);
    }
    out += " (+O(x^" + std::to_string(coeffs_.size()) + "))";
    return out;
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw DomainError("series truncation orders must match");
}

} // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<Rational> coeffs(a.order() + 1);
    for (std::size_t i = 0; i <= a.order(); ++i) coeffs[i] = a.coeff(i) + b.coeff(i);
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<Rational> coeffs(a.order() + 1);
    for (std::size_t i = 0; i <= a.order(); ++i) coeffs[i] = a.coeff(i) - b.coeff(i);
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<Rational> coeffs(a.order() + 1);
    for (std::size_t i = 0; i <= a.order(); ++i)
        for (std::size_t j = 0; i + j <= a.order(); ++j)
            coeffs[i + j] += a.coeff(i) * b.coeff(j);
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries series_shift(const TruncatedSeries& a, std::size_t k) {
    std::vector<Rational> coeffs(a.order() + 1);
    for (std::size_t i = k; i <= a.order(); ++i) coeffs[i] = a.coeff(i - k);
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& c) {
    std::vector<Rational> coeffs(a.order() + 1);
    for (std::size_t i = 0; i <= a.order(); ++i) coeffs[i] = a.coeff(i) * c;
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
    if (a.order() == 0) return TruncatedSeries::zero(0);
    std::vector<Rational> coeffs(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        coeffs[i] = a.coeff(i + 1) * Rational(static_cast<std::int64_t>(i + 1));
    return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries substitute_monomial(const TruncatedSeries& a, const Rational& c,
                                    std::size_t m) {
    if (m == 0) throw DomainError("substituting a constant is not meaningful");
    std::vector<Rational> coeffs(a.order() + 1);
    Rational cn(1);
    for (std::size_t n = 0; n * m <= a.order(); ++n) {
        coeffs[n * m] = a.coeff(n) * cn;
        cn *= c;
    }
    return TruncatedSeries(std::move(coeffs));
}

RationalGF::RationalGF(Polynomial num, Polynomial den)
    : numerator(std::move(num)), denominator(std::move(den)) {
    if (denominator.coeff(0).is_zero())
        throw DomainError("denominator must have a nonzero constant term");
}

TruncatedSeries expand_rational(const RationalGF& r, std::size_t order) {
    std::vector<Rational> s(order + 1);
    const Rational d0 = r.denominator.coeff(0);
    std::size_t dd = static_cast<std::size_t>(std::max(r.denominator.degree(), 0));
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc = r.numerator.coeff(n);
        for (std::size_t k = 1; k <= std::min(n, dd); ++k)
            acc -= r.denominator.coeff(k) * s[n - k];
        s[n] = acc / d0;
    }
    return TruncatedSeries(std::move(s));
}

namespace {

// Rational roots of a monic rational polynomial (lowest degree first),
// removed one at a time by synthetic division. Returns the roots found;
// `reduced` holds whatever could not be split off.
std::vector<Rational> extract_rational_roots(std::vector<Rational>& monic) {
    std::vector<Rational> roots;
    auto find_root = [](const std::vector<Rational>& poly) -> std::optional<Rational> {
        // Clear denominators: integer polynomial a_0 + a_1 y + ... + a_d y^d.
        Natural common(1);
        for (const auto& c : poly) {
            Natural g = Natural::gcd(common, c.denominator());
            common = common / g * c.denominator();
        }
        std::vector<Integer> ints(poly.size());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            Rational scaled = poly[i] * Rational(Integer(common), Natural(1));
            ints[i] = scaled.numerator();
        }
        if (ints.front().is_zero()) return Rational(0);
        // Candidate roots p/q with p | a_0 and q | a_d (rational root theorem).
        if (!ints.front().magnitude().fits_uint64() || !ints.back().magnitude().fits_uint64())
            return std::nullopt; // out of enumeration range; fall back to numerics
        std::uint64_t a0 = ints.front().magnitude().to_uint64();
        std::uint64_t ad = ints.back().magnitude().to_uint64();
        if (a0 > 2000000000ull || ad > 2000000000ull) return std::nullopt;
        auto divisors = [](std::uint64_t v) {
            std::vector<std::uint64_t> out;
            for (std::uint64_t d = 1; d * d <= v; ++d)
                if (v % d == 0) {
                    out.push_back(d);
                    if (d != v / d) out.push_back(v / d);
                }
            return out;
        };
        auto eval = [&](const Rational& x) {
            Rational v;
            for (std::size_t i = ints.size(); i-- > 0;)
                v = v * x + Rational(ints[i], Natural(1));
            return v;
        };
        for (auto p : divisors(a0))
            for (auto q : divisors(ad)) {
                Rational cand{Integer(Natural(p)), Natural(q)};
                if (eval(cand).is_zero()) return cand;
                if (eval(-cand).is_zero()) return -cand;
            }
        return std::nullopt;
    };

    while (monic.size() > 1) {
        auto root = find_root(monic);
        if (!root) break;
        roots.push_back(*root);
        // Synthetic division by (y - root).
        std::vector<Rational> quot(monic.size() - 1);
        Rational carry;
        for (std::size_t i = monic.size(); i-- > 1;) {
            carry = monic[i] + carry * *root;
            quot[i - 1] = carry;
        }
        monic = std::move(quot);
    }
    return roots;
}

std::vector<std::complex<double>> numeric_roots(const std::vector<Rational>& monic) {
    std::size_t d = monic.size() - 1;
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 1.0;
        for (std::size_t i = d; i-- > 0;) v = v * x + monic[i].to_double();
        return v;
    };
    std::vector<std::complex<double>> z(d);
    double radius = 1.0;
    for (const auto& c : monic) radius = std::max(radius, std::abs(c.to_double()));
    radius += 1.0;
    for (std::size_t i = 0; i < d; ++i)
        z[i] = std::polar(radius, 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(d) + 0.4);
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            std::complex<double> denom = 1.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) denom *= z[i] - z[j];
            std::complex<double> delta = eval(z[i]) / denom;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

} // namespace

PartialFractions partial_fractions(const RationalGF& r) {
    PartialFractions out;
    if (r.denominator.degree() < 1)
        throw DomainError("denominator must have positive degree");

    auto [quot, rem] = r.numerator.divmod(r.denominator);
    out.polynomial_part = quot;

    // den(x) = d_0 * prod (1 - r_i x): the r_i are the roots of the reversed
    // monic polynomial y^d + (d_1/d_0) y^{d-1} + ... + d_d/d_0.
    std::size_t d = static_cast<std::size_t>(r.denominator.degree());
    const Rational d0 = r.denominator.coeff(0);
    std::vector<Rational> reversed(d + 1);
    for (std::size_t i = 0; i <= d; ++i)
        reversed[d - i] = r.denominator.coeff(i) / d0;

    std::vector<Rational> remaining = reversed;
    std::vector<Rational> rational_roots = extract_rational_roots(remaining);

    if (rational_roots.size() == d) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (rational_roots[i] == rational_roots[j])
                    throw RepeatedFactor("denominator has a repeated linear factor");
        out.exact = true;
        for (std::size_t i = 0; i < d; ++i) {
            const Rational& ri = rational_roots[i];
            if (ri.is_zero())
                throw DomainError("denominator degree drops (zero root)");
            Rational weight = rem.evaluate(ri.reciprocal());
            Rational denom = d0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) denom *= Rational(1) - rational_roots[j] / ri;
            out.exact_terms.emplace_back(weight / denom, ri);
        }
        return out;
    }

    std::vector<std::complex<double>> roots = numeric_roots(reversed);
    double scale = 1.0;
    for (auto& z : roots) scale = std::max(scale, std::abs(z));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-7 * scale)
                throw RepeatedFactor("denominator has a repeated linear factor");
    auto eval_rem = [&](std::complex<double> x) {
        std::complex<double> v = 0.0;
        for (std::size_t i = static_cast<std::size_t>(rem.degree() + 1); i-- > 0;)
            v = v * x + rem.coeff(i).to_double();
        return v;
    };
    for (std::size_t i = 0; i < d; ++i) {
        std::complex<double> ri = roots[i];
        std::complex<double> denom = d0.to_double();
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) denom *= 1.0 - roots[j] / ri;
        out.numeric_terms.emplace_back(eval_rem(1.0 / ri) / denom, ri);
    }
    return out;
}

RationalGF recurrence_to_gf(const seq::LinearRecurrence& rec) {
    rec.validate();
    std::size_t d = rec.order();
    std::size_t first = static_cast<std::size_t>(rec.first_index);
    // Reversed characteristic polynomial 1 - c_1 x - ... - c_d x^d.
    std::vector<Rational> den(d + 1);
    den[0] = Rational(1);
    for (std::size_t i = 0; i < d; ++i) den[i + 1] = -rec.coefficients[i];
    Polynomial denominator{den};
    // Numerator: den * (series of the sequence), which the recurrence kills
    // beyond degree first+d-1.
    std::vector<Rational> seq_prefix(first + d);
    for (std::size_t i = 0; i < d; ++i) seq_prefix[first + i] = rec.initial_values[i];
    std::vector<Rational> num(first + d);
    for (std::size_t n = 0; n < first + d; ++n)
        for (std::size_t k = 0; k <= std::min(n, d); ++k)
            num[n] += den[k] * seq_prefix[n - k];
    return RationalGF(Polynomial(std::move(num)), std::move(denominator));
}

TruncatedSeries series_sqrt(const TruncatedSeries& a) {
    if (a.coeff(0) != Rational(1))
        throw DomainError("series sqrt requires constant term 1");
    std::vector<Rational> s(a.order() + 1);
    s[0] = Rational(1);
    const Rational two(2);
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Rational acc = a.coeff(n);
        for (std::size_t k = 1; k < n; ++k) acc -= s[k] * s[n - k];
        s[n] = acc / two;
    }
    return TruncatedSeries(std::move(s));
}

TruncatedSeries catalan_gf(std::size_t order) {
    // (1 - sqrt(1-4x)) / (2x): with s = sqrt(1-4x), coefficient n is -s_{n+1}/2.
    TruncatedSeries base(Polynomial({Rational(1), Rational(-4)}), order + 1);
    TruncatedSeries root = series_sqrt(base);
    std::vector<Rational> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        c[n] = -root.coeff(n + 1) / Rational(2);
    return TruncatedSeries(std::move(c));
}

namespace {

// Multiply s in place by (1 + x^v + x^{2v} + ... + x^{cv}) truncated at T,
// with c possibly unlimited; all coefficients stay nonnegative integers.
void apply_coin(std::vector<Natural>& s, std::uint64_t value,
                std::optional<std::uint64_t> count) {
    std::size_t order = s.size() - 1;
    if (value == 0) throw DomainError("coin value must be positive");
    if (!count) {
        // 1/(1-x^v): prefix-sum with stride v
        for (std::size_t n = value; n <= order; ++n) s[n] += s[n - value];
        return;
    }
    std::vector<Natural> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (s[n].is_zero()) continue;
        for (std::uint64_t j = 0; j <= *count; ++j) {
            std::uint64_t shift = j * value;
            if (shift > order - n) break;
            out[n + shift] += s[n];
        }
    }
    s = std::move(out);
}

} // namespace

TruncatedSeries coin_change_series(const std::vector<CoinSpec>& coins,
                                   std::size_t order) {
    std::vector<Natural> s(order + 1);
    s[0] = Natural(1);
    for (const auto& coin : coins) apply_coin(s, coin.value, coin.count);
    std::vector<Rational> coeffs(order + 1);
    for (std::size_t i = 0; i <= order; ++i)
        coeffs[i] = Rational(Integer(s[i]), Natural(1));
    return TruncatedSeries(std::move(coeffs));
}

Polynomial coin_change_polynomial(const std::vector<CoinSpec>& coins) {
    std::uint64_t degree = 0;
    for (const auto& coin : coins) {
        if (!coin.count)
            throw DomainError("unlimited coins need a truncation order");
        degree += coin.value * *coin.count;
    }
    TruncatedSeries s = coin_change_series(coins, degree);
    return Polynomial(s.coefficients());
}

Natural ways_to_pay(const std::vector<CoinSpec>& coins, std::uint64_t amount) {
    std::vector<Natural> s(amount + 1);
    s[0] = Natural(1);
    for (const auto& coin : coins) apply_coin(s, coin.value, coin.count);
    return s[amount];
}

Natural partition_count(std::uint64_t n, std::size_t order) {
    if (order < n) throw DomainError("truncation order must cover n");
    std::vector<Natural> s(order + 1);
    s[0] = Natural(1);
    for (std::uint64_t k = 1; k <= n; ++k)
        for (std::size_t m = k; m <= order; ++m) s[m] += s[m - k];
    return s[n];
}

Natural partition_count_distinct(std::uint64_t n) {
    std::vector<Natural> s(n + 1);
    s[0] = Natural(1);
    for (std::uint64_t k = 1; k <= n; ++k)
        for (std::size_t m = n; m + 1 > k; --m) s[m] += s[m - k];
    return s[n];
}

Natural partition_count_odd(std::uint64_t n) {
    std::vector<Natural> s(n + 1);
    s[0] = Natural(1);
    for (std::uint64_t k = 1; k <= n; k += 2)
        for (std::size_t m = k; m <= n; ++m) s[m] += s[m - k];
    return s[n];
}

} // namespace combi::gf
