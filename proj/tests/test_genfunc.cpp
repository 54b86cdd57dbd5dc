#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "combi/counting.hpp"
#include "combi/error.hpp"
#include "combi/genfunc.hpp"
#include "combi/sequences.hpp"

using namespace combi;
using namespace combi::gf;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order) {
    std::vector<Rational> coeffs(order + 1);
    for (auto& c : coeffs)
        c = Rational(static_cast<std::int64_t>(rng() % 21) - 10,
                     static_cast<std::int64_t>(rng() % 6) + 1);
    return TruncatedSeries(std::move(coeffs));
}

// All ways to assemble `amount` from bounded coin piles, by direct looping.
std::uint64_t brute_force_pay(const std::vector<CoinSpec>& coins,
                              std::uint64_t amount) {
    struct Rec {
        const std::vector<CoinSpec>& coins;
        std::uint64_t operator()(std::size_t i, std::uint64_t remaining) const {
            if (i == coins.size()) return remaining == 0 ? 1 : 0;
            std::uint64_t limit = coins[i].count ? *coins[i].count
                                                 : remaining / coins[i].value;
            std::uint64_t total = 0;
            for (std::uint64_t take = 0; take <= limit; ++take) {
                std::uint64_t spent = take * coins[i].value;
                if (spent > remaining) break;
                total += (*this)(i + 1, remaining - spent);
            }
            return total;
        }
    };
    return Rec{coins}(0, amount);
}

// Recursive partition enumeration (parts bounded above to avoid reordering).
std::uint64_t enumerate_partitions(std::uint64_t n, std::uint64_t max_part) {
    if (n == 0) return 1;
    std::uint64_t total = 0;
    for (std::uint64_t p = std::min(n, max_part); p >= 1; --p)
        total += enumerate_partitions(n - p, p);
    return total;
}

} // namespace

TEST_CASE("series add and mul basics") {
    auto geo = TruncatedSeries::geometric(8);
    auto square = series_mul(geo, geo);
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(square.coeff(n) == Rational(static_cast<std::int64_t>(n + 1)));

    auto one_minus_x = TruncatedSeries(Polynomial({Rational(1), Rational(-1)}), 8);
    auto product = series_mul(geo, one_minus_x);
    CHECK(product == TruncatedSeries::one(8));

    CHECK(series_add(geo, TruncatedSeries::zero(8)) == geo);
    CHECK_THROWS_AS(series_add(geo, TruncatedSeries::zero(5)), DomainError);
}

TEST_CASE("shift scale derivative") {
    auto geo = TruncatedSeries::geometric(6);
    auto shifted = series_shift(geo, 1);
    CHECK(shifted.coeff(0) == Rational(0));
    for (std::size_t n = 1; n <= 6; ++n) CHECK(shifted.coeff(n) == Rational(1));
    CHECK(series_shift(geo, 0) == geo);

    auto double_shift2 = series_scale(series_shift(geo, 2), Rational(2));
    CHECK(double_shift2.coeff(0) == Rational(0));
    CHECK(double_shift2.coeff(1) == Rational(0));
    for (std::size_t n = 2; n <= 6; ++n) CHECK(double_shift2.coeff(n) == Rational(2));

    auto deriv = series_derivative(geo);
    CHECK(deriv.order() == 5);
    for (std::size_t n = 0; n <= 5; ++n)
        CHECK(deriv.coeff(n) == Rational(static_cast<std::int64_t>(n + 1)));

    auto constant = TruncatedSeries(Polynomial::constant(Rational(9)), 4);
    CHECK(series_derivative(constant) == TruncatedSeries::zero(3));

    // d/dx 1/(1-x)^2 = 2/(1-x)^3, coefficient n: (n+1)(n+2)
    auto geo_sq = series_mul(geo, geo);
    auto second = series_derivative(geo_sq);
    for (std::size_t n = 0; n <= 5; ++n)
        CHECK(second.coeff(n) ==
              Rational(static_cast<std::int64_t>((n + 1) * (n + 2))));
}

TEST_CASE("monomial substitution") {
    auto geo = TruncatedSeries::geometric(7);
    auto doubled = substitute_monomial(geo, Rational(2), 1);
    std::int64_t pw = 1;
    for (std::size_t n = 0; n <= 7; ++n) {
        CHECK(doubled.coeff(n) == Rational(pw));
        pw *= 2;
    }
    auto even = substitute_monomial(geo, Rational(1), 2);
    for (std::size_t n = 0; n <= 7; ++n)
        CHECK(even.coeff(n) == (n % 2 == 0 ? Rational(1) : Rational(0)));
    CHECK(substitute_monomial(geo, Rational(1), 1) == geo);
    CHECK_THROWS_AS(substitute_monomial(geo, Rational(1), 0), DomainError);
}

TEST_CASE("ring laws on random series") {
    std::mt19937_64 rng(555);
    for (int i = 0; i < 40; ++i) {
        std::size_t order = rng() % 65;
        auto a = random_series(rng, order);
        auto b = random_series(rng, order);
        auto c = random_series(rng, order);
        CHECK(series_add(a, b) == series_add(b, a));
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_add(series_add(a, b), c) == series_add(a, series_add(b, c)));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
        CHECK(series_mul(a, series_add(b, c)) ==
              series_add(series_mul(a, b), series_mul(a, c)));
    }
}

TEST_CASE("derivative product rule") {
    std::mt19937_64 rng(808);
    for (int i = 0; i < 30; ++i) {
        std::size_t order = 1 + rng() % 24;
        auto a = random_series(rng, order);
        auto b = random_series(rng, order);
        auto lhs = series_derivative(series_mul(a, b));
        auto da = series_derivative(a);
        auto db = series_derivative(b);
        // truncate the factors to order-1 to multiply at the output order
        auto head = [&](const TruncatedSeries& s) {
            std::vector<Rational> coeffs(s.coefficients().begin(),
                                         s.coefficients().end() - 1);
            return TruncatedSeries(std::move(coeffs));
        };
        auto rhs = series_add(series_mul(head(a), db), series_mul(head(b), da));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("expand rational") {
    // 3/(1-2x): 3 * 2^n
    RationalGF simple(Polynomial::constant(Rational(3)),
                      Polynomial({Rational(1), Rational(-2)}));
    auto s = expand_rational(simple, 12);
    std::int64_t pw = 1;
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(s.coeff(n) == Rational(3 * pw));
        pw *= 2;
    }

    // x/((1-x)(1-2x)): 2^n - 1
    RationalGF hanoi(Polynomial({Rational(0), Rational(1)}),
                     Polynomial({Rational(1), Rational(-3), Rational(2)}));
    auto h = expand_rational(hanoi, 30);
    Natural two_n(1);
    for (std::size_t n = 0; n <= 30; ++n) {
        CHECK(h.coeff(n) == Rational(Integer(two_n - Natural(1)), Natural(1)));
        two_n *= Natural(2);
    }

    // 1/(1-x)^3: (n+1)(n+2)/2
    RationalGF cubed(Polynomial::constant(Rational(1)),
                     Polynomial({Rational(1), Rational(-3), Rational(3), Rational(-1)}));
    auto c = expand_rational(cubed, 10);
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(c.coeff(n) ==
              Rational(static_cast<std::int64_t>((n + 1) * (n + 2) / 2)));

    CHECK_THROWS_AS(RationalGF(Polynomial::constant(Rational(1)),
                               Polynomial({Rational(0), Rational(1)})),
                    DomainError);
}

TEST_CASE("partial fractions with rational roots") {
    RationalGF hanoi(Polynomial({Rational(0), Rational(1)}),
                     Polynomial({Rational(1), Rational(-3), Rational(2)}));
    auto pf = partial_fractions(hanoi);
    REQUIRE(pf.exact);
    REQUIRE(pf.exact_terms.size() == 2);
    auto terms = pf.exact_terms;
    std::sort(terms.begin(), terms.end(),
              [](auto& a, auto& b) { return a.second < b.second; });
    CHECK(terms[0] == std::pair<Rational, Rational>{Rational(-1), Rational(1)});
    CHECK(terms[1] == std::pair<Rational, Rational>{Rational(1), Rational(2)});
    CHECK(pf.polynomial_part.is_zero());

    // trivial single factor c/(1-rx)
    RationalGF single(Polynomial::constant(Rational(7)),
                      Polynomial({Rational(1), Rational(-5, 3)}));
    auto ps = partial_fractions(single);
    REQUIRE(ps.exact);
    REQUIRE(ps.exact_terms.size() == 1);
    CHECK(ps.exact_terms[0].first == Rational(7));
    CHECK(ps.exact_terms[0].second == Rational(5, 3));

    // repeated factor (1-x)^2
    RationalGF repeated(Polynomial::constant(Rational(1)),
                        Polynomial({Rational(1), Rational(-2), Rational(1)}));
    CHECK_THROWS_AS(partial_fractions(repeated), RepeatedFactor);
}

TEST_CASE("partial fractions with irrational roots") {
    // Fibonacci GF x/(1-x-x^2): weights +-1/sqrt5 at roots (1+-sqrt5)/2
    RationalGF fib(Polynomial({Rational(0), Rational(1)}),
                   Polynomial({Rational(1), Rational(-1), Rational(-1)}));
    auto pf = partial_fractions(fib);
    REQUIRE(!pf.exact);
    REQUIRE(pf.numeric_terms.size() == 2);
    double s5 = std::sqrt(5.0);
    for (auto& [weight, root] : pf.numeric_terms) {
        if (root.real() > 0) {
            CHECK(root.real() == doctest::Approx((1 + s5) / 2).epsilon(1e-9));
            CHECK(weight.real() == doctest::Approx(1 / s5).epsilon(1e-9));
        } else {
            CHECK(root.real() == doctest::Approx((1 - s5) / 2).epsilon(1e-9));
            CHECK(weight.real() == doctest::Approx(-1 / s5).epsilon(1e-9));
        }
    }
}

TEST_CASE("numeric partial fractions recombine within 1e-9 per coefficient") {
    // irrational-root denominators from small recurrences
    std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> cases{
        // Fibonacci GF x/(1-x-x^2)
        {{Rational(0), Rational(1)}, {Rational(1), Rational(-1), Rational(-1)}},
        // x/(1-2x-x^2): Pell-like, roots 1 +- sqrt2
        {{Rational(0), Rational(1)}, {Rational(1), Rational(-2), Rational(-1)}},
        // (1+x)/(1-x-x^3)
        {{Rational(1), Rational(1)},
         {Rational(1), Rational(-1), Rational(0), Rational(-1)}},
    };
    for (auto& [num_coeffs, den_coeffs] : cases) {
        RationalGF r{Polynomial(num_coeffs), Polynomial(den_coeffs)};
        auto pf = partial_fractions(r);
        REQUIRE(!pf.exact);
        auto expanded = expand_rational(r, 30);
        for (std::size_t n = 0; n <= 30; ++n) {
            std::complex<double> sum = 0.0;
            for (auto& [z, root] : pf.numeric_terms)
                sum += z * std::pow(root, static_cast<double>(n));
            double exact = expanded.coeff(n).to_double();
            double scale = std::max(1.0, std::abs(exact));
            CHECK(std::abs(sum.real() - exact) / scale < 1e-9);
            CHECK(std::abs(sum.imag()) / scale < 1e-9);
        }
    }
}

TEST_CASE("partial fractions recombine to the original coefficients") {
    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 25) {
        // random denominator from rational roots, random small numerator
        std::size_t d = 1 + rng() % 3;
        Polynomial den = Polynomial::constant(Rational(1));
        std::vector<Rational> roots;
        for (std::size_t i = 0; i < d; ++i) {
            Rational r(static_cast<std::int64_t>(rng() % 9) - 4,
                       static_cast<std::int64_t>(rng() % 3) + 1);
            if (r.is_zero()) r = Rational(1);
            roots.push_back(r);
            den = den * Polynomial({Rational(1), -r});
        }
        bool distinct = true;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (roots[i] == roots[j]) distinct = false;
        if (!distinct) continue;
        std::vector<Rational> num_coeffs(d);
        for (auto& c : num_coeffs)
            c = Rational(static_cast<std::int64_t>(rng() % 11) - 5);
        Polynomial num(num_coeffs);
        RationalGF r(num, den);
        auto pf = partial_fractions(r);
        REQUIRE(pf.exact);
        // sum z_i r_i^n must reproduce the expansion exactly
        auto expanded = expand_rational(r, 18);
        for (std::size_t n = 0; n <= 18; ++n) {
            Rational sum;
            for (auto& [z, root] : pf.exact_terms) {
                Rational power(1);
                for (std::size_t k = 0; k < n; ++k) power *= root;
                sum += z * power;
            }
            CHECK(sum == expanded.coeff(n));
        }
        ++done;
    }
}

TEST_CASE("recurrence to generating function") {
    seq::LinearRecurrence fib;
    fib.coefficients = {Rational(1), Rational(1)};
    fib.initial_values = {Rational(0), Rational(1)};
    fib.first_index = 0;
    auto gf = recurrence_to_gf(fib);
    CHECK(gf.numerator == Polynomial({Rational(0), Rational(1)}));
    CHECK(gf.denominator ==
          Polynomial({Rational(1), Rational(-1), Rational(-1)}));

    seq::LinearRecurrence rec;
    rec.coefficients = {Rational(5), Rational(-6)};
    rec.initial_values = {Rational(0), Rational(1)};
    rec.first_index = 0;
    auto gf2 = recurrence_to_gf(rec);
    CHECK(gf2.numerator == Polynomial({Rational(0), Rational(1)}));
    CHECK(gf2.denominator ==
          Polynomial({Rational(1), Rational(-5), Rational(6)}));

    seq::LinearRecurrence doubling;
    doubling.coefficients = {Rational(2)};
    doubling.initial_values = {Rational(3)};
    doubling.first_index = 0;
    auto gf3 = recurrence_to_gf(doubling);
    CHECK(gf3.numerator == Polynomial::constant(Rational(3)));
    CHECK(gf3.denominator == Polynomial({Rational(1), Rational(-2)}));
}

TEST_CASE("expansion of a recurrence gf reproduces iteration") {
    std::mt19937_64 rng(1212);
    int done = 0;
    while (done < 30) {
        std::size_t d = 1 + rng() % 4;
        seq::LinearRecurrence rec;
        for (std::size_t i = 0; i < d; ++i)
            rec.coefficients.push_back(
                Rational(static_cast<std::int64_t>(rng() % 9) - 4));
        if (rec.coefficients.back().is_zero()) continue;
        for (std::size_t i = 0; i < d; ++i)
            rec.initial_values.push_back(
                Rational(static_cast<std::int64_t>(rng() % 7) - 3));
        rec.first_index = static_cast<int>(rng() % 2);
        auto gf = recurrence_to_gf(rec);
        auto expansion = expand_rational(gf, 30);
        for (std::uint64_t n = rec.first_index; n <= 30; ++n)
            CHECK(expansion.coeff(n) == iterate_recurrence(rec, n));
        ++done;
    }
}

TEST_CASE("series square root") {
    TruncatedSeries base(Polynomial({Rational(1), Rational(-4)}), 10);
    auto root = series_sqrt(base);
    CHECK(root.coeff(0) == Rational(1));
    CHECK(root.coeff(1) == Rational(-2));
    CHECK(root.coeff(2) == Rational(-2));
    CHECK(root.coeff(3) == Rational(-4));
    CHECK(series_mul(root, root) == base);

    CHECK(series_sqrt(TruncatedSeries::one(5)) == TruncatedSeries::one(5));

    // coefficient n equals binom(1/2, n) * (-4)^n
    for (std::uint64_t n = 0; n <= 10; ++n) {
        Rational gb = counting::generalized_binomial(Rational(1, 2), n);
        Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
        Rational four_n(1);
        for (std::uint64_t i = 0; i < n; ++i) four_n *= Rational(4);
        CHECK(root.coeff(n) == gb * sign * four_n);
    }

    CHECK_THROWS_AS(series_sqrt(TruncatedSeries::zero(4)), DomainError);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        std::size_t order = 1 + rng() % 32;
        auto a = random_series(rng, order);
        std::vector<Rational> coeffs = a.coefficients();
        coeffs[0] = Rational(1);
        TruncatedSeries fixed(std::move(coeffs));
        auto s = series_sqrt(fixed);
        CHECK(series_mul(s, s) == fixed);
    }
}

TEST_CASE("catalan generating function") {
    auto c = catalan_gf(12);
    std::vector<std::uint64_t> first10{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (std::size_t n = 0; n < 10; ++n)
        CHECK(c.coeff(n) == Rational(static_cast<std::int64_t>(first10[n])));
    CHECK(c.coeff(0) == Rational(1));
    CHECK(c.coeff(12) == Rational(208012)); // C(24,12)/13
    CHECK(Rational(Integer(counting::binomial(24, 12) / Natural(13)), Natural(1)) ==
          Rational(208012));
    for (std::size_t n = 0; n <= 12; ++n)
        CHECK(c.coeff(n) ==
              Rational(Integer(counting::catalan(n)), Natural(1)));
}

TEST_CASE("coin change") {
    // 6 pennies + 2 nickels: two ways to give 6 cents
    std::vector<CoinSpec> pocket{{1, 6}, {5, 2}};
    CHECK(ways_to_pay(pocket, 6).to_uint64() == 2);
    CHECK(ways_to_pay(pocket, 17).is_zero());
    auto poly = coin_change_polynomial(pocket);
    CHECK(poly.degree() == 16);
    CHECK(poly.coeff(6) == Rational(2));
    CHECK(poly.coeff(11) == Rational(2));
    CHECK(poly.coeff(0) == Rational(1));

    // the section's wallet: coefficient of x^100 is 5
    std::vector<CoinSpec> wallet{{1, 6}, {5, 2}, {10, 4}, {25, 3}};
    CHECK(ways_to_pay(wallet, 100).to_uint64() == 5);

    // Harry Potter pouch: every coefficient is 0 or 1
    std::vector<CoinSpec> pouch{{1, 3}, {29, 2}, {493, 2}};
    auto pouch_poly = coin_change_polynomial(pouch);
    CHECK(pouch_poly.degree() == 1047);
    for (int i = 0; i <= pouch_poly.degree(); ++i) {
        Rational c = pouch_poly.coeff(static_cast<std::size_t>(i));
        CHECK((c == Rational(0) || c == Rational(1)));
    }
    CHECK(pouch_poly.coeff(553) == Rational(1));

    // empty pocket
    CHECK(ways_to_pay({}, 0).to_uint64() == 1);
    CHECK(ways_to_pay({}, 3).is_zero());

    // unlimited coins need an order for the polynomial form
    std::vector<CoinSpec> unlimited{{1, std::nullopt}, {5, std::nullopt}};
    CHECK_THROWS_AS(coin_change_polynomial(unlimited), DomainError);
    CHECK(ways_to_pay(unlimited, 10).to_uint64() == 3); // 0,1,2 nickels
}

TEST_CASE("ways_to_pay against brute force") {
    std::mt19937_64 rng(606);
    for (int i = 0; i < 25; ++i) {
        std::vector<CoinSpec> coins;
        std::size_t kinds = 1 + rng() % 4;
        for (std::size_t k = 0; k < kinds; ++k) {
            CoinSpec spec;
            spec.value = 1 + rng() % 12;
            if (rng() % 3 == 0) spec.count = std::nullopt;
            else spec.count = rng() % 6;
            coins.push_back(spec);
        }
        std::uint64_t amount = rng() % 151;
        CHECK(ways_to_pay(coins, amount).to_uint64() ==
              brute_force_pay(coins, amount));
    }
}

TEST_CASE("partitions") {
    CHECK(partition_count(5).to_uint64() == 7);
    CHECK(enumerate_partitions(5, 5) == 7);
    CHECK(partition_count(0).to_uint64() == 1);
    for (std::uint64_t n = 0; n <= 18; ++n)
        CHECK(partition_count(n).to_uint64() == enumerate_partitions(n, n ? n : 1));
    CHECK(partition_count(100, 100).to_string() == "190569292");
    CHECK_THROWS_AS(partition_count(9, 5), DomainError);

    // distinct parts match odd parts for n <= 30
    for (std::uint64_t n = 0; n <= 30; ++n)
        CHECK(partition_count_distinct(n) == partition_count_odd(n));
    CHECK(partition_count_distinct(10).to_uint64() == 10);
}

TEST_CASE("series printing") {
    auto geo = TruncatedSeries::geometric(3);
    CHECK(geo.to_string() == "1 + 1*x + 1*x^2 + 1*x^3 (+O(x^4))");
    TruncatedSeries s(Polynomial({Rational(1, 2), Rational(-3, 4)}), 2);
    CHECK(s.to_string() == "1/2 + -3/4*x + 0*x^2 (+O(x^3))");
}
