#include "combi/counting.hpp"

#include <algorithm>
#include <map>

#include "combi/error.hpp"

namespace combi::counting {

Natural factorial(std::uint64_t n) {
    Natural result(1);
    for (std::uint64_t i = 2; i <= n; ++i) result *= Natural(i);
    return result;
}

Natural binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return Natural();
    if (k > n - k) k = n - k;
    // Multiplicative formula; each division is exact.
    Natural result(1);
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= Natural(n - i);
        result /= Natural(i + 1);
    }
    return result;
}

Rational generalized_binomial(const Rational& alpha, std::uint64_t k) {
    Rational result(1);
    Rational term = alpha;
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= term;
        term -= Rational(1);
    }
    return result / Rational(Integer(factorial(k)), Natural(1));
}

Natural falling_factorial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw DomainError("falling factorial requires k <= n");
    Natural result(1);
    for (std::uint64_t i = 0; i < k; ++i) result *= Natural(n - i);
    return result;
}

Natural selection_count(std::uint64_t n, std::uint64_t k, SelectionMode mode) {
    if (mode.ordered && mode.repeats) return Natural::pow(Natural(n), k);
    if (mode.ordered) return k > n ? Natural() : falling_factorial(n, k);
    if (mode.repeats) {
        if (n == 0) return k == 0 ? Natural(1) : Natural();
        return binomial(n + k - 1, k);
    }
    return binomial(n, k);
}

Natural multinomial(const std::vector<std::uint64_t>& parts) {
    std::uint64_t total = 0;
    for (auto p : parts) total += p;
    Natural result = factorial(total);
    for (auto p : parts) result /= factorial(p);
    return result;
}

Natural anagram_count(std::string_view word) {
    if (word.empty()) throw DomainError("anagram count of empty word");
    std::map<char, std::uint64_t> mult;
    for (char c : word) ++mult[c];
    std::vector<std::uint64_t> parts;
    for (auto& [c, m] : mult) parts.push_back(m);
    return multinomial(parts);
}

Natural subset_count(std::uint64_t n) { return Natural::pow(Natural(2), n); }

std::vector<std::vector<Natural>> pascal_rows(std::uint64_t n_max) {
    std::vector<std::vector<Natural>> rows;
    rows.reserve(n_max + 1);
    rows.push_back({Natural(1)});
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::vector<Natural> row(n + 1, Natural(1));
        const auto& prev = rows.back();
        for (std::uint64_t k = 1; k < n; ++k) row[k] = prev[k - 1] + prev[k];
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::uint64_t> pascal_row_mod(std::uint64_t n, std::uint64_t m) {
    if (m < 2) throw DomainError("modulus must be at least 2");
    // Keep only residues while running the recurrence along one row.
    std::vector<std::uint64_t> row{1 % m};
    for (std::uint64_t i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> next(i + 1);
        next[0] = 1 % m;
        next[i] = 1 % m;
        for (std::uint64_t k = 1; k < i; ++k) next[k] = (row[k - 1] + row[k]) % m;
        row = std::move(next);
    }
    return row;
}

Natural union_count_2(const Natural& a, const Natural& b, const Natural& ab) {
    if (ab > a || ab > b) throw DomainError("inconsistent intersection sizes");
    return a + b - ab;
}

Natural union_count_3(const Natural& a, const Natural& b, const Natural& c,
                      const Natural& ab, const Natural& ac, const Natural& bc,
                      const Natural& abc) {
    Natural plus = a + b + c + abc;
    Natural minus = ab + ac + bc;
    if (minus > plus) throw DomainError("inconsistent intersection sizes");
    return plus - minus;
}

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

Natural coprime_count(std::uint64_t n, const std::vector<std::uint64_t>& primes) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i])) throw DomainError("list entries must be prime");
        if (n % primes[i] != 0) throw DomainError("each prime must divide N");
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j]) throw DomainError("repeated prime");
    }
    // Sum over subsets of the primes, alternating by subset parity.
    Natural kept;
    Natural removed;
    for (std::uint64_t mask = 0; mask < (1ull << primes.size()); ++mask) {
        std::uint64_t prod = 1;
        int bits = 0;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (1ull << i)) {
                prod *= primes[i];
                ++bits;
            }
        if (bits % 2 == 0) kept += Natural(n / prod);
        else removed += Natural(n / prod);
    }
    return kept - removed;
}

Natural derangement(std::uint64_t n, DerangementMethod method) {
    switch (method) {
    case DerangementMethod::product_recurrence: {
        // D_n = (n-1)(D_{n-1} + D_{n-2})
        if (n == 0) return Natural(1);
        Natural prev2(1), prev1(0); // D_0, D_1
        for (std::uint64_t i = 2; i <= n; ++i) {
            Natural cur = Natural(i - 1) * (prev1 + prev2);
            prev2 = std::move(prev1);
            prev1 = std::move(cur);
        }
        return prev1;
    }
    case DerangementMethod::affine_recurrence: {
        // D_n = n*D_{n-1} + (-1)^n
        Natural d(1); // D_0
        for (std::uint64_t i = 1; i <= n; ++i) {
            d *= Natural(i);
            if (i % 2 == 0) d += Natural(1);
            else d -= Natural(1);
        }
        return d;
    }
    case DerangementMethod::closed_form: {
        // n! * sum_{k=0..n} (-1)^k / k!  ==  sum of alternating falling products
        Natural plus, minus;
        Natural term = factorial(n);
        for (std::uint64_t k = 0; k <= n; ++k) {
            if (k % 2 == 0) plus += term;
            else minus += term;
            if (k < n) term /= Natural(k + 1);
        }
        return plus - minus;
    }
    }
    throw DomainError("unknown derangement method");
}

Natural catalan(std::uint64_t n, CatalanMethod method) {
    if (method == CatalanMethod::closed_form)
        return binomial(2 * n, n) / Natural(n + 1);
    // C_{n+1} = sum_i C_i C_{n-i}
    std::vector<Natural> c(n + 1);
    c[0] = Natural(1);
    for (std::uint64_t m = 1; m <= n; ++m) {
        Natural sum;
        for (std::uint64_t i = 0; i < m; ++i) sum += c[i] * c[m - 1 - i];
        c[m] = std::move(sum);
    }
    return c[n];
}

DivisorProfile DivisorProfile::of(std::uint64_t n) {
    if (n == 0) throw DomainError("divisor functions are undefined for 0");
    DivisorProfile profile;
    profile.n = Natural(n);
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            std::uint32_t e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            profile.factors.emplace_back(p, e);
        }
    }
    if (n > 1) profile.factors.emplace_back(n, 1);
    return profile;
}

void DivisorProfile::validate() const {
    if (n.is_zero()) throw DomainError("divisor functions are undefined for 0");
    Natural product(1);
    std::uint64_t last = 0;
    for (auto& [prime, e] : factors) {
        if (!is_prime(prime)) throw DomainError("factor base must be prime");
        if (prime <= last) throw DomainError("primes must be strictly increasing");
        if (e == 0) throw DomainError("exponents must be positive");
        last = prime;
        product *= Natural::pow(Natural(prime), e);
    }
    if (product != n) throw DomainError("factorization does not multiply out to N");
}

Natural sigma0(const DivisorProfile& p) {
    p.validate();
    Natural result(1);
    for (auto& [prime, e] : p.factors) result *= Natural(e + 1);
    return result;
}

Natural sigma1(const DivisorProfile& p) {
    p.validate();
    // prod (prime^(e+1) - 1) / (prime - 1)
    Natural result(1);
    for (auto& [prime, e] : p.factors) {
        Natural top = Natural::pow(Natural(prime), e + 1) - Natural(1);
        result *= top / Natural(prime - 1);
    }
    return result;
}

int mobius(const DivisorProfile& p) {
    p.validate();
    for (auto& [prime, e] : p.factors)
        if (e >= 2) return 0;
    return p.factors.size() % 2 == 0 ? 1 : -1;
}

Natural poker_count(PokerHand hand) {
    auto choose = [](std::uint64_t n, std::uint64_t k) { return binomial(n, k); };
    switch (hand) {
    case PokerHand::royal_flush:
        return choose(4, 1);
    case PokerHand::straight_flush:
        return choose(10, 1) * choose(4, 1) - Natural(4);
    case PokerHand::four_of_a_kind:
        return choose(13, 1) * choose(48, 1);
    case PokerHand::full_house:
        return choose(13, 1) * choose(4, 3) * choose(12, 1) * choose(4, 2);
    case PokerHand::flush:
        return choose(4, 1) * choose(13, 5) - Natural(40);
    case PokerHand::straight:
        return choose(10, 1) * Natural::pow(Natural(4), 5) - Natural(40);
    case PokerHand::three_of_a_kind:
        return choose(13, 1) * choose(4, 3) * choose(48, 1) * choose(44, 1) / factorial(2);
    case PokerHand::two_pair:
        return choose(13, 2) * choose(4, 2) * choose(4, 2) * choose(11, 1) * choose(4, 1);
    case PokerHand::pair:
        return choose(13, 1) * choose(4, 2) * choose(48, 1) * choose(44, 1) *
               choose(40, 1) / factorial(3);
    case PokerHand::high_card: {
        // everything else: C(52,5) minus the nine named hands
        Natural total = choose(52, 5);
        for (PokerHand h : all_poker_hands())
            if (h != PokerHand::high_card) total -= poker_count(h);
        return total;
    }
    }
    throw DomainError("unknown poker hand");
}

const char* poker_hand_name(PokerHand hand) {
    switch (hand) {
    case PokerHand::royal_flush: return "royal_flush";
    case PokerHand::straight_flush: return "straight_flush";
    case PokerHand::four_of_a_kind: return "four_of_a_kind";
    case PokerHand::full_house: return "full_house";
    case PokerHand::flush: return "flush";
    case PokerHand::straight: return "straight";
    case PokerHand::three_of_a_kind: return "three_of_a_kind";
    case PokerHand::two_pair: return "two_pair";
    case PokerHand::pair: return "pair";
    case PokerHand::high_card: return "high_card";
    }
    return "?";
}

std::vector<PokerHand> all_poker_hands() {
    return {PokerHand::royal_flush,     PokerHand::straight_flush,
            PokerHand::four_of_a_kind,  PokerHand::full_house,
            PokerHand::flush,           PokerHand::straight,
            PokerHand::three_of_a_kind, PokerHand::two_pair,
            PokerHand::pair,            PokerHand::high_card};
}

} // namespace combi::counting
