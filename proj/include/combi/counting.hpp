#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "combi/natural.hpp"
#include "combi/rational.hpp"

namespace combi::counting {

Natural factorial(std::uint64_t n);

// 0 when k > n.
Natural binomial(std::uint64_t n, std::uint64_t k);

// alpha*(alpha-1)*...*(alpha-k+1) / k!; 1 for k = 0.
Rational generalized_binomial(const Rational& alpha, std::uint64_t k);

// n!/(n-k)!; rejects k > n.
Natural falling_factorial(std::uint64_t n, std::uint64_t k);

// The 2x2 table of selection counts: n^k, n!/(n-k)!, C(n,k), C(n+k-1,k).
struct SelectionMode {
    bool ordered = false;
    bool repeats = false;
};
Natural selection_count(std::uint64_t n, std::uint64_t k, SelectionMode mode);

// (sum parts)! / prod(parts_i!)
Natural multinomial(const std::vector<std::uint64_t>& parts);

// Multinomial of letter multiplicities; rejects the empty word.
Natural anagram_count(std::string_view word);

// 2^n
Natural subset_count(std::uint64_t n);

// Rows 0..n_max of Pascal's triangle, built by the additive recurrence.
std::vector<std::vector<Natural>> pascal_rows(std::uint64_t n_max);

// Row n of Pascal's triangle with entries reduced mod m; rejects m < 2.
std::vector<std::uint64_t> pascal_row_mod(std::uint64_t n, std::uint64_t m);

// Inclusion-exclusion for two and three sets. Counts of the intersections are
// passed explicitly; an inconsistent (negative) union size is rejected.
Natural union_count_2(const Natural& a, const Natural& b, const Natural& ab);
Natural union_count_3(const Natural& a, const Natural& b, const Natural& c,
                      const Natural& ab, const Natural& ac, const Natural& bc,
                      const Natural& abc);

// Size of {1..N} minus all multiples of the given primes, by inclusion-exclusion.
// Each entry must be a prime dividing N; duplicates are rejected.
Natural coprime_count(std::uint64_t n, const std::vector<std::uint64_t>& primes);

enum class DerangementMethod { product_recurrence, affine_recurrence, closed_form };
// D_0 = 1, D_1 = 0.
Natural derangement(std::uint64_t n,
                    DerangementMethod method = DerangementMethod::product_recurrence);

enum class CatalanMethod { recursion, closed_form };
Natural catalan(std::uint64_t n, CatalanMethod method = CatalanMethod::closed_form);

// N >= 1 together with its prime factorization (primes strictly increasing).
struct DivisorProfile {
    Natural n;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors; // (prime, exponent)

    static DivisorProfile of(std::uint64_t n); // factorizes; rejects n = 0
    void validate() const; // throws DomainError when the factorization is wrong
};

Natural sigma0(const DivisorProfile& p); // number of divisors
Natural sigma1(const DivisorProfile& p); // sum of divisors
int mobius(const DivisorProfile& p);     // -1, 0, or 1

// The ten five-card poker hands, drawn from a standard 52-card deck.
enum class PokerHand {
    royal_flush,
    straight_flush,
    four_of_a_kind,
    full_house,
    flush,
    straight,
    three_of_a_kind,
    two_pair,
    pair,
    high_card,
};
constexpr int kPokerHandCount = 10;

Natural poker_count(PokerHand hand);
const char* poker_hand_name(PokerHand hand);
std::vector<PokerHand> all_poker_hands();

} // namespace combi::counting
