#pragma once

#include <complex>
#include <cstdint>
#include <set>
#include <vector>

#include "combi/natural.hpp"
#include "combi/rational.hpp"

namespace combi::seq {

// F_0 = 0, F_1 = F_2 = 1.
Natural fibonacci(std::uint64_t n);

// L_0 = 2, L_1 = 1.
Natural lucas(std::uint64_t n);

// Binet's formula in double precision; rejects n > 70 where doubles degrade.
double fibonacci_binet(std::uint64_t n);

// Allowed step sizes for a staircase climb; sizes are distinct and positive.
struct StairRule {
    std::set<std::uint32_t> steps;
};

// Ordered compositions of n into allowed parts; 1 for n = 0.
Natural stair_ways(std::uint64_t n, const StairRule& rule);

// a_n = c_1 a_{n-1} + ... + c_d a_{n-d}, c_d != 0, with d initial values
// starting at index first_index (1 to match the usual statement, 0 for
// sequences like Fibonacci that are seeded from a_0).
struct LinearRecurrence {
    std::vector<Rational> coefficients;   // c_1..c_d
    std::vector<Rational> initial_values; // a_first .. a_{first+d-1}
    int first_index = 1;

    std::size_t order() const { return coefficients.size(); }
    void validate() const; // throws DomainError on malformed data
};

// a_n by direct iteration in exact arithmetic; n >= first_index.
Rational iterate_recurrence(const LinearRecurrence& rec, std::uint64_t n);

// Monic characteristic polynomial x^d - c_1 x^{d-1} - ... - c_d,
// returned as coefficients lowest degree first (size d+1, leading 1).
std::vector<Rational> characteristic_polynomial(const LinearRecurrence& rec);

// Numeric closed form a_n = sum_i weights[i] * roots[i]^n.
struct ClosedForm {
    std::vector<std::complex<double>> roots;
    std::vector<std::complex<double>> weights;
    double residual = 0.0; // max error of the fitted linear system

    double evaluate(std::uint64_t n) const; // real part of the sum
};

inline constexpr double kRootSeparationTol = 1e-7;

// Roots via Durand-Kerner plus a d x d solve for the weights.
// Throws RepeatedRoots when the characteristic roots are not separated.
ClosedForm solve_recurrence(const LinearRecurrence& rec);

// Tower of Hanoi: minimal move count 2^n - 1 and an explicit legal solution.
Natural hanoi_count(std::uint64_t n);

struct HanoiMove {
    int disk; // 1 = smallest
    int from; // pegs 0,1,2
    int to;
};
// Moves all n disks from peg 0 to peg 2; rejects n > 12.
std::vector<HanoiMove> hanoi_moves(std::uint32_t n);

// Regions cut out by n lines in general position: (n^2+n+2)/2, P_0 = 1.
Natural plane_regions(std::uint64_t n);
// Regions cut out by n >= 1 circles in general position: n^2-n+2.
Natural circle_regions(std::uint64_t n);

} // namespace combi::seq
