#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "combi/graph.hpp"
#include "combi/natural.hpp"
#include "combi/rational.hpp"

namespace combi::color {

// Proper coloring with colors 0..k-1, or nullopt. Backtracking over vertices
// in descending-degree order; rejects n > 20.
std::optional<std::vector<int>> is_k_colorable(const graph::Graph& g, int k);

// Least k with a proper k-coloring; 1 <= result <= n for n >= 1.
int chromatic_number(const graph::Graph& g);

struct DegeneracyColoring {
    std::vector<int> coloring;
    int colors_used = 0;
    int degeneracy = 0; // max degree seen along the elimination order
};

// Remove a minimum-degree vertex repeatedly, then color greedily in reverse;
// uses at most degeneracy+1 colors.
DegeneracyColoring degeneracy_coloring(const graph::Graph& g);

// Monic degree-n integer polynomial whose value at k counts proper
// k-colorings. Coefficients lowest degree first. Deletion-contraction with
// |E| <= 18; simple graphs only.
std::vector<Integer> chromatic_polynomial(const graph::Graph& g);

Natural evaluate_chromatic_polynomial(const std::vector<Integer>& poly,
                                      std::uint64_t k);
std::string format_chromatic_polynomial(const std::vector<Integer>& poly);

// Brute-force count of proper k-colorings; rejects k^n > 10^7.
Natural count_colorings(const graph::Graph& g, std::uint64_t k);

enum class BoundVerdict { ViolatesBound, Inconclusive };

// e > 3v-6 proves non-planarity; anything else is inconclusive. Requires v >= 3.
BoundVerdict planar_edge_bound(const graph::Graph& g);
// For bipartite graphs the sharper bound e > 2v-4 applies. Requires v >= 3;
// throws NotBipartite when the graph has an odd cycle.
BoundVerdict bipartite_planar_bound(const graph::Graph& g);

long long euler_characteristic(long long v, long long e, long long f);

struct PolyhedronData {
    std::string name;
    long long vertices = 0;
    long long edges = 0;
    long long faces = 0;
};

bool check_polyhedron(const PolyhedronData& p); // v - e + f == 2

// The five Platonic solids plus the four sports balls.
const std::vector<PolyhedronData>& builtin_polyhedra();

struct Circle {
    Rational center_x;
    Rational center_y;
    Rational radius; // positive
};

struct CircleArrangement {
    std::vector<Circle> circles;
};

// Two-colors the regions cut out by circles: the color is the parity of the
// number of circles strictly containing the point. Exact arithmetic; throws
// BoundaryPoint when the point lies on a circle.
int circle_region_color(const Rational& x, const Rational& y,
                        const CircleArrangement& arrangement);

} // namespace combi::color
