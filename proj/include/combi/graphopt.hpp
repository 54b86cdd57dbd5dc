#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "combi/graph.hpp"
#include "combi/rational.hpp"

namespace combi::opt {

// Simple graph with one exact rational weight per edge.
struct WeightedGraph {
    graph::Graph base;
    std::vector<Rational> weights; // parallel to base.edges()

    WeightedGraph() = default;
    WeightedGraph(graph::Graph g, std::vector<Rational> w);

    Rational weight(int u, int v) const; // throws DomainError if absent
    bool is_complete() const;
};

// Text format: "n m weighted" header, then "u v w" lines (w a rational).
std::string write_weighted_graph(const WeightedGraph& w);
WeightedGraph read_weighted_graph(std::string_view text);

struct MstResult {
    graph::Graph tree;
    Rational cost;
};

// Kruskal with ties broken by (weight, u, v); throws Disconnected.
MstResult kruskal_mst(const WeightedGraph& w);

// Closed tour: vertices.front() == vertices.back().
struct Tour {
    std::vector<int> vertices;
    Rational cost;
};

// Preorder walk of the MST rooted at start (children by index) with the
// return edge appended; requires a complete weighted graph.
Tour tsp_tree_shortcut(const WeightedGraph& w, int start);

// Exhaustive optimal tour over simple cycles; rejects n > 10.
Tour brute_force_tour(const WeightedGraph& w);

bool satisfies_triangle_inequality(const WeightedGraph& w);

struct Matching {
    std::vector<std::pair<int, int>> edges;

    int size() const { return static_cast<int>(edges.size()); }
    bool covers(int v) const;
};

bool is_valid_matching(const graph::Graph& g, const Matching& m);

// Scans edges in the given order (host edge order by default), keeping each
// edge that touches no matched vertex.
Matching greedy_maximal_matching(
    const graph::Graph& g,
    const std::vector<std::pair<int, int>>* edge_order = nullptr);

// Flip a valid augmenting path (vertex list, odd edge count, alternating,
// free endpoints); the result is one edge larger. Throws InvalidPath.
Matching augment(const graph::Graph& g, const Matching& m,
                 const std::vector<int>& path);

// BFS augmenting paths until none remains; throws NotBipartite.
Matching maximum_matching_bipartite(const graph::Graph& g);

// Smallest-mask subset X of `left` with |N(X)| < |X|, or nullopt when Hall's
// condition holds. Edges must join `left` to its complement; |left| <= 20.
std::optional<std::vector<int>> hall_violator(const graph::Graph& g,
                                              const std::vector<int>& left);

// Total 2-coloring (color indices 0/1) of the edges of K_n.
struct EdgeColoring2 {
    int n = 0;
    std::vector<int> colors; // indexed by edge_index(u, v)

    explicit EdgeColoring2(int n_) : n(n_), colors(n_ > 1 ? n_ * (n_ - 1) / 2 : 0, 0) {}

    int edge_index(int u, int v) const;
    int color(int u, int v) const { return colors[static_cast<std::size_t>(edge_index(u, v))]; }
    void set_color(int u, int v, int c) { colors[static_cast<std::size_t>(edge_index(u, v))] = c; }
};

// A vertex set of size m whose edges all carry `color`, or nullopt.
std::optional<std::vector<int>> mono_clique(const EdgeColoring2& coloring, int m,
                                            int color);

// True iff every 2-coloring of K_n has a color-0 m1-clique or color-1
// m2-clique. Brute force over all colorings; requires C(n,2) <= 21.
// The coloring space may be partitioned across workers.
bool ramsey_holds(int n, int m1, int m2, int workers = 1);

// Least n <= cap with ramsey_holds(n, m1, m2); throws CapExceeded.
int ramsey_number(int m1, int m2, int cap, int workers = 1);

} // namespace combi::opt
