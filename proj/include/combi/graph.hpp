#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "combi/natural.hpp"

namespace combi::graph {

// Undirected graph on vertices {0..n-1}. Edges are stored as normalized pairs
// (u <= v), kept sorted; multi-edges and loops are opt-in flags.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges, bool allow_multi = false,
          bool allow_loops = false);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool allows_multi() const { return allow_multi_; }
    bool allows_loops() const { return allow_loops_; }
    bool is_simple() const { return !allow_multi_ && !allow_loops_; }

    bool has_edge(int u, int v) const;

    // Neighbor lists with multiplicity; loops list the vertex itself twice.
    std::vector<std::vector<int>> adjacency_lists() const;

    // Loops add 2 so that the degree sum is twice the edge count.
    int degree(int v) const;
    std::vector<int> degree_sequence() const; // sorted ascending

    bool operator==(const Graph& o) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    bool allow_multi_ = false;
    bool allow_loops_ = false;
};

// Named constructors with a fixed canonical labeling.
Graph complete(int n);
Graph path(int n);
Graph cycle(int n); // requires n >= 3
Graph complete_bipartite(int a, int b); // left 0..a-1, right a..a+b-1
Graph petersen();
Graph konigsberg(); // 4 vertices, 7 bridges; multigraph

enum class PlatonicSolid { tetrahedron, cube, octahedron, dodecahedron, icosahedron };
Graph platonic(PlatonicSolid which);
std::optional<PlatonicSolid> platonic_by_name(std::string_view name);
const char* platonic_name(PlatonicSolid which);

// Integer adjacency matrix; entry = edge multiplicity, diagonal = loop count.
using AdjacencyMatrix = std::vector<std::vector<std::uint32_t>>;

AdjacencyMatrix adjacency_matrix(const Graph& g);
// Rejects asymmetric matrices; multi/loop flags are inferred from the entries.
Graph from_adjacency(const AdjacencyMatrix& m);

// Text format: first line "n m [multi] [loops]", then m lines "u v".
std::string write_graph(const Graph& g);
Graph read_graph(std::string_view text); // parse errors carry line numbers
std::string format_matrix(const AdjacencyMatrix& m); // space-separated rows

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Either a proper 2-coloring or an explicit odd cycle (closed vertex list
// without the repeated endpoint). Exactly one of the two is present.
struct TwoColoring {
    std::optional<std::vector<int>> coloring;
    std::optional<std::vector<int>> odd_cycle;
};
TwoColoring two_coloring(const Graph& g);

Graph complement(const Graph& g); // simple graphs only

// Eulerian classification per the odd-degree rule. The walk, when one exists,
// is produced by Hierholzer's construction.
struct EulerClass {
    enum class Kind { NoEulerianWalk, OpenWalk, ClosedWalk };
    Kind kind = Kind::NoEulerianWalk;
    int endpoint_a = -1; // the two odd vertices for an open walk
    int endpoint_b = -1;
};

struct Walk {
    std::vector<int> vertices;   // v_0 .. v_k
    std::vector<int> edge_ids;   // indices into Graph::edges(), one per step
};

// Isolated vertices are ignored; throws Disconnected when edges are unreachable
// from each other.
EulerClass euler_classify(const Graph& g);
// Throws NoWalk when the classification is NoEulerianWalk.
Walk euler_walk(const Graph& g);

// Exhaustive backtracking; rejects n > 16.
std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g);

// Entry (i,j) of M_1^N, exact. The matrix overload admits directed graphs
// and self-loops (asymmetric 0/1 matrices).
Natural count_walks(const Graph& g, int i, int j, std::uint64_t n);
Natural count_walks(const std::vector<std::vector<Natural>>& m1, int i, int j,
                    std::uint64_t n);

// Directed two-vertex graph whose (u,v) walk counts are Fibonacci numbers:
// a self-loop at u, u->v, and v->u.
std::vector<std::vector<Natural>> fibonacci_walk_matrix();

bool is_tree(const Graph& g);
Graph spanning_tree(const Graph& g); // BFS tree; throws Disconnected
Natural cayley_count(int n);         // n^{n-2} labeled trees, 1 for n = 1
std::vector<Graph> enumerate_labeled_trees(int n); // rejects n > 5

// Rooted binary trees stored as an index-based node pool.
struct BinaryTree {
    struct Node {
        int label = 0;
        int left = -1;
        int right = -1;
    };
    std::vector<Node> nodes;
    int root = -1;

    bool empty() const { return root < 0; }
    int size() const { return static_cast<int>(nodes.size()); }
};

Natural binary_tree_count(std::uint64_t n_leaves);     // C_{n-1}, n >= 1
Natural at_most_binary_count(std::uint64_t n_vertices); // C_n
Natural tournament_count(std::uint64_t players);        // C_{p-1} * p!

// Bijection between permutations of 1..n and increasing binary trees:
// the minimum is the root, entries left/right of it build the subtrees.
BinaryTree increasing_tree_from_permutation(const std::vector<int>& perm);
std::vector<int> permutation_from_increasing_tree(const BinaryTree& tree);

// Binary search tree insertion (value semantics; duplicates rejected).
BinaryTree bst_insert(BinaryTree tree, int key);
BinaryTree bst_from_sequence(const std::vector<int>& keys);
std::vector<int> bst_inorder(const BinaryTree& tree);

} // namespace combi::graph
