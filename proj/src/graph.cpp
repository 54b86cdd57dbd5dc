#include "combi/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <sstream>

#include "combi/counting.hpp"
#include "combi/error.hpp"

namespace combi::graph {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, bool allow_multi,
             bool allow_loops)
    : n_(n), edges_(std::move(edges)), allow_multi_(allow_multi),
      allow_loops_(allow_loops) {
    if (n_ < 0) throw DomainError("vertex count must be nonnegative");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw DomainError("edge endpoint out of range");
        if (u == v && !allow_loops_) throw DomainError("loops are not allowed here");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (!allow_multi_) {
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end()) throw DomainError("duplicate edge in a simple graph");
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n_);
    for (auto& [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u); // a loop contributes twice on purpose
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw DomainError("vertex out of range");
    int d = 0;
    for (auto& [a, b] : edges_) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> degs(n_);
    for (auto& [a, b] : edges_) {
        ++degs[a];
        ++degs[b];
    }
    std::sort(degs.begin(), degs.end());
    return degs;
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph path(int n) {
    if (n < 1) throw DomainError("path graph needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) throw DomainError("cycle graph needs at least three vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw DomainError("part sizes must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, std::move(edges));
}

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);         // outer pentagon
        edges.emplace_back(i, i + 5);               // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return Graph(10, std::move(edges));
}

Graph konigsberg() {
    // 0, 2: river banks; 1, 3: islands; seven bridges
    return Graph(4,
                 {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}},
                 /*allow_multi=*/true);
}

Graph platonic(PlatonicSolid which) {
    switch (which) {
    case PlatonicSolid::tetrahedron:
        return complete(4);
    case PlatonicSolid::cube: {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < 8; ++v)
            for (int bit = 0; bit < 3; ++bit)
                if (!(v & (1 << bit))) edges.emplace_back(v, v | (1 << bit));
        return Graph(8, std::move(edges));
    }
    case PlatonicSolid::octahedron: {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (!(u / 2 == v / 2)) edges.emplace_back(u, v); // skip the 3 antipodal pairs
        return Graph(6, std::move(edges));
    }
    case PlatonicSolid::dodecahedron: {
        // outer pentagon 0-4, crown 5-9 / 10-14, inner pentagon 15-19
        std::vector<std::pair<int, int>> edges;
        for (int k = 0; k < 5; ++k) {
            edges.emplace_back(k, (k + 1) % 5);
            edges.emplace_back(k, 5 + k);
            edges.emplace_back(5 + k, 10 + k);
            edges.emplace_back(5 + k, 10 + (k + 4) % 5);
            edges.emplace_back(10 + k, 15 + k);
            edges.emplace_back(15 + k, 15 + (k + 1) % 5);
        }
        return Graph(20, std::move(edges));
    }
    case PlatonicSolid::icosahedron: {
        // apexes 0 and 11 over a pentagonal antiprism 1-5 / 6-10
        std::vector<std::pair<int, int>> edges;
        for (int k = 1; k <= 5; ++k) {
            edges.emplace_back(0, k);
            edges.emplace_back(11, 5 + k);
            edges.emplace_back(k, k % 5 + 1);
            edges.emplace_back(5 + k, 5 + k % 5 + 1);
            edges.emplace_back(k, 5 + k);
            edges.emplace_back(k, 5 + (k + 3) % 5 + 1);
        }
        return Graph(12, std::move(edges));
    }
    }
    throw DomainError("unknown platonic solid");
}

std::optional<PlatonicSolid> platonic_by_name(std::string_view name) {
    if (name == "tetrahedron") return PlatonicSolid::tetrahedron;
    if (name == "cube") return PlatonicSolid::cube;
    if (name == "octahedron") return PlatonicSolid::octahedron;
    if (name == "dodecahedron") return PlatonicSolid::dodecahedron;
    if (name == "icosahedron") return PlatonicSolid::icosahedron;
    return std::nullopt;
}

const char* platonic_name(PlatonicSolid which) {
    switch (which) {
    case PlatonicSolid::tetrahedron: return "tetrahedron";
    case PlatonicSolid::cube: return "cube";
    case PlatonicSolid::octahedron: return "octahedron";
    case PlatonicSolid::dodecahedron: return "dodecahedron";
    case PlatonicSolid::icosahedron: return "icosahedron";
    }
    return "?";
}

AdjacencyMatrix adjacency_matrix(const Graph& g) {
    AdjacencyMatrix m(g.vertex_count(),
                      std::vector<std::uint32_t>(g.vertex_count(), 0));
    for (auto& [u, v] : g.edges()) {
        if (u == v) {
            ++m[u][u];
        } else {
            ++m[u][v];
            ++m[v][u];
        }
    }
    return m;
}

Graph from_adjacency(const AdjacencyMatrix& m) {
    int n = static_cast<int>(m.size());
    bool multi = false, loops = false;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n)
            throw DomainError("adjacency matrix must be square");
        for (int j = i; j < n; ++j) {
            if (m[i][j] != m[j][i]) throw DomainError("adjacency matrix must be symmetric");
            std::uint32_t mult = m[i][j];
            if (mult > 1) multi = true;
            if (i == j && mult > 0) loops = true;
            for (std::uint32_t k = 0; k < mult; ++k) edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges), multi, loops);
}

std::string write_graph(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count();
    if (g.allows_multi()) os << " multi";
    if (g.allows_loops()) os << " loops";
    os << '\n';
    for (auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

namespace {

struct GraphHeader {
    int n = 0;
    int m = 0;
    bool multi = false;
    bool loops = false;
    bool weighted = false;
};

GraphHeader parse_header(const std::string& line) {
    std::istringstream is(line);
    GraphHeader h;
    if (!(is >> h.n >> h.m))
        throw ParseError("line 1: expected 'n m [multi] [loops]'");
    std::string flag;
    while (is >> flag) {
        if (flag == "multi") h.multi = true;
        else if (flag == "loops") h.loops = true;
        else if (flag == "weighted") h.weighted = true;
        else throw ParseError("line 1: unknown flag '" + flag + "'");
    }
    return h;
}

} // namespace

Graph read_graph(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    if (!std::getline(is, line)) throw ParseError("line 1: empty graph input");
    GraphHeader h = parse_header(line);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < h.m; ++i) {
        if (!std::getline(is, line))
            throw ParseError("line " + std::to_string(i + 2) + ": missing edge");
        std::istringstream el(line);
        int u, v;
        if (!(el >> u >> v))
            throw ParseError("line " + std::to_string(i + 2) + ": expected 'u v'");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(h.n, std::move(edges), h.multi, h.loops);
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

std::string format_matrix(const AdjacencyMatrix& m) {
    std::ostringstream os;
    for (auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << row[j];
        }
        os << '\n';
    }
    return os.str();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    auto adj = g.adjacency_lists();
    std::vector<int> comp(g.vertex_count(), -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (comp[start] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> queue;
        queue.push(start);
        comp[start] = id;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            out[id].push_back(v);
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = id;
                    queue.push(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

TwoColoring two_coloring(const Graph& g) {
    int n = g.vertex_count();
    for (auto& [u, v] : g.edges())
        if (u == v) return {std::nullopt, std::vector<int>{u}}; // a loop is an odd 1-cycle

    auto adj = g.adjacency_lists();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    for (int start = 0; start < n; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : adj[v]) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push(w);
                } else if (color[w] == color[v] && w != v) {
                    // Climb to the common ancestor; the closed path is odd.
                    std::vector<int> up_v, up_w;
                    int a = v, b = w;
                    while (depth[a] > depth[b]) {
                        up_v.push_back(a);
                        a = parent[a];
                    }
                    while (depth[b] > depth[a]) {
                        up_w.push_back(b);
                        b = parent[b];
                    }
                    while (a != b) {
                        up_v.push_back(a);
                        up_w.push_back(b);
                        a = parent[a];
                        b = parent[b];
                    }
                    // ancestor -> v, the conflict edge, then w -> ancestor
                    std::vector<int> cycle{a};
                    for (auto it = up_v.rbegin(); it != up_v.rend(); ++it)
                        cycle.push_back(*it);
                    for (int x : up_w) cycle.push_back(x);
                    return {std::nullopt, std::move(cycle)};
                }
            }
        }
    }
    return {std::move(color), std::nullopt};
}

Graph complement(const Graph& g) {
    for (std::size_t i = 0; i + 1 < g.edges().size(); ++i)
        if (g.edges()[i] == g.edges()[i + 1])
            throw DomainError("complement is defined for simple graphs");
    for (auto& [u, v] : g.edges())
        if (u == v) throw DomainError("complement is defined for simple graphs");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.vertex_count(), std::move(edges));
}

namespace {

// Vertices that carry at least one edge.
std::vector<int> non_isolated(const Graph& g) {
    std::vector<char> seen(g.vertex_count(), 0);
    for (auto& [u, v] : g.edges()) seen[u] = seen[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

void require_edges_connected(const Graph& g) {
    auto active = non_isolated(g);
    if (active.empty()) return;
    bool seen_active_component = false;
    for (auto& comp : connected_components(g)) {
        bool has_active = false;
        for (int v : comp)
            if (std::binary_search(active.begin(), active.end(), v)) has_active = true;
        if (has_active) {
            if (seen_active_component)
                throw Disconnected("graph edges are not connected");
            seen_active_component = true;
        }
    }
}

} // namespace

EulerClass euler_classify(const Graph& g) {
    require_edges_connected(g);
    std::vector<int> odd;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) % 2 == 1) odd.push_back(v);
    EulerClass out;
    if (odd.empty()) {
        out.kind = EulerClass::Kind::ClosedWalk;
    } else if (odd.size() == 2) {
        out.kind = EulerClass::Kind::OpenWalk;
        out.endpoint_a = odd[0];
        out.endpoint_b = odd[1];
    } else {
        out.kind = EulerClass::Kind::NoEulerianWalk;
    }
    return out;
}

Walk euler_walk(const Graph& g) {
    EulerClass cls = euler_classify(g);
    if (cls.kind == EulerClass::Kind::NoEulerianWalk)
        throw NoWalk("graph has no Eulerian walk");

    Walk walk;
    if (g.edge_count() == 0) return walk;

    // Incidence lists (neighbor, edge id) and Hierholzer's construction.
    std::vector<std::vector<std::pair<int, int>>> inc(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        inc[u].emplace_back(v, e);
        if (u != v) inc[v].emplace_back(u, e);
    }
    int start = cls.kind == EulerClass::Kind::OpenWalk ? cls.endpoint_a
                                                       : non_isolated(g).front();
    std::vector<char> used(g.edge_count(), 0);
    std::vector<std::size_t> cursor(g.vertex_count(), 0);
    std::vector<std::pair<int, int>> stack{{start, -1}}; // (vertex, entering edge)
    std::vector<std::pair<int, int>> closed;
    while (!stack.empty()) {
        auto [v, e_in] = stack.back();
        while (cursor[v] < inc[v].size() && used[inc[v][cursor[v]].second])
            ++cursor[v];
        if (cursor[v] == inc[v].size()) {
            closed.emplace_back(v, e_in);
            stack.pop_back();
        } else {
            auto [w, id] = inc[v][cursor[v]];
            used[id] = 1;
            stack.emplace_back(w, id);
        }
    }
    std::reverse(closed.begin(), closed.end());
    for (auto& [v, e] : closed) {
        walk.vertices.push_back(v);
        if (e >= 0) walk.edge_ids.push_back(e);
    }
    // The start vertex has entering edge -1 and lands first after the reverse.
    return walk;
}

std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g) {
    int n = g.vertex_count();
    if (n > 16) throw CapExceeded("Hamiltonian search limited to n <= 16");
    if (n == 0) return std::nullopt;
    if (n == 1) return std::vector<int>{0};
    if (n == 2) {
        // closing the cycle needs a second, parallel edge
        int mult = 0;
        for (auto& [u, v] : g.edges())
            if (u == 0 && v == 1) ++mult;
        if (mult >= 2) return std::vector<int>{0, 1};
        return std::nullopt;
    }
    auto adj = g.adjacency_lists();
    for (auto& list : adj) list.erase(std::unique(list.begin(), list.end()), list.end());

    std::vector<int> cycle{0};
    std::vector<char> visited(n, 0);
    visited[0] = 1;
    auto dfs = [&](auto&& self, int v) -> bool {
        if (static_cast<int>(cycle.size()) == n)
            return g.has_edge(v, 0);
        for (int w : adj[v]) {
            if (visited[w]) continue;
            visited[w] = 1;
            cycle.push_back(w);
            if (self(self, w)) return true;
            cycle.pop_back();
            visited[w] = 0;
        }
        return false;
    };
    if (dfs(dfs, 0)) return cycle;
    return std::nullopt;
}

namespace {

using NatMatrix = std::vector<std::vector<Natural>>;

NatMatrix identity_matrix(std::size_t n) {
    NatMatrix m(n, std::vector<Natural>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Natural(1);
    return m;
}

NatMatrix multiply(const NatMatrix& a, const NatMatrix& b) {
    std::size_t n = a.size();
    NatMatrix out(n, std::vector<Natural>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

} // namespace

Natural count_walks(const std::vector<std::vector<Natural>>& m1, int i, int j,
                    std::uint64_t n) {
    std::size_t size = m1.size();
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= size ||
        static_cast<std::size_t>(j) >= size)
        throw DomainError("vertex out of range");
    NatMatrix result = identity_matrix(size);
    NatMatrix base = m1;
    while (n) {
        if (n & 1) result = multiply(result, base);
        n >>= 1;
        if (n) base = multiply(base, base);
    }
    return result[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

Natural count_walks(const Graph& g, int i, int j, std::uint64_t n) {
    auto adj = adjacency_matrix(g);
    NatMatrix m1(adj.size(), std::vector<Natural>(adj.size()));
    for (std::size_t a = 0; a < adj.size(); ++a)
        for (std::size_t b = 0; b < adj.size(); ++b) m1[a][b] = Natural(adj[a][b]);
    return count_walks(m1, i, j, n);
}

std::vector<std::vector<Natural>> fibonacci_walk_matrix() {
    return {{Natural(1), Natural(1)}, {Natural(1), Natural(0)}};
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && is_connected(g) &&
           g.edge_count() == g.vertex_count() - 1;
}

Graph spanning_tree(const Graph& g) {
    if (!is_connected(g)) throw Disconnected("spanning tree needs a connected graph");
    auto adj = g.adjacency_lists();
    std::vector<char> visited(g.vertex_count(), 0);
    std::vector<std::pair<int, int>> edges;
    if (g.vertex_count() > 0) {
        std::queue<int> queue;
        queue.push(0);
        visited[0] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : adj[v])
                if (!visited[w]) {
                    visited[w] = 1;
                    edges.emplace_back(v, w);
                    queue.push(w);
                }
        }
    }
    return Graph(g.vertex_count(), std::move(edges));
}

Natural cayley_count(int n) {
    if (n < 1) throw DomainError("labeled trees need at least one vertex");
    if (n == 1) return Natural(1);
    return Natural::pow(Natural(static_cast<std::uint64_t>(n)),
                        static_cast<std::uint64_t>(n - 2));
}

std::vector<Graph> enumerate_labeled_trees(int n) {
    if (n < 1) throw DomainError("labeled trees need at least one vertex");
    if (n > 5) throw CapExceeded("tree enumeration limited to n <= 5");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> trees;
    int need = n - 1;
    std::vector<int> pick(need);
    auto search = [&](auto&& self, int from, int chosen) -> void {
        if (chosen == need) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < need; ++i) edges.push_back(pairs[pick[i]]);
            Graph candidate(n, std::move(edges));
            if (is_tree(candidate)) trees.push_back(std::move(candidate));
            return;
        }
        for (int i = from; i < static_cast<int>(pairs.size()); ++i) {
            pick[chosen] = i;
            self(self, i + 1, chosen + 1);
        }
    };
    search(search, 0, 0);
    return trees;
}

Natural binary_tree_count(std::uint64_t n_leaves) {
    if (n_leaves == 0) throw DomainError("binary trees have at least one leaf");
    return counting::catalan(n_leaves - 1);
}

Natural at_most_binary_count(std::uint64_t n_vertices) {
    return counting::catalan(n_vertices);
}

Natural tournament_count(std::uint64_t players) {
    if (players == 0) throw DomainError("tournaments need at least one player");
    return counting::catalan(players - 1) * counting::factorial(players);
}

namespace {

void validate_permutation(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size() + 1, 0);
    for (int x : perm) {
        if (x < 1 || x > static_cast<int>(perm.size()) || seen[x])
            throw DomainError("input is not a permutation of 1..n");
        seen[x] = 1;
    }
}

} // namespace

BinaryTree increasing_tree_from_permutation(const std::vector<int>& perm) {
    validate_permutation(perm);
    BinaryTree tree;
    auto build = [&](auto&& self, std::size_t lo, std::size_t hi) -> int {
        if (lo >= hi) return -1;
        std::size_t min_pos = lo;
        for (std::size_t i = lo + 1; i < hi; ++i)
            if (perm[i] < perm[min_pos]) min_pos = i;
        int node = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({perm[min_pos], -1, -1});
        int left = self(self, lo, min_pos);
        int right = self(self, min_pos + 1, hi);
        tree.nodes[node].left = left;
        tree.nodes[node].right = right;
        return node;
    };
    tree.root = build(build, 0, perm.size());
    return tree;
}

std::vector<int> permutation_from_increasing_tree(const BinaryTree& tree) {
    std::vector<int> out;
    auto walk = [&](auto&& self, int node, int parent_label) -> void {
        if (node < 0) return;
        const auto& nd = tree.nodes[static_cast<std::size_t>(node)];
        if (nd.label <= parent_label)
            throw DomainError("labels must increase downward");
        self(self, nd.left, nd.label);
        out.push_back(nd.label);
        self(self, nd.right, nd.label);
    };
    walk(walk, tree.root, 0);
    return out;
}

BinaryTree bst_insert(BinaryTree tree, int key) {
    int node = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({key, -1, -1});
    if (tree.root < 0) {
        tree.root = node;
        return tree;
    }
    int cur = tree.root;
    while (true) {
        auto& nd = tree.nodes[static_cast<std::size_t>(cur)];
        if (key == nd.label) throw DomainError("duplicate key in search tree");
        int& child = key < nd.label ? nd.left : nd.right;
        if (child < 0) {
            child = node;
            return tree;
        }
        cur = child;
    }
}

BinaryTree bst_from_sequence(const std::vector<int>& keys) {
    BinaryTree tree;
    for (int k : keys) tree = bst_insert(std::move(tree), k);
    return tree;
}

std::vector<int> bst_inorder(const BinaryTree& tree) {
    std::vector<int> out;
    auto walk = [&](auto&& self, int node) -> void {
        if (node < 0) return;
        const auto& nd = tree.nodes[static_cast<std::size_t>(node)];
        self(self, nd.left);
        out.push_back(nd.label);
        self(self, nd.right);
    };
    walk(walk, tree.root);
    return out;
}

} // namespace combi::graph
