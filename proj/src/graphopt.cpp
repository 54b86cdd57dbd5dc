#include "combi/graphopt.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <queue>
#include <sstream>
#include <thread>

#include "combi/error.hpp"

namespace combi::opt {

WeightedGraph::WeightedGraph(graph::Graph g, std::vector<Rational> w)
    : base(std::move(g)), weights(std::move(w)) {
    if (!base.is_simple()) throw DomainError("weighted graphs are simple here");
    if (weights.size() != base.edges().size())
        throw DomainError("every edge needs exactly one weight");
}

Rational WeightedGraph::weight(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto& edges = base.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v))
        throw DomainError("edge not present");
    return weights[static_cast<std::size_t>(it - edges.begin())];
}

bool WeightedGraph::is_complete() const {
    int n = base.vertex_count();
    return base.edge_count() == n * (n - 1) / 2;
}

std::string write_weighted_graph(const WeightedGraph& w) {
    std::ostringstream os;
    os << w.base.vertex_count() << ' ' << w.base.edge_count() << " weighted\n";
    for (std::size_t i = 0; i < w.weights.size(); ++i)
        os << w.base.edges()[i].first << ' ' << w.base.edges()[i].second << ' '
           << w.weights[i] << '\n';
    return os.str();
}

WeightedGraph read_weighted_graph(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    if (!std::getline(is, line)) throw ParseError("line 1: empty graph input");
    std::istringstream head(line);
    int n, m;
    std::string flag;
    if (!(head >> n >> m)) throw ParseError("line 1: expected 'n m weighted'");
    head >> flag; // optional "weighted" marker
    std::vector<std::pair<int, int>> edges;
    std::vector<Rational> weights;
    for (int i = 0; i < m; ++i) {
        if (!std::getline(is, line))
            throw ParseError("line " + std::to_string(i + 2) + ": missing edge");
        std::istringstream el(line);
        int u, v;
        std::string wtext;
        if (!(el >> u >> v >> wtext))
            throw ParseError("line " + std::to_string(i + 2) + ": expected 'u v w'");
        edges.emplace_back(u, v);
        try {
            weights.emplace_back(wtext);
        } catch (const Error&) {
            throw ParseError("line " + std::to_string(i + 2) + ": bad weight '" + wtext + "'");
        }
    }
    try {
        return WeightedGraph(graph::Graph(n, std::move(edges)), std::move(weights));
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid weighted graph: ") + e.what());
    }
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

MstResult kruskal_mst(const WeightedGraph& w) {
    if (!graph::is_connected(w.base))
        throw Disconnected("minimum spanning tree needs a connected graph");
    std::vector<std::size_t> order(w.weights.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (w.weights[a] != w.weights[b]) return w.weights[a] < w.weights[b];
        return w.base.edges()[a] < w.base.edges()[b];
    });
    UnionFind uf(w.base.vertex_count());
    std::vector<std::pair<int, int>> picked;
    Rational cost;
    for (std::size_t idx : order) {
        auto [u, v] = w.base.edges()[idx];
        if (uf.unite(u, v)) {
            picked.emplace_back(u, v);
            cost += w.weights[idx];
        }
    }
    return {graph::Graph(w.base.vertex_count(), std::move(picked)), std::move(cost)};
}

Tour tsp_tree_shortcut(const WeightedGraph& w, int start) {
    int n = w.base.vertex_count();
    if (!w.is_complete()) throw NotComplete("tree shortcut needs a complete graph");
    if (start < 0 || start >= n) throw DomainError("start vertex out of range");
    if (n == 1) return {{start, start}, Rational()};

    graph::Graph mst = kruskal_mst(w).tree;
    auto adj = mst.adjacency_lists();

    Tour tour;
    std::vector<char> visited(n, 0);
    auto dfs = [&](auto&& self, int v) -> void {
        visited[v] = 1;
        tour.vertices.push_back(v);
        for (int child : adj[v]) // ascending vertex order
            if (!visited[child]) self(self, child);
    };
    dfs(dfs, start);
    tour.vertices.push_back(start);
    for (std::size_t i = 0; i + 1 < tour.vertices.size(); ++i)
        tour.cost += w.weight(tour.vertices[i], tour.vertices[i + 1]);
    return tour;
}

Tour brute_force_tour(const WeightedGraph& w) {
    int n = w.base.vertex_count();
    if (!w.is_complete()) throw NotComplete("exhaustive tour needs a complete graph");
    if (n > 10) throw CapExceeded("exhaustive tour limited to n <= 10");
    if (n == 1) return {{0, 0}, Rational()};

    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    std::optional<Tour> best;
    do {
        Rational cost = w.weight(0, rest.front()) + w.weight(rest.back(), 0);
        for (std::size_t i = 0; i + 1 < rest.size(); ++i)
            cost += w.weight(rest[i], rest[i + 1]);
        if (!best || cost < best->cost) {
            best = Tour{{0}, cost};
            best->vertices.insert(best->vertices.end(), rest.begin(), rest.end());
            best->vertices.push_back(0);
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return *best;
}

bool satisfies_triangle_inequality(const WeightedGraph& w) {
    int n = w.base.vertex_count();
    if (!w.is_complete()) throw NotComplete("triangle inequality check needs a complete graph");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                Rational ab = w.weight(a, b), bc = w.weight(b, c), ac = w.weight(a, c);
                if (ab > bc + ac || bc > ab + ac || ac > ab + bc) return false;
            }
    return true;
}

bool Matching::covers(int v) const {
    for (auto& [a, b] : edges)
        if (a == v || b == v) return true;
    return false;
}

bool is_valid_matching(const graph::Graph& g, const Matching& m) {
    std::vector<char> seen(g.vertex_count(), 0);
    for (auto& [u, v] : m.edges) {
        if (!g.has_edge(u, v)) return false;
        if (u == v || seen[u] || seen[v]) return false;
        seen[u] = seen[v] = 1;
    }
    return true;
}

Matching greedy_maximal_matching(const graph::Graph& g,
                                 const std::vector<std::pair<int, int>>* edge_order) {
    Matching m;
    std::vector<char> used(g.vertex_count(), 0);
    auto take = [&](int u, int v) {
        if (u == v || used[u] || used[v]) return;
        used[u] = used[v] = 1;
        m.edges.emplace_back(std::min(u, v), std::max(u, v));
    };
    if (edge_order) {
        for (auto [u, v] : *edge_order) {
            if (!g.has_edge(u, v))
                throw DomainError("edge order mentions a missing edge");
            take(u, v);
        }
    }
    // Sweep the host edges so the result is maximal even for a partial order.
    for (auto [u, v] : g.edges()) take(u, v);
    return m;
}

Matching augment(const graph::Graph& g, const Matching& m,
                 const std::vector<int>& path) {
    if (path.size() < 2 || path.size() % 2 != 0)
        throw InvalidPath("augmenting path needs an odd number of edges");
    std::vector<char> on_path(g.vertex_count(), 0);
    for (int v : path) {
        if (v < 0 || v >= g.vertex_count()) throw InvalidPath("vertex out of range");
        if (on_path[v]) throw InvalidPath("path vertices must be distinct");
        on_path[v] = 1;
    }
    if (m.covers(path.front()) || m.covers(path.back()))
        throw InvalidPath("endpoints must be unmatched");

    auto in_matching = [&](int u, int v) {
        return std::find(m.edges.begin(), m.edges.end(),
                         std::make_pair(std::min(u, v), std::max(u, v))) != m.edges.end();
    };
    Matching out;
    std::vector<char> dropped(m.edges.size(), 0);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int u = path[i], v = path[i + 1];
        if (!g.has_edge(u, v)) throw InvalidPath("path uses a missing edge");
        bool matched = in_matching(u, v);
        if (matched != (i % 2 == 1))
            throw InvalidPath("path must alternate out of and into the matching");
        if (!matched) out.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    // Keep matching edges untouched by the path.
    for (auto& [u, v] : m.edges)
        if (!on_path[u] && !on_path[v]) out.edges.emplace_back(u, v);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

Matching maximum_matching_bipartite(const graph::Graph& g) {
    auto two = graph::two_coloring(g);
    if (!two.coloring) throw NotBipartite("maximum matching requires a bipartite host");
    const auto& side = *two.coloring;
    auto adj = g.adjacency_lists();
    for (auto& list : adj) list.erase(std::unique(list.begin(), list.end()), list.end());

    int n = g.vertex_count();
    std::vector<int> match(n, -1);
    // Kuhn's algorithm from each left (color 0) vertex.
    std::vector<char> visited(n, 0);
    auto try_augment = [&](auto&& self, int v) -> bool {
        for (int w : adj[v]) {
            if (visited[w]) continue;
            visited[w] = 1;
            if (match[w] < 0 || self(self, match[w])) {
                match[w] = v;
                match[v] = w;
                return true;
            }
        }
        return false;
    };
    for (int v = 0; v < n; ++v) {
        if (side[v] != 0 || match[v] >= 0) continue;
        std::fill(visited.begin(), visited.end(), 0);
        try_augment(try_augment, v);
    }
    Matching m;
    for (int v = 0; v < n; ++v)
        if (match[v] > v) m.edges.emplace_back(v, match[v]);
    return m;
}

std::optional<std::vector<int>> hall_violator(const graph::Graph& g,
                                              const std::vector<int>& left) {
    if (left.size() > 20) throw CapExceeded("Hall scan limited to |L| <= 20");
    std::vector<char> in_left(g.vertex_count(), 0);
    for (int v : left) {
        if (v < 0 || v >= g.vertex_count()) throw DomainError("left vertex out of range");
        in_left[v] = 1;
    }
    for (auto& [u, v] : g.edges())
        if (in_left[u] == in_left[v])
            throw NotBipartite("edges must join the left set to its complement");

    auto adj = g.adjacency_lists();
    std::uint32_t subsets = 1u << left.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        std::vector<char> seen(g.vertex_count(), 0);
        int neighborhood = 0, size = 0;
        for (std::size_t i = 0; i < left.size(); ++i) {
            if (!(mask & (1u << i))) continue;
            ++size;
            for (int w : adj[left[i]])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++neighborhood;
                }
        }
        if (neighborhood < size) {
            std::vector<int> witness;
            for (std::size_t i = 0; i < left.size(); ++i)
                if (mask & (1u << i)) witness.push_back(left[i]);
            return witness;
        }
    }
    return std::nullopt;
}

int EdgeColoring2::edge_index(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw DomainError("edge of K_n must join two distinct vertices");
    if (u > v) std::swap(u, v);
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

std::optional<std::vector<int>> mono_clique(const EdgeColoring2& coloring, int m,
                                            int color) {
    if (m < 1) throw DomainError("clique size must be positive");
    if (m > coloring.n) return std::nullopt;
    std::vector<int> pick;
    auto search = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(pick.size()) == m) return true;
        for (int v = from; v < coloring.n; ++v) {
            bool ok = true;
            for (int u : pick)
                if (coloring.color(u, v) != color) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick.push_back(v);
            if (self(self, v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (search(search, 0)) return pick;
    return std::nullopt;
}

namespace {

// Bitmasks over the edges of K_n for every m-subset of vertices.
std::vector<std::uint32_t> clique_edge_masks(int n, int m) {
    EdgeColoring2 index(n);
    std::vector<std::uint32_t> masks;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == m) {
            std::uint32_t mask = 0;
            for (std::size_t i = 0; i < pick.size(); ++i)
                for (std::size_t j = i + 1; j < pick.size(); ++j)
                    mask |= 1u << index.edge_index(pick[i], pick[j]);
            masks.push_back(mask);
            return;
        }
        for (int v = from; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return masks;
}

} // namespace

bool ramsey_holds(int n, int m1, int m2, int workers) {
    if (n < 1) throw DomainError("Ramsey check needs n >= 1");
    if (m1 < 1 || m2 < 1) throw DomainError("clique sizes must be positive");
    if (workers < 1) throw DomainError("worker count must be positive");
    if (m1 == 1 || m2 == 1) return true; // a single vertex is a 1-clique
    int edge_count = n * (n - 1) / 2;
    if (edge_count > 21) throw CapExceeded("coloring enumeration limited to C(n,2) <= 21");
    if (m1 > n && m2 > n) return false;

    auto masks1 = m1 <= n ? clique_edge_masks(n, m1) : std::vector<std::uint32_t>{};
    auto masks2 = m2 <= n ? clique_edge_masks(n, m2) : std::vector<std::uint32_t>{};
    std::uint32_t total = 1u << edge_count;

    std::atomic<bool> counterexample{false};
    auto scan = [&](std::uint32_t begin, std::uint32_t end) {
        for (std::uint32_t coloring = begin; coloring < end; ++coloring) {
            if ((coloring & 0xfff) == 0 && counterexample.load(std::memory_order_relaxed))
                return;
            bool found = false;
            for (auto mask : masks1)
                if ((coloring & mask) == 0) { // all edges color 0
                    found = true;
                    break;
                }
            if (!found)
                for (auto mask : masks2)
                    if ((coloring & mask) == mask) { // all edges color 1
                        found = true;
                        break;
                    }
            if (!found) {
                counterexample.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    if (workers == 1 || total < 4096) {
        scan(0, total);
    } else {
        std::uint32_t w = static_cast<std::uint32_t>(workers);
        std::uint32_t chunk = total / w + 1;
        std::vector<std::thread> pool;
        for (std::uint32_t i = 0; i < w; ++i) {
            std::uint32_t begin = i * chunk;
            std::uint32_t end = std::min(total, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(scan, begin, end);
        }
        for (auto& t : pool) t.join();
    }
    return !counterexample.load();
}

int ramsey_number(int m1, int m2, int cap, int workers) {
    for (int n = 1; n <= cap; ++n)
        if (ramsey_holds(n, m1, m2, workers)) return n;
    throw CapExceeded("no n <= cap satisfies the Ramsey property");
}

} // namespace combi::opt
