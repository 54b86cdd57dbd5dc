#include "combi/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "combi/error.hpp"

namespace combi::color {

std::optional<std::vector<int>> is_k_colorable(const graph::Graph& g, int k) {
    int n = g.vertex_count();
    if (n > 20) throw CapExceeded("coloring search limited to n <= 20");
    if (k < 0) throw DomainError("color count must be nonnegative");
    if (n == 0) return std::vector<int>{};
    if (k == 0) return std::nullopt;

    // Descending degree order, ties by index; colors canonicalized by first use.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    auto adj = g.adjacency_lists();

    std::vector<int> colors(n, -1);
    auto assign = [&](auto&& self, std::size_t pos, int used) -> bool {
        if (pos == order.size()) return true;
        int v = order[pos];
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            for (int w : adj[v])
                if (w != v && colors[w] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            colors[v] = c;
            if (self(self, pos + 1, std::max(used, c + 1))) return true;
            colors[v] = -1;
        }
        return false;
    };
    for (auto& [u, v] : g.edges())
        if (u == v) return std::nullopt; // a loop admits no proper coloring
    if (!assign(assign, 0, 0)) return std::nullopt;
    return colors;
}

int chromatic_number(const graph::Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1; k <= g.vertex_count(); ++k)
        if (is_k_colorable(g, k)) return k;
    throw DomainError("graph is not colorable (loop present)");
}

DegeneracyColoring degeneracy_coloring(const graph::Graph& g) {
    int n = g.vertex_count();
    auto adj = g.adjacency_lists();
    for (auto& list : adj) list.erase(std::unique(list.begin(), list.end()), list.end());

    std::vector<int> live_degree(n, 0);
    for (int v = 0; v < n; ++v) live_degree[v] = static_cast<int>(adj[v].size());
    std::vector<char> removed(n, 0);
    std::vector<int> elimination;
    DegeneracyColoring out;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || live_degree[v] < live_degree[best]))
                best = v;
        out.degeneracy = std::max(out.degeneracy, live_degree[best]);
        removed[best] = 1;
        elimination.push_back(best);
        for (int w : adj[best])
            if (!removed[w]) --live_degree[w];
    }

    // Color in reverse elimination order: at most degeneracy+1 colors needed.
    out.coloring.assign(n, -1);
    for (auto it = elimination.rbegin(); it != elimination.rend(); ++it) {
        int v = *it;
        std::vector<char> taken(static_cast<std::size_t>(out.degeneracy) + 2, 0);
        for (int w : adj[v])
            if (w != v && out.coloring[w] >= 0 &&
                out.coloring[w] <= out.degeneracy + 1)
                taken[static_cast<std::size_t>(out.coloring[w])] = 1;
        int c = 0;
        while (taken[static_cast<std::size_t>(c)]) ++c;
        out.coloring[v] = c;
        out.colors_used = std::max(out.colors_used, c + 1);
    }
    return out;
}

namespace {

// Edge-list form used inside deletion-contraction.
std::vector<Integer> chromatic_rec(int n, std::vector<std::pair<int, int>> edges) {
    if (edges.empty()) {
        // x^n
        std::vector<Integer> poly(static_cast<std::size_t>(n) + 1);
        poly[static_cast<std::size_t>(n)] = Integer(1);
        return poly;
    }
    auto [a, b] = edges.back();
    edges.pop_back();

    std::vector<Integer> deleted = chromatic_rec(n, edges);

    // Contract b into a; drop parallel duplicates.
    std::vector<std::pair<int, int>> contracted;
    for (auto [u, v] : edges) {
        if (u == b) u = a;
        if (v == b) v = a;
        if (u == v) continue; // cannot happen for simple input, kept for safety
        if (u > b) --u;
        if (v > b) --v;
        if (u > v) std::swap(u, v);
        contracted.emplace_back(u, v);
    }
    std::sort(contracted.begin(), contracted.end());
    contracted.erase(std::unique(contracted.begin(), contracted.end()),
                     contracted.end());
    std::vector<Integer> merged = chromatic_rec(n - 1, std::move(contracted));

    std::vector<Integer> out(deleted.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = deleted[i];
        if (i < merged.size()) out[i] -= merged[i];
    }
    return out;
}

} // namespace

std::vector<Integer> chromatic_polynomial(const graph::Graph& g) {
    if (!g.is_simple())
        throw DomainError("chromatic polynomial is defined for simple graphs");
    if (g.edge_count() > 18)
        throw CapExceeded("deletion-contraction limited to 18 edges");
    return chromatic_rec(g.vertex_count(), g.edges());
}

Natural evaluate_chromatic_polynomial(const std::vector<Integer>& poly,
                                      std::uint64_t k) {
    Integer value;
    Integer kk(Natural(k), false);
    for (std::size_t i = poly.size(); i-- > 0;) value = value * kk + poly[i];
    if (value.is_negative())
        throw DomainError("polynomial evaluated negative: not a chromatic polynomial");
    return value.magnitude();
}

std::string format_chromatic_polynomial(const std::vector<Integer>& poly) {
    std::string out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (i) out += ' ';
        out += poly[i].to_string();
    }
    return out;
}

Natural count_colorings(const graph::Graph& g, std::uint64_t k) {
    int n = g.vertex_count();
    double work = 1;
    for (int i = 0; i < n; ++i) {
        work *= static_cast<double>(k);
        if (work > 1e7) throw CapExceeded("brute-force coloring limited to k^n <= 1e7");
    }
    if (n == 0) return Natural(1);
    if (k == 0) return Natural(0);

    std::vector<std::uint64_t> assign(n, 0);
    Natural count;
    while (true) {
        bool proper = true;
        for (auto& [u, v] : g.edges())
            if (assign[u] == assign[v]) {
                proper = false;
                break;
            }
        if (proper) count += Natural(1);
        int pos = n - 1;
        while (pos >= 0 && assign[pos] + 1 == k) assign[pos--] = 0;
        if (pos < 0) break;
        ++assign[pos];
    }
    return count;
}

BoundVerdict planar_edge_bound(const graph::Graph& g) {
    long long v = g.vertex_count();
    if (v < 3) throw DomainError("edge bound stated for v >= 3");
    long long e = g.edge_count();
    return e > 3 * v - 6 ? BoundVerdict::ViolatesBound : BoundVerdict::Inconclusive;
}

BoundVerdict bipartite_planar_bound(const graph::Graph& g) {
    long long v = g.vertex_count();
    if (v < 3) throw DomainError("edge bound stated for v >= 3");
    if (!graph::two_coloring(g).coloring)
        throw NotBipartite("bipartite bound needs a bipartite graph");
    long long e = g.edge_count();
    return e > 2 * v - 4 ? BoundVerdict::ViolatesBound : BoundVerdict::Inconclusive;
}

long long euler_characteristic(long long v, long long e, long long f) {
    return v - e + f;
}

bool check_polyhedron(const PolyhedronData& p) {
    return euler_characteristic(p.vertices, p.edges, p.faces) == 2;
}

const std::vector<PolyhedronData>& builtin_polyhedra() {
    static const std::vector<PolyhedronData> table = {
        {"tetrahedron", 4, 6, 4},
        {"cube", 8, 12, 6},
        {"octahedron", 6, 12, 8},
        {"dodecahedron", 20, 30, 12},
        {"icosahedron", 12, 30, 20},
        {"soccer_ball", 60, 90, 32},
        {"basketball", 6, 12, 8},
        {"football", 2, 4, 4},
        {"volleyball", 32, 48, 18},
    };
    return table;
}

int circle_region_color(const Rational& x, const Rational& y,
                        const CircleArrangement& arrangement) {
    int inside = 0;
    for (const auto& circle : arrangement.circles) {
        if (circle.radius.sign() <= 0) throw DomainError("circle radius must be positive");
        Rational dx = x - circle.center_x;
        Rational dy = y - circle.center_y;
        Rational dist2 = dx * dx + dy * dy;
        Rational r2 = circle.radius * circle.radius;
        if (dist2 == r2) throw BoundaryPoint("point lies on a circle");
        if (dist2 < r2) ++inside;
    }
    return inside % 2;
}

} // namespace combi::color
