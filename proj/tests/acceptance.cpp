// Acceptance suite: end-to-end checks of the library's headline results.
// Each criterion prints one PASS/FAIL line; the process fails if any does.

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "combi/coloring.hpp"
#include "combi/counting.hpp"
#include "combi/error.hpp"
#include "combi/genfunc.hpp"
#include "combi/graph.hpp"
#include "combi/graphopt.hpp"
#include "combi/natural.hpp"
#include "combi/rational.hpp"
#include "combi/sequences.hpp"

using namespace combi;

namespace {

int failures = 0;
int current = 0;

struct Criterion {
    std::string label;
    std::ostringstream detail;
    bool ok = true;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

void run(const std::string& label, const std::function<void(Criterion&)>& body) {
    Criterion c;
    c.label = label;
    ++current;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail << "exception: " << e.what();
    }
    if (c.ok) {
        std::cout << "PASS  criterion " << current << ": " << label << "\n";
    } else {
        std::cout << "FAIL  criterion " << current << ": " << label << " ["
                  << c.detail.str() << "]\n";
        ++failures;
    }
}

graph::Graph random_graph(std::mt19937_64& rng, int n, int percent) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(u, v);
    return graph::Graph(n, std::move(edges));
}

} // namespace

int main() {
    using counting::binomial;

    run("selection table and big binomials", [](Criterion& c) {
        c.require(counting::selection_count(5, 2, {false, false}).to_uint64() == 10,
                  "unordered no-repeats");
        c.require(counting::selection_count(5, 2, {true, false}).to_uint64() == 20,
                  "ordered no-repeats");
        c.require(counting::selection_count(5, 2, {false, true}).to_uint64() == 15,
                  "unordered repeats");
        c.require(counting::selection_count(5, 2, {true, true}).to_uint64() == 25,
                  "ordered repeats");
        c.require(binomial(90, 5).to_uint64() == 43949268, "C(90,5)");
        c.require(binomial(107, 4).to_uint64() == 5160610, "C(107,4)");
        c.require(binomial(24, 9).to_uint64() == 1307504, "C(24,9)");
    });

    run("binomial identity suite", [](Criterion& c) {
        for (std::uint64_t n = 0; n <= 60 && c.ok; ++n) {
            Natural row_sum, even_sum, odd_sum;
            for (std::uint64_t k = 0; k <= n; ++k) {
                const Natural b = binomial(n, k);
                row_sum += b;
                (k % 2 ? odd_sum : even_sum) += b;
                c.require(b == binomial(n, n - k), "symmetry");
                if (k < n)
                    c.require(b + binomial(n, k + 1) == binomial(n + 1, k + 1),
                              "Pascal recurrence");
            }
            c.require(row_sum == counting::subset_count(n), "row sum 2^n");
            if (n >= 1) c.require(even_sum == odd_sum, "alternating sum");
        }
        for (std::uint64_t n = 0; n <= 30 && c.ok; ++n) {
            Natural squares;
            for (std::uint64_t k = 0; k <= n; ++k)
                squares += binomial(n, k) * binomial(n, k);
            c.require(squares == binomial(2 * n, n), "sum of squares");
        }
        for (std::uint64_t n = 0; n <= 15 && c.ok; ++n)
            for (std::uint64_t m = 0; m <= 15; ++m) {
                Natural stick;
                for (std::uint64_t j = 0; j <= m; ++j) stick += binomial(n + j, j);
                c.require(stick == binomial(n + m + 1, m), "hockey stick");
            }
        for (std::uint64_t n = 0; n <= 20 && c.ok; ++n)
            for (std::uint64_t m = 0; m <= 20; ++m)
                for (std::uint64_t l = 0; l <= 20; ++l) {
                    Natural sum;
                    for (std::uint64_t k = 0; k <= l; ++k)
                        sum += binomial(n, k) * binomial(m, l - k);
                    c.require(sum == binomial(n + m, l), "Vandermonde");
                }
    });

    run("poker hand counts", [](Criterion& c) {
        using counting::PokerHand;
        auto expect = [&](PokerHand h, std::uint64_t v, const char* name) {
            c.require(counting::poker_count(h).to_uint64() == v, name);
        };
        expect(PokerHand::royal_flush, 4, "royal flush");
        expect(PokerHand::straight_flush, 36, "straight flush");
        expect(PokerHand::four_of_a_kind, 624, "four of a kind");
        expect(PokerHand::full_house, 3744, "full house");
        expect(PokerHand::flush, 5108, "flush");
        expect(PokerHand::straight, 10200, "straight");
        expect(PokerHand::three_of_a_kind, 54912, "three of a kind");
        expect(PokerHand::two_pair, 123552, "two pairs");
        expect(PokerHand::pair, 1098240, "pair");
        expect(PokerHand::high_card, 1302540, "high card");
        Natural total;
        for (auto h : counting::all_poker_hands()) total += counting::poker_count(h);
        c.require(total.to_uint64() == 2598960, "total C(52,5)");
    });

    run("derangements", [](Criterion& c) {
        using counting::DerangementMethod;
        c.require(counting::derangement(4).to_uint64() == 9, "D4");
        c.require(counting::derangement(6).to_uint64() == 265, "D6");
        c.require(counting::derangement(10).to_uint64() == 1334961, "D10");
        for (std::uint64_t n = 0; n <= 200 && c.ok; ++n) {
            Natural a = counting::derangement(n, DerangementMethod::product_recurrence);
            Natural b = counting::derangement(n, DerangementMethod::affine_recurrence);
            Natural d = counting::derangement(n, DerangementMethod::closed_form);
            c.require(a == b && b == d, "three formulas agree");
        }
        for (int n = 1; n <= 8 && c.ok; ++n) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::uint64_t count = 0;
            do {
                bool fixed = false;
                for (int i = 0; i < n; ++i)
                    if (perm[i] == i) fixed = true;
                if (!fixed) ++count;
            } while (std::next_permutation(perm.begin(), perm.end()));
            c.require(counting::derangement(n).to_uint64() == count,
                      "permutation filter oracle");
        }
    });

    run("recurrence engine", [](Criterion& c) {
        c.require(seq::fibonacci(17).to_uint64() == 1597, "F17");
        c.require(seq::stair_ways(9, {{1, 2, 3}}).to_uint64() == 149, "T9");
        c.require(seq::hanoi_count(5).to_uint64() == 31, "Hanoi count");
        auto moves = seq::hanoi_moves(5);
        c.require(moves.size() == 31, "31 moves");
        {
            std::vector<std::vector<int>> pegs(3);
            for (int d = 5; d >= 1; --d) pegs[0].push_back(d);
            bool legal = true;
            for (auto& mv : moves) {
                if (pegs[mv.from].empty() || pegs[mv.from].back() != mv.disk ||
                    (!pegs[mv.to].empty() && pegs[mv.to].back() < mv.disk)) {
                    legal = false;
                    break;
                }
                pegs[mv.from].pop_back();
                pegs[mv.to].push_back(mv.disk);
            }
            c.require(legal && (pegs[1].size() == 5 || pegs[2].size() == 5),
                      "legal full transfer");
        }
        c.require(seq::plane_regions(10).to_uint64() == 56, "P10");

        auto check_recurrence = [&](seq::LinearRecurrence rec, const char* name) {
            auto cf = seq::solve_recurrence(rec);
            for (std::uint64_t n = std::max(rec.first_index, 1); n <= 40; ++n) {
                double exact = seq::iterate_recurrence(rec, n).to_double();
                double approx = cf.evaluate(n);
                if (std::abs(approx - exact) / std::max(1.0, std::abs(exact)) >= 1e-8) {
                    c.require(false, name);
                    return;
                }
            }
        };
        seq::LinearRecurrence fib;
        fib.coefficients = {Rational(1), Rational(1)};
        fib.initial_values = {Rational(1), Rational(1)};
        check_recurrence(fib, "Fibonacci closed form");
        seq::LinearRecurrence wasp;
        wasp.coefficients = {Rational(1), Rational(20)};
        wasp.initial_values = {Rational(1), Rational(1)};
        check_recurrence(wasp, "wasp closed form");
        seq::LinearRecurrence three_two;
        three_two.coefficients = {Rational(5), Rational(-6)};
        three_two.initial_values = {Rational(0), Rational(1)};
        three_two.first_index = 0;
        check_recurrence(three_two, "5a-6a closed form");
        auto cf = seq::solve_recurrence(three_two);
        bool pow_match = true;
        for (std::uint64_t n = 0; n <= 20; ++n) {
            long long expect = 1, p2 = 1;
            for (std::uint64_t i = 0; i < n; ++i) {
                expect *= 3;
                p2 *= 2;
            }
            expect -= p2;
            if (std::llround(cf.evaluate(n)) != expect) pow_match = false;
        }
        c.require(pow_match, "3^n - 2^n after rounding");
    });

    run("generating functions", [](Criterion& c) {
        auto geo = gf::TruncatedSeries::geometric(32);
        auto one_minus_x =
            gf::TruncatedSeries(gf::Polynomial({Rational(1), Rational(-1)}), 32);
        c.require(gf::series_mul(geo, one_minus_x) == gf::TruncatedSeries::one(32),
                  "geometric * (1-x) = 1");
        std::vector<gf::CoinSpec> wallet{{1, 6}, {5, 2}, {10, 4}, {25, 3}};
        c.require(gf::ways_to_pay(wallet, 100).to_uint64() == 5, "wallet x^100");
        std::vector<gf::CoinSpec> pouch{{1, 3}, {29, 2}, {493, 2}};
        auto pouch_poly = gf::coin_change_polynomial(pouch);
        bool zero_one = true;
        for (int i = 0; i <= pouch_poly.degree(); ++i) {
            auto v = pouch_poly.coeff(static_cast<std::size_t>(i));
            if (v != Rational(0) && v != Rational(1)) zero_one = false;
        }
        c.require(zero_one, "Harry Potter pouch coefficients in {0,1}");
        auto root = gf::series_sqrt(
            gf::TruncatedSeries(gf::Polynomial({Rational(1), Rational(-4)}), 16));
        c.require(root.coeff(0) == Rational(1) && root.coeff(1) == Rational(-2) &&
                      root.coeff(2) == Rational(-2) && root.coeff(3) == Rational(-4),
                  "sqrt(1-4x) prefix");
        auto cat = gf::catalan_gf(9);
        std::vector<std::int64_t> first10{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
        for (std::size_t n = 0; n < 10; ++n)
            c.require(cat.coeff(n) == Rational(first10[n]), "catalan gf coefficient");
    });

    run("partial fractions", [](Criterion& c) {
        gf::RationalGF hanoi(gf::Polynomial({Rational(0), Rational(1)}),
                             gf::Polynomial({Rational(1), Rational(-3), Rational(2)}));
        auto pf = gf::partial_fractions(hanoi);
        c.require(pf.exact, "exact decomposition");
        auto terms = pf.exact_terms;
        std::sort(terms.begin(), terms.end(),
                  [](auto& a, auto& b) { return a.second < b.second; });
        c.require(terms.size() == 2 && terms[0].first == Rational(-1) &&
                      terms[0].second == Rational(1) && terms[1].first == Rational(1) &&
                      terms[1].second == Rational(2),
                  "weights (-1, 1)");
        auto expansion = gf::expand_rational(hanoi, 30);
        Natural pow2(1);
        for (std::size_t n = 0; n <= 30; ++n) {
            c.require(expansion.coeff(n) ==
                          Rational(Integer(pow2 - Natural(1)), Natural(1)),
                      "2^n - 1 coefficients");
            pow2 *= Natural(2);
        }
    });

    run("graph walk counting", [](Criterion& c) {
        graph::Graph cage(5, {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {3, 4}});
        for (int v = 0; v < 5; ++v)
            c.require(graph::count_walks(cage, v, v, 2).to_uint64() ==
                          static_cast<std::uint64_t>(cage.degree(v)),
                      "M2 diagonal = degrees");
        c.require(graph::count_walks(cage, 0, 3, 3).to_uint64() == 2, "h_{1,4}(3)");
        auto m1 = graph::fibonacci_walk_matrix();
        for (std::uint64_t n = 0; n <= 20; ++n)
            c.require(graph::count_walks(m1, 0, 1, n) == seq::fibonacci(n),
                      "Fibonacci walk graph");
    });

    run("eulerian classification and walks", [](Criterion& c) {
        c.require(graph::euler_classify(graph::konigsberg()).kind ==
                      graph::EulerClass::Kind::NoEulerianWalk,
                  "Konigsberg");
        auto k5 = graph::complete(5);
        auto walk = graph::euler_walk(k5);
        c.require(walk.edge_ids.size() == 10, "K5 walk has 10 edges");
        c.require(walk.vertices.front() == walk.vertices.back(), "K5 walk closed");
        std::set<int> used(walk.edge_ids.begin(), walk.edge_ids.end());
        c.require(used.size() == 10, "every edge once");

        std::mt19937_64 rng(5150);
        int done = 0;
        while (done < 200) {
            int n = 2 + static_cast<int>(rng() % 7);
            std::vector<std::pair<int, int>> edges;
            int m = 1 + static_cast<int>(rng() % (2 * n));
            for (int i = 0; i < m; ++i) {
                int u = static_cast<int>(rng() % n);
                int v = static_cast<int>(rng() % n);
                if (u == v) v = (v + 1) % n;
                edges.emplace_back(u, v);
            }
            graph::Graph g(n, edges, true);
            graph::EulerClass cls;
            try {
                cls = graph::euler_classify(g);
            } catch (const Disconnected&) {
                continue;
            }
            ++done;
            int odd = 0;
            for (int v = 0; v < n; ++v) odd += g.degree(v) % 2;
            bool match = (odd == 0 && cls.kind == graph::EulerClass::Kind::ClosedWalk) ||
                         (odd == 2 && cls.kind == graph::EulerClass::Kind::OpenWalk) ||
                         (odd > 2 && cls.kind == graph::EulerClass::Kind::NoEulerianWalk);
            c.require(match, "odd-degree rule");
        }
    });

    run("tree counts and bijections", [](Criterion& c) {
        std::vector<std::size_t> sizes{1, 1, 3, 16, 125};
        for (int n = 1; n <= 5; ++n) {
            auto trees = graph::enumerate_labeled_trees(n);
            c.require(trees.size() == sizes[static_cast<std::size_t>(n - 1)],
                      "enumeration size");
            c.require(Natural(trees.size()) == graph::cayley_count(n), "n^{n-2}");
        }
        c.require(graph::binary_tree_count(5).to_uint64() == 14, "binary trees");
        c.require(graph::at_most_binary_count(3).to_uint64() == 5, "at-most binary");
        c.require(graph::tournament_count(5).to_uint64() == 1680, "tournaments");
        std::vector<int> perm{1, 2, 3, 4, 5, 6};
        int count = 0;
        bool all_match = true;
        do {
            auto tree = graph::increasing_tree_from_permutation(perm);
            if (graph::permutation_from_increasing_tree(tree) != perm)
                all_match = false;
            ++count;
        } while (std::next_permutation(perm.begin(), perm.end()));
        c.require(count == 720 && all_match, "720 round trips");
    });

    run("optimization: kruskal and tree shortcut", [](Criterion& c) {
        std::mt19937_64 rng(6021);
        // Kruskal vs exhaustive minimum on 100 random connected graphs
        int done = 0;
        while (done < 100) {
            int n = 3 + static_cast<int>(rng() % 5);
            std::vector<std::pair<int, int>> edges;
            std::vector<Rational> weights;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 100 < 70) {
                        edges.emplace_back(u, v);
                        weights.emplace_back(
                            Rational(static_cast<std::int64_t>(rng() % 40) + 1,
                                     static_cast<std::int64_t>(rng() % 3) + 1));
                    }
            graph::Graph g(n, edges);
            if (!graph::is_connected(g)) continue;
            ++done;
            opt::WeightedGraph w(g, weights);
            auto mst = opt::kruskal_mst(w);
            // exhaustive minimum over spanning trees
            Rational best;
            bool first = true;
            int m = g.edge_count();
            std::vector<int> pick;
            std::function<void(int, int)> rec = [&](int from, int chosen) {
                if (chosen == n - 1) {
                    std::vector<std::pair<int, int>> sub;
                    Rational cost;
                    for (int idx : pick) {
                        sub.push_back(g.edges()[static_cast<std::size_t>(idx)]);
                        cost += weights[static_cast<std::size_t>(idx)];
                    }
                    if (graph::is_tree(graph::Graph(n, sub)) &&
                        (first || cost < best)) {
                        best = cost;
                        first = false;
                    }
                    return;
                }
                for (int i = from; i < m; ++i) {
                    pick.push_back(i);
                    rec(i + 1, chosen + 1);
                    pick.pop_back();
                }
            };
            rec(0, 0);
            c.require(!first && mst.cost == best, "kruskal = exhaustive minimum");
        }

        // Euclidean instances: mst <= optimal <= shortcut <= 2 mst
        done = 0;
        while (done < 100) {
            int n = 4 + static_cast<int>(rng() % 6);
            std::vector<std::pair<int, int>> points;
            std::set<std::pair<int, int>> used;
            while (static_cast<int>(points.size()) < n) {
                std::pair<int, int> p{static_cast<int>(rng() % 50),
                                      static_cast<int>(rng() % 50)};
                if (used.insert(p).second) points.push_back(p);
            }
            std::vector<std::pair<int, int>> edges;
            std::vector<Rational> weights;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    double dx = points[u].first - points[v].first;
                    double dy = points[u].second - points[v].second;
                    edges.emplace_back(u, v);
                    weights.emplace_back(Rational(
                        std::llround(std::sqrt(dx * dx + dy * dy) * 100000), 100000));
                }
            opt::WeightedGraph w(graph::Graph(n, edges), weights);
            if (!opt::satisfies_triangle_inequality(w)) continue;
            ++done;
            auto mst = opt::kruskal_mst(w);
            auto optimal = opt::brute_force_tour(w);
            auto shortcut = opt::tsp_tree_shortcut(w, 0);
            c.require(mst.cost <= optimal.cost, "mst <= optimal");
            c.require(optimal.cost <= shortcut.cost, "optimal <= shortcut");
            c.require(shortcut.cost <= Rational(2) * mst.cost, "shortcut <= 2 mst");
        }

        // constructed non-metric instance beats the 2x bound
        opt::WeightedGraph bad(graph::complete(4),
                               {Rational(1), Rational(2), Rational(10000), Rational(1),
                                Rational(2), Rational(1)});
        c.require(!opt::satisfies_triangle_inequality(bad), "non-metric");
        auto optimal = opt::brute_force_tour(bad);
        auto shortcut = opt::tsp_tree_shortcut(bad, 0);
        c.require(shortcut.cost > Rational(2) * optimal.cost,
                  "2x bound violated without the triangle inequality");
    });

    run("matchings and Hall's condition", [](Criterion& c) {
        auto p4 = graph::path(4);
        std::vector<std::pair<int, int>> middle{{1, 2}, {0, 1}, {2, 3}};
        c.require(opt::greedy_maximal_matching(p4, &middle).size() == 1,
                  "P4 maximal size 1");
        c.require(opt::maximum_matching_bipartite(p4).size() == 2, "P4 maximum 2");
        c.require(opt::maximum_matching_bipartite(graph::complete_bipartite(20, 21))
                          .size() == 20,
                  "B20,21 maximum");
        graph::Graph dorm1(8, {{0, 7}, {1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 7}});
        auto violator = opt::hall_violator(dorm1, {0, 1, 2, 3});
        c.require(violator.has_value() && *violator == std::vector<int>{0, 1, 3},
                  "dorm 1 violator {a,b,d}");
        graph::Graph dorm2(8, {{0, 4}, {0, 7}, {1, 5}, {1, 6}, {2, 4}, {2, 6},
                               {3, 5}, {3, 7}});
        c.require(!opt::hall_violator(dorm2, {0, 1, 2, 3}).has_value(),
                  "dorm 2 has none");

        std::mt19937_64 rng(888);
        int done = 0;
        while (done < 60) {
            int a = 1 + static_cast<int>(rng() % 4);
            int b = 1 + static_cast<int>(rng() % 4);
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < a; ++u)
                for (int v = a; v < a + b; ++v)
                    if (rng() % 100 < 55) edges.emplace_back(u, v);
            if (edges.size() > 12) continue;
            ++done;
            graph::Graph g(a + b, edges);
            auto fast = opt::maximum_matching_bipartite(g);
            int best = 0;
            for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
                opt::Matching cand;
                for (std::size_t i = 0; i < edges.size(); ++i)
                    if (mask & (1u << i)) cand.edges.push_back(edges[i]);
                if (opt::is_valid_matching(g, cand) && cand.size() > best)
                    best = cand.size();
            }
            c.require(fast.size() == best, "augmenting path = brute force");
        }
    });

    run("ramsey numbers", [](Criterion& c) {
        c.require(opt::ramsey_number(3, 3, 7) == 6, "R(3,3) = 6");
        opt::EdgeColoring2 witness(5);
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) witness.set_color(u, v, 1);
        for (int i = 0; i < 5; ++i) {
            int a = i, b = (i + 1) % 5;
            witness.set_color(std::min(a, b), std::max(a, b), 0);
        }
        c.require(!opt::mono_clique(witness, 3, 0).has_value(),
                  "pentagon has no solid triangle");
        c.require(!opt::mono_clique(witness, 3, 1).has_value(),
                  "pentagram has no dashed triangle");
        c.require(!opt::ramsey_holds(5, 3, 3), "K5 admits a witness coloring");
    });

    run("colorings and chromatic polynomials", [](Criterion& c) {
        for (int n = 1; n <= 7; ++n)
            c.require(color::chromatic_number(graph::complete(n)) == n, "chi(K_n)");
        c.require(color::chromatic_number(graph::cycle(7)) == 3, "chi(C7)");
        c.require(color::chromatic_number(graph::cycle(6)) == 2, "chi(C6)");
        c.require(color::chromatic_polynomial(graph::complete(3)) ==
                      std::vector<Integer>{0, 2, -3, 1},
                  "K3 polynomial");
        c.require(color::chromatic_polynomial(graph::cycle(4)) ==
                      std::vector<Integer>{0, -3, 6, -4, 1},
                  "C4 polynomial");
        // C5: x(x-1)(x-2)(x^2-2x+2)
        c.require(color::chromatic_polynomial(graph::cycle(5)) ==
                      std::vector<Integer>{0, 4, -10, 10, -5, 1},
                  "C5 polynomial");

        std::mt19937_64 rng(1999);
        int done = 0;
        while (done < 25) {
            int n = 1 + static_cast<int>(rng() % 7);
            auto g = random_graph(rng, n, 45);
            if (g.edge_count() > 12) continue;
            ++done;
            auto poly = color::chromatic_polynomial(g);
            for (std::uint64_t k = 0; k <= 3; ++k)
                c.require(color::evaluate_chromatic_polynomial(poly, k) ==
                              color::count_colorings(g, k),
                          "polynomial counts colorings");
        }

        for (auto solid : {graph::PlatonicSolid::tetrahedron, graph::PlatonicSolid::cube,
                           graph::PlatonicSolid::octahedron,
                           graph::PlatonicSolid::dodecahedron,
                           graph::PlatonicSolid::icosahedron}) {
            auto g = graph::platonic(solid);
            auto dc = color::degeneracy_coloring(g);
            bool proper = true;
            for (auto& [u, v] : g.edges())
                if (dc.coloring[u] == dc.coloring[v]) proper = false;
            c.require(proper && dc.colors_used <= 6, "platonic 6-coloring");
        }
    });

    run("planarity bounds and Euler characteristic", [](Criterion& c) {
        c.require(color::planar_edge_bound(graph::complete(5)) ==
                      color::BoundVerdict::ViolatesBound,
                  "K5 violates e <= 3v-6");
        c.require(color::bipartite_planar_bound(graph::complete_bipartite(3, 3)) ==
                      color::BoundVerdict::ViolatesBound,
                  "B33 violates e <= 2v-4");
        auto& table = color::builtin_polyhedra();
        c.require(table.size() == 9, "nine polyhedra");
        for (auto& p : table)
            c.require(color::check_polyhedron(p), p.name + " has chi = 2");
    });

    if (failures == 0) {
        std::cout << "acceptance: all " << current << " criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " of " << current
              << " criteria FAILED\n";
    return 1;
}
