// pybind11 module exposing the main operations. Exact naturals cross the
// boundary as python ints and rationals as fractions.Fraction, both built
// from their decimal string forms.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "combi/coloring.hpp"
#include "combi/counting.hpp"
#include "combi/error.hpp"
#include "combi/genfunc.hpp"
#include "combi/graph.hpp"
#include "combi/graphopt.hpp"
#include "combi/natural.hpp"
#include "combi/rational.hpp"
#include "combi/sequences.hpp"

namespace py = pybind11;
using namespace combi;

namespace {

py::object to_py_int(const Natural& n) {
    return py::module_::import("builtins").attr("int")(n.to_string());
}

py::object to_py_int(const Integer& n) {
    return py::module_::import("builtins").attr("int")(n.to_string());
}

py::object to_py_fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(r.to_string());
}

Rational rational_from(py::handle obj) {
    return Rational(py::str(obj).cast<std::string>());
}

std::vector<Rational> rationals_from(const std::vector<py::object>& objs) {
    std::vector<Rational> out;
    out.reserve(objs.size());
    for (auto& o : objs) out.push_back(rational_from(o));
    return out;
}

seq::LinearRecurrence recurrence_from(const std::vector<py::object>& coeffs,
                                      const std::vector<py::object>& init,
                                      int first_index) {
    seq::LinearRecurrence rec;
    rec.coefficients = rationals_from(coeffs);
    rec.initial_values = rationals_from(init);
    rec.first_index = first_index;
    rec.validate();
    return rec;
}

} // namespace

PYBIND11_MODULE(_combi, m) {
    m.doc() = "exact combinatorics and graph algorithms";

    py::register_exception<Error>(m, "CombiError");

    // counting
    m.def("factorial", [](std::uint64_t n) { return to_py_int(counting::factorial(n)); });
    m.def("binomial", [](std::uint64_t n, std::uint64_t k) {
        return to_py_int(counting::binomial(n, k));
    });
    m.def("falling_factorial", [](std::uint64_t n, std::uint64_t k) {
        return to_py_int(counting::falling_factorial(n, k));
    });
    m.def(
        "generalized_binomial",
        [](py::object alpha, std::uint64_t k) {
            return to_py_fraction(counting::generalized_binomial(rational_from(alpha), k));
        },
        py::arg("alpha"), py::arg("k"));
    m.def(
        "selection_count",
        [](std::uint64_t n, std::uint64_t k, bool ordered, bool repeats) {
            return to_py_int(counting::selection_count(n, k, {ordered, repeats}));
        },
        py::arg("n"), py::arg("k"), py::arg("ordered") = false,
        py::arg("repeats") = false);
    m.def("multinomial", [](const std::vector<std::uint64_t>& parts) {
        return to_py_int(counting::multinomial(parts));
    });
    m.def("anagram_count",
          [](const std::string& word) { return to_py_int(counting::anagram_count(word)); });
    m.def("subset_count", [](std::uint64_t n) { return to_py_int(counting::subset_count(n)); });
    m.def("pascal_row", [](std::uint64_t n) {
        py::list row;
        auto rows = counting::pascal_rows(n);
        for (auto& v : rows.back()) row.append(to_py_int(v));
        return row;
    });
    m.def("pascal_row_mod", [](std::uint64_t n, std::uint64_t mod) {
        return counting::pascal_row_mod(n, mod);
    });
    m.def("coprime_count", [](std::uint64_t n, const std::vector<std::uint64_t>& primes) {
        return to_py_int(counting::coprime_count(n, primes));
    });
    m.def(
        "derangement",
        [](std::uint64_t n, const std::string& method) {
            counting::DerangementMethod dm =
                method == "affine" ? counting::DerangementMethod::affine_recurrence
                : method == "closed" ? counting::DerangementMethod::closed_form
                                     : counting::DerangementMethod::product_recurrence;
            return to_py_int(counting::derangement(n, dm));
        },
        py::arg("n"), py::arg("method") = "product");
    m.def(
        "catalan",
        [](std::uint64_t n, const std::string& method) {
            return to_py_int(counting::catalan(
                n, method == "recursion" ? counting::CatalanMethod::recursion
                                         : counting::CatalanMethod::closed_form));
        },
        py::arg("n"), py::arg("method") = "closed");
    m.def("sigma0", [](std::uint64_t n) {
        return to_py_int(counting::sigma0(counting::DivisorProfile::of(n)));
    });
    m.def("sigma1", [](std::uint64_t n) {
        return to_py_int(counting::sigma1(counting::DivisorProfile::of(n)));
    });
    m.def("mobius",
          [](std::uint64_t n) { return counting::mobius(counting::DivisorProfile::of(n)); });
    m.def("poker_counts", [] {
        py::dict table;
        for (auto h : counting::all_poker_hands())
            table[counting::poker_hand_name(h)] = to_py_int(counting::poker_count(h));
        return table;
    });

    // sequences
    m.def("fibonacci", [](std::uint64_t n) { return to_py_int(seq::fibonacci(n)); });
    m.def("lucas", [](std::uint64_t n) { return to_py_int(seq::lucas(n)); });
    m.def("fibonacci_binet", &seq::fibonacci_binet);
    m.def("stair_ways", [](std::uint64_t n, const std::vector<std::uint32_t>& steps) {
        seq::StairRule rule;
        for (auto s : steps) rule.steps.insert(s);
        return to_py_int(seq::stair_ways(n, rule));
    });
    m.def(
        "iterate_recurrence",
        [](const std::vector<py::object>& coeffs, const std::vector<py::object>& init,
           std::uint64_t n, int first_index) {
            return to_py_fraction(
                seq::iterate_recurrence(recurrence_from(coeffs, init, first_index), n));
        },
        py::arg("coefficients"), py::arg("initial_values"), py::arg("n"),
        py::arg("first_index") = 1);
    m.def(
        "solve_recurrence",
        [](const std::vector<py::object>& coeffs, const std::vector<py::object>& init,
           int first_index) {
            auto cf = seq::solve_recurrence(recurrence_from(coeffs, init, first_index));
            return py::make_tuple(cf.roots, cf.weights);
        },
        py::arg("coefficients"), py::arg("initial_values"), py::arg("first_index") = 1);
    m.def("hanoi_count", [](std::uint64_t n) { return to_py_int(seq::hanoi_count(n)); });
    m.def("hanoi_moves", [](std::uint32_t n) {
        py::list moves;
        for (auto& mv : seq::hanoi_moves(n))
            moves.append(py::make_tuple(mv.disk, mv.from, mv.to));
        return moves;
    });
    m.def("plane_regions", [](std::uint64_t n) { return to_py_int(seq::plane_regions(n)); });
    m.def("circle_regions", [](std::uint64_t n) { return to_py_int(seq::circle_regions(n)); });

    // generating functions
    m.def(
        "expand_rational",
        [](const std::vector<py::object>& num, const std::vector<py::object>& den,
           std::size_t order) {
            gf::RationalGF r{gf::Polynomial(rationals_from(num)),
                             gf::Polynomial(rationals_from(den))};
            py::list out;
            auto series = gf::expand_rational(r, order);
            for (auto& c : series.coefficients()) out.append(to_py_fraction(c));
            return out;
        },
        py::arg("numerator"), py::arg("denominator"), py::arg("order"));
    m.def("catalan_gf", [](std::size_t order) {
        py::list out;
        auto series = gf::catalan_gf(order);
        for (auto& c : series.coefficients()) out.append(to_py_fraction(c));
        return out;
    });
    m.def(
        "series_sqrt",
        [](const std::vector<py::object>& coeffs) {
            py::list out;
            auto series = gf::series_sqrt(gf::TruncatedSeries(rationals_from(coeffs)));
            for (auto& c : series.coefficients()) out.append(to_py_fraction(c));
            return out;
        },
        py::arg("coefficients"));
    m.def(
        "ways_to_pay",
        [](const std::vector<std::pair<std::uint64_t, std::int64_t>>& coins,
           std::uint64_t amount) {
            std::vector<gf::CoinSpec> specs;
            for (auto& [value, count] : coins) {
                gf::CoinSpec spec;
                spec.value = value;
                if (count >= 0) spec.count = static_cast<std::uint64_t>(count);
                specs.push_back(spec);
            }
            return to_py_int(gf::ways_to_pay(specs, amount));
        },
        py::arg("coins"), py::arg("amount"),
        "coins are (value, count) pairs; count -1 means unlimited");
    m.def("partition_count",
          [](std::uint64_t n) { return to_py_int(gf::partition_count(n)); });
    m.def("partition_count_distinct",
          [](std::uint64_t n) { return to_py_int(gf::partition_count_distinct(n)); });
    m.def("partition_count_odd",
          [](std::uint64_t n) { return to_py_int(gf::partition_count_odd(n)); });

    // graphs
    py::class_<graph::Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<int, int>>, bool, bool>(),
             py::arg("n"), py::arg("edges"), py::arg("allow_multi") = false,
             py::arg("allow_loops") = false)
        .def_property_readonly("n", &graph::Graph::vertex_count)
        .def_property_readonly("edges", &graph::Graph::edges)
        .def("degree", &graph::Graph::degree)
        .def("degree_sequence", &graph::Graph::degree_sequence)
        .def("has_edge", &graph::Graph::has_edge)
        .def("__eq__", [](const graph::Graph& a, const graph::Graph& b) { return a == b; })
        .def("__repr__", [](const graph::Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("complete", &graph::complete);
    m.def("path", &graph::path);
    m.def("cycle", &graph::cycle);
    m.def("complete_bipartite", &graph::complete_bipartite);
    m.def("petersen", &graph::petersen);
    m.def("konigsberg", &graph::konigsberg);
    m.def("platonic", [](const std::string& name) {
        auto solid = graph::platonic_by_name(name);
        if (!solid) throw DomainError("unknown platonic solid: " + name);
        return graph::platonic(*solid);
    });
    m.def("adjacency_matrix", &graph::adjacency_matrix);
    m.def("write_graph", &graph::write_graph);
    m.def("read_graph", [](const std::string& text) { return graph::read_graph(text); });
    m.def("connected_components", &graph::connected_components);
    m.def("is_connected", &graph::is_connected);
    m.def("two_coloring", [](const graph::Graph& g) {
        auto result = graph::two_coloring(g);
        return py::make_tuple(result.coloring, result.odd_cycle);
    });
    m.def("complement", &graph::complement);
    m.def("euler_classify", [](const graph::Graph& g) {
        auto cls = graph::euler_classify(g);
        std::string kind = cls.kind == graph::EulerClass::Kind::NoEulerianWalk ? "none"
                           : cls.kind == graph::EulerClass::Kind::OpenWalk     ? "open"
                                                                               : "closed";
        return py::make_tuple(kind, cls.endpoint_a, cls.endpoint_b);
    });
    m.def("euler_walk", [](const graph::Graph& g) {
        auto walk = graph::euler_walk(g);
        return py::make_tuple(walk.vertices, walk.edge_ids);
    });
    m.def("hamiltonian_cycle", &graph::hamiltonian_cycle);
    m.def("count_walks", [](const graph::Graph& g, int i, int j, std::uint64_t n) {
        return to_py_int(graph::count_walks(g, i, j, n));
    });
    m.def("fibonacci_walks", [](int i, int j, std::uint64_t n) {
        return to_py_int(graph::count_walks(graph::fibonacci_walk_matrix(), i, j, n));
    });
    m.def("is_tree", &graph::is_tree);
    m.def("spanning_tree", &graph::spanning_tree);
    m.def("cayley_count", [](int n) { return to_py_int(graph::cayley_count(n)); });
    m.def("enumerate_labeled_trees", &graph::enumerate_labeled_trees);
    m.def("binary_tree_count",
          [](std::uint64_t n) { return to_py_int(graph::binary_tree_count(n)); });
    m.def("at_most_binary_count",
          [](std::uint64_t n) { return to_py_int(graph::at_most_binary_count(n)); });
    m.def("tournament_count",
          [](std::uint64_t n) { return to_py_int(graph::tournament_count(n)); });
    m.def("increasing_tree_roundtrip", [](const std::vector<int>& perm) {
        return graph::permutation_from_increasing_tree(
            graph::increasing_tree_from_permutation(perm));
    });
    m.def("bst_inorder", [](const std::vector<int>& keys) {
        return graph::bst_inorder(graph::bst_from_sequence(keys));
    });

    // optimization
    m.def(
        "kruskal_mst",
        [](const graph::Graph& g, const std::vector<py::object>& weights) {
            opt::WeightedGraph w(g, rationals_from(weights));
            auto result = opt::kruskal_mst(w);
            return py::make_tuple(result.tree, to_py_fraction(result.cost));
        },
        py::arg("graph"), py::arg("weights"));
    m.def(
        "tsp_tree_shortcut",
        [](const graph::Graph& g, const std::vector<py::object>& weights, int start) {
            auto tour = opt::tsp_tree_shortcut(opt::WeightedGraph(g, rationals_from(weights)),
                                               start);
            return py::make_tuple(tour.vertices, to_py_fraction(tour.cost));
        },
        py::arg("graph"), py::arg("weights"), py::arg("start") = 0);
    m.def(
        "brute_force_tour",
        [](const graph::Graph& g, const std::vector<py::object>& weights) {
            auto tour = opt::brute_force_tour(opt::WeightedGraph(g, rationals_from(weights)));
            return py::make_tuple(tour.vertices, to_py_fraction(tour.cost));
        },
        py::arg("graph"), py::arg("weights"));
    m.def("maximum_matching_bipartite", [](const graph::Graph& g) {
        return opt::maximum_matching_bipartite(g).edges;
    });
    m.def("greedy_maximal_matching", [](const graph::Graph& g) {
        return opt::greedy_maximal_matching(g).edges;
    });
    m.def("hall_violator", [](const graph::Graph& g, const std::vector<int>& left) {
        return opt::hall_violator(g, left);
    });
    m.def("ramsey_number", &opt::ramsey_number, py::arg("m1"), py::arg("m2"),
          py::arg("cap") = 7, py::arg("workers") = 1);
    m.def("ramsey_holds", &opt::ramsey_holds, py::arg("n"), py::arg("m1"),
          py::arg("m2"), py::arg("workers") = 1);

    // coloring
    m.def("chromatic_number", &color::chromatic_number);
    m.def("is_k_colorable", &color::is_k_colorable);
    m.def("degeneracy_coloring", [](const graph::Graph& g) {
        auto dc = color::degeneracy_coloring(g);
        return py::make_tuple(dc.coloring, dc.colors_used, dc.degeneracy);
    });
    m.def("chromatic_polynomial", [](const graph::Graph& g) {
        py::list out;
        for (auto& c : color::chromatic_polynomial(g)) out.append(to_py_int(c));
        return out;
    });
    m.def("count_colorings", [](const graph::Graph& g, std::uint64_t k) {
        return to_py_int(color::count_colorings(g, k));
    });
    m.def("euler_characteristic", &color::euler_characteristic);
    m.def("builtin_polyhedra", [] {
        py::list out;
        for (auto& p : color::builtin_polyhedra())
            out.append(py::make_tuple(p.name, p.vertices, p.edges, p.faces));
        return out;
    });
    m.def(
        "circle_region_color",
        [](py::object x, py::object y,
           const std::vector<std::tuple<py::object, py::object, py::object>>& circles) {
            color::CircleArrangement arrangement;
            for (auto& [cx, cy, r] : circles)
                arrangement.circles.push_back(
                    {rational_from(cx), rational_from(cy), rational_from(r)});
            return color::circle_region_color(rational_from(x), rational_from(y),
                                              arrangement);
        },
        py::arg("x"), py::arg("y"), py::arg("circles"));
}
