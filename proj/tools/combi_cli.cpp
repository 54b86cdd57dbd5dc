// Command-line surface for the combi library. Every subcommand prints a
// deterministic text form; --json wraps the same data in a single document
// with a "result" field. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "combi/coloring.hpp"
#include "combi/counting.hpp"
#include "combi/error.hpp"
#include "combi/genfunc.hpp"
#include "combi/graph.hpp"
#include "combi/graphopt.hpp"
#include "combi/natural.hpp"
#include "combi/rational.hpp"
#include "combi/sequences.hpp"

using json = nlohmann::json;
using namespace combi;

namespace {

struct Output {
    bool as_json = false;
    std::ostringstream text;
    json value;

    void flush() {
        if (as_json) {
            json doc;
            doc["result"] = value;
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << text.str();
        }
    }
};

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::string format_complex(const std::complex<double>& z) {
    if (std::abs(z.imag()) < 1e-12) return format_double(z.real());
    std::ostringstream os;
    os << format_double(z.real()) << (z.imag() < 0 ? "-" : "+")
       << format_double(std::abs(z.imag())) << "i";
    return os.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (auto& tok : split(text, ',')) {
        if (tok.empty()) throw CLI::ValidationError("empty entry in list: " + text);
        try {
            out.push_back(std::stoull(tok));
        } catch (const std::exception&) {
            throw CLI::ValidationError("expected a number, got '" + tok + "'");
        }
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (auto& tok : split(text, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw CLI::ValidationError("expected an integer, got '" + tok + "'");
        }
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    for (auto& tok : split(text, ',')) {
        try {
            out.emplace_back(tok);
        } catch (const Error&) {
            throw CLI::ValidationError("expected a rational, got '" + tok + "'");
        }
    }
    return out;
}

// "1x6,5x2,25xinf" -> coin specs; inf needs an explicit truncation order later.
std::vector<gf::CoinSpec> parse_coins(const std::string& text) {
    std::vector<gf::CoinSpec> coins;
    for (auto& tok : split(text, ',')) {
        auto x = tok.find('x');
        if (x == std::string::npos)
            throw CLI::ValidationError("coin spec must look like VALUExCOUNT: " + tok);
        gf::CoinSpec spec;
        try {
            spec.value = std::stoull(tok.substr(0, x));
        } catch (const std::exception&) {
            throw CLI::ValidationError("bad coin value in '" + tok + "'");
        }
        std::string count = tok.substr(x + 1);
        if (count == "inf") {
            spec.count = std::nullopt;
        } else {
            try {
                spec.count = std::stoull(count);
            } catch (const std::exception&) {
                throw CLI::ValidationError("bad coin count in '" + tok + "'");
            }
        }
        coins.push_back(spec);
    }
    return coins;
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

graph::Graph load_graph(const std::string& path) {
    return graph::read_graph(slurp(path));
}

opt::WeightedGraph load_weighted(const std::string& path) {
    return opt::read_weighted_graph(slurp(path));
}

seq::LinearRecurrence build_recurrence(const std::string& coeffs,
                                       const std::string& init, int start) {
    seq::LinearRecurrence rec;
    rec.coefficients = parse_rational_list(coeffs);
    rec.initial_values = parse_rational_list(init);
    rec.first_index = start;
    rec.validate();
    return rec;
}

void emit_natural(Output& out, const Natural& value) {
    out.text << value.to_string() << "\n";
    out.value = value.to_string();
}

void emit_string(Output& out, const std::string& value) {
    out.text << value << "\n";
    out.value = value;
}

std::string tree_to_string(const graph::BinaryTree& tree, int node) {
    if (node < 0) return ".";
    const auto& nd = tree.nodes[static_cast<std::size_t>(node)];
    if (nd.left < 0 && nd.right < 0) return std::to_string(nd.label);
    return "(" + std::to_string(nd.label) + " " + tree_to_string(tree, nd.left) +
           " " + tree_to_string(tree, nd.right) + ")";
}

void add_count_commands(CLI::App& app, Output& out) {
    auto* count = app.add_subcommand("count", "exact counting functions");
    count->require_subcommand(1);

    {
        auto* c = count->add_subcommand("choose", "binomial coefficient C(n,k)");
        auto n = std::make_shared<std::uint64_t>();
        auto k = std::make_shared<std::uint64_t>();
        c->add_option("n", *n)->required();
        c->add_option("k", *k)->required();
        c->callback([&out, n, k] { emit_natural(out, counting::binomial(*n, *k)); });
    }
    {
        auto* c = count->add_subcommand("factorial", "n!");
        auto n = std::make_shared<std::uint64_t>();
        c->add_option("n", *n)->required();
        c->callback([&out, n] { emit_natural(out, counting::factorial(*n)); });
    }
    {
        auto* c = count->add_subcommand("falling", "n!/(n-k)!");
        auto n = std::make_shared<std::uint64_t>();
        auto k = std::make_shared<std::uint64_t>();
        c->add_option("n", *n)->required();
        c->add_option("k", *k)->required();
        c->callback(
            [&out, n, k] { emit_natural(out, counting::falling_factorial(*n, *k)); });
    }
    {
        auto* c = count->add_subcommand("select", "the 2x2 selection table");
        auto n = std::make_shared<std::uint64_t>();
        auto k = std::make_shared<std::uint64_t>();
        auto ordered = std::make_shared<bool>(false);
        auto repeats = std::make_shared<bool>(false);
        c->add_option("n", *n)->required();
        c->add_option("k", *k)->required();
        c->add_flag("--ordered", *ordered, "order matters");
        c->add_flag("--repeats", *repeats, "repeats allowed");
        c->callback([&out, n, k, ordered, repeats] {
            emit_natural(out, counting::selection_count(*n, *k, {*ordered, *repeats}));
        });
    }
    {
        auto* c = count->add_subcommand("multinomial", "(sum k_i)!/prod k_i!");
        auto parts = std::make_shared<std::string>();
        c->add_option("parts", *parts, "comma-separated part sizes")->required();
        c->callback([&out, parts] {
            emit_natural(out, counting::multinomial(parse_u64_list(*parts)));
        });
    }
    {
        auto* c = count->add_subcommand("anagram", "anagrams of a word");
        auto word = std::make_shared<std::string>();
        c->add_option("word", *word)->required();
        c->callback([&out, word] { emit_natural(out, counting::anagram_count(*word)); });
    }
    {
        auto* c = count->add_subcommand("subsets", "2^n subsets of an n-set");
        auto n = std::make_shared<std::uint64_t>();
        c->add_option("n", *n)->required();
        c->callback([&out, n] { emit_natural(out, counting::subset_count(*n)); });
    }
    {
        auto* c = count->add_subcommand("genbinom", "generalized binomial (alpha k)");
        auto alpha = std::make_shared<std::string>();
        auto k = std::make_shared<std::uint64_t>();
        c->add_option("alpha", *alpha, "rational, e.g. 1/2")->required();
        c->add_option("k", *k)->required();
        c->callback([&out, alpha, k] {
            emit_string(out,
                        counting::generalized_binomial(Rational(*alpha), *k).to_string());
        });
    }
    {
        auto* c = count->add_subcommand("union2", "|A u B| by inclusion-exclusion");
        auto a = std::make_shared<std::uint64_t>();
        auto b = std::make_shared<std::uint64_t>();
        auto ab = std::make_shared<std::uint64_t>();
        c->add_option("a", *a)->required();
        c->add_option("b", *b)->required();
        c->add_option("ab", *ab)->required();
        c->callback([&out, a, b, ab] {
            emit_natural(out, counting::union_count_2(*a, *b, *ab));
        });
    }
    {
        auto* c = count->add_subcommand("union3", "|A u B u C| by inclusion-exclusion");
        auto vals = std::make_shared<std::vector<std::uint64_t>>();
        c->add_option("sizes", *vals, "a b c ab ac bc abc")->expected(7);
        c->callback([&out, vals] {
            auto& v = *vals;
            emit_natural(out, counting::union_count_3(v[0], v[1], v[2], v[3], v[4],
                                                      v[5], v[6]));
        });
    }
    {
        auto* c = count->add_subcommand("coprime", "numbers in 1..N sharing no listed prime");
        auto n = std::make_shared<std::uint64_t>();
        auto primes = std::make_shared<std::string>();
        c->add_option("N", *n)->required();
        c->add_option("primes", *primes, "comma-separated primes dividing N")->required();
        c->callback([&out, n, primes] {
            emit_natural(out, counting::coprime_count(*n, parse_u64_list(*primes)));
        });
    }
}

void add_simple_commands(CLI::App& app, Output& out) {
    {
        auto* c = app.add_subcommand("pascal", "rows of Pascal's triangle");
        auto n = std::make_shared<std::uint64_t>();
        auto mod = std::make_shared<std::uint64_t>(0);
        auto all = std::make_shared<bool>(false);
        c->add_option("n", *n)->required();
        c->add_option("--mod", *mod, "reduce entries modulo m");
        c->add_flag("--rows", *all, "print rows 0..n");
        c->callback([&out, n, mod, all] {
            json rows = json::array();
            auto print_row = [&](const std::vector<std::string>& row) {
                json jrow = json::array();
                for (std::size_t i = 0; i < row.size(); ++i) {
                    if (i) out.text << ' ';
                    out.text << row[i];
                    jrow.push_back(row[i]);
                }
                out.text << "\n";
                rows.push_back(jrow);
            };
            std::uint64_t lo = *all ? 0 : *n;
            for (std::uint64_t r = lo; r <= *n; ++r) {
                std::vector<std::string> row;
                if (*mod) {
                    for (auto v : counting::pascal_row_mod(r, *mod))
                        row.push_back(std::to_string(v));
                } else {
                    auto rows = counting::pascal_rows(r);
                    for (auto& v : rows.back()) row.push_back(v.to_string());
                }
                print_row(row);
            }
            out.value = *all ? rows : rows[0];
        });
    }
    {
        auto* c = app.add_subcommand("derange", "derangement numbers");
        auto n = std::make_shared<std::uint64_t>();
        auto method = std::make_shared<std::string>("product");
        c->add_option("n", *n)->required();
        c->add_option("--method", *method)
            ->check(CLI::IsMember({"product", "affine", "closed"}));
        c->callback([&out, n, method] {
            counting::DerangementMethod m =
                *method == "affine" ? counting::DerangementMethod::affine_recurrence
                : *method == "closed" ? counting::DerangementMethod::closed_form
                                      : counting::DerangementMethod::product_recurrence;
            emit_natural(out, counting::derangement(*n, m));
        });
    }
    {
        auto* c = app.add_subcommand("catalan", "Catalan numbers");
        auto n = std::make_shared<std::uint64_t>();
        auto method = std::make_shared<std::string>("closed");
        c->add_option("n", *n)->required();
        c->add_option("--method", *method)->check(CLI::IsMember({"recursion", "closed"}));
        c->callback([&out, n, method] {
            emit_natural(out, counting::catalan(*n, *method == "recursion"
                                                        ? counting::CatalanMethod::recursion
                                                        : counting::CatalanMethod::closed_form));
        });
    }
    {
        auto* c = app.add_subcommand("divisors", "sigma0, sigma1 and the Mobius function");
        auto n = std::make_shared<std::uint64_t>();
        c->add_option("N", *n)->required();
        c->callback([&out, n] {
            auto profile = counting::DivisorProfile::of(*n);
            auto s0 = counting::sigma0(profile);
            auto s1 = counting::sigma1(profile);
            int mu = counting::mobius(profile);
            out.text << "sigma0 " << s0 << "\n"
                     << "sigma1 " << s1 << "\n"
                     << "mobius " << mu << "\n";
            out.value = {{"sigma0", s0.to_string()},
                         {"sigma1", s1.to_string()},
                         {"mobius", mu}};
        });
    }
    {
        auto* c = app.add_subcommand("poker", "five-card hand counts");
        auto hand = std::make_shared<std::string>();
        c->add_option("hand", *hand, "one of the ten hand names (omit for the table)");
        c->callback([&out, hand] {
            if (!hand->empty()) {
                for (auto h : counting::all_poker_hands())
                    if (*hand == counting::poker_hand_name(h)) {
                        emit_natural(out, counting::poker_count(h));
                        return;
                    }
                throw DomainError("unknown poker hand: " + *hand);
            }
            json table;
            Natural total;
            for (auto h : counting::all_poker_hands()) {
                Natural n = counting::poker_count(h);
                out.text << counting::poker_hand_name(h) << ' ' << n << "\n";
                table[counting::poker_hand_name(h)] = n.to_string();
                total += n;
            }
            out.text << "total " << total << "\n";
            table["total"] = total.to_string();
            out.value = table;
        });
    }
    {
        auto* c = app.add_subcommand("ramsey", "Ramsey number by brute force");
        auto m1 = std::make_shared<int>();
        auto m2 = std::make_shared<int>();
        auto cap = std::make_shared<int>(7);
        auto workers = std::make_shared<int>(1);
        c->add_option("m1", *m1)->required();
        c->add_option("m2", *m2)->required();
        c->add_option("--cap", *cap, "largest n to try");
        c->add_option("--workers", *workers, "partition the coloring scan");
        c->callback([&out, m1, m2, cap, workers] {
            int r = opt::ramsey_number(*m1, *m2, *cap, *workers);
            out.text << r << "\n";
            out.value = r;
        });
    }
    {
        auto* c = app.add_subcommand("euler", "Euler characteristic v - e + f");
        auto vals = std::make_shared<std::vector<long long>>();
        auto table = std::make_shared<bool>(false);
        c->add_option("vef", *vals, "v e f")->expected(-1);
        c->add_flag("--polyhedra", *table, "print the built-in polyhedron table");
        c->callback([&out, vals, table] {
            if (*table) {
                json rows = json::array();
                for (auto& p : color::builtin_polyhedra()) {
                    long long chi =
                        color::euler_characteristic(p.vertices, p.edges, p.faces);
                    out.text << p.name << ' ' << p.vertices << ' ' << p.edges << ' '
                             << p.faces << ' ' << chi << "\n";
                    rows.push_back({{"name", p.name},
                                    {"v", p.vertices},
                                    {"e", p.edges},
                                    {"f", p.faces},
                                    {"chi", chi}});
                }
                out.value = rows;
                return;
            }
            if (vals->size() != 3)
                throw CLI::ValidationError("euler needs v e f (or --polyhedra)");
            long long chi =
                color::euler_characteristic((*vals)[0], (*vals)[1], (*vals)[2]);
            out.text << chi << "\n";
            out.value = chi;
        });
    }
}

void add_seq_commands(CLI::App& app, Output& out) {
    auto* seq_cmd = app.add_subcommand("seq", "recursively defined sequences");
    seq_cmd->require_subcommand(1);
    {
        auto* c = seq_cmd->add_subcommand("fib", "Fibonacci numbers");
        auto n = std::make_shared<std::uint64_t>();
        c->add_option("n", *n)->required();
        c->callback([&out, n] { emit_natural(out, seq::fibonacci(*n)); });
    }
    {
        auto* c = seq_cmd->add_subcommand("lucas", "Lucas numbers");
        auto n = std::make_shared<std::uint64_t>();
        c->add_option("n", *n)->required();
        c->callback([&out, n] { emit_natural(out, seq::lucas(*n)); });
    }
    {
        auto* c = seq_cmd->add_subcommand("binet", "Binet's formula (double)");
        auto n = std::make_shared<std::uint64_t>();
        c->add_option("n", *n)->required();
        c->callback([&out, n] {
            double v = seq::fibonacci_binet(*n);
            out.text << format_double(v) << "\n";
            out.value = v;
        });
    }
    {
        auto* c = seq_cmd->add_subcommand("stairs", "staircase climbs");
        auto n = std::make_shared<std::uint64_t>();
        auto steps = std::make_shared<std::string>("1,2");
        c->add_option("n", *n)->required();
        c->add_option("--steps", *steps, "allowed step sizes");
        c->callback([&out, n, steps] {
            seq::StairRule rule;
            for (auto s : parse_u64_list(*steps))
                rule.steps.insert(static_cast<std::uint32_t>(s));
            emit_natural(out, seq::stair_ways(*n, rule));
        });
    }
    {
        auto* c = seq_cmd->add_subcommand("hanoi", "tower of Hanoi");
        auto n = std::make_shared<std::uint64_t>();
        auto moves = std::make_shared<bool>(false);
        c->add_option("n", *n)->required();
        c->add_flag("--moves", *moves, "list an explicit solution (n <= 12)");
        c->callback([&out, n, moves] {
            if (!*moves) {
                emit_natural(out, seq::hanoi_count(*n));
                return;
            }
            auto list = seq::hanoi_moves(static_cast<std::uint32_t>(*n));
            json jmoves = json::array();
            for (auto& mv : list) {
                out.text << "disk " << mv.disk << ": " << mv.from << " -> " << mv.to
                         << "\n";
                jmoves.push_back({{"disk", mv.disk}, {"from", mv.from}, {"to", mv.to}});
            }
            out.value = jmoves;
        });
    }
    {
        auto* c = seq_cmd->add_subcommand("plane", "regions cut by n lines");
        auto n = std::make_shared<std::uint64_t>();
        c->add_option("n", *n)->required();
        c->callback([&out, n] { emit_natural(out, seq::plane_regions(*n)); });
    }
    {
        auto* c = seq_cmd->add_subcommand("circle", "regions cut by n circles");
        auto n = std::make_shared<std::uint64_t>();
        c->add_option("n", *n)->required();
        c->callback([&out, n] { emit_natural(out, seq::circle_regions(*n)); });
    }
    {
        auto* c = seq_cmd->add_subcommand("iterate", "exact linear-recurrence iteration");
        auto n = std::make_shared<std::uint64_t>();
        auto coeffs = std::make_shared<std::string>();
        auto init = std::make_shared<std::string>();
        auto start = std::make_shared<int>(1);
        c->add_option("n", *n)->required();
        c->add_option("--coeffs", *coeffs, "c_1..c_d")->required();
        c->add_option("--init", *init, "initial values")->required();
        c->add_option("--start", *start, "index of the first initial value (0 or 1)");
        c->callback([&out, n, coeffs, init, start] {
            auto rec = build_recurrence(*coeffs, *init, *start);
            emit_string(out, seq::iterate_recurrence(rec, *n).to_string());
        });
    }
}

void add_solve_rec(CLI::App& app, Output& out) {
    auto* c = app.add_subcommand("solve-rec",
                                 "closed form of a linear recurrence (distinct roots)");
    auto coeffs = std::make_shared<std::string>();
    auto init = std::make_shared<std::string>();
    auto start = std::make_shared<int>(1);
    auto eval = std::make_shared<std::int64_t>(-1);
    c->add_option("--coeffs", *coeffs, "c_1..c_d")->required();
    c->add_option("--init", *init, "initial values")->required();
    c->add_option("--start", *start, "index of the first initial value (0 or 1)");
    c->add_option("--eval", *eval, "also evaluate the closed form at this index");
    c->callback([&out, coeffs, init, start, eval] {
        auto rec = build_recurrence(*coeffs, *init, *start);
        auto cf = seq::solve_recurrence(rec);
        json terms = json::array();
        for (std::size_t i = 0; i < cf.roots.size(); ++i) {
            out.text << "root " << format_complex(cf.roots[i]) << " weight "
                     << format_complex(cf.weights[i]) << "\n";
            terms.push_back({{"root", format_complex(cf.roots[i])},
                             {"weight", format_complex(cf.weights[i])}});
        }
        json result;
        result["terms"] = terms;
        result["residual"] = cf.residual;
        if (*eval >= 0) {
            double v = cf.evaluate(static_cast<std::uint64_t>(*eval));
            out.text << "value " << format_double(v) << "\n";
            result["value"] = v;
        }
        out.value = result;
    });
}

void add_series_commands(CLI::App& app, Output& out) {
    auto* series = app.add_subcommand("series", "truncated formal power series");
    series->require_subcommand(1);

    auto emit_series = [&out](const gf::TruncatedSeries& s) {
        out.text << s.to_string() << "\n";
        json coeffs = json::array();
        for (auto& c : s.coefficients()) coeffs.push_back(c.to_string());
        out.value = coeffs;
    };

    {
        auto* c = series->add_subcommand("expand", "expand num/den as a series");
        auto num = std::make_shared<std::string>();
        auto den = std::make_shared<std::string>();
        auto order = std::make_shared<std::uint64_t>();
        c->add_option("--num", *num, "numerator coefficients")->required();
        c->add_option("--den", *den, "denominator coefficients")->required();
        c->add_option("--order", *order)->required();
        c->callback([emit_series, num, den, order] {
            gf::RationalGF r{gf::Polynomial(parse_rational_list(*num)),
                             gf::Polynomial(parse_rational_list(*den))};
            emit_series(gf::expand_rational(r, *order));
        });
    }
    {
        auto* c = series->add_subcommand("mul", "product of two series");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("--a", *a)->required();
        c->add_option("--b", *b)->required();
        c->callback([emit_series, a, b] {
            emit_series(gf::series_mul(gf::TruncatedSeries(parse_rational_list(*a)),
                                       gf::TruncatedSeries(parse_rational_list(*b))));
        });
    }
    {
        auto* c = series->add_subcommand("add", "sum of two series");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("--a", *a)->required();
        c->add_option("--b", *b)->required();
        c->callback([emit_series, a, b] {
            emit_series(gf::series_add(gf::TruncatedSeries(parse_rational_list(*a)),
                                       gf::TruncatedSeries(parse_rational_list(*b))));
        });
    }
    {
        auto* c = series->add_subcommand("derive", "formal derivative");
        auto a = std::make_shared<std::string>();
        c->add_option("--coeffs", *a)->required();
        c->callback([emit_series, a] {
            emit_series(gf::series_derivative(gf::TruncatedSeries(parse_rational_list(*a))));
        });
    }
    {
        auto* c = series->add_subcommand("shift", "multiply by x^k");
        auto a = std::make_shared<std::string>();
        auto k = std::make_shared<std::uint64_t>(1);
        c->add_option("--coeffs", *a)->required();
        c->add_option("--k", *k, "shift amount");
        c->callback([emit_series, a, k] {
            emit_series(gf::series_shift(gf::TruncatedSeries(parse_rational_list(*a)), *k));
        });
    }
    {
        auto* c = series->add_subcommand("scale", "multiply by a constant");
        auto a = std::make_shared<std::string>();
        auto factor = std::make_shared<std::string>("1");
        c->add_option("--coeffs", *a)->required();
        c->add_option("--c", *factor, "scale factor (rational)");
        c->callback([emit_series, a, factor] {
            emit_series(gf::series_scale(gf::TruncatedSeries(parse_rational_list(*a)),
                                         Rational(*factor)));
        });
    }
    {
        auto* c = series->add_subcommand("substitute", "substitute the monomial c*x^m");
        auto a = std::make_shared<std::string>();
        auto factor = std::make_shared<std::string>("1");
        auto m2 = std::make_shared<std::uint64_t>(1);
        c->add_option("--coeffs", *a)->required();
        c->add_option("--c", *factor, "monomial coefficient (rational)");
        c->add_option("--m", *m2, "monomial degree (>= 1)");
        c->callback([emit_series, a, factor, m2] {
            emit_series(substitute_monomial(gf::TruncatedSeries(parse_rational_list(*a)),
                                            Rational(*factor), *m2));
        });
    }
    {
        auto* c = series->add_subcommand("sqrt", "series square root (a0 = 1)");
        auto a = std::make_shared<std::string>();
        auto order = std::make_shared<std::int64_t>(-1);
        c->add_option("--coeffs", *a)->required();
        c->add_option("--order", *order, "pad/truncate to this order first");
        c->callback([emit_series, a, order] {
            auto coeffs = parse_rational_list(*a);
            gf::TruncatedSeries base =
                *order >= 0 ? gf::TruncatedSeries(gf::Polynomial(coeffs),
                                                  static_cast<std::size_t>(*order))
                            : gf::TruncatedSeries(coeffs);
            emit_series(gf::series_sqrt(base));
        });
    }
    {
        auto* c = series->add_subcommand("catalan", "Catalan generating function");
        auto order = std::make_shared<std::uint64_t>();
        c->add_option("--order", *order)->required();
        c->callback([emit_series, order] { emit_series(gf::catalan_gf(*order)); });
    }
    {
        auto* c = series->add_subcommand("geometric", "1 + x + x^2 + ...");
        auto order = std::make_shared<std::uint64_t>();
        c->add_option("--order", *order)->required();
        c->callback(
            [emit_series, order] { emit_series(gf::TruncatedSeries::geometric(*order)); });
    }
    {
        auto* c = series->add_subcommand("partial", "partial fraction decomposition");
        auto num = std::make_shared<std::string>();
        auto den = std::make_shared<std::string>();
        c->add_option("--num", *num)->required();
        c->add_option("--den", *den)->required();
        c->callback([&out, num, den] {
            gf::RationalGF r{gf::Polynomial(parse_rational_list(*num)),
                             gf::Polynomial(parse_rational_list(*den))};
            auto pf = gf::partial_fractions(r);
            json terms = json::array();
            if (pf.exact) {
                for (auto& [w, root] : pf.exact_terms) {
                    out.text << "weight " << w << " root " << root << "\n";
                    terms.push_back({{"weight", w.to_string()}, {"root", root.to_string()}});
                }
            } else {
                for (auto& [w, root] : pf.numeric_terms) {
                    out.text << "weight " << format_complex(w) << " root "
                             << format_complex(root) << "\n";
                    terms.push_back(
                        {{"weight", format_complex(w)}, {"root", format_complex(root)}});
                }
            }
            json result;
            result["exact"] = pf.exact;
            result["terms"] = terms;
            if (!pf.polynomial_part.is_zero()) {
                out.text << "polynomial " << pf.polynomial_part.to_string() << "\n";
                result["polynomial"] = pf.polynomial_part.to_string();
            }
            out.value = result;
        });
    }
}

void add_change_and_partitions(CLI::App& app, Output& out) {
    {
        auto* c = app.add_subcommand("change", "coin-change counts");
        auto coins = std::make_shared<std::string>();
        auto amount = std::make_shared<std::int64_t>(-1);
        auto order = std::make_shared<std::int64_t>(-1);
        auto print_series = std::make_shared<bool>(false);
        c->add_option("--coins", *coins, "e.g. 1x6,5x2,10x4,25x3 (count inf allowed)")
            ->required();
        c->add_option("--amount", *amount, "amount to make change for");
        c->add_option("--order", *order, "truncation order for --series");
        c->add_flag("--series", *print_series, "print the whole product series");
        c->callback([&out, coins, amount, order, print_series] {
            auto specs = parse_coins(*coins);
            if (*print_series) {
                bool unlimited = false;
                for (auto& s : specs)
                    if (!s.count) unlimited = true;
                std::size_t t;
                if (*order >= 0) {
                    t = static_cast<std::size_t>(*order);
                } else if (unlimited) {
                    throw DomainError("unlimited coins require --order");
                } else {
                    std::uint64_t degree = 0;
                    for (auto& s : specs) degree += s.value * *s.count;
                    t = degree;
                }
                auto series = gf::coin_change_series(specs, t);
                out.text << series.to_string() << "\n";
                json coeffs = json::array();
                for (auto& v : series.coefficients()) coeffs.push_back(v.to_string());
                out.value = coeffs;
                return;
            }
            if (*amount < 0)
                throw CLI::ValidationError("change needs --amount (or --series)");
            emit_natural(out, gf::ways_to_pay(specs, static_cast<std::uint64_t>(*amount)));
        });
    }
    {
        auto* c = app.add_subcommand("partitions", "integer partition counts");
        auto n = std::make_shared<std::uint64_t>();
        auto order = std::make_shared<std::int64_t>(-1);
        auto distinct = std::make_shared<bool>(false);
        auto odd = std::make_shared<bool>(false);
        c->add_option("n", *n)->required();
        c->add_option("--order", *order, "truncation order (default n)");
        c->add_flag("--distinct", *distinct, "partitions into distinct parts");
        c->add_flag("--odd", *odd, "partitions into odd parts");
        c->callback([&out, n, order, distinct, odd] {
            if (*distinct && *odd)
                throw CLI::ValidationError("choose at most one of --distinct/--odd");
            if (*distinct) {
                emit_natural(out, gf::partition_count_distinct(*n));
            } else if (*odd) {
                emit_natural(out, gf::partition_count_odd(*n));
            } else {
                std::size_t t = *order >= 0 ? static_cast<std::size_t>(*order)
                                            : static_cast<std::size_t>(*n);
                emit_natural(out, gf::partition_count(*n, t));
            }
        });
    }
}

void add_graph_commands(CLI::App& app, Output& out) {
    auto* gcmd = app.add_subcommand("graph", "graph inspection and constructors");
    gcmd->require_subcommand(1);

    auto add_file_option = [](CLI::App* sub, std::shared_ptr<std::string> file) {
        sub->add_option("file", *file, "graph file ('-' for stdin)");
    };

    {
        auto* c = gcmd->add_subcommand("info", "vertex/edge counts and degrees");
        auto file = std::make_shared<std::string>("-");
        add_file_option(c, file);
        c->callback([&out, file] {
            auto g = load_graph(*file);
            out.text << "vertices " << g.vertex_count() << "\n"
                     << "edges " << g.edge_count() << "\n";
            out.text << "degrees";
            json degs = json::array();
            for (int v = 0; v < g.vertex_count(); ++v) {
                out.text << ' ' << g.degree(v);
                degs.push_back(g.degree(v));
            }
            out.text << "\n";
            out.text << "connected " << (graph::is_connected(g) ? "yes" : "no") << "\n";
            out.value = {{"vertices", g.vertex_count()},
                         {"edges", g.edge_count()},
                         {"degrees", degs},
                         {"connected", graph::is_connected(g)}};
        });
    }
    {
        auto* c = gcmd->add_subcommand("matrix", "adjacency matrix");
        auto file = std::make_shared<std::string>("-");
        add_file_option(c, file);
        c->callback([&out, file] {
            auto m = graph::adjacency_matrix(load_graph(*file));
            out.text << graph::format_matrix(m);
            json rows = json::array();
            for (auto& row : m) rows.push_back(row);
            out.value = rows;
        });
    }
    {
        auto* c = gcmd->add_subcommand("components", "connected components");
        auto file = std::make_shared<std::string>("-");
        add_file_option(c, file);
        c->callback([&out, file] {
            auto comps = graph::connected_components(load_graph(*file));
            json jc = json::array();
            for (auto& comp : comps) {
                for (std::size_t i = 0; i < comp.size(); ++i)
                    out.text << comp[i] << (i + 1 < comp.size() ? ' ' : '\n');
                jc.push_back(comp);
            }
            out.value = jc;
        });
    }
    {
        auto* c = gcmd->add_subcommand("twocolor", "2-coloring or an odd cycle");
        auto file = std::make_shared<std::string>("-");
        add_file_option(c, file);
        c->callback([&out, file] {
            auto result = graph::two_coloring(load_graph(*file));
            if (result.coloring) {
                out.text << "colors";
                for (int c : *result.coloring) out.text << ' ' << c;
                out.text << "\n";
                out.value = {{"coloring", *result.coloring}};
            } else {
                out.text << "odd-cycle";
                for (int v : *result.odd_cycle) out.text << ' ' << v;
                out.text << "\n";
                out.value = {{"odd_cycle", *result.odd_cycle}};
            }
        });
    }
    {
        auto* c = gcmd->add_subcommand("complement", "complement of a simple graph");
        auto file = std::make_shared<std::string>("-");
        add_file_option(c, file);
        c->callback([&out, file] {
            auto text = graph::write_graph(graph::complement(load_graph(*file)));
            out.text << text;
            out.value = text;
        });
    }
    {
        auto* c = gcmd->add_subcommand("euler", "Eulerian classification and walk");
        auto file = std::make_shared<std::string>("-");
        auto walk = std::make_shared<bool>(false);
        add_file_option(c, file);
        c->add_flag("--walk", *walk, "also print an Eulerian walk");
        c->callback([&out, file, walk] {
            auto g = load_graph(*file);
            auto cls = graph::euler_classify(g);
            std::string kind =
                cls.kind == graph::EulerClass::Kind::NoEulerianWalk ? "none"
                : cls.kind == graph::EulerClass::Kind::OpenWalk     ? "open"
                                                                    : "closed";
            out.text << kind;
            if (cls.kind == graph::EulerClass::Kind::OpenWalk)
                out.text << ' ' << cls.endpoint_a << ' ' << cls.endpoint_b;
            out.text << "\n";
            json result{{"classification", kind}};
            if (*walk) {
                auto w = graph::euler_walk(g);
                out.text << "walk";
                for (int v : w.vertices) out.text << ' ' << v;
                out.text << "\n";
                result["walk"] = w.vertices;
            }
            out.value = result;
        });
    }
    {
        auto* c = gcmd->add_subcommand("hamilton", "Hamiltonian cycle search (n <= 16)");
        auto file = std::make_shared<std::string>("-");
        add_file_option(c, file);
        c->callback([&out, file] {
            auto cyc = graph::hamiltonian_cycle(load_graph(*file));
            if (!cyc) {
                out.text << "none\n";
                out.value = nullptr;
                return;
            }
            out.text << "cycle";
            for (int v : *cyc) out.text << ' ' << v;
            out.text << "\n";
            out.value = *cyc;
        });
    }
    {
        auto* c = gcmd->add_subcommand("make", "print a named graph in text format");
        auto name = std::make_shared<std::string>();
        auto params = std::make_shared<std::vector<int>>();
        c->add_option("name", *name,
                      "complete|path|cycle|bipartite|petersen|konigsberg|<platonic>")
            ->required();
        c->add_option("params", *params, "size parameters");
        c->callback([&out, name, params] {
            auto need = [&](std::size_t k) {
                if (params->size() != k)
                    throw CLI::ValidationError("graph make " + *name + " needs " +
                                               std::to_string(k) + " parameter(s)");
            };
            graph::Graph g;
            if (*name == "complete") {
                need(1);
                g = graph::complete((*params)[0]);
            } else if (*name == "path") {
                need(1);
                g = graph::path((*params)[0]);
            } else if (*name == "cycle") {
                need(1);
                g = graph::cycle((*params)[0]);
            } else if (*name == "bipartite") {
                need(2);
                g = graph::complete_bipartite((*params)[0], (*params)[1]);
            } else if (*name == "petersen") {
                need(0);
                g = graph::petersen();
            } else if (*name == "konigsberg") {
                need(0);
                g = graph::konigsberg();
            } else if (auto solid = graph::platonic_by_name(*name)) {
                need(0);
                g = graph::platonic(*solid);
            } else {
                throw DomainError("unknown graph name: " + *name);
            }
            auto text = graph::write_graph(g);
            out.text << text;
            out.value = text;
        });
    }
}

void add_walks_command(CLI::App& app, Output& out) {
    auto* c = app.add_subcommand("walks", "count walks of a given length");
    auto file = std::make_shared<std::string>("-");
    auto from = std::make_shared<int>(0);
    auto to = std::make_shared<int>(0);
    auto steps = std::make_shared<std::uint64_t>(1);
    auto fibo = std::make_shared<bool>(false);
    c->add_option("file", *file, "graph file ('-' for stdin)");
    c->add_option("--from", *from)->required();
    c->add_option("--to", *to)->required();
    c->add_option("--steps", *steps)->required();
    c->add_flag("--fibo", *fibo, "use the built-in directed Fibonacci walk graph");
    c->callback([&out, file, from, to, steps, fibo] {
        Natural n = *fibo ? graph::count_walks(graph::fibonacci_walk_matrix(), *from,
                                               *to, *steps)
                          : graph::count_walks(load_graph(*file), *from, *to, *steps);
        emit_natural(out, n);
    });
}

void add_tree_commands(CLI::App& app, Output& out) {
    auto* tree = app.add_subcommand("tree", "labeled, binary, and search trees");
    tree->require_subcommand(1);
    {
        auto* c = tree->add_subcommand("cayley", "number of labeled trees n^{n-2}");
        auto n = std::make_shared<int>();
        c->add_option("n", *n)->required();
        c->callback([&out, n] { emit_natural(out, graph::cayley_count(*n)); });
    }
    {
        auto* c = tree->add_subcommand("enumerate", "list all labeled trees (n <= 5)");
        auto n = std::make_shared<int>();
        c->add_option("n", *n)->required();
        c->callback([&out, n] {
            auto trees = graph::enumerate_labeled_trees(*n);
            json list = json::array();
            for (auto& t : trees) {
                for (std::size_t i = 0; i < t.edges().size(); ++i)
                    out.text << t.edges()[i].first << '-' << t.edges()[i].second
                             << (i + 1 < t.edges().size() ? ' ' : '\n');
                if (t.edges().empty()) out.text << "(no edges)\n";
                json edges = json::array();
                for (auto& [u, v] : t.edges()) edges.push_back({u, v});
                list.push_back(edges);
            }
            out.text << "count " << trees.size() << "\n";
            out.value = {{"count", trees.size()}, {"trees", list}};
        });
    }
    {
        auto* c = tree->add_subcommand("leaves", "binary trees with n leaves");
        auto n = std::make_shared<std::uint64_t>();
        c->add_option("n", *n)->required();
        c->callback([&out, n] { emit_natural(out, graph::binary_tree_count(*n)); });
    }
    {
        auto* c = tree->add_subcommand("atmost", "at-most-binary trees on n vertices");
        auto n = std::make_shared<std::uint64_t>();
        c->add_option("n", *n)->required();
        c->callback([&out, n] { emit_natural(out, graph::at_most_binary_count(*n)); });
    }
    {
        auto* c = tree->add_subcommand("tournament", "seeded tournaments for n players");
        auto n = std::make_shared<std::uint64_t>();
        c->add_option("n", *n)->required();
        c->callback([&out, n] { emit_natural(out, graph::tournament_count(*n)); });
    }
    {
        auto* c = tree->add_subcommand("from-perm",
                                       "increasing binary tree of a permutation");
        auto perm = std::make_shared<std::string>();
        c->add_option("perm", *perm, "comma-separated permutation of 1..n")->required();
        c->callback([&out, perm] {
            auto p = parse_int_list(*perm);
            auto t = graph::increasing_tree_from_permutation(p);
            std::string shape = tree_to_string(t, t.root);
            auto back = graph::permutation_from_increasing_tree(t);
            out.text << "tree " << shape << "\n";
            out.text << "permutation";
            for (int v : back) out.text << ' ' << v;
            out.text << "\n";
            out.value = {{"tree", shape}, {"permutation", back}};
        });
    }
    {
        auto* c = tree->add_subcommand("bst", "binary search tree insertion");
        auto keys = std::make_shared<std::string>();
        c->add_option("keys", *keys, "comma-separated keys in insertion order")
            ->required();
        c->callback([&out, keys] {
            auto t = graph::bst_from_sequence(parse_int_list(*keys));
            std::string shape = tree_to_string(t, t.root);
            auto sorted = graph::bst_inorder(t);
            out.text << "tree " << shape << "\n";
            out.text << "inorder";
            for (int v : sorted) out.text << ' ' << v;
            out.text << "\n";
            out.value = {{"tree", shape}, {"inorder", sorted}};
        });
    }
}

void add_opt_commands(CLI::App& app, Output& out) {
    {
        auto* c = app.add_subcommand("mst", "Kruskal minimum spanning tree");
        auto file = std::make_shared<std::string>("-");
        c->add_option("file", *file, "weighted graph file ('-' for stdin)");
        c->callback([&out, file] {
            auto result = opt::kruskal_mst(load_weighted(*file));
            json edges = json::array();
            for (auto& [u, v] : result.tree.edges()) {
                out.text << u << ' ' << v << "\n";
                edges.push_back({u, v});
            }
            out.text << "cost " << result.cost << "\n";
            out.value = {{"edges", edges}, {"cost", result.cost.to_string()}};
        });
    }
    {
        auto* c = app.add_subcommand("tsp", "tree-shortcut tour (and exact optimum)");
        auto file = std::make_shared<std::string>("-");
        auto start = std::make_shared<int>(0);
        auto optimal = std::make_shared<bool>(false);
        auto check = std::make_shared<bool>(false);
        c->add_option("file", *file, "weighted complete graph ('-' for stdin)");
        c->add_option("--start", *start, "starting vertex");
        c->add_flag("--optimal", *optimal, "brute-force optimal tour (n <= 10)");
        c->add_flag("--check-triangle", *check, "report the triangle inequality");
        c->callback([&out, file, start, optimal, check] {
            auto w = load_weighted(*file);
            auto tour = *optimal ? opt::brute_force_tour(w)
                                 : opt::tsp_tree_shortcut(w, *start);
            out.text << "tour";
            for (int v : tour.vertices) out.text << ' ' << v;
            out.text << "\ncost " << tour.cost << "\n";
            json result{{"tour", tour.vertices}, {"cost", tour.cost.to_string()}};
            if (*check) {
                bool tri = opt::satisfies_triangle_inequality(w);
                out.text << "triangle-inequality " << (tri ? "yes" : "no") << "\n";
                result["triangle_inequality"] = tri;
            }
            out.value = result;
        });
    }
    {
        auto* c = app.add_subcommand("match", "matchings and Hall violators");
        auto file = std::make_shared<std::string>("-");
        auto greedy = std::make_shared<bool>(false);
        auto hall = std::make_shared<bool>(false);
        auto left = std::make_shared<std::string>();
        c->add_option("file", *file, "graph file ('-' for stdin)");
        c->add_flag("--greedy", *greedy, "greedy maximal matching instead of maximum");
        c->add_flag("--hall", *hall, "search for a Hall violator");
        c->add_option("--left", *left, "comma-separated left vertex set (for --hall)");
        c->callback([&out, file, greedy, hall, left] {
            auto g = load_graph(*file);
            if (*hall) {
                if (left->empty())
                    throw CLI::ValidationError("--hall needs --left");
                auto violator = opt::hall_violator(g, parse_int_list(*left));
                if (!violator) {
                    out.text << "none\n";
                    out.value = nullptr;
                } else {
                    out.text << "violator";
                    for (int v : *violator) out.text << ' ' << v;
                    out.text << "\n";
                    out.value = *violator;
                }
                return;
            }
            auto m = *greedy ? opt::greedy_maximal_matching(g)
                             : opt::maximum_matching_bipartite(g);
            json edges = json::array();
            for (auto& [u, v] : m.edges) {
                out.text << u << ' ' << v << "\n";
                edges.push_back({u, v});
            }
            out.text << "size " << m.size() << "\n";
            out.value = {{"edges", edges}, {"size", m.size()}};
        });
    }
}

void add_coloring_commands(CLI::App& app, Output& out) {
    {
        auto* c = app.add_subcommand("color", "chromatic number and colorings");
        auto file = std::make_shared<std::string>("-");
        auto k = std::make_shared<int>(-1);
        auto degeneracy = std::make_shared<bool>(false);
        c->add_option("file", *file, "graph file ('-' for stdin)");
        c->add_option("--k", *k, "test k-colorability and print a witness");
        c->add_flag("--degeneracy", *degeneracy, "degeneracy-ordering coloring");
        c->callback([&out, file, k, degeneracy] {
            auto g = load_graph(*file);
            if (*degeneracy) {
                auto dc = color::degeneracy_coloring(g);
                out.text << "colors-used " << dc.colors_used << "\n";
                out.text << "degeneracy " << dc.degeneracy << "\n";
                out.text << "coloring";
                for (int c2 : dc.coloring) out.text << ' ' << c2;
                out.text << "\n";
                out.value = {{"colors_used", dc.colors_used},
                             {"degeneracy", dc.degeneracy},
                             {"coloring", dc.coloring}};
                return;
            }
            if (*k >= 0) {
                auto coloring = color::is_k_colorable(g, *k);
                if (!coloring) {
                    out.text << "none\n";
                    out.value = nullptr;
                } else {
                    out.text << "coloring";
                    for (int c2 : *coloring) out.text << ' ' << c2;
                    out.text << "\n";
                    out.value = *coloring;
                }
                return;
            }
            int chi = color::chromatic_number(g);
            out.text << chi << "\n";
            out.value = chi;
        });
    }
    {
        auto* c = app.add_subcommand("chrompoly",
                                     "chromatic polynomial by deletion-contraction");
        auto file = std::make_shared<std::string>("-");
        auto eval = std::make_shared<std::int64_t>(-1);
        c->add_option("file", *file, "graph file ('-' for stdin)");
        c->add_option("--eval", *eval, "evaluate at k instead of printing coefficients");
        c->callback([&out, file, eval] {
            auto poly = color::chromatic_polynomial(load_graph(*file));
            if (*eval >= 0) {
                emit_natural(out, color::evaluate_chromatic_polynomial(
                                      poly, static_cast<std::uint64_t>(*eval)));
                return;
            }
            out.text << color::format_chromatic_polynomial(poly) << "\n";
            json coeffs = json::array();
            for (auto& c2 : poly) coeffs.push_back(c2.to_string());
            out.value = coeffs;
        });
    }
    {
        auto* c = app.add_subcommand("planarity", "edge-count planarity bounds");
        auto file = std::make_shared<std::string>("-");
        c->add_option("file", *file, "graph file ('-' for stdin)");
        c->callback([&out, file] {
            auto g = load_graph(*file);
            auto verdict = color::planar_edge_bound(g);
            std::string which = "e<=3v-6";
            if (verdict == color::BoundVerdict::Inconclusive &&
                graph::two_coloring(g).coloring) {
                verdict = color::bipartite_planar_bound(g);
                which = "e<=2v-4";
            }
            bool violates = verdict == color::BoundVerdict::ViolatesBound;
            out.text << (violates ? "violates-bound " + which : "inconclusive") << "\n";
            out.value = {{"verdict", violates ? "violates-bound" : "inconclusive"},
                         {"bound", which}};
        });
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics and graph algorithms toolkit"};
    app.require_subcommand(1);
    Output out;
    // --json may appear anywhere, including after subcommand arguments.
    std::vector<char*> args;
    for (int i = 0; i < argc; ++i) {
        if (std::string_view(argv[i]) == "--json") out.as_json = true;
        else args.push_back(argv[i]);
    }
    argc = static_cast<int>(args.size());
    argv = args.data();
    app.add_flag("--json", out.as_json, "emit a single JSON document");

    add_count_commands(app, out);
    add_simple_commands(app, out);
    add_seq_commands(app, out);
    add_solve_rec(app, out);
    add_series_commands(app, out);
    add_change_and_partitions(app, out);
    add_graph_commands(app, out);
    add_walks_command(app, out);
    add_tree_commands(app, out);
    add_opt_commands(app, out);
    add_coloring_commands(app, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    out.flush();
    return 0;
}
