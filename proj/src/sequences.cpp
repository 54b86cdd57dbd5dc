#include "combi/sequences.hpp"

#include <algorithm>
#include <cmath>

#include "combi/error.hpp"

namespace combi::seq {

Natural fibonacci(std::uint64_t n) {
    Natural a(0), b(1); // F_0, F_1
    for (std::uint64_t i = 0; i < n; ++i) {
        Natural next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

Natural lucas(std::uint64_t n) {
    Natural a(2), b(1); // L_0, L_1
    for (std::uint64_t i = 0; i < n; ++i) {
        Natural next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

double fibonacci_binet(std::uint64_t n) {
    if (n > 70) throw DomainError("Binet evaluation limited to n <= 70");
    double s = std::sqrt(5.0);
    double alpha = (1.0 + s) / 2.0;
    double beta = (1.0 - s) / 2.0;
    return (std::pow(alpha, static_cast<double>(n)) -
            std::pow(beta, static_cast<double>(n))) / s;
}

Natural stair_ways(std::uint64_t n, const StairRule& rule) {
    if (rule.steps.empty()) throw DomainError("stair rule needs at least one step size");
    for (auto s : rule.steps)
        if (s == 0) throw DomainError("step sizes must be positive");
    std::vector<Natural> ways(n + 1);
    ways[0] = Natural(1);
    for (std::uint64_t i = 1; i <= n; ++i)
        for (auto s : rule.steps)
            if (s <= i) ways[i] += ways[i - s];
    return ways[n];
}

void LinearRecurrence::validate() const {
    if (coefficients.empty()) throw DomainError("recurrence must have order >= 1");
    if (coefficients.back().is_zero()) throw DomainError("leading coefficient c_d must be nonzero");
    if (initial_values.size() != coefficients.size())
        throw DomainError("recurrence needs exactly d initial values");
    if (first_index != 0 && first_index != 1)
        throw DomainError("recurrence is indexed from 0 or 1");
}

Rational iterate_recurrence(const LinearRecurrence& rec, std::uint64_t n) {
    rec.validate();
    std::uint64_t first = static_cast<std::uint64_t>(rec.first_index);
    if (n < first) throw DomainError("index precedes the initial values");
    std::size_t d = rec.order();
    if (n < first + d) return rec.initial_values[n - first];
    std::vector<Rational> window = rec.initial_values;
    for (std::uint64_t idx = first + d; idx <= n; ++idx) {
        Rational next;
        for (std::size_t i = 0; i < d; ++i)
            next += rec.coefficients[i] * window[d - 1 - i];
        window.erase(window.begin());
        window.push_back(std::move(next));
    }
    return window.back();
}

std::vector<Rational> characteristic_polynomial(const LinearRecurrence& rec) {
    rec.validate();
    std::size_t d = rec.order();
    std::vector<Rational> poly(d + 1);
    poly[d] = Rational(1);
    for (std::size_t i = 0; i < d; ++i)
        poly[d - 1 - i] = -rec.coefficients[i];
    return poly;
}

double ClosedForm::evaluate(std::uint64_t n) const {
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < roots.size(); ++i)
        sum += weights[i] * std::pow(roots[i], static_cast<double>(n));
    return sum.real();
}

namespace {

// Durand-Kerner iteration on a monic polynomial given lowest-degree-first.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& monic) {
    std::size_t d = monic.size() - 1;
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 1.0;
        for (std::size_t i = d; i-- > 0;) v = v * x + monic[i];
        return v;
    };
    // Start points on a circle avoiding symmetry.
    std::vector<std::complex<double>> z(d);
    double radius = 1.0;
    for (double c : monic) radius = std::max(radius, std::abs(c));
    radius = 1.0 + radius;
    for (std::size_t i = 0; i < d; ++i) {
        double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(d) + 0.4;
        z[i] = std::polar(radius, angle);
    }
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            std::complex<double> denom = 1.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) denom *= z[i] - z[j];
            std::complex<double> delta = eval(z[i]) / denom;
            z[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

// Gaussian elimination with partial pivoting over complex doubles.
std::vector<std::complex<double>> solve_linear(
    std::vector<std::vector<std::complex<double>>> a,
    std::vector<std::complex<double>> b) {
    std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row)
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        if (std::abs(a[col][col]) < 1e-300) throw DomainError("singular linear system");
        for (std::size_t row = col + 1; row < n; ++row) {
            std::complex<double> f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<std::complex<double>> x(n);
    for (std::size_t row = n; row-- > 0;) {
        std::complex<double> sum = b[row];
        for (std::size_t k = row + 1; k < n; ++k) sum -= a[row][k] * x[k];
        x[row] = sum / a[row][row];
    }
    return x;
}

} // namespace

ClosedForm solve_recurrence(const LinearRecurrence& rec) {
    rec.validate();
    std::size_t d = rec.order();
    std::vector<double> monic(d + 1);
    monic[d] = 1.0;
    for (std::size_t i = 0; i < d; ++i)
        monic[d - 1 - i] = -rec.coefficients[i].to_double();

    ClosedForm cf;
    cf.roots = polynomial_roots(monic);

    double scale = 1.0;
    for (auto& r : cf.roots) scale = std::max(scale, std::abs(r));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (std::abs(cf.roots[i] - cf.roots[j]) < kRootSeparationTol * scale)
                throw RepeatedRoots("characteristic roots are not separated");

    // Fit weights from a_n = sum z_i r_i^n at the d initial indices.
    std::vector<std::vector<std::complex<double>>> a(d, std::vector<std::complex<double>>(d));
    std::vector<std::complex<double>> b(d);
    for (std::size_t row = 0; row < d; ++row) {
        double n = static_cast<double>(rec.first_index) + static_cast<double>(row);
        for (std::size_t col = 0; col < d; ++col)
            a[row][col] = std::pow(cf.roots[col], n);
        b[row] = rec.initial_values[row].to_double();
    }
    cf.weights = solve_linear(a, b);

    double residual = 0.0;
    for (std::size_t row = 0; row < d; ++row) {
        std::complex<double> fitted = 0.0;
        double n = static_cast<double>(rec.first_index) + static_cast<double>(row);
        for (std::size_t col = 0; col < d; ++col)
            fitted += cf.weights[col] * std::pow(cf.roots[col], n);
        residual = std::max(residual, std::abs(fitted - b[row]));
    }
    cf.residual = residual;
    return cf;
}

Natural hanoi_count(std::uint64_t n) {
    return Natural::pow(Natural(2), n) - Natural(1);
}

namespace {

void hanoi_recurse(int n, int from, int to, int spare, std::vector<HanoiMove>& out) {
    if (n == 0) return;
    hanoi_recurse(n - 1, from, spare, to, out);
    out.push_back({n, from, to});
    hanoi_recurse(n - 1, spare, to, from, out);
}

} // namespace

std::vector<HanoiMove> hanoi_moves(std::uint32_t n) {
    if (n > 12) throw CapExceeded("move listing limited to n <= 12");
    std::vector<HanoiMove> out;
    hanoi_recurse(static_cast<int>(n), 0, 2, 1, out);
    return out;
}

Natural plane_regions(std::uint64_t n) {
    // (n^2 + n + 2) / 2, which also gives P_0 = 1
    Natural nn(n);
    return (nn * nn + nn + Natural(2)) / Natural(2);
}

Natural circle_regions(std::uint64_t n) {
    if (n == 0) throw DomainError("circle regions defined for n >= 1");
    Natural nn(n);
    return nn * nn - nn + Natural(2);
}

} // namespace combi::seq
