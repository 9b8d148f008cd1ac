#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spnodes/errors.hpp"
#include "spnodes/interp.hpp"
#include "spnodes/linalg.hpp"
#include "spnodes/nodes.hpp"
#include "spnodes/quadrature.hpp"

namespace spnodes {

/// First-kind Volterra problem int_0^t K(t,xi) u(xi) dxi = f(t) on [0, T],
/// collocated at a node set carrying both endpoints. f' is required to
/// regularize the degenerate t = 0 collocation row (see assemble).
struct VolterraProblem {
    std::function<double(double, double)> kernel;   // K(t, xi)
    std::function<double(double)> rhs;              // f
    std::function<double(double)> rhs_derivative;   // f'
    NodeSet nodes;                                  // on [0, T]
};

struct VolterraSystem {
    Matrix a;
    std::vector<double> rhs;
};

struct VolterraSolution {
    std::vector<double> nodal_values;
    Matrix a;
    double condition_estimate;
    double residual;  // max_i |(A u)_i - rhs_i|
};

namespace detail {
inline constexpr int kVolterraGaussOrder = 24;

inline void validate_problem(const VolterraProblem& p) {
    if (p.nodes.a != 0.0 || p.nodes.nodes.front() != 0.0)
        throw IntervalError("volterra: nodes must start exactly at t = 0");
    if (!(p.nodes.b > 0.0) || p.nodes.nodes.back() != p.nodes.b)
        throw IntervalError("volterra: nodes must end exactly at t = T > 0");
    if (!p.kernel || !p.rhs || !p.rhs_derivative)
        throw std::invalid_argument("volterra: kernel, rhs and rhs_derivative are required");
}
}  // namespace detail

/// Collocation matrix a_ij = int_0^{c_i} l_j(xi) K(c_i, xi) dxi via a 24-point
/// Gauss-Legendre rule per row. The c_0 = 0 row is identically 0 = 0, so it is
/// replaced by the limit equation u(0) = f'(0)/K(0,0).
inline VolterraSystem assemble(const VolterraProblem& p) {
    detail::validate_problem(p);
    const double k00 = p.kernel(0.0, 0.0);
    if (k00 == 0.0) throw KernelSingular("volterra: K(0,0) = 0, cannot regularize the first row");

    const std::vector<double>& c = p.nodes.nodes;
    const int n = static_cast<int>(c.size());
    const std::vector<double> w = barycentric_weights(c);
    const QuadratureRule rule = gauss_legendre(detail::kVolterraGaussOrder);

    VolterraSystem sys{Matrix(n, n), std::vector<double>(static_cast<std::size_t>(n), 0.0)};
    sys.a(0, 0) = 1.0;
    sys.rhs[0] = p.rhs_derivative(0.0) / k00;

    for (int i = 1; i < n; ++i) {
        const double ti = c[static_cast<std::size_t>(i)];
        const double half = 0.5 * ti;
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            const double xi = half * (rule.points[q] + 1.0);
            const double kv = p.kernel(ti, xi);
            if (!std::isfinite(kv))
                throw QuadratureFailure("volterra: non-finite kernel sample");
            const std::vector<double> basis = lagrange_basis_values(c, w, xi);
            const double wq = half * rule.weights[q] * kv;
            for (int j = 0; j < n; ++j) {
                if (!std::isfinite(basis[static_cast<std::size_t>(j)]))
                    throw QuadratureFailure("volterra: non-finite basis sample");
                sys.a(i, j) += wq * basis[static_cast<std::size_t>(j)];
            }
        }
        sys.rhs[static_cast<std::size_t>(i)] = p.rhs(ti);
    }
    return sys;
}

/// Dense LU solve of the collocation system with a 1-norm condition estimate.
inline VolterraSolution solve(const VolterraProblem& p) {
    VolterraSystem sys = assemble(p);
    const LuFactors lu(sys.a);
    std::vector<double> u = lu.solve(sys.rhs);

    const std::vector<double> au = matvec(sys.a, u);
    double res = 0.0;
    for (std::size_t i = 0; i < au.size(); ++i)
        res = std::max(res, std::fabs(au[i] - sys.rhs[i]));
    const double cond = sys.a.norm1() * lu.inverse().norm1();
    return {std::move(u), std::move(sys.a), cond, res};
}

/// Per-node absolute errors against a known solution.
inline std::vector<std::pair<double, double>> error_report(const VolterraProblem& p,
                                                           const std::function<double(double)>& exact) {
    const VolterraSolution sol = solve(p);
    std::vector<std::pair<double, double>> out;
    out.reserve(p.nodes.nodes.size());
    for (std::size_t i = 0; i < p.nodes.nodes.size(); ++i)
        out.emplace_back(p.nodes.nodes[i], std::fabs(exact(p.nodes.nodes[i]) - sol.nodal_values[i]));
    return out;
}

/// Built-in benchmark problems with closed-form data.
struct VolterraBenchmark {
    const char* id;
    double (*kernel)(double, double);
    double (*rhs)(double);
    double (*rhs_derivative)(double);
    double (*exact)(double);
};

namespace detail {
inline constexpr double kPiSq1 = 1.0 + kPi * kPi;
inline double expker(double t, double xi) { return std::exp(t - xi); }
inline double expker_cospi_rhs(double t) {
    return (kPi * std::sin(kPi * t) - std::cos(kPi * t) + std::exp(t)) / kPiSq1;
}
inline double expker_cospi_rhs_deriv(double t) {
    return expker_cospi_rhs(t) + std::cos(kPi * t);
}
inline double cospi(double t) { return std::cos(kPi * t); }

inline constexpr VolterraBenchmark kBenchmarks[] = {
    {"expker-cospi", expker, expker_cospi_rhs, expker_cospi_rhs_deriv, cospi},
};
}  // namespace detail

inline const VolterraBenchmark& volterra_benchmark(std::string_view id) {
    for (const VolterraBenchmark& b : detail::kBenchmarks)
        if (id == b.id) return b;
    throw UnknownFunction("unknown volterra problem: " + std::string(id));
}

/// Benchmark problem collocated with the given family on [0, 1].
inline VolterraProblem make_benchmark_problem(const VolterraBenchmark& b, NodeFamily family, int s) {
    NodeSet nodes = map_to_interval(generate(family, s), 0.0, 1.0);
    return {b.kernel, b.rhs, b.rhs_derivative, std::move(nodes)};
}

}  // namespace spnodes
