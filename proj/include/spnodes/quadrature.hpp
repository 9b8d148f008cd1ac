#pragma once

#include <cmath>
#include <vector>

#include "spnodes/errors.hpp"

namespace spnodes {

/// Gauss-Legendre rule on [-1,1]. Nodes from Newton iteration on P_n with
/// the usual Chebyshev-based initial guesses; accurate to machine precision
/// for the orders used here.
struct QuadratureRule {
    std::vector<double> points;
    std::vector<double> weights;
};

inline QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    QuadratureRule rule;
    rule.points.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    constexpr double pi = 3.14159265358979323846;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence: value p and derivative dp at x.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        // Reevaluate the derivative at the converged node for the weight.
        {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.points[static_cast<std::size_t>(i)] = -x;
        rule.points[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.points[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

/// Integrate f over [a, b] with a single application of the rule. Throws
/// QuadratureFailure on a non-finite integrand sample.
template <typename F>
double integrate(F&& f, double a, double b, const QuadratureRule& rule) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.points.size(); ++k) {
        const double v = f(mid + half * rule.points[k]);
        if (!std::isfinite(v)) throw QuadratureFailure("integrate: non-finite integrand sample");
        sum += rule.weights[k] * v;
    }
    return half * sum;
}

}  // namespace spnodes
