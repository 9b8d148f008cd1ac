#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace oracle {

// Recursive adaptive Simpson quadrature.
inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) throw std::runtime_error("adaptive_simpson: max depth reached");
    if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 60);
}

// Direct Lagrange product-formula evaluation: sum_i f_i prod_{j!=i}(x-c_j)/(c_i-c_j).
inline double lagrange_direct(std::span<const double> nodes, std::span<const double> values,
                              double x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        double term = values[i];
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            term *= (x - nodes[j]) / (nodes[i] - nodes[j]);
        }
        acc += term;
    }
    return acc;
}

// Chebyshev series route for integrating a degree-<=deg polynomial f over
// [x0, x1] inside [a, b]: interpolate at Chebyshev zeros mapped to [a, b],
// convert to T_k coefficients by the cosine sum, integrate the series
// term-by-term. Completely separate from Gauss-Legendre.
inline double cheb_series_integral(const std::function<double(double)>& f, int deg, double a,
                                   double b, double x0, double x1) {
    const int n = deg + 1;
    constexpr double pi = 3.14159265358979323846;
    std::vector<double> theta(n), fs(n);
    for (int m = 0; m < n; ++m) {
        theta[m] = (2.0 * m + 1.0) * pi / (2.0 * n);
        const double u = std::cos(theta[m]);
        fs[m] = f(a + (b - a) * (u + 1.0) / 2.0);
    }
    std::vector<double> coef(n, 0.0);
    for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int m = 0; m < n; ++m) s += fs[m] * std::cos(k * theta[m]);
        coef[k] = s * 2.0 / n;
    }
    coef[0] *= 0.5;

    // Antiderivative of T_k in u, evaluated at the mapped limits.
    const auto cheb = [](int k, double u) {
        if (k == 0) return 1.0;
        double tkm = 1.0, tk = u;
        for (int j = 1; j < k; ++j) {
            const double tkp = 2.0 * u * tk - tkm;
            tkm = tk;
            tk = tkp;
        }
        return tk;
    };
    const auto antider = [&cheb](int k, double u) {
        if (k == 0) return u;
        if (k == 1) return 0.5 * u * u;
        return 0.5 * (cheb(k + 1, u) / (k + 1) - cheb(k - 1, u) / (k - 1));
    };
    const auto map_u = [a, b](double x) { return 2.0 * (x - a) / (b - a) - 1.0; };
    const double u0 = map_u(x0), u1 = map_u(x1);
    double integral = 0.0;
    for (int k = 0; k < n; ++k) integral += coef[k] * (antider(k, u1) - antider(k, u0));
    return integral * (b - a) / 2.0;
}

}  // namespace oracle
