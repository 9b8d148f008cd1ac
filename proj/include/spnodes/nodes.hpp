#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spnodes/chebyshev.hpp"
#include "spnodes/errors.hpp"
#include "spnodes/search1d.hpp"

namespace spnodes {

enum class NodeFamily { EquiSpaced, ChebZeros, CGL, ScaledCheb, ND1, ND2, QScaled };

/// An ordered collocation node set. Node count is s+1. All generators keep the
/// set exactly symmetric about the interval midpoint, and every family except
/// ChebZeros carries the endpoints exactly.
struct NodeSet {
    NodeFamily family;
    int s;                      // polynomial degree, nodes.size() == s+1
    std::vector<double> nodes;  // strictly increasing
    double a = -1.0;
    double b = 1.0;

    int count() const { return static_cast<int>(nodes.size()); }
};

inline std::string_view family_name(NodeFamily f) {
    switch (f) {
        case NodeFamily::EquiSpaced: return "equi";
        case NodeFamily::ChebZeros: return "chebzeros";
        case NodeFamily::CGL: return "cgl";
        case NodeFamily::ScaledCheb: return "scaledcheb";
        case NodeFamily::ND1: return "nd1";
        case NodeFamily::ND2: return "nd2";
        case NodeFamily::QScaled: return "qscaled";
    }
    return "?";
}

inline NodeFamily parse_family(std::string_view name) {
    for (NodeFamily f : {NodeFamily::EquiSpaced, NodeFamily::ChebZeros, NodeFamily::CGL,
                         NodeFamily::ScaledCheb, NodeFamily::ND1, NodeFamily::ND2,
                         NodeFamily::QScaled})
        if (family_name(f) == name) return f;
    throw UnknownFunction("unknown node family: " + std::string(name));
}

/// Degree check: ND1 needs odd s >= 3, ND2/QScaled need even s >= 2,
/// everything else needs s >= 1.
inline void require_valid_degree(NodeFamily family, int s) {
    switch (family) {
        case NodeFamily::ND1:
            if (s < 3 || s % 2 == 0)
                throw ParityError("family nd1 requires odd s >= 3, got s=" + std::to_string(s));
            break;
        case NodeFamily::ND2:
            if (s < 2 || s % 2 != 0)
                throw ParityError("family nd2 requires even s >= 2, got s=" + std::to_string(s));
            break;
        case NodeFamily::QScaled:
            if (s < 2 || s % 2 != 0)
                throw ParityError("family qscaled requires even s >= 2, got s=" + std::to_string(s));
            break;
        default:
            if (s < 1)
                throw ParityError("node families require s >= 1, got s=" + std::to_string(s));
    }
}

namespace detail {

inline constexpr double kPi = 3.14159265358979323846;

// Zeros of T_s in descending order: x_i = cos((2i+1)pi/(2s)), i = 0..s-1.
// These bracket the interior zeros of the section-3 node polynomials.
inline double cheb_zero_of_ts(int s, int i) {
    return std::cos((2.0 * i + 1.0) * kPi / (2.0 * s));
}

// Solve the positive-half interior zeros of an even/odd node polynomial and
// mirror them, so symmetry about 0 holds bit-exactly. `upper_brackets` is the
// number of brackets (x_{i+1}, x_i) strictly inside the positive axis.
template <typename F>
inline void fill_symmetric_interior(std::vector<double>& nodes, int s, int upper_brackets, F&& poly) {
    for (int i = 0; i < upper_brackets; ++i) {
        const double lo = cheb_zero_of_ts(s, i + 1);
        const double hi = cheb_zero_of_ts(s, i);
        const double r = brent_zero(poly, lo, hi);
        nodes[s - 1 - i] = r;
        nodes[i + 1] = -r;
    }
}

inline void check_strictly_increasing(const std::vector<double>& nodes) {
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        if (!(nodes[i] < nodes[i + 1]))
            throw BracketError("generated nodes are not strictly increasing");
}

template <typename F>
inline void check_residuals(const std::vector<double>& nodes, F&& poly, double tol) {
    for (double c : nodes)
        if (std::fabs(poly(c)) > tol)
            throw BracketError("root residual above tolerance");
}

}  // namespace detail

/// Generate the family's node set on [-1,1].
inline NodeSet generate(NodeFamily family, int s) {
    require_valid_degree(family, s);
    std::vector<double> nodes(static_cast<std::size_t>(s) + 1);

    switch (family) {
        case NodeFamily::EquiSpaced:
            // (2i-s)/s: integer numerators make the set exactly antisymmetric.
            for (int i = 0; i <= s; ++i) nodes[i] = (2.0 * i - s) / s;
            break;

        case NodeFamily::ChebZeros:
            // Ascending zeros of T_{s+1}; no endpoint membership.
            for (int k = s / 2 + 1; k <= s; ++k)
                nodes[k] = std::cos((2.0 * (s - k) + 1.0) * detail::kPi / (2.0 * (s + 1)));
            for (int k = 0; k < (s + 1) / 2; ++k) nodes[k] = -nodes[s - k];
            if (s % 2 == 0) nodes[s / 2] = 0.0;
            break;

        case NodeFamily::CGL:
            for (int k = s / 2 + 1; k <= s; ++k)
                nodes[k] = std::cos((s - k) * detail::kPi / s);
            for (int k = 0; k < (s + 1) / 2; ++k) nodes[k] = -nodes[s - k];
            if (s % 2 == 0) nodes[s / 2] = 0.0;
            nodes[0] = -1.0;
            nodes[s] = 1.0;
            break;

        case NodeFamily::ScaledCheb: {
            NodeSet cz = generate(NodeFamily::ChebZeros, s);
            const double cos_half = std::cos(detail::kPi / (2.0 * (s + 1)));
            for (int k = 0; k <= s; ++k) nodes[k] = cz.nodes[k] / cos_half;
            nodes[0] = -1.0;
            nodes[s] = 1.0;
            break;
        }

        case NodeFamily::ND1: {
            const NodePolynomial p(NodePolyKind::P, s);
            auto f = [&p](double x) { return p.eval(x); };
            nodes[0] = -1.0;
            nodes[s] = 1.0;
            detail::fill_symmetric_interior(nodes, s, (s - 1) / 2, f);
            detail::check_residuals(nodes, f, 1e-12);
            break;
        }

        case NodeFamily::ND2: {
            const NodePolynomial p(NodePolyKind::QTilde, s);
            auto f = [&p](double x) { return p.eval(x); };
            nodes[0] = -1.0;
            nodes[s] = 1.0;
            nodes[s / 2] = 0.0;
            detail::fill_symmetric_interior(nodes, s, (s - 2) / 2, f);
            detail::check_residuals(nodes, f, 1e-12);
            break;
        }

        case NodeFamily::QScaled: {
            const NodePolynomial p(NodePolyKind::QScaled, s);
            auto f = [&p](double x) { return p.eval(x); };
            // Zeros d_i of Q_{s+1}; the outermost pair lies outside [-1,1].
            // Q(1) = -(s+1)/(2^{s-1}(s^2-1)) < 0 while Q(1.5) > 0.
            std::vector<double> d(static_cast<std::size_t>(s) + 1);
            const double ds = brent_zero(f, 1.0, 1.5);
            d[s] = ds;
            d[0] = -ds;
            d[s / 2] = 0.0;
            detail::fill_symmetric_interior(d, s, (s - 2) / 2, f);
            detail::check_residuals(d, f, 1e-12);
            for (int k = s / 2; k <= s; ++k) nodes[k] = d[k] / ds;
            for (int k = 0; k < s / 2; ++k) nodes[k] = -nodes[s - k];
            nodes[0] = -1.0;
            nodes[s] = 1.0;
            break;
        }
    }

    detail::check_strictly_increasing(nodes);
    return NodeSet{family, s, std::move(nodes), -1.0, 1.0};
}

/// Affine image of the node set on [a, b]. Endpoints are assigned, not
/// computed, for every family that carries them.
inline NodeSet map_to_interval(const NodeSet& ns, double a, double b) {
    if (!(a < b)) throw IntervalError("map_to_interval: requires a < b");
    if (a == -1.0 && b == 1.0) return ns;
    NodeSet out = ns;
    out.a = a;
    out.b = b;
    for (int i = 0; i <= ns.s; ++i) out.nodes[i] = a + (b - a) * (ns.nodes[i] + 1.0) / 2.0;
    if (ns.family != NodeFamily::ChebZeros) {
        out.nodes[0] = a;
        out.nodes[ns.s] = b;
    }
    return out;
}

struct ProductMax {
    double value;
    double argmax;
};

/// Max over [-1,1] of |prod (x - c_i)| by dense scan (4096(s+1) points)
/// plus golden-section refinement of the bracketing subinterval.
inline ProductMax node_product_max(std::span<const double> nodes) {
    const auto product_abs = [&nodes](double x) {
        double p = 1.0;
        for (double c : nodes) p *= (x - c);
        return std::fabs(p);
    };
    const std::size_t n_pts = 4096 * nodes.size() + 1;
    const double step = 2.0 / static_cast<double>(n_pts - 1);
    double best = -1.0, best_x = 0.0;
    std::size_t best_k = 0;
    for (std::size_t k = 0; k < n_pts; ++k) {
        const double x = (k + 1 == n_pts) ? 1.0 : -1.0 + step * static_cast<double>(k);
        const double v = product_abs(x);
        if (v > best) {
            best = v;
            best_x = x;
            best_k = k;
        }
    }
    const double lo = (best_k == 0) ? -1.0 : -1.0 + step * static_cast<double>(best_k - 1);
    const double hi = (best_k + 1 >= n_pts) ? 1.0 : -1.0 + step * static_cast<double>(best_k + 1);
    const auto [xr, vr] = golden_section_max(product_abs, lo, hi, 1e-13);
    if (vr > best) {
        best = vr;
        best_x = xr;
    }
    return {best, best_x};
}

inline ProductMax node_product_max(const NodeSet& ns) {
    return node_product_max(std::span<const double>(ns.nodes));
}

}  // namespace spnodes
