#pragma once

#include <cmath>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "spnodes/interp.hpp"
#include "spnodes/linalg.hpp"
#include "spnodes/nodes.hpp"
#include "spnodes/testfunctions.hpp"

namespace spnodes {

/// Row/column ordering of a differentiation matrix relative to its node
/// coordinates. Kept explicit because the closed-form CGL matrix lives in
/// the descending cos(i*pi/s) convention while NodeSets are ascending.
enum class NodeOrdering { Ascending, Descending };

struct DiffMatrix {
    std::vector<double> nodes;  // coordinates in matrix order
    NodeOrdering ordering;
    Matrix entries;  // entry (i,j) = l'_j(node_i)
};

/// General spectral differentiation matrix for arbitrary distinct nodes:
/// d_ij = (w_j/w_i)/(c_i - c_j) off the diagonal and
/// d_ii = sum_{k!=i} 1/(c_i - c_k).
inline Matrix differentiation_entries(std::span<const double> nodes) {
    const int n = static_cast<int>(nodes.size());
    const std::vector<double> w = barycentric_weights(nodes);
    Matrix d(n, n);
    for (int i = 0; i < n; ++i) {
        double diag = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            d(i, j) = (w[static_cast<std::size_t>(j)] / w[static_cast<std::size_t>(i)]) /
                      (nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)]);
            diag += 1.0 / (nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)]);
        }
        d(i, i) = diag;
    }
    return d;
}

inline DiffMatrix build_general(const NodeSet& ns) {
    return {ns.nodes, NodeOrdering::Ascending, differentiation_entries(ns.nodes)};
}

/// Cross-check diagonal: the matrix annihilates constants, so
/// d_ii = -sum_{j!=i} d_ij must reproduce the directly summed diagonal.
inline std::vector<double> diagonal_from_constant_null(const Matrix& entries) {
    std::vector<double> diag(static_cast<std::size_t>(entries.rows()));
    for (int i = 0; i < entries.rows(); ++i) {
        double sum = 0.0;
        for (int j = 0; j < entries.cols(); ++j)
            if (j != i) sum += entries(i, j);
        diag[static_cast<std::size_t>(i)] = -sum;
    }
    return diag;
}

/// Closed-form CGL matrix in the descending convention c_i = cos(i*pi/s):
///   d_00 = (2s^2+1)/6,            d_ss = -(2s^2+1)/6,
///   d_jj = -c_j / (2(1-c_j^2)),   j = 1..s-1,
///   d_ij = (a_i/a_j)(-1)^{i+j}/(c_i-c_j),  a_0 = a_s = 2, a_j = 1 otherwise.
inline DiffMatrix build_cgl_explicit(int s) {
    require_valid_degree(NodeFamily::CGL, s);
    NodeSet cgl = generate(NodeFamily::CGL, s);
    std::vector<double> c(cgl.nodes.rbegin(), cgl.nodes.rend());

    const int n = s + 1;
    Matrix d(n, n);
    const auto coeff = [s](int i) { return (i == 0 || i == s) ? 2.0 : 1.0; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            d(i, j) = coeff(i) / coeff(j) * sign /
                      (c[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(j)]);
        }
    d(0, 0) = (2.0 * s * s + 1.0) / 6.0;
    d(s, s) = -(2.0 * s * s + 1.0) / 6.0;
    for (int j = 1; j < s; ++j) {
        const double cj = c[static_cast<std::size_t>(j)];
        d(j, j) = -cj / (2.0 * (1.0 - cj * cj));
    }
    return {std::move(c), NodeOrdering::Descending, std::move(d)};
}

inline std::vector<double> apply_matrix(const DiffMatrix& d, std::span<const double> samples) {
    return matvec(d.entries, samples);
}

/// Nodal derivative errors |f'(c_i) - (Df)_i| for a family on [-1,1].
inline std::vector<std::pair<double, double>> derivative_error_at_nodes(NodeFamily family, int s,
                                                                        std::string_view function_id) {
    const TestFunction& tf = test_function(function_id);
    const NodeSet ns = generate(family, s);
    const DiffMatrix d = build_general(ns);
    std::vector<double> samples(ns.nodes.size());
    for (std::size_t i = 0; i < ns.nodes.size(); ++i) samples[i] = tf.value(ns.nodes[i]);
    const std::vector<double> approx = apply_matrix(d, samples);
    std::vector<std::pair<double, double>> out;
    out.reserve(ns.nodes.size());
    for (std::size_t i = 0; i < ns.nodes.size(); ++i)
        out.emplace_back(ns.nodes[i], std::fabs(tf.derivative(ns.nodes[i]) - approx[i]));
    return out;
}

}  // namespace spnodes
