#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "spnodes/errors.hpp"
#include "spnodes/nodes.hpp"
#include "spnodes/search1d.hpp"
#include "spnodes/testfunctions.hpp"

namespace spnodes {

/// w_i = 1/prod_{j!=i}(c_i - c_j). For s > 40 the weights are rescaled by
/// their maximum magnitude; the common factor cancels in the barycentric
/// quotient.
inline std::vector<double> barycentric_weights(std::span<const double> nodes) {
    const std::size_t n = nodes.size();
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        double prod = 1.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod *= (nodes[i] - nodes[j]);
        w[i] = 1.0 / prod;
    }
    if (n > 41) {
        double wmax = 0.0;
        for (double v : w) wmax = std::max(wmax, std::fabs(v));
        for (double& v : w) v /= wmax;
    }
    return w;
}

namespace detail {

// Index of a node matched by x within 1e-15 relative, or -1.
inline int node_hit(std::span<const double> nodes, double x) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double scale = std::max({std::fabs(x), std::fabs(nodes[i]), 1e-300});
        if (x == nodes[i] || std::fabs(x - nodes[i]) <= 1e-15 * scale)
            return static_cast<int>(i);
    }
    return -1;
}

}  // namespace detail

/// Barycentric Lagrange interpolant of samples over a fixed node set.
class Interpolant {
public:
    Interpolant(NodeSet nodes, std::vector<double> values)
        : nodes_(std::move(nodes)), values_(std::move(values)),
          weights_(barycentric_weights(nodes_.nodes)) {
        if (values_.size() != nodes_.nodes.size())
            throw LengthMismatch("Interpolant: need one sample per node");
    }

    /// Second barycentric form; returns the sample exactly at (or within
    /// 1e-15 relative of) a node.
    double eval(double x) const {
        const int hit = detail::node_hit(nodes_.nodes, x);
        if (hit >= 0) return values_[static_cast<std::size_t>(hit)];
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            const double t = weights_[i] / (x - nodes_.nodes[i]);
            num += t * values_[i];
            den += t;
        }
        return num / den;
    }

    double operator()(double x) const { return eval(x); }

    const NodeSet& nodes() const { return nodes_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    NodeSet nodes_;
    std::vector<double> values_;
    std::vector<double> weights_;
};

inline Interpolant build_interpolant(const NodeSet& nodes, std::vector<double> values) {
    return Interpolant(nodes, std::move(values));
}

/// All Lagrange basis values l_i(x) at once, via the barycentric identity
/// l_i(x) = (w_i/(x-c_i)) / sum_j (w_j/(x-c_j)).
inline std::vector<double> lagrange_basis_values(std::span<const double> nodes,
                                                 std::span<const double> weights, double x) {
    std::vector<double> out(nodes.size(), 0.0);
    const int hit = detail::node_hit(nodes, x);
    if (hit >= 0) {
        out[static_cast<std::size_t>(hit)] = 1.0;
        return out;
    }
    double den = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        out[j] = weights[j] / (x - nodes[j]);
        den += out[j];
    }
    for (double& v : out) v /= den;
    return out;
}

/// F(x) = sum_k |l_k(x)|; equals 1 at every node.
inline double lebesgue_function(std::span<const double> nodes, std::span<const double> weights,
                                double x) {
    if (detail::node_hit(nodes, x) >= 0) return 1.0;
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const double t = weights[j] / (x - nodes[j]);
        num += std::fabs(t);
        den += t;
    }
    return num / std::fabs(den);
}

inline double lebesgue_function(const NodeSet& ns, double x) {
    const std::vector<double> w = barycentric_weights(ns.nodes);
    return lebesgue_function(ns.nodes, w, x);
}

/// Both conventions are reported: the table convention max F - 1 and the
/// conventional constant max F itself.
struct LebesgueReport {
    NodeFamily family;
    int s;
    double max_F;
    double argmax;
    double lambda_paper;         // max F - 1
    double lambda_conventional;  // max F
};

/// Maximize F over [-1,1]: 1024-point scan per gap between consecutive nodes
/// (plus the end gaps when the family omits the endpoints), then
/// golden-section refinement to 1e-9 in x.
inline LebesgueReport lebesgue_constant(const NodeSet& ns) {
    const std::vector<double> w = barycentric_weights(ns.nodes);
    const auto F = [&ns, &w](double x) { return lebesgue_function(ns.nodes, w, x); };

    std::vector<double> edges;
    edges.reserve(ns.nodes.size() + 2);
    if (ns.nodes.front() > -1.0) edges.push_back(-1.0);
    edges.insert(edges.end(), ns.nodes.begin(), ns.nodes.end());
    if (ns.nodes.back() < 1.0) edges.push_back(1.0);

    double best = 1.0, best_x = ns.nodes.front();
    for (std::size_t g = 0; g + 1 < edges.size(); ++g) {
        const double lo = edges[g], hi = edges[g + 1];
        constexpr int kScan = 1024;
        double gap_best = -1.0;
        int gap_k = 0;
        for (int k = 0; k <= kScan; ++k) {
            const double x = lo + (hi - lo) * k / kScan;
            const double v = F(x);
            if (v > gap_best) {
                gap_best = v;
                gap_k = k;
            }
        }
        const double rlo = lo + (hi - lo) * std::max(gap_k - 1, 0) / kScan;
        const double rhi = lo + (hi - lo) * std::min(gap_k + 1, kScan) / kScan;
        const auto [xr, vr] = golden_section_max(F, rlo, rhi, 1e-9);
        const double v = std::max(vr, gap_best);
        if (v > best) {
            best = v;
            best_x = (vr >= gap_best) ? xr : lo + (hi - lo) * gap_k / kScan;
        }
    }
    return {ns.family, ns.s, best, best_x, best - 1.0, best};
}

/// |f(x) - L(f)(x)| on a uniform grid over the node interval.
inline std::vector<std::pair<double, double>> interp_error_curve(const NodeSet& ns,
                                                                 std::string_view function_id,
                                                                 int grid_size) {
    if (grid_size < 2) throw std::invalid_argument("interp_error_curve: grid_size must be >= 2");
    const TestFunction& tf = test_function(function_id);
    std::vector<double> samples(ns.nodes.size());
    for (std::size_t i = 0; i < ns.nodes.size(); ++i) samples[i] = tf.value(ns.nodes[i]);
    const Interpolant ip(ns, std::move(samples));
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(grid_size));
    for (int k = 0; k < grid_size; ++k) {
        const double x = ns.a + (ns.b - ns.a) * k / (grid_size - 1);
        out.emplace_back(x, std::fabs(tf.value(x) - ip.eval(x)));
    }
    return out;
}

}  // namespace spnodes
