#pragma once

#include <cmath>
#include <string>

#include "spnodes/errors.hpp"

namespace spnodes {

/// T_n(x) by the three-term recurrence T_{k+1} = 2x T_k - T_{k-1}.
/// Valid for any real x, including |x| > 1 where the cos/acos form breaks down.
inline double cheb_eval(int n, double x) {
    if (n < 0) throw std::invalid_argument("cheb_eval: degree must be >= 0");
    if (n == 0) return 1.0;
    double tkm = 1.0, tk = x;
    for (int k = 1; k < n; ++k) {
        const double tkp = 2.0 * x * tk - tkm;
        tkm = tk;
        tk = tkp;
    }
    return tk;
}

/// Antiderivative of T_s vanishing at 0 up to its constant:
/// (1/2)(T_{s+1}(x)/(s+1) - T_{s-1}(x)/(s-1)). Requires s >= 2.
inline double cheb_antiderivative_eval(int s, double x) {
    if (s < 2) throw std::invalid_argument("cheb_antiderivative_eval: requires s >= 2");
    return 0.5 * (cheb_eval(s + 1, x) / (s + 1) - cheb_eval(s - 1, x) / (s - 1));
}

enum class NodePolyKind { P, QTilde, QScaled };

/// Monic degree-(s+1) node polynomial built from the antiderivative of T_s.
///
/// P:       (s+1)/2^{s-1} * [ antider + 1/(s^2-1) ],    odd s >= 3
/// QTilde:  (s+1)/2^s * [ 2*antider + 2x/(s^2-1) ],     even s >= 2
/// QScaled: (s+1)/2^s * [ 2*antider ],                  even s >= 2
///
/// Represented implicitly through Chebyshev evaluation; no monomial
/// coefficients are ever formed.
class NodePolynomial {
public:
    NodePolynomial(NodePolyKind kind, int s) : kind_(kind), s_(s) {
        if (kind == NodePolyKind::P) {
            if (s < 3 || s % 2 == 0)
                throw ParityError("NodePolynomial: kind P requires odd s >= 3, got s=" +
                                  std::to_string(s));
        } else {
            if (s < 2 || s % 2 != 0)
                throw ParityError("NodePolynomial: kinds QTilde/QScaled require even s >= 2, got s=" +
                                  std::to_string(s));
        }
    }

    NodePolyKind kind() const { return kind_; }
    int degree_s() const { return s_; }

    double eval(double x) const {
        const double antider = cheb_antiderivative_eval(s_, x);
        const double s2m1 = static_cast<double>(s_) * s_ - 1.0;
        switch (kind_) {
            case NodePolyKind::P:
                return (s_ + 1) / std::pow(2.0, s_ - 1) * (antider + 1.0 / s2m1);
            case NodePolyKind::QTilde:
                return (s_ + 1) / std::pow(2.0, s_) * (2.0 * antider + 2.0 * x / s2m1);
            case NodePolyKind::QScaled:
                return (s_ + 1) / std::pow(2.0, s_) * (2.0 * antider);
        }
        return 0.0;  // unreachable
    }

    /// Analytic derivative: (s+1)/2^{s-1} T_s(x) for P and QScaled,
    /// plus the constant (s+1)/(2^{s-1}(s^2-1)) for QTilde.
    double derivative(double x) const {
        const double lead = (s_ + 1) / std::pow(2.0, s_ - 1);
        const double ts = cheb_eval(s_, x);
        if (kind_ == NodePolyKind::QTilde)
            return lead * (ts + 1.0 / (static_cast<double>(s_) * s_ - 1.0));
        return lead * ts;
    }

private:
    NodePolyKind kind_;
    int s_;
};

inline double node_poly_eval(const NodePolynomial& p, double x) { return p.eval(x); }
inline double node_poly_derivative_eval(const NodePolynomial& p, double x) { return p.derivative(x); }

}  // namespace spnodes
