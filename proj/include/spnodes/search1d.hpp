#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "spnodes/errors.hpp"

namespace spnodes {

/// Brent-style root finder: bisection with secant / inverse-quadratic
/// acceleration, followed by a bisection polish that tightens the bracket
/// to a couple of ULPs. Requires a sign change on [a, b].
template <typename F>
double brent_zero(F&& f, double a, double b) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb))
        throw BracketError("brent_zero: no sign change on the bracket");

    double c = a, fc = fa;
    double d = b - a, e = d;
    while (fb != 0.0) {
        if (std::signbit(fb) == std::signbit(fc)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double xm = 0.5 * (c - b);
        const double tol1 = 2.0 * eps * std::fabs(b);
        if (std::fabs(xm) <= tol1) break;
        if (std::fabs(e) < tol1 || std::fabs(fa) <= std::fabs(fb)) {
            d = xm;
            e = d;
        } else {
            double p, q;
            const double si = fb / fa;
            if (a != c) {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = si * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (si - 1.0);
            } else {
                p = 2.0 * xm * si;
                q = 1.0 - si;
            }
            if (p > 0.0) q = -q;
            else p = -p;
            if (2.0 * p < 3.0 * xm * q - std::fabs(tol1 * q) && p < std::fabs(0.5 * e * q)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : std::copysign(tol1, xm);
        fb = f(b);
    }
    if (fb == 0.0) return b;

    // Polish: plain bisection until the bracket cannot shrink further.
    // Reaching this point means the loop stopped on the width test, so
    // [b, c] still straddles the sign change.
    double lo = std::min(b, c), hi = std::max(b, c);
    double flo = (lo == b) ? fb : fc;
    while (true) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (std::signbit(fm) == std::signbit(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return std::fabs(f(lo)) <= std::fabs(f(hi)) ? lo : hi;
}

/// Golden-section maximization of f on [a, b] down to an x-interval of xtol.
/// Returns {argmax, max}. Assumes a single interior maximum on the bracket.
template <typename F>
std::pair<double, double> golden_section_max(F&& f, double a, double b, double xtol) {
    constexpr double invphi = 0.6180339887498949;  // (sqrt(5)-1)/2
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
        if (c >= d) break;  // interval exhausted at double resolution
    }
    const double xm = 0.5 * (a + b);
    const double fm = f(xm);
    if (fc >= fd && fc >= fm) return {c, fc};
    if (fd >= fm) return {d, fd};
    return {xm, fm};
}

}  // namespace spnodes
