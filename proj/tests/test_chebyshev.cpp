#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "spnodes/chebyshev.hpp"

using namespace spnodes;
using Catch::Approx;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("cheb_eval matches closed forms") {
    CHECK(cheb_eval(0, 0.37) == 1.0);
    CHECK(cheb_eval(1, -0.25) == -0.25);
    CHECK(cheb_eval(2, 0.5) == Approx(-0.5).margin(1e-15));
    // zero of T_5 at cos(pi/10)
    CHECK(std::fabs(cheb_eval(5, std::cos(kPi / 10.0))) < 1e-14);
    // extends outside [-1,1]: T_2(2) = 7
    CHECK(cheb_eval(2, 2.0) == Approx(7.0));
    CHECK_THROWS_AS(cheb_eval(-1, 0.0), std::invalid_argument);
}

TEST_CASE("cheb_eval is bounded by 1 on [-1,1]") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int n = 0; n <= 30; ++n) {
        for (int k = 0; k <= 500; ++k) {
            const double x = -1.0 + 2.0 * k / 500.0;
            CHECK(std::fabs(cheb_eval(n, x)) <= 1.0 + 1e-12);
        }
        for (int k = 0; k < 200; ++k)
            CHECK(std::fabs(cheb_eval(n, unit(rng))) <= 1.0 + 1e-12);
    }
}

TEST_CASE("cheb_antiderivative_eval values and derivative") {
    CHECK(cheb_antiderivative_eval(2, 0.0) == Approx(0.0).margin(1e-16));
    CHECK(cheb_antiderivative_eval(3, 1.0) == Approx(-0.125).margin(1e-15));
    CHECK_THROWS_AS(cheb_antiderivative_eval(1, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(cheb_antiderivative_eval(0, 0.3), std::invalid_argument);

    // centered finite difference reproduces T_s
    const double h = 1e-5;
    CHECK((cheb_antiderivative_eval(2, 0.3 + h) - cheb_antiderivative_eval(2, 0.3 - h)) / (2 * h) ==
          Approx(-0.82).margin(1e-6));
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unit(-0.999, 0.999);
    for (int s = 2; s <= 20; ++s)
        for (int k = 0; k < 50; ++k) {
            const double x = unit(rng);
            const double fd =
                (cheb_antiderivative_eval(s, x + h) - cheb_antiderivative_eval(s, x - h)) / (2 * h);
            CHECK(fd == Approx(cheb_eval(s, x)).margin(1e-6));
        }
}

TEST_CASE("node polynomial construction enforces parity") {
    CHECK_THROWS_AS(NodePolynomial(NodePolyKind::P, 1), ParityError);
    CHECK_THROWS_AS(NodePolynomial(NodePolyKind::P, 4), ParityError);
    CHECK_THROWS_AS(NodePolynomial(NodePolyKind::QTilde, 3), ParityError);
    CHECK_THROWS_AS(NodePolynomial(NodePolyKind::QScaled, 0), ParityError);
    CHECK_NOTHROW(NodePolynomial(NodePolyKind::P, 3));
    CHECK_NOTHROW(NodePolynomial(NodePolyKind::QTilde, 2));
}

TEST_CASE("node polynomial closed-form checks") {
    const NodePolynomial p3(NodePolyKind::P, 3);
    CHECK(std::fabs(p3.eval(1.0)) < 1e-15);
    CHECK(std::fabs(p3.eval(-1.0)) < 1e-15);
    // P_4(x) = x^4 - 1.5x^2 + 0.5
    for (double x : {-0.9, -0.3, 0.0, 0.42, 0.7071067811865476, 1.0})
        CHECK(p3.eval(x) == Approx(x * x * x * x - 1.5 * x * x + 0.5).margin(1e-14));

    const NodePolynomial qt2(NodePolyKind::QTilde, 2);
    for (double x : {-2.0, -0.5, 0.0, 0.25, 1.0, 2.0})
        CHECK(qt2.eval(x) == Approx(x * x * x - x).margin(1e-13));
    CHECK(qt2.eval(2.0) == Approx(6.0));

    const NodePolynomial q2(NodePolyKind::QScaled, 2);
    CHECK(std::fabs(q2.eval(std::sqrt(1.5))) < 1e-14);
    for (double x : {-1.3, -0.4, 0.0, 0.6, 1.5})
        CHECK(q2.eval(x) == Approx(x * x * x - 1.5 * x).margin(1e-13));

    // Q_{s+1}(1) = -(s+1)/(2^{s-1}(s^2-1)) < 0, the left end of the bracket
    // used for the outermost zero.
    for (int s : {2, 4, 8, 12}) {
        const NodePolynomial q(NodePolyKind::QScaled, s);
        const double expected = -(s + 1) / (std::pow(2.0, s - 1) * (static_cast<double>(s) * s - 1.0));
        CHECK(q.eval(1.0) == Approx(expected).margin(1e-15));
        CHECK(q.eval(1.5) > 0.0);
    }
}

TEST_CASE("node polynomial analytic derivative") {
    const NodePolynomial p3(NodePolyKind::P, 3);
    CHECK(std::fabs(p3.derivative(std::cos(kPi / 6.0))) < 1e-14);
    CHECK(p3.derivative(1.0) == Approx(1.0));

    const NodePolynomial qt2(NodePolyKind::QTilde, 2);
    CHECK(qt2.derivative(0.0) == Approx(-1.0));

    // finite-difference cross-check on all kinds
    const double h = 1e-6;
    for (const NodePolynomial& p : {NodePolynomial(NodePolyKind::P, 5),
                                    NodePolynomial(NodePolyKind::QTilde, 4),
                                    NodePolynomial(NodePolyKind::QScaled, 6)})
        for (double x : {-0.8, -0.2, 0.3, 0.9})
            CHECK(p.derivative(x) == Approx((p.eval(x + h) - p.eval(x - h)) / (2 * h)).margin(1e-7));
}

TEST_CASE("node polynomial symmetry") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int s : {3, 5, 7, 9, 11}) {
        const NodePolynomial p(NodePolyKind::P, s);
        for (int k = 0; k < 100; ++k) {
            const double x = unit(rng);
            CHECK(p.eval(x) == Approx(p.eval(-x)).margin(1e-14));
        }
    }
    for (int s : {2, 4, 6, 8, 10}) {
        const NodePolynomial q(NodePolyKind::QScaled, s);
        for (int k = 0; k < 100; ++k) {
            const double x = unit(rng);
            CHECK(q.eval(x) == Approx(-q.eval(-x)).margin(1e-14));
        }
    }
}

TEST_CASE("node polynomials are monic of degree s+1") {
    const double r = 1e3;
    for (int s : {3, 5, 9, 13, 19}) {
        const NodePolynomial p(NodePolyKind::P, s);
        CHECK(p.eval(r) / std::pow(r, s + 1) == Approx(1.0).epsilon(1e-2));
    }
    for (int s : {2, 4, 10, 16, 20}) {
        const NodePolynomial qt(NodePolyKind::QTilde, s);
        const NodePolynomial q(NodePolyKind::QScaled, s);
        CHECK(qt.eval(r) / std::pow(r, s + 1) == Approx(1.0).epsilon(1e-2));
        CHECK(q.eval(r) / std::pow(r, s + 1) == Approx(1.0).epsilon(1e-2));
    }
}
