#pragma once

#include <cmath>
#include <span>
#include <string>
#include <string_view>

#include "spnodes/errors.hpp"

namespace spnodes {

/// Built-in experiment functions. Each carries its analytic derivative for
/// the differentiation experiments.
struct TestFunction {
    const char* id;
    double (*value)(double);
    double (*derivative)(double);
};

namespace detail {
inline double runge(double x) { return 1.0 / (1.0 + 25.0 * x * x); }
inline double runge_deriv(double x) {
    const double d = 1.0 + 25.0 * x * x;
    return -50.0 * x / (d * d);
}
inline double exp_sq(double x) { return std::exp(x * x); }
inline double exp_sq_deriv(double x) { return 2.0 * x * std::exp(x * x); }
inline double neg_sin(double x) { return -std::sin(x); }

inline constexpr TestFunction kTestFunctions[] = {
    {"exp", [](double x) { return std::exp(x); }, [](double x) { return std::exp(x); }},
    {"cos", [](double x) { return std::cos(x); }, neg_sin},
    {"runge", runge, runge_deriv},
    {"exp_sq", exp_sq, exp_sq_deriv},
};
}  // namespace detail

inline std::span<const TestFunction> test_functions() { return detail::kTestFunctions; }

inline const TestFunction& test_function(std::string_view id) {
    for (const TestFunction& f : detail::kTestFunctions)
        if (id == f.id) return f;
    throw UnknownFunction("unknown test function: " + std::string(id));
}

}  // namespace spnodes
