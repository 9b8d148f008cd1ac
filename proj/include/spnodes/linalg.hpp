#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "spnodes/errors.hpp"

namespace spnodes {

/// Minimal dense row-major matrix. The systems here are (s+1)x(s+1) with
/// s <= a few dozen, so no external linear algebra is pulled in.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::span<const double> row(int i) const {
        return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::fabs(v));
        return m;
    }

    /// Max column sum of absolute values.
    double norm1() const {
        double m = 0.0;
        for (int j = 0; j < cols_; ++j) {
            double s = 0.0;
            for (int i = 0; i < rows_; ++i) s += std::fabs((*this)(i, j));
            m = std::max(m, s);
        }
        return m;
    }

private:
    int rows_, cols_;
    std::vector<double> data_;
};

inline std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
    std::vector<double> y(static_cast<std::size_t>(a.rows()), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

/// LU factorization with partial pivoting, stored in place.
class LuFactors {
public:
    explicit LuFactors(Matrix a) : lu_(std::move(a)), perm_(static_cast<std::size_t>(lu_.rows())) {
        const int n = lu_.rows();
        const double scale = lu_.max_abs();
        for (int i = 0; i < n; ++i) perm_[static_cast<std::size_t>(i)] = i;
        for (int k = 0; k < n; ++k) {
            int piv = k;
            for (int i = k + 1; i < n; ++i)
                if (std::fabs(lu_(i, k)) > std::fabs(lu_(piv, k))) piv = i;
            if (std::fabs(lu_(piv, k)) < 1e-14 * std::max(scale, 1e-300))
                throw SingularMatrix("lu_factor: pivot below 1e-14 * matrix scale");
            if (piv != k) {
                std::swap(perm_[static_cast<std::size_t>(k)], perm_[static_cast<std::size_t>(piv)]);
                for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
            }
            for (int i = k + 1; i < n; ++i) {
                lu_(i, k) /= lu_(k, k);
                for (int j = k + 1; j < n; ++j) lu_(i, j) -= lu_(i, k) * lu_(k, j);
            }
        }
    }

    std::vector<double> solve(std::span<const double> rhs) const {
        const int n = lu_.rows();
        std::vector<double> x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = rhs[perm_[static_cast<std::size_t>(i)]];
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j) x[static_cast<std::size_t>(i)] -= lu_(i, j) * x[static_cast<std::size_t>(j)];
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j) x[static_cast<std::size_t>(i)] -= lu_(i, j) * x[static_cast<std::size_t>(j)];
            x[static_cast<std::size_t>(i)] /= lu_(i, i);
        }
        return x;
    }

    Matrix inverse() const {
        const int n = lu_.rows();
        Matrix inv(n, n);
        std::vector<double> e(static_cast<std::size_t>(n), 0.0);
        for (int j = 0; j < n; ++j) {
            e[static_cast<std::size_t>(j)] = 1.0;
            const std::vector<double> col = solve(e);
            for (int i = 0; i < n; ++i) inv(i, j) = col[static_cast<std::size_t>(i)];
            e[static_cast<std::size_t>(j)] = 0.0;
        }
        return inv;
    }

private:
    Matrix lu_;
    std::vector<int> perm_;
};

/// 1-norm condition estimate via the explicit inverse (fine at these sizes).
inline double condition_1norm(const Matrix& a) {
    const LuFactors lu(a);
    return a.norm1() * lu.inverse().norm1();
}

}  // namespace spnodes
