#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "listana/error.hpp"

namespace listana {

/// Dense row-major matrix of doubles. Small helper, not a general linear
/// algebra library; only the pieces the fitting code needs.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
    const double* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

inline std::vector<double> matvec(const Matrix& a, const std::vector<double>& x) {
    std::vector<double> out(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* row = a.row_ptr(i);
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += row[j] * x[j];
        out[i] = s;
    }
    return out;
}

struct QrOptions {
    // Rank cutoff relative to the largest initial column norm.
    double rank_tol = 1e-10;
};

/// Result of a column-pivoted Householder QR least-squares solve.
struct QrLeastSquares {
    std::vector<double> solution; // in original column order; zeros are never filled in for dropped columns
    std::vector<std::size_t> permutation; // permutation[k] = original index of the k-th pivoted column
    std::size_t rank = 0;
    bool full_rank = false;
};

/// min ||A x - b||_2 via Householder QR with column pivoting.
///
/// Detects rank deficiency against rank_tol * max initial column norm. When
/// the matrix is rank deficient the solution is left empty; callers decide
/// whether that is an error (fit_ols) or a skip (stepwise candidate filter).
inline QrLeastSquares qr_least_squares(Matrix a, std::vector<double> b,
                                       const QrOptions& opts = {}) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    QrLeastSquares out;
    out.permutation.resize(n);
    std::iota(out.permutation.begin(), out.permutation.end(), std::size_t{0});

    std::vector<double> col_norm(n, 0.0);
    double max_norm = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += a(i, j) * a(i, j);
        col_norm[j] = s;
        max_norm = std::max(max_norm, std::sqrt(s));
    }
    const double cutoff = opts.rank_tol * max_norm;

    const std::size_t steps = std::min(m, n);
    std::size_t rank = 0;
    for (std::size_t k = 0; k < steps; ++k) {
        // Recompute trailing column norms below row k; cheap at our widths and
        // immune to the cancellation that incremental downdating suffers.
        std::size_t pivot = k;
        double best = -1.0;
        for (std::size_t j = k; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = k; i < m; ++i) s += a(i, j) * a(i, j);
            col_norm[j] = s;
            if (s > best) {
                best = s;
                pivot = j;
            }
        }
        if (std::sqrt(std::max(best, 0.0)) <= cutoff) break;
        if (pivot != k) {
            for (std::size_t i = 0; i < m; ++i) std::swap(a(i, k), a(i, pivot));
            std::swap(col_norm[k], col_norm[pivot]);
            std::swap(out.permutation[k], out.permutation[pivot]);
        }

        // Householder vector for column k.
        double alpha = 0.0;
        for (std::size_t i = k; i < m; ++i) alpha += a(i, k) * a(i, k);
        alpha = std::sqrt(alpha);
        if (a(k, k) > 0) alpha = -alpha;
        std::vector<double> v(m - k);
        v[0] = a(k, k) - alpha;
        for (std::size_t i = k + 1; i < m; ++i) v[i - k] = a(i, k);
        double vnorm2 = 0.0;
        for (double t : v) vnorm2 += t * t;
        a(k, k) = alpha;
        for (std::size_t i = k + 1; i < m; ++i) a(i, k) = 0.0;
        if (vnorm2 > 0.0) {
            for (std::size_t j = k + 1; j < n; ++j) {
                double dot = 0.0;
                for (std::size_t i = k; i < m; ++i) dot += v[i - k] * a(i, j);
                const double f = 2.0 * dot / vnorm2;
                for (std::size_t i = k; i < m; ++i) a(i, j) -= f * v[i - k];
            }
            double dot = 0.0;
            for (std::size_t i = k; i < m; ++i) dot += v[i - k] * b[i];
            const double f = 2.0 * dot / vnorm2;
            for (std::size_t i = k; i < m; ++i) b[i] -= f * v[i - k];
        }
        ++rank;
    }

    out.rank = rank;
    out.full_rank = (rank == n);
    if (!out.full_rank) return out;

    // Back substitution on the n x n upper triangle.
    std::vector<double> x(n, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        double s = b[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= a(k, j) * x[j];
        x[k] = s / a(k, k);
    }
    out.solution.assign(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) out.solution[out.permutation[k]] = x[k];
    return out;
}

/// Rank of a matrix by the same pivoted QR the solver uses.
inline std::size_t qr_rank(const Matrix& a, double rank_tol = 1e-10) {
    std::vector<double> dummy(a.rows(), 0.0);
    return qr_least_squares(a, std::move(dummy), {rank_tol}).rank;
}

/// Solve the symmetric positive definite system H x = g in place via
/// Cholesky. Adds Levenberg damping and retries when H is not numerically
/// positive definite (near-separated logistic fits produce those).
inline std::vector<double> solve_spd_damped(Matrix h, std::vector<double> g) {
    const std::size_t n = h.rows();
    double damping = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(h(i, i)));
    if (scale == 0.0) scale = 1.0;

    for (int attempt = 0; attempt < 60; ++attempt) {
        Matrix l = h;
        if (damping > 0.0)
            for (std::size_t i = 0; i < n; ++i) l(i, i) += damping;
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            double d = l(j, j);
            for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
            if (!(d > scale * 1e-14)) {
                ok = false;
                break;
            }
            d = std::sqrt(d);
            l(j, j) = d;
            for (std::size_t i = j + 1; i < n; ++i) {
                double s = l(i, j);
                for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
                l(i, j) = s / d;
            }
        }
        if (!ok) {
            damping = (damping == 0.0) ? scale * 1e-10 : damping * 10.0;
            continue;
        }
        std::vector<double> y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double s = g[i];
            for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
            y[i] = s / l(i, i);
        }
        std::vector<double> x(n, 0.0);
        for (std::size_t i = n; i-- > 0;) {
            double s = y[i];
            for (std::size_t k = i + 1; k < n; ++k) s -= l(k, i) * x[k];
            x[i] = s / l(i, i);
        }
        return x;
    }
    throw DomainError("symmetric solve failed: matrix is numerically indefinite");
}

} // namespace listana
