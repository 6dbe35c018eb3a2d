#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cclab {

// Dense row-major matrix; just enough for correlation work.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<double>& data() const { return data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

// A claimed correlation matrix had a negative Cholesky pivot.
struct NotPositiveDefinite : std::runtime_error {
    explicit NotPositiveDefinite(std::size_t pivot_index);
    std::size_t pivot = 0;
};

// Lower-triangular L with L*L^T == corr (elementwise 1e-10). Zero pivots are
// accepted, so positive *semi*definite boundaries factor (homogeneous c = 1);
// a negative pivot raises NotPositiveDefinite carrying its index.
Matrix cholesky_factor(const Matrix& corr);

// C_ij = c for i != j, unit diagonal.
Matrix homogeneous_correlation(std::size_t n, double c);

// The matrix restricted to the given row/column indices, in subset order.
Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& subset);

// Diagonal loading (1-eps)*C + eps*I, a purely numerical safeguard for
// near-singular sample correlation matrices.
Matrix regularize_correlation(const Matrix& corr, double eps = 1e-6);

}  // namespace cclab
