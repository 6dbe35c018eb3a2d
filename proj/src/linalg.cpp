#include "cclab/linalg.hpp"

#include <cmath>
#include <string>

namespace cclab {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

NotPositiveDefinite::NotPositiveDefinite(std::size_t pivot_index)
    : std::runtime_error("matrix is not positive semidefinite (pivot " +
                         std::to_string(pivot_index) + ")"),
      pivot(pivot_index) {}

Matrix cholesky_factor(const Matrix& corr) {
    if (corr.rows() != corr.cols())
        throw std::invalid_argument("cholesky_factor: matrix must be square");
    const std::size_t n = corr.rows();
    Matrix lower(n, n, 0.0);
    const double pivot_tol = 1e-12;
    for (std::size_t j = 0; j < n; ++j) {
        double d = corr(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= lower(j, k) * lower(j, k);
        if (d < -pivot_tol * std::max(1.0, std::fabs(corr(j, j))))
            throw NotPositiveDefinite(j);
        const double ljj = d > pivot_tol ? std::sqrt(d) : 0.0;
        lower(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = corr(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k);
            if (ljj > 0.0) {
                lower(i, j) = s / ljj;
            } else {
                // zero pivot: the residual column must vanish for a PSD input
                if (std::fabs(s) > 1e-8) throw NotPositiveDefinite(j);
                lower(i, j) = 0.0;
            }
        }
    }
    return lower;
}

Matrix homogeneous_correlation(std::size_t n, double c) {
    Matrix m(n, n, c);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& subset) {
    const std::size_t k = subset.size();
    Matrix out(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        if (subset[i] >= m.rows()) throw std::out_of_range("submatrix: index out of range");
        for (std::size_t j = 0; j < k; ++j) out(i, j) = m(subset[i], subset[j]);
    }
    return out;
}

Matrix regularize_correlation(const Matrix& corr, double eps) {
    Matrix out = corr;
    const std::size_t n = corr.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = i == j ? 1.0 : (1.0 - eps) * corr(i, j);
    return out;
}

}  // namespace cclab
