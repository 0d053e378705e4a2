#pragma once

#include <cstddef>
#include <vector>

#include "fermibasis/gaussian.hpp"
#include "fermibasis/ratfun.hpp"

namespace fermibasis::exactmath {

/// Dense matrix with exact entries.
template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix transposed() const {
        Matrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using ExactMatrix = Matrix<GaussianRational>;
using SymbolicMatrix = Matrix<RatFun>;

/// Exact rank via fraction-free (Bareiss) elimination on row-scaled
/// Gaussian-integer entries.
std::size_t exact_rank(const ExactMatrix& m);

/// Exact determinant of a square matrix.
GaussianRational exact_det(const ExactMatrix& m);

/// Rank of a matrix of rational functions by exact field elimination.
/// Intended for small symbolic matrices.
std::size_t exact_rank(const SymbolicMatrix& m);

/// Specializes a symbolic matrix at a point; throws std::domain_error if a
/// denominator vanishes there (caller should re-specialize).
ExactMatrix specialize(const SymbolicMatrix& m, const std::map<VarId, GaussianRational>& point);

/// Checks the Cauchy-kernel determinant identity at 2l exact points
///   prod_p z_p * Delta(x) Delta(z) / prod_{i,j} (1 - x_i z_j)
///     = det( 1 / (zeta_p^2 - xi_q^2) )
/// under x_p = xi_p^2 - 1, z_p = (zeta_p^2 - 1)^{-1}. The two sides are
/// evaluated by independent routes (closed products vs. elimination).
/// Throws std::invalid_argument on coincident points or zeta^2 = 1.
bool cauchy_det_check(const std::vector<GaussianRational>& zeta2,
                      const std::vector<GaussianRational>& xi2);

/// The l = 1 identity checked symbolically in fresh variables:
///   z (zeta^2 - 1) / (zeta^2 - xi^2) = 1 / (zeta^2 - xi^2).
bool cauchy_det_check_symbolic_l1();

}  // namespace fermibasis::exactmath
