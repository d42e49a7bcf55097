#pragma once

#include <vector>

#include "loopkit/errors.hpp"
#include "loopkit/exact.hpp"
#include "loopkit/tau_poly.hpp"

namespace loopkit {

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, T fill = T())
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const Matrix& o) const = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ValidationError("matrix shape mismatch in product");
        Matrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T()) continue;
                for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using TauMatrix = Matrix<TauPoly>;
using RationalMatrix = Matrix<Rational>;

/// Determinant by expansion along the first column (any size; exponential).
TauPoly determinant_cofactor(const TauMatrix& m);

/// Determinant by Bareiss fraction-free elimination; every division along the
/// way is exact in Z[tau].
TauPoly determinant_bareiss(const TauMatrix& m);

/// Cofactor expansion up to 4x4, Bareiss beyond.
TauPoly determinant(const TauMatrix& m);

/// Inverse of a lower or upper triangular matrix with unit diagonal, by
/// forward substitution (division-free, so stays in Z[tau]). Throws
/// ValidationError when the matrix is not unitriangular.
TauMatrix unitriangular_inverse(const TauMatrix& m);

/// The kernel basis vector of a square matrix whose null space must be
/// one-dimensional, scaled so the last free variable is 1. Throws
/// VerificationError reporting the computed nullity otherwise.
std::vector<Rational> kernel_vector(const RationalMatrix& m);

}  // namespace loopkit
