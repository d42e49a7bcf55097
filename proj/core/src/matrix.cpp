#include "loopkit/matrix.hpp"

namespace loopkit {

namespace {

void require_square(int rows, int cols) {
    if (rows != cols) throw ValidationError("matrix must be square");
}

}  // namespace

TauPoly determinant_cofactor(const TauMatrix& m) {
    require_square(m.rows(), m.cols());
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    TauPoly det;
    for (int i = 0; i < n; ++i) {
        if (m(i, 0).is_zero()) continue;
        TauMatrix minor(n - 1, n - 1);
        for (int r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            for (int c = 1; c < n; ++c) minor(mr, c - 1) = m(r, c);
            ++mr;
        }
        TauPoly term = m(i, 0) * determinant_cofactor(minor);
        if (i % 2) det -= term;
        else det += term;
    }
    return det;
}

TauPoly determinant_bareiss(const TauMatrix& m) {
    require_square(m.rows(), m.cols());
    int n = m.rows();
    if (n == 0) return 1;
    TauMatrix w = m;
    TauPoly prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w(k, k).is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!w(r, k).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return {};
            for (int c = k; c < n; ++c) std::swap(w(k, c), w(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                w(i, j) = exact_div(w(i, j) * w(k, k) - w(i, k) * w(k, j), prev);
            w(i, k) = {};
        }
        prev = w(k, k);
    }
    TauPoly det = w(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

TauPoly determinant(const TauMatrix& m) {
    require_square(m.rows(), m.cols());
    return m.rows() <= 4 ? determinant_cofactor(m) : determinant_bareiss(m);
}

TauMatrix unitriangular_inverse(const TauMatrix& m) {
    require_square(m.rows(), m.cols());
    int n = m.rows();
    const TauPoly one = 1;
    for (int i = 0; i < n; ++i)
        if (m(i, i) != one)
            throw ValidationError("diagonal entry (" + std::to_string(i) + "," +
                                  std::to_string(i) + ") is not 1");
    bool lower = true, upper = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!m(i, j).is_zero()) lower = false;
            if (!m(j, i).is_zero()) upper = false;
        }
    if (!lower && !upper) throw ValidationError("matrix is not triangular");

    // Transpose the upper case so both run through the same substitution.
    TauMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = lower ? m(i, j) : m(j, i);

    TauMatrix inv(n, n);
    for (int j = 0; j < n; ++j) {
        inv(j, j) = 1;
        for (int i = j + 1; i < n; ++i) {
            TauPoly acc;
            for (int k = j; k < i; ++k) acc += a(i, k) * inv(k, j);
            inv(i, j) = -acc;
        }
    }
    if (!lower) {
        TauMatrix t(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t(i, j) = inv(j, i);
        return t;
    }
    return inv;
}

std::vector<Rational> kernel_vector(const RationalMatrix& m) {
    require_square(m.rows(), m.cols());
    int n = m.rows();
    RationalMatrix w = m;
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (w(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int c = col; c < n; ++c) std::swap(w(row, c), w(pr, c));
        Rational inv_pivot = Rational(1) / w(row, col);
        for (int c = col; c < n; ++c) w(row, c) *= inv_pivot;
        for (int r = 0; r < n; ++r) {
            if (r == row || w(r, col) == 0) continue;
            Rational f = w(r, col);
            for (int c = col; c < n; ++c) w(r, c) -= f * w(row, c);
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    int rank = row;
    int nullity = n - rank;
    if (nullity != 1)
        throw VerificationError("kernel is not one-dimensional: nullity " +
                                std::to_string(nullity));
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;
    int free_col = 0;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_col = c;
    std::vector<Rational> x(n, Rational(0));
    x[free_col] = 1;
    for (int r = 0; r < rank; ++r) x[pivot_col_of_row[r]] = -w(r, free_col);
    return x;
}

}  // namespace loopkit
