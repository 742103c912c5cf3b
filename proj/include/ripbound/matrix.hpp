#pragma once

#include <cstddef>
#include <vector>

#include "ripbound/errors.hpp"

namespace ripbound {

/// Dense real matrix, row-major storage.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);  // zero-filled

    /// Builds from nested rows, validating rectangularity and finiteness.
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }
    double operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    double column_norm(int j) const;
    double column_dot(int a, int b) const;

    bool all_finite() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

/// Singular values sorted descending. Whether entries are singular values
/// or their squares is a per-call-site contract; this type stores plain
/// nonnegative values in descending order.
class Spectrum {
public:
    explicit Spectrum(std::vector<double> values);
    static Spectrum unit(int m);

    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

struct SymmetricEigen {
    std::vector<double> values;  // descending
    Matrix vectors;              // column i pairs with values[i]; empty unless requested
};

/// Eigendecomposition of a symmetric matrix by cyclic two-sided Jacobi
/// rotations. Iterates until the off-diagonal Frobenius norm falls below
/// 1e-14 times the Frobenius norm of the input.
SymmetricEigen symmetric_eigen(const Matrix& A, bool want_vectors = false);

/// Singular values of M, descending, computed from the smaller-side Gram
/// matrix. Negative Gram eigenvalues from roundoff are clamped to zero.
Spectrum singular_values(const Matrix& M);

/// cols x cols matrix of pairwise column inner products; each unordered
/// pair is computed once and mirrored.
Matrix gram(const Matrix& M);

/// m x k matrix whose j-th column is M's column subset[j].
Matrix submatrix_columns(const Matrix& M, const std::vector<int>& subset);

/// Selects rows and columns; used by identity checks over l x k submatrices.
Matrix submatrix(const Matrix& M, const std::vector<int>& row_subset,
                 const std::vector<int>& col_subset);

/// Every column divided by its Euclidean norm. A zero column is an error
/// naming the offending index.
Matrix normalize_columns(const Matrix& M);

}  // namespace ripbound
