#include "ripbound/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ripbound {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw ContractViolation("matrix dimensions must be at least 1x1");
    data_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw ContractViolation("matrix dimensions must be at least 1x1");
    const int m = static_cast<int>(rows.size());
    const int n = static_cast<int>(rows.front().size());
    Matrix M(m, n);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw ContractViolation("ragged rows: row " + std::to_string(i) +
                                    " has " + std::to_string(rows[i].size()) +
                                    " entries, expected " + std::to_string(n));
        for (int j = 0; j < n; ++j) {
            if (!std::isfinite(rows[i][j]))
                throw ContractViolation("non-finite entry at (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
            M(i, j) = rows[i][j];
        }
    }
    return M;
}

double Matrix::column_norm(int j) const {
    return std::sqrt(column_dot(j, j));
}

double Matrix::column_dot(int a, int b) const {
    double s = 0.0;
    for (int i = 0; i < rows_; ++i) s += (*this)(i, a) * (*this)(i, b);
    return s;
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](double v) { return std::isfinite(v); });
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw ContractViolation("spectrum must be non-empty");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]) || values_[i] < 0.0)
            throw ContractViolation("spectrum values must be finite and nonnegative");
        if (i > 0 && values_[i] > values_[i - 1])
            throw ContractViolation("spectrum values must be sorted descending");
    }
}

Spectrum Spectrum::unit(int m) {
    if (m < 1) throw ContractViolation("spectrum length must be at least 1");
    return Spectrum(std::vector<double>(m, 1.0));
}

namespace {

double frobenius(const Matrix& A) {
    double s = 0.0;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) s += A(i, j) * A(i, j);
    return std::sqrt(s);
}

double off_diagonal_frobenius(const Matrix& A) {
    double s = 0.0;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (i != j) s += A(i, j) * A(i, j);
    return std::sqrt(s);
}

}  // namespace

SymmetricEigen symmetric_eigen(const Matrix& A, bool want_vectors) {
    if (A.rows() != A.cols())
        throw ContractViolation("symmetric_eigen requires a square matrix");
    const int n = A.rows();

    Matrix W = A;
    Matrix V;
    if (want_vectors) {
        V = Matrix(n, n);
        for (int i = 0; i < n; ++i) V(i, i) = 1.0;
    }

    const double threshold = 1e-14 * frobenius(A);
    const int max_sweeps = 64;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_frobenius(W) <= threshold) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = W(p, q);
                if (apq == 0.0) continue;
                const double app = W(p, p);
                const double aqq = W(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = W(i, p);
                    const double aiq = W(i, q);
                    W(i, p) = W(p, i) = c * aip - s * aiq;
                    W(i, q) = W(q, i) = s * aip + c * aiq;
                }
                W(p, p) = app - t * apq;
                W(q, q) = aqq + t * apq;
                W(p, q) = W(q, p) = 0.0;

                if (want_vectors) {
                    for (int i = 0; i < n; ++i) {
                        const double vip = V(i, p);
                        const double viq = V(i, q);
                        V(i, p) = c * vip - s * viq;
                        V(i, q) = s * vip + c * viq;
                    }
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return W(a, a) > W(b, b); });

    SymmetricEigen out;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = W(order[i], order[i]);
    if (want_vectors) {
        out.vectors = Matrix(n, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) out.vectors(i, j) = V(i, order[j]);
    }
    return out;
}

Spectrum singular_values(const Matrix& M) {
    const int m = M.rows();
    const int n = M.cols();
    const int side = std::min(m, n);

    Matrix G(side, side);
    if (m <= n) {
        // G = M M^T
        for (int i = 0; i < m; ++i) {
            for (int j = i; j < m; ++j) {
                double s = 0.0;
                for (int t = 0; t < n; ++t) s += M(i, t) * M(j, t);
                G(i, j) = G(j, i) = s;
            }
        }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) G(i, j) = G(j, i) = M.column_dot(i, j);
    }

    SymmetricEigen eig = symmetric_eigen(G);
    std::vector<double> sv(side);
    for (int i = 0; i < side; ++i)
        sv[i] = std::sqrt(std::max(0.0, eig.values[i]));
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return Spectrum(std::move(sv));
}

Matrix gram(const Matrix& M) {
    const int n = M.cols();
    Matrix G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) G(i, j) = G(j, i) = M.column_dot(i, j);
    return G;
}

Matrix submatrix_columns(const Matrix& M, const std::vector<int>& subset) {
    if (subset.empty()) throw ContractViolation("column subset must be non-empty");
    for (std::size_t t = 0; t < subset.size(); ++t) {
        if (subset[t] < 0 || subset[t] >= M.cols())
            throw ContractViolation("column index " + std::to_string(subset[t]) +
                                    " out of range [0," + std::to_string(M.cols()) + ")");
        if (t > 0 && subset[t] <= subset[t - 1])
            throw ContractViolation("column subset must be strictly increasing");
    }
    Matrix S(M.rows(), static_cast<int>(subset.size()));
    for (int i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < subset.size(); ++j)
            S(i, static_cast<int>(j)) = M(i, subset[j]);
    return S;
}

Matrix submatrix(const Matrix& M, const std::vector<int>& row_subset,
                 const std::vector<int>& col_subset) {
    if (row_subset.empty() || col_subset.empty())
        throw ContractViolation("row/column subsets must be non-empty");
    Matrix S(static_cast<int>(row_subset.size()), static_cast<int>(col_subset.size()));
    for (std::size_t i = 0; i < row_subset.size(); ++i) {
        if (row_subset[i] < 0 || row_subset[i] >= M.rows())
            throw ContractViolation("row index out of range");
        for (std::size_t j = 0; j < col_subset.size(); ++j) {
            if (col_subset[j] < 0 || col_subset[j] >= M.cols())
                throw ContractViolation("column index out of range");
            S(static_cast<int>(i), static_cast<int>(j)) = M(row_subset[i], col_subset[j]);
        }
    }
    return S;
}

Matrix normalize_columns(const Matrix& M) {
    Matrix B = M;
    for (int j = 0; j < M.cols(); ++j) {
        const double norm = M.column_norm(j);
        if (norm == 0.0)
            throw ContractViolation("column " + std::to_string(j) +
                                    " has zero norm, cannot normalize");
        for (int i = 0; i < M.rows(); ++i) B(i, j) = M(i, j) / norm;
    }
    return B;
}

}  // namespace ripbound
