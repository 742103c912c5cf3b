#include "ripbound/rng.hpp"

#include <cmath>
#include <string>

namespace ripbound {

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ull;
    for (int pass = 0; pass < 2; ++pass) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z = z ^ (z >> 31);
    }
    return z;
}

Matrix random_gaussian(int m, int n, std::uint64_t seed) {
    if (m < 1 || n < 1)
        throw ContractViolation("random_gaussian requires m, n >= 1");
    Rng rng(seed);
    Matrix M(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) M(i, j) = rng.normal();
    return M;
}

namespace {

// Modified Gram-Schmidt on the columns of A, with a second full pass to
// drive the deviation from orthonormality down to ~1e-12 at desk sizes.
void orthonormalize_columns(Matrix& A) {
    const int rows = A.rows();
    const int cols = A.cols();
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < cols; ++j) {
            for (int i = 0; i < j; ++i) {
                const double d = A.column_dot(i, j);
                for (int r = 0; r < rows; ++r) A(r, j) -= d * A(r, i);
            }
            const double norm = A.column_norm(j);
            if (norm < 1e-8)
                throw std::runtime_error(
                    "degenerate Gaussian draw during orthogonalization (column " +
                    std::to_string(j) + ")");
            for (int r = 0; r < rows; ++r) A(r, j) /= norm;
        }
    }
}

}  // namespace

Matrix random_with_spectrum(int m, int n, const Spectrum& s, std::uint64_t seed) {
    if (s.size() != m)
        throw ContractViolation("spectrum length " + std::to_string(s.size()) +
                                " does not match m=" + std::to_string(m));
    if (m > n) throw ContractViolation("random_with_spectrum requires m <= n");
    for (int i = 0; i < s.size(); ++i)
        if (s[i] <= 0.0)
            throw ContractViolation("prescribed singular values must be positive");

    Matrix U = random_gaussian(m, m, Rng::derive(seed, 0));
    Matrix V = random_gaussian(n, m, Rng::derive(seed, 1));
    orthonormalize_columns(U);
    orthonormalize_columns(V);

    Matrix M(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int a = 0; a < m; ++a) acc += U(i, a) * s[a] * V(j, a);
            M(i, j) = acc;
        }
    return M;
}

}  // namespace ripbound
