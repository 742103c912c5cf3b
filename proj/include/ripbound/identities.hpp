#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ripbound/bounds.hpp"
#include "ripbound/matrix.hpp"

namespace ripbound {

inline constexpr double kIdentityBudget = 1e6;

struct ResidualReport {
    std::string identity_name;
    double max_abs_residual = 0.0;
    double scale = 0.0;  // normalizing magnitude
    double relative_residual = 0.0;
};

/// Coefficient residual between C(n,k) times the spectrum-derived monic
/// polynomial of M and the sum over all k-column submatrices of their
/// singular-value polynomials. Valid for any 1 <= k <= n.
/// `corrupt_leading_constant` is a test hook that inverts the leading
/// constant so sabotage detection can be exercised.
ResidualReport thompson_residual(const Matrix& M, int k, double budget = kIdentityBudget,
                                 bool corrupt_leading_constant = false);

/// Full two-sided identity over all l x k submatrices against the double
/// derivative of the singular-value polynomial of M.
ResidualReport thompson_general_residual(const Matrix& M, int l, int k,
                                         double budget = kIdentityBudget);

/// d(r_i^2)/d(S_j^2) for the spectrum-derived polynomial at size (n, k);
/// i and j are 1-based. Requires the i-th root to be simple.
double root_sensitivity(const Spectrum& s, long n, long k, int i, int j);

/// | sum_j S_j^2 d(r_i^2)/d(S_j^2) - r_i^2 |, the degree-1 homogeneity defect.
double euler_residual(const Spectrum& s, long n, long k, int i);

/// sqrt of the q-th elementary symmetric polynomial of the squared semi-axes.
double q_volume(const std::vector<double>& semi_axes, int q);

/// Residual of C(n-q, k-q) e_q(S^2) against the sum over k-column
/// submatrices of e_q of their squared spectra.
ResidualReport gpt_residual(const Matrix& M, int k, int q, double budget = kIdentityBudget);

struct MinimalityReport {
    bool pass = false;
    double worst_margin = 0.0;  // min over trials of (spectrum ratio - uniform ratio)
    long violations = 0;
    long trials = 0;
};

/// Random nonconstant positive spectra never undercut the uniform-spectrum
/// bound (margin >= -1e-12).
MinimalityReport minimality_check(long n, long m, long k, long trials, std::uint64_t seed);

}  // namespace ripbound
