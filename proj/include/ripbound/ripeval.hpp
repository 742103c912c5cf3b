#pragma once

#include <cstdint>
#include <vector>

#include "ripbound/bounds.hpp"
#include "ripbound/matrix.hpp"

namespace ripbound {

inline constexpr double kDefaultBudget = 1e7;

struct RipEvaluation {
    double rho_min = 0.0;   // smallest squared singular value over all submatrices
    double rho_max = 0.0;   // largest squared singular value over all submatrices
    double ratio = 0.0;     // rho_max / rho_min; +inf when rho_min vanishes
    double delta_k = 0.0;   // max(rho_max - 1, 1 - rho_min)
    double delta_k_optimal = 0.0;  // (ratio - 1)/(ratio + 1)
    std::vector<int> argmax_subset;
    std::vector<int> argmin_subset;

    bool is_infinite() const;
};

/// Exact RIP quantities by exhausting all C(n,k) column subsets.
/// A rank-deficient subset (rho_min below 1e-13 * rho_max) yields an
/// infinite ratio with the witnessing subset, not an error.
RipEvaluation rip_evaluate(const Matrix& M, int k, double budget = kDefaultBudget);

/// Largest absolute normalized inner product between distinct columns.
double coherence(const Matrix& M);

struct EtfReport {
    bool unit_norm = false;    // max | ||a_i|| - 1 | <= tol
    bool equiangular = false;  // spread of |<a_i, a_j>| <= tol
    bool tight = false;        // max | (M M^T - (n/m) I)_{ij} | <= tol
    bool is_etf = false;
    double max_norm_dev = 0.0;
    double angle_spread = 0.0;
    double tightness_dev = 0.0;
};

EtfReport etf_check(const Matrix& M, double tol);

/// Geometric mean of the exact RIP ratio over seeded Gaussian draws.
/// Trial t uses the substream derived from (seed, t), so a parallel
/// partition of trials would see identical matrices.
double gaussian_baseline(const ProblemSize& ps, long trials, std::uint64_t seed,
                         double budget = kDefaultBudget);

struct SpectraSample {
    long n = 0;
    long m = 0;
    long k = 0;
    long count = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<double>> spectra;  // squared singular values, descending
};

/// Uniform i.i.d. k-subset draws (with replacement across draws, Floyd
/// sampling per draw); each spectrum is the squared singular values of the
/// selected submatrix.
SpectraSample sample_submatrix_spectra(const Matrix& M, int k, long count,
                                       std::uint64_t seed);

struct HistogramData {
    int sv_index = 0;  // 1-based: which singular value
    std::vector<double> bin_edges;
    std::vector<long> counts;
    double root_marker = 0.0;  // matching root of the host's spectral polynomial
    bool degenerate = false;   // all samples equal; single-bin fallback
};

HistogramData histogram(const SpectraSample& sample, int sv_index, int bins,
                        const Spectrum& host_spectrum, long n);

}  // namespace ripbound
