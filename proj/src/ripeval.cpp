#include "ripbound/ripeval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ripbound/rng.hpp"
#include "ripbound/subsets.hpp"

namespace ripbound {

bool RipEvaluation::is_infinite() const { return std::isinf(ratio); }

namespace {

void gram_slice(const Matrix& G, const std::vector<int>& subset, Matrix& out) {
    const int k = static_cast<int>(subset.size());
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) out(i, j) = out(j, i) = G(subset[i], subset[j]);
}

// Extreme eigenvalues of a k x k Gram slice; closed forms for k <= 2.
void slice_extremes(const Matrix& G, const std::vector<int>& subset, Matrix& scratch,
                    double& lam_max, double& lam_min) {
    const int k = static_cast<int>(subset.size());
    if (k == 1) {
        lam_max = lam_min = G(subset[0], subset[0]);
        return;
    }
    if (k == 2) {
        const double a = G(subset[0], subset[0]);
        const double c = G(subset[1], subset[1]);
        const double b = G(subset[0], subset[1]);
        const double mid = 0.5 * (a + c);
        const double d = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
        lam_max = mid + d;
        lam_min = mid - d;
        return;
    }
    gram_slice(G, subset, scratch);
    const SymmetricEigen eig = symmetric_eigen(scratch);
    lam_max = eig.values.front();
    lam_min = eig.values.back();
}

}  // namespace

RipEvaluation rip_evaluate(const Matrix& M, int k, double budget) {
    const int m = M.rows();
    const int n = M.cols();
    if (k < 1 || k > m || k > n)
        throw ContractViolation("rip_evaluate requires 1 <= k <= min(rows, cols), got k=" +
                                std::to_string(k) + " for a " + std::to_string(m) + "x" +
                                std::to_string(n) + " matrix");

    const double total = binomial(n, k);
    if (total > budget)
        throw BudgetExceeded("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                             std::to_string(total) + " exceeds the enumeration budget of " +
                             std::to_string(budget) +
                             "; use sample_submatrix_spectra instead");

    const Matrix G = gram(M);
    Matrix scratch(k, k);

    RipEvaluation ev;
    ev.rho_max = -std::numeric_limits<double>::infinity();
    ev.rho_min = std::numeric_limits<double>::infinity();

    KSubsetEnumerator en(n, k);
    std::vector<int> s;
    while (en.next(s)) {
        double lam_max, lam_min;
        slice_extremes(G, s, scratch, lam_max, lam_min);
        if (lam_max > ev.rho_max) {
            ev.rho_max = lam_max;
            ev.argmax_subset = s;
        }
        if (lam_min < ev.rho_min) {
            ev.rho_min = lam_min;
            ev.argmin_subset = s;
        }
    }

    ev.rho_min = std::max(0.0, ev.rho_min);  // Gram slices are PSD
    if (ev.rho_min <= 1e-13 * ev.rho_max) {
        ev.ratio = std::numeric_limits<double>::infinity();
        ev.delta_k_optimal = 1.0;
    } else {
        ev.ratio = ev.rho_max / ev.rho_min;
        ev.delta_k_optimal = (ev.ratio - 1.0) / (ev.ratio + 1.0);
    }
    ev.delta_k = std::max(ev.rho_max - 1.0, 1.0 - ev.rho_min);
    return ev;
}

double coherence(const Matrix& M) {
    const int n = M.cols();
    if (n < 2) throw ContractViolation("coherence requires at least 2 columns");
    std::vector<double> norms(n);
    for (int j = 0; j < n; ++j) {
        norms[j] = M.column_norm(j);
        if (norms[j] == 0.0)
            throw ContractViolation("column " + std::to_string(j) + " has zero norm");
    }
    double mu = 0.0;
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n; ++j)
            mu = std::max(mu, std::abs(M.column_dot(i, j)) / (norms[i] * norms[j]));
    return mu;
}

EtfReport etf_check(const Matrix& M, double tol) {
    const int m = M.rows();
    const int n = M.cols();
    EtfReport rep;

    for (int j = 0; j < n; ++j)
        rep.max_norm_dev = std::max(rep.max_norm_dev, std::abs(M.column_norm(j) - 1.0));
    rep.unit_norm = rep.max_norm_dev <= tol;

    if (n >= 2) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double a = std::abs(M.column_dot(i, j));
                lo = std::min(lo, a);
                hi = std::max(hi, a);
            }
        rep.angle_spread = hi - lo;
    }
    rep.equiangular = rep.angle_spread <= tol;

    const double target = static_cast<double>(n) / static_cast<double>(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            double s = 0.0;
            for (int t = 0; t < n; ++t) s += M(i, t) * M(j, t);
            const double want = (i == j) ? target : 0.0;
            rep.tightness_dev = std::max(rep.tightness_dev, std::abs(s - want));
        }
    rep.tight = rep.tightness_dev <= tol;

    rep.is_etf = rep.unit_norm && rep.equiangular && rep.tight;
    return rep;
}

double gaussian_baseline(const ProblemSize& ps, long trials, std::uint64_t seed,
                         double budget) {
    if (trials < 1) throw ContractViolation("gaussian_baseline requires trials >= 1");
    if (!(0 < ps.k && ps.k <= ps.m && ps.m <= ps.n))
        throw ContractViolation("gaussian_baseline requires 0 < k <= m <= n");

    double log_sum = 0.0;
    for (long t = 0; t < trials; ++t) {
        const Matrix M = random_gaussian(static_cast<int>(ps.m), static_cast<int>(ps.n),
                                         Rng::derive(seed, static_cast<std::uint64_t>(t)));
        const RipEvaluation ev = rip_evaluate(M, static_cast<int>(ps.k), budget);
        if (ev.is_infinite())
            throw std::runtime_error("gaussian_baseline: trial " + std::to_string(t) +
                                     " produced a rank-deficient subset (ratio = inf)");
        log_sum += std::log(ev.ratio);
    }
    return std::exp(log_sum / static_cast<double>(trials));
}

SpectraSample sample_submatrix_spectra(const Matrix& M, int k, long count,
                                       std::uint64_t seed) {
    const int m = M.rows();
    const int n = M.cols();
    if (k < 1 || k > m) throw ContractViolation("sampling requires 1 <= k <= rows");
    if (count < 1) throw ContractViolation("sampling requires count >= 1");

    const Matrix G = gram(M);
    Matrix scratch(k, k);

    SpectraSample sample;
    sample.n = n;
    sample.m = m;
    sample.k = k;
    sample.count = count;
    sample.seed = seed;
    sample.spectra.reserve(count);

    std::vector<char> chosen(n);
    std::vector<int> subset(k);
    for (long d = 0; d < count; ++d) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(d)));
        // Floyd's sampling: uniform k-subset of {0..n-1}
        std::fill(chosen.begin(), chosen.end(), 0);
        for (int j = n - k; j < n; ++j) {
            const int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
            if (chosen[t])
                chosen[j] = 1;
            else
                chosen[t] = 1;
        }
        int idx = 0;
        for (int j = 0; j < n; ++j)
            if (chosen[j]) subset[idx++] = j;

        gram_slice(G, subset, scratch);
        SymmetricEigen eig = symmetric_eigen(scratch);
        for (double& v : eig.values) v = std::max(0.0, v);
        sample.spectra.push_back(std::move(eig.values));
    }
    return sample;
}

HistogramData histogram(const SpectraSample& sample, int sv_index, int bins,
                        const Spectrum& host_spectrum, long n) {
    if (sv_index < 1 || sv_index > sample.k)
        throw ContractViolation("sv_index must lie in [1, k]");
    if (bins < 2) throw ContractViolation("at least 2 bins required");

    HistogramData h;
    h.sv_index = sv_index;
    const RootSet roots = real_roots(spectral_poly(n, sample.k, host_spectrum));
    h.root_marker = roots.roots[sv_index - 1];

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& sp : sample.spectra) {
        const double v = sp[sv_index - 1];
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    if (hi <= lo) {
        // all samples identical: one bin of unit width around the value
        h.degenerate = true;
        h.bin_edges = {lo - 0.5, lo + 0.5};
        h.counts = {sample.count};
        return h;
    }

    h.bin_edges.resize(bins + 1);
    const double width = (hi - lo) / bins;
    for (int b = 0; b <= bins; ++b) h.bin_edges[b] = lo + width * b;
    h.bin_edges[bins] = hi;

    h.counts.assign(bins, 0);
    for (const auto& sp : sample.spectra) {
        const double v = sp[sv_index - 1];
        int b = static_cast<int>((v - lo) / width);
        b = std::clamp(b, 0, bins - 1);
        ++h.counts[b];
    }
    return h;
}

}  // namespace ripbound
