// Acceptance suite: every release gate in one binary. Each criterion
// prints exactly one PASS/FAIL line; the process exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ripbound/bounds.hpp"
#include "ripbound/identities.hpp"
#include "ripbound/realpoly.hpp"
#include "ripbound/ripeval.hpp"
#include "ripbound/rng.hpp"
#include "ripbound/subsets.hpp"

using namespace ripbound;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

double run_timed(const std::function<bool(std::string&)>& body, int number,
                 const std::string& name) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    const bool pass = body(detail);
    const auto t1 = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s; %.2fs", detail.c_str(), secs);
    report(number, name, pass, buf);
    return secs;
}

std::string fmt_worst(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "worst %.3g", v);
    return buf;
}

Matrix mb_frame() {
    const double h = std::sqrt(3.0) / 2.0;
    return Matrix::from_rows({{1.0, -0.5, -0.5}, {0.0, h, -h}});
}

// 1. closed-form agreement of the k=2 bound over m in 2..16, n in m+1..60
bool c1(std::string& detail) {
    double worst = 0.0;
    for (long m = 2; m <= 16; ++m)
        for (long n = m + 1; n <= 60; ++n) {
            const double via_roots = structural_bound({n, m, 2});
            const double closed = structural_bound_k2_closed(n, m);
            worst = std::max(worst, std::abs(via_roots - closed) / closed);
        }
    detail = fmt_worst(worst);
    return worst <= 1e-10;
}

// 2. root sum/product identities over the full grid 2 <= k < m < n <= 30
bool c2(std::string& detail) {
    double worst = 0.0;
    for (long n = 4; n <= 30; ++n)
        for (long m = 3; m < n; ++m)
            for (long k = 2; k < m; ++k) {
                const RootSet rs = real_roots(structural_poly(n, m, k));
                double sum = 0.0, prod = 1.0;
                for (double r : rs.roots) {
                    sum += r;
                    prod *= r;
                }
                const double want_sum = static_cast<double>(m) * k / n;
                const double want_prod =
                    static_cast<double>(binomial_exact(static_cast<int>(m), static_cast<int>(k))) /
                    static_cast<double>(binomial_exact(static_cast<int>(n), static_cast<int>(k)));
                worst = std::max(worst, std::abs(sum - want_sum) / want_sum);
                worst = std::max(worst, std::abs(prod - want_prod) / want_prod);
            }
    detail = fmt_worst(worst);
    return worst <= 1e-10;
}

// 3. the equiangular 3-column frame attains the bound, is an ETF, and meets
//    the coherence floor
bool c3(std::string& detail) {
    const Matrix M = mb_frame();
    const RipEvaluation ev = rip_evaluate(M, 2);
    const double sb = structural_bound({3, 2, 2});
    const bool ratio_ok =
        std::abs(ev.ratio - 3.0) <= 1e-10 * 3.0 && std::abs(sb - 3.0) <= 1e-10 * 3.0;
    const bool etf_ok = etf_check(M, 1e-10).is_etf;
    const double mu = coherence(M);
    const double welch = welch_coherence_bound(3, 2);
    const bool mu_ok = std::abs(mu - 0.5) <= 1e-12 && std::abs(welch - 0.5) <= 1e-12;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "ratio %.12f, etf %s, coherence %.12f", ev.ratio,
                  etf_ok ? "yes" : "no", mu);
    detail = buf;
    return ratio_ok && etf_ok && mu_ok;
}

// 4. closed forms of both k=2 geometric bounds at m=3 for n up to 1000
bool c4(std::string& detail) {
    double worst = 0.0;
    for (long n = 4; n <= 1000; ++n) {
        const double q1 = packing_bound(n, 3);
        const double q1_want = static_cast<double>((n - 2) * (n - 2)) / (4.0 * (n - 1));
        const double q2 = covering_bound(n, 3);
        const double q2_want = static_cast<double>(n - 1);
        worst = std::max(worst, std::abs(q1 - q1_want) / q1_want);
        worst = std::max(worst, std::abs(q2 - q2_want) / q2_want);
    }
    detail = fmt_worst(worst);
    return worst <= 1e-9;
}

// 5. both converse bounds sit below the exact ratio of random matrices
bool c5(std::string& detail) {
    const double sb = structural_bound({12, 5, 2});
    const double pb = packing_bound(12, 5);
    const bool pb_binding = pb >= 1.0;
    long violations = 0;
    double min_ratio = 1e300;
    for (int t = 0; t < 100; ++t) {
        const Matrix M = random_gaussian(5, 12, Rng::derive(424242, t));
        const double ratio = rip_evaluate(M, 2).ratio;
        min_ratio = std::min(min_ratio, ratio);
        if (sb > ratio) ++violations;
        if (pb_binding && pb > ratio) ++violations;
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "bound %.4f, min ratio %.4f, %ld violations", sb,
                  min_ratio, violations);
    detail = buf;
    return violations == 0;
}

// 6. curve behavior at m=6, k=2: Gaussian draws above the achievable bound,
//    converse crossover, monotone structural column
bool c6(std::string& detail) {
    bool gauss_above = true;
    bool monotone = true;
    double prev = 0.0;
    double worst_gap = 1e300;
    for (long n = 8; n <= 60; ++n) {
        const double structural = structural_bound({n, 6, 2});
        const double q2 = covering_bound(n, 6);
        const double geo =
            gaussian_baseline({n, 6, 2}, 200, Rng::derive(20260810, n));
        if (geo <= q2) gauss_above = false;
        worst_gap = std::min(worst_gap, geo / q2);
        if (structural < prev * (1.0 - 1e-12)) monotone = false;
        prev = structural;
    }
    const bool small_n = structural_bound({8, 6, 2}) > packing_bound(8, 6);
    const bool large_n = packing_bound(1000, 6) > structural_bound({1000, 6, 2});
    char buf[96];
    std::snprintf(buf, sizeof(buf), "min geo/covering %.2f, crossover %s", worst_gap,
                  (small_n && large_n) ? "yes" : "no");
    detail = buf;
    return gauss_above && monotone && small_n && large_n;
}

// 7. polynomial-sum identities across shapes
bool c7(std::string& detail) {
    double worst_basic = 0.0;
    std::uint64_t stream = 0;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 6}, {4, 7}})
        for (int k : {2, 3})
            for (int t = 0; t < 50; ++t) {
                const Matrix M = random_gaussian(m, n, Rng::derive(171717, stream++));
                worst_basic =
                    std::max(worst_basic, thompson_residual(M, k).relative_residual);
            }
    double worst_general = 0.0;
    for (auto [l, k] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}})
        for (int t = 0; t < 20; ++t) {
            const Matrix M = random_gaussian(3, 4, Rng::derive(181818, stream++));
            worst_general = std::max(
                worst_general, thompson_general_residual(M, l, k).relative_residual);
        }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "worst %.3g (one-sided), %.3g (two-sided)",
                  worst_basic, worst_general);
    detail = buf;
    return worst_basic <= 1e-9 && worst_general <= 1e-8;
}

// 8. root sensitivities: finite-difference match, sign, homogeneity
bool c8(std::string& detail) {
    const long n = 8, m = 4, k = 2;
    double worst_fd = 0.0, worst_euler = 0.0;
    bool sign_ok = true;
    for (int t = 0; t < 100; ++t) {
        Rng rng(Rng::derive(881188, t));
        std::vector<double> vals(m);
        for (long i = 0; i < m; ++i) vals[i] = rng.uniform(0.5, 2.0);
        std::sort(vals.begin(), vals.end(), std::greater<>());
        const Spectrum s(vals);
        const RootSet roots = real_roots(spectral_poly(n, k, s));
        for (int i = 1; i <= k; ++i) {
            for (int j = 1; j <= m; ++j) {
                const double closed = root_sensitivity(s, n, k, i, j);
                if (closed < -1e-12) sign_ok = false;
                const double h = 1e-5;
                auto root_at = [&](double delta) {
                    std::vector<double> v2(m);
                    for (long a = 0; a < m; ++a)
                        v2[a] = std::sqrt(vals[a] * vals[a] +
                                          (a == j - 1 ? delta : 0.0));
                    std::sort(v2.begin(), v2.end(), std::greater<>());
                    return real_roots(spectral_poly(n, k, Spectrum(v2))).roots[i - 1];
                };
                const double fd = (root_at(h) - root_at(-h)) / (2.0 * h);
                worst_fd = std::max(worst_fd, std::abs(fd - closed) / std::abs(closed));
            }
            worst_euler = std::max(
                worst_euler, euler_residual(s, n, k, i) / roots.roots[i - 1]);
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "fd %.3g, euler %.3g, sign %s", worst_fd,
                  worst_euler, sign_ok ? "ok" : "violated");
    detail = buf;
    return worst_fd <= 1e-6 && worst_euler <= 1e-8 && sign_ok;
}

// 9. q-wise volume identity, including the exact determinant case
bool c9(std::string& detail) {
    double worst = 0.0;
    std::uint64_t stream = 0;
    for (auto [k, q] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}, {3, 3}})
        for (int t = 0; t < 50; ++t) {
            const Matrix M = random_gaussian(3, 5, Rng::derive(991199, stream++));
            worst = std::max(worst, gpt_residual(M, k, q).relative_residual);
        }
    const ResidualReport det_case =
        gpt_residual(Matrix::from_rows({{1, 1, 0}, {0, 1, 1}}), 2, 2);
    const bool det_ok = std::abs(det_case.scale - 3.0) <= 1e-12 * 3.0 &&
                        det_case.max_abs_residual <= 1e-12 * 3.0;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "worst %.3g, det case lhs %.14f", worst,
                  det_case.scale);
    detail = buf;
    return worst <= 1e-9 && det_ok;
}

// 10. uniform spectra minimize the root ratio
bool c10(std::string& detail) {
    const MinimalityReport a = minimality_check(8, 4, 2, 1000, 10101);
    const MinimalityReport b = minimality_check(10, 6, 3, 1000, 20202);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "margins %.3g / %.3g, violations %ld",
                  a.worst_margin, b.worst_margin, a.violations + b.violations);
    detail = buf;
    return a.pass && b.pass;
}

// 11. sampled-spectrum histograms: polynomial roots track the mode bins at
//     (n,m,k) = (100,30,12) with a unit host spectrum
bool c11(std::string& detail) {
    const Matrix M = random_with_spectrum(30, 100, Spectrum::unit(30), 314159);
    const SpectraSample sample = sample_submatrix_spectra(M, 12, 25000, 271828);
    bool all_ok = true;
    std::string gaps;
    for (int i : {1, 4, 8, 12}) {
        const HistogramData h = histogram(sample, i, 50, Spectrum::unit(30), 100);
        long best = 0;
        for (std::size_t b = 1; b < h.counts.size(); ++b)
            if (h.counts[b] > h.counts[best]) best = static_cast<long>(b);
        const double width = h.bin_edges[1] - h.bin_edges[0];
        const double center = 0.5 * (h.bin_edges[best] + h.bin_edges[best + 1]);
        const double dist = std::abs(h.root_marker - center) / width;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%s%d:%.2f", gaps.empty() ? "" : " ", i, dist);
        gaps += buf;
        if (dist > 2.0) all_ok = false;
    }
    detail = "mode offsets in bin widths: " + gaps;
    return all_ok;
}

// 12. delta conversion and optimal rescaling
bool c12(std::string& detail) {
    const double conv = ratio_to_delta(std::sqrt(2.0) + 1.0);
    const bool conv_ok = std::abs(conv - (std::sqrt(2.0) - 1.0)) <= 1e-14;
    long violations = 0;
    Rng rng(616161);
    for (int t = 0; t < 1000; ++t) {
        const double eps1 = rng.uniform(-0.25, 1.0);
        const double eps2 = rng.uniform(-0.25, 1.5);
        const ScalingResult r = optimal_scaling(eps1, eps2);
        if (r.delta_prime > std::max(eps1, eps2) + 1e-12) ++violations;
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "conversion err %.3g, %ld scaling violations",
                  std::abs(conv - (std::sqrt(2.0) - 1.0)), violations);
    detail = buf;
    return conv_ok && violations == 0;
}

}  // namespace

int main() {
    double total = 0.0;
    total += run_timed(c1, 1, "k=2 closed-form agreement");
    total += run_timed(c2, 2, "root sum/product identities, n <= 30");
    total += run_timed(c3, 3, "equiangular frame attainment");
    total += run_timed(c4, 4, "m=3 packing/covering closed forms");
    total += run_timed(c5, 5, "bound sandwich on random matrices");
    total += run_timed(c6, 6, "m=6 curve: baseline gap, crossover, monotone");
    total += run_timed(c7, 7, "submatrix polynomial-sum identities");
    total += run_timed(c8, 8, "root sensitivity and homogeneity");
    total += run_timed(c9, 9, "q-wise volume identity");
    total += run_timed(c10, 10, "uniform-spectrum minimality");
    total += run_timed(c11, 11, "sampled-spectrum histogram markers");
    total += run_timed(c12, 12, "delta conversion and rescaling");
    std::printf("%d of 12 criteria passed in %.1fs\n", 12 - g_failures, total);
    return g_failures == 0 ? 0 : 1;
}
