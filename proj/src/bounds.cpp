#include "ripbound/bounds.hpp"

#include <cmath>
#include <string>

#include "ripbound/errors.hpp"

namespace ripbound {

namespace {

void require_structural(long n, long m, long k) {
    if (!(0 < k && k <= m && m < n))
        throw ContractViolation("problem size requires 0 < k <= m < n, got n=" +
                                std::to_string(n) + ", m=" + std::to_string(m) +
                                ", k=" + std::to_string(k));
}

}  // namespace

double structural_bound(const ProblemSize& ps) {
    require_structural(ps.n, ps.m, ps.k);
    if (ps.k == 1) return 1.0;  // single root; any equi-normed matrix attains it
    const RootSet rs = real_roots(structural_poly(ps.n, ps.m, ps.k));
    return rs.roots.front() / rs.roots.back();
}

SpectrumBound structural_bound_spectrum(long n, long k, const Spectrum& s) {
    const RealRootedPoly g = spectral_poly(n, k, s);
    if (k == 1) {
        const double r = -g.coeffs[0];
        return {r, r, 1.0};
    }
    const RootSet rs = real_roots(g);
    return {rs.roots.front(), rs.roots.back(), rs.roots.front() / rs.roots.back()};
}

double structural_bound_k2_closed(long n, long m) {
    if (!(2 <= m && m < n))
        throw ContractViolation("closed form requires 2 <= m < n");
    const double w = std::sqrt(static_cast<double>(n - m) /
                               (static_cast<double>(m) * static_cast<double>(n - 1)));
    return (1.0 + w) / (1.0 - w);
}

double structural_bound_k2_limit(long m) {
    if (m < 2) throw ContractViolation("limit requires m >= 2");
    const double im = 1.0 / std::sqrt(static_cast<double>(m));
    return (1.0 + im) * (1.0 + im) / (1.0 - 1.0 / static_cast<double>(m));
}

double structural_ratio_cap(long m, long k) {
    if (!(0 < k && k <= m)) throw ContractViolation("cap requires 0 < k <= m");
    const double log_cap = static_cast<double>(k) * std::log(static_cast<double>(m * k)) +
                           std::lgamma(static_cast<double>(m - k + 1)) -
                           std::lgamma(static_cast<double>(m + 1));
    return std::exp(log_cap);
}

double cap_integral(long m, double beta) {
    if (m < 2) throw ContractViolation("cap_integral requires m >= 2");
    if (!(beta >= 0.0 && beta <= 3.14159265358979323851))
        throw ContractViolation("beta must lie in [0, pi]");
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    // J_p = -cos(b) sin^{p-1}(b)/p + (p-1)/p J_{p-2}; J_0 = b, J_1 = 1-cos(b)
    double j_even = beta;       // J_0
    double j_odd = 1.0 - c;     // J_1
    const long p_top = m - 2;
    if (p_top == 0) return j_even;
    if (p_top == 1) return j_odd;
    double result = 0.0;
    for (long p = 2; p <= p_top; ++p) {
        double& prev = (p % 2 == 0) ? j_even : j_odd;
        const double sin_pm1 = std::pow(s, static_cast<double>(p - 1));
        prev = -c * sin_pm1 / static_cast<double>(p) +
               (static_cast<double>(p - 1) / static_cast<double>(p)) * prev;
        result = prev;
    }
    return result;
}

double solve_cap_angle(long n, long m) {
    if (n < 2 || m < 2) throw ContractViolation("solve_cap_angle requires n, m >= 2");
    const double pi = 3.14159265358979323846;
    const double total = cap_integral(m, pi);
    const double target = total / static_cast<double>(n);

    // Bisect down to the 1e-15 bracket width; the residual then sits far
    // below the promised 1e-12 * c_m(pi).
    double lo = 0.0, hi = pi;
    double theta = 0.5 * pi;
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-15; ++iter) {
        theta = 0.5 * (lo + hi);
        const double v = cap_integral(m, theta) - target;
        if (v == 0.0) break;
        if (v < 0.0)
            lo = theta;
        else
            hi = theta;
    }
    return theta;
}

double packing_bound(long n, long m) {
    const double theta = solve_cap_angle(n, m);
    const double t = std::tan(theta);
    return 1.0 / (t * t);
}

double covering_bound(long n, long m) {
    const double theta = solve_cap_angle(n, m);
    const double t = std::tan(0.5 * theta);
    return 1.0 / (t * t);
}

double welch_coherence_bound(long n, long m) {
    if (!(0 < m && m < n)) throw ContractViolation("Welch bound requires 0 < m < n");
    return std::sqrt(static_cast<double>(n - m) /
                     (static_cast<double>(m) * static_cast<double>(n - 1)));
}

double welch_extension_bound(long n, long m, long k) {
    require_structural(n, m, k);
    const RootSet rs = real_roots(structural_poly(n, m, k));
    return rs.roots.back();
}

double ratio_to_delta(double ratio) {
    if (!(ratio >= 1.0)) throw ContractViolation("ratio must be >= 1");
    if (std::isinf(ratio)) return 1.0;
    return (ratio - 1.0) / (ratio + 1.0);
}

ScalingResult optimal_scaling(double eps1, double eps2) {
    if (eps1 > 1.0) throw ContractViolation("eps1 must be <= 1");
    if (!(1.0 + eps2 > 0.0)) throw ContractViolation("1 + eps2 must be positive");
    const double denom = 2.0 + eps2 - eps1;
    if (!(denom > 0.0)) throw ContractViolation("degenerate scaling denominator");
    return {2.0 / denom, (eps1 + eps2) / denom};
}

BoundReport bound_report(const ProblemSize& ps) {
    require_structural(ps.n, ps.m, ps.k);
    BoundReport rep;
    rep.ps = ps;
    rep.structural = structural_bound(ps);
    rep.cap = structural_ratio_cap(ps.m, ps.k);
    rep.welch_extension_rk2 = welch_extension_bound(ps.n, ps.m, ps.k);
    rep.delta_equiv_structural = ratio_to_delta(rep.structural);
    if (ps.k == 2) {
        rep.packing = packing_bound(ps.n, ps.m);
        rep.packing_binding = *rep.packing >= 1.0;
        rep.covering = covering_bound(ps.n, ps.m);
        rep.k2_limit = structural_bound_k2_limit(ps.m);
        rep.welch_coherence = welch_coherence_bound(ps.n, ps.m);
    }
    return rep;
}

}  // namespace ripbound
