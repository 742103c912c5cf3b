#pragma once

#include <optional>

#include "ripbound/realpoly.hpp"

namespace ripbound {

/// A compressed-sensing problem instance {n, m, k}: signal length n,
/// measurement count m, sparsity order k.
struct ProblemSize {
    long n = 0;
    long m = 0;
    long k = 0;
};

struct SpectrumBound {
    double r1_sq;   // largest polynomial root
    double rk_sq;   // smallest polynomial root
    double ratio;   // r1_sq / rk_sq
};

/// Lower bound on the RIP ratio from the extreme roots of the unit-spectrum
/// polynomial. Identically 1 for k = 1 (any equi-normed matrix attains it).
double structural_bound(const ProblemSize& ps);

/// Spectrum-aware lower bound; reduces to structural_bound for a constant
/// spectrum, and exceeds it otherwise.
SpectrumBound structural_bound_spectrum(long n, long k, const Spectrum& s);

/// Closed form at k=2: (1+W)/(1-W) with W = sqrt((n-m)/(m(n-1))).
double structural_bound_k2_closed(long n, long m);

/// n -> infinity limit of the k=2 bound: (1+1/sqrt(m))^2 / (1-1/m).
double structural_bound_k2_limit(long m);

/// n-independent cap on the structural bound: (mk)^k (m-k)!/m!,
/// evaluated in log space.
double structural_ratio_cap(long m, long k);

/// c_m(beta) = integral of sin^{m-2} over [0, beta], by the standard
/// power-reduction recurrence.
double cap_integral(long m, double beta);

/// Unique theta in (0, pi) with c_m(theta) = c_m(pi)/n.
double solve_cap_angle(long n, long m);

/// Converse bound q1 = cot^2(theta) for k=2. Values below 1 are vacuous
/// (reported as-is; bound_report flags them non-binding).
double packing_bound(long n, long m);

/// Achievable bound q2 = cot^2(theta/2) for k=2; always >= max(q1, 1).
double covering_bound(long n, long m);

/// Welch lower bound on coherence: sqrt((n-m)/(m(n-1))).
double welch_coherence_bound(long n, long m);

/// Upper bound on min_p s_{p,k}^2 / S_1^2: the least root of the
/// unit-spectrum polynomial.
double welch_extension_bound(long n, long m, long k);

/// delta implied by a ratio under optimal rescaling: (R-1)/(R+1).
double ratio_to_delta(double ratio);

struct ScalingResult {
    double a;            // optimal scale factor
    double delta_prime;  // isometry constant of the rescaled matrix
};

/// Scale factor a = 2/(2+eps2-eps1) equalizing the two one-sided isometry
/// defects, and the resulting delta' = (eps1+eps2)/(2+eps2-eps1).
ScalingResult optimal_scaling(double eps1, double eps2);

struct BoundReport {
    ProblemSize ps;
    double structural = 0.0;
    double cap = 0.0;
    double welch_extension_rk2 = 0.0;
    double delta_equiv_structural = 0.0;
    std::optional<double> packing;          // k=2 only
    bool packing_binding = false;           // q1 >= 1
    std::optional<double> covering;         // k=2 only
    std::optional<double> k2_limit;         // k=2 only
    std::optional<double> welch_coherence;  // k=2 only
};

/// Every applicable bound for one problem size.
BoundReport bound_report(const ProblemSize& ps);

}  // namespace ripbound
