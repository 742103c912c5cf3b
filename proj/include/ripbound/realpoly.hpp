#pragma once

#include <vector>

#include "ripbound/matrix.hpp"

namespace ripbound {

enum class PolyProvenance { structural, spectral };

/// Monic polynomial whose roots are all real and confined to
/// (domain_lo, domain_hi]. Coefficients are kept in the monic
/// normalization, where each one is a binomial-weighted product of
/// ratios bounded by 1 -- no factorials are ever materialized.
struct RealRootedPoly {
    int degree = 0;
    std::vector<double> coeffs;  // c_0..c_{degree-1}; p(x) = x^degree + sum c_j x^j
    double domain_lo = 0.0;
    double domain_hi = 1.0;
    PolyProvenance provenance = PolyProvenance::structural;
    long n = 0;  // ambient dimension used in construction
    long m = 0;  // measurement count (spectrum length)

    // Multiplicity of the root pinned at domain_hi that the construction
    // forces (m - (n-k) leftover factors after differentiation). Known
    // exactly, so the root finder can deflate it instead of bisecting
    // through the flat region around a repeated root.
    int edge_multiplicity = 0;

    double eval(double x) const;
};

struct RootSet {
    std::vector<double> roots;  // descending, all > 0
};

/// e_0..e_{r_max} by the one-pass recurrence e_r += v * e_{r-1}.
std::vector<double> elementary_symmetric(const std::vector<double>& vals, int r_max);

/// Monic coefficients of the degree-k polynomial obtained by differentiating
/// x^{n-w} * prod_l (x - v_l) exactly (n-k) times, where w = len(values).
/// Valid for any 1 <= k <= n; coefficient of x^j is
/// (-1)^{k-j} e_{k-j}(v) * [k!/j!] / [n!/(n-k+j)!], assembled as interleaved
/// factor ratios so nothing overflows for n up to 1e6.
std::vector<double> derivative_poly_monic_coeffs(long n, long k,
                                                 const std::vector<double>& squared_values);

/// Degree-k polynomial whose extreme-root ratio lower-bounds the RIP ratio
/// at problem size {n, m, k}; the unit-spectrum case. Roots lie in (0, 1].
RealRootedPoly structural_poly(long n, long m, long k);

/// Spectrum-aware variant: prescribed singular values s (unsquared).
/// Roots lie in (0, s[0]^2].
RealRootedPoly spectral_poly(long n, long k, const Spectrum& s);

/// Monic derivative; degree drops by one; the root domain is inherited.
RealRootedPoly differentiate(const RealRootedPoly& p);

/// All roots, descending, each located to ~1e-12 of domain_hi or better.
/// Recursive derivative chain + bisection on the bracketed intervals,
/// with a short secant polish.
RootSet real_roots(const RealRootedPoly& p);

}  // namespace ripbound
