#include "ripbound/realpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "ripbound/errors.hpp"

namespace ripbound {

double RealRootedPoly::eval(double x) const {
    double acc = 1.0;  // leading monic term
    for (int j = degree - 1; j >= 0; --j) acc = acc * x + coeffs[j];
    return acc;
}

std::vector<double> elementary_symmetric(const std::vector<double>& vals, int r_max) {
    if (r_max < 0 || r_max > static_cast<int>(vals.size()))
        throw ContractViolation("elementary_symmetric requires 0 <= r_max <= len(vals)");
    std::vector<double> e(r_max + 1, 0.0);
    e[0] = 1.0;
    int seen = 0;
    for (double v : vals) {
        ++seen;
        for (int r = std::min(r_max, seen); r >= 1; --r) e[r] += v * e[r - 1];
    }
    return e;
}

std::vector<double> derivative_poly_monic_coeffs(long n, long k,
                                                 const std::vector<double>& squared_values) {
    if (k < 1 || k > n)
        throw ContractViolation("derivative polynomial requires 1 <= k <= n");
    const long w = static_cast<long>(squared_values.size());
    if (w > n) throw ContractViolation("more prescribed values than the ambient dimension");

    const int e_top = static_cast<int>(std::min(k, w));
    const std::vector<double> e = elementary_symmetric(squared_values, e_top);

    std::vector<double> c(k, 0.0);
    for (long j = 0; j < k; ++j) {
        const long r = k - j;
        if (r > w) continue;  // e_r vanishes
        // [k!/j!] / [n!/(n-k+j)!] as interleaved ratios to keep partial
        // products bounded
        double factor = 1.0;
        for (long t = 0; t < r; ++t)
            factor *= static_cast<double>(k - t) / static_cast<double>(n - t);
        const double sign = (r % 2 == 0) ? 1.0 : -1.0;
        c[j] = sign * e[static_cast<int>(r)] * factor;
    }
    return c;
}

RealRootedPoly structural_poly(long n, long m, long k) {
    if (!(0 < k && k <= m && m < n))
        throw ContractViolation("structural polynomial requires 0 < k <= m < n");

    RealRootedPoly p;
    p.degree = static_cast<int>(k);
    p.coeffs.assign(k, 0.0);
    p.domain_lo = 0.0;
    p.domain_hi = 1.0;
    p.provenance = PolyProvenance::structural;
    p.n = n;
    p.m = m;

    for (long j = 0; j < k; ++j) {
        const long r = k - j;
        if (r > m) continue;
        // C(m,r) * [k!/j!] / [n!/(n-k+j)!], factors interleaved
        double prod = 1.0;
        for (long t = 0; t < r; ++t) {
            prod *= static_cast<double>(m - t) / static_cast<double>(n - t);
            prod *= static_cast<double>(k - t) / static_cast<double>(r - t);
        }
        p.coeffs[j] = ((r % 2 == 0) ? 1.0 : -1.0) * prod;
    }
    p.edge_multiplicity = static_cast<int>(std::max(0L, m - (n - k)));
    return p;
}

RealRootedPoly spectral_poly(long n, long k, const Spectrum& s) {
    const long m = s.size();
    if (!(0 < k && k <= m && m < n))
        throw ContractViolation("spectral polynomial requires 0 < k <= len(S) < n");
    std::vector<double> sq(m);
    for (long i = 0; i < m; ++i) {
        if (s[static_cast<int>(i)] <= 0.0)
            throw ContractViolation("spectral polynomial requires positive singular values");
        sq[i] = s[static_cast<int>(i)] * s[static_cast<int>(i)];
    }

    RealRootedPoly p;
    p.degree = static_cast<int>(k);
    p.coeffs = derivative_poly_monic_coeffs(n, k, sq);
    p.domain_lo = 0.0;
    p.domain_hi = sq[0];
    p.provenance = PolyProvenance::spectral;
    p.n = n;
    p.m = m;
    long ties = 0;  // prescribed values exactly equal to the largest
    for (long i = 0; i < m; ++i)
        if (sq[i] == sq[0]) ++ties;
    p.edge_multiplicity = static_cast<int>(std::max(0L, ties - (n - k)));
    return p;
}

RealRootedPoly differentiate(const RealRootedPoly& p) {
    if (p.degree < 2)
        throw ContractViolation("cannot differentiate below degree 2 in monic form");
    RealRootedPoly d = p;
    d.degree = p.degree - 1;
    d.coeffs.assign(d.degree, 0.0);
    for (int j = 1; j < p.degree; ++j)
        d.coeffs[j - 1] = p.coeffs[j] * static_cast<double>(j) / p.degree;
    d.edge_multiplicity = std::max(0, p.edge_multiplicity - 1);
    return d;
}

namespace {

// Compensated Horner (error-free transformations). The monic coefficient
// basis is badly conditioned at degree ~15+: near a root the residual is
// orders of magnitude below the coefficient scale, and plain Horner noise
// would cap root accuracy near 1e-8. This evaluates as if in doubled
// precision at ~4x the cost.
double eval_monic(const std::vector<double>& c, int degree, double x) {
    double s = 1.0;
    double r = 0.0;
    for (int j = degree - 1; j >= 0; --j) {
        const double p = s * x;
        const double pi = std::fma(s, x, -p);
        s = p + c[j];
        const double z = s - p;
        const double sigma = (p - (s - z)) + (c[j] - z);
        r = r * x + (pi + sigma);
    }
    return s + r;
}

// One root in [a, b] with f(a), f(b) of opposite sign (or zero at an end).
// Bisection to a narrow bracket, then a short secant polish.
double bisect_root(const std::vector<double>& c, int degree, double a, double b,
                   double fa, double fb, double width_tol) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    for (int iter = 0; iter < 200 && (b - a) > width_tol; ++iter) {
        const double mid = 0.5 * (a + b);
        const double fm = eval_monic(c, degree, mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    // secant polish
    double x0 = a, f0 = fa, x1 = b, f1 = fb;
    for (int iter = 0; iter < 5; ++iter) {
        const double denom = f1 - f0;
        if (denom == 0.0) break;
        double x2 = x1 - f1 * (x1 - x0) / denom;
        if (!(x2 >= a && x2 <= b)) x2 = 0.5 * (x0 + x1);
        const double f2 = eval_monic(c, degree, x2);
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
        if (f2 == 0.0) break;
    }
    return x1;
}

std::string coeffs_to_string(const std::vector<double>& c, int degree) {
    std::ostringstream os;
    os << "monic degree " << degree << ", coeffs low-to-high [";
    for (int j = 0; j < degree; ++j) {
        if (j) os << ", ";
        os << c[j];
    }
    os << "]";
    return os.str();
}

// Roots ascending. Recursion: roots of the monic derivative delimit
// monotone pieces of p; each piece holds exactly one root (all-real-root
// guarantee), either strictly inside with a sign change or at a
// derivative-root endpoint when the piece is tangent there.
void roots_ascending(const std::vector<double>& c, int degree, double lo, double hi,
                     std::vector<double>& out) {
    if (degree == 1) {
        out.assign(1, -c[0]);
        return;
    }

    std::vector<double> dc(degree - 1);
    for (int j = 1; j < degree; ++j)
        dc[j - 1] = c[j] * static_cast<double>(j) / degree;
    std::vector<double> droots;
    roots_ascending(dc, degree - 1, lo, hi, droots);

    std::vector<double> nodes;
    nodes.reserve(degree + 1);
    nodes.push_back(lo);
    for (double r : droots) nodes.push_back(std::clamp(r, lo, hi));
    nodes.push_back(hi);

    double max_abs_coeff = 1.0;
    for (int j = 0; j < degree; ++j) max_abs_coeff = std::max(max_abs_coeff, std::abs(c[j]));
    const double zero_tol = 1e-12 * max_abs_coeff;
    const double width_tol = 1e-13 * hi;

    out.clear();
    out.reserve(degree);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const double a = nodes[i];
        const double b = nodes[i + 1];
        const double fa = eval_monic(c, degree, a);
        const double fb = eval_monic(c, degree, b);
        if (b - a <= width_tol) {
            // degenerate piece from a repeated derivative root
            if (std::min(std::abs(fa), std::abs(fb)) <= zero_tol) {
                out.push_back(std::abs(fa) <= std::abs(fb) ? a : b);
                continue;
            }
            throw RootIsolationError("degenerate interval without a root; " +
                                     coeffs_to_string(c, degree));
        }
        if ((fa > 0.0) != (fb > 0.0) || fa == 0.0 || fb == 0.0) {
            out.push_back(bisect_root(c, degree, a, b, fa, fb, width_tol));
            continue;
        }
        // no sign change: tangency at a derivative-root endpoint
        if (std::min(std::abs(fa), std::abs(fb)) <= zero_tol) {
            out.push_back(std::abs(fa) <= std::abs(fb) ? a : b);
            continue;
        }
        throw RootIsolationError("bracket failure on [" + std::to_string(a) + ", " +
                                 std::to_string(b) + "]; " + coeffs_to_string(c, degree));
    }
}

// Divides the monic polynomial by (x - h); the caller guarantees h is a
// root. Runs from the constant term up (h is the largest root, for which
// the backward direction is the stable one) and discards the computed
// leading coefficient, which equals 1 up to the division residual.
std::vector<double> deflate_at(const std::vector<double>& c, int degree, double h) {
    std::vector<double> q(degree - 1);
    if (degree < 2) return q;
    q[0] = -c[0] / h;
    for (int j = 1; j <= degree - 2; ++j) q[j] = (q[j - 1] - c[j]) / h;
    return q;
}

}  // namespace

RootSet real_roots(const RealRootedPoly& p) {
    if (p.degree < 1) throw ContractViolation("polynomial must have degree >= 1");

    const int mult = std::min(p.edge_multiplicity, p.degree);
    std::vector<double> work = p.coeffs;
    int degree = p.degree;
    for (int t = 0; t < mult; ++t) {
        work = deflate_at(work, degree, p.domain_hi);
        --degree;
    }

    std::vector<double> asc;
    if (degree >= 1) roots_ascending(work, degree, p.domain_lo, p.domain_hi, asc);

    RootSet rs;
    rs.roots.reserve(p.degree);
    for (int t = 0; t < mult; ++t) rs.roots.push_back(p.domain_hi);
    rs.roots.insert(rs.roots.end(), asc.rbegin(), asc.rend());
    return rs;
}

}  // namespace ripbound
