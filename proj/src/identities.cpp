#include "ripbound/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ripbound/realpoly.hpp"
#include "ripbound/rng.hpp"
#include "ripbound/subsets.hpp"

namespace ripbound {

namespace {

// Dense polynomial, ascending coefficients c[0] + c[1] x + ...
using Poly = std::vector<double>;

Poly poly_from_roots(const std::vector<double>& roots) {
    const int d = static_cast<int>(roots.size());
    const std::vector<double> e = elementary_symmetric(roots, d);
    Poly p(d + 1);
    for (int j = 0; j <= d; ++j) {
        const int r = d - j;
        p[j] = ((r % 2 == 0) ? 1.0 : -1.0) * e[r];
    }
    return p;
}

Poly poly_derivative(Poly p, long times) {
    for (long t = 0; t < times; ++t) {
        if (p.size() <= 1) return {0.0};
        Poly d(p.size() - 1);
        for (std::size_t j = 1; j < p.size(); ++j)
            d[j - 1] = p[j] * static_cast<double>(j);
        p = std::move(d);
    }
    return p;
}

// Multiply (shift >= 0) or divide (shift < 0) by x^|shift|. Division is
// exact when the dropped low-order coefficients vanish; roundoff residue
// up to 1e-9 of the largest coefficient is tolerated.
Poly poly_shift(const Poly& p, long shift) {
    if (shift >= 0) {
        Poly out(p.size() + shift, 0.0);
        std::copy(p.begin(), p.end(), out.begin() + shift);
        return out;
    }
    const long drop = -shift;
    double scale = 0.0;
    for (double c : p) scale = std::max(scale, std::abs(c));
    for (long j = 0; j < drop && j < static_cast<long>(p.size()); ++j)
        if (std::abs(p[j]) > 1e-9 * scale)
            throw ContractViolation("polynomial is not divisible by x^" +
                                    std::to_string(drop));
    if (static_cast<long>(p.size()) <= drop) return {0.0};
    return Poly(p.begin() + drop, p.end());
}

void accumulate(Poly& acc, const Poly& term) {
    if (acc.size() < term.size()) acc.resize(term.size(), 0.0);
    for (std::size_t j = 0; j < term.size(); ++j) acc[j] += term[j];
}

ResidualReport compare_polys(const std::string& name, const Poly& lhs, const Poly& rhs) {
    ResidualReport rep;
    rep.identity_name = name;
    const std::size_t len = std::max(lhs.size(), rhs.size());
    for (std::size_t j = 0; j < len; ++j) {
        const double a = j < lhs.size() ? lhs[j] : 0.0;
        const double b = j < rhs.size() ? rhs[j] : 0.0;
        rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(a - b));
        rep.scale = std::max(rep.scale, std::max(std::abs(a), std::abs(b)));
    }
    rep.relative_residual =
        rep.scale > 0.0 ? rep.max_abs_residual / rep.scale : rep.max_abs_residual;
    return rep;
}

std::vector<double> squared_spectrum(const Matrix& M) {
    const Spectrum s = singular_values(M);
    std::vector<double> sq(s.size());
    for (int i = 0; i < s.size(); ++i) sq[i] = s[i] * s[i];
    return sq;
}

std::vector<double> slice_squared_spectrum(const Matrix& G, const std::vector<int>& subset) {
    const int k = static_cast<int>(subset.size());
    Matrix slice(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            slice(i, j) = slice(j, i) = G(subset[i], subset[j]);
    SymmetricEigen eig = symmetric_eigen(slice);
    for (double& v : eig.values) v = std::max(0.0, v);
    return eig.values;
}

}  // namespace

ResidualReport thompson_residual(const Matrix& M, int k, double budget,
                                 bool corrupt_leading_constant) {
    const int m = M.rows();
    const int n = M.cols();
    if (k < 1 || k > n) throw ContractViolation("thompson_residual requires 1 <= k <= cols");
    if (m >= n) throw ContractViolation("thompson_residual requires rows < cols");
    const double total = binomial(n, k);
    if (total > budget)
        throw BudgetExceeded("C(n,k) = " + std::to_string(total) + " exceeds budget");

    // LHS: C(n,k) times the monic polynomial from the full spectrum
    const std::vector<double> sq = squared_spectrum(M);
    const std::vector<double> monic = derivative_poly_monic_coeffs(n, k, sq);
    double constant = binomial(n, k);
    if (corrupt_leading_constant) constant = 1.0 / constant;
    Poly lhs(k + 1);
    for (int j = 0; j < k; ++j) lhs[j] = constant * monic[j];
    lhs[k] = constant;

    // RHS: sum over all k-column submatrices of their singular-value polynomials
    const Matrix G = gram(M);
    Poly rhs(k + 1, 0.0);
    KSubsetEnumerator en(n, k);
    std::vector<int> s;
    while (en.next(s)) accumulate(rhs, poly_from_roots(slice_squared_spectrum(G, s)));

    return compare_polys("thompson", lhs, rhs);
}

ResidualReport thompson_general_residual(const Matrix& M, int l, int k, double budget) {
    const int m = M.rows();
    const int n = M.cols();
    if (l < 1 || l > m) throw ContractViolation("requires 1 <= l <= rows");
    if (k < 1 || k > n) throw ContractViolation("requires 1 <= k <= cols");
    const double total = binomial(m, l) * binomial(n, k);
    if (total > budget)
        throw BudgetExceeded("C(m,l)*C(n,k) = " + std::to_string(total) + " exceeds budget");

    // RHS: D^{m-l}[ x^{m-k} D^{n-k}[ x^{n-min(m,n)} f(x) ] ] / ((m-l)! (n-k)!)
    const int d = std::min(m, n);
    Poly f = poly_from_roots(squared_spectrum(M));
    Poly inner = poly_derivative(poly_shift(f, n - d), n - k);
    Poly rhs = poly_derivative(poly_shift(inner, static_cast<long>(m) - k), m - l);
    double norm = 1.0;
    for (int t = 2; t <= m - l; ++t) norm *= t;
    for (int t = 2; t <= n - k; ++t) norm *= t;
    for (double& c : rhs) c /= norm;

    // LHS: sum over l x k submatrices of x^{l-min(l,k)} f_p(x)
    Poly lhs(static_cast<std::size_t>(l) + 1, 0.0);
    const int mu = std::min(l, k);
    KSubsetEnumerator rows_en(m, l);
    std::vector<int> rs;
    while (rows_en.next(rs)) {
        KSubsetEnumerator cols_en(n, k);
        std::vector<int> cs;
        while (cols_en.next(cs)) {
            const Matrix sub = submatrix(M, rs, cs);
            const Spectrum sv = singular_values(sub);
            std::vector<double> sq(mu);
            for (int i = 0; i < mu; ++i) sq[i] = sv[i] * sv[i];
            accumulate(lhs, poly_shift(poly_from_roots(sq), l - mu));
        }
    }

    return compare_polys("thompson_general", lhs, rhs);
}

double root_sensitivity(const Spectrum& s, long n, long k, int i, int j) {
    const long m = s.size();
    if (i < 1 || i > k) throw ContractViolation("root index i must lie in [1, k]");
    if (j < 1 || j > m) throw ContractViolation("spectrum index j must lie in [1, m]");

    const RealRootedPoly g = spectral_poly(n, k, s);
    if (k == 1) return 1.0 / static_cast<double>(n);

    const RootSet roots = real_roots(g);
    const double r = roots.roots[i - 1];
    for (int t = 0; t < static_cast<int>(roots.roots.size()); ++t) {
        if (t == i - 1) continue;
        if (std::abs(roots.roots[t] - r) <= 1e-8 * g.domain_hi)
            throw ContractViolation("root " + std::to_string(i) +
                                    " is not simple; sensitivity undefined");
    }

    // numerator: monic D^{n-k}[G/(x - S_j^2)], via the same coefficient route
    // with the j-th value removed and (n-1, k-1) in place of (n, k)
    std::vector<double> sq_rest;
    sq_rest.reserve(m - 1);
    for (int t = 0; t < m; ++t)
        if (t != j - 1) sq_rest.push_back(s[t] * s[t]);
    const std::vector<double> num_coeffs = derivative_poly_monic_coeffs(n - 1, k - 1, sq_rest);

    double num = 1.0;  // monic leading term of degree k-1
    for (int t = static_cast<int>(k) - 2; t >= 0; --t) num = num * r + num_coeffs[t];

    const RealRootedPoly dg = differentiate(g);
    const double den = dg.eval(r);

    return num / den / static_cast<double>(n);
}

double euler_residual(const Spectrum& s, long n, long k, int i) {
    if (i < 1 || i > k) throw ContractViolation("root index i must lie in [1, k]");
    const RealRootedPoly g = spectral_poly(n, k, s);
    const RootSet roots = real_roots(g);
    const double r = roots.roots[i - 1];
    double acc = 0.0;
    for (int j = 1; j <= s.size(); ++j)
        acc += s[j - 1] * s[j - 1] * root_sensitivity(s, n, k, i, j);
    return std::abs(acc - r);
}

double q_volume(const std::vector<double>& semi_axes, int q) {
    if (q < 0 || q > static_cast<int>(semi_axes.size()))
        throw ContractViolation("q must lie in [0, number of semi-axes]");
    std::vector<double> sq(semi_axes.size());
    for (std::size_t i = 0; i < semi_axes.size(); ++i) {
        if (semi_axes[i] <= 0.0) throw ContractViolation("semi-axes must be positive");
        sq[i] = semi_axes[i] * semi_axes[i];
    }
    return std::sqrt(elementary_symmetric(sq, q)[q]);
}

ResidualReport gpt_residual(const Matrix& M, int k, int q, double budget) {
    const int m = M.rows();
    const int n = M.cols();
    if (!(1 <= q && q <= k && k <= m && m < n))
        throw ContractViolation("gpt_residual requires 1 <= q <= k <= m < n");
    const double total = binomial(n, k);
    if (total > budget)
        throw BudgetExceeded("C(n,k) = " + std::to_string(total) + " exceeds budget");

    const std::vector<double> sq = squared_spectrum(M);
    const double lhs = binomial(n - q, k - q) * elementary_symmetric(sq, q)[q];

    const Matrix G = gram(M);
    double rhs = 0.0;
    KSubsetEnumerator en(n, k);
    std::vector<int> s;
    while (en.next(s)) {
        const std::vector<double> lam = slice_squared_spectrum(G, s);
        rhs += elementary_symmetric(lam, q)[q];
    }

    ResidualReport rep;
    rep.identity_name = "gpt";
    rep.max_abs_residual = std::abs(lhs - rhs);
    rep.scale = std::abs(lhs);
    rep.relative_residual =
        rep.scale > 0.0 ? rep.max_abs_residual / rep.scale : rep.max_abs_residual;
    return rep;
}

MinimalityReport minimality_check(long n, long m, long k, long trials, std::uint64_t seed) {
    if (trials < 1) throw ContractViolation("minimality_check requires trials >= 1");
    const double base = structural_bound({n, m, k});

    MinimalityReport rep;
    rep.trials = trials;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (long t = 0; t < trials; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        std::vector<double> vals(m);
        for (long i = 0; i < m; ++i) vals[i] = rng.uniform(0.5, 2.0);
        std::sort(vals.begin(), vals.end(), std::greater<>());
        const SpectrumBound sb = structural_bound_spectrum(n, k, Spectrum(vals));
        const double margin = sb.ratio - base;
        rep.worst_margin = std::min(rep.worst_margin, margin);
        if (margin < -1e-12) ++rep.violations;
    }
    rep.pass = rep.violations == 0;
    return rep;
}

}  // namespace ripbound
