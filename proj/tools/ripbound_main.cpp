// Command-line surface: bound tables, curve files, matrix certification,
// submatrix spectrum histograms, and the identity verification suite.
// All numeric output is printed at 17 significant digits so files are
// byte-identical across runs with the same flags and seed.
//
// Exit codes: 0 success, 2 bad input, 3 budget exceeded, 4 I/O failure.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ripbound/bounds.hpp"
#include "ripbound/identities.hpp"
#include "ripbound/matrix_io.hpp"
#include "ripbound/ripeval.hpp"
#include "ripbound/rng.hpp"
#include "ripbound/subsets.hpp"

namespace {

using namespace ripbound;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return format_g17(v);
}

// "START..END", "START..END:STEP", or a single integer.
struct NRange {
    long start = 0;
    long end = 0;
    long step = 1;
};

NRange parse_n_range(const std::string& text) {
    NRange r;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.start = r.end = std::stol(text);
        return r;
    }
    r.start = std::stol(text.substr(0, dots));
    std::string rest = text.substr(dots + 2);
    const auto colon = rest.find(':');
    if (colon != std::string::npos) {
        r.step = std::stol(rest.substr(colon + 1));
        rest = rest.substr(0, colon);
    }
    r.end = std::stol(rest);
    if (r.start < 1 || r.end < r.start || r.step < 1)
        throw ContractViolation("bad n range '" + text + "' (want START..END[:STEP])");
    return r;
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    if (out.empty()) throw ContractViolation("empty index list");
    return out;
}

void write_file_or_throw_io(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::ios_base::failure("write failed for '" + path + "'");
}

int cmd_bounds(long n, long m, long k) {
    const BoundReport rep = bound_report({n, m, k});
    std::ostringstream os;
    os << "structural," << fmt(rep.structural) << '\n';
    os << "cap," << fmt(rep.cap) << '\n';
    os << "welch_extension_rk2," << fmt(rep.welch_extension_rk2) << '\n';
    os << "delta_structural," << fmt(rep.delta_equiv_structural) << '\n';
    if (rep.k2_limit) os << "k2_limit," << fmt(*rep.k2_limit) << '\n';
    if (rep.welch_coherence) os << "welch_coherence," << fmt(*rep.welch_coherence) << '\n';
    if (rep.packing) {
        os << "packing," << fmt(*rep.packing) << '\n';
        os << "packing_binding," << (rep.packing_binding ? "true" : "false") << '\n';
    }
    if (rep.covering) os << "covering," << fmt(*rep.covering) << '\n';
    std::cout << os.str();
    return kExitOk;
}

int cmd_eval(const std::string& matrix_path, int k, double budget) {
    const Matrix M = read_matrix_file(matrix_path);
    const RipEvaluation ev = rip_evaluate(M, k, budget);
    const double mu = coherence(M);
    const EtfReport etf = etf_check(M, 1e-10);

    std::ostringstream os;
    os << "rho_min," << fmt(ev.rho_min) << '\n';
    os << "rho_max," << fmt(ev.rho_max) << '\n';
    os << "ratio," << fmt(ev.ratio) << '\n';
    os << "delta_k," << fmt(ev.delta_k) << '\n';
    os << "delta_k_optimal," << fmt(ev.delta_k_optimal) << '\n';
    os << "coherence," << fmt(mu) << '\n';
    os << "etf," << (etf.is_etf ? "true" : "false") << '\n';
    os << "argmax_subset,";
    for (std::size_t i = 0; i < ev.argmax_subset.size(); ++i)
        os << (i ? " " : "") << ev.argmax_subset[i];
    os << '\n';
    os << "argmin_subset,";
    for (std::size_t i = 0; i < ev.argmin_subset.size(); ++i)
        os << (i ? " " : "") << ev.argmin_subset[i];
    os << '\n';
    std::cout << os.str();
    return kExitOk;
}

int cmd_curve(long m, long k, const NRange& range, long trials, std::uint64_t seed,
              double budget, const std::string& out_path) {
    std::ostringstream os;
    os << "n,structural,packing,covering,gaussian_geomean,delta_structural\n";
    for (long n = range.start; n <= range.end; n += range.step) {
        const double structural = structural_bound({n, m, k});
        os << n << ',' << fmt(structural) << ',';
        if (k == 2) os << fmt(packing_bound(n, m));
        os << ',';
        if (k == 2) os << fmt(covering_bound(n, m));
        os << ',';
        if (trials > 0)
            os << fmt(gaussian_baseline({n, m, k}, trials,
                                        Rng::derive(seed, static_cast<std::uint64_t>(n)),
                                        budget));
        os << ',' << fmt(ratio_to_delta(structural)) << '\n';
    }
    write_file_or_throw_io(out_path, os.str());
    return kExitOk;
}

int cmd_spectra(const std::optional<std::string>& matrix_path, long n, long m, int k,
                long count, int bins, std::uint64_t seed,
                const std::vector<int>& sv_indices_flag, const std::string& out_path) {
    Matrix M(1, 1);
    Spectrum host = Spectrum::unit(1);
    if (matrix_path) {
        M = read_matrix_file(*matrix_path);
        host = singular_values(M);
    } else {
        if (n < 2 || m < 1 || m >= n)
            throw ContractViolation("generated host needs --n and --m with 1 <= m < n");
        host = Spectrum::unit(static_cast<int>(m));
        M = random_with_spectrum(static_cast<int>(m), static_cast<int>(n), host,
                                 Rng::derive(seed, 0));
    }

    const SpectraSample sample =
        sample_submatrix_spectra(M, k, count, Rng::derive(seed, 1));

    std::vector<int> sv_indices = sv_indices_flag;
    if (sv_indices.empty())
        for (int i = 1; i <= k; ++i) sv_indices.push_back(i);

    std::ostringstream os;
    os << "sv_index,bin_lo,bin_hi,count\n";
    std::vector<HistogramData> hists;
    for (int i : sv_indices) {
        hists.push_back(histogram(sample, i, bins, host, M.cols()));
        const HistogramData& h = hists.back();
        for (std::size_t b = 0; b + 1 < h.bin_edges.size(); ++b)
            os << h.sv_index << ',' << fmt(h.bin_edges[b]) << ',' << fmt(h.bin_edges[b + 1])
               << ',' << h.counts[b] << '\n';
    }
    os << '\n';
    os << "sv_index,root_marker\n";
    for (const HistogramData& h : hists)
        os << h.sv_index << ',' << fmt(h.root_marker) << '\n';

    write_file_or_throw_io(out_path, os.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify: one row per identity, PASS/FAIL against its pinned threshold
// ---------------------------------------------------------------------------

struct VerifyRow {
    std::string name;
    double residual;
    double threshold;
    bool pass;
};

VerifyRow verify_thompson(std::uint64_t seed, double budget, bool inject_fault) {
    const std::vector<std::pair<int, int>> shapes = {{2, 4}, {3, 6}, {4, 7}};
    double worst = 0.0;
    std::uint64_t stream = 0;
    for (auto [m, n] : shapes)
        for (int k : {2, 3})
            for (int t = 0; t < 50; ++t) {
                const Matrix M = random_gaussian(m, n, Rng::derive(seed, stream++));
                const ResidualReport r = thompson_residual(M, k, budget, inject_fault);
                worst = std::max(worst, r.relative_residual);
            }
    return {"thompson", worst, 1e-9, worst <= 1e-9};
}

VerifyRow verify_thompson_general(std::uint64_t seed, double budget) {
    const std::vector<std::pair<int, int>> lk = {{1, 1}, {2, 2}, {2, 3}};
    double worst = 0.0;
    std::uint64_t stream = 1000;
    for (auto [l, k] : lk)
        for (int t = 0; t < 20; ++t) {
            const Matrix M = random_gaussian(3, 4, Rng::derive(seed, stream++));
            const ResidualReport r = thompson_general_residual(M, l, k, budget);
            worst = std::max(worst, r.relative_residual);
        }
    return {"thompson_general", worst, 1e-8, worst <= 1e-8};
}

VerifyRow verify_gpt(std::uint64_t seed, double budget) {
    const std::vector<std::pair<int, int>> kq = {{2, 1}, {2, 2}, {3, 2}, {3, 3}};
    double worst = 0.0;
    std::uint64_t stream = 2000;
    for (auto [k, q] : kq)
        for (int t = 0; t < 50; ++t) {
            const Matrix M = random_gaussian(3, 5, Rng::derive(seed, stream++));
            const ResidualReport r = gpt_residual(M, k, q, budget);
            worst = std::max(worst, r.relative_residual);
        }
    return {"gpt", worst, 1e-9, worst <= 1e-9};
}

Spectrum random_spectrum(long m, Rng& rng) {
    std::vector<double> vals(m);
    for (long i = 0; i < m; ++i) vals[i] = rng.uniform(0.5, 2.0);
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return Spectrum(vals);
}

VerifyRow verify_sensitivity(std::uint64_t seed) {
    const long n = 8, m = 4, k = 2;
    double worst = 0.0;
    bool sign_ok = true;
    for (int t = 0; t < 100; ++t) {
        Rng rng(Rng::derive(seed, 3000 + t));
        const Spectrum s = random_spectrum(m, rng);
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= m; ++j) {
                const double closed = root_sensitivity(s, n, k, i, j);
                if (closed < -1e-12) sign_ok = false;
                const double h = 1e-5;
                std::vector<double> lo_vals(m), hi_vals(m);
                for (int a = 0; a < m; ++a) {
                    const double sq = s[a] * s[a];
                    lo_vals[a] = std::sqrt(sq - (a == j - 1 ? h : 0.0));
                    hi_vals[a] = std::sqrt(sq + (a == j - 1 ? h : 0.0));
                }
                std::sort(lo_vals.begin(), lo_vals.end(), std::greater<>());
                std::sort(hi_vals.begin(), hi_vals.end(), std::greater<>());
                const RootSet rlo = real_roots(spectral_poly(n, k, Spectrum(lo_vals)));
                const RootSet rhi = real_roots(spectral_poly(n, k, Spectrum(hi_vals)));
                const double fd = (rhi.roots[i - 1] - rlo.roots[i - 1]) / (2.0 * h);
                worst = std::max(worst, std::abs(fd - closed) / std::abs(closed));
            }
    }
    return {"sensitivity", worst, 1e-6, worst <= 1e-6 && sign_ok};
}

VerifyRow verify_euler(std::uint64_t seed) {
    const long n = 8, m = 4, k = 2;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        Rng rng(Rng::derive(seed, 4000 + t));
        const Spectrum s = random_spectrum(m, rng);
        const RootSet roots = real_roots(spectral_poly(n, k, s));
        for (int i = 1; i <= k; ++i)
            worst = std::max(worst, euler_residual(s, n, k, i) / roots.roots[i - 1]);
    }
    return {"euler", worst, 1e-8, worst <= 1e-8};
}

VerifyRow verify_minimality(std::uint64_t seed) {
    double worst = 0.0;
    for (auto [n, m, k] : std::vector<std::array<long, 3>>{{8, 4, 2}, {10, 6, 3}}) {
        const MinimalityReport rep = minimality_check(n, m, k, 1000, Rng::derive(seed, n));
        worst = std::max(worst, std::max(0.0, -rep.worst_margin));
    }
    return {"minimality", worst, 1e-12, worst <= 1e-12};
}

VerifyRow verify_welch_extension(std::uint64_t seed, double budget) {
    const long n = 10, m = 6, k = 3;
    const double bound = welch_extension_bound(n, m, k);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Matrix M = random_gaussian(static_cast<int>(m), static_cast<int>(n),
                                         Rng::derive(seed, 5000 + t));
        const RipEvaluation ev =
            rip_evaluate(M, static_cast<int>(k), budget);
        const Spectrum s = singular_values(M);
        const double normalized = ev.rho_min / (s[0] * s[0]);
        worst = std::max(worst, (normalized - bound) / bound);
    }
    return {"welch_extension", std::max(0.0, worst), 1e-10, worst <= 1e-10};
}

VerifyRow verify_monotonicity() {
    double worst = 0.0;
    for (long m = 3; m <= 8; ++m)
        for (long k = 2; k < m; ++k) {
            double prev = 0.0;
            for (long n = m + 1; n <= 40; ++n) {
                const double cur = structural_bound({n, m, k});
                if (n > m + 1) worst = std::max(worst, (prev - cur) / cur);  // rising in n
                prev = cur;
                if (m >= 4 && k < m - 1) {
                    const double fewer_rows = structural_bound({n, m - 1, k});
                    worst = std::max(worst, (cur - fewer_rows) / cur);  // falling in m
                }
                if (k + 1 <= m) {
                    const double higher_k = structural_bound({n, m, k + 1});
                    worst = std::max(worst, (cur - higher_k) / cur);  // rising in k
                }
            }
        }
    return {"monotonicity", std::max(0.0, worst), 1e-10, worst <= 1e-10};
}

int cmd_verify(std::uint64_t seed, double budget, bool inject_fault) {
    std::vector<VerifyRow> rows;
    rows.push_back(verify_thompson(seed, budget, inject_fault));
    rows.push_back(verify_thompson_general(seed, budget));
    rows.push_back(verify_gpt(seed, budget));
    rows.push_back(verify_sensitivity(seed));
    rows.push_back(verify_euler(seed));
    rows.push_back(verify_minimality(seed));
    rows.push_back(verify_welch_extension(seed, budget));
    rows.push_back(verify_monotonicity());

    std::ostringstream os;
    os << "identity,max_relative_residual,verdict\n";
    bool all_pass = true;
    for (const VerifyRow& r : rows) {
        os << r.name << ',' << fmt(r.residual) << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
        all_pass = all_pass && r.pass;
    }
    std::cout << os.str();
    return all_pass ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic RIP-ratio bounds and sensing-matrix certification"};
    app.require_subcommand(1);

    long n = 0, m = 0, k = 0;
    long trials = 1000, count = 25000;
    int bins = 50;
    std::uint64_t seed = 1;
    double budget = kDefaultBudget;
    double verify_budget = kIdentityBudget;
    std::string matrix_path, out_path, n_range_text, sv_indices_text;
    bool inject_fault = false;

    auto* bounds_cmd = app.add_subcommand("bounds", "Print all bounds for one problem size");
    bounds_cmd->add_option("--n", n, "signal length")->required();
    bounds_cmd->add_option("--m", m, "measurement count")->required();
    bounds_cmd->add_option("--k", k, "sparsity order")->required();

    auto* eval_cmd = app.add_subcommand("eval", "Certify a matrix from a text file");
    eval_cmd->add_option("--matrix", matrix_path, "matrix file")->required();
    eval_cmd->add_option("--k", k, "sparsity order")->required();
    eval_cmd->add_option("--budget", budget, "max C(n,k) subsets");

    auto* curve_cmd = app.add_subcommand("curve", "Bounds and Gaussian baseline over an n range");
    curve_cmd->add_option("--m", m, "measurement count")->required();
    curve_cmd->add_option("--k", k, "sparsity order")->required();
    curve_cmd->add_option("--n", n_range_text, "n range START..END[:STEP]")->required();
    curve_cmd->add_option("--trials", trials, "Gaussian draws per n (0 skips the column)");
    curve_cmd->add_option("--seed", seed, "random seed");
    curve_cmd->add_option("--budget", budget, "max C(n,k) subsets");
    curve_cmd->add_option("--out", out_path, "output CSV path")->required();

    auto* spectra_cmd = app.add_subcommand("spectra", "Histogram sampled submatrix spectra");
    spectra_cmd->add_option("--matrix", matrix_path, "host matrix file");
    spectra_cmd->add_option("--n", n, "signal length for a generated unit-spectrum host");
    spectra_cmd->add_option("--m", m, "measurement count for a generated host");
    spectra_cmd->add_option("--k", k, "submatrix width")->required();
    spectra_cmd->add_option("--count", count, "number of sampled subsets");
    spectra_cmd->add_option("--bins", bins, "histogram bins");
    spectra_cmd->add_option("--seed", seed, "random seed");
    spectra_cmd->add_option("--sv-indices", sv_indices_text,
                            "comma-separated 1-based singular value indices");
    spectra_cmd->add_option("--out", out_path, "output CSV path")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run the identity verification table");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--budget", verify_budget, "identity enumeration budget");
    verify_cmd->add_flag("--inject-fault", inject_fault,
                         "corrupt the leading constant (sabotage self-test)")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (bounds_cmd->parsed()) return cmd_bounds(n, m, k);
        if (eval_cmd->parsed()) return cmd_eval(matrix_path, static_cast<int>(k), budget);
        if (curve_cmd->parsed())
            return cmd_curve(m, k, parse_n_range(n_range_text), trials, seed, budget, out_path);
        if (spectra_cmd->parsed()) {
            std::optional<std::string> mp;
            if (!matrix_path.empty()) mp = matrix_path;
            std::vector<int> sv;
            if (!sv_indices_text.empty()) sv = parse_index_list(sv_indices_text);
            return cmd_spectra(mp, n, m, static_cast<int>(k), count, bins, seed, sv, out_path);
        }
        if (verify_cmd->parsed()) return cmd_verify(seed, verify_budget, inject_fault);
    } catch (const ParseError& e) {
        std::cerr << "error: matrix parse failed: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitOk;
}
