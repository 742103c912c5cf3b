#pragma once

#include <cstdint>
#include <random>

#include "ripbound/matrix.hpp"

namespace ripbound {

/// Deterministic random source. The engine (mt19937_64) and every variate
/// recipe here are fully specified, so a seed reproduces the same stream
/// bit-for-bit on any platform. Normal variates use the polar method.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, bound); fixed multiply-shift reduction.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    /// Standard normal via the polar method; pairs are cached.
    double normal();

    /// Independent substream seed for (seed, stream); splitmix64 finalizer.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// m x n matrix of i.i.d. standard normal entries, row-major fill order.
Matrix random_gaussian(int m, int n, std::uint64_t seed);

/// U diag(s) V^T with U an m x m orthogonal matrix and V holding m
/// orthonormal columns in n-space, both from modified Gram-Schmidt (with a
/// re-orthogonalization pass) applied to seeded Gaussian matrices.
Matrix random_with_spectrum(int m, int n, const Spectrum& s, std::uint64_t seed);

}  // namespace ripbound
