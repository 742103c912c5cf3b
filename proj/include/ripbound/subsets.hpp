#pragma once

#include <cstdint>
#include <vector>

#include "ripbound/errors.hpp"

namespace ripbound {

/// Binomial coefficient as a double (multiplicative form, ~1 ulp per factor).
/// Intended for subset counts and budget comparisons, not exact arithmetic.
double binomial(long n, long k);

/// Exact binomial coefficient; throws on uint64 overflow.
std::uint64_t binomial_exact(int n, int k);

/// Lexicographic k-subset enumerator over {0, ..., n-1}.
/// The first next() fills {0,...,k-1}; returns false once exhausted.
class KSubsetEnumerator {
public:
    KSubsetEnumerator(int n, int k);
    bool next(std::vector<int>& subset);

    int n() const { return n_; }
    int k() const { return k_; }

private:
    int n_;
    int k_;
    bool started_ = false;
};

/// All C(n,k) subsets in lexicographic order; for small n only.
std::vector<std::vector<int>> all_k_subsets(int n, int k);

}  // namespace ripbound
