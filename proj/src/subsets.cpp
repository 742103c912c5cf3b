#include "ripbound/subsets.hpp"

#include <limits>
#include <string>

namespace ripbound {

double binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (long i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

std::uint64_t binomial_exact(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) stays integral after dividing by i at each step
        const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
        if (r > std::numeric_limits<std::uint64_t>::max() / factor)
            throw ContractViolation("binomial_exact overflow for n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k));
        r = r * factor / static_cast<std::uint64_t>(i);
    }
    return r;
}

KSubsetEnumerator::KSubsetEnumerator(int n, int k) : n_(n), k_(k) {
    if (k < 1 || k > n)
        throw ContractViolation("k-subset enumeration requires 1 <= k <= n, got k=" +
                                std::to_string(k) + ", n=" + std::to_string(n));
}

bool KSubsetEnumerator::next(std::vector<int>& subset) {
    if (!started_) {
        subset.resize(k_);
        for (int j = 0; j < k_; ++j) subset[j] = j;
        started_ = true;
        return true;
    }
    int i = k_ - 1;
    while (i >= 0 && subset[i] == n_ - k_ + i) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < k_; ++j) subset[j] = subset[i] + j - i;
    return true;
}

std::vector<std::vector<int>> all_k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    KSubsetEnumerator en(n, k);
    std::vector<int> s;
    while (en.next(s)) out.push_back(s);
    return out;
}

}  // namespace ripbound
