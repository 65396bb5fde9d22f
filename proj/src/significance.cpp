#include "epistact/significance.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace epistact {

namespace {

/// Doubled mid-ranks of the pooled sample (doubling keeps ties integral).
std::vector<long long> doubled_midranks(const std::vector<double>& pooled)
{
    const std::size_t n = pooled.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
    std::vector<long long> rank2(n, 0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && pooled[idx[j + 1]] == pooled[idx[i]]) ++j;
        // ranks i+1 .. j+1 share mid-rank (i+j+2)/2; doubled: i+j+2
        for (std::size_t k = i; k <= j; ++k)
            rank2[idx[k]] = static_cast<long long>(i + j + 2);
        i = j + 1;
    }
    return rank2;
}

}  // namespace

SignificanceResult mann_whitney_u(const std::vector<double>& scores_a,
                                  const std::vector<double>& scores_b,
                                  double alpha, int n_comparisons)
{
    const int n = static_cast<int>(scores_a.size());
    const int m = static_cast<int>(scores_b.size());
    if (n < 1 || m < 1)
        throw std::invalid_argument("both samples must be non-empty");
    if (n + m > 20)
        throw std::invalid_argument(
            "exact enumeration supports at most 20 pooled values");
    if (n_comparisons < 1)
        throw std::invalid_argument("n_comparisons must be >= 1");

    std::vector<double> pooled = scores_a;
    pooled.insert(pooled.end(), scores_b.begin(), scores_b.end());
    const std::vector<long long> rank2 = doubled_midranks(pooled);

    // 2*U for the first sample: 2*R1 - n(n+1).
    long long r2_obs = 0;
    for (int i = 0; i < n; ++i) r2_obs += rank2[i];
    const long long u2_obs = r2_obs - static_cast<long long>(n) * (n + 1);
    // Extremeness: |2U - nm| (doubled distance from the null mid-point).
    const long long nm = static_cast<long long>(n) * m;
    const long long dev_obs = std::llabs(u2_obs - nm);

    // Enumerate all C(n+m, n) assignments of pooled values to group A.
    const int total = n + m;
    std::vector<int> comb(n);
    std::iota(comb.begin(), comb.end(), 0);
    long long extreme = 0, count = 0;
    while (true) {
        long long r2 = 0;
        for (int i : comb) r2 += rank2[i];
        long long u2 = r2 - static_cast<long long>(n) * (n + 1);
        if (std::llabs(u2 - nm) >= dev_obs) ++extreme;
        ++count;
        // next combination
        int i = n - 1;
        while (i >= 0 && comb[i] == total - n + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
    }

    SignificanceResult res;
    res.u_statistic = static_cast<double>(u2_obs) / 2.0;
    res.p_value = static_cast<double>(extreme) / static_cast<double>(count);
    res.corrected_alpha = alpha / n_comparisons;
    res.significant = res.p_value < res.corrected_alpha;
    return res;
}

}  // namespace epistact
