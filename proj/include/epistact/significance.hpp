#pragma once

#include <vector>

namespace epistact {

struct SignificanceResult {
    double u_statistic = 0.0;  // U of the first sample; half-integral under ties
    double p_value = 1.0;      // exact two-sided permutation p, in (0, 1]
    double corrected_alpha = 0.0;
    bool significant = false;
};

/// Exact two-sided Mann-Whitney U test by full enumeration of the
/// C(n+m, n) group assignments of the pooled values. Ties are handled by
/// mid-ranks; extremeness is measured by |U - nm/2|. Requires n + m <= 20.
SignificanceResult mann_whitney_u(const std::vector<double>& scores_a,
                                  const std::vector<double>& scores_b,
                                  double alpha, int n_comparisons);

}  // namespace epistact
