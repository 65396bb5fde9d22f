#pragma once

#include <map>
#include <optional>
#include <utility>

#include "epistact/corpus.hpp"

namespace epistact {

/// Descriptive corpus statistics: per-activity counts and lengths, plus
/// pairwise overlap counts and mean overlap lengths (token-index
/// intersections).
struct StatsTable {
    struct PerActivity {
        long long count = 0;
        std::optional<double> avg_per_doc;  // count / #documents
        std::optional<double> avg_length;   // absent when count == 0
    };
    struct PerPair {
        long long overlap_count = 0;
        std::optional<double> avg_overlap_length;
    };

    int document_count = 0;
    std::array<PerActivity, 4> activities{};
    /// Unordered pairs keyed in canonical order (first < second).
    std::map<std::pair<Activity, Activity>, PerPair> pairs;
};

StatsTable corpus_stats(const Corpus& corpus);

}  // namespace epistact
