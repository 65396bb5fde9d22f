#pragma once

#include <string>
#include <vector>

#include "epistact/corpus.hpp"

namespace epistact {

struct UndecidedEntry {
    std::string doc_id;
    Segment segment;  // annotator cleared
    int support = 0;  // annotators with this exact (begin, end, activity)
};

struct GoldResult {
    Corpus gold;  // input documents with majority-voted segments, annotator null
    std::vector<UndecidedEntry> undecided;
};

/// Majority voting over per-annotator segments: a (begin, end, activity)
/// triple becomes gold iff at least k of the n annotators marked exactly it.
/// Every annotated triple that misses the threshold is reported as undecided
/// with its support count. Each document must carry exactly n annotators.
GoldResult majority_gold(const Corpus& corpus, int k, int n);

std::string serialize_undecided(const std::vector<UndecidedEntry>& entries);

}  // namespace epistact
