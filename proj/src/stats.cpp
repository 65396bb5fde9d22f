#include "epistact/stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace epistact {

StatsTable corpus_stats(const Corpus& corpus)
{
    if (corpus.documents.empty())
        throw std::invalid_argument("corpus_stats needs a non-empty corpus");

    StatsTable table;
    table.document_count = static_cast<int>(corpus.documents.size());

    std::array<long long, 4> counts{};
    std::array<long long, 4> token_totals{};
    std::map<std::pair<Activity, Activity>, std::pair<long long, long long>>
        overlap;  // pair -> (count, total intersection length)

    for (const Document& doc : corpus.documents) {
        for (const Segment& s : doc.segments) {
            ++counts[static_cast<std::size_t>(s.activity)];
            token_totals[static_cast<std::size_t>(s.activity)] += s.length();
        }
        for (std::size_t i = 0; i < doc.segments.size(); ++i) {
            for (std::size_t j = i + 1; j < doc.segments.size(); ++j) {
                const Segment& a = doc.segments[i];
                const Segment& b = doc.segments[j];
                if (a.activity == b.activity) continue;
                int inter = std::min(a.end, b.end) - std::max(a.begin, b.begin);
                if (inter <= 0) continue;
                auto key = std::minmax(a.activity, b.activity);
                auto& [n, len] = overlap[{key.first, key.second}];
                ++n;
                len += inter;
            }
        }
    }

    for (std::size_t i = 0; i < kActivityCount; ++i) {
        auto& pa = table.activities[i];
        pa.count = counts[i];
        pa.avg_per_doc = static_cast<double>(counts[i]) / table.document_count;
        if (counts[i] > 0)
            pa.avg_length = static_cast<double>(token_totals[i]) / counts[i];
    }
    for (std::size_t i = 0; i < kActivityCount; ++i) {
        for (std::size_t j = i + 1; j < kActivityCount; ++j) {
            std::pair<Activity, Activity> key{kActivities[i], kActivities[j]};
            StatsTable::PerPair pp;
            if (auto it = overlap.find(key); it != overlap.end()) {
                pp.overlap_count = it->second.first;
                pp.avg_overlap_length =
                    static_cast<double>(it->second.second) / it->second.first;
            }
            table.pairs[key] = pp;
        }
    }
    return table;
}

}  // namespace epistact
