#include "epistact/gold.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace epistact {

GoldResult majority_gold(const Corpus& corpus, int k, int n)
{
    if (k > n || k < 1)
        throw std::invalid_argument("majority threshold k must satisfy 1 <= k <= n");

    GoldResult result;
    for (const Document& doc : corpus.documents) {
        std::set<std::string> annotators;
        for (const Segment& s : doc.segments) {
            if (!s.annotator)
                throw std::invalid_argument("document " + doc.doc_id +
                                            " carries gold segments already");
            annotators.insert(*s.annotator);
        }
        if (static_cast<int>(annotators.size()) != n && !doc.segments.empty())
            throw std::invalid_argument(
                "document " + doc.doc_id + " has " +
                std::to_string(annotators.size()) + " annotators, expected " +
                std::to_string(n));

        // Support per exact (begin, end, activity); a set keeps repeated
        // identical segments by the same annotator from double-counting.
        std::map<std::tuple<int, int, Activity>, std::set<std::string>> support;
        for (const Segment& s : doc.segments)
            support[{s.begin, s.end, s.activity}].insert(*s.annotator);

        Document gold_doc;
        gold_doc.doc_id = doc.doc_id;
        gold_doc.domain = doc.domain;
        gold_doc.case_id = doc.case_id;
        gold_doc.tokens = doc.tokens;
        for (const auto& [key, voters] : support) {
            auto [begin, end, activity] = key;
            Segment s{activity, begin, end, std::nullopt};
            if (static_cast<int>(voters.size()) >= k) {
                gold_doc.segments.push_back(s);
            } else {
                result.undecided.push_back(
                    {doc.doc_id, s, static_cast<int>(voters.size())});
            }
        }
        std::sort(gold_doc.segments.begin(), gold_doc.segments.end());
        validate_document(gold_doc);
        result.gold.documents.push_back(std::move(gold_doc));
    }
    return result;
}

std::string serialize_undecided(const std::vector<UndecidedEntry>& entries)
{
    std::string out;
    for (const UndecidedEntry& e : entries) {
        nlohmann::ordered_json rec;
        rec["doc_id"] = e.doc_id;
        rec["activity"] = std::string(to_string(e.segment.activity));
        rec["begin"] = e.segment.begin;
        rec["end"] = e.segment.end;
        rec["support"] = e.support;
        out += rec.dump();
        out += '\n';
    }
    return out;
}

}  // namespace epistact
