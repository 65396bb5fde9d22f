#include "epistact/encoding.hpp"

#include <algorithm>
#include <stdexcept>

namespace epistact {

std::vector<LabelSet> segments_to_labelsets(const Document& doc)
{
    std::vector<LabelSet> out(doc.tokens.size());
    for (const Segment& s : doc.segments) {
        out[s.begin].set(s.activity, BioTag::B);
        for (int t = s.begin + 1; t < s.end; ++t)
            out[t].set(s.activity, BioTag::I);
    }
    return out;
}

std::vector<Segment> labelsets_to_segments(const std::vector<LabelSet>& labels,
                                           RepairPolicy policy)
{
    std::vector<Segment> out;
    for (Activity a : kActivities) {
        int open = -1;  // begin of the currently open segment, -1 if none
        for (int t = 0; t < static_cast<int>(labels.size()); ++t) {
            BioTag tag = labels[t].tag(a);
            if (tag == BioTag::I && open < 0) {
                if (policy == RepairPolicy::Strict)
                    throw std::runtime_error(
                        "dangling I at token " + std::to_string(t) +
                        " for activity " + std::string(to_string(a)));
                tag = BioTag::B;
            }
            if (tag != BioTag::I && open >= 0) {
                out.push_back({a, open, t, std::nullopt});
                open = -1;
            }
            if (tag == BioTag::B) open = t;
        }
        if (open >= 0)
            out.push_back({a, open, static_cast<int>(labels.size()),
                           std::nullopt});
    }
    std::sort(out.begin(), out.end());
    return out;
}

BioSequence to_separate(const std::vector<LabelSet>& labels, Activity a)
{
    BioSequence out;
    out.reserve(labels.size());
    for (const LabelSet& ls : labels) out.push_back(ls.tag(a));
    return out;
}

std::vector<ConcatLabel> to_concat(const std::vector<LabelSet>& labels)
{
    std::vector<ConcatLabel> out;
    out.reserve(labels.size());
    for (const LabelSet& ls : labels) out.push_back(ConcatLabel{ls.tags()});
    return out;
}

std::array<BioSequence, 4> to_multioutput(const std::vector<LabelSet>& labels)
{
    std::array<BioSequence, 4> out;
    for (Activity a : kActivities)
        out[static_cast<std::size_t>(a)] = to_separate(labels, a);
    return out;
}

namespace {

// DC > HG > EG > EE
int preference_rank(Activity a)
{
    switch (a) {
    case Activity::DC: return 0;
    case Activity::HG: return 1;
    case Activity::EG: return 2;
    case Activity::EE: return 3;
    }
    return 4;
}

}  // namespace

std::vector<Label> apply_preference(const Document& doc)
{
    std::vector<Segment> order = doc.segments;
    std::stable_sort(order.begin(), order.end(),
                     [](const Segment& a, const Segment& b) {
                         return std::tuple(preference_rank(a.activity), a.begin,
                                           a.end) <
                                std::tuple(preference_rank(b.activity), b.begin,
                                           b.end);
                     });
    std::vector<bool> covered(doc.tokens.size(), false);
    std::vector<Label> out(doc.tokens.size(), Label::outside());
    for (const Segment& s : order) {
        bool conflict = false;
        for (int t = s.begin; t < s.end && !conflict; ++t)
            conflict = covered[t];
        if (conflict) continue;  // dropped entirely
        out[s.begin] = Label::make(BioTag::B, s.activity);
        covered[s.begin] = true;
        for (int t = s.begin + 1; t < s.end; ++t) {
            out[t] = Label::make(BioTag::I, s.activity);
            covered[t] = true;
        }
    }
    return out;
}

std::string to_conll(const Corpus& corpus)
{
    std::string out;
    bool first = true;
    for (const Document& doc : corpus.documents) {
        if (!first) out += '\n';
        first = false;
        out += "# doc_id = " + doc.doc_id + "\n";
        const auto labels = segments_to_labelsets(doc);
        const auto pref = apply_preference(doc);
        for (std::size_t t = 0; t < doc.tokens.size(); ++t) {
            out += doc.tokens[t];
            for (Activity a : kActivities) {
                out += '\t';
                out += to_char(labels[t].tag(a));
            }
            out += '\t';
            out += to_string(ConcatLabel{labels[t].tags()});
            out += '\t';
            out += to_string(pref[t]);
            out += '\n';
        }
    }
    return out;
}

}  // namespace epistact
