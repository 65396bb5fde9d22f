#include "epistact/agreement.hpp"

#include <algorithm>
#include <stdexcept>

namespace epistact {

long long AnnotationStudy::continuum_length() const
{
    long long total = 0;
    for (int l : section_lengths) total += l;
    return total;
}

AnnotationStudy study_from_corpus(const Corpus& corpus)
{
    AnnotationStudy study;
    for (Activity a : kActivities)
        study.category_names.emplace_back(to_string(a));

    std::map<std::string, int> annotator_ids;
    for (const Document& doc : corpus.documents)
        for (const Segment& s : doc.segments)
            if (s.annotator)
                annotator_ids.emplace(*s.annotator,
                                      static_cast<int>(annotator_ids.size()));
    // Re-number in sorted order for a stable layout.
    int next = 0;
    for (auto& [name, id] : annotator_ids) id = next++;

    study.annotators.resize(annotator_ids.size());
    study.units.resize(annotator_ids.size());
    for (const auto& [name, id] : annotator_ids) study.annotators[id] = name;

    for (std::size_t d = 0; d < corpus.documents.size(); ++d) {
        const Document& doc = corpus.documents[d];
        study.section_lengths.push_back(doc.size());
        for (const Segment& s : doc.segments) {
            if (!s.annotator) continue;
            study.units[annotator_ids.at(*s.annotator)].push_back(
                {static_cast<int>(d), static_cast<int>(s.activity), s.begin,
                 s.end});
        }
    }
    return study;
}

namespace {

struct Interval {
    int begin;
    int end;
    int length() const { return end - begin; }
};

std::vector<Interval> units_of(const AnnotationStudy& study, int annotator,
                               int section, int category)
{
    std::vector<Interval> out;
    for (const auto& u : study.units[annotator])
        if (u.section == section && u.category == category)
            out.push_back({u.begin, u.end});
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) {
        return std::tuple(a.begin, a.end) < std::tuple(b.begin, b.end);
    });
    return out;
}

/// Raw observed disagreement between two annotators' unit lists within one
/// section, one category: squared begin/end mismatch for each overlapping
/// unit pair, squared length for each unit that meets no unit of the other.
double observed_pair_raw(const std::vector<Interval>& ui,
                         const std::vector<Interval>& uj)
{
    double raw = 0.0;
    for (const Interval& u : ui) {
        bool hit = false;
        for (const Interval& v : uj) {
            if (u.begin < v.end && v.begin < u.end) {
                double db = u.begin - v.begin;
                double de = u.end - v.end;
                raw += db * db + de * de;
                hit = true;
            }
        }
        if (!hit) raw += static_cast<double>(u.length()) * u.length();
    }
    for (const Interval& v : uj) {
        bool hit = false;
        for (const Interval& u : ui)
            if (u.begin < v.end && v.begin < u.end) hit = true;
        if (!hit) raw += static_cast<double>(v.length()) * v.length();
    }
    return raw;
}

/// Expected squared boundary mismatch of two units placed independently and
/// uniformly on a section of length L, summed over their intersecting
/// placements.
double expected_overlap_term(int lu, int lv, int L)
{
    const double denom =
        static_cast<double>(L - lu + 1) * static_cast<double>(L - lv + 1);
    double acc = 0.0;
    for (int d = -(lv - 1); d <= lu - 1; ++d) {  // d = begin_v - begin_u
        int lo = std::max(0, -d);
        int hi = std::min(L - lu, L - lv - d);
        if (hi < lo) continue;
        double db = d;
        double de = d + lv - lu;
        acc += static_cast<double>(hi - lo + 1) * (db * db + de * de);
    }
    return acc / denom;
}

/// Probability that a uniformly placed unit of length lu intersects none of
/// the other annotator's (independently placed) units.
double miss_probability(int lu, const std::vector<int>& other_lengths, int L)
{
    if (other_lengths.empty()) return 1.0;
    double acc = 0.0;
    for (int b = 0; b + lu <= L; ++b) {
        double p = 1.0;
        for (int lv : other_lengths) {
            int free = std::max(0, b - lv + 1) + std::max(0, L - lv - (b + lu) + 1);
            p *= static_cast<double>(free) / static_cast<double>(L - lv + 1);
        }
        acc += p;
    }
    return acc / static_cast<double>(L - lu + 1);
}

/// Exact expectation of observed_pair_raw under independent uniform
/// relocation of every unit within the section.
double expected_pair_raw(const std::vector<Interval>& ui,
                         const std::vector<Interval>& uj, int L)
{
    std::vector<int> li, lj;
    for (const Interval& u : ui) li.push_back(u.length());
    for (const Interval& v : uj) lj.push_back(v.length());
    double raw = 0.0;
    for (int lu : li)
        for (int lv : lj) raw += expected_overlap_term(lu, lv, L);
    for (int lu : li)
        raw += static_cast<double>(lu) * lu * miss_probability(lu, lj, L);
    for (int lv : lj)
        raw += static_cast<double>(lv) * lv * miss_probability(lv, li, L);
    return raw;
}

/// Sums observed and expected disagreement for one category over all
/// annotator pairs and sections.
void accumulate_category(const AnnotationStudy& study, int category,
                         double& observed, double& expected)
{
    const int m = study.annotator_count();
    for (int section = 0; section < static_cast<int>(study.section_lengths.size());
         ++section) {
        const int L = study.section_lengths[section];
        for (int i = 0; i < m; ++i) {
            const auto ui = units_of(study, i, section, category);
            for (int j = i + 1; j < m; ++j) {
                const auto uj = units_of(study, j, section, category);
                if (ui.empty() && uj.empty()) continue;
                observed += observed_pair_raw(ui, uj);
                expected += expected_pair_raw(ui, uj, L);
            }
        }
    }
}

/// Union-merges overlapping units of one annotator within a section/category;
/// needed after relabeling collapses categories.
std::vector<AnnotationStudy::Unit> merge_annotator_units(
    std::vector<AnnotationStudy::Unit> units)
{
    std::sort(units.begin(), units.end(), [](const auto& a, const auto& b) {
        return std::tuple(a.section, a.category, a.begin, a.end) <
               std::tuple(b.section, b.category, b.begin, b.end);
    });
    std::vector<AnnotationStudy::Unit> out;
    for (const auto& u : units) {
        if (!out.empty() && out.back().section == u.section &&
            out.back().category == u.category && u.begin < out.back().end) {
            out.back().end = std::max(out.back().end, u.end);
        } else {
            out.push_back(u);
        }
    }
    return out;
}

/// Applies a category mapping (negative = drop unit) and union-merges the
/// resulting same-category overlaps per annotator.
AnnotationStudy relabel(const AnnotationStudy& study,
                        const std::vector<int>& mapping,
                        std::vector<std::string> names)
{
    AnnotationStudy out;
    out.section_lengths = study.section_lengths;
    out.annotators = study.annotators;
    out.category_names = std::move(names);
    out.units.resize(study.units.size());
    for (std::size_t i = 0; i < study.units.size(); ++i) {
        std::vector<AnnotationStudy::Unit> relabeled;
        for (AnnotationStudy::Unit u : study.units[i]) {
            int c = mapping.at(static_cast<std::size_t>(u.category));
            if (c < 0) continue;
            u.category = c;
            relabeled.push_back(u);
        }
        out.units[i] = merge_annotator_units(std::move(relabeled));
    }
    return out;
}

std::optional<double> alpha_from(const AnnotationStudy& study,
                                 const std::vector<int>& categories)
{
    if (study.annotator_count() < 2)
        throw std::invalid_argument("alpha_u needs at least two annotators");
    if (study.continuum_length() < 1)
        throw std::invalid_argument("alpha_u needs a non-empty continuum");
    double observed = 0.0, expected = 0.0;
    for (int c : categories) accumulate_category(study, c, observed, expected);
    if (expected == 0.0) return std::nullopt;
    return 1.0 - observed / expected;
}

}  // namespace

std::optional<double> alpha_u(const AnnotationStudy& study, AlphaMode mode,
                              int category)
{
    switch (mode) {
    case AlphaMode::Category:
        return alpha_from(study, {category});
    case AlphaMode::Overall: {
        std::vector<int> cats;
        for (int c = 0; c < static_cast<int>(study.category_names.size()); ++c)
            cats.push_back(c);
        return alpha_from(study, cats);
    }
    case AlphaMode::SegmentOnly: {
        std::vector<int> mapping(study.category_names.size(), 0);
        return alpha_from(relabel(study, mapping, {"segment"}), {0});
    }
    }
    throw std::logic_error("unreachable");
}

std::optional<double> merged_alpha(const AnnotationStudy& study, Activity a,
                                   Activity b)
{
    if (a == b) throw std::invalid_argument("merged_alpha needs two activities");
    std::vector<int> mapping(study.category_names.size());
    for (std::size_t c = 0; c < mapping.size(); ++c)
        mapping[c] = static_cast<int>(c);
    const int merged_id = static_cast<int>(study.category_names.size());
    mapping[static_cast<std::size_t>(a)] = merged_id;
    mapping[static_cast<std::size_t>(b)] = merged_id;
    std::vector<std::string> names = study.category_names;
    names.push_back(std::string(to_string(a)) + "&" +
                    std::string(to_string(b)));
    return alpha_from(relabel(study, mapping, std::move(names)), {merged_id});
}

PairwiseAlpha pairwise_alpha(const AnnotationStudy& study)
{
    if (study.annotator_count() < 2)
        throw std::invalid_argument("pairwise_alpha needs at least two annotators");
    PairwiseAlpha out;
    for (int i = 0; i < study.annotator_count(); ++i) {
        for (int j = i + 1; j < study.annotator_count(); ++j) {
            AnnotationStudy pair;
            pair.section_lengths = study.section_lengths;
            pair.category_names = study.category_names;
            pair.annotators = {study.annotators[i], study.annotators[j]};
            pair.units = {study.units[i], study.units[j]};
            auto key = std::make_pair(study.annotators[i], study.annotators[j]);
            auto value = alpha_u(pair, AlphaMode::Overall);
            out.pairs[key] = value;
            if (value) {
                if (!out.max || *value > out.max->second)
                    out.max = {key, *value};
                if (!out.min || *value < out.min->second)
                    out.min = {key, *value};
            }
        }
    }
    return out;
}

AgreementReport agreement_report(const AnnotationStudy& study)
{
    AgreementReport r;
    r.overall = alpha_u(study, AlphaMode::Overall);
    for (Activity a : kActivities)
        r.per_category[static_cast<std::size_t>(a)] =
            alpha_u(study, AlphaMode::Category, static_cast<int>(a));
    r.segment_only = alpha_u(study, AlphaMode::SegmentOnly);
    r.pairwise = pairwise_alpha(study);
    for (std::size_t i = 0; i < kActivityCount; ++i)
        for (std::size_t j = i + 1; j < kActivityCount; ++j)
            r.merged[{kActivities[i], kActivities[j]}] =
                merged_alpha(study, kActivities[i], kActivities[j]);
    return r;
}

}  // namespace epistact
