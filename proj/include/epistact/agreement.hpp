#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epistact/corpus.hpp"

namespace epistact {

/// A multi-annotator unitizing study over a sectioned continuum. Sections
/// (one per document) prevent units from pairing across documents. Categories
/// are ints so that relabeled (segment-only, merged) studies reuse the same
/// machinery.
struct AnnotationStudy {
    struct Unit {
        int section = 0;
        int category = 0;
        int begin = 0;
        int end = 0;
    };

    std::vector<int> section_lengths;
    std::vector<std::string> annotators;
    std::vector<std::vector<Unit>> units;  // parallel to annotators
    std::vector<std::string> category_names;

    int annotator_count() const { return static_cast<int>(annotators.size()); }
    long long continuum_length() const;
};

/// Builds a study from per-annotator segments; categories are the four
/// activities in canonical order. Documents become continuum sections.
AnnotationStudy study_from_corpus(const Corpus& corpus);

enum class AlphaMode { Overall, Category, SegmentOnly };

/// Krippendorff's unitizing alpha, 1 - D_o/D_e. Returns nullopt when the
/// expected disagreement is zero (degenerate study). Overall mode sums the
/// per-category disagreements; SegmentOnly relabels every unit to a single
/// category first (same-annotator units that then overlap are union-merged).
std::optional<double> alpha_u(const AnnotationStudy& study, AlphaMode mode,
                              int category = 0);

/// Both activities relabeled to one synthetic category, then category-mode
/// alpha on it.
std::optional<double> merged_alpha(const AnnotationStudy& study, Activity a,
                                   Activity b);

struct PairwiseAlpha {
    std::map<std::pair<std::string, std::string>, std::optional<double>> pairs;
    std::optional<std::pair<std::pair<std::string, std::string>, double>> max;
    std::optional<std::pair<std::pair<std::string, std::string>, double>> min;
};

/// Overall-mode alpha restricted to each annotator pair.
PairwiseAlpha pairwise_alpha(const AnnotationStudy& study);

struct AgreementReport {
    std::optional<double> overall;
    std::array<std::optional<double>, 4> per_category;
    std::optional<double> segment_only;
    PairwiseAlpha pairwise;
    /// Key: unordered activity pair (canonical order).
    std::map<std::pair<Activity, Activity>, std::optional<double>> merged;
};

AgreementReport agreement_report(const AnnotationStudy& study);

}  // namespace epistact
