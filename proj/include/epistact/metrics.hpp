#pragma once

#include <array>
#include <optional>
#include <vector>

#include "epistact/types.hpp"

namespace epistact {

/// Evaluation results for one gold/prediction pair. F1-based scores are on
/// the 0-100 scale; m_o is absent when the gold data has no overlap tokens.
struct EvalReport {
    double hl = 0.0;
    std::array<double, 4> m_s{};
    double m_a = 0.0;
    std::optional<std::array<double, 4>> m_o;
};

/// Hamming loss over the 9-label universe C, Outside included.
double hamming_loss(const std::vector<LabelSet>& gold,
                    const std::vector<LabelSet>& pred);

/// Macro-averaged F1 on the 0-100 scale over a fixed class universe
/// 0..num_classes-1. Classes absent from both gold and prediction score
/// F1 = 0 and still enter the mean; P, R, F1 are 0 on a zero denominator.
double macro_f1(int num_classes, const std::vector<int>& gold,
                const std::vector<int>& pred);

/// Segmentation score: macro-F1 over {B,I,O} of the per-activity projections.
double m_s(const std::vector<LabelSet>& gold, const std::vector<LabelSet>& pred,
           Activity a);

/// Activity-distinction score: per token, each LabelSet is reduced to its
/// activity set (B/I dropped, Outside = empty set); macro-F1 over all 16
/// subsets of A.
double m_a(const std::vector<LabelSet>& gold, const std::vector<LabelSet>& pred);

/// Overlap score: m_s restricted to tokens whose GOLD LabelSet carries at
/// least two typed labels; absent when no such token exists.
std::optional<double> m_o(const std::vector<LabelSet>& gold,
                          const std::vector<LabelSet>& pred, Activity a);

EvalReport evaluate(const std::vector<LabelSet>& gold,
                    const std::vector<LabelSet>& pred);

/// 16x16 confusion over (gold activity set, predicted activity set) per token.
/// Class order: empty set, singletons in canonical activity order, then larger
/// sets lexicographically over canonical activity indices.
struct ConfusionMatrix {
    std::array<std::array<long long, 16>, 16> counts{};

    long long row_total(int row) const;
    /// Row-normalized percentage; 0 for an empty row.
    double percent(int row, int col) const;
    bool row_empty(int row) const { return row_total(row) == 0; }
    bool col_empty(int col) const;
};

/// The display order of activity-set classes (as 4-bit masks, bit i =
/// canonical activity i).
const std::array<std::uint8_t, 16>& activity_set_order();

/// Position of a mask within activity_set_order().
int activity_set_class(std::uint8_t mask);

/// Name of an activity-set class: "O" for the empty set, otherwise activity
/// names in canonical order joined by "-", e.g. "EE-DC".
std::string activity_set_name(std::uint8_t mask);

ConfusionMatrix confusion_matrix(const std::vector<LabelSet>& gold,
                                 const std::vector<LabelSet>& pred);

}  // namespace epistact
