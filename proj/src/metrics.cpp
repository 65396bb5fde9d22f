#include "epistact/metrics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace epistact {

namespace {

void check_aligned(std::size_t gold, std::size_t pred)
{
    if (gold != pred)
        throw std::invalid_argument(
            "misaligned inputs: gold has " + std::to_string(gold) +
            " tokens, prediction has " + std::to_string(pred));
}

}  // namespace

double hamming_loss(const std::vector<LabelSet>& gold,
                    const std::vector<LabelSet>& pred)
{
    check_aligned(gold.size(), pred.size());
    if (gold.empty()) return 0.0;
    long long mismatches = 0;
    for (std::size_t t = 0; t < gold.size(); ++t) {
        // Membership over the 9 labels of C. The Outside bit differs iff
        // exactly one side is all-O; the typed bits differ per activity/tag.
        if (gold[t].outside() != pred[t].outside()) ++mismatches;
        for (Activity a : kActivities) {
            BioTag g = gold[t].tag(a);
            BioTag p = pred[t].tag(a);
            if (g == p) continue;
            // Each side contributes its own typed label's membership bit.
            if (g != BioTag::O) ++mismatches;
            if (p != BioTag::O) ++mismatches;
        }
    }
    return static_cast<double>(mismatches) /
           (static_cast<double>(gold.size()) * kLabelUniverseSize);
}

double macro_f1(int num_classes, const std::vector<int>& gold,
                const std::vector<int>& pred)
{
    check_aligned(gold.size(), pred.size());
    std::vector<long long> tp(num_classes, 0), fp(num_classes, 0),
        fn(num_classes, 0);
    for (std::size_t t = 0; t < gold.size(); ++t) {
        int g = gold[t];
        int p = pred[t];
        if (g < 0 || g >= num_classes || p < 0 || p >= num_classes)
            throw std::invalid_argument("class id outside universe");
        if (g == p) {
            ++tp[g];
        } else {
            ++fn[g];
            ++fp[p];
        }
    }
    double sum = 0.0;
    for (int c = 0; c < num_classes; ++c) {
        double precision =
            tp[c] + fp[c] == 0 ? 0.0
                               : static_cast<double>(tp[c]) / (tp[c] + fp[c]);
        double recall =
            tp[c] + fn[c] == 0 ? 0.0
                               : static_cast<double>(tp[c]) / (tp[c] + fn[c]);
        double f1 = precision + recall == 0.0
                        ? 0.0
                        : 2.0 * precision * recall / (precision + recall);
        sum += f1;
    }
    return 100.0 * sum / num_classes;
}

namespace {

std::vector<int> bio_ids(const std::vector<LabelSet>& labels, Activity a)
{
    std::vector<int> out;
    out.reserve(labels.size());
    for (const LabelSet& ls : labels)
        out.push_back(static_cast<int>(ls.tag(a)));
    return out;
}

}  // namespace

double m_s(const std::vector<LabelSet>& gold, const std::vector<LabelSet>& pred,
           Activity a)
{
    return macro_f1(3, bio_ids(gold, a), bio_ids(pred, a));
}

double m_a(const std::vector<LabelSet>& gold, const std::vector<LabelSet>& pred)
{
    check_aligned(gold.size(), pred.size());
    std::vector<int> g, p;
    g.reserve(gold.size());
    p.reserve(pred.size());
    for (const LabelSet& ls : gold) g.push_back(ls.activity_mask());
    for (const LabelSet& ls : pred) p.push_back(ls.activity_mask());
    return macro_f1(16, g, p);
}

std::optional<double> m_o(const std::vector<LabelSet>& gold,
                          const std::vector<LabelSet>& pred, Activity a)
{
    check_aligned(gold.size(), pred.size());
    std::vector<LabelSet> g, p;
    for (std::size_t t = 0; t < gold.size(); ++t) {
        if (gold[t].typed_count() >= 2) {
            g.push_back(gold[t]);
            p.push_back(pred[t]);
        }
    }
    if (g.empty()) return std::nullopt;
    return m_s(g, p, a);
}

EvalReport evaluate(const std::vector<LabelSet>& gold,
                    const std::vector<LabelSet>& pred)
{
    EvalReport r;
    r.hl = hamming_loss(gold, pred);
    for (Activity a : kActivities)
        r.m_s[static_cast<std::size_t>(a)] = m_s(gold, pred, a);
    r.m_a = m_a(gold, pred);
    bool any_overlap = std::any_of(gold.begin(), gold.end(), [](const LabelSet& ls) {
        return ls.typed_count() >= 2;
    });
    if (any_overlap) {
        std::array<double, 4> mo{};
        for (Activity a : kActivities)
            mo[static_cast<std::size_t>(a)] = *m_o(gold, pred, a);
        r.m_o = mo;
    }
    return r;
}

const std::array<std::uint8_t, 16>& activity_set_order()
{
    static const std::array<std::uint8_t, 16> order = [] {
        std::array<std::uint8_t, 16> masks{};
        for (int m = 0; m < 16; ++m) masks[m] = static_cast<std::uint8_t>(m);
        // Empty set first, singletons in canonical activity order, then
        // larger sets lexicographically over canonical activity indices.
        std::sort(masks.begin(), masks.end(),
                  [](std::uint8_t a, std::uint8_t b) {
                      int pa = std::popcount(a), pb = std::popcount(b);
                      if (pa != pb) return pa < pb;
                      return a < b;  // bit i = activity i; low bit = HG
                  });
        return masks;
    }();
    return order;
}

int activity_set_class(std::uint8_t mask)
{
    const auto& order = activity_set_order();
    for (int i = 0; i < 16; ++i)
        if (order[i] == mask) return i;
    throw std::invalid_argument("activity-set mask out of range");
}

std::string activity_set_name(std::uint8_t mask)
{
    if (mask == 0) return "O";
    std::string s;
    for (std::size_t i = 0; i < kActivityCount; ++i) {
        if (mask & (1u << i)) {
            if (!s.empty()) s += '-';
            s += to_string(kActivities[i]);
        }
    }
    return s;
}

long long ConfusionMatrix::row_total(int row) const
{
    long long t = 0;
    for (long long c : counts[row]) t += c;
    return t;
}

double ConfusionMatrix::percent(int row, int col) const
{
    long long total = row_total(row);
    if (total == 0) return 0.0;
    return 100.0 * static_cast<double>(counts[row][col]) /
           static_cast<double>(total);
}

bool ConfusionMatrix::col_empty(int col) const
{
    for (int r = 0; r < 16; ++r)
        if (counts[r][col] != 0) return false;
    return true;
}

ConfusionMatrix confusion_matrix(const std::vector<LabelSet>& gold,
                                 const std::vector<LabelSet>& pred)
{
    check_aligned(gold.size(), pred.size());
    ConfusionMatrix m;
    for (std::size_t t = 0; t < gold.size(); ++t) {
        int r = activity_set_class(gold[t].activity_mask());
        int c = activity_set_class(pred[t].activity_mask());
        ++m.counts[r][c];
    }
    return m;
}

}  // namespace epistact
