#include <doctest.h>

#include <random>

#include "epistact/encoding.hpp"
#include "epistact/metrics.hpp"
#include "test_util.hpp"

using namespace epistact;

namespace {

std::vector<LabelSet> labels(const std::vector<std::vector<std::pair<BioTag, Activity>>>& spec)
{
    std::vector<LabelSet> out(spec.size());
    for (std::size_t t = 0; t < spec.size(); ++t)
        for (auto [bio, a] : spec[t]) out[t].set(a, bio);
    return out;
}

}  // namespace

TEST_CASE("hamming_loss: two-token worked example")
{
    // Token 0 differs in two of 9 memberships (B-EE and Outside); token 1
    // matches: (2/9 + 0)/2 = 1/9.
    auto gold = labels({{{BioTag::B, Activity::EE}}, {{BioTag::I, Activity::EE}}});
    auto pred = labels({{}, {{BioTag::I, Activity::EE}}});
    CHECK(hamming_loss(gold, pred) ==
          doctest::Approx(1.0 / 9).epsilon(1e-12));
    CHECK(hamming_loss(gold, gold) == 0.0);
}

TEST_CASE("hamming_loss: a missing label inside a kept overlap costs 1/9")
{
    auto gold = labels({{{BioTag::B, Activity::EE}, {BioTag::B, Activity::DC}}});
    auto pred = labels({{{BioTag::B, Activity::EE}}});
    // Neither set is Outside, so only the B-DC membership flips.
    CHECK(hamming_loss(gold, pred) == doctest::Approx(1.0 / 9));
}

TEST_CASE("hamming_loss: Outside counts as a label")
{
    auto gold = labels({{}});
    auto pred = labels({{{BioTag::B, Activity::HG}}});
    // Symmetric difference {O, B-HG}: 2 of 9 labels wrong.
    CHECK(hamming_loss(gold, pred) == doctest::Approx(2.0 / 9));
    CHECK(hamming_loss(pred, gold) == doctest::Approx(2.0 / 9));
}

TEST_CASE("hamming_loss: disjoint typed labels and B/I confusion")
{
    auto gold = labels({{{BioTag::B, Activity::EE}}});
    auto pred = labels({{{BioTag::B, Activity::DC}}});
    CHECK(hamming_loss(gold, pred) == doctest::Approx(2.0 / 9));

    auto pred2 = labels({{{BioTag::I, Activity::EE}}});
    CHECK(hamming_loss(gold, pred2) == doctest::Approx(2.0 / 9));
}

TEST_CASE("hamming_loss bounds and symmetry on random data")
{
    std::mt19937_64 gen(3);
    for (int i = 0; i < 50; ++i) {
        auto g = segments_to_labelsets(testing::random_document(gen, 0));
        Document d2 = testing::random_document(gen, 1);
        d2.tokens.resize(g.size(), ".");
        for (auto it = d2.segments.begin(); it != d2.segments.end();)
            it = (it->end > static_cast<int>(g.size())) ? d2.segments.erase(it)
                                                        : it + 1;
        auto p = segments_to_labelsets(d2);
        double hl = hamming_loss(g, p);
        CHECK(hl >= 0.0);
        CHECK(hl <= 1.0);
        CHECK(hl == hamming_loss(p, g));
    }
}

TEST_CASE("macro_f1: spec worked example")
{
    // gold B I O O vs pred B O O O over {B, I, O}:
    // B: P=R=F1=1; I: predicted never, F1=0; O: P=2/3, R=1, F1=0.8.
    std::vector<int> gold{0, 1, 2, 2};
    std::vector<int> pred{0, 2, 2, 2};
    CHECK(macro_f1(3, gold, pred) == doctest::Approx(60.0).epsilon(1e-11));
}

TEST_CASE("macro_f1: absent classes drag the mean down")
{
    std::vector<int> gold{0, 0};
    std::vector<int> pred{0, 0};
    CHECK(macro_f1(2, gold, pred) == doctest::Approx(50.0));
    CHECK(macro_f1(1, gold, pred) == doctest::Approx(100.0));
    // All wrong: every class has zero F1.
    CHECK(macro_f1(2, {0, 0}, {1, 1}) == doctest::Approx(0.0));
}

TEST_CASE("m_s projects per activity")
{
    // gold: EE over tokens 0..1, pred: nothing.
    auto gold = labels({{{BioTag::B, Activity::EE}}, {{BioTag::I, Activity::EE}}});
    auto pred = labels({{}, {}});
    // EE projection gold B,I pred O,O: all three classes F1 = 0.
    CHECK(m_s(gold, pred, Activity::EE) == doctest::Approx(0.0));
    // Other activities: gold and pred all O; only O scores, 100/3.
    CHECK(m_s(gold, pred, Activity::DC) == doctest::Approx(100.0 / 3));
    // Perfect B and I; the O class never occurs, so its F1 = 0 still counts.
    CHECK(m_s(gold, gold, Activity::EE) == doctest::Approx(200.0 / 3));
}

TEST_CASE("m_a: 62.5 upper bound with 10 distinct activity sets")
{
    // One token per distinct activity set; perfect prediction.
    std::vector<LabelSet> gold;
    for (std::uint8_t mask = 0; mask < 16 && gold.size() < 10; ++mask) {
        LabelSet ls;
        for (std::size_t i = 0; i < kActivityCount; ++i)
            if (mask & (1u << i)) ls.set(kActivities[i], BioTag::B);
        gold.push_back(ls);
    }
    REQUIRE(gold.size() == 10);
    CHECK(m_a(gold, gold) == doctest::Approx(62.5).epsilon(1e-11));
}

TEST_CASE("m_a ignores the B/I distinction")
{
    auto gold = labels({{{BioTag::B, Activity::EE}}, {{BioTag::I, Activity::EE}}});
    auto pred = labels({{{BioTag::I, Activity::EE}}, {{BioTag::B, Activity::EE}}});
    CHECK(m_a(gold, pred) == m_a(gold, gold));
}

TEST_CASE("m_o: restriction to gold overlap tokens, absent when none")
{
    auto gold = labels({{{BioTag::B, Activity::EE}, {BioTag::B, Activity::DC}},
                        {{BioTag::I, Activity::EE}}});
    auto pred_good = gold;
    auto pred_bad = labels({{{BioTag::B, Activity::EE}},
                            {{BioTag::I, Activity::EE}}});
    // Only token 0 is an overlap token; pred_bad differs there in DC only.
    CHECK(m_o(gold, pred_good, Activity::EE).value() == doctest::Approx(100.0 / 3));
    CHECK(m_o(gold, pred_bad, Activity::EE) == m_o(gold, pred_good, Activity::EE));
    CHECK(m_o(gold, pred_bad, Activity::DC).value() == doctest::Approx(0.0));

    auto flat = labels({{{BioTag::B, Activity::EE}}, {}});
    CHECK(!m_o(flat, flat, Activity::EE).has_value());
}

TEST_CASE("evaluate assembles the individual scores")
{
    std::mt19937_64 gen(17);
    Document d = testing::random_document(gen, 0);
    auto gold = segments_to_labelsets(d);
    EvalReport r = evaluate(gold, gold);
    CHECK(r.hl == 0.0);
    for (Activity a : kActivities) {
        CHECK(r.m_s[static_cast<std::size_t>(a)] ==
              doctest::Approx(m_s(gold, gold, a)));
    }
    CHECK(r.m_a == doctest::Approx(m_a(gold, gold)));
    bool has_overlap = false;
    for (const LabelSet& ls : gold) has_overlap |= ls.typed_count() >= 2;
    CHECK(r.m_o.has_value() == has_overlap);
}

TEST_CASE("activity set order and names")
{
    const auto& order = activity_set_order();
    CHECK(order[0] == 0);
    CHECK(activity_set_name(0) == "O");
    CHECK(activity_set_name(1 << static_cast<int>(Activity::EE)) == "EE");
    CHECK(activity_set_name((1 << static_cast<int>(Activity::EE)) |
                            (1 << static_cast<int>(Activity::DC))) == "EE-DC");
    CHECK(activity_set_name(0b1111) == "HG-EG-EE-DC");
    // Singletons come before any pair, in canonical activity order.
    CHECK(activity_set_class(0b0001) == 1);  // HG
    CHECK(activity_set_class(0b0010) == 2);  // EG
    CHECK(activity_set_class(0b0100) == 3);  // EE
    CHECK(activity_set_class(0b1000) == 4);  // DC
    CHECK(activity_set_class(0b1111) == 15);
    for (int i = 0; i < 16; ++i) CHECK(activity_set_class(order[i]) == i);
}

TEST_CASE("confusion matrix: counts and row percentages")
{
    auto gold = labels({{{BioTag::B, Activity::EE}, {BioTag::B, Activity::DC}},
                        {{BioTag::I, Activity::EE}, {BioTag::I, Activity::DC}},
                        {}});
    auto pred = labels({{{BioTag::B, Activity::EE}, {BioTag::B, Activity::DC}},
                        {{BioTag::I, Activity::EE}},
                        {}});
    ConfusionMatrix cm = confusion_matrix(gold, pred);
    int ee_dc = activity_set_class((1 << 2) | (1 << 3));
    int ee = activity_set_class(1 << 2);
    CHECK(cm.counts[ee_dc][ee_dc] == 1);
    CHECK(cm.counts[ee_dc][ee] == 1);
    CHECK(cm.counts[0][0] == 1);
    CHECK(cm.row_total(ee_dc) == 2);
    CHECK(cm.percent(ee_dc, ee) == doctest::Approx(50.0));
    CHECK(cm.percent(5, 5) == 0.0);  // empty row
    CHECK(cm.row_empty(5));
    CHECK(!cm.col_empty(ee));
    long long total = 0;
    for (int r = 0; r < 16; ++r) total += cm.row_total(r);
    CHECK(total == 3);
}
