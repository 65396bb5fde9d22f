#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <random>

#include "epistact/agreement.hpp"
#include "test_util.hpp"

using namespace epistact;
using nlohmann::json;

namespace {

AnnotationStudy study_from_json(const json& j)
{
    AnnotationStudy s;
    for (const auto& len : j.at("docs")) s.section_lengths.push_back(len);
    for (Activity a : kActivities)
        s.category_names.emplace_back(to_string(a));
    for (const auto& [name, units] : j.at("annotators").items()) {
        s.annotators.push_back(name);
        std::vector<AnnotationStudy::Unit> out;
        for (const auto& u : units) {
            AnnotationStudy::Unit unit;
            unit.section = u.at(0);
            unit.category = static_cast<int>(
                parse_activity(u.at(1).get<std::string>()));
            unit.begin = u.at(2);
            unit.end = u.at(3);
            out.push_back(unit);
        }
        s.units.push_back(std::move(out));
    }
    return s;
}

json load_fixtures()
{
    std::ifstream in(std::string(TESTS_DIR) + "/fixtures/alpha_u_fixtures.json");
    REQUIRE(in.good());
    return json::parse(in);
}

std::optional<double> lookup(const AnnotationStudy& s, const std::string& key)
{
    if (key == "overall") return alpha_u(s, AlphaMode::Overall);
    if (key == "segment") return alpha_u(s, AlphaMode::SegmentOnly);
    if (key.rfind("cat:", 0) == 0)
        return alpha_u(s, AlphaMode::Category,
                       static_cast<int>(parse_activity(key.substr(4))));
    if (key.rfind("merged:", 0) == 0) {
        auto amp = key.find('&');
        return merged_alpha(s, parse_activity(key.substr(7, amp - 7)),
                            parse_activity(key.substr(amp + 1)));
    }
    if (key.rfind("pair:", 0) == 0) {
        auto amp = key.find('&');
        auto pair = std::make_pair(key.substr(5, amp - 5), key.substr(amp + 1));
        return pairwise_alpha(s).pairs.at(pair);
    }
    FAIL("unknown fixture key ", key);
    return std::nullopt;
}

}  // namespace

TEST_CASE("alpha_u matches the frozen reference fixtures")
{
    json fixtures = load_fixtures();
    REQUIRE(fixtures.size() >= 5);
    for (const auto& [name, fx] : fixtures.items()) {
        CAPTURE(name);
        AnnotationStudy s = study_from_json(fx.at("study"));
        for (const auto& [key, expected] : fx.at("alpha").items()) {
            CAPTURE(key);
            auto got = lookup(s, key);
            REQUIRE(got.has_value());
            CHECK(*got ==
                  doctest::Approx(expected.get<double>()).epsilon(1e-7));
        }
    }
}

TEST_CASE("alpha_u: identical annotators agree perfectly in every mode")
{
    AnnotationStudy s;
    s.section_lengths = {14, 9};
    s.annotators = {"a1", "a2"};
    s.category_names = {"HG", "EG", "EE", "DC"};
    std::vector<AnnotationStudy::Unit> units = {
        {0, static_cast<int>(Activity::EE), 2, 6},
        {0, static_cast<int>(Activity::DC), 4, 10},
        {1, static_cast<int>(Activity::HG), 0, 3},
    };
    s.units = {units, units};
    CHECK(alpha_u(s, AlphaMode::Overall).value() == 1.0);
    CHECK(alpha_u(s, AlphaMode::SegmentOnly).value() == 1.0);
    CHECK(alpha_u(s, AlphaMode::Category,
                  static_cast<int>(Activity::EE)).value() == 1.0);
    CHECK(merged_alpha(s, Activity::EE, Activity::DC).value() == 1.0);
    auto pw = pairwise_alpha(s);
    CHECK(pw.pairs.at({"a1", "a2"}).value() == 1.0);
}

TEST_CASE("alpha_u is invariant under translation and annotator order")
{
    AnnotationStudy s;
    s.section_lengths = {20};
    s.annotators = {"a1", "a2"};
    s.category_names = {"HG", "EG", "EE", "DC"};
    s.units = {{{0, 2, 3, 8}}, {{0, 2, 4, 8}}};
    auto base = alpha_u(s, AlphaMode::Overall);

    AnnotationStudy shifted = s;
    for (auto& per : shifted.units)
        for (auto& u : per) {
            u.begin += 5;
            u.end += 5;
        }
    CHECK(alpha_u(shifted, AlphaMode::Overall).value() ==
          doctest::Approx(base.value()));

    AnnotationStudy swapped = s;
    std::swap(swapped.units[0], swapped.units[1]);
    CHECK(alpha_u(swapped, AlphaMode::Overall).value() ==
          doctest::Approx(base.value()));
}

TEST_CASE("alpha_u degenerate cases")
{
    AnnotationStudy s;
    s.section_lengths = {10};
    s.annotators = {"a1", "a2"};
    s.category_names = {"HG", "EG", "EE", "DC"};
    s.units = {{}, {}};
    // No units at all: expected disagreement is zero, alpha undefined.
    CHECK(!alpha_u(s, AlphaMode::Overall).has_value());

    AnnotationStudy one;
    one.section_lengths = {10};
    one.annotators = {"solo"};
    one.category_names = {"HG"};
    one.units = {{}};
    CHECK_THROWS_AS(alpha_u(one, AlphaMode::Overall), std::invalid_argument);

    AnnotationStudy empty_continuum;
    empty_continuum.annotators = {"a1", "a2"};
    empty_continuum.units = {{}, {}};
    CHECK_THROWS_AS(alpha_u(empty_continuum, AlphaMode::Overall),
                    std::invalid_argument);
}

TEST_CASE("study_from_corpus: sections, annotators, categories")
{
    Corpus c;
    Document d1;
    d1.doc_id = "d1";
    d1.case_id = "c1";
    d1.tokens.assign(8, "t");
    d1.segments.push_back({Activity::EE, 1, 4, "zoe"});
    d1.segments.push_back({Activity::EE, 1, 4, "abe"});
    d1.segments.push_back({Activity::DC, 0, 6, "abe"});
    Document d2;
    d2.doc_id = "d2";
    d2.case_id = "c2";
    d2.tokens.assign(5, "t");
    d2.segments.push_back({Activity::HG, 2, 5, "zoe"});
    c.documents = {d1, d2};

    AnnotationStudy s = study_from_corpus(c);
    CHECK(s.section_lengths == std::vector<int>{8, 5});
    CHECK(s.annotators == std::vector<std::string>{"abe", "zoe"});  // sorted
    CHECK(s.continuum_length() == 13);
    REQUIRE(s.units.size() == 2);
    CHECK(s.units[0].size() == 2);  // abe
    CHECK(s.units[1].size() == 2);  // zoe
    bool zoe_d2 = false;
    for (const auto& u : s.units[1])
        if (u.section == 1 && u.begin == 2 && u.end == 5 &&
            u.category == static_cast<int>(Activity::HG))
            zoe_d2 = true;
    CHECK(zoe_d2);
}

TEST_CASE("agreement_report is consistent with the individual calls")
{
    json fixtures = load_fixtures();
    AnnotationStudy s = study_from_json(fixtures.at("two_cat").at("study"));
    AgreementReport r = agreement_report(s);
    CHECK(r.overall == alpha_u(s, AlphaMode::Overall));
    CHECK(r.segment_only == alpha_u(s, AlphaMode::SegmentOnly));
    for (Activity a : kActivities)
        CHECK(r.per_category[static_cast<std::size_t>(a)] ==
              alpha_u(s, AlphaMode::Category, static_cast<int>(a)));
    CHECK(r.merged.at({Activity::HG, Activity::EE}) ==
          merged_alpha(s, Activity::HG, Activity::EE));
    CHECK(r.pairwise.pairs.size() == 1);
}

TEST_CASE("pairwise alpha reports extremes")
{
    json fixtures = load_fixtures();
    AnnotationStudy s =
        study_from_json(fixtures.at("three_annotators").at("study"));
    PairwiseAlpha pw = pairwise_alpha(s);
    REQUIRE(pw.pairs.size() == 3);
    REQUIRE(pw.max.has_value());
    REQUIRE(pw.min.has_value());
    CHECK(pw.max->first == std::make_pair(std::string("a1"), std::string("a2")));
    CHECK(pw.max->second == doctest::Approx(1.0));
    CHECK(pw.min->second == doctest::Approx(0.0));
}

TEST_CASE("alpha_u on random corpora stays in (-inf, 1]")
{
    std::mt19937_64 gen(67);
    for (int i = 0; i < 20; ++i) {
        Corpus c;
        for (int d = 0; d < 3; ++d) {
            Document doc = testing::random_document(gen, d);
            for (auto& seg : doc.segments)
                seg.annotator = (gen() % 2) ? "a1" : "a2";
            // Drop same-annotator same-activity overlaps the relabeling may
            // have created.
            std::sort(doc.segments.begin(), doc.segments.end());
            std::vector<Segment> kept;
            for (const Segment& seg : doc.segments) {
                bool clash = false;
                for (const Segment& k : kept)
                    clash |= k.activity == seg.activity &&
                             k.annotator == seg.annotator &&
                             k.end > seg.begin && seg.end > k.begin;
                if (!clash) kept.push_back(seg);
            }
            doc.segments = kept;
            c.documents.push_back(std::move(doc));
        }
        AnnotationStudy s = study_from_corpus(c);
        if (s.annotator_count() < 2) continue;
        auto a = alpha_u(s, AlphaMode::Overall);
        if (a) CHECK(*a <= 1.0 + 1e-12);
    }
}
