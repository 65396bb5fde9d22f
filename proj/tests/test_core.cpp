#include <doctest.h>

#include <random>
#include <set>

#include "epistact/corpus.hpp"
#include "epistact/split.hpp"
#include "epistact/stats.hpp"
#include "test_util.hpp"

using namespace epistact;

TEST_CASE("parse minimal well-formed record")
{
    const std::string line =
        R"({"doc_id":"d1","domain":"MeD","case_id":"c1","tokens":["a","b"],)"
        R"("annotations":[{"annotator":null,"activity":"EE","begin":0,"end":2}]})"
        "\n";
    Corpus c = parse_corpus(line);
    REQUIRE(c.documents.size() == 1);
    const Document& d = c.documents[0];
    CHECK(d.doc_id == "d1");
    CHECK(d.tokens.size() == 2);
    REQUIRE(d.segments.size() == 1);
    CHECK(d.segments[0].activity == Activity::EE);
    CHECK(d.segments[0].begin == 0);
    CHECK(d.segments[0].end == 2);
    CHECK_FALSE(d.segments[0].annotator.has_value());
}

TEST_CASE("segment out of range is rejected with doc and segment named")
{
    const std::string line =
        R"({"doc_id":"d1","domain":"","case_id":"","tokens":["a","b"],)"
        R"("annotations":[{"annotator":null,"activity":"EE","begin":0,"end":3}]})";
    CHECK_THROWS_WITH_AS(parse_corpus(line),
                         doctest::Contains("d1"), ParseError);
    try {
        parse_corpus(line);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("[0,3)") != std::string::npos);
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("same-activity same-annotator overlap is rejected")
{
    const std::string line =
        R"({"doc_id":"d1","domain":"","case_id":"","tokens":["a","b","c"],)"
        R"("annotations":[{"annotator":"a1","activity":"EE","begin":0,"end":2},)"
        R"({"annotator":"a1","activity":"EE","begin":1,"end":3}]})";
    CHECK_THROWS_WITH_AS(parse_corpus(line), doctest::Contains("overlapping"),
                         ParseError);
    // Different annotators or different activities are fine.
    const std::string ok =
        R"({"doc_id":"d1","domain":"","case_id":"","tokens":["a","b","c"],)"
        R"("annotations":[{"annotator":"a1","activity":"EE","begin":0,"end":2},)"
        R"({"annotator":"a2","activity":"EE","begin":1,"end":3},)"
        R"({"annotator":"a1","activity":"DC","begin":1,"end":3}]})";
    CHECK_NOTHROW(parse_corpus(ok));
}

TEST_CASE("duplicate doc_id is rejected")
{
    const std::string rec =
        R"({"doc_id":"d1","domain":"","case_id":"","tokens":["a"],"annotations":[]})";
    CHECK_THROWS_WITH_AS(parse_corpus(rec + "\n" + rec),
                         doctest::Contains("duplicate"), ParseError);
}

TEST_CASE("malformed JSON names the line")
{
    const std::string rec =
        R"({"doc_id":"d1","domain":"","case_id":"","tokens":["a"],"annotations":[]})";
    CHECK_THROWS_WITH_AS(parse_corpus(rec + "\nnot json\n"),
                         doctest::Contains("line 2"), ParseError);
}

TEST_CASE("unknown fields are ignored")
{
    const std::string line =
        R"({"doc_id":"d1","domain":"","case_id":"","tokens":["a"],)"
        R"("annotations":[],"extra":{"x":1}})";
    CHECK(parse_corpus(line).documents.size() == 1);
}

TEST_CASE("parse after serialize is the identity (canonical bytes)")
{
    std::mt19937_64 gen(41);
    for (int round = 0; round < 50; ++round) {
        Corpus c = testing::random_corpus(gen, 5);
        const std::string once = serialize_corpus(c);
        const std::string twice = serialize_corpus(parse_corpus(once));
        CHECK(once == twice);
    }
}

TEST_CASE("stratified split: exact divisibility")
{
    Corpus c;
    for (int i = 0; i < 10; ++i) {
        Document d;
        d.doc_id = "d" + std::to_string(i);
        d.case_id = "c1";
        d.tokens = {"x"};
        c.documents.push_back(d);
    }
    auto split = stratified_split(c, {0.6, 0.2, 0.2}, 7);
    std::map<std::string, int> counts;
    for (const auto& [id, s] : split) ++counts[s];
    CHECK(counts["train"] == 6);
    CHECK(counts["dev"] == 2);
    CHECK(counts["test"] == 2);
}

TEST_CASE("stratified split: largest remainder on 5 docs")
{
    // Oracle: enumerate all integer roundings of (3.0, 1.0, 1.0); the
    // largest-remainder rule keeps the floors since they already sum to 5.
    Corpus c;
    for (int i = 0; i < 5; ++i) {
        Document d;
        d.doc_id = "d" + std::to_string(i);
        d.case_id = "c1";
        d.tokens = {"x"};
        c.documents.push_back(d);
    }
    auto split = stratified_split(c, {0.6, 0.2, 0.2}, 7);
    std::map<std::string, int> counts;
    for (const auto& [id, s] : split) ++counts[s];
    CHECK(counts["train"] == 3);
    CHECK(counts["dev"] == 1);
    CHECK(counts["test"] == 1);
}

TEST_CASE("stratified split: per-case proportions and partition property")
{
    Corpus c;
    for (int i = 0; i < 20; ++i) {
        Document d;
        d.doc_id = "d" + std::to_string(i);
        d.case_id = i < 10 ? "c1" : "c2";
        d.tokens = {"x"};
        c.documents.push_back(d);
    }
    auto split = stratified_split(c, {0.6, 0.2, 0.2}, 3);
    CHECK(split.size() == 20);  // every document exactly once
    std::map<std::pair<std::string, std::string>, int> counts;
    for (const Document& d : c.documents)
        ++counts[{d.case_id, split.at(d.doc_id)}];
    for (const std::string case_id : {"c1", "c2"}) {
        CHECK(counts[{case_id, "train"}] == 6);
        CHECK(counts[{case_id, "dev"}] == 2);
        CHECK(counts[{case_id, "test"}] == 2);
    }

    CHECK(stratified_split(c, {0.6, 0.2, 0.2}, 3) == split);  // same seed
}

TEST_CASE("stratified split input validation")
{
    Corpus empty;
    CHECK_THROWS_AS(stratified_split(empty, {0.6, 0.2, 0.2}, 1),
                    std::invalid_argument);
    Corpus c;
    Document d;
    d.doc_id = "d0";
    d.tokens = {"x"};
    c.documents.push_back(d);
    CHECK_THROWS_AS(stratified_split(c, {1.2, -0.1, -0.1}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(stratified_split(c, {0.5, 0.2, 0.2}, 1),
                    std::invalid_argument);
}

TEST_CASE("corpus stats: hand-checked overlap")
{
    Document d;
    d.doc_id = "d1";
    d.case_id = "c";
    d.tokens.assign(15, "x");
    d.segments.push_back({Activity::EE, 0, 10, std::nullopt});
    d.segments.push_back({Activity::DC, 5, 15, std::nullopt});
    Corpus c;
    c.documents.push_back(d);

    StatsTable t = corpus_stats(c);
    const auto& pair = t.pairs.at({Activity::EE, Activity::DC});
    CHECK(pair.overlap_count == 1);
    CHECK(*pair.avg_overlap_length == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(t.activities[static_cast<int>(Activity::EE)].count == 1);
    CHECK(*t.activities[static_cast<int>(Activity::EE)].avg_length ==
          doctest::Approx(10.0));
    CHECK_FALSE(t.activities[static_cast<int>(Activity::HG)].avg_length);
}

TEST_CASE("corpus stats: additivity and exact length identity")
{
    std::mt19937_64 gen(99);
    Corpus c = testing::random_corpus(gen, 12);
    StatsTable t = corpus_stats(c);
    for (Activity a : kActivities) {
        long long count = 0, tokens = 0;
        for (const Document& d : c.documents)
            for (const Segment& s : d.segments)
                if (s.activity == a) {
                    ++count;
                    tokens += s.length();
                }
        const auto& pa = t.activities[static_cast<int>(a)];
        CHECK(pa.count == count);
        if (count > 0)
            CHECK(*pa.avg_length * count ==
                  doctest::Approx(static_cast<double>(tokens)).epsilon(1e-9));
        CHECK(*pa.avg_per_doc ==
              doctest::Approx(static_cast<double>(count) /
                              c.documents.size()));
    }
    // Symmetry is structural: pairs are keyed canonically; check that every
    // unordered pair appears exactly once.
    CHECK(t.pairs.size() == 6);
}

TEST_CASE("corpus stats rejects an empty corpus")
{
    CHECK_THROWS_AS(corpus_stats(Corpus{}), std::invalid_argument);
}
