#include "epistact/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace epistact {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(std::size_t line_no, const std::string& msg)
{
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

void validate_document(const Document& doc)
{
    const int n = doc.size();
    for (const Segment& s : doc.segments) {
        if (!(0 <= s.begin && s.begin < s.end && s.end <= n))
            throw ParseError("document " + doc.doc_id + ": segment " +
                             std::string(to_string(s.activity)) + " [" +
                             std::to_string(s.begin) + "," +
                             std::to_string(s.end) + ") out of range for " +
                             std::to_string(n) + " tokens");
    }
    // No same-activity overlap per annotator.
    std::vector<Segment> sorted = doc.segments;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            const Segment& a = sorted[i];
            const Segment& b = sorted[j];
            if (b.begin >= a.end) break;
            if (a.activity == b.activity && a.annotator == b.annotator)
                throw ParseError(
                    "document " + doc.doc_id + ": overlapping " +
                    std::string(to_string(a.activity)) + " segments [" +
                    std::to_string(a.begin) + "," + std::to_string(a.end) +
                    ") and [" + std::to_string(b.begin) + "," +
                    std::to_string(b.end) + ") by annotator '" +
                    a.annotator.value_or("<gold>") + "'");
        }
    }
}

Corpus parse_corpus(const std::string& text)
{
    Corpus corpus;
    std::set<std::string> seen_ids;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::exception& e) {
            fail(line_no, std::string("malformed JSON: ") + e.what());
        }
        if (!rec.is_object()) fail(line_no, "record is not a JSON object");

        Document doc;
        try {
            doc.doc_id = rec.at("doc_id").get<std::string>();
            doc.domain = rec.value("domain", "");
            doc.case_id = rec.value("case_id", "");
            doc.tokens = rec.at("tokens").get<std::vector<std::string>>();
            for (const auto& a : rec.value("annotations", json::array())) {
                Segment s;
                s.activity = parse_activity(a.at("activity").get<std::string>());
                s.begin = a.at("begin").get<int>();
                s.end = a.at("end").get<int>();
                if (a.contains("annotator") && !a["annotator"].is_null())
                    s.annotator = a["annotator"].get<std::string>();
                doc.segments.push_back(s);
            }
        } catch (const json::exception& e) {
            fail(line_no, std::string("malformed record: ") + e.what());
        } catch (const std::invalid_argument& e) {
            fail(line_no, e.what());
        }

        if (!seen_ids.insert(doc.doc_id).second)
            fail(line_no, "duplicate doc_id '" + doc.doc_id + "'");
        try {
            validate_document(doc);
        } catch (const ParseError& e) {
            fail(line_no, e.what());
        }
        corpus.documents.push_back(std::move(doc));
    }
    return corpus;
}

Corpus load_corpus(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read corpus file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_corpus(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string serialize_corpus(const Corpus& corpus)
{
    std::string out;
    for (const Document& doc : corpus.documents) {
        ordered_json rec;
        rec["doc_id"] = doc.doc_id;
        rec["domain"] = doc.domain;
        rec["case_id"] = doc.case_id;
        rec["tokens"] = doc.tokens;
        std::vector<Segment> sorted = doc.segments;
        std::sort(sorted.begin(), sorted.end());
        ordered_json anns = ordered_json::array();
        for (const Segment& s : sorted) {
            ordered_json a;
            if (s.annotator)
                a["annotator"] = *s.annotator;
            else
                a["annotator"] = nullptr;
            a["activity"] = std::string(to_string(s.activity));
            a["begin"] = s.begin;
            a["end"] = s.end;
            anns.push_back(std::move(a));
        }
        rec["annotations"] = std::move(anns);
        out += rec.dump();
        out += '\n';
    }
    return out;
}

void save_corpus(const Corpus& corpus, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write corpus file: " + path);
    out << serialize_corpus(corpus);
}

}  // namespace epistact
