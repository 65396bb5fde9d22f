#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epistact/types.hpp"

namespace epistact {

/// A typed, possibly overlapping span of tokens; [begin, end), end exclusive.
struct Segment {
    Activity activity;
    int begin = 0;
    int end = 0;
    std::optional<std::string> annotator;  // empty = gold

    int length() const { return end - begin; }

    bool operator==(const Segment&) const = default;
    auto sort_key() const
    {
        return std::tuple(begin, end, static_cast<int>(activity),
                          annotator.value_or(""));
    }
    bool operator<(const Segment& o) const { return sort_key() < o.sort_key(); }
};

struct Document {
    std::string doc_id;
    std::string domain;
    std::string case_id;
    std::vector<std::string> tokens;
    std::vector<Segment> segments;

    int size() const { return static_cast<int>(tokens.size()); }
};

struct Corpus {
    std::vector<Document> documents;
    /// Optional doc_id -> {"train","dev","test"}; covers every document when present.
    std::map<std::string, std::string> split;
};

/// Raised on malformed corpus input; the message names the offending line,
/// document, and field.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Checks the Document invariants: segment ranges, and no two same-activity
/// segments of one annotator overlapping. Throws ParseError.
void validate_document(const Document& doc);

/// Parses the JSON-lines corpus format (one document per line).
Corpus parse_corpus(const std::string& text);
Corpus load_corpus(const std::string& path);

/// Canonical serialization: fixed key order, annotations sorted by
/// (begin, end, activity, annotator), one compact JSON object per line.
std::string serialize_corpus(const Corpus& corpus);
void save_corpus(const Corpus& corpus, const std::string& path);

}  // namespace epistact
