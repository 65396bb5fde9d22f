#pragma once

#include <vector>

#include "epistact/corpus.hpp"
#include "epistact/types.hpp"

namespace epistact {

/// Per-token BIO tags for one activity; same length as the token sequence.
using BioSequence = std::vector<BioTag>;

/// How labelsets_to_segments treats I-after-O (or I after another segment's
/// end): strict rejects, iob-repair turns such I into B.
enum class RepairPolicy { Strict, IobRepair };

/// Token-level view of a document's segments: B at a segment begin, I strictly
/// inside, Outside only where no segment covers the token.
std::vector<LabelSet> segments_to_labelsets(const Document& doc);

/// Inverse mapping: per activity, maximal runs opened by B (or by a repaired I)
/// and extended by consecutive I. Under Strict, an I with no open segment of
/// the same activity throws, naming token index and activity.
std::vector<Segment> labelsets_to_segments(const std::vector<LabelSet>& labels,
                                           RepairPolicy policy);

/// Projection of each LabelSet onto one activity (Separate transformation).
BioSequence to_separate(const std::vector<LabelSet>& labels, Activity a);

/// Concat transformation: the 4-tuple of per-activity projections per token.
std::vector<ConcatLabel> to_concat(const std::vector<LabelSet>& labels);

/// Multi-output transformation: all four projections, aligned per token.
std::array<BioSequence, 4> to_multioutput(const std::vector<LabelSet>& labels);

/// Single-label reduction by segment-level preference DC > HG > EG > EE.
/// Segments are kept greedily in preference order (ties: smaller begin, then
/// smaller end) and dropped entirely when sharing a token with a kept segment.
std::vector<Label> apply_preference(const Document& doc);

/// CoNLL-style export: one token per line with TAB-separated columns
/// token, HG, EG, EE, DC, concat, pref; "# doc_id = ..." before each document,
/// blank line between documents.
std::string to_conll(const Corpus& corpus);

}  // namespace epistact
