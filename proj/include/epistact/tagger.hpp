#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "epistact/corpus.hpp"
#include "epistact/metrics.hpp"

namespace epistact {

enum class Strategy { Separate, Concat, MultiOutput, Pref, Maj };

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

/// Binary indicator features for one token in context: surface, lowercased
/// form, 3-char prefix/suffix, shape tests, position bucket, the same for
/// window offsets -2..+2 (padding symbols at the boundaries).
std::vector<std::string> extract_features(const Document& doc, int index);

/// Averaged structured perceptron with constrained Viterbi decoding. One
/// model holds one task per sub-problem of its strategy (4 for Separate and
/// MultiOutput, 1 for Concat and Pref).
struct TaggerModel {
    static constexpr int kVersion = 1;

    struct Task {
        std::vector<std::string> labels;
        /// legal[p * labels.size() + y]: transition p -> y; p = labels.size()
        /// is the virtual start state.
        std::vector<std::uint8_t> legal;
        std::vector<double> emission;    // [feature * labels + y]
        std::vector<double> transition;  // [(labels+1) * labels], start row last
    };

    Strategy strategy = Strategy::Maj;
    std::uint64_t seed = 0;
    std::vector<std::string> feature_vocab;  // id = position
    std::vector<Task> tasks;

    std::string serialize() const;
    static TaggerModel deserialize(const std::string& text);
    void save(const std::string& path) const;
    static TaggerModel load(const std::string& path);
};

/// Trains on the given documents. Deterministic in (documents, strategy,
/// epochs, seed). Throws on an empty training set or strategy Maj.
TaggerModel train(const std::vector<Document>& docs, Strategy strategy,
                  int epochs, std::uint64_t seed);

/// Decodes one document into per-token LabelSets. Task outputs are merged
/// back through the segment view with iob-repair (a no-op for paths produced
/// under transition constraints). Maj needs no model and yields {(I,EE)}
/// everywhere.
std::vector<LabelSet> predict(const TaggerModel& model, const Document& doc);
std::vector<LabelSet> predict_maj(const Document& doc);

/// Number of tag repairs performed while merging decoder output, cumulative
/// over predict() calls; exposed for the strict-legality invariant checks.
long long repair_count();
void reset_repair_count();

struct RunResult {
    EvalReport report;
    int best_epoch = 0;
    std::uint64_t seed = 0;
};

struct ExperimentResult {
    std::vector<RunResult> runs;
    EvalReport mean;
};

/// Multi-run protocol: per run, train on the train split, pick the epoch
/// with the best dev Hamming loss, evaluate on test. Run r uses seed
/// base_seed + r. Requires a split on the corpus.
ExperimentResult run_experiment(const Corpus& corpus, Strategy strategy,
                                int runs, std::uint64_t base_seed,
                                int max_epochs);

}  // namespace epistact
