// Command-line front end wiring the library modules together.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "epistact/agreement.hpp"
#include "epistact/corpus.hpp"
#include "epistact/encoding.hpp"
#include "epistact/gold.hpp"
#include "epistact/metrics.hpp"
#include "epistact/report.hpp"
#include "epistact/significance.hpp"
#include "epistact/split.hpp"
#include "epistact/stats.hpp"
#include "epistact/tagger.hpp"

namespace {

using namespace epistact;
using nlohmann::json;
using nlohmann::ordered_json;

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("EPISTACT_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 13;
}

void write_output(const std::string& path, const std::string& content)
{
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + path);
    out << content;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::map<std::string, std::string> load_split(const std::string& path)
{
    json j = json::parse(read_file(path));
    std::map<std::string, std::string> split;
    for (auto& [k, v] : j.items()) split[k] = v.get<std::string>();
    return split;
}

/// Per-token LabelSets of two corpora aligned by doc_id.
std::pair<std::vector<LabelSet>, std::vector<LabelSet>> align(
    const Corpus& gold, const Corpus& pred)
{
    std::map<std::string, const Document*> by_id;
    for (const Document& doc : pred.documents) by_id[doc.doc_id] = &doc;
    std::vector<LabelSet> g, p;
    for (const Document& doc : gold.documents) {
        auto it = by_id.find(doc.doc_id);
        if (it == by_id.end())
            throw std::runtime_error("prediction is missing document " +
                                     doc.doc_id);
        if (it->second->tokens.size() != doc.tokens.size())
            throw std::runtime_error("token count mismatch in document " +
                                     doc.doc_id);
        auto gl = segments_to_labelsets(doc);
        auto pl = segments_to_labelsets(*it->second);
        g.insert(g.end(), gl.begin(), gl.end());
        p.insert(p.end(), pl.begin(), pl.end());
    }
    return {std::move(g), std::move(p)};
}

std::vector<double> load_scores(const std::string& path,
                                const std::string& metric)
{
    json j = json::parse(read_file(path));
    if (j.is_object()) {
        if (metric.empty())
            throw std::runtime_error(path +
                                     " holds an object; pass --metric to pick "
                                     "a score array");
        j = j.at(metric);
    }
    return j.get<std::vector<double>>();
}

ordered_json runs_to_json(const ExperimentResult& result)
{
    ordered_json j;
    for (const RunResult& run : result.runs) {
        j["hl"].push_back(run.report.hl);
        j["m_a"].push_back(run.report.m_a);
        for (Activity a : kActivities)
            j["m_s_" + std::string(to_string(a))].push_back(
                run.report.m_s[static_cast<std::size_t>(a)]);
        if (run.report.m_o)
            for (Activity a : kActivities)
                j["m_o_" + std::string(to_string(a))].push_back(
                    (*run.report.m_o)[static_cast<std::size_t>(a)]);
        j["best_epoch"].push_back(run.best_epoch);
        j["seed"].push_back(run.seed);
    }
    return j;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Toolkit for multi-label span annotation: corpus handling, "
                 "problem transformations, agreement, evaluation, tagging"};
    app.require_subcommand(1);

    std::string in_path, out_path, format_name = "text";
    std::string gold_path, pred_path, model_path, split_path;
    std::string a_path, b_path, metric;
    std::string strategy_name = "concat";
    std::string undecided_path;
    std::uint64_t seed = default_seed();
    int epochs = 15, runs = 10, k_threshold = 4, n_annotators = 5,
        comparisons = 1;
    double alpha = 0.05;
    std::array<double, 3> ratios{0.6, 0.2, 0.2};
    bool keep_empty = false;

    auto* validate = app.add_subcommand("validate", "parse and check a corpus");
    validate->add_option("--in", in_path)->required();

    auto* stats = app.add_subcommand("stats", "descriptive corpus statistics");
    stats->add_option("--in", in_path)->required();
    stats->add_option("--format", format_name);
    stats->add_option("--out", out_path);

    auto* split = app.add_subcommand("split", "stratified train/dev/test split");
    split->add_option("--in", in_path)->required();
    split->add_option("--seed", seed);
    split->add_option("--ratios", ratios)->expected(3);
    split->add_option("--out", out_path);

    auto* agree = app.add_subcommand("agreement", "inter-annotator agreement");
    agree->add_option("--in", in_path)->required();
    agree->add_option("--format", format_name);
    agree->add_option("--out", out_path);

    auto* gold = app.add_subcommand("gold", "majority-vote gold creation");
    gold->add_option("--in", in_path)->required();
    gold->add_option("-k,--threshold", k_threshold);
    gold->add_option("-n,--annotators", n_annotators);
    gold->add_option("--out", out_path);
    gold->add_option("--undecided", undecided_path);

    auto* transform =
        app.add_subcommand("transform", "export token-level transformations");
    transform->add_option("--in", in_path)->required();
    transform->add_option("--out", out_path);

    auto* train_cmd = app.add_subcommand("train", "train a tagger");
    train_cmd->add_option("--in", in_path)->required();
    train_cmd->add_option("--split", split_path);
    train_cmd->add_option("--strategy", strategy_name);
    train_cmd->add_option("--epochs", epochs);
    train_cmd->add_option("--seed", seed);
    train_cmd->add_option("--out", out_path)->required();

    auto* predict_cmd = app.add_subcommand("predict", "tag a corpus");
    predict_cmd->add_option("--model", model_path)->required();
    predict_cmd->add_option("--in", in_path)->required();
    predict_cmd->add_option("--out", out_path);

    auto* evaluate_cmd =
        app.add_subcommand("evaluate", "score predictions against gold");
    evaluate_cmd->add_option("--gold", gold_path)->required();
    evaluate_cmd->add_option("--pred", pred_path)->required();
    evaluate_cmd->add_option("--format", format_name);
    evaluate_cmd->add_option("--out", out_path);

    auto* confusion_cmd =
        app.add_subcommand("confusion", "activity-set confusion matrix");
    confusion_cmd->add_option("--gold", gold_path)->required();
    confusion_cmd->add_option("--pred", pred_path)->required();
    confusion_cmd->add_flag("--keep-empty", keep_empty,
                            "keep all-zero rows/columns");
    confusion_cmd->add_option("--out", out_path);

    auto* signif =
        app.add_subcommand("significance", "exact Mann-Whitney U test");
    signif->add_option("--a", a_path)->required();
    signif->add_option("--b", b_path)->required();
    signif->add_option("--alpha", alpha);
    signif->add_option("--comparisons", comparisons);
    signif->add_option("--metric", metric);
    signif->add_option("--format", format_name);
    signif->add_option("--out", out_path);

    auto* experiment =
        app.add_subcommand("experiment", "multi-run train/dev/test protocol");
    experiment->add_option("--in", in_path)->required();
    experiment->add_option("--split", split_path)->required();
    experiment->add_option("--strategy", strategy_name);
    experiment->add_option("--runs", runs);
    experiment->add_option("--epochs", epochs);
    experiment->add_option("--seed", seed);
    experiment->add_option("--format", format_name);
    experiment->add_option("--out", out_path);
    std::string runs_out;
    experiment->add_option("--runs-out", runs_out,
                           "per-run scores as JSON (significance input)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            Corpus corpus = load_corpus(in_path);
            std::cout << "OK: " << corpus.documents.size() << " documents\n";
        } else if (*stats) {
            write_output(out_path, emit_stats(corpus_stats(load_corpus(in_path)),
                                              parse_format(format_name)));
        } else if (*split) {
            auto result = stratified_split(load_corpus(in_path), ratios, seed);
            ordered_json j;
            for (const auto& [id, name] : result) j[id] = name;
            write_output(out_path, j.dump(1) + "\n");
        } else if (*agree) {
            Corpus corpus = load_corpus(in_path);
            write_output(out_path,
                         emit_agreement(agreement_report(study_from_corpus(corpus)),
                                        parse_format(format_name)));
        } else if (*gold) {
            GoldResult result =
                majority_gold(load_corpus(in_path), k_threshold, n_annotators);
            write_output(out_path, serialize_corpus(result.gold));
            if (!undecided_path.empty())
                write_output(undecided_path,
                             serialize_undecided(result.undecided));
        } else if (*transform) {
            write_output(out_path, to_conll(load_corpus(in_path)));
        } else if (*train_cmd) {
            Corpus corpus = load_corpus(in_path);
            std::vector<Document> docs;
            if (!split_path.empty()) {
                auto split_map = load_split(split_path);
                for (const Document& doc : corpus.documents)
                    if (split_map.count(doc.doc_id) &&
                        split_map.at(doc.doc_id) == "train")
                        docs.push_back(doc);
            } else {
                docs = corpus.documents;
            }
            TaggerModel model =
                train(docs, parse_strategy(strategy_name), epochs, seed);
            model.save(out_path);
        } else if (*predict_cmd) {
            TaggerModel model = TaggerModel::load(model_path);
            Corpus corpus = load_corpus(in_path);
            Corpus out;
            for (const Document& doc : corpus.documents) {
                Document pred = doc;
                pred.segments =
                    labelsets_to_segments(predict(model, doc),
                                          RepairPolicy::IobRepair);
                out.documents.push_back(std::move(pred));
            }
            write_output(out_path, serialize_corpus(out));
        } else if (*evaluate_cmd) {
            auto [g, p] = align(load_corpus(gold_path), load_corpus(pred_path));
            write_output(out_path,
                         emit_report(evaluate(g, p), parse_format(format_name)));
        } else if (*confusion_cmd) {
            auto [g, p] = align(load_corpus(gold_path), load_corpus(pred_path));
            write_output(out_path,
                         confusion_to_csv(confusion_matrix(g, p), !keep_empty));
        } else if (*signif) {
            auto result = mann_whitney_u(load_scores(a_path, metric),
                                         load_scores(b_path, metric), alpha,
                                         comparisons);
            write_output(out_path,
                         emit_significance(result, parse_format(format_name)));
        } else if (*experiment) {
            Corpus corpus = load_corpus(in_path);
            corpus.split = load_split(split_path);
            auto result = run_experiment(corpus, parse_strategy(strategy_name),
                                         runs, seed, epochs);
            std::string out;
            for (std::size_t r = 0; r < result.runs.size(); ++r)
                out += "run " + std::to_string(r + 1) + ":\n" +
                       emit_report(result.runs[r].report,
                                   parse_format(format_name));
            out += "mean over " + std::to_string(result.runs.size()) +
                   " runs:\n" +
                   emit_report(result.mean, parse_format(format_name));
            write_output(out_path, out);
            if (!runs_out.empty())
                write_output(runs_out, runs_to_json(result).dump(1) + "\n");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
