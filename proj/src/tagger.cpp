#include "epistact/tagger.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "epistact/encoding.hpp"

namespace epistact {

std::string to_string(Strategy s)
{
    switch (s) {
    case Strategy::Separate: return "separate";
    case Strategy::Concat: return "concat";
    case Strategy::MultiOutput: return "multi-output";
    case Strategy::Pref: return "pref";
    case Strategy::Maj: return "maj";
    }
    return "?";
}

Strategy parse_strategy(const std::string& s)
{
    if (s == "separate") return Strategy::Separate;
    if (s == "concat") return Strategy::Concat;
    if (s == "multi-output" || s == "multioutput") return Strategy::MultiOutput;
    if (s == "pref") return Strategy::Pref;
    if (s == "maj") return Strategy::Maj;
    throw std::invalid_argument("unknown strategy: " + s);
}

namespace {

bool ascii_punct(const std::string& s)
{
    if (s.empty()) return false;
    for (unsigned char c : s)
        if (!std::ispunct(c)) return false;
    return true;
}

bool ascii_digits(const std::string& s)
{
    if (s.empty()) return false;
    for (unsigned char c : s)
        if (!std::isdigit(c)) return false;
    return true;
}

std::string lowered(const std::string& s)
{
    std::string out = s;
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

std::vector<std::string> extract_features(const Document& doc, int index)
{
    const int n = doc.size();
    if (index < 0 || index >= n)
        throw std::out_of_range("token index out of range");

    std::vector<std::string> feats;
    feats.reserve(40);
    for (int off = -2; off <= 2; ++off) {
        const std::string o = std::to_string(off);
        const int t = index + off;
        if (t < 0 || t >= n) {
            feats.push_back("pad[" + o + "]=" + std::to_string(t < 0 ? t : t - n + 1));
            continue;
        }
        const std::string& w = doc.tokens[t];
        const std::string lw = lowered(w);
        feats.push_back("w[" + o + "]=" + w);
        feats.push_back("lw[" + o + "]=" + lw);
        feats.push_back("p3[" + o + "]=" + lw.substr(0, 3));
        feats.push_back("s3[" + o + "]=" +
                        (lw.size() > 3 ? lw.substr(lw.size() - 3) : lw));
        if (std::isupper(static_cast<unsigned char>(w[0])))
            feats.push_back("cap[" + o + "]");
        if (ascii_digits(w)) feats.push_back("dig[" + o + "]");
        if (ascii_punct(w)) feats.push_back("pun[" + o + "]");
    }
    if (index == 0) feats.push_back("pos=first");
    if (index == n - 1) feats.push_back("pos=last");
    if (index == 0 || doc.tokens[index - 1] == ".")
        feats.push_back("pos=sent-init");
    return feats;
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

long long g_repairs = 0;

using Task = TaggerModel::Task;

std::vector<std::uint8_t> bio_legality()
{
    // labels B=0, I=1, O=2; start state = 3. I only after B or I.
    const int nl = 3;
    std::vector<std::uint8_t> legal((nl + 1) * nl, 1);
    legal[2 * nl + 1] = 0;   // O -> I
    legal[nl * nl + 1] = 0;  // start -> I
    return legal;
}

std::vector<std::uint8_t> pref_legality(const std::vector<std::string>& labels)
{
    const int nl = static_cast<int>(labels.size());
    std::vector<std::uint8_t> legal((nl + 1) * nl, 1);
    for (int y = 0; y < nl; ++y) {
        if (labels[y][0] != 'I') continue;
        for (int p = 0; p <= nl; ++p) {
            bool ok = p < nl && labels[p][0] != 'O' &&
                      labels[p].substr(1) == labels[y].substr(1);
            legal[p * nl + y] = ok ? 1 : 0;
        }
    }
    return legal;
}

std::vector<std::uint8_t> concat_legality(const std::vector<std::string>& labels)
{
    const int nl = static_cast<int>(labels.size());
    std::vector<ConcatLabel> parsed;
    parsed.reserve(labels.size());
    for (const auto& s : labels) parsed.push_back(parse_concat(s));
    std::vector<std::uint8_t> legal((nl + 1) * nl, 1);
    for (int y = 0; y < nl; ++y) {
        for (int p = 0; p <= nl; ++p) {
            bool ok = true;
            for (std::size_t c = 0; c < 4 && ok; ++c) {
                if (parsed[y].tags[c] != BioTag::I) continue;
                ok = p < nl && parsed[p].tags[c] != BioTag::O;
            }
            legal[p * nl + y] = ok ? 1 : 0;
        }
    }
    return legal;
}

Task make_bio_task()
{
    Task t;
    t.labels = {"B", "I", "O"};
    t.legal = bio_legality();
    return t;
}

std::vector<std::string> pref_label_names()
{
    // Index layout matches label_index(): O, then B/I per activity.
    std::vector<std::string> names{"O"};
    for (Activity a : kActivities) {
        names.push_back("B" + std::string(to_string(a)));
        names.push_back("I" + std::string(to_string(a)));
    }
    return names;
}

/// Gold label-id sequence for one task of the given strategy.
std::vector<int> gold_ids(const Document& doc, Strategy strategy, int task,
                          const std::map<std::string, int>* concat_ids)
{
    const auto labelsets = segments_to_labelsets(doc);
    std::vector<int> ids;
    ids.reserve(labelsets.size());
    switch (strategy) {
    case Strategy::Separate:
    case Strategy::MultiOutput:
        for (const LabelSet& ls : labelsets)
            ids.push_back(static_cast<int>(ls.tag(kActivities[task])));
        break;
    case Strategy::Concat:
        for (const LabelSet& ls : labelsets) {
            auto it = concat_ids->find(to_string(ConcatLabel{ls.tags()}));
            if (it == concat_ids->end())
                throw std::logic_error("concat label outside inventory");
            ids.push_back(it->second);
        }
        break;
    case Strategy::Pref:
        for (const Label& l : apply_preference(doc))
            ids.push_back(label_index(l));
        break;
    case Strategy::Maj:
        throw std::invalid_argument("Maj baseline is not trainable");
    }
    return ids;
}

/// Viterbi over the task's label set with the legality mask.
std::vector<int> viterbi(const Task& task,
                         const std::vector<std::vector<int>>& feats,
                         const std::vector<double>& emission,
                         const std::vector<double>& transition)
{
    const int nl = static_cast<int>(task.labels.size());
    const int n = static_cast<int>(feats.size());
    std::vector<int> path(n, 0);
    if (n == 0) return path;

    std::vector<double> emit(static_cast<std::size_t>(n) * nl, 0.0);
    for (int t = 0; t < n; ++t)
        for (int f : feats[t])
            for (int y = 0; y < nl; ++y)
                emit[static_cast<std::size_t>(t) * nl + y] +=
                    emission[static_cast<std::size_t>(f) * nl + y];

    std::vector<double> score(static_cast<std::size_t>(n) * nl, kNegInf);
    std::vector<int> back(static_cast<std::size_t>(n) * nl, -1);
    for (int y = 0; y < nl; ++y) {
        if (!task.legal[nl * nl + y]) continue;
        score[y] = emit[y] + transition[static_cast<std::size_t>(nl) * nl + y];
    }
    for (int t = 1; t < n; ++t) {
        for (int y = 0; y < nl; ++y) {
            double best = kNegInf;
            int arg = -1;
            for (int p = 0; p < nl; ++p) {
                if (!task.legal[p * nl + y]) continue;
                double s = score[static_cast<std::size_t>(t - 1) * nl + p] +
                           transition[static_cast<std::size_t>(p) * nl + y];
                if (s > best) {
                    best = s;
                    arg = p;
                }
            }
            if (arg < 0) continue;
            score[static_cast<std::size_t>(t) * nl + y] =
                best + emit[static_cast<std::size_t>(t) * nl + y];
            back[static_cast<std::size_t>(t) * nl + y] = arg;
        }
    }
    int best_y = 0;
    double best = kNegInf;
    for (int y = 0; y < nl; ++y) {
        double s = score[static_cast<std::size_t>(n - 1) * nl + y];
        if (s > best) {
            best = s;
            best_y = y;
        }
    }
    path[n - 1] = best_y;
    for (int t = n - 1; t > 0; --t)
        path[t - 1] = back[static_cast<std::size_t>(t) * nl + path[t]];
    return path;
}

/// Perceptron weights with lazy averaging.
struct AveragedWeights {
    std::vector<double> w;
    std::vector<double> acc;  // sum over steps of step-index-weighted deltas

    explicit AveragedWeights(std::size_t size) : w(size, 0.0), acc(size, 0.0) {}

    void add(std::size_t i, double delta, long long step)
    {
        w[i] += delta;
        acc[i] += static_cast<double>(step) * delta;
    }

    std::vector<double> averaged(long long total_steps) const
    {
        std::vector<double> out = w;
        if (total_steps <= 0) return out;
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] -= acc[i] / static_cast<double>(total_steps + 1);
        return out;
    }
};

struct TrainerTask {
    Task task;
    AveragedWeights emission{0};
    AveragedWeights transition{0};
    long long step = 0;
    std::vector<std::vector<int>> gold;  // per doc

    void init(std::size_t n_features)
    {
        const std::size_t nl = task.labels.size();
        emission = AveragedWeights(n_features * nl);
        transition = AveragedWeights((nl + 1) * nl);
    }

    /// One mistake-driven update on a document; returns true on a mismatch.
    bool update(const std::vector<std::vector<int>>& feats, std::size_t doc)
    {
        ++step;
        const std::vector<int>& g = gold[doc];
        const std::vector<int> p = viterbi(task, feats, emission.w, transition.w);
        if (p == g) return false;
        const int nl = static_cast<int>(task.labels.size());
        for (std::size_t t = 0; t < g.size(); ++t) {
            if (g[t] != p[t]) {
                for (int f : feats[t]) {
                    emission.add(static_cast<std::size_t>(f) * nl + g[t], 1.0, step);
                    emission.add(static_cast<std::size_t>(f) * nl + p[t], -1.0, step);
                }
            }
            const int gp = t == 0 ? nl : g[t - 1];
            const int pp = t == 0 ? nl : p[t - 1];
            if (gp != pp || g[t] != p[t]) {
                transition.add(static_cast<std::size_t>(gp) * nl + g[t], 1.0, step);
                transition.add(static_cast<std::size_t>(pp) * nl + p[t], -1.0, step);
            }
        }
        return true;
    }

    Task snapshot() const
    {
        Task out = task;
        out.emission = emission.averaged(step);
        out.transition = transition.averaged(step);
        return out;
    }
};

struct Trainer {
    Strategy strategy;
    std::uint64_t seed;
    std::vector<std::string> vocab;
    std::unordered_map<std::string, int> vocab_ids;
    std::vector<std::vector<std::vector<int>>> feats;  // [doc][token][feature]
    std::vector<TrainerTask> tasks;
    std::mt19937_64 gen;
    std::vector<std::size_t> order;

    Trainer(const std::vector<Document>& docs, Strategy strategy_,
            std::uint64_t seed_)
        : strategy(strategy_), seed(seed_), gen(seed_)
    {
        if (docs.empty()) throw std::invalid_argument("empty training set");
        if (strategy == Strategy::Maj)
            throw std::invalid_argument("Maj baseline is not trainable");

        for (const Document& doc : docs) {
            feats.emplace_back();
            for (int t = 0; t < doc.size(); ++t) {
                std::vector<int> ids;
                for (const std::string& f : extract_features(doc, t)) {
                    auto [it, inserted] =
                        vocab_ids.emplace(f, static_cast<int>(vocab.size()));
                    if (inserted) vocab.push_back(f);
                    ids.push_back(it->second);
                }
                feats.back().push_back(std::move(ids));
            }
        }

        std::map<std::string, int> concat_ids;
        switch (strategy) {
        case Strategy::Separate:
        case Strategy::MultiOutput:
            for (int a = 0; a < 4; ++a) tasks.push_back({make_bio_task()});
            break;
        case Strategy::Pref: {
            TrainerTask t;
            t.task.labels = pref_label_names();
            t.task.legal = pref_legality(t.task.labels);
            tasks.push_back(std::move(t));
            break;
        }
        case Strategy::Concat: {
            // Inventory: tuples observed in training plus all-O.
            std::set<std::string> seen{"O-O-O-O"};
            for (const Document& doc : docs)
                for (const ConcatLabel& c : to_concat(segments_to_labelsets(doc)))
                    seen.insert(to_string(c));
            TrainerTask t;
            t.task.labels.assign(seen.begin(), seen.end());
            t.task.legal = concat_legality(t.task.labels);
            for (std::size_t i = 0; i < t.task.labels.size(); ++i)
                concat_ids[t.task.labels[i]] = static_cast<int>(i);
            tasks.push_back(std::move(t));
            break;
        }
        case Strategy::Maj:
            break;
        }

        for (std::size_t k = 0; k < tasks.size(); ++k) {
            tasks[k].init(vocab.size());
            for (const Document& doc : docs)
                tasks[k].gold.push_back(gold_ids(doc, strategy,
                                                 static_cast<int>(k),
                                                 &concat_ids));
        }
        order.resize(docs.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
    }

    /// One pass over the training data. Separate trains each task on its own
    /// shuffled document order; MultiOutput (and the single-task strategies)
    /// walk one shuffled order and update every task per document.
    void run_epoch()
    {
        if (strategy == Strategy::Separate) {
            for (TrainerTask& task : tasks) {
                shuffle_order();
                for (std::size_t d : order) task.update(feats[d], d);
            }
        } else {
            shuffle_order();
            for (std::size_t d : order)
                for (TrainerTask& task : tasks) task.update(feats[d], d);
        }
    }

    void shuffle_order()
    {
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[gen() % i]);
    }

    TaggerModel snapshot() const
    {
        TaggerModel model;
        model.strategy = strategy;
        model.seed = seed;
        model.feature_vocab = vocab;
        for (const TrainerTask& t : tasks) model.tasks.push_back(t.snapshot());
        return model;
    }
};

std::vector<LabelSet> labelsets_from_segments(const std::vector<Segment>& segs,
                                              std::size_t n_tokens)
{
    std::vector<LabelSet> out(n_tokens);
    for (const Segment& s : segs) {
        out[s.begin].set(s.activity, BioTag::B);
        for (int t = s.begin + 1; t < s.end; ++t)
            out[t].set(s.activity, BioTag::I);
    }
    return out;
}

/// Normalizes raw decoder output through the segment view, repairing (and
/// counting) any dangling I tags.
std::vector<LabelSet> normalize(std::vector<LabelSet> raw)
{
    for (Activity a : kActivities) {
        BioTag prev = BioTag::O;
        for (LabelSet& ls : raw) {
            if (ls.tag(a) == BioTag::I && prev == BioTag::O) ++g_repairs;
            prev = ls.tag(a);
        }
    }
    const auto segs = labelsets_to_segments(raw, RepairPolicy::IobRepair);
    return labelsets_from_segments(segs, raw.size());
}

}  // namespace

long long repair_count() { return g_repairs; }
void reset_repair_count() { g_repairs = 0; }

std::vector<LabelSet> predict_maj(const Document& doc)
{
    std::vector<LabelSet> out(doc.tokens.size());
    for (LabelSet& ls : out) ls.set(Activity::EE, BioTag::I);
    return out;
}

std::vector<LabelSet> predict(const TaggerModel& model, const Document& doc)
{
    if (model.strategy == Strategy::Maj) return predict_maj(doc);

    std::unordered_map<std::string, int> vocab_ids;
    vocab_ids.reserve(model.feature_vocab.size());
    for (std::size_t i = 0; i < model.feature_vocab.size(); ++i)
        vocab_ids.emplace(model.feature_vocab[i], static_cast<int>(i));

    std::vector<std::vector<int>> feats;
    for (int t = 0; t < doc.size(); ++t) {
        std::vector<int> ids;
        for (const std::string& f : extract_features(doc, t))
            if (auto it = vocab_ids.find(f); it != vocab_ids.end())
                ids.push_back(it->second);
        feats.push_back(std::move(ids));
    }

    std::vector<LabelSet> raw(doc.tokens.size());
    switch (model.strategy) {
    case Strategy::Separate:
    case Strategy::MultiOutput:
        for (std::size_t k = 0; k < model.tasks.size(); ++k) {
            const Task& task = model.tasks[k];
            const auto path = viterbi(task, feats, task.emission, task.transition);
            for (std::size_t t = 0; t < path.size(); ++t)
                raw[t].set(kActivities[k], static_cast<BioTag>(path[t]));
        }
        break;
    case Strategy::Concat: {
        const Task& task = model.tasks.front();
        const auto path = viterbi(task, feats, task.emission, task.transition);
        for (std::size_t t = 0; t < path.size(); ++t) {
            const ConcatLabel c = parse_concat(task.labels[path[t]]);
            for (std::size_t a = 0; a < 4; ++a)
                raw[t].set(kActivities[a], c.tags[a]);
        }
        break;
    }
    case Strategy::Pref: {
        const Task& task = model.tasks.front();
        const auto path = viterbi(task, feats, task.emission, task.transition);
        for (std::size_t t = 0; t < path.size(); ++t) {
            const std::string& name = task.labels[path[t]];
            if (name != "O")
                raw[t].set(parse_activity(name.substr(1)), parse_bio(name[0]));
        }
        break;
    }
    case Strategy::Maj:
        break;
    }
    return normalize(std::move(raw));
}

TaggerModel train(const std::vector<Document>& docs, Strategy strategy,
                  int epochs, std::uint64_t seed)
{
    if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
    Trainer trainer(docs, strategy, seed);
    for (int e = 0; e < epochs; ++e) trainer.run_epoch();
    return trainer.snapshot();
}

namespace {

using nlohmann::ordered_json;

ordered_json task_to_json(const Task& t)
{
    ordered_json j;
    j["labels"] = t.labels;
    j["emission"] = t.emission;
    j["transition"] = t.transition;
    return j;
}

std::vector<std::uint8_t> legality_for(Strategy strategy,
                                       const std::vector<std::string>& labels)
{
    switch (strategy) {
    case Strategy::Separate:
    case Strategy::MultiOutput:
        return bio_legality();
    case Strategy::Pref:
        return pref_legality(labels);
    case Strategy::Concat:
        return concat_legality(labels);
    case Strategy::Maj:
        return {};
    }
    return {};
}

}  // namespace

std::string TaggerModel::serialize() const
{
    ordered_json j;
    j["format"] = "epistact-tagger";
    j["version"] = kVersion;
    j["strategy"] = to_string(strategy);
    j["seed"] = seed;
    j["features"] = feature_vocab;
    ordered_json ts = ordered_json::array();
    for (const Task& t : tasks) ts.push_back(task_to_json(t));
    j["tasks"] = std::move(ts);
    return j.dump() + "\n";
}

TaggerModel TaggerModel::deserialize(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed model file: ") + e.what());
    }
    if (j.value("format", "") != "epistact-tagger")
        throw std::runtime_error("not an epistact tagger model");
    if (j.value("version", -1) != kVersion)
        throw std::runtime_error(
            "model version mismatch: expected " + std::to_string(kVersion) +
            ", found " + j.value("version", nlohmann::json()).dump());

    TaggerModel model;
    model.strategy = parse_strategy(j.at("strategy").get<std::string>());
    model.seed = j.at("seed").get<std::uint64_t>();
    model.feature_vocab = j.at("features").get<std::vector<std::string>>();
    for (const auto& tj : j.at("tasks")) {
        Task t;
        t.labels = tj.at("labels").get<std::vector<std::string>>();
        t.emission = tj.at("emission").get<std::vector<double>>();
        t.transition = tj.at("transition").get<std::vector<double>>();
        t.legal = legality_for(model.strategy, t.labels);
        const std::size_t nl = t.labels.size();
        if (t.emission.size() != model.feature_vocab.size() * nl ||
            t.transition.size() != (nl + 1) * nl)
            throw std::runtime_error("model weight arrays have wrong shape");
        model.tasks.push_back(std::move(t));
    }
    return model;
}

void TaggerModel::save(const std::string& path) const
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write model file: " + path);
    out << serialize();
}

TaggerModel TaggerModel::load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize(buf.str());
}

namespace {

std::vector<LabelSet> flat_gold(const std::vector<Document>& docs)
{
    std::vector<LabelSet> out;
    for (const Document& doc : docs) {
        auto ls = segments_to_labelsets(doc);
        out.insert(out.end(), ls.begin(), ls.end());
    }
    return out;
}

std::vector<LabelSet> flat_predict(const TaggerModel& model,
                                   const std::vector<Document>& docs)
{
    std::vector<LabelSet> out;
    for (const Document& doc : docs) {
        auto ls = predict(model, doc);
        out.insert(out.end(), ls.begin(), ls.end());
    }
    return out;
}

}  // namespace

ExperimentResult run_experiment(const Corpus& corpus, Strategy strategy,
                                int runs, std::uint64_t base_seed,
                                int max_epochs)
{
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (corpus.split.empty())
        throw std::invalid_argument("run_experiment needs a corpus split");

    std::vector<Document> train_docs, dev_docs, test_docs;
    for (const Document& doc : corpus.documents) {
        auto it = corpus.split.find(doc.doc_id);
        if (it == corpus.split.end())
            throw std::invalid_argument("document " + doc.doc_id +
                                        " missing from split");
        if (it->second == "train")
            train_docs.push_back(doc);
        else if (it->second == "dev")
            dev_docs.push_back(doc);
        else
            test_docs.push_back(doc);
    }

    if (strategy != Strategy::Maj && train_docs.empty())
        throw std::invalid_argument("the train split is empty");
    if (test_docs.empty())
        throw std::invalid_argument("the test split is empty");

    const auto dev_gold = flat_gold(dev_docs);
    const auto test_gold = flat_gold(test_docs);

    ExperimentResult result;
    for (int r = 0; r < runs; ++r) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(r);
        RunResult run;
        run.seed = seed;
        if (strategy == Strategy::Maj) {
            std::vector<LabelSet> pred;
            for (const Document& doc : test_docs) {
                auto p = predict_maj(doc);
                pred.insert(pred.end(), p.begin(), p.end());
            }
            run.report = evaluate(test_gold, pred);
        } else {
            Trainer trainer(train_docs, strategy, seed);
            double best_hl = std::numeric_limits<double>::infinity();
            TaggerModel best_model;
            for (int e = 1; e <= max_epochs; ++e) {
                trainer.run_epoch();
                TaggerModel snap = trainer.snapshot();
                const double hl = dev_gold.empty()
                                      ? 0.0
                                      : hamming_loss(dev_gold,
                                                     flat_predict(snap, dev_docs));
                if (hl < best_hl) {
                    best_hl = hl;
                    best_model = std::move(snap);
                    run.best_epoch = e;
                }
                if (dev_gold.empty()) {  // no dev data: keep the last epoch
                    best_model = trainer.snapshot();
                    run.best_epoch = e;
                }
            }
            run.report = evaluate(test_gold, flat_predict(best_model, test_docs));
        }
        result.runs.push_back(std::move(run));
    }

    EvalReport& mean = result.mean;
    const double n = static_cast<double>(result.runs.size());
    bool any_mo = false;
    std::array<double, 4> mo_sum{};
    for (const RunResult& run : result.runs) {
        mean.hl += run.report.hl / n;
        mean.m_a += run.report.m_a / n;
        for (std::size_t a = 0; a < 4; ++a) mean.m_s[a] += run.report.m_s[a] / n;
        if (run.report.m_o) {
            any_mo = true;
            for (std::size_t a = 0; a < 4; ++a)
                mo_sum[a] += (*run.report.m_o)[a] / n;
        }
    }
    if (any_mo) mean.m_o = mo_sum;
    return result;
}

}  // namespace epistact
