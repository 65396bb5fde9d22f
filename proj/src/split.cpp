#include "epistact/split.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace epistact {

namespace {

/// Fisher-Yates with explicit draws; std::shuffle's draw sequence is
/// implementation-defined, this one reproduces across standard libraries.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& gen)
{
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[gen() % i]);
}

/// Largest-remainder apportionment of `total` into three parts; ties broken
/// by split order (train, dev, test).
std::array<int, 3> apportion(int total, const std::array<double, 3>& ratios)
{
    std::array<int, 3> counts{};
    std::array<double, 3> remainders{};
    int assigned = 0;
    for (int s = 0; s < 3; ++s) {
        double exact = total * ratios[s];
        counts[s] = static_cast<int>(std::floor(exact + 1e-9));
        remainders[s] = exact - counts[s];
        assigned += counts[s];
    }
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return remainders[a] > remainders[b];
    });
    for (int i = 0; assigned < total; ++i, ++assigned) ++counts[order[i % 3]];
    return counts;
}

}  // namespace

std::map<std::string, std::string> stratified_split(
    const Corpus& corpus, const std::array<double, 3>& ratios,
    std::uint64_t seed)
{
    if (corpus.documents.empty())
        throw std::invalid_argument("cannot split an empty corpus");
    double sum = 0.0;
    for (double r : ratios) {
        if (r < 0.0) throw std::invalid_argument("split ratio must be >= 0");
        sum += r;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("split ratios must sum to 1");

    // Group documents by case scenario, in corpus order.
    std::map<std::string, std::vector<std::string>> groups;
    for (const Document& doc : corpus.documents)
        groups[doc.case_id].push_back(doc.doc_id);

    std::map<std::string, std::string> split;
    std::mt19937_64 gen(seed);
    for (auto& [case_id, ids] : groups) {
        deterministic_shuffle(ids, gen);
        const auto counts = apportion(static_cast<int>(ids.size()), ratios);
        std::size_t pos = 0;
        for (int s = 0; s < 3; ++s)
            for (int i = 0; i < counts[s]; ++i)
                split[ids[pos++]] = kSplitNames[s];
    }
    return split;
}

}  // namespace epistact
