#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "epistact/corpus.hpp"

namespace epistact {

inline constexpr std::array<const char*, 3> kSplitNames{"train", "dev", "test"};

/// Deterministic stratified split: within each case_id group, documents are
/// shuffled by a PRNG seeded with `seed` and partitioned per largest-remainder
/// rounding of the ratios. Same seed, same split.
std::map<std::string, std::string> stratified_split(
    const Corpus& corpus, const std::array<double, 3>& ratios,
    std::uint64_t seed);

}  // namespace epistact
