#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lzdict/input_set.hpp"

namespace lzdict {

// Synthetic corpus of strings alpha_1 beta alpha_2: random letter blocks
// around a middle block drawn from the lexicographically ordered
// strictly-increasing character combinations of a small disjoint alphabet.
// Block reuse is exact: every distinct alpha block occurs alpha_reps times
// across both slots, every beta block beta_reps times, so the corpus is full
// of repeated substrings that are not shared prefixes.
struct SynthParams {
    uint32_t alpha_len = 16;
    uint32_t beta_len = 6;
    uint32_t alpha_reps = 32;
    uint32_t beta_reps = 6;
    uint32_t beta_alphabet_size = 32;  // '!' (0x21) onward; letters a-z are the alpha alphabet
    uint64_t seed = 42;
    double scale = 1.0;   // shrinks the string count proportionally
    bool sorted = false;  // emit in lexicographic order instead of shuffled
};

// Uniform draw from [0, n); rejection sampling so results depend only on the
// engine's (standard-pinned) output stream, not on library internals.
uint64_t rng_below(std::mt19937_64& rng, uint64_t n);

template <typename T>
void fisher_yates(std::vector<T>& v, std::mt19937_64& rng) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng_below(rng, i)]);
}

// Deterministic for fixed params. Throws std::invalid_argument when the pool
// arithmetic is infeasible (zero strings after rounding, alphabet overflow).
InputSet gen_synth(const SynthParams& params);

// Structural self-check of a generated corpus; empty input is trivially
// valid. Violations are human-readable, capped at a few per kind.
struct SynthReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

SynthReport verify_synth(const InputSet& input, const SynthParams& params);

}  // namespace lzdict
