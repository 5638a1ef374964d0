#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "synkit/corpus.hpp"

namespace synkit {

struct VerifyOptions {
    int random_count = 0;
    int max_states = 7;    // random sizes drawn from [2, max_states]
    int max_letters = 3;   // random alphabet sizes drawn from [1, max_letters]
    uint64_t seed = 42;
    bool include_corpus = true;
    SearchLimits limits;
};

// Corpus automata plus random synchronizing instances drawn with the
// documented generator: per instance n, k and a table seed come from one
// SplitMix64 stream; non-synchronizing draws are discarded.
std::vector<std::pair<std::string, Automaton>> sweep_population(const VerifyOptions& opt);

struct SuiteResult {
    std::string name;
    size_t checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
};

// suite: "galois", "radical", "classify" or "all".
std::vector<SuiteResult> run_verify(const std::string& suite, const VerifyOptions& opt);

}  // namespace synkit
