#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "synkit/classify.hpp"

namespace synkit {

// Cyclic shift on letter a; letter b sends 0 to 1 and fixes the rest.
Automaton cerny(int n);

// Single letter a: state i steps down to i-1, state 0 is fixed.
Automaton chain(int n);

// Two 4-cycles stacked by a folding letter c; 8 states, letters a,b,c.
Automaton double_cerny();

// 4 states, letters a,b,c; one proper congruence, quotient a 3-cycle.
Automaton modcerny1();

// modcerny1 plus a letter d mapping Q onto the merged class while
// separating its two states.
Automaton modcerny2();

// 3 states: a is constant, b swaps the non-fixed pair.
Automaton quasi3();

// SplitMix64: the documented deterministic generator behind random
// corpora.  Bounded draws use rejection sampling, so a fixed (n, k, seed)
// reproduces the same table on every platform.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next();
    uint64_t next_below(uint64_t bound);  // uniform in [0, bound)
};

// Uniform independent entries, filled letter-major then state-major.
Automaton random_automaton(int n, int k, uint64_t seed);

struct CorpusEntry {
    std::string name;
    Automaton automaton;
    std::string note;
    std::map<std::string, std::string> expected_report;  // subset of report keys
    std::vector<std::string> reset_words;                // words that must reset
};

// The named instances plus the parametric families at the sizes the
// regression suite exercises.
std::vector<CorpusEntry> corpus_entries();

CheckReport check_corpus_entry(const CorpusEntry& e, const SearchLimits& lim = {});

}  // namespace synkit
