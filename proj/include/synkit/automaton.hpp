#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synkit/errors.hpp"

namespace synkit {

using State = int;
using Letter = int;
using Word = std::vector<Letter>;

// Complete deterministic transition system: every state has exactly one
// successor per letter. States are 0-based indices.
struct Automaton {
    int n = 0;
    std::vector<std::string> letters;
    std::vector<std::vector<State>> delta;  // delta[letter][state]

    int alphabet_size() const { return static_cast<int>(letters.size()); }
    State step(State q, Letter x) const { return delta[x][q]; }

    // Validates completeness, ranges and distinct letter tokens.
    static Automaton create(int n, std::vector<std::string> letters,
                            std::vector<std::vector<State>> delta);
    void validate() const;
};

// Subset of states as a fixed-width bit vector.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(int n) : n_(n), bits_((n + 63) / 64, 0) {}
    static StateSet all(int n);
    static StateSet single(int n, State q);

    int width() const { return n_; }
    bool contains(State q) const { return (bits_[q >> 6] >> (q & 63)) & 1u; }
    void insert(State q) { bits_[q >> 6] |= uint64_t(1) << (q & 63); }
    void clear();
    int count() const;
    std::vector<State> states() const;  // ascending
    std::optional<State> only() const;  // the unique member, if a singleton

    bool operator==(const StateSet& o) const = default;

private:
    int n_ = 0;
    std::vector<uint64_t> bits_;
};

// Right action of words on states and state sets.
State apply_state(const Automaton& a, State q, const Word& w);
StateSet apply(const Automaton& a, const StateSet& s, const Word& w);

bool is_strongly_connected(const Automaton& a);

// Pair criterion: synchronizing iff every 2-set admits a merging word.
bool is_synchronizing(const Automaton& a);

struct SearchLimits {
    size_t max_subsets = size_t(1) << 20;
    size_t max_monoid = 1000000;
    size_t max_congruences = 100000;
    size_t max_product_states = size_t(1) << 20;
};

// Breadth-first search over subsets of Q.  Letters are explored in
// declared alphabet order, so the result is the lexicographically least
// word among those of minimum length.
Word shortest_reset_word(const Automaton& a, const SearchLimits& lim = {});

// Shortest merge distances over 2-subsets of Q, with collapse letters.
class PairTable {
public:
    explicit PairTable(const Automaton& a);
    // -1 when the pair admits no merging word.
    int dist(State p, State q) const;
    bool all_finite() const;
    int index(State p, State q) const;
    int pair_count() const { return static_cast<int>(dist_.size()); }
    int dist_by_index(int idx) const { return dist_[idx]; }

private:
    int n_;
    std::vector<int> dist_;
};

// Lexicographically least word of minimum length that strictly shrinks s
// (some pair of s merges).  nullopt when no pair of s can merge.
std::optional<Word> shortest_shrink_word(const Automaton& a, const StateSet& s);

// Pin-Frankl style loop: repeatedly append the shortest shrinking word
// until the image is a singleton.  Total length is at most (n^3 - n)/6.
Word greedy_reset_word(const Automaton& a);

}  // namespace synkit
