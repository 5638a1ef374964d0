#pragma once

#include <string>
#include <vector>

#include "synkit/automaton.hpp"

namespace synkit {

// Partition of [0, n) in canonical form: labels[q] is the least state of
// q's block.  Equality of partitions is equality of label vectors.
class Partition {
public:
    Partition() = default;
    static Partition identity(int n);
    static Partition universal(int n);
    static Partition from_labels(std::vector<State> labels);  // canonicalizes
    static Partition from_blocks(int n, const std::vector<std::vector<State>>& blocks);

    int size() const { return static_cast<int>(labels_.size()); }
    State label(State q) const { return labels_[q]; }
    bool same_block(State p, State q) const { return labels_[p] == labels_[q]; }
    const std::vector<State>& labels() const { return labels_; }
    std::vector<std::vector<State>> blocks() const;  // ordered by least member
    int block_count() const;
    int min_block_size() const;

    bool is_identity() const;
    bool is_universal() const;
    bool is_trivial() const { return is_identity() || is_universal(); }

    // this is finer than (or equal to) other
    bool refines(const Partition& other) const;

    bool operator==(const Partition& o) const = default;
    bool operator<(const Partition& o) const { return labels_ < o.labels_; }

private:
    std::vector<State> labels_;
};

using Congruence = Partition;

std::string format_partition(const Partition& p);

// Action stability: related states have related images under every letter.
bool is_congruence(const Automaton& a, const Partition& p);

Partition meet(const Partition& s1, const Partition& s2);
Partition join(const Automaton& a, const Partition& s1, const Partition& s2);

// Least congruence relating p and q: collect the 2-set images of {p,q},
// then take the equivalence closure.  The closure is already a congruence.
Partition principal_congruence(const Automaton& a, State p, State q);

// Digraph on 2-subsets of Q.  Edges keep only images that are still
// 2-sets; a pair is collapse-marked when some letter merges it.
struct PairsDigraph {
    int n = 0;
    std::vector<std::pair<State, State>> pairs;    // lex order, p < q
    std::vector<std::vector<int>> edges;           // per pair: distinct successor ids, sorted
    std::vector<bool> collapses;

    static PairsDigraph build(const Automaton& a);
    int index(State p, State q) const;

    // Strongly connected components, numbered by least member pair.
    struct Condensation {
        std::vector<int> comp_of;                  // pair id -> component
        std::vector<std::vector<int>> members;     // component -> sorted pair ids
        std::vector<std::vector<int>> succ;        // component -> sorted successor components
        std::vector<bool> sink;                    // no outgoing edges
    };
    Condensation condense() const;
};

// Sink components of the condensation, closed to congruences and deduped.
// For a simple automaton this is {universal}.
std::vector<Partition> atoms(const Automaton& a);

struct CongruenceLattice {
    std::vector<Partition> elements;           // block_count desc, then labels
    std::vector<std::vector<int>> covers;      // covers[i]: j with elements[i] covered by elements[j]
    int bottom = 0;                            // identity
    int top = 0;                               // universal

    int index_of(const Partition& p) const;    // -1 when absent
};

// Join-closure of the principal congruences (every congruence is a join
// of principal ones).
CongruenceLattice congruence_lattice(const Automaton& a, const SearchLimits& lim = {});

// Number of elements in a longest chain.
int lattice_height(const CongruenceLattice& l);

struct QuotientResult {
    Automaton automaton;
    std::vector<int> class_of;  // state -> block index (blocks by least member)
};
QuotientResult quotient(const Automaton& a, const Partition& s);

// Congruence of a generated by relating p,q exactly when their s-blocks
// are r-related in the quotient.
Partition lift_congruence(const Automaton& a, const Partition& s, const Partition& r);

// Reset-word lifts along a quotient.
struct LiftResult {
    Word word;
    bool bound_checked = false;  // the stated length bound was verified
};

// Requires strong connectivity, a synchronizing automaton, a non-trivial
// congruence with a class of size 1 or 2, and u resetting the quotient.
// When |u| <= (|Q/s|-1)^2 the result is checked to be shorter than (n-1)^2.
LiftResult lift_reset_word_small_class(const Automaton& a, const Partition& s, const Word& u);

// Requires min class size >= 3.  When |u| <= (n/m-1)^2 the combined bound
//   n^2/m^2 - n/m + (n^3-n)/6 - ((n-m)^3 + 3(n-m)^2 + 2(n-m))/6
// is checked; otherwise the word is returned with bound_checked = false.
LiftResult lift_reset_word_general(const Automaton& a, const Partition& s, const Word& u);

}  // namespace synkit
