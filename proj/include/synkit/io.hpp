#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "synkit/classify.hpp"
#include "synkit/galois.hpp"

namespace synkit {

// Text format:
//   aut 1
//   states N
//   letters t1 ... tk
//   t1: i0 i1 ... i(N-1)        (one line per letter, 0-based images)
//   initial q                   (optional, acceptors only)
//   final f1 f2 ...             (optional)
// '#' starts a comment; blank lines are ignored.
struct AutRecord {
    Automaton automaton;
    std::optional<State> initial;
    std::vector<State> finals;  // sorted
};

AutRecord parse_aut(std::istream& in);
AutRecord parse_aut_string(const std::string& text);
AutRecord parse_aut_path(const std::string& path);  // "-" reads stdin
void print_aut(std::ostream& out, const AutRecord& rec);
std::string aut_to_string(const AutRecord& rec);

// Partition file: each non-comment line lists the states of one block;
// states not mentioned are singletons.
Partition parse_partition(std::istream& in, int n);
Partition parse_partition_path(const std::string& path, int n);

// Reports print as sorted "key = value" lines.
void print_report(std::ostream& out, const Report& r);

// Words print as concatenated tokens when every letter is a single
// character, otherwise space-separated.
std::string format_word(const Automaton& a, const Word& w);

// Canonical DOT (sorted nodes and edges) for golden-file stability.
std::string pairs_digraph_dot(const Automaton& a);
std::string lattice_dot(const CongruenceLattice& l);

}  // namespace synkit
