#pragma once

#include <map>
#include <optional>
#include <string>

#include "synkit/radical.hpp"

namespace synkit {

enum class AutomatonClass {
    Simple,
    QuasiSimple,
    Radical,
    SemisimpleOther,
    NonSemisimpleOther,
    NotSynchronizing,
};

std::string to_string(AutomatonClass c);

struct Classification {
    AutomatonClass category = AutomatonClass::NotSynchronizing;
    bool strongly_connected = false;
    std::optional<bool> semisimple;               // absent when not synchronizing
    bool has_min_nontrivial_congruence = false;
    std::optional<Partition> min_congruence;
    std::optional<Partition> radical_congruence;  // absent when not synchronizing
    std::optional<size_t> zero_minimal_count;     // mod Syn; absent above the cap
};

// Cong(A) = {identity, universal}; both the atoms and the lattice are
// computed and compared.
bool is_simple(const Automaton& a, const SearchLimits& lim = {});

// Rad = Syn.
bool is_semisimple(const Automaton& a, const SearchLimits& lim = {});

// Cong(A)\{identity} has a minimum s and I(s) = Syn.
bool is_quasi_simple(const Automaton& a, const SearchLimits& lim = {});

// Non-semisimple, Cong(A)\{identity} has a minimum, and Rad differs from
// the pullback of Rad(A/rho) along the radical congruence rho.
bool is_radical_class(const Automaton& a, const SearchLimits& lim = {});

Classification classify(const Automaton& a, const SearchLimits& lim = {});

// Everything the report and the classification need, computed once.
struct Analysis {
    Automaton automaton;
    bool synchronizing = false;
    bool strongly_connected = false;
    TransitionMonoid monoid;
    CongruenceLattice lattice;
    std::vector<Partition> atom_list;            // empty when n == 1
    std::optional<RadicalResult> rad;            // oracle; absent when not synchronizing
    Classification classification;
};
Analysis analyze(const Automaton& a, const SearchLimits& lim = {});

// Flat key/value report; printing sorts by key.
using Report = std::map<std::string, std::string>;
Report analysis_report(const Analysis& an, const SearchLimits& lim = {});

// For simple or quasi-simple input: M/Syn has exactly one 0-minimal ideal.
CheckReport verify_unique_zero_minimal(const Automaton& a, const SearchLimits& lim = {});

// For radical input with minimum congruence s: exactly one 0-minimal
// ideal of M/Rad lies inside Syn(A/s) ∪ Rad.
CheckReport verify_radical_structure(const Automaton& a, const SearchLimits& lim = {});

// For a semisimple automaton with a non-trivial minimum congruence s and
// I(s) != Syn: Syn(A/s) = Syn(A) and the quotient is semisimple.
CheckReport verify_min_congruence_syn(const Automaton& a, const SearchLimits& lim = {});

}  // namespace synkit
