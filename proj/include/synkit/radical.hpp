#pragma once

#include <optional>
#include <vector>

#include "synkit/galois.hpp"

namespace synkit {

enum class RadicalMethod { Oracle, Algorithm1 };

struct RadicalResult {
    // members contain the rank-1 elements: the radical viewed as a set of
    // words always contains the reset words.
    MonoidIdeal rad;                         // zero = Syn
    std::vector<ElementId> rad_minus_syn;    // sorted
    int nilpotency_index = 1;
    RadicalMethod method = RadicalMethod::Oracle;

    bool semisimple() const { return rad_minus_syn.empty(); }
};

// Largest ideal that is nilpotent modulo Syn.  An element belongs exactly
// when its principal ideal contains no element with two or more cyclic
// points (such an element has an idempotent power outside Syn, and a
// finite nil ideal is nilpotent).  Computed by one reverse reachability
// sweep over the two-sided Cayley graph.
RadicalResult radical_oracle(const TransitionMonoid& m);

// Recursive computation over quotients by atoms:
//   simple            -> Syn
//   one atom s        -> pullback(Rad(A/s)) ∩ I(s)
//   two atoms s1, s2  -> pullback(Rad(A/s1)) ∩ pullback(Rad(A/s2))
// (two distinct atoms meet at the identity partition).
RadicalResult radical_algorithm1(const Automaton& a, const SearchLimits& lim = {});
RadicalResult radical_algorithm1(const Automaton& a, const TransitionMonoid& m,
                                 const SearchLimits& lim = {});

// rho(Rad): universal iff semisimple, otherwise non-trivial.
Partition radical_congruence(const GaloisContext& ctx, const RadicalResult& r);

// Iterated radical congruences: A_0 = A, rho_{i+1} = radical congruence of
// A_i, A_{i+1} = A_i / rho_{i+1}, until a semisimple quotient.  The lifted
// chain lives in Cong(A) and is strictly increasing; Rad^{steps+1} ⊆ Syn
// and steps + 2 is at most the lattice height.
struct RhoChain {
    std::vector<Partition> lifted;
    int steps = 0;
};
RhoChain rho_chain(const Automaton& a, const SearchLimits& lim = {});

struct HeightBoundReport {
    int nilpotency_index = 1;
    int height = 2;
    bool holds = false;
    bool attained = false;
};
HeightBoundReport height_bound_check(const Automaton& a, const SearchLimits& lim = {});

// Minimum-length monoid witness over the radical members (reset words
// included); ids sort by witness, so this is the least member's witness.
std::optional<Word> shortest_radical_word(const TransitionMonoid& m, const RadicalResult& r);

}  // namespace synkit
