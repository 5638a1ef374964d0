#pragma once

#include <optional>
#include <string>
#include <vector>

#include "synkit/monoid.hpp"

namespace synkit {

struct CheckReport {
    size_t checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
    void fail(std::string msg) { failures.push_back(std::move(msg)); }
};

// Automaton together with its transition monoid and (lazily) its
// congruence lattice; the ambient structure for the maps rho(-) and I(-).
class GaloisContext {
public:
    explicit GaloisContext(Automaton a, SearchLimits lim = {});

    const Automaton& automaton() const { return a_; }
    const TransitionMonoid& monoid() const { return m_; }
    const CongruenceLattice& lattice() const;
    const SearchLimits& limits() const { return lim_; }

private:
    Automaton a_;
    TransitionMonoid m_;
    SearchLimits lim_;
    mutable std::optional<CongruenceLattice> lattice_;
};

// Meet of the kernels of the ideal's members.  Members of the zero ideal
// participate through their original transformations, which is harmless:
// rho(I ∪ Syn) equals the meet over I alone since constants have universal
// kernel.  Requires a nonempty left ideal.
Partition rho_of_ideal(const GaloisContext& ctx, const MonoidIdeal& j);
Partition rho_of_ideal(const TransitionMonoid& m, const MonoidIdeal& j);

// Elements whose kernel contains s (every s-class maps to a point).
MonoidIdeal ideal_of_congruence(const GaloisContext& ctx, const Partition& s);
MonoidIdeal ideal_of_congruence(const TransitionMonoid& m, const Partition& s);

// Checks, over every lattice congruence and every principal ideal:
//   (i)  J ⊆ I(rho(J))
//   (ii) s ⊆ rho(I(s))
//   (iii) I(rho(I(s))) = I(s)
//   (iv) rho(I(rho(J))) = rho(J)
CheckReport galois_check(const GaloisContext& ctx);

// Syn(A/s) · I(s) ⊆ Syn(A) and (I(s) ∩ Syn(A/s))^2 ⊆ Syn(A), element-wise.
CheckReport annihilator_check(const GaloisContext& ctx, const Partition& s);

// For a semisimple automaton and every Galois fixed point:
//   u · I(s) ⊆ Syn(A)  <=>  u ∈ Syn(A/s)
// checked element-wise over M.
CheckReport left_annihilator_check(const GaloisContext& ctx);

// Acceptor for the words u with ker(pi(u)) ⊇ s: synchronous product of
// the per-class subset automata, initial components the s-classes, finals
// where every component is a singleton.
struct Recognizer {
    Automaton automaton;
    State initial = 0;
    std::vector<State> finals;  // sorted
};
Recognizer ideal_language_recognizer(const GaloisContext& ctx, const Partition& s);
bool recognizer_accepts(const Recognizer& r, const Word& w);

}  // namespace synkit
