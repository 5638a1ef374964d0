#include "synkit/classify.hpp"

#include <algorithm>
#include <sstream>

namespace synkit {

std::string to_string(AutomatonClass c) {
    switch (c) {
        case AutomatonClass::Simple: return "simple";
        case AutomatonClass::QuasiSimple: return "quasi-simple";
        case AutomatonClass::Radical: return "radical";
        case AutomatonClass::SemisimpleOther: return "semisimple-other";
        case AutomatonClass::NonSemisimpleOther: return "non-semisimple-other";
        case AutomatonClass::NotSynchronizing: return "not-synchronizing";
    }
    return "?";
}

namespace {

bool atoms_say_simple(const std::vector<Partition>& at) {
    return at.size() == 1 && at[0].is_universal();
}

bool lattice_says_simple(const CongruenceLattice& lat) {
    return lat.elements.size() == 2;
}

// exactly one atom that refines every non-identity lattice element
std::optional<Partition> minimum_nontrivial(const std::vector<Partition>& at,
                                            const CongruenceLattice& lat) {
    if (at.size() != 1) return std::nullopt;
    const Partition& cand = at[0];
    for (const Partition& s : lat.elements) {
        if (s.is_identity()) continue;
        if (!cand.refines(s)) return std::nullopt;
    }
    return cand;
}

}  // namespace

Analysis analyze(const Automaton& a, const SearchLimits& lim) {
    a.validate();
    Analysis an{.automaton = a};
    an.strongly_connected = is_strongly_connected(a);
    an.synchronizing = is_synchronizing(a);
    an.monoid = TransitionMonoid::enumerate(a, lim);
    an.lattice = congruence_lattice(a, lim);
    if (a.n >= 2) an.atom_list = atoms(a);

    Classification& c = an.classification;
    c.strongly_connected = an.strongly_connected;
    if (a.n >= 2) {
        c.min_congruence = minimum_nontrivial(an.atom_list, an.lattice);
        c.has_min_nontrivial_congruence =
            c.min_congruence.has_value() && !c.min_congruence->is_universal();
    }
    if (!an.synchronizing) {
        c.category = AutomatonClass::NotSynchronizing;
        return an;
    }
    an.rad = radical_oracle(an.monoid);
    c.semisimple = an.rad->semisimple();
    c.radical_congruence = rho_of_ideal(an.monoid, an.rad->rad);
    {
        MonoidIdeal syn = syn_ideal(an.monoid);
        if (syn.members.size() < size_t(an.monoid.size()))
            c.zero_minimal_count = zero_minimal_ideals(an.monoid, syn).size();
    }

    if (a.n < 2) {
        c.category = AutomatonClass::Simple;  // degenerate single state
        return an;
    }
    if (atoms_say_simple(an.atom_list) != lattice_says_simple(an.lattice))
        throw Error("internal: atom and lattice views of simplicity disagree");
    if (atoms_say_simple(an.atom_list)) {
        c.category = AutomatonClass::Simple;
        return an;
    }
    if (c.has_min_nontrivial_congruence) {
        MonoidIdeal is = ideal_of_congruence(an.monoid, *c.min_congruence);
        if (is.members == syn_ideal(an.monoid).members) {
            c.category = AutomatonClass::QuasiSimple;
            return an;
        }
    }
    if (!*c.semisimple && c.has_min_nontrivial_congruence) {
        InducedMorphism phi = induced_morphism(an.monoid, a, *c.radical_congruence, lim);
        RadicalResult rad_q = radical_oracle(phi.monoid);
        std::vector<ElementId> pulled = pullback(phi, rad_q.rad.members);
        if (pulled != an.rad->rad.members) {
            c.category = AutomatonClass::Radical;
            return an;
        }
    }
    c.category = *c.semisimple ? AutomatonClass::SemisimpleOther
                               : AutomatonClass::NonSemisimpleOther;
    return an;
}

Classification classify(const Automaton& a, const SearchLimits& lim) {
    return analyze(a, lim).classification;
}

bool is_simple(const Automaton& a, const SearchLimits& lim) {
    if (a.n < 2) throw TrivialAutomaton("simplicity needs at least two states");
    bool by_atoms = atoms_say_simple(atoms(a));
    bool by_lattice = lattice_says_simple(congruence_lattice(a, lim));
    if (by_atoms != by_lattice)
        throw Error("internal: atom and lattice views of simplicity disagree");
    return by_atoms;
}

bool is_semisimple(const Automaton& a, const SearchLimits& lim) {
    if (!is_synchronizing(a)) throw NotSynchronizing("automaton admits no reset word");
    TransitionMonoid m = TransitionMonoid::enumerate(a, lim);
    return radical_oracle(m).semisimple();
}

bool is_quasi_simple(const Automaton& a, const SearchLimits& lim) {
    if (!is_synchronizing(a)) throw NotSynchronizing("automaton admits no reset word");
    if (a.n < 2) return false;
    auto at = atoms(a);
    if (atoms_say_simple(at)) return false;
    auto lat = congruence_lattice(a, lim);
    auto min = minimum_nontrivial(at, lat);
    if (!min || min->is_universal()) return false;
    TransitionMonoid m = TransitionMonoid::enumerate(a, lim);
    return ideal_of_congruence(m, *min).members == syn_ideal(m).members;
}

bool is_radical_class(const Automaton& a, const SearchLimits& lim) {
    if (!is_synchronizing(a)) throw NotSynchronizing("automaton admits no reset word");
    if (a.n < 2) return false;
    TransitionMonoid m = TransitionMonoid::enumerate(a, lim);
    RadicalResult rad = radical_oracle(m);
    if (rad.semisimple()) return false;
    auto min = minimum_nontrivial(atoms(a), congruence_lattice(a, lim));
    if (!min || min->is_universal()) return false;
    Partition rho = rho_of_ideal(m, rad.rad);
    InducedMorphism phi = induced_morphism(m, a, rho, lim);
    RadicalResult rad_q = radical_oracle(phi.monoid);
    return pullback(phi, rad_q.rad.members) != rad.rad.members;
}

// ---- reports ----

Report analysis_report(const Analysis& an, const SearchLimits& lim) {
    Report r;
    const bool sync = an.synchronizing;
    r["class"] = to_string(an.classification.category);
    r["strongly_connected"] = an.strongly_connected ? "true" : "false";
    r["semisimple"] = an.classification.semisimple
                          ? (*an.classification.semisimple ? "true" : "false")
                          : "none";
    r["monoid_size"] = std::to_string(an.monoid.size());
    r["syn_size"] = std::to_string(syn_ideal(an.monoid).members.size());
    r["rad_size"] = an.rad ? std::to_string(an.rad->rad.members.size()) : "none";
    r["nilpotency_index"] = an.rad ? std::to_string(an.rad->nilpotency_index) : "none";
    r["lattice_size"] = std::to_string(an.lattice.elements.size());
    r["lattice_height"] = std::to_string(lattice_height(an.lattice));
    r["atom_count"] = std::to_string(an.atom_list.size());
    if (sync) {
        try {
            r["shortest_reset_length"] =
                std::to_string(shortest_reset_word(an.automaton, lim).size());
        } catch (const CapExceeded&) {
            r["shortest_reset_length"] = "capped";
        }
        r["greedy_reset_length"] = std::to_string(greedy_reset_word(an.automaton).size());
        auto w = shortest_radical_word(an.monoid, *an.rad);
        r["shortest_radical_length"] = w ? std::to_string(w->size()) : "none";
    } else {
        r["shortest_reset_length"] = "none";
        r["greedy_reset_length"] = "none";
        r["shortest_radical_length"] = "none";
    }
    return r;
}

// ---- structural verifiers ----

CheckReport verify_unique_zero_minimal(const Automaton& a, const SearchLimits& lim) {
    Analysis an = analyze(a, lim);
    auto cat = an.classification.category;
    if (cat != AutomatonClass::Simple && cat != AutomatonClass::QuasiSimple)
        throw WrongClass("unique 0-minimal ideal law needs a simple or quasi-simple automaton");
    CheckReport rep;
    MonoidIdeal syn = syn_ideal(an.monoid);
    if (syn.members.size() == size_t(an.monoid.size())) {
        rep.notes.push_back("degenerate: Syn is the whole monoid");
        return rep;
    }
    auto zm = zero_minimal_ideals(an.monoid, syn);
    ++rep.checks;
    if (zm.size() != 1)
        rep.fail("expected exactly one 0-minimal ideal, found " + std::to_string(zm.size()));
    return rep;
}

CheckReport verify_radical_structure(const Automaton& a, const SearchLimits& lim) {
    Analysis an = analyze(a, lim);
    if (an.classification.category != AutomatonClass::Radical)
        throw WrongClass("radical structure law needs a radical automaton");
    CheckReport rep;
    const Partition& sigma = *an.classification.min_congruence;
    auto zm = zero_minimal_ideals(an.monoid, an.rad->rad);
    MonoidIdeal sq = syn_quotient_ideal(an.monoid, sigma);
    std::vector<char> sq_mask(an.monoid.size(), 0);
    for (ElementId e : sq.members) sq_mask[e] = 1;
    size_t inside = 0;
    for (const MonoidIdeal& ideal : zm) {
        bool contained = std::all_of(ideal.members.begin(), ideal.members.end(),
                                     [&](ElementId e) { return sq_mask[e]; });
        if (contained) ++inside;
    }
    ++rep.checks;
    if (inside != 1)
        rep.fail("expected exactly one 0-minimal ideal inside Syn(A/sigma), found " +
                 std::to_string(inside));
    rep.notes.push_back("total 0-minimal ideals mod Rad: " + std::to_string(zm.size()));
    return rep;
}

CheckReport verify_min_congruence_syn(const Automaton& a, const SearchLimits& lim) {
    Analysis an = analyze(a, lim);
    if (!an.synchronizing) throw NotSynchronizing("automaton admits no reset word");
    if (!an.classification.semisimple.value_or(false))
        throw PreconditionViolation("automaton must be semisimple");
    if (!an.classification.has_min_nontrivial_congruence)
        throw PreconditionViolation("no non-trivial minimum congruence");
    const Partition& sigma = *an.classification.min_congruence;
    MonoidIdeal is = ideal_of_congruence(an.monoid, sigma);
    MonoidIdeal syn = syn_ideal(an.monoid);
    if (is.members == syn.members)
        throw PreconditionViolation("I(sigma) equals Syn");
    CheckReport rep;
    ++rep.checks;
    if (syn_quotient_ideal(an.monoid, sigma).members != syn.members)
        rep.fail("Syn(A/sigma) differs from Syn(A)");
    ++rep.checks;
    QuotientResult q = quotient(a, sigma);
    if (!is_semisimple(q.automaton, lim)) rep.fail("quotient is not semisimple");
    return rep;
}

}  // namespace synkit
