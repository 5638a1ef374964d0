#include "synkit/radical.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <set>

namespace synkit {

namespace {

// States on cycles of the functional graph: the eventual image of the
// transformation.  An element has an idempotent power of rank 1 exactly
// when it has a single cyclic point.
int cyclic_point_count(std::span<const State> f) {
    const int n = static_cast<int>(f.size());
    // 0 = fresh, 1 = on current path, 2 = done
    std::vector<int8_t> color(n, 0);
    std::vector<State> path;
    int cyclic = 0;
    for (State start = 0; start < n; ++start) {
        if (color[start]) continue;
        path.clear();
        State q = start;
        while (color[q] == 0) {
            color[q] = 1;
            path.push_back(q);
            q = f[q];
        }
        if (color[q] == 1) {
            // new cycle: count back from q along the path
            for (size_t i = path.size(); i-- > 0;) {
                ++cyclic;
                if (path[i] == q) break;
            }
        }
        for (State p : path) color[p] = 2;
    }
    return cyclic;
}

std::vector<char> nil_escape_mask(const TransitionMonoid& m) {
    // elements whose principal ideal contains a non-nil element
    const int k = m.generator_count();
    std::vector<char> bad(m.size(), 0);
    std::deque<ElementId> queue;
    for (ElementId e = 0; e < m.size(); ++e) {
        if (cyclic_point_count(m.images(e)) >= 2) {
            bad[e] = 1;
            queue.push_back(e);
        }
    }
    // reverse reachability over the two-sided Cayley graph
    std::vector<std::vector<ElementId>> rev(m.size());
    for (ElementId e = 0; e < m.size(); ++e) {
        for (Letter x = 0; x < k; ++x) {
            rev[m.right(e, x)].push_back(e);
            rev[m.left(x, e)].push_back(e);
        }
    }
    while (!queue.empty()) {
        ElementId e = queue.front();
        queue.pop_front();
        for (ElementId p : rev[e]) {
            if (!bad[p]) {
                bad[p] = 1;
                queue.push_back(p);
            }
        }
    }
    return bad;
}

RadicalResult finish_result(const TransitionMonoid& m, std::vector<ElementId> members,
                            RadicalMethod method) {
    RadicalResult r;
    r.method = method;
    MonoidIdeal syn = syn_ideal(m);
    r.rad.members = std::move(members);
    r.rad.zero = syn.members;
    std::set_difference(r.rad.members.begin(), r.rad.members.end(), syn.members.begin(),
                        syn.members.end(), std::back_inserter(r.rad_minus_syn));
    auto idx = is_nilpotent_mod(m, r.rad, syn);
    if (!idx) throw Error("internal: radical is not nilpotent modulo Syn");
    r.nilpotency_index = *idx;
    return r;
}

}  // namespace

RadicalResult radical_oracle(const TransitionMonoid& m) {
    MonoidIdeal syn = syn_ideal(m);
    if (syn.members.empty()) throw NotSynchronizing("Syn is empty");
    std::vector<char> bad = nil_escape_mask(m);
    std::vector<ElementId> members;
    for (ElementId e = 0; e < m.size(); ++e)
        if (!bad[e]) members.push_back(e);
    return finish_result(m, std::move(members), RadicalMethod::Oracle);
}

namespace {

std::vector<char> alg1_mask(const Automaton& a, const TransitionMonoid& m,
                            const SearchLimits& lim) {
    MonoidIdeal syn = syn_ideal(m);
    if (syn.members.empty()) throw NotSynchronizing("Syn is empty");
    std::vector<char> mask(m.size(), 0);
    if (a.n < 2) {
        std::fill(mask.begin(), mask.end(), 1);
        return mask;
    }
    std::vector<Partition> at = atoms(a);
    if (at.size() == 1 && at[0].is_universal()) {
        for (ElementId e : syn.members) mask[e] = 1;
        return mask;
    }
    auto pullback_mask = [&](const Partition& s) {
        InducedMorphism phi = induced_morphism(m, a, s, lim);
        std::vector<char> sub = alg1_mask(phi.quot.automaton, phi.monoid, lim);
        std::vector<char> out(m.size(), 0);
        for (ElementId e = 0; e < m.size(); ++e) out[e] = sub[phi.map[e]];
        return out;
    };
    if (at.size() == 1) {
        const Partition& s = at[0];
        std::vector<char> pulled = pullback_mask(s);
        MonoidIdeal is = ideal_of_congruence(m, s);
        std::vector<char> imask(m.size(), 0);
        for (ElementId e : is.members) imask[e] = 1;
        for (ElementId e = 0; e < m.size(); ++e) mask[e] = pulled[e] && imask[e];
        return mask;
    }
    // two distinct atoms meet at the identity partition
    std::vector<char> p1 = pullback_mask(at[0]);
    std::vector<char> p2 = pullback_mask(at[1]);
    for (ElementId e = 0; e < m.size(); ++e) mask[e] = p1[e] && p2[e];
    return mask;
}

}  // namespace

RadicalResult radical_algorithm1(const Automaton& a, const TransitionMonoid& m,
                                 const SearchLimits& lim) {
    std::vector<char> mask = alg1_mask(a, m, lim);
    std::vector<ElementId> members;
    for (ElementId e = 0; e < m.size(); ++e)
        if (mask[e]) members.push_back(e);
    return finish_result(m, std::move(members), RadicalMethod::Algorithm1);
}

RadicalResult radical_algorithm1(const Automaton& a, const SearchLimits& lim) {
    TransitionMonoid m = TransitionMonoid::enumerate(a, lim);
    return radical_algorithm1(a, m, lim);
}

Partition radical_congruence(const GaloisContext& ctx, const RadicalResult& r) {
    Partition rho = rho_of_ideal(ctx, r.rad);
    if (r.semisimple()) {
        if (!rho.is_universal())
            throw Error("internal: semisimple radical congruence must be universal");
    } else if (rho.is_trivial()) {
        throw Error("internal: radical congruence is trivial on a non-semisimple automaton");
    }
    return rho;
}

RhoChain rho_chain(const Automaton& a, const SearchLimits& lim) {
    if (!is_synchronizing(a)) throw NotSynchronizing("automaton admits no reset word");
    RhoChain chain;
    if (a.n < 2) return chain;

    Automaton cur = a;
    std::vector<int> to_cur(a.n);
    std::iota(to_cur.begin(), to_cur.end(), 0);
    std::optional<int> original_index;
    while (true) {
        TransitionMonoid m = TransitionMonoid::enumerate(cur, lim);
        RadicalResult rad = radical_oracle(m);
        if (!original_index) original_index = rad.nilpotency_index;
        if (rad.semisimple()) break;
        Partition rho = rho_of_ideal(m, rad.rad);
        if (rho.is_trivial()) throw Error("internal: trivial radical congruence in the chain");
        // lift through the composed quotient map
        std::vector<State> labels(a.n);
        {
            std::map<State, State> least;
            for (State q = 0; q < a.n; ++q) {
                State key = rho.label(to_cur[q]);
                auto [it, fresh] = least.try_emplace(key, q);
                if (!fresh) it->second = std::min(it->second, q);
            }
            for (State q = 0; q < a.n; ++q) labels[q] = least[rho.label(to_cur[q])];
        }
        Partition lifted = Partition::from_labels(std::move(labels));
        if (!is_congruence(a, lifted))
            throw Error("internal: lifted chain member is not a congruence");
        if (!chain.lifted.empty()) {
            const Partition& prev = chain.lifted.back();
            if (!(prev.refines(lifted) && !(prev == lifted)))
                throw Error("internal: chain is not strictly increasing");
        }
        chain.lifted.push_back(lifted);
        QuotientResult q = quotient(cur, rho);
        for (State s = 0; s < a.n; ++s) to_cur[s] = q.class_of[to_cur[s]];
        cur = q.automaton;
    }
    chain.steps = static_cast<int>(chain.lifted.size());
    if (original_index && *original_index > chain.steps + 1)
        throw Error("internal: Rad^(k+1) escapes Syn along the chain");
    int height = lattice_height(congruence_lattice(a, lim));
    if (chain.steps + 2 > height)
        throw Error("internal: chain length exceeds the lattice height bound");
    return chain;
}

HeightBoundReport height_bound_check(const Automaton& a, const SearchLimits& lim) {
    if (!is_synchronizing(a)) throw NotSynchronizing("automaton admits no reset word");
    HeightBoundReport rep;
    TransitionMonoid m = TransitionMonoid::enumerate(a, lim);
    rep.nilpotency_index = radical_oracle(m).nilpotency_index;
    rep.height = lattice_height(congruence_lattice(a, lim));
    rep.holds = rep.nilpotency_index <= rep.height - 1;
    rep.attained = rep.nilpotency_index == rep.height - 1;
    return rep;
}

std::optional<Word> shortest_radical_word(const TransitionMonoid& m, const RadicalResult& r) {
    if (r.rad.members.empty()) return std::nullopt;
    // ids sort by (witness length, witness), so the least member wins
    return m.witness(r.rad.members.front());
}

// Defined here to reuse the radical machinery for the semisimplicity gate.
CheckReport left_annihilator_check(const GaloisContext& ctx) {
    const TransitionMonoid& m = ctx.monoid();
    RadicalResult rad = radical_oracle(m);
    if (!rad.semisimple()) throw NotSemisimple("left annihilator law needs a semisimple automaton");

    CheckReport rep;
    const int n = m.degree();

    // fixed congruences are meets of rho images of principal ideals
    JClasses jc = JClasses::build(m);
    std::set<Partition> fixed;
    for (const auto& members : jc.members) {
        MonoidIdeal pi = principal_ideal(m, members.front());
        fixed.insert(rho_of_ideal(ctx, pi));
    }
    // close under meet
    {
        std::deque<Partition> work(fixed.begin(), fixed.end());
        while (!work.empty()) {
            Partition p = std::move(work.front());
            work.pop_front();
            for (const Partition& q : std::vector<Partition>(fixed.begin(), fixed.end())) {
                Partition mm = meet(p, q);
                if (fixed.insert(mm).second) work.push_back(mm);
            }
        }
    }

    std::vector<char> seen(n);
    auto product_rank = [&](ElementId x, ElementId y) {
        auto ix = m.images(x);
        auto iy = m.images(y);
        std::fill(seen.begin(), seen.end(), 0);
        int r = 0;
        for (State q = 0; q < n; ++q) {
            State t = iy[ix[q]];
            if (!seen[t]) { seen[t] = 1; ++r; }
        }
        return r;
    };

    for (const Partition& sigma : fixed) {
        MonoidIdeal is = ideal_of_congruence(m, sigma);
        if (is.members.empty()) continue;
        // congruence-side law
        MonoidIdeal sq = syn_quotient_ideal(m, sigma);
        std::vector<char> sq_mask(m.size(), 0);
        for (ElementId e : sq.members) sq_mask[e] = 1;
        for (ElementId u = 0; u < m.size(); ++u) {
            bool annihilates = true;
            for (ElementId v : is.members) {
                if (product_rank(u, v) != 1) {
                    annihilates = false;
                    break;
                }
            }
            ++rep.checks;
            if (annihilates != static_cast<bool>(sq_mask[u])) {
                rep.fail("left annihilator law fails at u=" + std::to_string(u) +
                         ", sigma=" + format_partition(sigma));
                return rep;
            }
        }
        // ideal-side law through rho(I)
        Partition rho = rho_of_ideal(ctx, is);
        MonoidIdeal sq2 = syn_quotient_ideal(m, rho);
        std::vector<char> sq2_mask(m.size(), 0);
        for (ElementId e : sq2.members) sq2_mask[e] = 1;
        for (ElementId u = 0; u < m.size(); ++u) {
            bool annihilates = true;
            for (ElementId v : is.members) {
                if (product_rank(u, v) != 1) {
                    annihilates = false;
                    break;
                }
            }
            ++rep.checks;
            if (annihilates != static_cast<bool>(sq2_mask[u])) {
                rep.fail("left annihilator law (ideal side) fails at u=" + std::to_string(u));
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace synkit
