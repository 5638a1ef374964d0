#include "synkit/verify.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <iterator>
#include <set>
#include <sstream>

#include "synkit/io.hpp"

namespace synkit {

std::vector<std::pair<std::string, Automaton>> sweep_population(const VerifyOptions& opt) {
    std::vector<std::pair<std::string, Automaton>> out;
    if (opt.include_corpus) {
        for (auto& e : corpus_entries()) out.emplace_back(e.name, e.automaton);
    }
    if (opt.random_count > 0) {
        SplitMix64 rng(opt.seed);
        int accepted = 0;
        while (accepted < opt.random_count) {
            int n = 2 + static_cast<int>(rng.next_below(std::max(opt.max_states - 1, 1)));
            int k = 1 + static_cast<int>(rng.next_below(std::max(opt.max_letters, 1)));
            uint64_t sub = rng.next();
            Automaton a = random_automaton(n, k, sub);
            if (!is_synchronizing(a)) continue;
            std::ostringstream name;
            name << "random" << accepted << "(n=" << n << ",k=" << k << ",seed=" << sub << ")";
            out.emplace_back(name.str(), std::move(a));
            ++accepted;
        }
    }
    return out;
}

namespace {

void merge_into(SuiteResult& suite, const std::string& who, const CheckReport& rep) {
    suite.checks += rep.checks;
    for (const auto& f : rep.failures) suite.failures.push_back(who + ": " + f);
}

std::vector<ElementId> intersect(const std::vector<ElementId>& a,
                                 const std::vector<ElementId>& b) {
    std::vector<ElementId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool subset_of(const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Exhaustive subset reachability; independent cross-check for the pair
// criterion.
bool subset_bfs_synchronizing(const Automaton& a) {
    if (a.n == 1) return true;
    const uint64_t full = (uint64_t(1) << a.n) - 1;
    std::vector<char> seen(size_t(1) << a.n, 0);
    std::deque<uint64_t> queue{full};
    seen[full] = 1;
    while (!queue.empty()) {
        uint64_t s = queue.front();
        queue.pop_front();
        if ((s & (s - 1)) == 0) return true;
        for (Letter x = 0; x < a.alphabet_size(); ++x) {
            uint64_t t = 0;
            for (uint64_t rest = s; rest;) {
                int q = std::countr_zero(rest);
                rest &= rest - 1;
                t |= uint64_t(1) << a.delta[x][q];
            }
            if (!seen[t]) {
                seen[t] = 1;
                queue.push_back(t);
            }
        }
    }
    return false;
}

void galois_suite(SuiteResult& suite, const std::string& name, const Automaton& a,
                  bool is_corpus, const SearchLimits& lim) {
    GaloisContext ctx(a, lim);
    const TransitionMonoid& m = ctx.monoid();
    const CongruenceLattice& lat = ctx.lattice();

    merge_into(suite, name, galois_check(ctx));

    for (const Partition& s : lat.elements)
        merge_into(suite, name + " sigma=" + format_partition(s), annihilator_check(ctx, s));

    // Syn-of-quotient intersection law over lattice pairs
    for (size_t i = 0; i < lat.elements.size(); ++i) {
        for (size_t j = i; j < lat.elements.size(); ++j) {
            Partition mt = meet(lat.elements[i], lat.elements[j]);
            auto lhs = syn_quotient_ideal(m, mt).members;
            auto rhs = intersect(syn_quotient_ideal(m, lat.elements[i]).members,
                                 syn_quotient_ideal(m, lat.elements[j]).members);
            ++suite.checks;
            if (lhs != rhs)
                suite.failures.push_back(name + ": Syn(A/s∧t) != Syn(A/s) ∩ Syn(A/t) at " +
                                         format_partition(lat.elements[i]) + ", " +
                                         format_partition(lat.elements[j]));
        }
    }

    // antitonicity of I(-) over the lattice order
    for (const Partition& s : lat.elements) {
        for (const Partition& t : lat.elements) {
            if (!(s.refines(t)) || s == t) continue;
            ++suite.checks;
            if (!subset_of(ideal_of_congruence(m, t).members, ideal_of_congruence(m, s).members))
                suite.failures.push_back(name + ": I(-) not antitone at " + format_partition(s) +
                                         " ⊆ " + format_partition(t));
        }
    }

    // atoms against the lattice's minimal non-identity elements
    if (a.n >= 2) {
        std::vector<Partition> minimal;
        for (const Partition& s : lat.elements) {
            if (s.is_identity()) continue;
            bool is_min = true;
            for (const Partition& t : lat.elements) {
                if (t.is_identity() || t == s) continue;
                if (t.refines(s)) { is_min = false; break; }
            }
            if (is_min) minimal.push_back(s);
        }
        std::sort(minimal.begin(), minimal.end());
        std::vector<Partition> at = atoms(a);
        ++suite.checks;
        if (at != minimal)
            suite.failures.push_back(name + ": atoms differ from minimal lattice elements");
    }

    // recognizer vs membership, corpus instances
    if (is_corpus) {
        SplitMix64 rng(0x1d209a7u ^ uint64_t(a.n));
        for (const Partition& s : lat.elements) {
            Recognizer rec = ideal_language_recognizer(ctx, s);
            MonoidIdeal is = ideal_of_congruence(m, s);
            for (int t = 0; t < 100; ++t) {
                Word w(rng.next_below(2 * a.n + 4));
                for (Letter& x : w)
                    x = static_cast<Letter>(rng.next_below(a.alphabet_size()));
                ++suite.checks;
                bool by_rec = recognizer_accepts(rec, w);
                bool by_monoid = is.contains(m.eval(w));
                if (by_rec != by_monoid) {
                    suite.failures.push_back(name + ": recognizer disagrees at sigma=" +
                                             format_partition(s) + ", word " +
                                             format_word(a, w));
                    break;
                }
            }
        }
    }

    // left annihilator law on small semisimple instances
    if (m.size() <= 3000) {
        RadicalResult rad = radical_oracle(m);
        if (rad.semisimple())
            merge_into(suite, name + " left-annihilator", left_annihilator_check(ctx));
    }
}

void radical_suite(SuiteResult& suite, const std::string& name, const Automaton& a,
                   const SearchLimits& lim) {
    TransitionMonoid m = TransitionMonoid::enumerate(a, lim);
    RadicalResult by_oracle = radical_oracle(m);
    RadicalResult by_alg1 = radical_algorithm1(a, m, lim);
    ++suite.checks;
    if (by_oracle.rad.members != by_alg1.rad.members)
        suite.failures.push_back(name + ": oracle and recursive radical disagree");
    ++suite.checks;
    if (by_oracle.nilpotency_index != by_alg1.nilpotency_index)
        suite.failures.push_back(name + ": nilpotency index disagrees between methods");

    CongruenceLattice lat = congruence_lattice(a, lim);
    int height = lattice_height(lat);
    ++suite.checks;
    if (by_oracle.nilpotency_index > height - 1)
        suite.failures.push_back(name + ": nilpotency index exceeds lattice height - 1");

    // radical congruence dichotomy (asserted inside radical_congruence)
    GaloisContext ctx(a, lim);
    Partition rho = radical_congruence(ctx, by_oracle);
    ++suite.checks;

    // chain of radical congruences and its bounds (asserted inside)
    rho_chain(a, lim);
    ++suite.checks;

    // Rad = Rad(A/s) ∩ I(s) for every congruence below rho
    if (!by_oracle.semisimple()) {
        for (const Partition& s : lat.elements) {
            if (!s.refines(rho)) continue;
            std::vector<ElementId> rhs;
            if (s.is_identity()) {
                rhs = by_oracle.rad.members;
            } else {
                InducedMorphism phi = induced_morphism(m, a, s, lim);
                RadicalResult rad_q = radical_oracle(phi.monoid);
                rhs = intersect(pullback(phi, rad_q.rad.members),
                                ideal_of_congruence(m, s).members);
            }
            ++suite.checks;
            if (rhs != by_oracle.rad.members)
                suite.failures.push_back(name + ": Rad != Rad(A/s) ∩ I(s) at s=" +
                                         format_partition(s));
        }
    }

    // when Syn(A/s) lands inside Rad, the quotient radical pulls back onto Rad
    for (const Partition& s : lat.elements) {
        if (s.is_trivial()) continue;
        std::vector<ElementId> sq = syn_quotient_ideal(m, s).members;
        if (!subset_of(sq, by_oracle.rad.members)) continue;
        InducedMorphism phi = induced_morphism(m, a, s, lim);
        RadicalResult rad_q = radical_oracle(phi.monoid);
        ++suite.checks;
        if (pullback(phi, rad_q.rad.members) != by_oracle.rad.members)
            suite.failures.push_back(name + ": quotient radical pullback misses Rad at s=" +
                                     format_partition(s));
    }

    // maximality: principal ideals outside Rad are not nilpotent mod Syn
    {
        MonoidIdeal syn = syn_ideal(m);
        std::vector<ElementId> outside;
        for (ElementId e = 0; e < m.size(); ++e)
            if (!by_oracle.rad.contains(e)) outside.push_back(e);
        if (m.size() > 2000) {
            SplitMix64 rng(0xabcd01u ^ uint64_t(m.size()));
            std::vector<ElementId> sample;
            for (int i = 0; i < 50 && !outside.empty(); ++i)
                sample.push_back(outside[rng.next_below(outside.size())]);
            outside = std::move(sample);
        }
        for (ElementId e : outside) {
            ++suite.checks;
            if (is_nilpotent_mod(m, principal_ideal(m, e), syn))
                suite.failures.push_back(name + ": element " + std::to_string(e) +
                                         " outside Rad has a nilpotent principal ideal");
        }
    }

    // unions of nilpotent ideals stay nilpotent
    if (!by_oracle.rad_minus_syn.empty()) {
        MonoidIdeal syn = syn_ideal(m);
        SplitMix64 rng(0x77aau ^ uint64_t(m.size()));
        const auto& pool = by_oracle.rad_minus_syn;
        for (int t = 0; t < 3; ++t) {
            ElementId e = pool[rng.next_below(pool.size())];
            ElementId f = pool[rng.next_below(pool.size())];
            MonoidIdeal u;
            auto p1 = principal_ideal(m, e).members;
            auto p2 = principal_ideal(m, f).members;
            std::set_union(p1.begin(), p1.end(), p2.begin(), p2.end(),
                           std::back_inserter(u.members));
            ++suite.checks;
            if (!is_nilpotent_mod(m, u, syn))
                suite.failures.push_back(name + ": union of nilpotent principal ideals escaped");
        }
    }
}

void classify_suite(SuiteResult& suite, const std::string& name, const Automaton& a,
                    const SearchLimits& lim) {
    Analysis an = analyze(a, lim);
    const Classification& c = an.classification;

    // category / flag containments
    ++suite.checks;
    switch (c.category) {
        case AutomatonClass::Simple:
        case AutomatonClass::QuasiSimple:
        case AutomatonClass::SemisimpleOther:
            if (!c.semisimple.value_or(false))
                suite.failures.push_back(name + ": semisimple flag contradicts category");
            break;
        case AutomatonClass::Radical:
        case AutomatonClass::NonSemisimpleOther:
            if (c.semisimple.value_or(true))
                suite.failures.push_back(name + ": non-semisimple category but semisimple flag");
            break;
        case AutomatonClass::NotSynchronizing:
            break;
    }

    // standalone predicates are mutually exclusive
    if (an.monoid.size() <= 3000 && a.n >= 2 && an.synchronizing) {
        int hits = (is_simple(a, lim) ? 1 : 0) + (is_quasi_simple(a, lim) ? 1 : 0) +
                   (is_radical_class(a, lim) ? 1 : 0);
        ++suite.checks;
        if (hits > 1) suite.failures.push_back(name + ": class predicates overlap");
    }

    // semisimple from meets of semisimple-quotient congruences
    if (an.synchronizing) {
        const auto& lat = an.lattice;
        std::vector<char> quot_ss(lat.elements.size(), 0);
        for (size_t i = 0; i < lat.elements.size(); ++i) {
            if (lat.elements[i].is_trivial()) continue;
            quot_ss[i] = is_semisimple(quotient(a, lat.elements[i]).automaton, lim);
        }
        for (size_t i = 0; i < lat.elements.size(); ++i) {
            if (!quot_ss[i]) continue;
            for (size_t j = i + 1; j < lat.elements.size(); ++j) {
                if (!quot_ss[j]) continue;
                if (!meet(lat.elements[i], lat.elements[j]).is_identity()) continue;
                ++suite.checks;
                if (!*c.semisimple)
                    suite.failures.push_back(name +
                                             ": semisimple quotients meeting at identity, but "
                                             "the automaton is not semisimple");
            }
        }
    }

    // structural laws per category
    if (c.category == AutomatonClass::Simple || c.category == AutomatonClass::QuasiSimple) {
        if (a.n >= 2) merge_into(suite, name, verify_unique_zero_minimal(a, lim));
    }
    if (c.category == AutomatonClass::Radical)
        merge_into(suite, name, verify_radical_structure(a, lim));

    // distinct 0-minimal ideals: products vanish, and some rho is non-trivial
    if (an.synchronizing && an.monoid.size() <= 3000) {
        const TransitionMonoid& m = an.monoid;
        MonoidIdeal syn = syn_ideal(m);
        if (syn.members.size() < size_t(m.size())) {
            auto zm = zero_minimal_ideals(m, syn);
            for (size_t i = 0; i < zm.size(); ++i) {
                for (size_t j = 0; j < zm.size(); ++j) {
                    if (i == j) continue;
                    for (ElementId x : zm[i].members)
                        for (ElementId y : zm[j].members) {
                            ++suite.checks;
                            if (m.rank_of(m.product(x, y)) != 1) {
                                suite.failures.push_back(
                                    name + ": distinct 0-minimal ideals with non-zero product");
                                goto done_products;
                            }
                        }
                }
            }
        done_products:;
        }
        if (!an.rad->semisimple()) {
            auto zm = zero_minimal_ideals(m, an.rad->rad);
            for (size_t i = 0; i < zm.size(); ++i) {
                for (size_t j = i + 1; j < zm.size(); ++j) {
                    Partition r1 = rho_of_ideal(m, zm[i]);
                    Partition r2 = rho_of_ideal(m, zm[j]);
                    ++suite.checks;
                    if (r1.is_trivial() && r2.is_trivial())
                        suite.failures.push_back(
                            name + ": two 0-minimal ideals mod Rad with trivial rho");
                }
            }
        }
    }

    // pair criterion against exhaustive subset reachability
    if (a.n <= 8) {
        ++suite.checks;
        if (is_synchronizing(a) != subset_bfs_synchronizing(a))
            suite.failures.push_back(name + ": pair criterion disagrees with subset search");
    }

    // reset-word machinery
    if (an.synchronizing) {
        Word g = greedy_reset_word(a);
        ++suite.checks;
        if (apply(a, StateSet::all(a.n), g).count() != 1)
            suite.failures.push_back(name + ": greedy word does not reset");
        long long n = a.n;
        ++suite.checks;
        if (static_cast<long long>(g.size()) > (n * n * n - n) / 6)
            suite.failures.push_back(name + ": greedy word exceeds (n^3-n)/6");
        Word s = shortest_reset_word(a, lim);
        ++suite.checks;
        if (apply(a, StateSet::all(a.n), s).count() != 1)
            suite.failures.push_back(name + ": shortest word does not reset");
        ++suite.checks;
        if (s.size() > g.size())
            suite.failures.push_back(name + ": exact shortest longer than greedy");
    }

    // action laws on seeded words
    {
        SplitMix64 rng(0x5eedu ^ uint64_t(a.n * 131 + a.alphabet_size()));
        for (int t = 0; t < 20; ++t) {
            StateSet s(a.n);
            for (State q = 0; q < a.n; ++q)
                if (rng.next_below(2)) s.insert(q);
            Word u(rng.next_below(6)), v(rng.next_below(6));
            for (Letter& x : u) x = static_cast<Letter>(rng.next_below(a.alphabet_size()));
            for (Letter& x : v) x = static_cast<Letter>(rng.next_below(a.alphabet_size()));
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            ++suite.checks;
            if (!(apply(a, s, uv) == apply(a, apply(a, s, u), v)))
                suite.failures.push_back(name + ": apply is not a right action");
            StateSet step = s;
            int prev = step.count();
            for (Letter x : uv) {
                step = apply(a, step, {x});
                ++suite.checks;
                if (step.count() > prev)
                    suite.failures.push_back(name + ": image grew along a prefix");
                prev = step.count();
            }
        }
    }
}

}  // namespace

std::vector<SuiteResult> run_verify(const std::string& suite, const VerifyOptions& opt) {
    if (suite != "galois" && suite != "radical" && suite != "classify" && suite != "all")
        throw PreconditionViolation("unknown suite: " + suite);
    auto population = sweep_population(opt);
    std::vector<SuiteResult> results;
    auto want = [&](const char* s) { return suite == s || suite == "all"; };
    if (want("galois")) {
        SuiteResult r{"galois"};
        for (auto& [name, a] : population) {
            bool is_corpus = name.rfind("random", 0) != 0;
            galois_suite(r, name, a, is_corpus, opt.limits);
        }
        results.push_back(std::move(r));
    }
    if (want("radical")) {
        SuiteResult r{"radical"};
        for (auto& [name, a] : population) radical_suite(r, name, a, opt.limits);
        results.push_back(std::move(r));
    }
    if (want("classify")) {
        SuiteResult r{"classify"};
        for (auto& [name, a] : population) classify_suite(r, name, a, opt.limits);
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace synkit
