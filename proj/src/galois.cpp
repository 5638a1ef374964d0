#include "synkit/galois.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <iterator>
#include <map>
#include <sstream>
#include <unordered_map>

namespace synkit {

GaloisContext::GaloisContext(Automaton a, SearchLimits lim)
    : a_(std::move(a)), m_(TransitionMonoid::enumerate(a_, lim)), lim_(lim) {}

const CongruenceLattice& GaloisContext::lattice() const {
    if (!lattice_) lattice_ = congruence_lattice(a_, lim_);
    return *lattice_;
}

namespace {

// labels <- meet(labels, partition induced by key(q)); first-seen scan
// keeps the least-representative canonical form.  scratch must hold
// n*n entries and is left reset to -1.
void meet_keys(std::vector<State>& labels, const State* key, int n, std::vector<int>& scratch) {
    std::vector<State> used;
    used.reserve(n);
    for (State q = 0; q < n; ++q) {
        int slot = labels[q] * n + key[q];
        if (scratch[slot] < 0) {
            scratch[slot] = q;
            used.push_back(slot);
        }
        labels[q] = scratch[slot];
    }
    for (int slot : used) scratch[slot] = -1;
}

std::vector<State> meet_kernels(const TransitionMonoid& m, const std::vector<ElementId>& elems) {
    const int n = m.degree();
    std::vector<State> labels(n, 0);
    std::vector<int> scratch(size_t(n) * n, -1);
    for (ElementId e : elems) meet_keys(labels, m.images(e).data(), n, scratch);
    return labels;
}

bool stable_under_generators(const TransitionMonoid& m, const std::vector<State>& labels) {
    const int n = m.degree();
    for (Letter x = 0; x < m.generator_count(); ++x) {
        auto img = m.images(m.generator(x));
        for (State q = 0; q < n; ++q)
            if (labels[img[q]] != labels[img[labels[q]]]) return false;
    }
    return true;
}

}  // namespace

Partition rho_of_ideal(const TransitionMonoid& m, const MonoidIdeal& j) {
    std::vector<ElementId> all = j.members;
    if (j.zero) all.insert(all.end(), j.zero->begin(), j.zero->end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.empty()) throw EmptyIdeal("rho of the empty ideal is undefined");
    {
        std::vector<char> in(m.size(), 0);
        for (ElementId e : all) in[e] = 1;
        for (ElementId e : all)
            for (Letter x = 0; x < m.generator_count(); ++x)
                if (!in[m.left(x, e)]) throw NotLeftIdeal("members are not a left ideal");
    }
    std::vector<State> labels = meet_kernels(m, all);
    if (!stable_under_generators(m, labels))
        throw Error("internal: kernel meet is not a congruence");
    return Partition::from_labels(std::move(labels));
}

Partition rho_of_ideal(const GaloisContext& ctx, const MonoidIdeal& j) {
    Partition p = rho_of_ideal(ctx.monoid(), j);
    if (!is_congruence(ctx.automaton(), p))
        throw Error("internal: rho output fails the congruence check");
    return p;
}

MonoidIdeal ideal_of_congruence(const TransitionMonoid& m, const Partition& s) {
    if (s.size() != m.degree()) throw SizeMismatch("partition width differs from degree");
    MonoidIdeal out;
    const int n = m.degree();
    for (ElementId e = 0; e < m.size(); ++e) {
        auto img = m.images(e);
        bool ok = true;
        for (State q = 0; q < n && ok; ++q) ok = img[q] == img[s.label(q)];
        if (ok) out.members.push_back(e);
    }
    if (!is_ideal(m, out.members))
        throw Error("internal: kernel filter is not an ideal");
    return out;
}

MonoidIdeal ideal_of_congruence(const GaloisContext& ctx, const Partition& s) {
    if (!is_congruence(ctx.automaton(), s))
        throw NotACongruence("partition is not action-stable");
    return ideal_of_congruence(ctx.monoid(), s);
}

CheckReport galois_check(const GaloisContext& ctx) {
    CheckReport rep;
    const TransitionMonoid& m = ctx.monoid();
    const CongruenceLattice& lat = ctx.lattice();
    const int n = m.degree();
    const int k = m.generator_count();

    JClasses jc = JClasses::build(m);
    const int nc = static_cast<int>(jc.members.size());

    // kernel meet per class, then rho per class over the condensation
    std::vector<std::vector<State>> kmeet(nc);
    for (int c = 0; c < nc; ++c) kmeet[c] = meet_kernels(m, jc.members[c]);

    // post-order: successors first
    std::vector<int> order;
    {
        std::vector<int> state(nc, 0);
        for (int root = 0; root < nc; ++root) {
            if (state[root]) continue;
            std::vector<std::pair<int, size_t>> call{{root, 0}};
            state[root] = 1;
            while (!call.empty()) {
                auto& [c, ei] = call.back();
                if (ei < jc.succ[c].size()) {
                    int s = jc.succ[c][ei++];
                    if (!state[s]) {
                        state[s] = 1;
                        call.push_back({s, 0});
                    }
                } else {
                    order.push_back(c);
                    call.pop_back();
                }
            }
        }
    }
    std::vector<std::vector<State>> rho_of_class(nc);
    {
        std::vector<int> scratch(size_t(n) * n, -1);
        for (int c : order) {
            std::vector<State> labels = kmeet[c];
            for (int s : jc.succ[c]) meet_keys(labels, rho_of_class[s].data(), n, scratch);
            rho_of_class[c] = std::move(labels);
        }
    }

    // distinct congruences seen by the checks (rho images are congruences,
    // so there are at most |Cong(A)| of them)
    std::map<std::vector<State>, int> tau_id;
    std::vector<Partition> taus;
    auto intern = [&](const std::vector<State>& labels) {
        auto [it, fresh] = tau_id.try_emplace(labels, static_cast<int>(taus.size()));
        if (fresh) taus.push_back(Partition::from_labels(labels));
        return it->second;
    };
    std::vector<int> class_tau(nc);
    for (int c = 0; c < nc; ++c) class_tau[c] = intern(rho_of_class[c]);
    for (const Partition& s : lat.elements) intern(s.labels());

    std::vector<std::vector<char>> in_ideal(taus.size());
    for (size_t t = 0; t < taus.size(); ++t) {
        in_ideal[t].assign(m.size(), 0);
        const Partition& tau = taus[t];
        for (ElementId e = 0; e < m.size(); ++e) {
            auto img = m.images(e);
            bool ok = true;
            for (State q = 0; q < n && ok; ++q) ok = img[q] == img[tau.label(q)];
            in_ideal[t][e] = ok;
        }
    }

    // (i) every principal ideal J satisfies J ⊆ I(rho(J)); J is the
    // forward-reachable set of its class, so sweep once per distinct rho.
    {
        std::map<int, std::vector<int>> by_tau;
        for (int c = 0; c < nc; ++c) by_tau[class_tau[c]].push_back(c);
        for (auto& [t, classes] : by_tau) {
            std::vector<char> seen(m.size(), 0);
            std::deque<ElementId> queue;
            for (int c : classes)
                for (ElementId e : jc.members[c]) {
                    seen[e] = 1;
                    queue.push_back(e);
                }
            while (!queue.empty()) {
                ElementId e = queue.front();
                queue.pop_front();
                ++rep.checks;
                if (!in_ideal[t][e]) {
                    rep.fail("J ⊄ I(rho(J)) at element " + std::to_string(e));
                    break;
                }
                for (Letter x = 0; x < k; ++x)
                    for (ElementId v : {m.right(e, x), m.left(x, e)})
                        if (!seen[v]) { seen[v] = 1; queue.push_back(v); }
            }
        }
    }

    // (ii)/(iii) over the lattice
    for (const Partition& s : lat.elements) {
        int t = intern(s.labels());
        std::vector<ElementId> members;
        for (ElementId e = 0; e < m.size(); ++e)
            if (in_ideal[t][e]) members.push_back(e);
        if (members.empty()) {
            rep.notes.push_back("I(" + format_partition(s) + ") empty; fixed-point checks skipped");
            continue;
        }
        std::vector<State> rho_labels = meet_kernels(m, members);
        Partition rho_is = Partition::from_labels(rho_labels);
        ++rep.checks;
        if (!s.refines(rho_is)) rep.fail("sigma ⊄ rho(I(sigma)) for " + format_partition(s));
        int t2 = intern(rho_is.labels());
        if (static_cast<size_t>(t2) >= in_ideal.size()) {
            // a congruence outside the enumerated lattice would be a bug
            rep.fail("rho(I(sigma)) escaped the lattice for " + format_partition(s));
            continue;
        }
        ++rep.checks;
        if (in_ideal[t2] != in_ideal[t])
            rep.fail("I(rho(I(sigma))) != I(sigma) for " + format_partition(s));
    }

    // (iv) rho(I(rho(J))) = rho(J) per distinct rho image
    {
        std::map<int, bool> done;
        for (int c = 0; c < nc; ++c) {
            int t = class_tau[c];
            if (done.count(t)) continue;
            done[t] = true;
            std::vector<ElementId> members;
            for (ElementId e = 0; e < m.size(); ++e)
                if (in_ideal[t][e]) members.push_back(e);
            if (members.empty()) continue;
            Partition back = Partition::from_labels(meet_kernels(m, members));
            ++rep.checks;
            if (!(back == taus[t]))
                rep.fail("rho(I(rho(J))) != rho(J) for " + format_partition(taus[t]));
        }
    }
    return rep;
}

CheckReport annihilator_check(const GaloisContext& ctx, const Partition& s) {
    CheckReport rep;
    const TransitionMonoid& m = ctx.monoid();
    if (!is_congruence(ctx.automaton(), s))
        throw NotACongruence("partition is not action-stable");
    const int n = m.degree();
    MonoidIdeal sq = syn_quotient_ideal(m, s);
    MonoidIdeal is = ideal_of_congruence(m, s);
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
    for (ElementId x : sq.members) {
        for (ElementId y : is.members) {
            ++rep.checks;
            if (product_rank(x, y) != 1) {
                rep.fail("Syn(A/s)·I(s) escapes Syn at (" + std::to_string(x) + "," +
                         std::to_string(y) + ")");
                return rep;
            }
        }
    }
    std::vector<ElementId> both;
    std::set_intersection(sq.members.begin(), sq.members.end(), is.members.begin(),
                          is.members.end(), std::back_inserter(both));
    for (ElementId x : both) {
        for (ElementId y : both) {
            ++rep.checks;
            if (product_rank(x, y) != 1) {
                rep.fail("(I(s) ∩ Syn(A/s))^2 escapes Syn at (" + std::to_string(x) + "," +
                         std::to_string(y) + ")");
                return rep;
            }
        }
    }
    return rep;
}

// ---- recognizer ----

namespace {
struct VecHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : v) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};
}  // namespace

Recognizer ideal_language_recognizer(const GaloisContext& ctx, const Partition& s) {
    const Automaton& a = ctx.automaton();
    if (!is_congruence(a, s)) throw NotACongruence("partition is not action-stable");
    const int n = a.n;
    const int words_per = (n + 63) / 64;
    auto blocks = s.blocks();
    const int nb = static_cast<int>(blocks.size());

    std::vector<uint64_t> start(size_t(nb) * words_per, 0);
    for (int b = 0; b < nb; ++b)
        for (State q : blocks[b]) start[size_t(b) * words_per + (q >> 6)] |= uint64_t(1) << (q & 63);

    std::unordered_map<std::vector<uint64_t>, int, VecHash> ids;
    std::vector<std::vector<uint64_t>> states{start};
    ids.emplace(start, 0);
    std::vector<std::vector<State>> delta(a.alphabet_size());

    for (size_t cur = 0; cur < states.size(); ++cur) {
        for (Letter x = 0; x < a.alphabet_size(); ++x) {
            std::vector<uint64_t> next(size_t(nb) * words_per, 0);
            for (int b = 0; b < nb; ++b) {
                for (int w = 0; w < words_per; ++w) {
                    uint64_t bits = states[cur][size_t(b) * words_per + w];
                    while (bits) {
                        int q = w * 64 + std::countr_zero(bits);
                        bits &= bits - 1;
                        State t = a.delta[x][q];
                        next[size_t(b) * words_per + (t >> 6)] |= uint64_t(1) << (t & 63);
                    }
                }
            }
            auto [it, fresh] = ids.try_emplace(next, static_cast<int>(states.size()));
            if (fresh) {
                if (states.size() >= ctx.limits().max_product_states)
                    throw CapExceeded("recognizer product above the configured cap");
                states.push_back(std::move(next));
            }
            delta[x].push_back(it->second);
        }
    }

    Recognizer r;
    r.automaton = Automaton::create(static_cast<int>(states.size()), a.letters, std::move(delta));
    r.initial = 0;
    for (size_t i = 0; i < states.size(); ++i) {
        bool all_single = true;
        for (int b = 0; b < nb && all_single; ++b) {
            int pc = 0;
            for (int w = 0; w < words_per; ++w)
                pc += std::popcount(states[i][size_t(b) * words_per + w]);
            all_single = pc == 1;
        }
        if (all_single) r.finals.push_back(static_cast<State>(i));
    }
    return r;
}

bool recognizer_accepts(const Recognizer& r, const Word& w) {
    State q = apply_state(r.automaton, r.initial, w);
    return std::binary_search(r.finals.begin(), r.finals.end(), q);
}

}  // namespace synkit
