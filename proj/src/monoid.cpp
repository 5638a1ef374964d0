#include "synkit/monoid.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <numeric>
#include <set>

namespace synkit {

Transformation compose(const Transformation& s, const Transformation& t) {
    if (s.degree() != t.degree()) throw SizeMismatch("transformation degrees differ");
    Transformation out;
    out.images.resize(s.images.size());
    for (size_t q = 0; q < s.images.size(); ++q) out.images[q] = t.images[s.images[q]];
    return out;
}

int rank(const Transformation& t) {
    std::vector<char> seen(t.images.size(), 0);
    int r = 0;
    for (State q : t.images)
        if (!seen[q]) { seen[q] = 1; ++r; }
    return r;
}

Partition kernel(const Transformation& t) {
    const int n = t.degree();
    std::vector<State> first(n, -1), labels(n);
    for (State q = 0; q < n; ++q) {
        if (first[t.images[q]] < 0) first[t.images[q]] = q;
        labels[q] = first[t.images[q]];
    }
    return Partition::from_labels(std::move(labels));
}

// ---- TransitionMonoid ----

uint64_t TransitionMonoid::hash_row(const State* row) const {
    uint64_t h = 1469598103934665603ull;
    const unsigned char* bytes = reinterpret_cast<const unsigned char*>(row);
    for (size_t i = 0; i < sizeof(State) * size_t(n_); ++i) {
        h ^= bytes[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::optional<ElementId> TransitionMonoid::lookup_row(const State* row) const {
    const size_t mask = table_.size() - 1;
    size_t slot = hash_row(row) & mask;
    while (table_[slot] != -1) {
        ElementId e = table_[slot];
        if (std::memcmp(arena_.data() + size_t(e) * n_, row, sizeof(State) * n_) == 0)
            return e;
        slot = (slot + 1) & mask;
    }
    return std::nullopt;
}

namespace {
void table_insert(std::vector<int32_t>& table, ElementId e, uint64_t h) {
    const size_t mask = table.size() - 1;
    size_t slot = h & mask;
    while (table[slot] != -1) slot = (slot + 1) & mask;
    table[slot] = e;
}
}  // namespace

TransitionMonoid TransitionMonoid::enumerate(const Automaton& a, const SearchLimits& lim) {
    TransitionMonoid m;
    m.n_ = a.n;
    m.k_ = a.alphabet_size();
    m.table_.assign(1 << 12, -1);

    auto rehash_if_needed = [&m]() {
        if (size_t(m.size_) * 10 < m.table_.size() * 7) return;
        std::vector<int32_t> bigger(m.table_.size() * 2, -1);
        std::swap(m.table_, bigger);
        for (ElementId e = 0; e < m.size_; ++e)
            table_insert(m.table_, e, m.hash_row(m.arena_.data() + size_t(e) * m.n_));
    };

    // identity
    m.arena_.resize(m.n_);
    std::iota(m.arena_.begin(), m.arena_.end(), 0);
    m.size_ = 1;
    m.parent_.push_back(-1);
    m.parent_letter_.push_back(-1);
    m.wlen_.push_back(0);
    table_insert(m.table_, 0, m.hash_row(m.arena_.data()));

    std::vector<State> row(m.n_);
    for (ElementId e = 0; e < m.size_; ++e) {
        m.right_.resize(size_t(m.size_) * m.k_, -1);
        for (Letter x = 0; x < m.k_; ++x) {
            const State* src = m.arena_.data() + size_t(e) * m.n_;
            for (int q = 0; q < m.n_; ++q) row[q] = a.delta[x][src[q]];
            auto found = m.lookup_row(row.data());
            ElementId id;
            if (found) {
                id = *found;
            } else {
                if (size_t(m.size_) >= lim.max_monoid)
                    throw CapExceeded("transition monoid above the configured cap");
                id = m.size_++;
                m.arena_.insert(m.arena_.end(), row.begin(), row.end());
                m.parent_.push_back(e);
                m.parent_letter_.push_back(static_cast<int8_t>(x));
                m.wlen_.push_back(m.wlen_[e] + 1);
                rehash_if_needed();
                table_insert(m.table_, id, m.hash_row(m.arena_.data() + size_t(id) * m.n_));
            }
            m.right_[size_t(e) * m.k_ + x] = id;
        }
    }

    m.left_.assign(size_t(m.size_) * m.k_, -1);
    for (ElementId e = 0; e < m.size_; ++e) {
        const State* src = m.arena_.data() + size_t(e) * m.n_;
        for (Letter x = 0; x < m.k_; ++x) {
            for (int q = 0; q < m.n_; ++q) row[q] = src[a.delta[x][q]];
            auto found = m.lookup_row(row.data());
            if (!found) throw Error("internal: monoid not closed under left products");
            m.left_[size_t(e) * m.k_ + x] = *found;
        }
    }

    m.rank_.resize(m.size_);
    std::vector<char> seen(m.n_);
    for (ElementId e = 0; e < m.size_; ++e) {
        std::fill(seen.begin(), seen.end(), 0);
        int r = 0;
        const State* src = m.arena_.data() + size_t(e) * m.n_;
        for (int q = 0; q < m.n_; ++q)
            if (!seen[src[q]]) { seen[src[q]] = 1; ++r; }
        m.rank_[e] = r;
    }
    return m;
}

Transformation TransitionMonoid::element(ElementId e) const {
    auto span = images(e);
    return Transformation{{span.begin(), span.end()}};
}

Partition TransitionMonoid::kernel_of(ElementId e) const {
    auto img = images(e);
    std::vector<State> first(n_, -1), labels(n_);
    for (State q = 0; q < n_; ++q) {
        if (first[img[q]] < 0) first[img[q]] = q;
        labels[q] = first[img[q]];
    }
    return Partition::from_labels(std::move(labels));
}

ElementId TransitionMonoid::product(ElementId a, ElementId b) const {
    const State* ra = arena_.data() + size_t(a) * n_;
    const State* rb = arena_.data() + size_t(b) * n_;
    std::vector<State> row(n_);
    for (int q = 0; q < n_; ++q) row[q] = rb[ra[q]];
    auto found = lookup_row(row.data());
    if (!found) throw Error("internal: product escaped the monoid");
    return *found;
}

std::optional<ElementId> TransitionMonoid::find(const Transformation& t) const {
    if (t.degree() != n_) throw SizeMismatch("transformation degree differs");
    return lookup_row(t.images.data());
}

ElementId TransitionMonoid::eval(const Word& w) const {
    ElementId e = 0;
    for (Letter x : w) {
        if (x < 0 || x >= k_) throw InvalidWord("letter index out of range");
        e = right(e, x);
    }
    return e;
}

Word TransitionMonoid::witness(ElementId e) const {
    Word w;
    for (ElementId cur = e; parent_[cur] >= 0; cur = parent_[cur])
        w.push_back(parent_letter_[cur]);
    std::reverse(w.begin(), w.end());
    return w;
}

// ---- ideals ----

bool MonoidIdeal::contains(ElementId e) const {
    return std::binary_search(members.begin(), members.end(), e);
}

bool is_ideal(const TransitionMonoid& m, const std::vector<ElementId>& members,
              const std::vector<ElementId>& extra) {
    std::vector<char> in(m.size(), 0);
    for (ElementId e : members) in[e] = 1;
    for (ElementId e : extra) in[e] = 1;
    for (ElementId e : members) {
        for (Letter x = 0; x < m.generator_count(); ++x) {
            if (!in[m.right(e, x)] || !in[m.left(x, e)]) return false;
        }
    }
    return true;
}

MonoidIdeal syn_ideal(const TransitionMonoid& m) {
    MonoidIdeal out;
    for (ElementId e = 0; e < m.size(); ++e)
        if (m.rank_of(e) == 1) out.members.push_back(e);
    return out;
}

MonoidIdeal syn_quotient_ideal(const TransitionMonoid& m, const Partition& s) {
    if (s.size() != m.degree()) throw SizeMismatch("partition width differs from degree");
    MonoidIdeal out;
    for (ElementId e = 0; e < m.size(); ++e) {
        auto img = m.images(e);
        State lab = s.label(img[0]);
        bool single = true;
        for (int q = 1; q < m.degree() && single; ++q) single = s.label(img[q]) == lab;
        if (single) out.members.push_back(e);
    }
    return out;
}

MonoidIdeal principal_ideal(const TransitionMonoid& m, ElementId e) {
    if (e < 0 || e >= m.size()) throw SizeMismatch("element id out of range");
    std::vector<char> seen(m.size(), 0);
    std::deque<ElementId> queue{e};
    seen[e] = 1;
    while (!queue.empty()) {
        ElementId u = queue.front();
        queue.pop_front();
        for (Letter x = 0; x < m.generator_count(); ++x) {
            for (ElementId v : {m.right(u, x), m.left(x, u)}) {
                if (!seen[v]) { seen[v] = 1; queue.push_back(v); }
            }
        }
    }
    MonoidIdeal out;
    for (ElementId u = 0; u < m.size(); ++u)
        if (seen[u]) out.members.push_back(u);
    return out;
}

std::optional<int> is_nilpotent_mod(const TransitionMonoid& m, const MonoidIdeal& i,
                                    const MonoidIdeal& z) {
    if (!is_ideal(m, z.members)) throw NotAnIdeal("z is not an ideal");
    if (!is_ideal(m, i.members, z.members)) throw NotAnIdeal("i is not an ideal modulo z");
    std::vector<char> zmask(m.size(), 0);
    for (ElementId e : z.members) zmask[e] = 1;
    std::vector<ElementId> base;
    for (ElementId e : i.members)
        if (!zmask[e]) base.push_back(e);
    if (base.empty()) return 1;
    std::vector<ElementId> power = base;
    int k = 1;
    while (true) {
        std::set<ElementId> next;
        for (ElementId a : power)
            for (ElementId b : base) {
                ElementId p = m.product(a, b);
                if (!zmask[p]) next.insert(p);
            }
        ++k;
        if (next.empty()) return k;
        std::vector<ElementId> next_v(next.begin(), next.end());
        if (next_v == power) return std::nullopt;
        power = std::move(next_v);
    }
}

// ---- J-classes ----

JClasses JClasses::build(const TransitionMonoid& m) {
    const int sz = m.size();
    const int k = m.generator_count();
    auto edges = [&](ElementId e, int idx) -> ElementId {
        return idx < k ? m.right(e, idx) : m.left(idx - k, e);
    };
    std::vector<int32_t> index(sz, -1), low(sz, 0), comp(sz, -1);
    std::vector<char> on_stack(sz, 0);
    std::vector<int32_t> stack;
    int32_t next_index = 0, next_comp = 0;
    struct Frame { int32_t v; int ei; };
    for (int root = 0; root < sz; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, ei] = call.back();
            if (ei < 2 * k) {
                ElementId w = edges(v, ei++);
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            } else {
                if (low[v] == index[v]) {
                    while (true) {
                        int32_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = next_comp;
                        if (w == v) break;
                    }
                    ++next_comp;
                }
                int32_t finished = v;
                call.pop_back();
                if (!call.empty())
                    low[call.back().v] = std::min(low[call.back().v], low[finished]);
            }
        }
    }
    std::vector<int32_t> least(next_comp, sz);
    for (int e = 0; e < sz; ++e) least[comp[e]] = std::min(least[comp[e]], int32_t(e));
    std::vector<int32_t> order(next_comp);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int32_t x, int32_t y) { return least[x] < least[y]; });
    std::vector<int32_t> renum(next_comp);
    for (int32_t i = 0; i < next_comp; ++i) renum[order[i]] = i;

    JClasses jc;
    jc.class_of.resize(sz);
    jc.members.resize(next_comp);
    for (int e = 0; e < sz; ++e) {
        jc.class_of[e] = renum[comp[e]];
        jc.members[jc.class_of[e]].push_back(e);
    }
    jc.succ.resize(next_comp);
    std::vector<std::set<int32_t>> succ(next_comp);
    for (int e = 0; e < sz; ++e) {
        for (int idx = 0; idx < 2 * k; ++idx) {
            ElementId w = edges(e, idx);
            if (jc.class_of[w] != jc.class_of[e]) succ[jc.class_of[e]].insert(jc.class_of[w]);
        }
    }
    for (int32_t c = 0; c < next_comp; ++c)
        jc.succ[c].assign(succ[c].begin(), succ[c].end());
    return jc;
}

std::vector<MonoidIdeal> zero_minimal_ideals(const TransitionMonoid& m, const MonoidIdeal& z) {
    if (z.members.size() == size_t(m.size()))
        throw NoQuotient("the zero ideal is the whole monoid");
    if (!is_ideal(m, z.members)) throw NotAnIdeal("z is not an ideal");
    std::vector<char> zmask(m.size(), 0);
    for (ElementId e : z.members) zmask[e] = 1;
    JClasses jc = JClasses::build(m);
    std::vector<MonoidIdeal> out;
    for (size_t c = 0; c < jc.members.size(); ++c) {
        if (zmask[jc.members[c].front()]) continue;  // class inside z
        bool minimal = true;
        for (int32_t s : jc.succ[c])
            if (!zmask[jc.members[s].front()]) { minimal = false; break; }
        if (!minimal) continue;
        MonoidIdeal ideal;
        ideal.members = jc.members[c];
        ideal.zero = z.members;
        out.push_back(std::move(ideal));
    }
    return out;
}

// ---- induced morphism ----

InducedMorphism induced_morphism(const TransitionMonoid& m, const Automaton& a,
                                 const Partition& s, const SearchLimits& lim) {
    if (m.degree() != a.n) throw SizeMismatch("monoid degree differs from state count");
    InducedMorphism phi;
    phi.quot = quotient(a, s);  // throws NotACongruence
    phi.monoid = TransitionMonoid::enumerate(phi.quot.automaton, lim);
    std::vector<State> reps;
    for (State q = 0; q < a.n; ++q)
        if (s.label(q) == q) reps.push_back(q);
    phi.map.resize(m.size());
    Transformation t;
    t.images.resize(reps.size());
    for (ElementId e = 0; e < m.size(); ++e) {
        auto img = m.images(e);
        for (size_t b = 0; b < reps.size(); ++b) t.images[b] = phi.quot.class_of[img[reps[b]]];
        auto found = phi.monoid.find(t);
        if (!found) throw Error("internal: induced map misses the quotient monoid");
        phi.map[e] = *found;
    }
    return phi;
}

std::vector<ElementId> pullback(const InducedMorphism& phi, const std::vector<ElementId>& subset) {
    std::vector<char> in(phi.monoid.size(), 0);
    for (ElementId e : subset) in[e] = 1;
    std::vector<ElementId> out;
    for (ElementId e = 0; e < static_cast<ElementId>(phi.map.size()); ++e)
        if (in[phi.map[e]]) out.push_back(e);
    return out;
}

}  // namespace synkit
