#include "synkit/congruence.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace synkit {

// ---- Partition ----

Partition Partition::identity(int n) {
    Partition p;
    p.labels_.resize(n);
    std::iota(p.labels_.begin(), p.labels_.end(), 0);
    return p;
}

Partition Partition::universal(int n) {
    Partition p;
    p.labels_.assign(n, 0);
    return p;
}

Partition Partition::from_labels(std::vector<State> labels) {
    const int n = static_cast<int>(labels.size());
    std::map<State, State> least;
    for (State q = 0; q < n; ++q) {
        auto [it, fresh] = least.try_emplace(labels[q], q);
        if (!fresh) it->second = std::min(it->second, q);
    }
    Partition p;
    p.labels_.resize(n);
    for (State q = 0; q < n; ++q) p.labels_[q] = least[labels[q]];
    return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<State>>& blocks) {
    std::vector<State> labels(n, -1);
    for (const auto& b : blocks) {
        if (b.empty()) throw SizeMismatch("empty block");
        State m = *std::min_element(b.begin(), b.end());
        for (State q : b) {
            if (q < 0 || q >= n) throw SizeMismatch("block state out of range");
            if (labels[q] != -1) throw SizeMismatch("state listed in two blocks");
            labels[q] = m;
        }
    }
    for (State q = 0; q < n; ++q)
        if (labels[q] == -1) labels[q] = q;  // unlisted states are singletons
    return from_labels(std::move(labels));
}

std::vector<std::vector<State>> Partition::blocks() const {
    std::map<State, std::vector<State>> by_label;
    for (State q = 0; q < size(); ++q) by_label[labels_[q]].push_back(q);
    std::vector<std::vector<State>> out;
    out.reserve(by_label.size());
    for (auto& [lab, b] : by_label) out.push_back(std::move(b));
    return out;
}

int Partition::block_count() const {
    std::set<State> labs(labels_.begin(), labels_.end());
    return static_cast<int>(labs.size());
}

int Partition::min_block_size() const {
    std::map<State, int> count;
    for (State l : labels_) ++count[l];
    int m = size();
    for (auto& [lab, c] : count) m = std::min(m, c);
    return m;
}

bool Partition::is_identity() const {
    for (State q = 0; q < size(); ++q)
        if (labels_[q] != q) return false;
    return true;
}

bool Partition::is_universal() const {
    return std::all_of(labels_.begin(), labels_.end(), [](State l) { return l == 0; });
}

bool Partition::refines(const Partition& other) const {
    if (other.size() != size()) throw SizeMismatch("partition widths differ");
    for (State q = 0; q < size(); ++q)
        if (other.labels_[labels_[q]] != other.labels_[q]) return false;
    return true;
}

std::string format_partition(const Partition& p) {
    std::ostringstream os;
    os << '{';
    bool first_block = true;
    for (const auto& b : p.blocks()) {
        if (!first_block) os << ',';
        first_block = false;
        os << '{';
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) os << ',';
            os << b[i];
        }
        os << '}';
    }
    os << '}';
    return os.str();
}

bool is_congruence(const Automaton& a, const Partition& p) {
    if (p.size() != a.n) throw SizeMismatch("partition width differs from state count");
    for (Letter x = 0; x < a.alphabet_size(); ++x) {
        for (State q = 0; q < a.n; ++q) {
            State r = p.label(q);
            if (p.label(a.delta[x][q]) != p.label(a.delta[x][r])) return false;
        }
    }
    return true;
}

Partition meet(const Partition& s1, const Partition& s2) {
    if (s1.size() != s2.size()) throw SizeMismatch("partition widths differ");
    const int n = s1.size();
    std::map<std::pair<State, State>, State> first;
    std::vector<State> labels(n);
    for (State q = 0; q < n; ++q) {
        auto key = std::make_pair(s1.label(q), s2.label(q));
        auto [it, fresh] = first.try_emplace(key, q);
        labels[q] = it->second;
    }
    return Partition::from_labels(std::move(labels));
}

// Union-find with least-index roots; merging propagates through every
// letter, so arbitrary partitions close to congruences.
namespace {
class MergeClosure {
public:
    MergeClosure(const Automaton& a) : a_(a), parent_(a.n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    State find(State q) {
        while (parent_[q] != q) {
            parent_[q] = parent_[parent_[q]];
            q = parent_[q];
        }
        return q;
    }
    void merge(State p, State q) {
        p = find(p);
        q = find(q);
        if (p == q) return;
        if (p > q) std::swap(p, q);
        parent_[q] = p;
        pending_.emplace_back(p, q);
    }
    void propagate() {
        while (!pending_.empty()) {
            auto [p, q] = pending_.back();
            pending_.pop_back();
            for (Letter x = 0; x < a_.alphabet_size(); ++x)
                merge(a_.delta[x][p], a_.delta[x][q]);
        }
    }
    Partition result() {
        std::vector<State> labels(a_.n);
        for (State q = 0; q < a_.n; ++q) labels[q] = find(q);
        return Partition::from_labels(std::move(labels));
    }

private:
    const Automaton& a_;
    std::vector<State> parent_;
    std::vector<std::pair<State, State>> pending_;
};
}  // namespace

Partition join(const Automaton& a, const Partition& s1, const Partition& s2) {
    if (s1.size() != a.n || s2.size() != a.n)
        throw SizeMismatch("partition width differs from state count");
    MergeClosure mc(a);
    for (State q = 0; q < a.n; ++q) {
        mc.merge(q, s1.label(q));
        mc.merge(q, s2.label(q));
    }
    mc.propagate();
    Partition out = mc.result();
    if (!is_congruence(a, out)) throw Error("internal: join produced a non-congruence");
    return out;
}

Partition principal_congruence(const Automaton& a, State p, State q) {
    if (p == q) throw DegeneratePair("principal congruence needs two distinct states");
    if (p < 0 || q < 0 || p >= a.n || q >= a.n)
        throw SizeMismatch("state out of range");
    // 2-set images of {p,q}, then one equivalence closure; no further
    // action closure is needed.
    std::set<std::pair<State, State>> seen;
    std::deque<std::pair<State, State>> queue;
    auto norm = [](State s, State t) { return std::make_pair(std::min(s, t), std::max(s, t)); };
    auto start = norm(p, q);
    seen.insert(start);
    queue.push_back(start);
    std::vector<State> parent(a.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<State(State)> find = [&](State s) {
        while (parent[s] != s) {
            parent[s] = parent[parent[s]];
            s = parent[s];
        }
        return s;
    };
    auto unite = [&](State s, State t) {
        s = find(s);
        t = find(t);
        if (s == t) return;
        if (s > t) std::swap(s, t);
        parent[t] = s;
    };
    while (!queue.empty()) {
        auto [s, t] = queue.front();
        queue.pop_front();
        unite(s, t);
        for (Letter x = 0; x < a.alphabet_size(); ++x) {
            State is = a.delta[x][s], it = a.delta[x][t];
            if (is == it) continue;
            auto im = norm(is, it);
            if (seen.insert(im).second) queue.push_back(im);
        }
    }
    std::vector<State> labels(a.n);
    for (State s = 0; s < a.n; ++s) labels[s] = find(s);
    Partition out = Partition::from_labels(std::move(labels));
    if (!is_congruence(a, out))
        throw Error("internal: pair closure is not a congruence");
    return out;
}

// ---- pairs digraph, atoms ----

int PairsDigraph::index(State p, State q) const {
    return p * (2 * n - p - 1) / 2 + (q - p - 1);
}

PairsDigraph PairsDigraph::build(const Automaton& a) {
    PairsDigraph g;
    g.n = a.n;
    for (State p = 0; p < a.n; ++p)
        for (State q = p + 1; q < a.n; ++q) g.pairs.emplace_back(p, q);
    g.edges.resize(g.pairs.size());
    g.collapses.assign(g.pairs.size(), false);
    for (size_t id = 0; id < g.pairs.size(); ++id) {
        auto [p, q] = g.pairs[id];
        std::set<int> out;
        for (Letter x = 0; x < a.alphabet_size(); ++x) {
            State s = a.delta[x][p], t = a.delta[x][q];
            if (s == t) {
                g.collapses[id] = true;
            } else {
                out.insert(g.index(std::min(s, t), std::max(s, t)));
            }
        }
        g.edges[id].assign(out.begin(), out.end());
    }
    return g;
}

PairsDigraph::Condensation PairsDigraph::condense() const {
    const int m = static_cast<int>(pairs.size());
    // iterative Tarjan
    std::vector<int> index(m, -1), low(m, 0), comp(m, -1);
    std::vector<char> on_stack(m, 0);
    std::vector<int> stack;
    int next_index = 0, next_comp = 0;
    struct Frame { int v; size_t ei; };
    for (int root = 0; root < m; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, ei] = call.back();
            if (ei < edges[v].size()) {
                int w = edges[v][ei++];
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
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = next_comp;
                        if (w == v) break;
                    }
                    ++next_comp;
                }
                int finished = v;
                call.pop_back();
                if (!call.empty()) {
                    int parent = call.back().v;
                    low[parent] = std::min(low[parent], low[finished]);
                }
            }
        }
    }
    // renumber components by least member pair id
    std::vector<int> least(next_comp, m);
    for (int id = 0; id < m; ++id) least[comp[id]] = std::min(least[comp[id]], id);
    std::vector<int> order(next_comp);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return least[x] < least[y]; });
    std::vector<int> renum(next_comp);
    for (int i = 0; i < next_comp; ++i) renum[order[i]] = i;

    Condensation c;
    c.comp_of.resize(m);
    c.members.resize(next_comp);
    for (int id = 0; id < m; ++id) {
        c.comp_of[id] = renum[comp[id]];
        c.members[c.comp_of[id]].push_back(id);
    }
    c.succ.resize(next_comp);
    std::vector<std::set<int>> succ(next_comp);
    for (int id = 0; id < m; ++id)
        for (int w : edges[id])
            if (c.comp_of[w] != c.comp_of[id]) succ[c.comp_of[id]].insert(c.comp_of[w]);
    c.sink.resize(next_comp);
    for (int i = 0; i < next_comp; ++i) {
        c.succ[i].assign(succ[i].begin(), succ[i].end());
        c.sink[i] = c.succ[i].empty();
    }
    return c;
}

std::vector<Partition> atoms(const Automaton& a) {
    if (a.n < 2) throw TrivialAutomaton("atoms need at least two states");
    PairsDigraph g = PairsDigraph::build(a);
    auto c = g.condense();
    std::set<Partition> closures;
    for (size_t i = 0; i < c.members.size(); ++i) {
        if (!c.sink[i]) continue;
        std::vector<State> parent(a.n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<State(State)> find = [&](State s) {
            while (parent[s] != s) {
                parent[s] = parent[parent[s]];
                s = parent[s];
            }
            return s;
        };
        for (int id : c.members[i]) {
            auto [p, q] = g.pairs[id];
            State rp = find(p), rq = find(q);
            if (rp != rq) parent[std::max(rp, rq)] = std::min(rp, rq);
        }
        std::vector<State> labels(a.n);
        for (State s = 0; s < a.n; ++s) labels[s] = find(s);
        closures.insert(Partition::from_labels(std::move(labels)));
    }
    // a sink closure can properly contain another one; atoms are the
    // inclusion-minimal closures
    std::vector<Partition> out;
    for (const Partition& c1 : closures) {
        bool minimal = true;
        for (const Partition& c2 : closures) {
            if (!(c2 == c1) && c2.refines(c1)) { minimal = false; break; }
        }
        if (minimal) out.push_back(c1);
    }
    return out;
}

// ---- lattice ----

int CongruenceLattice::index_of(const Partition& p) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == p) return static_cast<int>(i);
    return -1;
}

CongruenceLattice congruence_lattice(const Automaton& a, const SearchLimits& lim) {
    std::set<Partition> elems;
    elems.insert(Partition::identity(a.n));
    std::vector<Partition> principals;
    for (State p = 0; p < a.n; ++p) {
        for (State q = p + 1; q < a.n; ++q) {
            Partition pc = principal_congruence(a, p, q);
            if (elems.insert(pc).second) principals.push_back(pc);
        }
    }
    std::deque<Partition> work(principals.begin(), principals.end());
    while (!work.empty()) {
        Partition cur = std::move(work.front());
        work.pop_front();
        for (const Partition& g : principals) {
            Partition j = join(a, cur, g);
            if (elems.insert(j).second) {
                if (elems.size() > lim.max_congruences)
                    throw CapExceeded("congruence count above the configured cap");
                work.push_back(j);
            }
        }
    }
    CongruenceLattice l;
    l.elements.assign(elems.begin(), elems.end());
    std::sort(l.elements.begin(), l.elements.end(), [](const Partition& x, const Partition& y) {
        int bx = x.block_count(), by = y.block_count();
        if (bx != by) return bx > by;
        return x.labels() < y.labels();
    });
    const int L = static_cast<int>(l.elements.size());
    l.bottom = l.index_of(Partition::identity(a.n));
    l.top = l.index_of(Partition::universal(a.n));
    // covers: i below j with nothing strictly between
    std::vector<std::vector<char>> less(L, std::vector<char>(L, 0));
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j)
            if (i != j && l.elements[i].refines(l.elements[j])) less[i][j] = 1;
    l.covers.assign(L, {});
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            if (!less[i][j]) continue;
            bool direct = true;
            for (int k = 0; k < L && direct; ++k)
                if (less[i][k] && less[k][j]) direct = false;
            if (direct) l.covers[i].push_back(j);
        }
    }
    return l;
}

int lattice_height(const CongruenceLattice& l) {
    const int L = static_cast<int>(l.elements.size());
    // elements are sorted by descending block count, a topological order
    // for strict refinement
    std::vector<int> best(L, 1);
    int h = 1;
    for (int j = 0; j < L; ++j) {
        for (int i = 0; i < j; ++i)
            if (l.elements[i] != l.elements[j] && l.elements[i].refines(l.elements[j]))
                best[j] = std::max(best[j], best[i] + 1);
        h = std::max(h, best[j]);
    }
    return h;
}

// ---- quotient, lifting ----

QuotientResult quotient(const Automaton& a, const Partition& s) {
    if (!is_congruence(a, s)) throw NotACongruence("partition is not action-stable");
    std::vector<State> reps;
    for (State q = 0; q < a.n; ++q)
        if (s.label(q) == q) reps.push_back(q);
    std::vector<int> block_index(a.n, -1);
    for (size_t i = 0; i < reps.size(); ++i) block_index[reps[i]] = static_cast<int>(i);
    QuotientResult out;
    out.class_of.resize(a.n);
    for (State q = 0; q < a.n; ++q) out.class_of[q] = block_index[s.label(q)];
    std::vector<std::vector<State>> delta(a.alphabet_size(),
                                          std::vector<State>(reps.size()));
    for (Letter x = 0; x < a.alphabet_size(); ++x)
        for (size_t i = 0; i < reps.size(); ++i)
            delta[x][i] = out.class_of[a.delta[x][reps[i]]];
    out.automaton = Automaton::create(static_cast<int>(reps.size()), a.letters, std::move(delta));
    return out;
}

Partition lift_congruence(const Automaton& a, const Partition& s, const Partition& r) {
    QuotientResult q = quotient(a, s);
    if (r.size() != q.automaton.n)
        throw SizeMismatch("quotient congruence width differs from block count");
    std::vector<State> labels(a.n);
    // group states by the r-label of their block; least state per group
    std::map<State, State> least;
    for (State st = 0; st < a.n; ++st) {
        State key = r.label(q.class_of[st]);
        auto [it, fresh] = least.try_emplace(key, st);
        if (!fresh) it->second = std::min(it->second, st);
    }
    for (State st = 0; st < a.n; ++st) labels[st] = least[r.label(q.class_of[st])];
    Partition out = Partition::from_labels(std::move(labels));
    if (!is_congruence(a, out)) throw Error("internal: lifted relation is not a congruence");
    return out;
}

// ---- reset-word lifts ----

namespace {
// Lexicographically least shortest word moving `from` into `targets`
// inside the quotient automaton.
std::optional<Word> navigate(const Automaton& a, State from, const std::vector<char>& target) {
    if (target[from]) return Word{};
    std::vector<int8_t> via(a.n, -1);
    std::vector<State> prev(a.n, -1);
    std::vector<char> seen(a.n, 0);
    std::deque<State> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (Letter x = 0; x < a.alphabet_size(); ++x) {
            State t = a.delta[x][q];
            if (seen[t]) continue;
            seen[t] = 1;
            via[t] = static_cast<int8_t>(x);
            prev[t] = q;
            if (target[t]) {
                Word w;
                for (State s = t; s != from; s = prev[s]) w.push_back(via[s]);
                std::reverse(w.begin(), w.end());
                return w;
            }
            queue.push_back(t);
        }
    }
    return std::nullopt;
}

void expect(bool cond, const char* clause) {
    if (!cond) throw PreconditionViolation(clause);
}
}  // namespace

LiftResult lift_reset_word_small_class(const Automaton& a, const Partition& s, const Word& u) {
    expect(is_strongly_connected(a), "automaton must be strongly connected");
    expect(is_synchronizing(a), "automaton must be synchronizing");
    expect(s.size() == a.n, "congruence width must match the automaton");
    expect(is_congruence(a, s), "partition must be a congruence");
    expect(!s.is_trivial(), "congruence must be non-trivial");
    auto blocks = s.blocks();
    bool small = std::any_of(blocks.begin(), blocks.end(),
                             [](const auto& b) { return b.size() <= 2; });
    expect(small, "congruence must have a class of size 1 or 2");
    QuotientResult quot = quotient(a, s);
    {
        StateSet img(quot.automaton.n);
        for (State q = 0; q < quot.automaton.n; ++q) img.insert(q);
        expect(apply(quot.automaton, img, u).count() == 1, "word must reset the quotient");
    }

    Word result = u;
    StateSet cur = apply(a, StateSet::all(a.n), u);
    if (cur.count() > 1) {
        // steer to a smallest class, preferring singletons
        size_t want = 2;
        for (const auto& b : blocks) want = std::min(want, b.size());
        std::vector<char> target(quot.automaton.n, 0);
        for (size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i].size() == want) target[quot.class_of[blocks[i][0]]] = 1;
        State from = quot.class_of[cur.states().front()];
        auto nav = navigate(quot.automaton, from, target);
        if (!nav) throw Error("internal: quotient navigation failed");
        result.insert(result.end(), nav->begin(), nav->end());
        cur = apply(a, cur, *nav);
        if (cur.count() > 1) {
            auto merge = shortest_shrink_word(a, cur);
            if (!merge) throw Error("internal: pair merge failed");
            result.insert(result.end(), merge->begin(), merge->end());
            cur = apply(a, cur, *merge);
        }
    }
    if (cur.count() != 1) throw Error("internal: lift did not reset");

    LiftResult out{std::move(result), false};
    const long long n = a.n, nq = quot.automaton.n;
    if (static_cast<long long>(u.size()) <= (nq - 1) * (nq - 1)) {
        long long len = static_cast<long long>(out.word.size());
        if (!(len < (n - 1) * (n - 1)))
            throw Error("internal: lifted word misses the (n-1)^2 bound");
        out.bound_checked = true;
    }
    return out;
}

LiftResult lift_reset_word_general(const Automaton& a, const Partition& s, const Word& u) {
    expect(is_synchronizing(a), "automaton must be synchronizing");
    expect(s.size() == a.n, "congruence width must match the automaton");
    expect(is_congruence(a, s), "partition must be a congruence");
    expect(!s.is_trivial(), "congruence must be non-trivial");
    const int m = s.min_block_size();
    expect(m >= 3, "minimum class size must be at least 3");
    QuotientResult quot = quotient(a, s);
    {
        StateSet img(quot.automaton.n);
        for (State q = 0; q < quot.automaton.n; ++q) img.insert(q);
        expect(apply(quot.automaton, img, u).count() == 1, "word must reset the quotient");
    }

    Word result = u;
    StateSet cur = apply(a, StateSet::all(a.n), u);
    auto blocks = s.blocks();
    bool reached_min = true;
    if (cur.count() > 1) {
        // steer to the smallest reachable class
        State from = quot.class_of[cur.states().front()];
        std::vector<char> reach(quot.automaton.n, 0);
        {
            std::deque<State> queue{from};
            reach[from] = 1;
            while (!queue.empty()) {
                State q = queue.front();
                queue.pop_front();
                for (Letter x = 0; x < quot.automaton.alphabet_size(); ++x) {
                    State t = quot.automaton.delta[x][q];
                    if (!reach[t]) { reach[t] = 1; queue.push_back(t); }
                }
            }
        }
        size_t best = a.n + 1;
        for (size_t i = 0; i < blocks.size(); ++i)
            if (reach[quot.class_of[blocks[i][0]]]) best = std::min(best, blocks[i].size());
        reached_min = (static_cast<int>(best) == m);
        std::vector<char> target(quot.automaton.n, 0);
        for (size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i].size() == best) target[quot.class_of[blocks[i][0]]] = 1;
        auto nav = navigate(quot.automaton, from, target);
        if (!nav) throw Error("internal: quotient navigation failed");
        result.insert(result.end(), nav->begin(), nav->end());
        cur = apply(a, cur, *nav);
        while (cur.count() > 1) {
            auto step = shortest_shrink_word(a, cur);
            if (!step) throw Error("internal: class merge failed");
            result.insert(result.end(), step->begin(), step->end());
            cur = apply(a, cur, *step);
        }
    }
    if (cur.count() != 1) throw Error("internal: lift did not reset");

    LiftResult out{std::move(result), false};
    const long long n = a.n, mm = m, len = static_cast<long long>(out.word.size());
    // |u| <= (n/m - 1)^2  <=>  m^2 |u| <= (n - m)^2
    if (reached_min && mm * mm * static_cast<long long>(u.size()) <= (n - mm) * (n - mm)) {
        // 6 m^2 len <= 6 n^2 - 6 n m + m^2 (n^3 - n) - m^2 ((n-m)^3 + 3(n-m)^2 + 2(n-m))
        const long long d = n - mm;
        const long long rhs = 6 * n * n - 6 * n * mm + mm * mm * (n * n * n - n) -
                              mm * mm * (d * d * d + 3 * d * d + 2 * d);
        if (!(6 * mm * mm * len <= rhs))
            throw Error("internal: lifted word misses the combined bound");
        out.bound_checked = true;
    }
    return out;
}

}  // namespace synkit
