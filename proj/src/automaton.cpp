#include "synkit/automaton.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <queue>
#include <set>

namespace synkit {

Automaton Automaton::create(int n, std::vector<std::string> letters,
                            std::vector<std::vector<State>> delta) {
    Automaton a;
    a.n = n;
    a.letters = std::move(letters);
    a.delta = std::move(delta);
    a.validate();
    return a;
}

void Automaton::validate() const {
    if (n < 1) throw InvalidAutomaton("state count must be at least 1");
    if (letters.empty()) throw InvalidAutomaton("alphabet must be non-empty");
    std::set<std::string> seen;
    for (const auto& t : letters) {
        if (t.empty()) throw InvalidAutomaton("empty letter token");
        if (!seen.insert(t).second) throw InvalidAutomaton("duplicate letter token: " + t);
    }
    if (delta.size() != letters.size())
        throw InvalidAutomaton("transition table must have one row per letter");
    for (const auto& row : delta) {
        if (static_cast<int>(row.size()) != n)
            throw InvalidAutomaton("transition row length differs from state count");
        for (State q : row)
            if (q < 0 || q >= n) throw InvalidAutomaton("transition target out of range");
    }
}

StateSet StateSet::all(int n) {
    StateSet s(n);
    for (State q = 0; q < n; ++q) s.insert(q);
    return s;
}

StateSet StateSet::single(int n, State q) {
    StateSet s(n);
    s.insert(q);
    return s;
}

void StateSet::clear() { std::fill(bits_.begin(), bits_.end(), 0); }

int StateSet::count() const {
    int c = 0;
    for (uint64_t w : bits_) c += std::popcount(w);
    return c;
}

std::vector<State> StateSet::states() const {
    std::vector<State> out;
    for (State q = 0; q < n_; ++q)
        if (contains(q)) out.push_back(q);
    return out;
}

std::optional<State> StateSet::only() const {
    State found = -1;
    for (size_t i = 0; i < bits_.size(); ++i) {
        uint64_t w = bits_[i];
        if (!w) continue;
        if (found >= 0 || (w & (w - 1))) return std::nullopt;
        found = static_cast<State>(i * 64 + std::countr_zero(w));
    }
    if (found < 0) return std::nullopt;
    return found;
}

static void check_word(const Automaton& a, const Word& w) {
    for (Letter x : w)
        if (x < 0 || x >= a.alphabet_size())
            throw InvalidWord("letter index out of range: " + std::to_string(x));
}

State apply_state(const Automaton& a, State q, const Word& w) {
    check_word(a, w);
    for (Letter x : w) q = a.delta[x][q];
    return q;
}

StateSet apply(const Automaton& a, const StateSet& s, const Word& w) {
    check_word(a, w);
    std::vector<State> cur = s.states();
    for (Letter x : w) {
        for (State& q : cur) q = a.delta[x][q];
    }
    StateSet out(a.n);
    for (State q : cur) out.insert(q);
    return out;
}

bool is_strongly_connected(const Automaton& a) {
    if (a.n <= 1) return true;
    auto reach_all = [&](bool reversed) {
        std::vector<std::vector<State>> radj;
        if (reversed) {
            radj.assign(a.n, {});
            for (const auto& row : a.delta)
                for (State q = 0; q < a.n; ++q) radj[row[q]].push_back(q);
        }
        std::vector<char> seen(a.n, 0);
        std::deque<State> queue{0};
        seen[0] = 1;
        int count = 1;
        while (!queue.empty()) {
            State q = queue.front();
            queue.pop_front();
            if (reversed) {
                for (State p : radj[q])
                    if (!seen[p]) { seen[p] = 1; ++count; queue.push_back(p); }
            } else {
                for (const auto& row : a.delta) {
                    State p = row[q];
                    if (!seen[p]) { seen[p] = 1; ++count; queue.push_back(p); }
                }
            }
        }
        return count == a.n;
    };
    return reach_all(false) && reach_all(true);
}

// ---- pair machinery ----

static inline int pair_index(int n, State p, State q) {
    // p < q
    return p * (2 * n - p - 1) / 2 + (q - p - 1);
}

PairTable::PairTable(const Automaton& a) : n_(a.n) {
    int np = a.n * (a.n - 1) / 2;
    dist_.assign(np, -1);
    int k = a.alphabet_size();
    std::vector<std::vector<int>> rev(np);
    std::deque<int> queue;
    for (State p = 0; p < a.n; ++p) {
        for (State q = p + 1; q < a.n; ++q) {
            int id = pair_index(a.n, p, q);
            for (Letter x = 0; x < k; ++x) {
                State s = a.delta[x][p], t = a.delta[x][q];
                if (s == t) {
                    if (dist_[id] < 0) { dist_[id] = 1; queue.push_back(id); }
                } else {
                    rev[pair_index(a.n, std::min(s, t), std::max(s, t))].push_back(id);
                }
            }
        }
    }
    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        for (int pre : rev[id]) {
            if (dist_[pre] < 0) {
                dist_[pre] = dist_[id] + 1;
                queue.push_back(pre);
            }
        }
    }
}

int PairTable::dist(State p, State q) const {
    if (p == q) return 0;
    return dist_[pair_index(n_, std::min(p, q), std::max(p, q))];
}

bool PairTable::all_finite() const {
    return std::none_of(dist_.begin(), dist_.end(), [](int d) { return d < 0; });
}

int PairTable::index(State p, State q) const { return pair_index(n_, p, q); }

bool is_synchronizing(const Automaton& a) {
    if (a.n <= 1) return true;
    return PairTable(a).all_finite();
}

Word shortest_reset_word(const Automaton& a, const SearchLimits& lim) {
    if (a.n == 1) return {};
    if (a.n >= 64 || (uint64_t(1) << a.n) > lim.max_subsets)
        throw CapExceeded("subset search needs 2^" + std::to_string(a.n) +
                          " subsets, above the configured cap");
    if (!is_synchronizing(a)) throw NotSynchronizing("automaton admits no reset word");

    const uint64_t full = (uint64_t(1) << a.n) - 1;
    const int k = a.alphabet_size();
    std::vector<int32_t> prev(size_t(1) << a.n, -1);   // predecessor subset
    std::vector<int8_t> via(size_t(1) << a.n, -1);     // letter taken
    std::deque<uint64_t> queue{full};
    prev[full] = static_cast<int32_t>(full);
    uint64_t goal = 0;
    bool found = false;
    while (!queue.empty() && !found) {
        uint64_t s = queue.front();
        queue.pop_front();
        for (Letter x = 0; x < k && !found; ++x) {
            uint64_t t = 0;
            uint64_t rest = s;
            while (rest) {
                int q = std::countr_zero(rest);
                rest &= rest - 1;
                t |= uint64_t(1) << a.delta[x][q];
            }
            if (prev[t] >= 0) continue;
            prev[t] = static_cast<int32_t>(s);
            via[t] = static_cast<int8_t>(x);
            if ((t & (t - 1)) == 0) {
                goal = t;
                found = true;
            } else {
                queue.push_back(t);
            }
        }
    }
    Word w;
    for (uint64_t s = goal; s != full; s = static_cast<uint64_t>(prev[s]))
        w.push_back(via[s]);
    std::reverse(w.begin(), w.end());
    return w;
}

// Lexicographically least among the minimum-length words that merge some
// pair of s: keep every pair still on an exact-distance path and pick the
// least letter with a surviving continuation.
static std::optional<Word> shrink_word(const Automaton& a, const PairTable& table,
                                       const StateSet& s) {
    std::vector<State> members = s.states();
    if (members.size() <= 1) return Word{};
    int best = -1;
    std::vector<int> frontier;
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = i + 1; j < members.size(); ++j) {
            int d = table.dist(members[i], members[j]);
            if (d < 0) continue;
            if (best < 0 || d < best) best = d;
        }
    }
    if (best < 0) return std::nullopt;
    std::set<std::pair<State, State>> cur;
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (table.dist(members[i], members[j]) == best)
                cur.insert({members[i], members[j]});

    Word w;
    int budget = best;
    const int k = a.alphabet_size();
    while (budget > 0) {
        bool advanced = false;
        for (Letter x = 0; x < k && !advanced; ++x) {
            std::set<std::pair<State, State>> next;
            bool ok = false;
            for (auto [p, q] : cur) {
                State sp = a.delta[x][p], sq = a.delta[x][q];
                if (sp == sq) {
                    if (budget == 1) ok = true;
                    continue;
                }
                auto pr = std::minmax(sp, sq);
                if (budget > 1 && table.dist(pr.first, pr.second) == budget - 1) {
                    next.insert({pr.first, pr.second});
                    ok = true;
                }
            }
            if (ok) {
                w.push_back(x);
                cur = std::move(next);
                --budget;
                advanced = true;
            }
        }
        if (!advanced) throw Error("internal: shrink frontier died");  // unreachable
    }
    return w;
}

std::optional<Word> shortest_shrink_word(const Automaton& a, const StateSet& s) {
    PairTable table(a);
    return shrink_word(a, table, s);
}

Word greedy_reset_word(const Automaton& a) {
    PairTable table(a);
    if (a.n > 1 && !table.all_finite())
        throw NotSynchronizing("automaton admits no reset word");
    Word out;
    StateSet cur = StateSet::all(a.n);
    while (cur.count() > 1) {
        auto step = shrink_word(a, table, cur);
        if (!step) throw NotSynchronizing("automaton admits no reset word");
        out.insert(out.end(), step->begin(), step->end());
        cur = apply(a, cur, *step);
    }
    return out;
}

}  // namespace synkit
