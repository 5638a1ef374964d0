#include "synkit/corpus.hpp"

#include <algorithm>

#include "synkit/io.hpp"

namespace synkit {

Automaton cerny(int n) {
    if (n < 2) throw PreconditionViolation("cerny needs at least 2 states");
    std::vector<State> a(n), b(n);
    for (State i = 0; i < n; ++i) {
        a[i] = (i + 1) % n;
        b[i] = i;
    }
    b[0] = 1;
    return Automaton::create(n, {"a", "b"}, {a, b});
}

Automaton chain(int n) {
    if (n < 2) throw PreconditionViolation("chain needs at least 2 states");
    std::vector<State> a(n);
    for (State i = 0; i < n; ++i) a[i] = std::max(i - 1, 0);
    return Automaton::create(n, {"a"}, {a});
}

Automaton double_cerny() {
    return Automaton::create(8, {"a", "b", "c"},
                             {{1, 2, 3, 0, 5, 6, 7, 4},
                              {0, 1, 2, 0, 4, 5, 6, 4},
                              {0, 1, 2, 3, 0, 1, 2, 3}});
}

Automaton modcerny1() {
    return Automaton::create(4, {"a", "b", "c"},
                             {{2, 2, 3, 1}, {0, 0, 2, 1}, {1, 0, 2, 3}});
}

Automaton modcerny2() {
    return Automaton::create(4, {"a", "b", "c", "d"},
                             {{2, 2, 3, 1}, {0, 0, 2, 1}, {1, 0, 2, 3}, {1, 0, 1, 1}});
}

Automaton quasi3() {
    return Automaton::create(3, {"a", "b"}, {{0, 0, 0}, {0, 2, 1}});
}

uint64_t SplitMix64::next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint64_t SplitMix64::next_below(uint64_t bound) {
    // rejection sampling keeps the draw unbiased and platform-independent
    const uint64_t limit = bound * (UINT64_MAX / bound);
    uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

Automaton random_automaton(int n, int k, uint64_t seed) {
    if (n < 1 || k < 1) throw PreconditionViolation("random automaton needs n >= 1, k >= 1");
    SplitMix64 rng(seed);
    std::vector<std::string> letters(k);
    for (int x = 0; x < k; ++x) {
        if (k <= 26)
            letters[x] = std::string(1, static_cast<char>('a' + x));
        else
            letters[x] = "l" + std::to_string(x);
    }
    std::vector<std::vector<State>> delta(k, std::vector<State>(n));
    for (int x = 0; x < k; ++x)
        for (State q = 0; q < n; ++q)
            delta[x][q] = static_cast<State>(rng.next_below(static_cast<uint64_t>(n)));
    return Automaton::create(n, std::move(letters), std::move(delta));
}

std::vector<CorpusEntry> corpus_entries() {
    std::vector<CorpusEntry> out;
    auto add = [&out](std::string name, Automaton a, std::string note,
                      std::map<std::string, std::string> expected,
                      std::vector<std::string> resets = {}) {
        out.push_back({std::move(name), std::move(a), std::move(note), std::move(expected),
                       std::move(resets)});
    };

    add("cerny2", cerny(2), "two-state cycle-and-merge",
        {{"class", "simple"}, {"shortest_reset_length", "1"}, {"monoid_size", "4"},
         {"semisimple", "true"}, {"lattice_size", "2"}});
    add("cerny3", cerny(3), "three-state cycle-and-merge",
        {{"class", "simple"}, {"shortest_reset_length", "4"}, {"monoid_size", "24"},
         {"semisimple", "true"}, {"nilpotency_index", "1"}});
    add("cerny4", cerny(4), "four-state cycle-and-merge",
        {{"class", "simple"}, {"shortest_reset_length", "9"}, {"monoid_size", "128"},
         {"semisimple", "true"}, {"lattice_size", "2"}, {"atom_count", "1"}});
    add("cerny5", cerny(5), "five-state cycle-and-merge",
        {{"class", "simple"}, {"shortest_reset_length", "16"}, {"monoid_size", "610"},
         {"semisimple", "true"}});
    add("cerny6", cerny(6), "six-state cycle-and-merge",
        {{"class", "simple"}, {"shortest_reset_length", "25"}, {"semisimple", "true"}});

    add("chain2", chain(2), "unary descending chain",
        {{"class", "simple"}, {"monoid_size", "2"}, {"semisimple", "true"},
         {"nilpotency_index", "1"}, {"shortest_reset_length", "1"}});
    add("chain4", chain(4), "unary descending chain",
        {{"class", "non-semisimple-other"}, {"monoid_size", "4"}, {"syn_size", "1"},
         {"rad_size", "3"}, {"nilpotency_index", "3"}, {"lattice_size", "4"},
         {"lattice_height", "4"}, {"atom_count", "1"}, {"shortest_reset_length", "3"},
         {"greedy_reset_length", "3"}, {"shortest_radical_length", "1"},
         {"semisimple", "false"}, {"strongly_connected", "false"}});
    add("chain5", chain(5), "unary descending chain",
        {{"nilpotency_index", "4"}, {"lattice_size", "5"}, {"lattice_height", "5"},
         {"greedy_reset_length", "4"}});
    add("chain6", chain(6), "unary descending chain",
        {{"nilpotency_index", "5"}, {"lattice_size", "6"}, {"lattice_height", "6"}});
    add("chain7", chain(7), "unary descending chain",
        {{"nilpotency_index", "6"}, {"lattice_size", "7"}, {"lattice_height", "7"}});

    add("double_cerny", double_cerny(), "two stacked 4-cycles with a folding letter",
        {{"class", "semisimple-other"}, {"semisimple", "true"}, {"monoid_size", "256"},
         {"syn_size", "4"}, {"rad_size", "4"}, {"nilpotency_index", "1"},
         {"lattice_size", "5"}, {"lattice_height", "4"}, {"atom_count", "2"},
         {"shortest_reset_length", "10"}, {"strongly_connected", "true"}},
        {"baaabaaabc"});
    add("modcerny1", modcerny1(), "four states over a three-cycle quotient",
        {{"class", "non-semisimple-other"}, {"semisimple", "false"}, {"monoid_size", "54"},
         {"syn_size", "4"}, {"rad_size", "10"}, {"nilpotency_index", "2"},
         {"lattice_size", "3"}, {"lattice_height", "3"}, {"atom_count", "1"},
         {"shortest_reset_length", "5"}, {"shortest_radical_length", "4"},
         {"strongly_connected", "true"}});
    add("modcerny2", modcerny2(), "modcerny1 plus a class-separating letter",
        {{"class", "radical"}, {"semisimple", "false"}, {"monoid_size", "58"},
         {"syn_size", "4"}, {"rad_size", "10"}, {"nilpotency_index", "2"},
         {"lattice_size", "3"}, {"atom_count", "1"}, {"shortest_reset_length", "2"}});
    add("quasi3", quasi3(), "constant letter plus a swap",
        {{"class", "quasi-simple"}, {"semisimple", "true"}, {"monoid_size", "3"},
         {"syn_size", "1"}, {"rad_size", "1"}, {"nilpotency_index", "1"},
         {"lattice_size", "3"}, {"lattice_height", "3"}, {"atom_count", "1"},
         {"shortest_reset_length", "1"}, {"strongly_connected", "false"}},
        {"a"});
    return out;
}

CheckReport check_corpus_entry(const CorpusEntry& e, const SearchLimits& lim) {
    CheckReport rep;
    Report r = analysis_report(analyze(e.automaton, lim), lim);
    for (const auto& [key, want] : e.expected_report) {
        ++rep.checks;
        auto it = r.find(key);
        if (it == r.end()) {
            rep.fail(e.name + ": report key missing: " + key);
        } else if (it->second != want) {
            rep.fail(e.name + ": " + key + " = " + it->second + ", expected " + want);
        }
    }
    for (const std::string& text : e.reset_words) {
        ++rep.checks;
        Word w;
        bool ok = true;
        for (char ch : text) {
            auto it = std::find(e.automaton.letters.begin(), e.automaton.letters.end(),
                                std::string(1, ch));
            if (it == e.automaton.letters.end()) {
                rep.fail(e.name + ": unknown letter in reset word " + text);
                ok = false;
                break;
            }
            w.push_back(static_cast<Letter>(it - e.automaton.letters.begin()));
        }
        if (ok && apply(e.automaton, StateSet::all(e.automaton.n), w).count() != 1)
            rep.fail(e.name + ": word does not reset: " + text);
    }
    return rep;
}

}  // namespace synkit
