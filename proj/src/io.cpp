#include "synkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace synkit {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

int parse_int(const std::string& t, int lineno, const char* what) {
    try {
        size_t used = 0;
        int v = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad " + what + ": " + t);
    }
}

}  // namespace

AutRecord parse_aut(std::istream& in) {
    std::vector<std::pair<int, std::vector<std::string>>> lines;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = tokens_of(strip_comment(raw));
        if (!toks.empty()) lines.emplace_back(lineno, std::move(toks));
    }
    size_t at = 0;
    auto need = [&](const char* what) -> std::pair<int, std::vector<std::string>>& {
        if (at >= lines.size()) throw ParseError(std::string("unexpected end of file, wanted ") + what);
        return lines[at];
    };

    {
        auto& [ln, toks] = need("header 'aut 1'");
        if (toks.size() != 2 || toks[0] != "aut" || toks[1] != "1")
            throw ParseError("line " + std::to_string(ln) + ": expected header 'aut 1'");
        ++at;
    }
    int n = 0;
    {
        auto& [ln, toks] = need("'states N'");
        if (toks.size() != 2 || toks[0] != "states")
            throw ParseError("line " + std::to_string(ln) + ": expected 'states N'");
        n = parse_int(toks[1], ln, "state count");
        if (n < 1) throw ParseError("line " + std::to_string(ln) + ": state count must be >= 1");
        ++at;
    }
    std::vector<std::string> letters;
    {
        auto& [ln, toks] = need("'letters ...'");
        if (toks.size() < 2 || toks[0] != "letters")
            throw ParseError("line " + std::to_string(ln) + ": expected 'letters t1 ... tk'");
        letters.assign(toks.begin() + 1, toks.end());
        for (const auto& t : letters)
            if (t.find(':') != std::string::npos)
                throw ParseError("line " + std::to_string(ln) + ": letter token contains ':'");
        ++at;
    }
    std::vector<std::vector<State>> delta(letters.size());
    for (size_t x = 0; x < letters.size(); ++x) {
        auto& [ln, toks] = need("transition line");
        if (toks.size() != size_t(n) + 1 || toks[0] != letters[x] + ":")
            throw ParseError("line " + std::to_string(ln) + ": expected '" + letters[x] +
                             ": i0 ... i" + std::to_string(n - 1) + "'");
        delta[x].resize(n);
        for (int q = 0; q < n; ++q) delta[x][q] = parse_int(toks[q + 1], ln, "state index");
        ++at;
    }
    AutRecord rec;
    try {
        rec.automaton = Automaton::create(n, std::move(letters), std::move(delta));
    } catch (const InvalidAutomaton& e) {
        throw ParseError(e.what());
    }
    while (at < lines.size()) {
        auto& [ln, toks] = lines[at];
        if (toks[0] == "initial" && toks.size() == 2) {
            rec.initial = parse_int(toks[1], ln, "initial state");
            if (*rec.initial < 0 || *rec.initial >= n)
                throw ParseError("line " + std::to_string(ln) + ": initial state out of range");
        } else if (toks[0] == "final") {
            for (size_t i = 1; i < toks.size(); ++i) {
                int f = parse_int(toks[i], ln, "final state");
                if (f < 0 || f >= n)
                    throw ParseError("line " + std::to_string(ln) + ": final state out of range");
                rec.finals.push_back(f);
            }
        } else {
            throw ParseError("line " + std::to_string(ln) + ": unexpected line '" + toks[0] + "'");
        }
        ++at;
    }
    std::sort(rec.finals.begin(), rec.finals.end());
    rec.finals.erase(std::unique(rec.finals.begin(), rec.finals.end()), rec.finals.end());
    return rec;
}

AutRecord parse_aut_string(const std::string& text) {
    std::istringstream in(text);
    return parse_aut(in);
}

AutRecord parse_aut_path(const std::string& path) {
    if (path == "-") return parse_aut(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_aut(in);
}

void print_aut(std::ostream& out, const AutRecord& rec) {
    const Automaton& a = rec.automaton;
    out << "aut 1\n";
    out << "states " << a.n << "\n";
    out << "letters";
    for (const auto& t : a.letters) out << ' ' << t;
    out << "\n";
    for (int x = 0; x < a.alphabet_size(); ++x) {
        out << a.letters[x] << ':';
        for (State q : a.delta[x]) out << ' ' << q;
        out << "\n";
    }
    if (rec.initial) out << "initial " << *rec.initial << "\n";
    if (!rec.finals.empty()) {
        out << "final";
        for (State f : rec.finals) out << ' ' << f;
        out << "\n";
    }
}

std::string aut_to_string(const AutRecord& rec) {
    std::ostringstream os;
    print_aut(os, rec);
    return os.str();
}

Partition parse_partition(std::istream& in, int n) {
    std::vector<std::vector<State>> blocks;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = tokens_of(strip_comment(raw));
        if (toks.empty()) continue;
        std::vector<State> block;
        for (const auto& t : toks) {
            int q = parse_int(t, lineno, "state index");
            if (q < 0 || q >= n)
                throw ParseError("line " + std::to_string(lineno) + ": state out of range");
            block.push_back(q);
        }
        blocks.push_back(std::move(block));
    }
    try {
        return Partition::from_blocks(n, blocks);
    } catch (const SizeMismatch& e) {
        throw ParseError(e.what());
    }
}

Partition parse_partition_path(const std::string& path, int n) {
    if (path == "-") return parse_partition(std::cin, n);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_partition(in, n);
}

void print_report(std::ostream& out, const Report& r) {
    for (const auto& [k, v] : r) out << k << " = " << v << "\n";
}

std::string format_word(const Automaton& a, const Word& w) {
    bool single = std::all_of(a.letters.begin(), a.letters.end(),
                              [](const std::string& t) { return t.size() == 1; });
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!single && i) out += ' ';
        out += a.letters[w[i]];
    }
    return out;
}

std::string pairs_digraph_dot(const Automaton& a) {
    PairsDigraph g = PairsDigraph::build(a);
    auto c = g.condense();
    std::ostringstream os;
    os << "digraph pairs {\n";
    os << "  rankdir=LR;\n";
    for (size_t i = 0; i < c.members.size(); ++i) {
        os << "  c" << i << " [label=\"";
        for (size_t j = 0; j < c.members[i].size(); ++j) {
            auto [p, q] = g.pairs[c.members[i][j]];
            if (j) os << ' ';
            os << '{' << p << ',' << q << '}';
        }
        os << "\"";
        if (c.sink[i]) os << ", peripheries=2";
        bool collapse = std::any_of(c.members[i].begin(), c.members[i].end(),
                                    [&](int id) { return g.collapses[id]; });
        if (collapse) os << ", style=bold";
        os << "];\n";
    }
    for (size_t i = 0; i < c.members.size(); ++i)
        for (int s : c.succ[i]) os << "  c" << i << " -> c" << s << ";\n";
    os << "}\n";
    return os.str();
}

std::string lattice_dot(const CongruenceLattice& l) {
    std::ostringstream os;
    os << "digraph lattice {\n";
    os << "  rankdir=BT;\n";
    for (size_t i = 0; i < l.elements.size(); ++i)
        os << "  n" << i << " [label=\"" << format_partition(l.elements[i]) << "\"];\n";
    for (size_t i = 0; i < l.elements.size(); ++i)
        for (int j : l.covers[i]) os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace synkit
