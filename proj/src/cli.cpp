#include "synkit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "synkit/io.hpp"
#include "synkit/verify.hpp"

namespace synkit {

namespace {

struct CapFlags {
    size_t max_monoid = SearchLimits{}.max_monoid;
    size_t max_subsets = SearchLimits{}.max_subsets;
    size_t max_congruences = SearchLimits{}.max_congruences;
    size_t max_product_states = SearchLimits{}.max_product_states;

    SearchLimits limits() const {
        return {max_subsets, max_monoid, max_congruences, max_product_states};
    }
};

void add_caps(CLI::App* cmd, CapFlags& caps) {
    cmd->add_option("--max-monoid", caps.max_monoid, "monoid element cap");
    cmd->add_option("--max-subsets", caps.max_subsets, "subset search cap");
    cmd->add_option("--max-congruences", caps.max_congruences, "congruence count cap");
    cmd->add_option("--max-product-states", caps.max_product_states,
                    "recognizer product state cap");
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open " + path + " for writing");
    f << text;
}

Automaton load(const std::string& path) { return parse_aut_path(path).automaton; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"synchronizing automata toolkit"};
    app.require_subcommand(1);
    CapFlags caps;

    std::string file, dot_path, sigma_path, out_path, method = "oracle";
    bool exact = false, greedy = false;
    std::string lift_sigma;

    auto* analyze_cmd = app.add_subcommand("analyze", "full structural report");
    analyze_cmd->add_option("file", file, "automaton file ('-' for stdin)")->required();
    add_caps(analyze_cmd, caps);

    auto* classify_cmd = app.add_subcommand("classify", "class and flags only");
    classify_cmd->add_option("file", file)->required();
    add_caps(classify_cmd, caps);

    auto* radical_cmd = app.add_subcommand("radical", "radical ideal of the transition monoid");
    radical_cmd->add_option("file", file)->required();
    radical_cmd->add_option("--method", method, "oracle | alg1 | both")
        ->check(CLI::IsMember({"oracle", "alg1", "both"}));
    add_caps(radical_cmd, caps);

    auto* atoms_cmd = app.add_subcommand("atoms", "minimal non-identity congruences");
    atoms_cmd->add_option("file", file)->required();
    add_caps(atoms_cmd, caps);

    auto* lattice_cmd = app.add_subcommand("lattice", "congruence lattice");
    lattice_cmd->add_option("file", file)->required();
    lattice_cmd->add_option("--dot", dot_path, "write the Hasse diagram as DOT");
    add_caps(lattice_cmd, caps);

    auto* pairs_cmd = app.add_subcommand("pairs", "pairs digraph condensation");
    pairs_cmd->add_option("file", file)->required();
    pairs_cmd->add_option("--dot", dot_path, "write the condensation as DOT");

    auto* reset_cmd = app.add_subcommand("reset", "reset words");
    reset_cmd->add_option("file", file)->required();
    reset_cmd->add_flag("--exact", exact, "shortest word by subset search");
    reset_cmd->add_flag("--greedy", greedy, "pair-merging word");
    reset_cmd->add_option("--lift", lift_sigma, "lift through the congruence in this file");
    add_caps(reset_cmd, caps);

    auto* generate_cmd = app.add_subcommand("generate", "built-in families");
    std::vector<std::string> gen_args;
    generate_cmd->add_option("family", gen_args,
                             "cerny N | chain N | double_cerny | modcerny1 | modcerny2 | "
                             "quasi3 | random N K SEED")
        ->required()
        ->expected(-1);

    auto* recognizer_cmd =
        app.add_subcommand("recognizer", "acceptor of the words collapsing every class");
    recognizer_cmd->add_option("file", file)->required();
    recognizer_cmd->add_option("--sigma", sigma_path, "congruence file")->required();
    recognizer_cmd->add_option("--out", out_path, "output path (default stdout)");
    add_caps(recognizer_cmd, caps);

    auto* verify_cmd = app.add_subcommand("verify", "property sweeps");
    std::string suite = "all";
    int random_count = 0, states = 7, letters = 3;
    uint64_t seed = 42;
    verify_cmd->add_option("--suite", suite, "galois | radical | classify | all")
        ->check(CLI::IsMember({"galois", "radical", "classify", "all"}));
    verify_cmd->add_option("--random", random_count, "number of random instances");
    verify_cmd->add_option("--states", states, "max states for random instances");
    verify_cmd->add_option("--letters", letters, "max letters for random instances");
    verify_cmd->add_option("--seed", seed, "random seed");
    add_caps(verify_cmd, caps);

    std::vector<const char*> argv;
    argv.push_back("synkit");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        SearchLimits lim = caps.limits();
        if (analyze_cmd->parsed()) {
            print_report(out, analysis_report(analyze(load(file), lim), lim));
            return 0;
        }
        if (classify_cmd->parsed()) {
            Analysis an = analyze(load(file), lim);
            Report r;
            const Classification& c = an.classification;
            r["class"] = to_string(c.category);
            r["strongly_connected"] = c.strongly_connected ? "true" : "false";
            r["semisimple"] = c.semisimple ? (*c.semisimple ? "true" : "false") : "none";
            r["has_min_nontrivial_congruence"] =
                c.has_min_nontrivial_congruence ? "true" : "false";
            if (c.min_congruence && !c.min_congruence->is_universal())
                r["min_congruence"] = format_partition(*c.min_congruence);
            if (c.radical_congruence)
                r["radical_congruence"] = format_partition(*c.radical_congruence);
            if (c.zero_minimal_count)
                r["zero_minimal_count"] = std::to_string(*c.zero_minimal_count);
            print_report(out, r);
            return 0;
        }
        if (radical_cmd->parsed()) {
            Automaton a = load(file);
            TransitionMonoid m = TransitionMonoid::enumerate(a, lim);
            Report r;
            auto fill = [&](const RadicalResult& res, const std::string& prefix) {
                r[prefix + "rad_size"] = std::to_string(res.rad.members.size());
                r[prefix + "rad_minus_syn_size"] = std::to_string(res.rad_minus_syn.size());
                r[prefix + "nilpotency_index"] = std::to_string(res.nilpotency_index);
                auto w = shortest_radical_word(m, res);
                r[prefix + "shortest_radical_word"] = w ? format_word(a, *w) : "none";
            };
            if (method == "oracle") {
                fill(radical_oracle(m), "");
            } else if (method == "alg1") {
                fill(radical_algorithm1(a, m, lim), "");
            } else {
                RadicalResult o = radical_oracle(m);
                RadicalResult g = radical_algorithm1(a, m, lim);
                fill(o, "");
                r["methods_agree"] = o.rad.members == g.rad.members ? "true" : "false";
                if (o.rad.members != g.rad.members) {
                    print_report(out, r);
                    err << "radical methods disagree\n";
                    return 5;
                }
            }
            r["monoid_size"] = std::to_string(m.size());
            r["syn_size"] = std::to_string(syn_ideal(m).members.size());
            print_report(out, r);
            return 0;
        }
        if (atoms_cmd->parsed()) {
            Automaton a = load(file);
            for (const Partition& p : atoms(a)) out << format_partition(p) << "\n";
            return 0;
        }
        if (lattice_cmd->parsed()) {
            Automaton a = load(file);
            CongruenceLattice lat = congruence_lattice(a, lim);
            Report r;
            r["lattice_size"] = std::to_string(lat.elements.size());
            r["lattice_height"] = std::to_string(lattice_height(lat));
            print_report(out, r);
            if (!dot_path.empty()) write_text(dot_path, lattice_dot(lat), out);
            return 0;
        }
        if (pairs_cmd->parsed()) {
            Automaton a = load(file);
            std::string dot = pairs_digraph_dot(a);
            if (!dot_path.empty())
                write_text(dot_path, dot, out);
            else
                out << dot;
            return 0;
        }
        if (reset_cmd->parsed()) {
            Automaton a = load(file);
            Report r;
            if (!lift_sigma.empty()) {
                Partition s = parse_partition_path(lift_sigma, a.n);
                if (!is_congruence(a, s)) throw ParseError("sigma file is not a congruence");
                QuotientResult q = quotient(a, s);
                Word u = shortest_reset_word(q.automaton, lim);
                LiftResult lr = s.min_block_size() <= 2 ? lift_reset_word_small_class(a, s, u)
                                                        : lift_reset_word_general(a, s, u);
                r["method"] = "lift";
                r["quotient_reset_length"] = std::to_string(u.size());
                r["reset_length"] = std::to_string(lr.word.size());
                r["reset_word"] = format_word(a, lr.word);
                r["bound_checked"] = lr.bound_checked ? "true" : "false";
            } else if (greedy && !exact) {
                Word w = greedy_reset_word(a);
                r["method"] = "greedy";
                r["reset_length"] = std::to_string(w.size());
                r["reset_word"] = format_word(a, w);
            } else {
                Word w = shortest_reset_word(a, lim);
                r["method"] = "exact";
                r["reset_length"] = std::to_string(w.size());
                r["reset_word"] = format_word(a, w);
            }
            print_report(out, r);
            return 0;
        }
        if (generate_cmd->parsed()) {
            if (gen_args.empty()) throw ParseError("missing family name");
            const std::string& fam = gen_args[0];
            auto num = [&](size_t i) -> long {
                if (i >= gen_args.size()) throw ParseError("missing parameter for " + fam);
                return std::stol(gen_args[i]);
            };
            Automaton a;
            if (fam == "cerny") a = cerny(static_cast<int>(num(1)));
            else if (fam == "chain") a = chain(static_cast<int>(num(1)));
            else if (fam == "double_cerny") a = double_cerny();
            else if (fam == "modcerny1") a = modcerny1();
            else if (fam == "modcerny2") a = modcerny2();
            else if (fam == "quasi3") a = quasi3();
            else if (fam == "random")
                a = random_automaton(static_cast<int>(num(1)), static_cast<int>(num(2)),
                                     static_cast<uint64_t>(num(3)));
            else throw ParseError("unknown family: " + fam);
            print_aut(out, AutRecord{a, std::nullopt, {}});
            return 0;
        }
        if (recognizer_cmd->parsed()) {
            Automaton a = load(file);
            Partition s = parse_partition_path(sigma_path, a.n);
            GaloisContext ctx(a, lim);
            Recognizer rec = ideal_language_recognizer(ctx, s);
            AutRecord record{rec.automaton, rec.initial, rec.finals};
            write_text(out_path, aut_to_string(record), out);
            return 0;
        }
        if (verify_cmd->parsed()) {
            VerifyOptions opt;
            opt.random_count = random_count;
            opt.max_states = states;
            opt.max_letters = letters;
            opt.seed = seed;
            opt.limits = lim;
            auto results = run_verify(suite, opt);
            bool ok = true;
            for (const auto& r : results) {
                out << r.name << " = " << (r.passed() ? "pass" : "FAIL") << " ("
                    << r.checks << " checks)\n";
                for (const auto& f : r.failures) out << "  failure: " << f << "\n";
                for (const auto& nnote : r.notes) out << "  note: " << nnote << "\n";
                ok = ok && r.passed();
            }
            return ok ? 0 : 5;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotSynchronizing& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace synkit
