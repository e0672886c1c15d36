// Command-line front end: reduce tree files to signed combinations of
// z-words, evaluate and verify them modulo sampled primes, and sweep the
// small-tree corpus. Exit codes: 0 success, 2 input/validation error,
// 3 verification failure.

#include "fmzv/corpus.hpp"
#include "fmzv/error.hpp"
#include "fmzv/json_io.hpp"
#include "fmzv/oracle.hpp"
#include "fmzv/reduce.hpp"
#include "fmzv/word.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace fmzv;

std::vector<u64> parse_primes(const std::string& csv) {
    std::vector<u64> primes;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string item = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (item.empty()) throw Error("BadPrimes", "empty entry in '" + csv + "'");
        u64 p = 0;
        try {
            p = std::stoull(item);
        } catch (const std::exception&) {
            throw Error("BadPrimes", "'" + item + "' is not a number");
        }
        require_odd_prime(p);
        primes.push_back(p);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return primes;
}

// Comma-separated integers; the empty string is the empty tuple.
std::vector<int> parse_tuple(const std::string& csv, int min_entry) {
    std::vector<int> t;
    if (csv.empty()) return t;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string item = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        int v = 0;
        try {
            v = std::stoi(item);
        } catch (const std::exception&) {
            throw Error("BadIndex", "'" + item + "' is not an integer");
        }
        if (v < min_entry)
            throw Error("BadIndex", "entry " + item + " below minimum " + std::to_string(min_entry));
        t.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return t;
}

json residues_json(const std::vector<u64>& primes, const std::function<u64(u64)>& eval) {
    json out = json::object();
    for (u64 p : primes) out[std::to_string(p)] = eval(p);
    return out;
}

void print_report(const VerificationReport& report, bool pretty) {
    if (!pretty) {
        std::cout << report_to_json(report).dump() << "\n";
        return;
    }
    for (const PrimeCheck& c : report.primes)
        std::cout << "p=" << c.p << ": lhs=" << c.lhs << " rhs=" << c.rhs << " "
                  << (c.pass ? "ok" : "FAIL") << "\n";
    std::cout << (report.pass ? "pass" : "FAIL") << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"finite multiple zeta values on 2-colored rooted trees"};
    app.require_subcommand(1);

    std::string tree_file;
    std::string primes_csv = "5,7,11,13";
    std::string tuple_a, tuple_b;
    int k_last = 0;
    int max_edges = 5;
    int max_weight = 6;
    bool pretty = false;

    auto add_common = [&](CLI::App* cmd, bool with_primes) {
        cmd->add_flag("--pretty", pretty, "human-readable output");
        cmd->add_flag("--json", "machine-readable output (default)");
        if (with_primes)
            cmd->add_option("--primes", primes_csv, "comma-separated odd primes")
                ->capture_default_str();
    };

    CLI::App* cmd_reduce = app.add_subcommand("reduce", "reduce a tree file to z-words");
    cmd_reduce->add_option("tree", tree_file, "tree JSON file")->required();
    add_common(cmd_reduce, false);

    CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate a tree file modulo each prime");
    cmd_eval->add_option("tree", tree_file, "tree JSON file")->required();
    add_common(cmd_eval, true);

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "check the reduction of a tree file against brute force");
    cmd_verify->add_option("tree", tree_file, "tree JSON file")->required();
    add_common(cmd_verify, true);

    CLI::App* cmd_shuffle = app.add_subcommand("shuffle", "shuffle product of two z-word tuples");
    cmd_shuffle->add_option("t", tuple_a, "tuple, e.g. 2,1 (empty string for the unit)")
        ->required();
    cmd_shuffle->add_option("u", tuple_b, "tuple")->required();
    add_common(cmd_shuffle, false);

    CLI::App* cmd_shrel =
        app.add_subcommand("shuffle-relation", "check the shuffle relation for two tuples");
    cmd_shrel->add_option("t", tuple_a, "nonempty tuple")->required();
    cmd_shrel->add_option("u", tuple_b, "nonempty tuple")->required();
    add_common(cmd_shrel, true);

    CLI::App* cmd_mt = app.add_subcommand("mt-eval", "evaluate a Mordell-Tornheim sum");
    cmd_mt->add_option("ks", tuple_a, "tuple of exponents, e.g. 1,1")->required();
    cmd_mt->add_option("klast", k_last, "exponent of the summed variable")->required();
    add_common(cmd_mt, true);

    CLI::App* cmd_corpus = app.add_subcommand("corpus", "verify the reduction over all small trees");
    cmd_corpus->add_option("--max-edges", max_edges, "edge bound (<= 8)")->capture_default_str();
    cmd_corpus->add_option("--max-weight", max_weight, "total index bound (<= 10)")
        ->capture_default_str();
    add_common(cmd_corpus, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (cmd_reduce->parsed()) {
        auto [tree, k] = load_tree_file(tree_file);
        SignedReduction red = reduce(tree, k);
        if (pretty)
            std::cout << (red.sign < 0 ? "-" : "+") << " [ " << pretty_zform(red.comb) << " ]\n";
        else
            std::cout << reduction_to_json(red).dump() << "\n";
        return 0;
    }

    if (cmd_eval->parsed()) {
        auto [tree, k] = load_tree_file(tree_file);
        std::vector<u64> primes = parse_primes(primes_csv);
        json out = residues_json(
            primes, [&](u64 p) { return eval_tree_mod_p(tree, k, p).residue; });
        if (pretty)
            for (u64 p : primes)
                std::cout << "p=" << p << ": " << out[std::to_string(p)].get<u64>() << "\n";
        else
            std::cout << out.dump() << "\n";
        return 0;
    }

    if (cmd_verify->parsed()) {
        auto [tree, k] = load_tree_file(tree_file);
        VerificationReport report = verify_reduction(tree, k, parse_primes(primes_csv));
        print_report(report, pretty);
        return report.pass ? 0 : 3;
    }

    if (cmd_shuffle->parsed()) {
        ZTuple t = parse_tuple(tuple_a, 1);
        ZTuple u = parse_tuple(tuple_b, 1);
        LinComb sh = shuffle(z_word(t), z_word(u));
        // Default output is the two readable renderings; --json gives the
        // structured form.
        if (cmd_shuffle->count("--json")) {
            json out;
            out["terms"] = lincomb_words_json(sh);
            out["zform"] = lincomb_zform_json(sh);
            std::cout << out.dump() << "\n";
        } else {
            std::cout << pretty_words(sh) << "\n" << pretty_zform(sh) << "\n";
        }
        return 0;
    }

    if (cmd_shrel->parsed()) {
        ZTuple t = parse_tuple(tuple_a, 1);
        ZTuple u = parse_tuple(tuple_b, 1);
        VerificationReport report = verify_shuffle_relation(t, u, parse_primes(primes_csv));
        print_report(report, pretty);
        return report.pass ? 0 : 3;
    }

    if (cmd_mt->parsed()) {
        std::vector<int> ks = parse_tuple(tuple_a, 0);
        std::vector<u64> primes = parse_primes(primes_csv);
        json out = residues_json(
            primes, [&](u64 p) { return eval_mt_mod_p(ks, k_last, p).residue; });
        if (pretty)
            for (u64 p : primes)
                std::cout << "p=" << p << ": " << out[std::to_string(p)].get<u64>() << "\n";
        else
            std::cout << out.dump() << "\n";
        return 0;
    }

    if (cmd_corpus->parsed()) {
        CorpusSpec spec{max_edges, max_weight, parse_primes(primes_csv)};
        CorpusResult result = run_corpus(spec);
        if (pretty) {
            std::cout << "shapes:        " << result.shapes << "\n"
                      << "colored trees: " << result.colored_trees << "\n"
                      << "cases:         " << result.cases << "\n"
                      << "checks:        " << result.checks << "\n"
                      << (result.pass() ? "pass" : "FAIL") << "\n";
        } else {
            json out;
            out["shapes"] = result.shapes;
            out["coloredTrees"] = result.colored_trees;
            out["cases"] = result.cases;
            out["checks"] = result.checks;
            out["pass"] = result.pass();
            out["failures"] = json::array();
            for (const CorpusFailure& f : result.failures) {
                json jf;
                jf["tree"] = tree_to_json(f.c.tree, f.c.k);
                jf["p"] = f.p;
                jf["lhs"] = f.lhs;
                jf["rhs"] = f.rhs;
                if (!f.note.empty()) jf["note"] = f.note;
                out["failures"].push_back(jf);
            }
            std::cout << out.dump() << "\n";
        }
        for (const CorpusFailure& f : result.failures)
            std::cerr << "counterexample: p=" << f.p << " lhs=" << f.lhs << " rhs=" << f.rhs
                      << " tree=" << tree_to_json(f.c.tree, f.c.k).dump()
                      << (f.note.empty() ? "" : " note=" + f.note) << "\n";
        return result.pass() ? 0 : 3;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fmzv::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
