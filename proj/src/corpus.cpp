#include "fmzv/corpus.hpp"

#include "fmzv/error.hpp"
#include "fmzv/oracle.hpp"
#include "fmzv/parallel.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace fmzv {

std::vector<std::vector<int>> rooted_tree_level_sequences(int n) {
    std::vector<std::vector<int>> out;
    if (n <= 0) return out;

    // Successor rule: find the last entry above 2, step it down to one
    // more than its new parent, and repeat the prefix pattern after it.
    std::vector<int> level(n);
    for (int i = 0; i < n; ++i) level[i] = i + 1;
    out.push_back(level);
    while (true) {
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (level[i] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (level[i] == level[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
        out.push_back(level);
    }
    return out;
}

namespace {

// Parent of vertex i: the nearest earlier vertex one level up.
std::vector<int> parents_of_level_sequence(const std::vector<int>& level) {
    std::vector<int> parent(level.size(), -1);
    for (std::size_t i = 1; i < level.size(); ++i)
        for (std::size_t j = i; j-- > 0;)
            if (level[j] == level[i] - 1) {
                parent[i] = static_cast<int>(j);
                break;
            }
    return parent;
}

std::string vertex_name(int i) { return "v" + std::to_string(i + 1); }

// Canonical encoding of a colored indexed rooted tree; isomorphic cases
// collapse to the same string.
std::string canonical_encoding(const Tree& t, const IndexMap& k) {
    auto adj = adjacency(t);
    std::function<std::string(const std::string&, const std::string&)> enc =
        [&](const std::string& v, const std::string& from) {
            std::vector<std::string> parts;
            for (const std::string& w : adj[v])
                if (w != from)
                    parts.push_back("[" + std::to_string(k.at(make_edge(v, w))) + enc(w, v));
            std::sort(parts.begin(), parts.end());
            std::string s = vertex(t, v).color == Color::bullet ? "(B" : "(C";
            for (const std::string& part : parts) s += part;
            return s + ")";
        };
    return enc(t.root, "");
}

void enumerate_indices(const Tree& t, int max_weight,
                       const std::function<void(const IndexMap&)>& emit) {
    IndexMap k;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
        if (i == t.edges.size()) {
            emit(k);
            return;
        }
        for (int v = 0; v <= budget; ++v) {
            k[t.edges[i]] = v;
            rec(i + 1, budget - v);
        }
    };
    rec(0, max_weight);
}

} // namespace

std::vector<CorpusCase> enumerate_corpus_cases(int max_edges, int max_weight) {
    std::vector<CorpusCase> cases;
    std::set<std::string> seen;

    for (int n = 2; n <= max_edges + 1; ++n) {
        for (const auto& level : rooted_tree_level_sequences(n)) {
            auto parent = parents_of_level_sequence(level);

            std::vector<EdgeKey> edges;
            std::vector<int> degree(n, 0);
            for (int i = 1; i < n; ++i) {
                edges.push_back(make_edge(vertex_name(i), vertex_name(parent[i])));
                ++degree[i];
                ++degree[parent[i]];
            }

            std::vector<int> interior;
            for (int i = 0; i < n; ++i)
                if (degree[i] >= 2) interior.push_back(i);

            for (int bits = 0; bits < (1 << interior.size()); ++bits) {
                std::vector<Vertex> vertices;
                for (int i = 0; i < n; ++i) vertices.push_back({vertex_name(i), Color::bullet});
                for (std::size_t j = 0; j < interior.size(); ++j)
                    if (bits & (1 << j)) vertices[interior[j]].color = Color::circle;

                Tree t = make_tree(vertices, edges, vertex_name(0));
                enumerate_indices(t, max_weight, [&](const IndexMap& k) {
                    if (!is_essentially_positive(t, k)) return;
                    if (!seen.insert(canonical_encoding(t, k)).second) return;
                    cases.push_back({t, k});
                });
            }
        }
    }
    return cases;
}

CorpusResult run_corpus(const CorpusSpec& spec) {
    if (spec.max_edges < 1 || spec.max_edges > 8)
        throw Error("BadCorpusSpec", "max_edges must be in [1, 8]");
    if (spec.max_weight < 1 || spec.max_weight > 10)
        throw Error("BadCorpusSpec", "max_weight must be in [1, 10]");
    if (spec.primes.empty()) throw Error("BadCorpusSpec", "no primes given");
    for (u64 p : spec.primes) require_odd_prime(p);

    CorpusResult result;
    for (int n = 2; n <= spec.max_edges + 1; ++n) {
        auto shapes = rooted_tree_level_sequences(n);
        result.shapes += static_cast<long long>(shapes.size());
        for (const auto& level : shapes) {
            auto parent = parents_of_level_sequence(level);
            std::vector<int> degree(n, 0);
            for (int i = 1; i < n; ++i) {
                ++degree[i];
                ++degree[parent[i]];
            }
            int interior = static_cast<int>(std::count_if(
                degree.begin(), degree.end(), [](int d) { return d >= 2; }));
            result.colored_trees += 1LL << interior;
        }
    }

    std::vector<CorpusCase> cases = enumerate_corpus_cases(spec.max_edges, spec.max_weight);
    result.cases = static_cast<long long>(cases.size());
    result.checks = result.cases * static_cast<long long>(spec.primes.size());

    const long long total = static_cast<long long>(cases.size());
    std::vector<std::vector<CorpusFailure>> failures(cases.size());

#pragma omp parallel for schedule(dynamic) num_threads(thread_cap())
    for (long long i = 0; i < total; ++i) {
        const CorpusCase& c = cases[static_cast<std::size_t>(i)];
        auto& slot = failures[static_cast<std::size_t>(i)];
        try {
            VerificationReport report = verify_reduction(c.tree, c.k, spec.primes);
            for (const PrimeCheck& row : report.primes)
                if (!row.pass) slot.push_back({c, row.p, row.lhs, row.rhs, ""});
        } catch (const std::exception& e) {
            slot.push_back({c, 0, 0, 0, e.what()});
        }
    }

    for (auto& slot : failures)
        for (auto& f : slot) result.failures.push_back(std::move(f));
    return result;
}

} // namespace fmzv
