#ifndef FMZV_CORPUS_HPP
#define FMZV_CORPUS_HPP

#include "fmzv/modular.hpp"
#include "fmzv/tree.hpp"

#include <string>
#include <vector>

namespace fmzv {

// Desk-scale sweep bounds; run_corpus rejects anything larger.
struct CorpusSpec {
    int max_edges = 5;
    int max_weight = 6;
    std::vector<u64> primes = {5, 7, 11, 13};
};

struct CorpusCase {
    Tree tree;
    IndexMap k;
};

struct CorpusFailure {
    CorpusCase c;
    u64 p = 0;
    u64 lhs = 0;
    u64 rhs = 0;
    std::string note;  // nonempty when the case failed by throwing
};

struct CorpusResult {
    long long shapes = 0;         // rooted tree shapes enumerated
    long long colored_trees = 0;  // shapes times valid colorings
    long long cases = 0;          // essentially positive (tree, index) pairs, deduplicated
    long long checks = 0;         // cases times primes
    std::vector<CorpusFailure> failures;

    bool pass() const { return failures.empty(); }
};

// All level sequences of rooted trees with n vertices, one per
// isomorphism class (successor rule on the canonical sequence).
std::vector<std::vector<int>> rooted_tree_level_sequences(int n);

// Every 2-colored rooted tree with 2..max_edges+1 vertices (terminals
// bullet, interior vertices either color) paired with every essentially
// positive index of total weight <= max_weight, deduplicated by a
// canonical rooted encoding.
std::vector<CorpusCase> enumerate_corpus_cases(int max_edges, int max_weight);

// verify_reduction over the whole enumeration, fanned out across worker
// threads; a failure would falsify the implementation, not the theory.
CorpusResult run_corpus(const CorpusSpec& spec);

} // namespace fmzv

#endif // FMZV_CORPUS_HPP
