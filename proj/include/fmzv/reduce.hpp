#ifndef FMZV_REDUCE_HPP
#define FMZV_REDUCE_HPP

#include "fmzv/tree.hpp"
#include "fmzv/word.hpp"

#include <optional>
#include <string>

namespace fmzv {

// Output of the reduction: a sign and an integer combination of words,
// every monomial of which is empty or starts with y, all coefficients
// positive. The tree's value equals sign times the combination's value.
struct SignedReduction {
    int sign = 1;
    LinComb comb;
};

// First vertex of degree >= 3 on the walk from the root; nullopt when the
// tree is a path. Requires the root to be a terminal (RootNotTerminal).
std::optional<std::string> nearest_branch_point(const Tree& t);

// Total index on the edges strictly below the nearest branch point
// (union of its paths to the leaves on the far side from the root);
// 0 when the tree is a path.
int branch_statistic(const Tree& t, const IndexMap& k);

// Structural recursion on a harvestable, essentially positive pair:
//   - a bullet chain v_1 - ... - v_{r+1} = root maps to the single word
//     z_{k_1}...z_{k_r}, indices numbered from the leaf; a single vertex
//     maps to the empty word;
//   - otherwise, with v' the nearest branch point (a circle), e' its
//     root-side edge of index k' and k_1..k_r the indices on the bullet
//     chain from v' up to the root: shuffle the reductions of the child
//     pairs (each branch subtree re-rooted under a fresh bullet via its
//     branch edge), then concatenate x^k' and z_{k_1}...z_{k_r}.
// Errors: NotHarvestable, NotEssentiallyPositive.
LinComb reduce_harvestable(const Tree& t, const IndexMap& k);

// harvestable_form followed by reduce_harvestable. For every odd prime p
// the evaluated tree equals sign times the evaluated combination mod p.
// Errors: NotEssentiallyPositive.
SignedReduction reduce(const Tree& t, const IndexMap& k);

} // namespace fmzv

#endif // FMZV_REDUCE_HPP
