#ifndef FMZV_TRANSFORMS_HPP
#define FMZV_TRANSFORMS_HPP

#include "fmzv/tree.hpp"

#include <string>
#include <utility>

namespace fmzv {

// Tree plus index with an attached sign in {+1, -1}; the value of the
// original pair equals sign times the value of this one.
struct SignedTreePair {
    Tree tree;
    IndexMap k;
    int sign = 1;
};

struct TreeIndexPair {
    Tree tree;
    IndexMap k;
};

// Contract an index-0 edge with at least one circle endpoint. The two
// endpoints merge; the merged vertex is bullet iff either endpoint was,
// and keeps the bullet endpoint's id (the lexicographically smaller id
// when both endpoints are circle). Preserves the evaluated value.
// Errors: UnknownEdge, NonzeroIndex, NoCircleEndpoint.
TreeIndexPair contract_zero_circle_edge(const Tree& t, const IndexMap& k, const EdgeKey& e);

// Remove a non-root circle vertex of degree exactly 2, joining its two
// neighbors by a single edge carrying the sum of the two indices.
// Preserves the evaluated value.
// Errors: UnknownVertex, NotDegreeTwoCircle, RootContraction.
TreeIndexPair contract_degree2_circle(const Tree& t, const IndexMap& k, const std::string& v);

// Inverse of contract_zero_circle_edge at a non-root bullet vertex of
// degree >= 3: v keeps only its parent edge; a fresh circle vertex takes
// all of v's child edges and hangs below v on a new index-0 edge.
// Errors: UnknownVertex, NotBulletBranch, RootSplit.
TreeIndexPair split_bullet_branch_vertex(const Tree& t, const IndexMap& k, const std::string& v);

// Re-root at new_root; the value picks up the sign
// (-1)^(path index sum from the old root to new_root).
// Errors: UnknownVertex.
std::pair<Tree, int> move_root(const Tree& t, const IndexMap& k, const std::string& new_root);

// Deterministic normalization of an essentially positive pair to a
// harvestable one of equal value up to the returned sign:
//   (1) contract index-0 circle edges and non-root degree-2 circle
//       vertices to a joint fixpoint;
//   (2) if the root is not a terminal, move it to the lexicographically
//       smallest terminal (recording the sign) and contract again --
//       the old root may have been an uncontractible degree-2 circle;
//   (3) split every bullet vertex of degree >= 3, in id order.
// Errors: NotEssentiallyPositive.
SignedTreePair harvestable_form(const Tree& t, const IndexMap& k);

// base, then base2, base3, ... until the id is unused in t.
std::string fresh_vertex_id(const Tree& t, const std::string& base);

} // namespace fmzv

#endif // FMZV_TRANSFORMS_HPP
