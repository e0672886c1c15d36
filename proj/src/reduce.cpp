#include "fmzv/reduce.hpp"

#include "fmzv/error.hpp"
#include "fmzv/transforms.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace fmzv {

namespace {

void require_root_terminal(const Tree& t) {
    if (t.vertices.size() > 1 && degrees(t)[t.root] != 1)
        throw Error("RootNotTerminal", "root " + t.root + " has degree > 1");
}

// Walk from the root away from it while degrees stay <= 2.
std::optional<std::string> branch_walk(const Tree& t) {
    if (t.vertices.size() <= 2) return std::nullopt;
    auto adj = adjacency(t);
    auto deg = degrees(t);
    std::string prev = t.root;
    std::string cur = adj[t.root].front();  // root is a terminal
    while (true) {
        if (deg[cur] >= 3) return cur;
        if (deg[cur] == 1) return std::nullopt;
        for (const std::string& nb : adj[cur])
            if (nb != prev) {
                prev = cur;
                cur = nb;
                break;
            }
    }
}

// Vertices of the component of T minus v' containing `entry`.
std::set<std::string> component_from(const Tree& t, const std::string& banned,
                                     const std::string& entry) {
    auto adj = adjacency(t);
    std::set<std::string> seen{entry};
    std::deque<std::string> queue{entry};
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        for (const std::string& w : adj[v])
            if (w != banned && seen.insert(w).second) queue.push_back(w);
    }
    return seen;
}

LinComb reduce_rec(const Tree& t, const IndexMap& k);

// Child pair: the branch subtree through (v', child), re-rooted under a
// fresh bullet vertex attached to the child by an edge carrying the
// branch index.
LinComb reduce_branch(const Tree& t, const IndexMap& k, const std::string& v,
                      const std::string& child) {
    auto members = component_from(t, v, child);

    std::vector<Vertex> vertices;
    for (const Vertex& w : t.vertices)
        if (members.count(w.id)) vertices.push_back(w);

    std::vector<EdgeKey> edges;
    IndexMap k2;
    for (const EdgeKey& e : t.edges)
        if (members.count(e.first) && members.count(e.second)) {
            edges.push_back(e);
            k2[e] = k.at(e);
        }

    std::string new_root = child + "#r";
    while (members.count(new_root)) new_root += "r";
    vertices.push_back({new_root, Color::bullet});
    EdgeKey lift = make_edge(new_root, child);
    edges.push_back(lift);
    k2[lift] = k.at(make_edge(v, child));

    Tree sub = make_tree(std::move(vertices), std::move(edges), new_root);
    return reduce_rec(sub, k2);
}

LinComb reduce_rec(const Tree& t, const IndexMap& k) {
    assert(is_harvestable(t, k));
    assert(is_essentially_positive(t, k));

    if (t.vertices.size() == 1) return LinComb::unit();

    auto branch = branch_walk(t);
    if (!branch) {
        // Bullet chain; collect indices walking root -> leaf, number from
        // the leaf.
        auto adj = adjacency(t);
        ZTuple ks;
        std::string prev;
        std::string cur = t.root;
        while (true) {
            std::string next;
            for (const std::string& nb : adj[cur])
                if (nb != prev) {
                    next = nb;
                    break;
                }
            if (next.empty()) break;
            ks.push_back(k.at(make_edge(cur, next)));
            prev = cur;
            cur = next;
        }
        std::reverse(ks.begin(), ks.end());
        return LinComb::single(z_word(ks));
    }

    const std::string v = *branch;
    assert(vertex(t, v).color == Color::circle);

    // Root-side path from v': first edge is e', the rest is the bullet
    // chain read off toward the root.
    std::vector<EdgeKey> up = path(t, v, t.root);
    int k_prime = k.at(up.front());
    ZTuple chain;
    for (std::size_t i = 1; i < up.size(); ++i) chain.push_back(k.at(up[i]));

    std::string parent_side = up.front().first == v ? up.front().second : up.front().first;
    auto adj_map = adjacency(t);
    std::vector<std::string> children;
    for (const std::string& nb : adj_map[v])
        if (nb != parent_side) children.push_back(nb);

    // Shuffle is commutative; order branches by smallest subtree vertex id
    // for a reproducible recursion trace.
    std::sort(children.begin(), children.end(),
              [&](const std::string& a, const std::string& b) {
                  return *component_from(t, v, a).begin() < *component_from(t, v, b).begin();
              });

    LinComb acc = LinComb::unit();
    for (const std::string& c : children) acc = shuffle_lincomb(acc, reduce_branch(t, k, v, c));
    acc = concat_right(acc, Word::xs(k_prime));
    return concat_right(acc, z_word(chain));
}

} // namespace

std::optional<std::string> nearest_branch_point(const Tree& t) {
    validate(t);
    require_root_terminal(t);
    return branch_walk(t);
}

int branch_statistic(const Tree& t, const IndexMap& k) {
    validate(t);
    validate_index(t, k);
    require_root_terminal(t);
    auto branch = branch_walk(t);
    if (!branch) return 0;

    // All edges below the branch point lie on some path from it to a leaf.
    EdgeKey up = path(t, *branch, t.root).front();
    std::string toward_root = up.first == *branch ? up.second : up.first;
    int sum = 0;
    auto adj_map = adjacency(t);
    for (const std::string& nb : adj_map[*branch]) {
        if (nb == toward_root) continue;
        auto members = component_from(t, *branch, nb);
        sum += k.at(make_edge(*branch, nb));
        for (const EdgeKey& e : t.edges)
            if (members.count(e.first) && members.count(e.second)) sum += k.at(e);
    }
    return sum;
}

LinComb reduce_harvestable(const Tree& t, const IndexMap& k) {
    validate(t);
    validate_index(t, k);
    if (!is_harvestable(t, k)) throw Error("NotHarvestable", "pair fails H1, H2 or H3");
    if (!is_essentially_positive(t, k))
        throw Error("NotEssentiallyPositive", "some bullet pair has path index sum 0");
    return reduce_rec(t, k);
}

SignedReduction reduce(const Tree& t, const IndexMap& k) {
    SignedTreePair h = harvestable_form(t, k);  // checks essential positivity
    return {h.sign, reduce_rec(h.tree, h.k)};
}

} // namespace fmzv
