#include "fmzv/transforms.hpp"

#include "fmzv/error.hpp"

#include <algorithm>
#include <cassert>

namespace fmzv {

namespace {

// Rebuild a tree with `absorbed` merged into `survivor` and edge e gone.
TreeIndexPair contract_edge(const Tree& t, const IndexMap& k, const EdgeKey& e,
                            const std::string& survivor, const std::string& absorbed,
                            Color merged_color) {
    std::vector<Vertex> vertices;
    for (const Vertex& v : t.vertices) {
        if (v.id == absorbed) continue;
        if (v.id == survivor)
            vertices.push_back({survivor, merged_color});
        else
            vertices.push_back(v);
    }

    std::vector<EdgeKey> edges;
    IndexMap k2;
    for (const EdgeKey& old : t.edges) {
        if (old == e) continue;
        std::string a = old.first == absorbed ? survivor : old.first;
        std::string b = old.second == absorbed ? survivor : old.second;
        EdgeKey ne = make_edge(a, b);
        edges.push_back(ne);
        k2[ne] = k.at(old);
    }

    std::string root = t.root == absorbed ? survivor : t.root;
    return {make_tree(std::move(vertices), std::move(edges), std::move(root)), std::move(k2)};
}

} // namespace

TreeIndexPair contract_zero_circle_edge(const Tree& t, const IndexMap& k, const EdgeKey& e) {
    validate(t);
    validate_index(t, k);
    if (std::find(t.edges.begin(), t.edges.end(), e) == t.edges.end())
        throw Error("UnknownEdge", "edge " + edge_label(e));
    if (k.at(e) != 0)
        throw Error("NonzeroIndex", "edge " + edge_label(e) + " has k = " + std::to_string(k.at(e)));

    const Vertex& a = vertex(t, e.first);
    const Vertex& b = vertex(t, e.second);
    if (a.color != Color::circle && b.color != Color::circle)
        throw Error("NoCircleEndpoint", "edge " + edge_label(e));

    // At most one endpoint is bullet; it keeps its id and color.
    std::string survivor, absorbed;
    if (a.color == Color::bullet) {
        survivor = a.id;
        absorbed = b.id;
    } else if (b.color == Color::bullet) {
        survivor = b.id;
        absorbed = a.id;
    } else {
        survivor = std::min(a.id, b.id);
        absorbed = std::max(a.id, b.id);
    }
    Color merged = (a.color == Color::bullet || b.color == Color::bullet) ? Color::bullet
                                                                          : Color::circle;
    return contract_edge(t, k, e, survivor, absorbed, merged);
}

TreeIndexPair contract_degree2_circle(const Tree& t, const IndexMap& k, const std::string& v) {
    validate(t);
    validate_index(t, k);
    const Vertex& vx = vertex(t, v);
    auto deg = degrees(t);
    if (vx.color != Color::circle || deg[v] != 2)
        throw Error("NotDegreeTwoCircle", "vertex " + v);
    if (t.root == v) throw Error("RootContraction", "vertex " + v + " is the root");

    auto nbrs = adjacency(t)[v];
    assert(nbrs.size() == 2);
    int merged_k = k.at(make_edge(v, nbrs[0])) + k.at(make_edge(v, nbrs[1]));

    std::vector<Vertex> vertices;
    for (const Vertex& w : t.vertices)
        if (w.id != v) vertices.push_back(w);

    std::vector<EdgeKey> edges;
    IndexMap k2;
    for (const EdgeKey& old : t.edges) {
        if (old.first == v || old.second == v) continue;
        edges.push_back(old);
        k2[old] = k.at(old);
    }
    EdgeKey joined = make_edge(nbrs[0], nbrs[1]);
    edges.push_back(joined);
    k2[joined] = merged_k;

    return {make_tree(std::move(vertices), std::move(edges), t.root), std::move(k2)};
}

TreeIndexPair split_bullet_branch_vertex(const Tree& t, const IndexMap& k, const std::string& v) {
    validate(t);
    validate_index(t, k);
    const Vertex& vx = vertex(t, v);
    auto deg = degrees(t);
    if (vx.color != Color::bullet || deg[v] < 3) throw Error("NotBulletBranch", "vertex " + v);
    if (t.root == v) throw Error("RootSplit", "vertex " + v + " is the root");

    std::string par = parents(t).at(v);
    std::string hub = fresh_vertex_id(t, v + "#c");

    std::vector<Vertex> vertices = t.vertices;
    vertices.push_back({hub, Color::circle});

    std::vector<EdgeKey> edges;
    IndexMap k2;
    for (const EdgeKey& old : t.edges) {
        bool child_edge = (old.first == v || old.second == v) && old != make_edge(v, par);
        if (!child_edge) {
            edges.push_back(old);
            k2[old] = k.at(old);
            continue;
        }
        std::string other = old.first == v ? old.second : old.first;
        EdgeKey ne = make_edge(hub, other);
        edges.push_back(ne);
        k2[ne] = k.at(old);
    }
    EdgeKey zero = make_edge(v, hub);
    edges.push_back(zero);
    k2[zero] = 0;

    return {make_tree(std::move(vertices), std::move(edges), t.root), std::move(k2)};
}

std::pair<Tree, int> move_root(const Tree& t, const IndexMap& k, const std::string& new_root) {
    validate(t);
    validate_index(t, k);
    if (!has_vertex(t, new_root)) throw Error("UnknownVertex", "vertex " + new_root);
    int sign = path_index_sum(t, k, t.root, new_root) % 2 == 0 ? 1 : -1;
    Tree moved = t;
    moved.root = new_root;
    return {std::move(moved), sign};
}

std::string fresh_vertex_id(const Tree& t, const std::string& base) {
    if (!has_vertex(t, base)) return base;
    for (int n = 2;; ++n) {
        std::string id = base + std::to_string(n);
        if (!has_vertex(t, id)) return id;
    }
}

namespace {

// Zero-circle-edge and degree-2-circle contractions to a joint fixpoint.
// Each pass removes one edge, so this terminates.
void contract_fixpoint(Tree& t, IndexMap& k) {
    for (bool changed = true; changed;) {
        changed = false;
        for (const EdgeKey& e : t.edges) {
            bool circle_end = vertex(t, e.first).color == Color::circle ||
                              vertex(t, e.second).color == Color::circle;
            if (k.at(e) == 0 && circle_end) {
                auto [t2, k2] = contract_zero_circle_edge(t, k, e);
                t = std::move(t2);
                k = std::move(k2);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        auto deg = degrees(t);
        for (const Vertex& v : t.vertices) {
            if (v.color == Color::circle && deg[v.id] == 2 && v.id != t.root) {
                auto [t2, k2] = contract_degree2_circle(t, k, v.id);
                t = std::move(t2);
                k = std::move(k2);
                changed = true;
                break;
            }
        }
    }
}

} // namespace

SignedTreePair harvestable_form(const Tree& t, const IndexMap& k) {
    validate(t);
    validate_index(t, k);
    if (!is_essentially_positive(t, k))
        throw Error("NotEssentiallyPositive", "some bullet pair has path index sum 0");

    Tree cur = t;
    IndexMap ck = k;
    int sign = 1;

    contract_fixpoint(cur, ck);

    // H1: root must be a terminal. Already-harvestable inputs pass through
    // unchanged with sign +1.
    auto deg = degrees(cur);
    if (cur.vertices.size() > 1 && deg[cur.root] != 1) {
        std::string target = terminals(cur).front();
        auto [moved, s] = move_root(cur, ck, target);
        cur = std::move(moved);
        sign = s;
        // The old root may have been a degree-2 circle, shielded from
        // contraction while it was the root.
        contract_fixpoint(cur, ck);
    }

    // H2 for bullets: split branch vertices, smallest id first. Each split
    // turns one degree->=3 bullet into a degree-2 one.
    for (bool changed = true; changed;) {
        changed = false;
        auto d = degrees(cur);
        for (const Vertex& v : cur.vertices) {
            if (v.color == Color::bullet && d[v.id] >= 3) {
                auto [t2, k2] = split_bullet_branch_vertex(cur, ck, v.id);
                cur = std::move(t2);
                ck = std::move(k2);
                changed = true;
                break;
            }
        }
    }

    assert(is_harvestable(cur, ck));
    assert(is_essentially_positive(cur, ck));
    return {std::move(cur), std::move(ck), sign};
}

} // namespace fmzv
