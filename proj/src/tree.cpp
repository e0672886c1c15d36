#include "fmzv/tree.hpp"

#include "fmzv/error.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace fmzv {

const char* to_string(Color c) { return c == Color::bullet ? "bullet" : "circle"; }

EdgeKey make_edge(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

std::string edge_label(const EdgeKey& e) { return e.first + "-" + e.second; }

Tree make_tree(std::vector<Vertex> vertices, std::vector<EdgeKey> edges, std::string root) {
    std::sort(vertices.begin(), vertices.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    std::sort(edges.begin(), edges.end());
    return Tree{std::move(vertices), std::move(edges), std::move(root)};
}

void validate(const Tree& t) {
    if (t.vertices.empty()) throw Error("NotATree", "empty vertex set");

    std::set<std::string> ids;
    for (const Vertex& v : t.vertices) {
        if (v.id.empty()) throw Error("BadVertexId", "empty vertex id");
        if (!ids.insert(v.id).second) throw Error("DuplicateVertexId", "vertex " + v.id);
    }
    if (!ids.count(t.root)) throw Error("RootMissing", "root '" + t.root + "' is not a vertex");

    if (t.edges.size() != t.vertices.size() - 1)
        throw Error("NotATree", "expected " + std::to_string(t.vertices.size() - 1) +
                                    " edges, got " + std::to_string(t.edges.size()));

    std::set<EdgeKey> seen;
    for (const EdgeKey& e : t.edges) {
        if (e.first == e.second) throw Error("NotATree", "self-loop at " + e.first);
        if (!ids.count(e.first)) throw Error("UnknownVertex", "edge endpoint " + e.first);
        if (!ids.count(e.second)) throw Error("UnknownVertex", "edge endpoint " + e.second);
        if (!seen.insert(e).second) throw Error("NotATree", "duplicate edge " + edge_label(e));
    }

    // #E = #V - 1 plus connectivity implies acyclic.
    auto adj = adjacency(t);
    std::set<std::string> reached{t.root};
    std::deque<std::string> queue{t.root};
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        for (const std::string& w : adj[v])
            if (reached.insert(w).second) queue.push_back(w);
    }
    if (reached.size() != t.vertices.size()) throw Error("NotATree", "graph is disconnected");

    for (const std::string& term : terminals(t))
        if (!is_bullet(t, term)) throw Error("CircleTerminal", "vertex " + term);
}

void validate_index(const Tree& t, const IndexMap& k) {
    if (k.size() != t.edges.size())
        throw Error("BadIndex", "index domain has " + std::to_string(k.size()) + " edges, tree has " +
                                    std::to_string(t.edges.size()));
    for (const EdgeKey& e : t.edges) {
        auto it = k.find(e);
        if (it == k.end()) throw Error("BadIndex", "no index for edge " + edge_label(e));
        if (it->second < 0) throw Error("BadIndex", "negative index on edge " + edge_label(e));
    }
}

bool has_vertex(const Tree& t, const std::string& id) {
    for (const Vertex& v : t.vertices)
        if (v.id == id) return true;
    return false;
}

const Vertex& vertex(const Tree& t, const std::string& id) {
    for (const Vertex& v : t.vertices)
        if (v.id == id) return v;
    throw Error("UnknownVertex", "vertex " + id);
}

bool is_bullet(const Tree& t, const std::string& id) {
    return vertex(t, id).color == Color::bullet;
}

std::map<std::string, std::vector<std::string>> adjacency(const Tree& t) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const Vertex& v : t.vertices) adj[v.id];
    for (const EdgeKey& e : t.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    for (auto& [id, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

std::map<std::string, int> degrees(const Tree& t) {
    std::map<std::string, int> deg;
    for (const Vertex& v : t.vertices) deg[v.id] = 0;
    for (const EdgeKey& e : t.edges) {
        ++deg[e.first];
        ++deg[e.second];
    }
    return deg;
}

std::vector<std::string> terminals(const Tree& t) {
    if (t.vertices.size() == 1) return {t.vertices.front().id};
    std::vector<std::string> out;
    for (const auto& [id, d] : degrees(t))
        if (d == 1) out.push_back(id);
    return out;  // degrees() map iterates sorted
}

std::vector<std::string> bullet_ids(const Tree& t) {
    std::vector<std::string> out;
    for (const Vertex& v : t.vertices)
        if (v.color == Color::bullet) out.push_back(v.id);
    return out;
}

std::map<std::string, std::string> parents(const Tree& t) {
    auto adj = adjacency(t);
    std::map<std::string, std::string> parent;
    std::deque<std::string> queue{t.root};
    std::set<std::string> reached{t.root};
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        for (const std::string& w : adj[v])
            if (reached.insert(w).second) {
                parent[w] = v;
                queue.push_back(w);
            }
    }
    return parent;
}

std::vector<std::string> bullet_descendants(const Tree& t, const EdgeKey& e) {
    if (std::find(t.edges.begin(), t.edges.end(), e) == t.edges.end())
        throw Error("UnknownEdge", "edge " + edge_label(e));

    // Walk from e.first without crossing e; whichever side misses the root
    // is the far side.
    auto adj = adjacency(t);
    std::set<std::string> side{e.first};
    std::deque<std::string> queue{e.first};
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        for (const std::string& w : adj[v]) {
            if (make_edge(v, w) == e) continue;
            if (side.insert(w).second) queue.push_back(w);
        }
    }

    bool first_is_far = !side.count(t.root);
    std::vector<std::string> out;
    for (const Vertex& v : t.vertices) {
        if (v.color != Color::bullet) continue;
        bool on_first = side.count(v.id) != 0;
        if (on_first == first_is_far) out.push_back(v.id);
    }
    return out;
}

std::vector<EdgeCut> edge_cuts(const Tree& t) {
    std::vector<EdgeCut> cuts;
    cuts.reserve(t.edges.size());
    for (const EdgeKey& e : t.edges) cuts.push_back({e, bullet_descendants(t, e)});
    return cuts;
}

std::vector<EdgeKey> path(const Tree& t, const std::string& v, const std::string& w) {
    if (!has_vertex(t, v)) throw Error("UnknownVertex", "vertex " + v);
    if (!has_vertex(t, w)) throw Error("UnknownVertex", "vertex " + w);
    if (v == w) return {};

    auto adj = adjacency(t);
    std::map<std::string, std::string> prev;
    std::deque<std::string> queue{v};
    std::set<std::string> reached{v};
    while (!queue.empty() && !reached.count(w)) {
        std::string cur = queue.front();
        queue.pop_front();
        for (const std::string& nb : adj[cur])
            if (reached.insert(nb).second) {
                prev[nb] = cur;
                queue.push_back(nb);
            }
    }

    std::vector<EdgeKey> edges;
    for (std::string cur = w; cur != v; cur = prev.at(cur)) edges.push_back(make_edge(prev.at(cur), cur));
    std::reverse(edges.begin(), edges.end());
    return edges;
}

int path_index_sum(const Tree& t, const IndexMap& k, const std::string& v, const std::string& w) {
    int sum = 0;
    for (const EdgeKey& e : path(t, v, w)) sum += k.at(e);
    return sum;
}

bool is_essentially_positive(const Tree& t, const IndexMap& k) {
    std::vector<std::string> bullets = bullet_ids(t);
    for (std::size_t i = 0; i < bullets.size(); ++i)
        for (std::size_t j = i + 1; j < bullets.size(); ++j)
            if (path_index_sum(t, k, bullets[i], bullets[j]) < 1) return false;
    return true;
}

bool is_harvestable(const Tree& t, const IndexMap& k) {
    auto deg = degrees(t);

    // H1: the root is a terminal.
    if (t.vertices.size() > 1 && deg[t.root] != 1) return false;

    // H2: bullet degrees <= 2, circle degrees >= 3.
    for (const Vertex& v : t.vertices) {
        if (v.color == Color::bullet && deg[v.id] > 2) return false;
        if (v.color == Color::circle && deg[v.id] < 3) return false;
    }

    // H3: positive index on every edge from a branched circle vertex down
    // to a bullet child.
    auto parent = parents(t);
    for (const auto& [child, par] : parent) {
        const Vertex& p = vertex(t, par);
        if (p.color != Color::circle || deg[par] < 3) continue;
        if (is_bullet(t, child) && k.at(make_edge(par, child)) < 1) return false;
    }
    return true;
}

} // namespace fmzv
