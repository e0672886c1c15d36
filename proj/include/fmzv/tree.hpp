#ifndef FMZV_TREE_HPP
#define FMZV_TREE_HPP

#include <map>
#include <string>
#include <vector>

namespace fmzv {

enum class Color { bullet, circle };

const char* to_string(Color c);

struct Vertex {
    std::string id;
    Color color = Color::bullet;
};

// Unordered vertex-id pair, normalized so first < second.
using EdgeKey = std::pair<std::string, std::string>;

EdgeKey make_edge(std::string a, std::string b);
std::string edge_label(const EdgeKey& e);  // "a-b", for diagnostics

// 2-colored rooted tree: a finite tree with a distinguished root vertex
// and a bullet/circle coloring in which every terminal is bullet.
// Value type; vertices and edges are kept sorted so that every
// iteration order (and hence every output) is deterministic.
struct Tree {
    std::vector<Vertex> vertices;  // sorted by id
    std::vector<EdgeKey> edges;    // sorted
    std::string root;
};

// Index on a tree: one nonnegative integer per edge, domain exactly the
// edge set.
using IndexMap = std::map<EdgeKey, int>;

// Normalizes (sorts) the inputs; does not validate.
Tree make_tree(std::vector<Vertex> vertices, std::vector<EdgeKey> edges, std::string root);

// Checks all structural invariants:
//   - vertex ids nonempty and unique          (BadVertexId / DuplicateVertexId)
//   - root present                            (RootMissing)
//   - edge endpoints exist                    (UnknownVertex)
//   - connected, acyclic, #E = #V - 1         (NotATree)
//   - every degree-1 vertex is bullet; a single vertex is its own
//     terminal and must be bullet             (CircleTerminal)
void validate(const Tree& t);

// Domain of k must be exactly t's edge set and all values >= 0 (BadIndex).
void validate_index(const Tree& t, const IndexMap& k);

bool has_vertex(const Tree& t, const std::string& id);
const Vertex& vertex(const Tree& t, const std::string& id);  // UnknownVertex
bool is_bullet(const Tree& t, const std::string& id);

// Neighbor lists, sorted; keyed by vertex id.
std::map<std::string, std::vector<std::string>> adjacency(const Tree& t);
std::map<std::string, int> degrees(const Tree& t);

// Degree-1 vertices, sorted; for a single-vertex tree, that vertex.
std::vector<std::string> terminals(const Tree& t);

std::vector<std::string> bullet_ids(const Tree& t);

// parent[v] for every non-root vertex, oriented away from the root.
std::map<std::string, std::string> parents(const Tree& t);

// Bullet vertices in the component of T minus e not containing the root,
// i.e. the bullets whose root path uses e. Sorted. These index the sum
// L_e = sum of m_v over the returned set.
std::vector<std::string> bullet_descendants(const Tree& t, const EdgeKey& e);

// One cut per edge, in canonical edge order.
struct EdgeCut {
    EdgeKey edge;
    std::vector<std::string> far_bullets;
};
std::vector<EdgeCut> edge_cuts(const Tree& t);

// Unique edge sequence from v to w; empty when v == w.
std::vector<EdgeKey> path(const Tree& t, const std::string& v, const std::string& w);

// Sum of k over path(v, w).
int path_index_sum(const Tree& t, const IndexMap& k, const std::string& v, const std::string& w);

// Every pair of distinct bullet vertices is joined by a path of total
// index >= 1.
bool is_essentially_positive(const Tree& t, const IndexMap& k);

// H1: the root is a terminal. H2: bullets have degree <= 2 and circles
// degree >= 3. H3: every edge from a branched circle vertex (degree >= 3)
// to a bullet child carries a positive index.
bool is_harvestable(const Tree& t, const IndexMap& k);

} // namespace fmzv

#endif // FMZV_TREE_HPP
