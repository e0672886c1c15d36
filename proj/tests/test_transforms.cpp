#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmzv/error.hpp"
#include "fmzv/oracle.hpp"
#include "fmzv/transforms.hpp"
#include "test_util.hpp"

#include <random>

using namespace fmzv;
using fmzv::testutil::make;

namespace {

void check_value_preserved(const Tree& before, const IndexMap& kb, const Tree& after,
                           const IndexMap& ka, const std::vector<u64>& primes, int sign = 1) {
    for (u64 p : primes) {
        u64 lhs = eval_tree_mod_p(before, kb, p).residue;
        u64 rhs = eval_tree_mod_p(after, ka, p).residue;
        if (sign < 0) rhs = (p - rhs) % p;
        CHECK(lhs == rhs);
    }
}

} // namespace

TEST_CASE("contract_zero_circle_edge merges into the chain of the remark figure") {
    auto star = make({{"v1", 'b'}, {"v2", 'b'}, {"c", 'c'}, {"rt", 'b'}},
                     {{"v1", "c", 1}, {"c", "v2", 2}, {"c", "rt", 0}}, "rt");
    auto [t2, k2] = contract_zero_circle_edge(star.tree, star.k, make_edge("c", "rt"));
    validate(t2);
    CHECK(t2.vertices.size() == 3);
    CHECK(t2.root == "rt");
    CHECK(is_bullet(t2, "rt"));
    CHECK(k2.at(make_edge("rt", "v1")) == 1);
    CHECK(k2.at(make_edge("rt", "v2")) == 2);
    check_value_preserved(star.tree, star.k, t2, k2, {5, 7, 11});
}

TEST_CASE("contract_zero_circle_edge keeps the bullet endpoint") {
    auto pair = make({{"v1", 'b'}, {"c", 'c'}, {"v2", 'b'}}, {{"v1", "c", 0}, {"c", "v2", 1}},
                     "v2");
    auto [t2, k2] = contract_zero_circle_edge(pair.tree, pair.k, make_edge("v1", "c"));
    validate(t2);
    CHECK(t2.vertices.size() == 2);
    CHECK(is_bullet(t2, "v1"));
    CHECK(k2.at(make_edge("v1", "v2")) == 1);
    check_value_preserved(pair.tree, pair.k, t2, k2, {5, 7, 11});
}

TEST_CASE("contract_zero_circle_edge error paths") {
    auto pair = make({{"v1", 'b'}, {"c", 'c'}, {"v2", 'b'}}, {{"v1", "c", 1}, {"c", "v2", 1}},
                     "v2");
    CHECK_THROWS_AS(contract_zero_circle_edge(pair.tree, pair.k, make_edge("v1", "c")), Error);
    try {
        contract_zero_circle_edge(pair.tree, pair.k, make_edge("v1", "c"));
    } catch (const Error& e) {
        CHECK(e.code() == "NonzeroIndex");
    }

    auto bullets = make({{"v1", 'b'}, {"v2", 'b'}}, {{"v1", "v2", 0}}, "v2");
    try {
        contract_zero_circle_edge(bullets.tree, bullets.k, make_edge("v1", "v2"));
    } catch (const Error& e) {
        CHECK(e.code() == "NoCircleEndpoint");
    }

    try {
        contract_zero_circle_edge(pair.tree, pair.k, make_edge("v1", "v2"));
    } catch (const Error& e) {
        CHECK(e.code() == "UnknownEdge");
    }
}

TEST_CASE("contract_degree2_circle") {
    auto pair = make({{"v1", 'b'}, {"c", 'c'}, {"v2", 'b'}}, {{"v1", "c", 1}, {"c", "v2", 2}},
                     "v2");
    auto [t2, k2] = contract_degree2_circle(pair.tree, pair.k, "c");
    validate(t2);
    CHECK(k2.at(make_edge("v1", "v2")) == 3);
    check_value_preserved(pair.tree, pair.k, t2, k2, {5, 7, 11, 13});

    auto zero5 = make({{"v1", 'b'}, {"c", 'c'}, {"v2", 'b'}}, {{"v1", "c", 0}, {"c", "v2", 5}},
                      "v2");
    auto [t3, k3] = contract_degree2_circle(zero5.tree, zero5.k, "c");
    CHECK(k3.at(make_edge("v1", "v2")) == 5);

    try {
        contract_degree2_circle(pair.tree, pair.k, "v1");
    } catch (const Error& e) {
        CHECK(e.code() == "NotDegreeTwoCircle");
    }
    auto rooted = make({{"v1", 'b'}, {"c", 'c'}, {"v2", 'b'}}, {{"v1", "c", 1}, {"c", "v2", 2}},
                       "c");
    try {
        contract_degree2_circle(rooted.tree, rooted.k, "c");
    } catch (const Error& e) {
        CHECK(e.code() == "RootContraction");
    }
}

TEST_CASE("split_bullet_branch_vertex is inverse to contraction") {
    auto y = make({{"rt", 'b'}, {"v", 'b'}, {"a", 'b'}, {"b", 'b'}},
                  {{"rt", "v", 1}, {"v", "a", 1}, {"v", "b", 1}}, "rt");
    auto [t2, k2] = split_bullet_branch_vertex(y.tree, y.k, "v");
    validate(t2);
    CHECK(t2.vertices.size() == 5);
    CHECK(degrees(t2)["v"] == 2);
    CHECK(vertex(t2, "v#c").color == Color::circle);
    CHECK(degrees(t2)["v#c"] == 3);
    CHECK(k2.at(make_edge("v", "v#c")) == 0);
    check_value_preserved(y.tree, y.k, t2, k2, {5, 7, 11});

    // Contracting the fresh zero edge restores the input.
    auto [t3, k3] = contract_zero_circle_edge(t2, k2, make_edge("v", "v#c"));
    CHECK(t3.vertices.size() == y.tree.vertices.size());
    CHECK(t3.edges == y.tree.edges);
    CHECK(k3 == y.k);
    CHECK(t3.root == y.tree.root);

    try {
        split_bullet_branch_vertex(y.tree, y.k, "a");
    } catch (const Error& e) {
        CHECK(e.code() == "NotBulletBranch");
    }
    auto rooted = make({{"rt", 'b'}, {"v", 'b'}, {"a", 'b'}, {"b", 'b'}},
                       {{"rt", "v", 1}, {"rt", "a", 1}, {"rt", "b", 1}}, "rt");
    try {
        split_bullet_branch_vertex(rooted.tree, rooted.k, "rt");
    } catch (const Error& e) {
        CHECK(e.code() == "RootSplit");
    }
}

TEST_CASE("fresh ids dodge existing vertices") {
    auto y = make({{"rt", 'b'}, {"v", 'b'}, {"v#c", 'b'}, {"a", 'b'}, {"b", 'b'}},
                  {{"rt", "v", 1}, {"v", "v#c", 1}, {"v", "a", 1}, {"v", "b", 1}}, "rt");
    CHECK(fresh_vertex_id(y.tree, "v#c") == "v#c2");
    auto [t2, k2] = split_bullet_branch_vertex(y.tree, y.k, "v");
    validate(t2);
    CHECK(has_vertex(t2, "v#c2"));
    CHECK(vertex(t2, "v#c2").color == Color::circle);
    check_value_preserved(y.tree, y.k, t2, k2, {5, 7});
}

TEST_CASE("move_root sign") {
    auto chain = make({{"v1", 'b'}, {"v2", 'b'}, {"v3", 'b'}},
                      {{"v1", "v2", 2}, {"v2", "v3", 1}}, "v3");
    auto [moved, sign] = move_root(chain.tree, chain.k, "v1");
    CHECK(sign == -1);
    CHECK(moved.root == "v1");
    CHECK(eval_tree_mod_p(chain.tree, chain.k, 7).residue == 4);
    CHECK(eval_tree_mod_p(moved, chain.k, 7).residue == 3);  // 4 = -3 mod 7

    auto [same, s1] = move_root(chain.tree, chain.k, "v3");
    CHECK(s1 == 1);
    CHECK(same.root == "v3");
    CHECK(same.edges == chain.tree.edges);
}

TEST_CASE("move_root reproduces the MT root exchange") {
    // (k1,...,kr; k_{r+1}) = (-1)^(k1+k_{r+1}) (k_{r+1},k2,...,kr; k1).
    for (std::vector<int> ks : {std::vector<int>{1, 1}, {2, 1}, {1, 2}})
        for (int klast : {0, 1, 2}) {
            auto star = testutil::mt_star(ks, klast);
            auto [moved, sign] = move_root(star.tree, star.k, "v1");
            CHECK(sign == ((ks[0] + klast) % 2 == 0 ? 1 : -1));
            std::vector<int> swapped = ks;
            swapped[0] = klast;
            for (u64 p : {7ULL, 11ULL, 13ULL}) {
                u64 lhs = eval_mt_mod_p(ks, klast, p).residue;
                u64 rhs = eval_mt_mod_p(swapped, ks[0], p).residue;
                if (sign < 0) rhs = (p - rhs) % p;
                CHECK(lhs == rhs);
                // The re-rooted star is the swapped MT sum.
                u64 tree_val = eval_tree_mod_p(moved, star.k, p).residue;
                CHECK(tree_val == eval_mt_mod_p(swapped, ks[0], p).residue);
            }
        }
}

TEST_CASE("harvestable_form on the middle-rooted chain") {
    auto middle = testutil::middle_chain(1, 2);
    SignedTreePair h = harvestable_form(middle.tree, middle.k);
    CHECK(h.sign == -1);
    CHECK(h.tree.root == "v1");
    CHECK(is_harvestable(h.tree, h.k));
    CHECK(is_essentially_positive(h.tree, h.k));
    // value(middle chain) = 3 = -zeta(2,1) = -4 mod 7
    CHECK(eval_tree_mod_p(middle.tree, middle.k, 7).residue == 3);
    CHECK(eval_tree_mod_p(h.tree, h.k, 7).residue == 4);
}

TEST_CASE("harvestable_form is the identity on harvestable input") {
    auto star = testutil::mt_star({1, 1}, 1);
    SignedTreePair h = harvestable_form(star.tree, star.k);
    CHECK(h.sign == 1);
    CHECK(h.tree.edges == star.tree.edges);
    CHECK(h.k == star.k);
    CHECK(h.tree.root == star.tree.root);
}

TEST_CASE("harvestable_form handles a degree-2 circle root") {
    auto rooted = make({{"v1", 'b'}, {"c", 'c'}, {"v2", 'b'}}, {{"v1", "c", 1}, {"c", "v2", 2}},
                       "c");
    SignedTreePair h = harvestable_form(rooted.tree, rooted.k);
    CHECK(is_harvestable(h.tree, h.k));
    for (u64 p : {5ULL, 7ULL, 11ULL}) {
        u64 lhs = eval_tree_mod_p(rooted.tree, rooted.k, p).residue;
        u64 rhs = eval_tree_mod_p(h.tree, h.k, p).residue;
        if (h.sign < 0) rhs = (p - rhs) % p;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("harvestable_form rejects non essentially positive input") {
    auto bad = make({{"v1", 'b'}, {"v2", 'b'}}, {{"v1", "v2", 0}}, "v1");
    try {
        harvestable_form(bad.tree, bad.k);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == "NotEssentiallyPositive");
    }
}

TEST_CASE("double root move composes by parity") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        auto [tree, k] = testutil::random_tree(rng, n, 3);
        std::string a = tree.vertices[rng() % tree.vertices.size()].id;
        std::string b = tree.vertices[rng() % tree.vertices.size()].id;
        auto [t1, s1] = move_root(tree, k, a);
        auto [t2, s2] = move_root(t1, k, b);
        auto [direct, s3] = move_root(tree, k, b);
        CHECK(s1 * s2 == s3);
        CHECK(t2.root == direct.root);
    }
}

TEST_CASE("randomized value preservation for the three moves") {
    std::mt19937 rng(808);
    const std::vector<u64> primes{5, 7, 11, 13};

    int done22 = 0;
    while (done22 < 40) {
        auto [tree, k] = testutil::random_tree(rng, 3 + static_cast<int>(rng() % 4), 3);
        // Find an edge with a circle endpoint; zero out its index.
        EdgeKey target{};
        bool found = false;
        for (const EdgeKey& e : tree.edges)
            if (!is_bullet(tree, e.first) || !is_bullet(tree, e.second)) {
                target = e;
                found = true;
                break;
            }
        if (!found) continue;
        IndexMap k0 = k;
        k0[target] = 0;
        auto [t2, k2] = contract_zero_circle_edge(tree, k0, target);
        check_value_preserved(tree, k0, t2, k2, {primes[rng() % 4]});
        ++done22;
    }

    int done23 = 0;
    while (done23 < 40) {
        auto [tree, k] = testutil::random_tree(rng, 3 + static_cast<int>(rng() % 4), 3);
        auto deg = degrees(tree);
        std::string target;
        for (const Vertex& v : tree.vertices)
            if (v.color == Color::circle && deg[v.id] == 2 && v.id != tree.root) target = v.id;
        if (target.empty()) continue;
        auto [t2, k2] = contract_degree2_circle(tree, k, target);
        check_value_preserved(tree, k, t2, k2, {primes[rng() % 4]});
        ++done23;
    }

    int done25 = 0;
    while (done25 < 40) {
        auto [tree, k] = testutil::random_tree(rng, 2 + static_cast<int>(rng() % 5), 3);
        std::string target = tree.vertices[rng() % tree.vertices.size()].id;
        auto [t2, sign] = move_root(tree, k, target);
        check_value_preserved(tree, k, t2, k, {primes[rng() % 4]}, sign);
        ++done25;
    }
}
