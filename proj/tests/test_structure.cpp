#include <doctest.h>

#include <random>
#include <set>

#include "rsat/canonical.hpp"
#include "rsat/families.hpp"
#include "rsat/structure.hpp"
#include "support/family_params.hpp"
#include "support/oracles.hpp"

using namespace rsat;

namespace {

SimpleGraph bowtie() { return build(MSpec{5}).graph; }

}  // namespace

TEST_CASE("classify_degree_two on the bowtie") {
        Degree2Classification cls = classify_degree_two(bowtie());
        CHECK(cls.bad_roots == std::vector<int>{1, 2, 3, 4});
        CHECK(cls.good_roots.empty());
        CHECK(cls.suspensions == std::vector<int>{0});
        CHECK(cls.bad_root_pairs == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
}

TEST_CASE("classify_degree_two on hub constructions") {
        Degree2Classification w8 = classify_degree_two(build(WSpec{8}).graph);
        CHECK(w8.good_roots == std::vector<int>{2, 3, 4, 5, 6, 7});
        CHECK(w8.bad_roots.empty());
        CHECK(w8.suspensions.empty());

        // One attached triangle, residual blocks (6,3,3,3): the triangle
        // vertices have degree 3; bad roots come from the order-3 blocks.
        SimpleGraph xi = build(XiSpec{18, {1, 0, 0, 0}, {6, 3, 3, 3}}).graph;
        Degree2Classification cls = classify_degree_two(xi);
        CHECK(cls.bad_roots.size() == 6);  // three order-3 blocks, two roots each
        CHECK(cls.suspensions == std::vector<int>{1, 2, 3});
        for (auto [a, b] : cls.bad_root_pairs) CHECK(a < b);
}

TEST_CASE("isolated triangle vertices are not bad roots") {
        SimpleGraph k3 = SimpleGraph::complete(3);
        Degree2Classification cls = classify_degree_two(k3);
        CHECK(cls.bad_roots.empty());
        CHECK(cls.good_roots == std::vector<int>{0, 1, 2});
        CHECK(cls.suspensions.empty());
}

TEST_CASE("bad_root_pairs is a perfect matching on bad_roots") {
        std::mt19937 rng(555);
        for (int trial = 0; trial < 2000; ++trial) {
                int n = 3 + static_cast<int>(rng() % 10);
                SimpleGraph g = oracle::random_graph(rng, n, 0.15 + 0.1 * (rng() % 6));
                Degree2Classification cls = classify_degree_two(g);
                CHECK(cls.bad_roots.size() % 2 == 0);
                CHECK(cls.bad_root_pairs.size() * 2 == cls.bad_roots.size());
                std::set<int> matched;
                std::set<int> roots(cls.bad_roots.begin(), cls.bad_roots.end());
                for (auto [a, b] : cls.bad_root_pairs) {
                        CHECK(roots.count(a) == 1);
                        CHECK(roots.count(b) == 1);
                        CHECK(matched.insert(a).second);
                        CHECK(matched.insert(b).second);
                }
                // good and bad roots partition the degree-2 vertices
                std::set<int> goods(cls.good_roots.begin(), cls.good_roots.end());
                for (int v = 0; v < n; ++v) {
                        bool deg2 = g.degree(v) == 2;
                        CHECK(deg2 == (goods.count(v) + roots.count(v) == 1));
                }
        }
}

TEST_CASE("audit_suspensions") {
        SuspensionAudit bow = audit_suspensions(bowtie());
        CHECK_FALSE(bow.pass);
        // Center has 4 bad roots and degree 4 < 5.
        CHECK(bow.violations.size() == 2);
        CHECK(bow.violations[0].vertex == 0);

        CHECK(audit_suspensions(build(TSpec{20, 8}).graph).pass);
        CHECK(audit_suspensions(build(XiSpec{18, {1, 0, 0, 0}, {6, 3, 3, 3}}).graph).pass);
        CHECK(audit_suspensions(build(WSpec{9}).graph).pass);  // vacuous: no bad roots
}

TEST_CASE("audit_bounds") {
        SimpleGraph omega15 = build(OmegaSpec{15, {6, 3, 3, 3}}).graph;
        auto bounds = audit_bounds(omega15, 5, true);
        REQUIRE(!bounds.empty());
        bool saw_c5 = false;
        for (const auto& b : bounds) {
                if (b.name == "c5_general") {
                        saw_c5 = true;
                        CHECK(b.required == 20);
                        CHECK(b.actual == 24);
                }
                CHECK(b.pass);
        }
        CHECK(saw_c5);

        SimpleGraph s10 = build(SSpec{10}).graph;
        CHECK(s10.edge_count() == 18);
        for (const auto& b : audit_bounds(s10, 6, true)) {
                CHECK(b.pass);
                if (b.name == "rainbow_four_thirds") CHECK(b.required == 14);
                if (b.name == "six_fifths") CHECK(b.required == 12);
        }

        // Hypothetical 10-vertex 11-edge graph claimed rainbow-saturated for
        // 6-cycles: fails the 4n/3 bound.
        SimpleGraph sparse(10);
        for (int v = 0; v < 10; ++v) sparse.add_edge(v, (v + 1) % 10);
        sparse.add_edge(0, 5);
        auto sparse_bounds = audit_bounds(sparse, 6, true);
        bool failed_four_thirds = false;
        for (const auto& b : sparse_bounds)
                if (b.name == "rainbow_four_thirds") failed_four_thirds = !b.pass;
        CHECK(failed_four_thirds);
}

TEST_CASE("canonical form matches the brute-force minimum") {
        std::mt19937 rng(2468);
        for (int trial = 0; trial < 300; ++trial) {
                int n = 1 + static_cast<int>(rng() % 7);  // 1..7
                SimpleGraph g = oracle::random_graph(rng, n, 0.2 + 0.15 * (rng() % 5));
                auto expected = oracle::min_adjacency_string(g);
                CanonicalForm got = canonical_form(g);
                // Unpack the word-packed bits for comparison.
                std::vector<bool> bits;
                size_t total = static_cast<size_t>(n) * (n - 1) / 2;
                for (size_t pos = 0; pos < total; ++pos)
                        bits.push_back(got.bits[pos / 64] >> (63 - pos % 64) & 1);
                CHECK(bits == expected);
                // The permutation must reproduce the canonical bits.
                SimpleGraph relabeled(n);
                for (const Edge& e : g.edges()) relabeled.add_edge(got.perm[e.u], got.perm[e.v]);
                CHECK(canonical_form(relabeled).bits == got.bits);
                CHECK(is_canonical_representative(relabeled));
        }
}

TEST_CASE("isomorphism helpers") {
        SimpleGraph a = build(OmegaSpec{15, {6, 3, 3, 3}}).graph;
        // Relabel through an arbitrary permutation.
        std::vector<int> perm{7, 3, 11, 0, 5, 14, 1, 2, 9, 13, 4, 6, 8, 10, 12};
        SimpleGraph b(a.n());
        for (const Edge& e : a.edges()) b.add_edge(perm[e.u], perm[e.v]);
        CHECK(are_isomorphic(a, b));
        auto map = find_isomorphism(a, b);
        REQUIRE(map.has_value());
        for (const Edge& e : a.edges()) CHECK(b.has_edge((*map)[e.u], (*map)[e.v]));
        CHECK_FALSE(are_isomorphic(build(OmegaSpec{18, {9, 3, 3, 3}}).graph,
                                   build(OmegaSpec{18, {6, 6, 3, 3}}).graph));
        SUBCASE("different graphs with equal degree sequences") {
                SimpleGraph c6 = SimpleGraph::cycle(6);
                SimpleGraph twin_triangles(6);
                for (int base : {0, 3})
                        for (int i = 0; i < 3; ++i)
                                twin_triangles.add_edge(base + i, base + (i + 1) % 3);
                CHECK_FALSE(are_isomorphic(c6, twin_triangles));
        }
}

TEST_CASE("xi membership recognizes built instances") {
        auto member = xi_membership(build(XiSpec{18, {1, 0, 0, 0}, {6, 3, 3, 3}}).graph);
        REQUIRE(member.has_value());
        int total_a = member->a[0] + member->a[1] + member->a[2] + member->a[3];
        CHECK(total_a == 1);
        std::multiset<int> parts(member->partition.begin(), member->partition.end());
        CHECK(parts == std::multiset<int>{6, 3, 3, 3});
        CHECK(member->labeling.size() == 18);

        auto omega24 = xi_membership(build(OmegaSpec{24, {15, 3, 3, 3}}).graph);
        REQUIRE(omega24.has_value());
        CHECK(omega24->a == std::array<int, 4>{0, 0, 0, 0});

        CHECK_FALSE(xi_membership(build(WSpec{20}).graph).has_value());
        // A triangle-free split is not a member even though it is a legal
        // construction of the right size.
        CHECK_FALSE(xi_membership(build(OmegaSpec{24, {6, 6, 6, 6}}).graph).has_value());
}

TEST_CASE("xi membership across every legal triangle-bearing spec up to n = 24") {
        for (int n = 15; n <= 24; ++n) {
                for (const auto& [a, part] : testsupport::xi_params(n)) {
                        bool has_triangle = false;
                        for (int p : part) has_triangle |= p == 3;
                        if (!has_triangle) continue;
                        SimpleGraph g = build(XiSpec{n, a, part}).graph;
                        auto member = xi_membership(g);
                        REQUIRE(member.has_value());
                        CHECK(are_isomorphic(g, build(XiSpec{n, member->a, member->partition}).graph));
                }
        }
}
