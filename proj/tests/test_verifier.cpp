#include <doctest.h>

#include <random>
#include <set>

#include "rsat/families.hpp"
#include "rsat/verifier.hpp"
#include "support/oracles.hpp"

using namespace rsat;

namespace {

ColoredGraph monochromatic(const SimpleGraph& g) {
        EdgeColoring c;
        for (const Edge& e : g.edges()) c.set(e, 0);
        return {g, c};
}

}  // namespace

TEST_CASE("find_rainbow_cycle") {
        ColoredGraph k5 = with_rainbow(SimpleGraph::complete(5));
        auto witness = find_rainbow_cycle(k5, 5);
        REQUIRE(witness.has_value());
        CHECK(witness->size() == 5);
        std::set<int> colors;
        for (int i = 0; i < 5; ++i)
                colors.insert(k5.coloring.at(Edge((*witness)[i], (*witness)[(i + 1) % 5])));
        CHECK(colors.size() == 5);

        // The even-order construction keeps its K_4 properly 3-colored: no
        // rainbow 4-cycle anywhere.
        CHECK_FALSE(find_rainbow_cycle(build(MSpec{6}), 4).has_value());
        CHECK_FALSE(find_rainbow_cycle(build(MSpec{12}), 4).has_value());

        ColoredGraph c6 = with_rainbow(SimpleGraph::cycle(6));
        CHECK(find_rainbow_cycle(c6, 6).has_value());
        c6.coloring.set(Edge(0, 1), c6.coloring.at(Edge(3, 4)));  // repeat one color
        CHECK_FALSE(find_rainbow_cycle(c6, 6).has_value());

        CHECK_FALSE(find_rainbow_cycle(k5, 6).has_value());  // r above the order
        CHECK(oracle::has_rainbow_cycle(k5, 5));
        CHECK_FALSE(oracle::has_rainbow_cycle(build(MSpec{6}), 4));
}

TEST_CASE("is_rainbow_saturated on the small constructions") {
        for (int n = 5; n <= 8; ++n) {
                SaturationReport report = is_rainbow_saturated(build(MSpec{n}), 4);
                CHECK(report.saturated());
        }
        CHECK(is_rainbow_saturated(build(WSpec{3}), 5).saturated());  // complete, vacuous
        CHECK_THROWS_AS(is_rainbow_saturated(build(WSpec{4}), 5), UndersizedGraphError);
        for (int n = 6; n <= 9; ++n) CHECK(is_rainbow_saturated(build(WSpec{n}), 5).saturated());
        CHECK(is_rainbow_saturated(build(OmegaSpec{15, {6, 3, 3, 3}}), 5).saturated());
}

TEST_CASE("w5 is rejected with the hub edge as the failing class") {
        SaturationReport report = is_rainbow_saturated(build(WSpec{5}), 5);
        CHECK(report.verdict == SaturationReport::Verdict::unsaturated);
        REQUIRE(report.failing_nonedge.has_value());
        CHECK(*report.failing_nonedge == Edge(2, 3));
        REQUIRE(report.failing_color.has_value());
        // Both 5-vertex paths joining the first two independent vertices pass
        // through the hub edge to the third one, colored 3 in edge-sort order.
        CHECK(*report.failing_color == 3);
        CHECK_FALSE(report.failing_color_is_fresh);
}

TEST_CASE("fresh marker fires when no closable cycle exists") {
        // On the 4-vertex path no 4-vertex path joins the first nonedge's
        // endpoints, so even a vacant color fails.
        SaturationReport report = is_rainbow_saturated(with_rainbow(SimpleGraph::path(4)), 4);
        CHECK(report.verdict == SaturationReport::Verdict::unsaturated);
        REQUIRE(report.failing_nonedge.has_value());
        CHECK(*report.failing_nonedge == Edge(0, 2));
        CHECK(report.failing_color_is_fresh);
        CHECK_FALSE(report.failing_color.has_value());

        // Two triangles joined by a bridge: 4-cycles exist through the first
        // nonedge but all of them cross the same bridge-side edge, so the
        // failure names a class instead.
        SimpleGraph g(6);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        g.add_edge(3, 4);
        g.add_edge(4, 5);
        g.add_edge(3, 5);
        g.add_edge(2, 3);
        SaturationReport bridged = is_rainbow_saturated(with_rainbow(g), 4);
        CHECK(bridged.verdict == SaturationReport::Verdict::unsaturated);
        REQUIRE(bridged.failing_nonedge.has_value());
        CHECK(*bridged.failing_nonedge == Edge(0, 3));
        CHECK_FALSE(bridged.failing_color_is_fresh);
        CHECK(bridged.failing_color.has_value());
}

TEST_CASE("evidence collection returns closable rainbow cycles") {
        VerifyOptions opts;
        opts.collect_evidence = true;
        SaturationReport report = is_rainbow_saturated(build(MSpec{5}), 4, opts);
        CHECK(report.saturated());
        CHECK_FALSE(report.per_nonedge_evidence.empty());
        for (const auto& [uv, cycles] : report.per_nonedge_evidence) {
                CHECK(!cycles.empty());
                for (const auto& path : cycles) {
                        CHECK(path.size() == 4);
                        CHECK(((path.front() == uv.u && path.back() == uv.v) ||
                               (path.front() == uv.v && path.back() == uv.u)));
                }
        }
}

TEST_CASE("parallel verification is identical to sequential") {
        for (const FamilySpec& spec :
             {FamilySpec{MSpec{8}}, FamilySpec{WSpec{5}}, FamilySpec{OmegaSpec{15, {6, 3, 3, 3}}}}) {
                ColoredGraph cg = build(spec);
                int r = std::holds_alternative<MSpec>(spec) ? 4 : 5;
                SaturationReport seq = is_rainbow_saturated(cg, r, {});
                VerifyOptions par;
                par.jobs = 4;
                SaturationReport p = is_rainbow_saturated(cg, r, par);
                CHECK(seq.verdict == p.verdict);
                CHECK(seq.failing_nonedge == p.failing_nonedge);
                CHECK(seq.failing_color == p.failing_color);
                CHECK(seq.failing_color_is_fresh == p.failing_color_is_fresh);
        }
}

TEST_CASE("sufficiency via disjoint rainbow pairs") {
        CHECK(check_sufficiency_disjoint_paths(build(WSpec{6}), 5).ok);
        DisjointPairResult w5 = check_sufficiency_disjoint_paths(build(WSpec{5}), 5);
        CHECK_FALSE(w5.ok);
        CHECK(*w5.failing_nonedge == Edge(2, 3));
        // Cross-block nonedge of the four-block construction has a pair even
        // though the whole-graph condition is not met by every nonedge.
        auto pair = find_disjoint_rainbow_pair(build(OmegaSpec{15, {6, 3, 3, 3}}), 5, Edge(2, 5));
        REQUIRE(pair.has_value());
        CHECK(pair->first.size() == 5);
        std::set<Edge> first_edges;
        for (size_t i = 0; i + 1 < pair->first.size(); ++i)
                first_edges.insert(Edge(pair->first[i], pair->first[i + 1]));
        for (size_t i = 0; i + 1 < pair->second.size(); ++i)
                CHECK(first_edges.count(Edge(pair->second[i], pair->second[i + 1])) == 0);
        // Rejects inputs that already hold a rainbow cycle.
        CHECK_THROWS_AS(check_sufficiency_disjoint_paths(with_rainbow(SimpleGraph::cycle(5)), 5),
                        RainbowCopyError);
}

TEST_CASE("sufficiency implies saturation on sampled colorings") {
        int usable = 0;
        auto probe = [&](const ColoredGraph& cg, int r) {
                try {
                        DisjointPairResult suff = check_sufficiency_disjoint_paths(cg, r);
                        if (suff.ok) {
                                ++usable;
                                CHECK(is_rainbow_saturated(cg, r).saturated());
                        }
                } catch (const RainbowCopyError&) {
                } catch (const UndersizedGraphError&) {
                }
        };
        for (int n = 6; n <= 9; ++n) probe(build(WSpec{n}), 5);
        probe(build(MSpec{5}), 4);
        probe(build(GammaSpec{10, 5, 5}), 7);
        CHECK(usable == 6);  // all of the above meet the pair condition
        std::mt19937 rng(99);
        for (int trial = 0; trial < 200; ++trial) {
                int n = 5 + static_cast<int>(rng() % 3);
                SimpleGraph g = oracle::random_graph(rng, n, 0.55);
                int r = 4 + static_cast<int>(rng() % (n - 3));
                probe({g, oracle::random_partition_coloring(rng, g)}, r);
        }
}

TEST_CASE("necessity avoidance") {
        SimpleGraph pendant(4);  // triangle with a pendant vertex
        pendant.add_edge(0, 1);
        pendant.add_edge(1, 2);
        pendant.add_edge(0, 2);
        pendant.add_edge(0, 3);
        AvoidanceResult res = check_necessity_avoidance(pendant, 4);
        CHECK_FALSE(res.ok);
        REQUIRE(res.violation.has_value());

        CHECK(check_necessity_avoidance(build(GammaSpec{10, 5, 5}).graph, 7).ok);
        CHECK(check_necessity_avoidance(build(SSpec{7}).graph, 6).ok);

        // No connecting path at all: empty graph on 4 vertices.
        AvoidanceResult empty = check_necessity_avoidance(SimpleGraph(4), 4);
        CHECK_FALSE(empty.ok);
        CHECK_FALSE(empty.violation->edge.has_value());
}

TEST_CASE("rainbow iff route") {
        CHECK(check_rainbow_iff(build(TSpec{20, 8}).graph, 8));
        CHECK_FALSE(check_rainbow_iff(SimpleGraph::cycle(7), 7));  // contains the cycle itself
        RainbowIffResult cyc = check_rainbow_iff_detail(SimpleGraph::cycle(7), 7);
        CHECK(cyc.cycle.has_value());

        // The construction instantiated below its working range: the failure
        // must involve the first independent-set-to-base nonedge, and the edge
        // every connecting path crosses is the far base edge.
        RainbowIffResult bad7 = check_rainbow_iff_detail(build_t_style(14, 7).graph(), 7);
        CHECK_FALSE(bad7.ok);
        REQUIRE(bad7.violation.has_value());
        CHECK(bad7.violation->nonedge == Edge(2, 11));
        REQUIRE(bad7.violation->edge.has_value());
        CHECK(*bad7.violation->edge == Edge(3, 4));

        RainbowIffResult bad6 = check_rainbow_iff_detail(build_t_style(11, 6).graph(), 6);
        CHECK_FALSE(bad6.ok);
}

TEST_CASE("rainbow iff equals the saturation verdict on rainbow colorings") {
        std::mt19937 rng(4242);
        int compared = 0;
        for (int trial = 0; trial < 300; ++trial) {
                int n = 4 + static_cast<int>(rng() % 4);
                SimpleGraph g = oracle::random_graph(rng, n, 0.5);
                int r = 3 + static_cast<int>(rng() % (n - 2));
                bool iff_ok;
                bool sat_ok;
                try {
                        iff_ok = check_rainbow_iff(g, r);
                } catch (const UndersizedGraphError&) {
                        CHECK_THROWS_AS(is_rainbow_saturated(with_rainbow(g), r),
                                        UndersizedGraphError);
                        continue;
                }
                sat_ok = is_rainbow_saturated(with_rainbow(g), r).saturated();
                CHECK(iff_ok == sat_ok);
                ++compared;
        }
        CHECK(compared > 200);
}

TEST_CASE("witness table replay") {
        SimpleGraph omega = build(OmegaSpec{15, {6, 3, 3, 3}}).graph;
        // One row of the cross-block table: three paths, none sharing every edge.
        std::vector<std::vector<int>> row{{5, 4, 0, 2, 12}, {5, 0, 2, 11, 12}, {5, 0, 1, 2, 12}};
        CHECK(verify_witness_table(omega, Edge(5, 12), row, WitnessMode::edge_cover).ok);

        SimpleGraph gamma = build(GammaSpec{10, 5, 5}).graph;
        std::vector<std::vector<int>> pair_row{{4, 0, 3, 7, 2, 1, 5}, {4, 1, 3, 8, 2, 0, 5}};
        CHECK(verify_witness_table(gamma, Edge(4, 5), pair_row, WitnessMode::disjoint_rainbow_pair)
                  .ok);

        SUBCASE("corruptions are diagnosed") {
                auto repeated = row;
                repeated[1][1] = 5;  // repeats the endpoint
                WitnessCheckResult res =
                    verify_witness_table(omega, Edge(5, 12), repeated, WitnessMode::edge_cover);
                CHECK_FALSE(res.ok);
                CHECK(res.reason == "repeated vertex");
                CHECK(res.path_index == 1);

                auto nonstep = row;
                nonstep[0][1] = 9;  // 5-9 is not an edge
                res = verify_witness_table(omega, Edge(5, 12), nonstep, WitnessMode::edge_cover);
                CHECK_FALSE(res.ok);
                CHECK(res.reason == "non-edge step");

                auto endpoints = row;
                endpoints[2].back() = 11;
                res = verify_witness_table(omega, Edge(5, 12), endpoints, WitnessMode::edge_cover);
                CHECK_FALSE(res.ok);
                CHECK(res.reason == "wrong endpoints");

                auto lengths = row;
                lengths[1].insert(lengths[1].begin() + 1, 4);
                res = verify_witness_table(omega, Edge(5, 12), lengths, WitnessMode::edge_cover);
                CHECK_FALSE(res.ok);
                CHECK(res.reason == "wrong length");

                res = verify_witness_table(omega, Edge(0, 1), row, WitnessMode::edge_cover);
                CHECK_FALSE(res.ok);  // (0,1) is an edge

                auto shared = pair_row;
                shared[1] = {4, 0, 3, 8, 2, 1, 5};  // shares edge 4-0
                res = verify_witness_table(gamma, Edge(4, 5), shared,
                                           WitnessMode::disjoint_rainbow_pair);
                CHECK_FALSE(res.ok);
                CHECK(res.reason == "paths are not edge-disjoint");
        }
}

TEST_CASE("complete graph path lemma brute force") {
        CHECK(complete_graph_path_lemma(5));
        CHECK(complete_graph_path_lemma(6));
        CHECK(complete_graph_path_lemma(7));
        CHECK_THROWS_AS(complete_graph_path_lemma(4), std::invalid_argument);
        CHECK_THROWS_AS(complete_graph_path_lemma(10), std::invalid_argument);
}

TEST_CASE("oracle agreement on random colored graphs") {
        std::mt19937 rng(20250809);
        int disagreements = 0;
        for (int trial = 0; trial < 250; ++trial) {
                int n = 4 + static_cast<int>(rng() % 4);  // 4..7
                double p = 0.3 + 0.1 * static_cast<double>(rng() % 5);
                SimpleGraph g = oracle::random_graph(rng, n, p);
                int r = 3 + static_cast<int>(rng() % (n - 2));
                bool complete = g.edge_count() == n * (n - 1) / 2;
                if (!complete && n < r) continue;
                ColoredGraph cg{g, oracle::random_partition_coloring(rng, g)};
                bool fresh_agree = true;
                bool expected = oracle::is_saturated(cg, r, &fresh_agree);
                CHECK(fresh_agree);
                bool got = is_rainbow_saturated(cg, r).saturated();
                if (got != expected) ++disagreements;
        }
        CHECK(disagreements == 0);
}

TEST_CASE("monochromatic colorings of non-complete graphs are never saturated") {
        std::mt19937 rng(31337);
        CHECK(is_rainbow_saturated(monochromatic(build(WSpec{6}).graph), 5).verdict ==
              SaturationReport::Verdict::unsaturated);
        CHECK(is_rainbow_saturated(monochromatic(SimpleGraph::cycle(6)), 4).verdict ==
              SaturationReport::Verdict::unsaturated);
        for (int trial = 0; trial < 40; ++trial) {
                int n = 5 + static_cast<int>(rng() % 3);
                SimpleGraph g = oracle::random_graph(rng, n, 0.5);
                if (g.edge_count() == n * (n - 1) / 2 || g.edge_count() == 0) continue;
                int r = 4 + static_cast<int>(rng() % (n - 3));
                ColoredGraph cg = monochromatic(g);
                CHECK_FALSE(is_rainbow_saturated(cg, r).saturated());
                CHECK_FALSE(oracle::is_saturated(cg, r));
        }
}

TEST_CASE("saturated graphs are connected with minimum degree 2") {
        int saturated_seen = 0;
        auto probe = [&](const ColoredGraph& cg, int r) {
                const SimpleGraph& g = cg.graph;
                SaturationReport report = is_rainbow_saturated(cg, r);
                if (report.saturated() && g.edge_count() < g.n() * (g.n() - 1) / 2 && g.n() >= r) {
                        ++saturated_seen;
                        CHECK(is_connected(g));
                        CHECK(min_degree(g) >= 2);
                }
        };
        probe(build(MSpec{6}), 4);
        probe(build(WSpec{7}), 5);
        probe(build(SSpec{8}), 6);
        CHECK(saturated_seen == 3);
        std::mt19937 rng(808);
        for (int trial = 0; trial < 400; ++trial) {
                int n = 4 + static_cast<int>(rng() % 4);
                SimpleGraph g = oracle::random_graph(rng, n, 0.55);
                int r = 4 + static_cast<int>(rng() % (n - 3));
                if (g.edge_count() < n * (n - 1) / 2 && n < r) continue;
                probe({g, oracle::random_partition_coloring(rng, g)}, r);
        }
}
