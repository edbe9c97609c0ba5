#pragma once

// Exact decision procedures for rainbow-freeness and rainbow saturation.
//
// Saturation semantics: a colored graph is C_r-rainbow saturated when it has
// no rainbow r-cycle and, for every nonedge uv, (a) some r-cycle through uv
// closes a path whose graph edges carry pairwise distinct colors, and (b) for
// every non-empty color class some such cycle uses no edge of that class.
// Quantifying over "any color" reduces to the non-empty classes plus one
// fresh color, because outcomes depend only on the class partition and all
// vacant colors are interchangeable.
//
// Complete input graphs are saturated iff rainbow-C_r-free (the nonedge
// quantifier is vacuous); other graphs with fewer than r vertices are
// rejected with UndersizedGraphError since both verdicts would mislead.

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rsat/coloring.hpp"
#include "rsat/graph.hpp"
#include "rsat/paths.hpp"

namespace rsat {

inline constexpr int kMaxTrackedEdges = 512;

using EdgeBits = std::bitset<kMaxTrackedEdges>;

class UndersizedGraphError : public std::invalid_argument {
public:
        using std::invalid_argument::invalid_argument;
};

// Thrown when an operation requires a C_r-rainbow-free input but the graph
// already holds a rainbow r-cycle; carries that cycle.
class RainbowCopyError : public std::invalid_argument {
public:
        RainbowCopyError(std::string what, std::vector<int> cycle)
            : std::invalid_argument(std::move(what)), cycle_(std::move(cycle)) {}

        const std::vector<int>& cycle() const { return cycle_; }

private:
        std::vector<int> cycle_;
};

struct SaturationReport {
        enum class Verdict { saturated, contains_rainbow_copy, unsaturated };

        Verdict verdict = Verdict::saturated;
        std::optional<std::vector<int>> rainbow_copy;
        std::optional<Edge> failing_nonedge;
        std::optional<int> failing_color;     // original color id
        bool failing_color_is_fresh = false;  // even a vacant color fails (t_uv = 0)
        // Rainbow-closable cycles per nonedge (capped), when evidence was requested.
        std::map<Edge, std::vector<std::vector<int>>> per_nonedge_evidence;

        bool saturated() const { return verdict == Verdict::saturated; }
};

struct VerifyOptions {
        int jobs = 1;
        bool collect_evidence = false;
        int max_evidence_per_nonedge = 4;
};

namespace detail {

// Edge -> dense class id view of a coloring; the workhorse representation.
struct DenseClasses {
        const EdgeIndexer* index = nullptr;
        const std::vector<int>* class_of = nullptr;  // by edge index
        int class_count = 0;
};

// Materialized dense view of an EdgeColoring, classes ordered by ascending
// original color id.
struct DenseColoring {
        EdgeIndexer index;
        std::vector<int> class_of;
        std::vector<int> original_color;  // dense id -> original id
        int class_count = 0;

        explicit DenseColoring(const ColoredGraph& cg) : index(cg.graph) {
                if (index.count() > kMaxTrackedEdges)
                        throw std::invalid_argument("verifier supports at most 512 edges");
                std::map<int, int> dense;
                for (const auto& [e, c] : cg.coloring) dense.emplace(c, 0);
                for (auto& [c, id] : dense) {
                        id = class_count++;
                        original_color.push_back(c);
                }
                class_of.assign(static_cast<size_t>(index.count()), -1);
                for (const auto& [e, c] : cg.coloring) class_of[index.index(e)] = dense[c];
        }

        DenseClasses view() const { return {&index, &class_of, class_count}; }
};

template <typename Fn>
bool extend_rainbow_cycle(const SimpleGraph& g, const DenseClasses& dc, int root, int r,
                          std::vector<int>& path, std::uint64_t used, EdgeBits colors, Fn&& visit) {
        int cur = path.back();
        if (static_cast<int>(path.size()) == r) {
                if ((g.neighbors(cur) >> root & 1) && path[1] < path.back()) {
                        int closing = (*dc.class_of)[dc.index->index(root, cur)];
                        if (!colors.test(closing)) return visit(const_cast<const std::vector<int>&>(path));
                }
                return true;
        }
        std::uint64_t cand = g.neighbors(cur) & ~used;
        cand &= ~((std::uint64_t{1} << (root + 1)) - 1);
        while (cand) {
                int w = std::countr_zero(cand);
                cand &= cand - 1;
                int cls = (*dc.class_of)[dc.index->index(cur, w)];
                if (colors.test(cls)) continue;  // repeated color can never become rainbow
                path.push_back(w);
                colors.set(cls);
                if (!extend_rainbow_cycle(g, dc, root, r, path, used | std::uint64_t{1} << w, colors,
                                          visit))
                        return false;
                colors.reset(cls);
                path.pop_back();
        }
        return true;
}

inline std::optional<std::vector<int>> first_rainbow_cycle(const SimpleGraph& g,
                                                           const DenseClasses& dc, int r) {
        std::optional<std::vector<int>> found;
        std::vector<int> path;
        path.reserve(static_cast<size_t>(r));
        for (int root = 0; root + r <= g.n() && !found; ++root) {
                path.assign(1, root);
                extend_rainbow_cycle(g, dc, root, r, path, std::uint64_t{1} << root, EdgeBits{},
                                     [&](const std::vector<int>& cyc) {
                                             found = cyc;
                                             return false;
                                     });
        }
        return found;
}

inline std::vector<Edge> nonedges_of(const SimpleGraph& g) {
        std::vector<Edge> out;
        for (int u = 0; u < g.n(); ++u)
                for (int v = u + 1; v < g.n(); ++v)
                        if (!g.has_edge(u, v)) out.push_back(Edge(u, v));
        return out;
}

struct NonedgeVerdict {
        bool ok = true;
        int t_uv = 0;
        int failing_class = -1;  // dense id; -1 with ok=false means fresh failure
        std::vector<std::vector<int>> evidence;
};

inline NonedgeVerdict probe_nonedge(const SimpleGraph& g, const DenseClasses& dc, Edge uv, int r,
                                    const VerifyOptions& opts) {
        NonedgeVerdict out;
        EdgeBits avoided;
        for_each_path(g, uv.u, uv.v, r, {}, [&](const PathWitness& p) {
                EdgeBits used;
                bool rainbow = true;
                for (size_t i = 0; i + 1 < p.size(); ++i) {
                        int cls = (*dc.class_of)[dc.index->index(p[i], p[i + 1])];
                        if (used.test(cls)) {
                                rainbow = false;
                                break;
                        }
                        used.set(cls);
                }
                if (!rainbow) return true;
                ++out.t_uv;
                avoided |= ~used;
                if (opts.collect_evidence &&
                    out.evidence.size() < static_cast<size_t>(opts.max_evidence_per_nonedge))
                        out.evidence.push_back(p);
                return true;
        });
        if (out.t_uv == 0) {
                out.ok = false;
                return out;
        }
        for (int cls = 0; cls < dc.class_count; ++cls) {
                if (!avoided.test(cls)) {
                        out.ok = false;
                        out.failing_class = cls;
                        return out;
                }
        }
        return out;
}

// Dense-view saturation decision; failing_color carries the DENSE class id.
// The nonedge list is a parameter so callers can reuse it across colorings.
inline SaturationReport saturated_dense(const SimpleGraph& g, const DenseClasses& dc,
                                        const std::vector<Edge>& nonedges, int r,
                                        const VerifyOptions& opts) {
        SaturationReport report;
        if (auto cyc = first_rainbow_cycle(g, dc, r)) {
                report.verdict = SaturationReport::Verdict::contains_rainbow_copy;
                report.rainbow_copy = std::move(cyc);
                return report;
        }
        if (nonedges.empty()) return report;

        std::vector<NonedgeVerdict> verdicts(nonedges.size());
        int jobs = std::max(1, opts.jobs);
        size_t evaluated = nonedges.size();
        if (jobs == 1) {
                for (size_t i = 0; i < nonedges.size(); ++i) {
                        verdicts[i] = probe_nonedge(g, dc, nonedges[i], r, opts);
                        if (!verdicts[i].ok && !opts.collect_evidence) {
                                // Lexicographically first failure; later nonedges can't beat it.
                                evaluated = i + 1;
                                break;
                        }
                }
        } else {
                std::vector<std::thread> workers;
                workers.reserve(static_cast<size_t>(jobs));
                for (int w = 0; w < jobs; ++w)
                        workers.emplace_back([&, w] {
                                for (size_t i = static_cast<size_t>(w); i < nonedges.size();
                                     i += static_cast<size_t>(jobs))
                                        verdicts[i] = probe_nonedge(g, dc, nonedges[i], r, opts);
                        });
                for (auto& t : workers) t.join();
        }

        for (size_t i = 0; i < evaluated; ++i) {
                if (opts.collect_evidence && !verdicts[i].evidence.empty())
                        report.per_nonedge_evidence.emplace(nonedges[i], std::move(verdicts[i].evidence));
                if (!verdicts[i].ok && report.verdict == SaturationReport::Verdict::saturated) {
                        report.verdict = SaturationReport::Verdict::unsaturated;
                        report.failing_nonedge = nonedges[i];
                        if (verdicts[i].failing_class >= 0)
                                report.failing_color = verdicts[i].failing_class;
                        else
                                report.failing_color_is_fresh = true;
                }
        }
        return report;
}

}  // namespace detail

// First rainbow r-cycle in lexicographic root/path order, or absent.  r above
// the order is vacuously absent.
inline std::optional<std::vector<int>> find_rainbow_cycle(const ColoredGraph& cg, int r) {
        if (r < 3) throw std::invalid_argument("find_rainbow_cycle: need r >= 3");
        cg.validate();
        if (r > cg.graph.n()) return std::nullopt;
        detail::DenseColoring dc(cg);
        return detail::first_rainbow_cycle(cg.graph, dc.view(), r);
}

inline SaturationReport is_rainbow_saturated(const ColoredGraph& cg, int r,
                                             const VerifyOptions& opts = {}) {
        if (r < 3) throw std::invalid_argument("is_rainbow_saturated: need r >= 3");
        cg.validate();
        const SimpleGraph& g = cg.graph;
        std::vector<Edge> nonedges = detail::nonedges_of(g);
        if (!nonedges.empty() && g.n() < r)
                throw UndersizedGraphError("is_rainbow_saturated: non-complete graph of order " +
                                           std::to_string(g.n()) + " is below the cycle length " +
                                           std::to_string(r));
        detail::DenseColoring dc(cg);
        SaturationReport report = detail::saturated_dense(g, dc.view(), nonedges, r, opts);
        if (report.failing_color) report.failing_color = dc.original_color[*report.failing_color];
        return report;
}

// --- Cor 2.2 route: edge-disjoint rainbow path pairs ------------------------

struct DisjointPairWitness {
        Edge nonedge;
        std::vector<int> first;
        std::vector<int> second;
};

struct DisjointPairResult {
        bool ok = true;
        std::optional<Edge> failing_nonedge;
        std::vector<DisjointPairWitness> witnesses;
};

namespace detail {

// Lexicographically first edge-disjoint pair of rainbow r-vertex u,v-paths
// whose union is rainbow, if any.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> disjoint_pair_for(
    const SimpleGraph& g, const DenseClasses& dc, Edge uv, int r) {
        struct Entry {
                std::vector<int> path;
                EdgeBits edges;
                EdgeBits colors;
        };
        std::vector<Entry> rainbow_paths;
        for_each_path(g, uv.u, uv.v, r, {}, [&](const PathWitness& p) {
                Entry entry{p, {}, {}};
                for (size_t i = 0; i + 1 < p.size(); ++i) {
                        int idx = dc.index->index(p[i], p[i + 1]);
                        int cls = (*dc.class_of)[idx];
                        if (entry.colors.test(cls)) return true;  // not rainbow itself
                        entry.colors.set(cls);
                        entry.edges.set(idx);
                }
                rainbow_paths.push_back(std::move(entry));
                return true;
        });
        for (size_t i = 0; i < rainbow_paths.size(); ++i)
                for (size_t j = i + 1; j < rainbow_paths.size(); ++j) {
                        if ((rainbow_paths[i].edges & rainbow_paths[j].edges).any()) continue;
                        if ((rainbow_paths[i].colors & rainbow_paths[j].colors).any()) continue;
                        return std::make_pair(rainbow_paths[i].path, rainbow_paths[j].path);
                }
        return std::nullopt;
}

}  // namespace detail

// Single-nonedge probe of the disjoint-pair condition.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> find_disjoint_rainbow_pair(
    const ColoredGraph& cg, int r, Edge nonedge) {
        cg.validate();
        if (cg.graph.has_edge(nonedge)) throw std::invalid_argument("expected a nonedge");
        detail::DenseColoring dc(cg);
        return detail::disjoint_pair_for(cg.graph, dc.view(), nonedge, r);
}

// True iff every nonedge is joined by two edge-disjoint r-vertex paths whose
// union is rainbow.  Sufficient for saturation, not necessary.  Requires a
// rainbow-C_r-free input (else throws RainbowCopyError with the copy).
inline DisjointPairResult check_sufficiency_disjoint_paths(const ColoredGraph& cg, int r) {
        if (r < 3) throw std::invalid_argument("check_sufficiency_disjoint_paths: need r >= 3");
        cg.validate();
        const SimpleGraph& g = cg.graph;
        std::vector<Edge> nonedges = detail::nonedges_of(g);
        if (!nonedges.empty() && g.n() < r)
                throw UndersizedGraphError("check_sufficiency_disjoint_paths: order below cycle length");
        if (auto cyc = find_rainbow_cycle(cg, r))
                throw RainbowCopyError("input already contains a rainbow cycle", *cyc);

        detail::DenseColoring dc(cg);
        DisjointPairResult result;
        for (const Edge& uv : nonedges) {
                auto pair = detail::disjoint_pair_for(g, dc.view(), uv, r);
                if (!pair) {
                        result.ok = false;
                        result.failing_nonedge = uv;
                        return result;
                }
                result.witnesses.push_back({uv, std::move(pair->first), std::move(pair->second)});
        }
        return result;
}

// --- Cor 2.3 route: per-edge avoidance -------------------------------------

struct AvoidanceViolation {
        Edge nonedge;
        // The edge every connecting path uses; absent when no connecting path
        // of the right length exists at all.
        std::optional<Edge> edge;
};

struct AvoidanceResult {
        bool ok = true;
        std::optional<AvoidanceViolation> violation;
};

// True iff for every nonedge uv and every edge e some r-vertex path joins
// u,v without e.  Reports the first violation in (nonedge, edge) lex order.
inline AvoidanceResult check_necessity_avoidance(const SimpleGraph& g, int r) {
        if (r < 3) throw std::invalid_argument("check_necessity_avoidance: need r >= 3");
        if (r > g.n()) throw UndersizedGraphError("check_necessity_avoidance: need r <= n");
        EdgeIndexer index(g);
        if (index.count() > kMaxTrackedEdges)
                throw std::invalid_argument("verifier supports at most 512 edges");
        AvoidanceResult result;
        for (const Edge& uv : detail::nonedges_of(g)) {
                EdgeBits common;
                common.set();
                int count = 0;
                for_each_path(g, uv.u, uv.v, r, {}, [&](const PathWitness& p) {
                        EdgeBits used;
                        for (size_t i = 0; i + 1 < p.size(); ++i)
                                used.set(index.index(p[i], p[i + 1]));
                        common &= used;
                        ++count;
                        return true;
                });
                if (count == 0) {
                        result.ok = false;
                        result.violation =
                            AvoidanceViolation{uv, index.count() > 0
                                                       ? std::optional<Edge>(index.list()[0])
                                                       : std::nullopt};
                        return result;
                }
                for (int e = 0; e < index.count(); ++e) {
                        if (common.test(e)) {
                                result.ok = false;
                                result.violation = AvoidanceViolation{uv, index.list()[e]};
                                return result;
                        }
                }
        }
        return result;
}

// --- Cor 2.4 route: the rainbow-coloring iff -------------------------------

struct RainbowIffResult {
        bool ok = false;
        std::optional<std::vector<int>> cycle;  // present when the graph is not C_r-free
        std::optional<AvoidanceViolation> violation;
};

// For rainbow colorings: saturated iff C_r-free and every (nonedge, edge)
// pair admits an avoiding path.  Matches is_rainbow_saturated on a rainbow
// coloring, including the complete-graph and undersized conventions.
inline RainbowIffResult check_rainbow_iff_detail(const SimpleGraph& g, int r) {
        if (r < 3) throw std::invalid_argument("check_rainbow_iff: need r >= 3");
        bool complete = g.edge_count() == g.n() * (g.n() - 1) / 2;
        if (!complete && g.n() < r)
                throw UndersizedGraphError("check_rainbow_iff: non-complete graph below cycle length");
        RainbowIffResult result;
        if (r <= g.n()) {
                for_each_cycle(g, r, [&](const std::vector<int>& cyc) {
                        result.cycle = cyc;
                        return false;
                });
                if (result.cycle) return result;
        }
        if (complete) {
                result.ok = true;
                return result;
        }
        AvoidanceResult avoid = check_necessity_avoidance(g, r);
        result.ok = avoid.ok;
        result.violation = avoid.violation;
        return result;
}

inline bool check_rainbow_iff(const SimpleGraph& g, int r) {
        return check_rainbow_iff_detail(g, r).ok;
}

// --- Witness table replay ----------------------------------------------------

enum class WitnessMode { disjoint_rainbow_pair, edge_cover };

struct WitnessCheckResult {
        bool ok = true;
        std::string reason;
        int path_index = -1;  // offending path, when applicable
        int step = -1;        // offending step within that path, when applicable

        static WitnessCheckResult failure(std::string why, int path = -1, int at = -1) {
                return {false, std::move(why), path, at};
        }
};

inline WitnessCheckResult verify_witness_table(const SimpleGraph& g, Edge nonedge,
                                               const std::vector<std::vector<int>>& paths,
                                               WitnessMode mode) {
        if (nonedge.v >= g.n()) return WitnessCheckResult::failure("nonedge endpoint out of range");
        if (g.has_edge(nonedge)) return WitnessCheckResult::failure("claimed nonedge is an edge");
        if (paths.empty()) return WitnessCheckResult::failure("no paths listed");
        size_t expected = paths[0].size();
        if (expected < 2) return WitnessCheckResult::failure("path too short", 0);
        for (size_t k = 0; k < paths.size(); ++k) {
                const std::vector<int>& p = paths[k];
                int pk = static_cast<int>(k);
                if (p.size() != expected) return WitnessCheckResult::failure("wrong length", pk);
                bool forward = p.front() == nonedge.u && p.back() == nonedge.v;
                bool backward = p.front() == nonedge.v && p.back() == nonedge.u;
                if (!forward && !backward)
                        return WitnessCheckResult::failure("wrong endpoints", pk);
                std::uint64_t used = 0;
                for (size_t i = 0; i < p.size(); ++i) {
                        if (p[i] < 0 || p[i] >= g.n())
                                return WitnessCheckResult::failure("vertex out of range", pk,
                                                                   static_cast<int>(i));
                        if (used >> p[i] & 1)
                                return WitnessCheckResult::failure("repeated vertex", pk,
                                                                   static_cast<int>(i));
                        used |= std::uint64_t{1} << p[i];
                }
                for (size_t i = 0; i + 1 < p.size(); ++i)
                        if (!g.has_edge(p[i], p[i + 1]))
                                return WitnessCheckResult::failure("non-edge step", pk,
                                                                   static_cast<int>(i));
        }
        EdgeIndexer index(g);
        std::vector<EdgeBits> masks;
        masks.reserve(paths.size());
        for (const auto& p : paths) {
                EdgeBits bits;
                for (size_t i = 0; i + 1 < p.size(); ++i) bits.set(index.index(p[i], p[i + 1]));
                masks.push_back(bits);
        }
        if (mode == WitnessMode::disjoint_rainbow_pair) {
                if (paths.size() != 2)
                        return WitnessCheckResult::failure("pair mode needs exactly 2 paths");
                if ((masks[0] & masks[1]).any())
                        return WitnessCheckResult::failure("paths are not edge-disjoint");
                return {};
        }
        EdgeBits covered_by_all;
        covered_by_all.set();
        for (const EdgeBits& m : masks) covered_by_all &= m;
        for (int e = 0; e < index.count(); ++e)
                if (covered_by_all.test(e))
                        return WitnessCheckResult::failure(
                            "edge " + std::to_string(index.list()[e].u) + " " +
                            std::to_string(index.list()[e].v) + " avoided by no listed path");
        return {};
}

// --- Complete-graph path brute force ----------------------------------------

// For K_t: every vertex pair is joined, avoiding any one edge, by paths on t
// and t-1 vertices, and (t >= 6) by a path on t-1 vertices that also skips
// any chosen third vertex.
inline bool complete_graph_path_lemma(int t) {
        if (t < 5 || t > 9)
                throw std::invalid_argument("complete_graph_path_lemma: brute-force range is 5..9");
        SimpleGraph k = SimpleGraph::complete(t);
        for (int u = 0; u < t; ++u) {
                for (int v = u + 1; v < t; ++v) {
                        for (const Edge& e : k.edges()) {
                                PathAvoids avoid{{e}, {}};
                                if (!path_exists(k, u, v, t, avoid)) return false;
                                if (!path_exists(k, u, v, t - 1, avoid)) return false;
                                if (t < 6) continue;
                                for (int w = 0; w < t; ++w) {
                                        if (w == u || w == v) continue;
                                        PathAvoids both{{e}, {w}};
                                        if (!path_exists(k, u, v, t - 1, both)) return false;
                                }
                        }
                }
        }
        return true;
}

}  // namespace rsat
