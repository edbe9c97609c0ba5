#pragma once

// Degree-2 taxonomy and structural audits.
//
// A degree-2 vertex u with N(u) = {v,w} is a bad root when some neighbour v
// also has degree 2 with N(v) = {u,w} and the shared apex w has degree >= 3
// (a pendant triangle); every other degree-2 vertex is a good root.  The
// apex-degree clause keeps the classification total on arbitrary graphs: in
// an isolated triangle every vertex would otherwise pair with both
// neighbours and the pairing would not be a matching.  Connected graphs on
// more than three vertices are unaffected.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsat/canonical.hpp"
#include "rsat/families.hpp"
#include "rsat/graph.hpp"

namespace rsat {

struct Degree2Classification {
        std::vector<int> good_roots;
        std::vector<int> bad_roots;
        std::vector<int> suspensions;  // apexes: non-roots with a bad root neighbour
        std::vector<std::pair<int, int>> bad_root_pairs;
};

inline Degree2Classification classify_degree_two(const SimpleGraph& g) {
        Degree2Classification out;
        std::vector<bool> bad(static_cast<size_t>(g.n()), false);
        for (int u = 0; u < g.n(); ++u) {
                if (g.degree(u) != 2) continue;
                std::uint64_t nb = g.neighbors(u);
                int v = std::countr_zero(nb);
                int w = std::countr_zero(nb & (nb - 1));
                auto pendant_partner = [&](int partner, int apex) {
                        return g.degree(partner) == 2 && g.has_edge(partner, apex) &&
                               (g.neighbors(partner) >> u & 1) && g.degree(apex) >= 3;
                };
                bool with_v = pendant_partner(v, w);
                bool with_w = pendant_partner(w, v);
                if (with_v || with_w) {
                        bad[u] = true;
                        out.bad_roots.push_back(u);
                        int partner = with_v ? v : w;
                        if (u < partner) out.bad_root_pairs.emplace_back(u, partner);
                } else {
                        out.good_roots.push_back(u);
                }
        }
        for (int w = 0; w < g.n(); ++w) {
                if (bad[w]) continue;
                std::uint64_t nb = g.neighbors(w);
                bool has_bad = false;
                while (nb && !has_bad) {
                        int v = std::countr_zero(nb);
                        nb &= nb - 1;
                        has_bad = bad[v];
                }
                if (has_bad) out.suspensions.push_back(w);
        }
        return out;
}

struct SuspensionViolation {
        int vertex;
        std::string clause;  // which requirement failed
};

struct SuspensionAudit {
        bool pass = true;
        std::vector<SuspensionViolation> violations;
};

// Checks every suspension vertex w: exactly two bad roots in N(w), degree at
// least 5, and no good roots in N(w).  These hold on saturated graphs in the
// r >= 5 regime; on arbitrary input the audit is report-only.
inline SuspensionAudit audit_suspensions(const SimpleGraph& g) {
        Degree2Classification cls = classify_degree_two(g);
        std::vector<bool> bad(static_cast<size_t>(g.n()), false);
        std::vector<bool> good(static_cast<size_t>(g.n()), false);
        for (int v : cls.bad_roots) bad[v] = true;
        for (int v : cls.good_roots) good[v] = true;
        SuspensionAudit audit;
        for (int w : cls.suspensions) {
                int bad_neighbors = 0;
                int good_neighbors = 0;
                std::uint64_t nb = g.neighbors(w);
                while (nb) {
                        int v = std::countr_zero(nb);
                        nb &= nb - 1;
                        bad_neighbors += bad[v];
                        good_neighbors += good[v];
                }
                if (bad_neighbors != 2)
                        audit.violations.push_back(
                            {w, "expected exactly 2 bad roots in N(w), found " +
                                    std::to_string(bad_neighbors)});
                if (g.degree(w) < 5)
                        audit.violations.push_back({w, "degree " + std::to_string(g.degree(w)) +
                                                           " below 5"});
                if (good_neighbors > 0)
                        audit.violations.push_back({w, "good root present in N(w)"});
        }
        audit.pass = audit.violations.empty();
        return audit;
}

struct BoundCheck {
        std::string name;
        int required;
        int actual;
        bool pass;
};

// Applicable lower bounds on the edge count of a C_r-rainbow saturated graph,
// evaluated against e(g); rationals are rounded up since e(g) is integral.
inline std::vector<BoundCheck> audit_bounds(const SimpleGraph& g, int r, bool rainbow_mode) {
        std::vector<BoundCheck> out;
        int n = g.n();
        int e = g.edge_count();
        auto add = [&](std::string name, int required) {
                out.push_back({std::move(name), required, e, e >= required});
        };
        if (r == 5 && n >= 5) add("c5_general", (3 * n - 5 + 1) / 2);
        if (r >= 6 && n >= r) add("six_fifths", (6 * n + 4) / 5);
        if (rainbow_mode && r >= 6 && n >= r) add("rainbow_four_thirds", (4 * n + 2) / 3);
        if (r >= 5 && classify_degree_two(g).good_roots.empty()) add("no_good_roots", (3 * n + 1) / 2);
        return out;
}

// --- Membership in the xi family --------------------------------------------

struct XiMembership {
        std::array<int, 4> a;
        std::array<int, 4> partition;
        // role[v] describes vertex v of the input under some isomorphism onto
        // the recovered construction, e.g. "core1", "block2_hub", "block2_ind",
        // "triangle3_0".
        std::vector<std::string> labeling;
};

namespace detail {

// Canonical parameter tuples for order n: non-increasing (partition[i], a[i])
// pairs, at least one triangle block, partition parts 3 or >= 6.
inline std::vector<std::pair<std::array<int, 4>, std::array<int, 4>>> xi_candidates(int n) {
        std::vector<std::pair<std::array<int, 4>, std::array<int, 4>>> out;
        for (int total_a = 0; 3 * total_a + 15 <= n; ++total_a) {
                int rest = n - 3 * total_a;
                // Pairs ordered lexicographically non-increasing to cut symmetry.
                std::array<int, 4> part{};
                std::array<int, 4> attach{};
                auto rec = [&](auto&& self, int i, int part_left, int a_left) -> void {
                        if (i == 4) {
                                if (part_left == 0 && a_left == 0 &&
                                    std::find(part.begin(), part.end(), 3) != part.end())
                                        out.emplace_back(part, attach);
                                return;
                        }
                        for (int p = part_left - 3 * (3 - i); p >= 3; --p) {
                                if (!valid_block_size(p)) continue;
                                if (i > 0 && p > part[i - 1]) continue;
                                for (int ai = a_left; ai >= 0; --ai) {
                                        if (i > 0 && p == part[i - 1] && ai > attach[i - 1]) continue;
                                        part[i] = p;
                                        attach[i] = ai;
                                        self(self, i + 1, part_left - p, a_left - ai);
                                }
                        }
                };
                rec(rec, 0, rest, total_a);
        }
        return out;
}

}  // namespace detail

// Decides whether g is isomorphic to a legal xi construction having at least
// one triangle block, by generate-and-test over all parameter tuples for
// |g|; returns the parameters and a role labeling on success.
inline std::optional<XiMembership> xi_membership(const SimpleGraph& g) {
        if (g.n() > 32) throw std::invalid_argument("xi_membership: supported up to n = 32");
        int n = g.n();
        if (n < 15) return std::nullopt;
        if (g.edge_count() != 2 * n - 6) return std::nullopt;  // every xi graph has 2n-6 edges
        for (const auto& [part, attach] : detail::xi_candidates(n)) {
                FamilyInstance candidate = build_instance(XiSpec{n, attach, part});
                auto iso = find_isomorphism(candidate.graph(), g);
                if (!iso) continue;
                XiMembership member;
                member.a = attach;
                member.partition = part;
                member.labeling.assign(static_cast<size_t>(n), "");
                const std::vector<int>& map = *iso;
                for (int i = 0; i < 4; ++i) member.labeling[map[i]] = "core" + std::to_string(i + 1);
                int next = 4;
                for (int i = 0; i < 4; ++i) {
                        member.labeling[map[next]] = "block" + std::to_string(i + 1) + "_hub";
                        for (int k = 1; k < part[i] - 1; ++k)
                                member.labeling[map[next + k]] =
                                    "block" + std::to_string(i + 1) + "_ind";
                        next += part[i] - 1;
                }
                for (int i = 0; i < 4; ++i)
                        for (int k = 0; k < attach[i]; ++k)
                                for (int d = 0; d < 3; ++d, ++next)
                                        member.labeling[map[next]] =
                                            "triangle" + std::to_string(i + 1) + "_" + std::to_string(k);
                return member;
        }
        return std::nullopt;
}

}  // namespace rsat
