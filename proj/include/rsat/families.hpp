#pragma once

// Builders for the saturation constructions.  Vertex numbering is canonical
// per family: hubs/core first, then blocks in parameter order, so graph6
// output and witness tables are reproducible.
//
// Catalog (colorings are rainbow unless noted):
//   friendship  F_q^p, and the bar/tilde variants that enlarge one or two blocks
//   m           M_n: friendship of triangles; even n swaps in one K_4 whose six
//               edges get a proper 3-coloring (three classes of two disjoint edges)
//   w           W_n = K_2 joined to an independent set of n-2
//   omega       four W-blocks with their primary hubs pairwise joined (the core)
//   xi          omega plus a_i triangles fully joined to core vertex i
//   s           hub joined to K_a + K_b + t triangles (C_6 upper construction)
//   gamma       two W-blocks with all four hubs pairwise joined
//   gamma_r     gamma with an extra clique joined to the four hubs
//   kstar       K_r with a private triangle hung on each base vertex
//   t           K_{r-4} with private triangles, base joined to a W-block's hubs

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rsat/coloring.hpp"
#include "rsat/graph.hpp"

namespace rsat {

class FamilyParameterError : public std::invalid_argument {
public:
        using std::invalid_argument::invalid_argument;
};

enum class FriendshipShape { plain, bar, tilde };

struct FriendshipSpec {
        FriendshipShape shape = FriendshipShape::plain;
        int q = 1;
        int p = 3;
};

struct MSpec {
        int n = 5;
};

struct WSpec {
        int n = 3;
};

struct OmegaSpec {
        int n = 15;
        std::array<int, 4> partition{6, 3, 3, 3};
};

struct XiSpec {
        int n = 15;
        std::array<int, 4> a{0, 0, 0, 0};
        std::array<int, 4> partition{6, 3, 3, 3};
};

struct SSpec {
        int n = 7;
};

struct GammaSpec {
        int n = 10;
        int n1 = 5;
        int n2 = 5;
};

struct GammaRSpec {
        int n = 11;
        int r = 8;
};

struct KStarSpec {
        int r = 3;
};

struct TSpec {
        int n = 17;
        int r = 8;
};

using FamilySpec = std::variant<FriendshipSpec, MSpec, WSpec, OmegaSpec, XiSpec, SSpec, GammaSpec,
                                GammaRSpec, KStarSpec, TSpec>;

struct FamilyInstance {
        std::string name;
        ColoredGraph colored;
        // Named vertex groups: core of omega/xi, hubs of w/gamma, base of kstar/t.
        std::vector<std::pair<std::string, std::vector<int>>> designated;

        const SimpleGraph& graph() const { return colored.graph; }
};

namespace detail {

inline void require(bool ok, const std::string& constraint) {
        if (!ok) throw FamilyParameterError("family parameter violates: " + constraint);
}

inline bool valid_block_size(int ni) { return ni == 3 || ni >= 6; }

// A W-block on an existing pair of hubs plus `size - 2` fresh vertices.
// Returns the fresh vertex ids (hub2 first, then the independent set).
inline std::vector<int> append_w_block(SimpleGraph& g, int hub1, int hub2,
                                       std::vector<int> independent) {
        g.add_edge(hub1, hub2);
        for (int x : independent) {
                g.add_edge(hub1, x);
                g.add_edge(hub2, x);
        }
        independent.insert(independent.begin(), hub2);
        return independent;
}

}  // namespace detail

// Lexicographically largest non-increasing partition of n into 4 parts, each
// part 3 or at least 6.  Used as the default block split for omega/xi.
inline std::array<int, 4> default_partition(int n) {
        if (n < 15) throw FamilyParameterError("default_partition: need n >= 15");
        for (int p1 = n - 9; p1 >= 3; --p1) {
                if (!detail::valid_block_size(p1)) continue;
                for (int p2 = std::min(p1, n - p1 - 6); p2 >= 3; --p2) {
                        if (!detail::valid_block_size(p2)) continue;
                        for (int p3 = std::min(p2, n - p1 - p2 - 3); p3 >= 3; --p3) {
                                if (!detail::valid_block_size(p3)) continue;
                                int p4 = n - p1 - p2 - p3;
                                if (p4 > p3 || !detail::valid_block_size(p4)) continue;
                                return {p1, p2, p3, p4};
                        }
                }
        }
        throw FamilyParameterError("default_partition: no valid 4-part split of " +
                                   std::to_string(n));
}

namespace detail {

inline FamilyInstance build_friendship(const FriendshipSpec& spec) {
        require(spec.p >= 3, "friendship: p >= 3");
        int min_q = spec.shape == FriendshipShape::tilde ? 2 : 1;
        require(spec.q >= min_q, "friendship: q >= 2 for tilde, q >= 1 otherwise");
        int enlarged = spec.shape == FriendshipShape::plain ? 0
                       : spec.shape == FriendshipShape::bar ? 1
                                                            : 2;
        SimpleGraph g(1 + enlarged * spec.p + (spec.q - enlarged) * (spec.p - 1));
        std::vector<int> block_sizes(static_cast<size_t>(spec.q), spec.p - 1);
        for (int i = 0; i < enlarged; ++i) block_sizes[i] = spec.p;
        int next = 1;
        for (int size : block_sizes) {
                for (int i = 0; i < size; ++i) {
                        g.add_edge(0, next + i);
                        for (int j = 0; j < i; ++j) g.add_edge(next + j, next + i);
                }
                next += size;
        }
        std::string suffix = spec.shape == FriendshipShape::plain ? ""
                             : spec.shape == FriendshipShape::bar ? "bar"
                                                                  : "tilde";
        FamilyInstance out{"friendship" + suffix + "_q" + std::to_string(spec.q) + "_p" +
                               std::to_string(spec.p),
                           with_rainbow(g),
                           {{"center", {0}}}};
        return out;
}

inline FamilyInstance build_m(const MSpec& spec) {
        require(spec.n >= 5, "m: n >= 5");
        FriendshipSpec base{spec.n % 2 == 1 ? FriendshipShape::plain : FriendshipShape::bar,
                            (spec.n - 1) / 2, 3};
        FamilyInstance out = build_friendship(base);
        out.name = "m_n" + std::to_string(spec.n);
        if (spec.n % 2 == 0) {
                // Proper 3-coloring of the unique K_4 on {0,1,2,3}: each color
                // class is a pair of disjoint edges.
                EdgeColoring recolored;
                int next = 0;
                std::array<std::pair<Edge, Edge>, 3> matched{{{Edge(0, 1), Edge(2, 3)},
                                                              {Edge(0, 2), Edge(1, 3)},
                                                              {Edge(0, 3), Edge(1, 2)}}};
                for (const auto& [a, b] : matched) {
                        recolored.set(a, next);
                        recolored.set(b, next);
                        ++next;
                }
                for (const Edge& e : out.graph().edges())
                        if (!recolored.contains(e)) recolored.set(e, next++);
                out.colored.coloring = recolored;
        }
        return out;
}

inline FamilyInstance build_w(const WSpec& spec) {
        require(spec.n >= 3, "w: n >= 3");
        SimpleGraph g(spec.n);
        std::vector<int> independent(static_cast<size_t>(spec.n - 2));
        std::iota(independent.begin(), independent.end(), 2);
        append_w_block(g, 0, 1, independent);
        return {"w_n" + std::to_string(spec.n), with_rainbow(g), {{"hubs", {0, 1}}}};
}

inline void check_omega_partition(const std::array<int, 4>& partition, int total,
                                  const std::string& who) {
        int sum = 0;
        for (int ni : partition) {
                require(valid_block_size(ni), who + ": each block size must be 3 or >= 6");
                sum += ni;
        }
        require(sum == total, who + ": block sizes must sum to " + std::to_string(total));
}

// Shared skeleton of omega/xi: the core 0..3, W-blocks in parameter order,
// then the attached triangles in parameter order.
inline FamilyInstance build_xi_graph(int n, const std::array<int, 4>& a,
                                     const std::array<int, 4>& partition, std::string name) {
        int triangles = a[0] + a[1] + a[2] + a[3];
        for (int ai : a) require(ai >= 0, "xi: a_i >= 0");
        require(n >= 3 * triangles + 15, "xi: n >= 3*(a1+a2+a3+a4) + 15");
        check_omega_partition(partition, n - 3 * triangles, "omega/xi");
        SimpleGraph g(n);
        for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
        int next = 4;
        for (int i = 0; i < 4; ++i) {
                std::vector<int> independent(static_cast<size_t>(partition[i] - 2));
                std::iota(independent.begin(), independent.end(), next + 1);
                append_w_block(g, i, next, independent);
                next += partition[i] - 1;
        }
        for (int i = 0; i < 4; ++i) {
                for (int k = 0; k < a[i]; ++k) {
                        g.add_edge(next, next + 1);
                        g.add_edge(next, next + 2);
                        g.add_edge(next + 1, next + 2);
                        for (int d = 0; d < 3; ++d) g.add_edge(i, next + d);
                        next += 3;
                }
        }
        require(next == n, "xi: block sizes exhaust the vertex set");
        return {std::move(name), with_rainbow(g), {{"core", {0, 1, 2, 3}}}};
}

inline FamilyInstance build_omega(const OmegaSpec& spec) {
        require(spec.n >= 15, "omega: n >= 15");
        std::string name = "omega_n" + std::to_string(spec.n);
        return build_xi_graph(spec.n, {0, 0, 0, 0}, spec.partition, std::move(name));
}

inline FamilyInstance build_xi(const XiSpec& spec) {
        std::string name = "xi_n" + std::to_string(spec.n) + "_a";
        for (int i = 0; i < 4; ++i) name += (i ? "-" : "") + std::to_string(spec.a[i]);
        return build_xi_graph(spec.n, spec.a, spec.partition, std::move(name));
}

inline FamilyInstance build_s(const SSpec& spec) {
        require(spec.n >= 7, "s: n >= 7");
        int a = 3;
        int b = 3;
        switch (spec.n % 3) {
                case 1: a = 3, b = 3; break;
                case 2: a = 4, b = 3; break;
                case 0: a = 4, b = 4; break;
        }
        int t = (spec.n - 7) / 3;
        SimpleGraph g(spec.n);
        int next = 1;
        std::vector<int> blocks{a, b};
        blocks.insert(blocks.end(), static_cast<size_t>(t), 3);
        for (int size : blocks) {
                for (int i = 0; i < size; ++i) {
                        g.add_edge(0, next + i);
                        for (int j = 0; j < i; ++j) g.add_edge(next + j, next + i);
                }
                next += size;
        }
        return {"s_n" + std::to_string(spec.n), with_rainbow(g), {{"hub", {0}}}};
}

// Gamma skeleton: hubs 0,1 own the first W-block, hubs 2,3 the second, all
// four pairwise adjacent; an optional clique is joined to all four hubs.
inline FamilyInstance build_gamma_graph(int n, int n1, int n2, int clique, std::string name) {
        require(n1 >= 5 && n2 >= 5, "gamma: block orders >= 5");
        SimpleGraph g(n);
        for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
        int next = 4;
        for (int i = 0; i < clique; ++i) {
                for (int h = 0; h < 4; ++h) g.add_edge(h, next + i);
                for (int j = 0; j < i; ++j) g.add_edge(next + j, next + i);
        }
        next += clique;
        for (int x = 0; x < n1 - 2; ++x, ++next) {
                g.add_edge(0, next);
                g.add_edge(1, next);
        }
        for (int x = 0; x < n2 - 2; ++x, ++next) {
                g.add_edge(2, next);
                g.add_edge(3, next);
        }
        require(next == n, "gamma: block orders exhaust the vertex set");
        return {std::move(name), with_rainbow(g), {{"hubs", {0, 1, 2, 3}}}};
}

inline FamilyInstance build_gamma(const GammaSpec& spec) {
        require(spec.n1 + spec.n2 == spec.n, "gamma: n1 + n2 = n");
        std::string name = "gamma_n" + std::to_string(spec.n) + "_" + std::to_string(spec.n1) +
                           "-" + std::to_string(spec.n2);
        return build_gamma_graph(spec.n, spec.n1, spec.n2, 0, std::move(name));
}

inline FamilyInstance build_gamma_r(const GammaRSpec& spec) {
        require(spec.r >= 8, "gamma_r: r >= 8");
        require(spec.n >= spec.r + 3, "gamma_r: n >= r + 3");
        int inner = spec.n - spec.r + 7;  // order of the two W-blocks together
        int n1 = (inner + 1) / 2;
        int n2 = inner / 2;
        std::string name = "gamma_r_n" + std::to_string(spec.n) + "_r" + std::to_string(spec.r);
        FamilyInstance out =
            build_gamma_graph(spec.n, n1, n2, spec.r - 7, std::move(name));
        return out;
}

inline FamilyInstance build_kstar(const KStarSpec& spec) {
        require(spec.r >= 3, "kstar: r >= 3");
        SimpleGraph g(3 * spec.r);
        std::vector<int> base(static_cast<size_t>(spec.r));
        std::iota(base.begin(), base.end(), 0);
        for (int i = 0; i < spec.r; ++i)
                for (int j = i + 1; j < spec.r; ++j) g.add_edge(i, j);
        for (int i = 0; i < spec.r; ++i) {
                int y = spec.r + 2 * i;
                g.add_edge(i, y);
                g.add_edge(i, y + 1);
                g.add_edge(y, y + 1);
        }
        return {"kstar_r" + std::to_string(spec.r), with_rainbow(g), {{"base", std::move(base)}}};
}

// T-style skeleton, also instantiable at r = 6, 7 where the construction is
// known to fail saturation (the verifier exposes the failing pair).
inline FamilyInstance build_t_style(int n, int r, std::string name) {
        require(r >= 6, "t: r >= 6");
        require(n >= 3 * r - 7, "t: n >= 3r - 7");
        require(n <= kMaxVertices, "t: n <= 64");
        int base = r - 4;
        SimpleGraph g(n);
        g.add_edge(0, 1);
        std::vector<int> base_ids(static_cast<size_t>(base));
        std::iota(base_ids.begin(), base_ids.end(), 2);
        for (int i = 0; i < base; ++i) {
                int w = 2 + i;
                g.add_edge(0, w);
                g.add_edge(1, w);
                for (int j = 0; j < i; ++j) g.add_edge(2 + j, w);
        }
        int next = 2 + base;
        for (int i = 0; i < base; ++i) {
                int w = 2 + i;
                g.add_edge(w, next);
                g.add_edge(w, next + 1);
                g.add_edge(next, next + 1);
                next += 2;
        }
        for (; next < n; ++next) {
                g.add_edge(0, next);
                g.add_edge(1, next);
        }
        return {std::move(name), with_rainbow(g), {{"hubs", {0, 1}}, {"base", std::move(base_ids)}}};
}

inline FamilyInstance build_t(const TSpec& spec) {
        require(spec.r >= 8, "t: r >= 8");
        return build_t_style(spec.n, spec.r,
                             "t_n" + std::to_string(spec.n) + "_r" + std::to_string(spec.r));
}

}  // namespace detail

// T-style construction with the relaxed range r >= 6; at r = 6 and 7 it is
// not C_r-rainbow saturated (negative check material, not part of FamilySpec).
inline FamilyInstance build_t_style(int n, int r) {
        return detail::build_t_style(n, r, "tstyle_n" + std::to_string(n) + "_r" + std::to_string(r));
}

inline FamilyInstance build_instance(const FamilySpec& spec) {
        return std::visit(
            [](const auto& s) -> FamilyInstance {
                    using T = std::decay_t<decltype(s)>;
                    if constexpr (std::is_same_v<T, FriendshipSpec>) return detail::build_friendship(s);
                    else if constexpr (std::is_same_v<T, MSpec>) return detail::build_m(s);
                    else if constexpr (std::is_same_v<T, WSpec>) return detail::build_w(s);
                    else if constexpr (std::is_same_v<T, OmegaSpec>) return detail::build_omega(s);
                    else if constexpr (std::is_same_v<T, XiSpec>) return detail::build_xi(s);
                    else if constexpr (std::is_same_v<T, SSpec>) return detail::build_s(s);
                    else if constexpr (std::is_same_v<T, GammaSpec>) return detail::build_gamma(s);
                    else if constexpr (std::is_same_v<T, GammaRSpec>) return detail::build_gamma_r(s);
                    else if constexpr (std::is_same_v<T, KStarSpec>) return detail::build_kstar(s);
                    else return detail::build_t(s);
            },
            spec);
}

inline ColoredGraph build(const FamilySpec& spec) { return build_instance(spec).colored; }

}  // namespace rsat
