#pragma once

// Bounded path and cycle enumeration.  Depth-first with a visited-set bit
// mask and the remaining-length bound; neighbours are tried in ascending
// vertex order, so witnesses stream in lexicographic order of their vertex
// sequences.

#include <cstdint>
#include <vector>

#include "rsat/graph.hpp"

namespace rsat {

using PathWitness = std::vector<int>;

struct PathAvoids {
        std::vector<Edge> edges;
        std::vector<int> vertices;
};

namespace detail {

struct AvoidMasks {
        std::vector<std::uint64_t> edge_from;  // edge_from[u] bit v set when uv is forbidden
        std::uint64_t vertices = 0;

        AvoidMasks(const SimpleGraph& g, const PathAvoids& avoids)
            : edge_from(static_cast<size_t>(g.n()), 0) {
                for (const Edge& e : avoids.edges) {
                        if (e.v >= g.n()) throw std::invalid_argument("avoid edge out of range");
                        edge_from[e.u] |= std::uint64_t{1} << e.v;
                        edge_from[e.v] |= std::uint64_t{1} << e.u;
                }
                for (int v : avoids.vertices) {
                        if (v < 0 || v >= g.n()) throw std::invalid_argument("avoid vertex out of range");
                        vertices |= std::uint64_t{1} << v;
                }
        }
};

// Returns false when the visitor asked to stop.
template <typename Fn>
bool extend_path(const SimpleGraph& g, const AvoidMasks& avoid, int target, int t,
                 std::vector<int>& path, std::uint64_t used, Fn&& visit) {
        int cur = path.back();
        std::uint64_t cand = g.neighbors(cur) & ~avoid.edge_from[cur] & ~avoid.vertices & ~used;
        if (static_cast<int>(path.size()) == t - 1) {
                if (cand >> target & 1) {
                        path.push_back(target);
                        bool keep_going = visit(const_cast<const std::vector<int>&>(path));
                        path.pop_back();
                        if (!keep_going) return false;
                }
                return true;
        }
        cand &= ~(std::uint64_t{1} << target);
        while (cand) {
                int w = std::countr_zero(cand);
                cand &= cand - 1;
                path.push_back(w);
                bool keep_going =
                    extend_path(g, avoid, target, t, path, used | std::uint64_t{1} << w, visit);
                path.pop_back();
                if (!keep_going) return false;
        }
        return true;
}

}  // namespace detail

// Visits every path on exactly t vertices from u to v that uses no forbidden
// edge or vertex.  The visitor gets the vertex sequence and returns true to
// continue, false to stop early.  Returns false iff stopped early.
template <typename Fn>
bool for_each_path(const SimpleGraph& g, int u, int v, int t, const PathAvoids& avoids, Fn&& visit) {
        if (u == v) throw std::invalid_argument("for_each_path: endpoints must differ");
        if (t < 2 || t > g.n()) throw std::invalid_argument("for_each_path: need 2 <= t <= n");
        if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
                throw std::invalid_argument("for_each_path: endpoint out of range");
        detail::AvoidMasks masks(g, avoids);
        if ((masks.vertices >> u & 1) || (masks.vertices >> v & 1))
                throw std::invalid_argument("for_each_path: endpoints may not be avoided");
        std::vector<int> path{u};
        path.reserve(static_cast<size_t>(t));
        return detail::extend_path(g, masks, v, t, path, std::uint64_t{1} << u, visit);
}

inline std::vector<PathWitness> enumerate_paths(const SimpleGraph& g, int u, int v, int t,
                                                const PathAvoids& avoids = {}) {
        std::vector<PathWitness> out;
        for_each_path(g, u, v, t, avoids, [&](const PathWitness& p) {
                out.push_back(p);
                return true;
        });
        return out;
}

inline bool path_exists(const SimpleGraph& g, int u, int v, int t, const PathAvoids& avoids = {}) {
        bool found = false;
        for_each_path(g, u, v, t, avoids, [&](const PathWitness&) {
                found = true;
                return false;
        });
        return found;
}

// True when the sequence is a valid path of the graph: pairwise-distinct
// vertices, every consecutive pair an edge.
inline bool is_valid_path(const SimpleGraph& g, const std::vector<int>& seq) {
        if (seq.size() < 2) return false;
        std::uint64_t used = 0;
        for (int v : seq) {
                if (v < 0 || v >= g.n()) return false;
                if (used >> v & 1) return false;
                used |= std::uint64_t{1} << v;
        }
        for (size_t i = 0; i + 1 < seq.size(); ++i)
                if (!g.has_edge(seq[i], seq[i + 1])) return false;
        return true;
}

namespace detail {

template <typename Fn>
bool extend_cycle(const SimpleGraph& g, int root, int r, std::vector<int>& path,
                  std::uint64_t used, Fn&& visit) {
        int cur = path.back();
        if (static_cast<int>(path.size()) == r) {
                if (g.neighbors(cur) >> root & 1) {
                        // Each cycle once: forbid the reflected traversal.
                        if (path[1] < path.back()) return visit(const_cast<const std::vector<int>&>(path));
                }
                return true;
        }
        // Root is the least vertex of the cycle, so only larger vertices extend.
        std::uint64_t cand = g.neighbors(cur) & ~used;
        cand &= ~((std::uint64_t{1} << (root + 1)) - 1);
        while (cand) {
                int w = std::countr_zero(cand);
                cand &= cand - 1;
                path.push_back(w);
                if (!extend_cycle(g, root, r, path, used | std::uint64_t{1} << w, visit)) return false;
                path.pop_back();
        }
        return true;
}

}  // namespace detail

// Visits every cycle on exactly r vertices, once each, as the lexicographically
// least vertex sequence starting at the cycle's least vertex.  Enumeration
// order is lexicographic by that sequence.
template <typename Fn>
bool for_each_cycle(const SimpleGraph& g, int r, Fn&& visit) {
        if (r < 3 || r > g.n()) return true;
        std::vector<int> path;
        path.reserve(static_cast<size_t>(r));
        for (int root = 0; root + r <= g.n(); ++root) {
                path.assign(1, root);
                if (!detail::extend_cycle(g, root, r, path, std::uint64_t{1} << root, visit))
                        return false;
        }
        return true;
}

inline bool has_cycle_of_length(const SimpleGraph& g, int r) {
        bool found = false;
        for_each_cycle(g, r, [&](const std::vector<int>&) {
                found = true;
                return false;
        });
        return found;
}

}  // namespace rsat
