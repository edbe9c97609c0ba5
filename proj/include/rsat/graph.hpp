#pragma once

// Small undirected simple graphs on up to 64 vertices, adjacency kept as
// one 64-bit neighbour mask per vertex.  Everything in this library treats
// graphs as immutable values after construction; mutation helpers exist for
// builders and the exhaustive search only.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsat {

inline constexpr int kMaxVertices = 64;

// Endpoint pair with u < v.
struct Edge {
        int u = 0;
        int v = 0;

        Edge() = default;
        Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
                if (a == b) throw std::invalid_argument("Edge: endpoints must be distinct");
                if (a < 0 || b < 0) throw std::invalid_argument("Edge: negative vertex id");
        }

        friend bool operator==(const Edge&, const Edge&) = default;
        friend auto operator<=>(const Edge& a, const Edge& b) {
                if (auto c = a.u <=> b.u; c != 0) return c;
                return a.v <=> b.v;
        }
};

class SimpleGraph {
public:
        SimpleGraph() : n_(0) {}

        explicit SimpleGraph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
                if (n < 0 || n > kMaxVertices)
                        throw std::invalid_argument("SimpleGraph: vertex count must be in [0, 64]");
        }

        int n() const { return n_; }

        bool has_edge(int u, int v) const {
                check_vertex(u);
                check_vertex(v);
                return u != v && (adj_[u] >> v & 1);
        }

        bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

        void add_edge(int u, int v) {
                check_vertex(u);
                check_vertex(v);
                if (u == v) throw std::invalid_argument("add_edge: loop rejected");
                adj_[u] |= std::uint64_t{1} << v;
                adj_[v] |= std::uint64_t{1} << u;
        }

        void add_edge(const Edge& e) { add_edge(e.u, e.v); }

        void remove_edge(int u, int v) {
                check_vertex(u);
                check_vertex(v);
                adj_[u] &= ~(std::uint64_t{1} << v);
                adj_[v] &= ~(std::uint64_t{1} << u);
        }

        // Bit mask of N(v).
        std::uint64_t neighbors(int v) const {
                check_vertex(v);
                return adj_[v];
        }

        int degree(int v) const { return std::popcount(neighbors(v)); }

        int edge_count() const {
                int total = 0;
                for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
                return total / 2;
        }

        std::vector<Edge> edges() const {
                std::vector<Edge> out;
                out.reserve(static_cast<size_t>(edge_count()));
                for (int u = 0; u < n_; ++u) {
                        std::uint64_t higher = adj_[u] >> (u + 1) << (u + 1);
                        while (higher) {
                                int v = std::countr_zero(higher);
                                higher &= higher - 1;
                                out.push_back(Edge(u, v));
                        }
                }
                return out;
        }

        friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

        static SimpleGraph complete(int n) {
                SimpleGraph g(n);
                for (int u = 0; u < n; ++u)
                        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
                return g;
        }

        static SimpleGraph cycle(int n) {
                if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
                SimpleGraph g(n);
                for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
                return g;
        }

        static SimpleGraph path(int n) {
                SimpleGraph g(n);
                for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
                return g;
        }

private:
        int n_;
        std::vector<std::uint64_t> adj_;

        void check_vertex(int v) const {
                if (v < 0 || v >= n_)
                        throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
        }
};

inline bool is_connected(const SimpleGraph& g) {
        if (g.n() == 0) return true;
        std::uint64_t seen = 1;
        std::uint64_t frontier = 1;
        while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                std::uint64_t fresh = g.neighbors(v) & ~seen;
                seen |= fresh;
                frontier |= fresh;
        }
        return std::popcount(seen) == g.n();
}

inline int min_degree(const SimpleGraph& g) {
        if (g.n() == 0) throw std::invalid_argument("min_degree: empty graph");
        int best = kMaxVertices;
        for (int v = 0; v < g.n(); ++v) best = std::min(best, g.degree(v));
        return best;
}

// Maps the edges of one fixed graph to dense indices 0..e-1 in (u,v) order.
class EdgeIndexer {
public:
        explicit EdgeIndexer(const SimpleGraph& g)
            : n_(g.n()), list_(g.edges()), index_(static_cast<size_t>(g.n()) * g.n(), -1) {
                for (size_t i = 0; i < list_.size(); ++i) {
                        index_[list_[i].u * n_ + list_[i].v] = static_cast<int>(i);
                        index_[list_[i].v * n_ + list_[i].u] = static_cast<int>(i);
                }
        }

        int index(int u, int v) const { return index_[u * n_ + v]; }
        int index(const Edge& e) const { return index(e.u, e.v); }
        const std::vector<Edge>& list() const { return list_; }
        int count() const { return static_cast<int>(list_.size()); }

private:
        int n_;
        std::vector<Edge> list_;
        std::vector<int> index_;
};

}  // namespace rsat
