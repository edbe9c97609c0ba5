#pragma once

// Canonical labeling: the minimum adjacency bit-string over all vertex
// permutations, bits taken in column order (0,1),(0,2),(1,2),(0,3),...
// Computed by branch-and-bound over placements with two prunings that keep
// the exact minimum: a placement whose next column exceeds the incumbent is
// cut, and at each position only one representative per twin class is tried
// (swapping twins is an automorphism).  Brute-force completion otherwise.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "rsat/graph.hpp"

namespace rsat {

using AdjacencyBits = std::vector<std::uint64_t>;

namespace detail {

// Word packing puts earlier bits in higher positions so that comparing word
// vectors lexicographically compares bit strings lexicographically.
inline void set_bit(AdjacencyBits& bits, size_t pos) {
        bits[pos / 64] |= std::uint64_t{1} << (63 - pos % 64);
}

inline AdjacencyBits identity_bits(const SimpleGraph& g) {
        size_t total = static_cast<size_t>(g.n()) * (g.n() - 1) / 2;
        AdjacencyBits bits((total + 63) / 64, 0);
        size_t pos = 0;
        for (int v = 1; v < g.n(); ++v)
                for (int u = 0; u < v; ++u, ++pos)
                        if (g.has_edge(u, v)) set_bit(bits, pos);
        return bits;
}

// Twin classes: u,v are twins when N(u)\{v} = N(v)\{u}; swapping them is an
// automorphism.
inline std::vector<int> twin_classes(const SimpleGraph& g) {
        int n = g.n();
        std::vector<int> cls(static_cast<size_t>(n));
        std::iota(cls.begin(), cls.end(), 0);
        for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                        std::uint64_t umask = g.neighbors(u) & ~(std::uint64_t{1} << v);
                        std::uint64_t vmask = g.neighbors(v) & ~(std::uint64_t{1} << u);
                        if (umask == vmask && cls[v] == v) cls[v] = cls[u];
                }
        }
        return cls;
}

class CanonicalEngine {
public:
        explicit CanonicalEngine(const SimpleGraph& g)
            : g_(g), n_(g.n()), twins_(twin_classes(g)), best_(identity_bits(g)) {
                best_perm_.resize(static_cast<size_t>(n_));
                std::iota(best_perm_.begin(), best_perm_.end(), 0);
                placement_.reserve(static_cast<size_t>(n_));
        }

        // Runs the search; returns true when some permutation beats the
        // identity labeling (useful for orderly-generation checks, where the
        // caller may stop at the first improvement).
        bool run(bool stop_at_improvement) {
                stop_early_ = stop_at_improvement;
                improved_ = false;
                candidate_.assign(best_.size(), 0);
                placement_.clear();
                descend(0, false);
                return improved_;
        }

        const AdjacencyBits& best() const { return best_; }

        // perm[original vertex] = canonical position.
        std::vector<int> perm() const {
                std::vector<int> out(static_cast<size_t>(n_));
                for (int pos = 0; pos < n_; ++pos) out[best_perm_[pos]] = pos;
                return out;
        }

private:
        const SimpleGraph& g_;
        int n_;
        std::vector<int> twins_;
        AdjacencyBits best_;
        std::vector<int> best_perm_;  // canonical position -> original vertex
        AdjacencyBits candidate_;
        std::vector<int> placement_;
        std::uint64_t used_ = 0;
        bool stop_early_ = false;
        bool improved_ = false;
        bool done_ = false;

        // Writes column bits for the vertex placed at position j; returns
        // -1/0/+1 against the incumbent over that column.
        int emit_column(int j, int vertex) {
                size_t base = static_cast<size_t>(j) * (j - 1) / 2;
                int cmp = 0;
                for (int i = 0; i < j; ++i) {
                        size_t pos = base + static_cast<size_t>(i);
                        bool bit = g_.neighbors(placement_[i]) >> vertex & 1;
                        std::uint64_t mask = std::uint64_t{1} << (63 - pos % 64);
                        if (bit)
                                candidate_[pos / 64] |= mask;
                        else
                                candidate_[pos / 64] &= ~mask;
                        if (cmp == 0) {
                                bool best_bit = best_[pos / 64] & mask;
                                if (bit != best_bit) cmp = bit ? 1 : -1;
                        }
                }
                return cmp;
        }

        // `tied`: the candidate prefix equals the incumbent's prefix, so a
        // column comparison can prune.  A dropped prefix disables pruning
        // until some leaf below improves the incumbent; the new incumbent
        // then shares every placed column, so the prefix is tied again and
        // pruning resumes.  Returns true when the incumbent improved.
        bool descend(int j, bool tied) {
                if (j == n_) {
                        if (!tied && candidate_ < best_) {
                                best_ = candidate_;
                                best_perm_ = placement_;
                                improved_ = true;
                                if (stop_early_) done_ = true;
                                return true;
                        }
                        return false;
                }
                bool any_improved = false;
                std::uint64_t tried_twins = 0;
                for (int v = 0; v < n_; ++v) {
                        if (used_ >> v & 1) continue;
                        if (tried_twins >> twins_[v] & 1) continue;
                        tried_twins |= std::uint64_t{1} << twins_[v];
                        placement_.push_back(v);
                        used_ |= std::uint64_t{1} << v;
                        int cmp = emit_column(j, v);
                        if (!(tied && cmp > 0)) {
                                if (descend(j + 1, tied && cmp == 0)) {
                                        any_improved = true;
                                        tied = true;
                                }
                        }
                        used_ &= ~(std::uint64_t{1} << v);
                        placement_.pop_back();
                        if (done_) return any_improved;
                }
                return any_improved;
        }
};

}  // namespace detail

// Iterated color refinement with individualization, for orders where the
// plain minimum-string search bogs down in tie plateaus.  The canonical
// string is the minimum leaf string of the invariant search tree: refinement
// is isomorphism-invariant, the branching cell is picked by color id, and
// branches differ only by which member of that cell is individualized, so
// isomorphic graphs yield identical leaf-string sets.
namespace detail {

inline std::vector<int> stable_refinement(const SimpleGraph& g, std::vector<int> color) {
        int n = g.n();
        while (true) {
                std::vector<std::pair<std::vector<int>, int>> keyed(static_cast<size_t>(n));
                for (int v = 0; v < n; ++v) {
                        std::vector<int> key{color[v]};
                        std::uint64_t nb = g.neighbors(v);
                        while (nb) {
                                int w = std::countr_zero(nb);
                                nb &= nb - 1;
                                key.push_back(color[w]);
                        }
                        std::sort(key.begin() + 1, key.end());
                        keyed[v] = {std::move(key), v};
                }
                std::vector<std::pair<std::vector<int>, int>> sorted = keyed;
                std::sort(sorted.begin(), sorted.end());
                std::vector<int> next(static_cast<size_t>(n));
                int id = -1;
                const std::vector<int>* prev = nullptr;
                for (const auto& [key, v] : sorted) {
                        if (!prev || key != *prev) ++id;
                        next[v] = id;
                        prev = &key;
                }
                if (next == color) return color;
                color = std::move(next);
        }
}

class IrEngine {
public:
        explicit IrEngine(const SimpleGraph& g) : g_(g), twins_(twin_classes(g)) {}

        void run() {
                descend(std::vector<int>(static_cast<size_t>(g_.n()), 0));
        }

        AdjacencyBits bits;
        std::vector<int> perm;

private:
        const SimpleGraph& g_;
        std::vector<int> twins_;
        bool have_ = false;

        void leaf(const std::vector<int>& color) {
                int n = g_.n();
                size_t total = static_cast<size_t>(n) * (n - 1) / 2;
                AdjacencyBits cand((total + 63) / 64, 0);
                std::vector<int> by_pos(static_cast<size_t>(n));
                for (int v = 0; v < n; ++v) by_pos[color[v]] = v;
                size_t pos = 0;
                for (int j = 1; j < n; ++j)
                        for (int i = 0; i < j; ++i, ++pos)
                                if (g_.has_edge(by_pos[i], by_pos[j])) set_bit(cand, pos);
                if (!have_ || cand < bits) {
                        bits = std::move(cand);
                        perm = color;
                        have_ = true;
                }
        }

        void descend(std::vector<int> color) {
                color = stable_refinement(g_, std::move(color));
                int n = g_.n();
                std::vector<int> count(static_cast<size_t>(n), 0);
                for (int v = 0; v < n; ++v) ++count[color[v]];
                int cell = -1;
                for (int c = 0; c < n; ++c)
                        if (count[c] > 1) {
                                cell = c;
                                break;
                        }
                if (cell < 0) {
                        leaf(color);
                        return;
                }
                std::uint64_t tried_twins = 0;
                for (int v = 0; v < n; ++v) {
                        if (color[v] != cell) continue;
                        if (tried_twins >> twins_[v] & 1) continue;
                        tried_twins |= std::uint64_t{1} << twins_[v];
                        std::vector<int> child(static_cast<size_t>(n));
                        for (int w = 0; w < n; ++w) child[w] = 2 * color[w] + (w == v ? 0 : 1);
                        descend(std::move(child));
                }
        }
};

}  // namespace detail

struct CanonicalForm {
        AdjacencyBits bits;
        std::vector<int> perm;  // perm[original vertex] = canonical position

        friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
                return a.bits == b.bits;
        }
};

inline constexpr int kExactCanonicalMaxOrder = 8;

// Canonical labeling.  Up to order 8 this is the exact minimum adjacency
// string over all permutations; beyond that the refinement-assisted search
// tree defines the (still isomorphism-invariant) canonical string.  The
// concrete form is a module-internal contract either way.
inline CanonicalForm canonical_form(const SimpleGraph& g) {
        if (g.n() <= kExactCanonicalMaxOrder) {
                detail::CanonicalEngine engine(g);
                engine.run(false);
                return {engine.best(), engine.perm()};
        }
        detail::IrEngine engine(g);
        engine.run();
        return {std::move(engine.bits), std::move(engine.perm)};
}

// True iff the graph's own labeling already carries the canonical string,
// i.e. it is the canonical representative of its isomorphism class.
inline bool is_canonical_representative(const SimpleGraph& g) {
        if (g.n() <= kExactCanonicalMaxOrder) {
                detail::CanonicalEngine engine(g);
                return !engine.run(true);
        }
        return detail::identity_bits(g) == canonical_form(g).bits;
}

inline bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
        if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
        auto degree_sequence = [](const SimpleGraph& g) {
                std::vector<int> d(static_cast<size_t>(g.n()));
                for (int v = 0; v < g.n(); ++v) d[v] = g.degree(v);
                std::sort(d.begin(), d.end());
                return d;
        };
        if (degree_sequence(a) != degree_sequence(b)) return false;
        return canonical_form(a).bits == canonical_form(b).bits;
}

// Vertex map f with f(x)~f(y) iff x~y, from a onto b, when one exists.
inline std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& a,
                                                        const SimpleGraph& b) {
        if (a.n() != b.n() || a.edge_count() != b.edge_count()) return std::nullopt;
        CanonicalForm ca = canonical_form(a);
        CanonicalForm cb = canonical_form(b);
        if (ca.bits != cb.bits) return std::nullopt;
        std::vector<int> b_from_pos(static_cast<size_t>(b.n()));
        for (int x = 0; x < b.n(); ++x) b_from_pos[cb.perm[x]] = x;
        std::vector<int> map(static_cast<size_t>(a.n()));
        for (int x = 0; x < a.n(); ++x) map[x] = b_from_pos[ca.perm[x]];
        return map;
}

}  // namespace rsat
