#pragma once

// Exhaustive computation of the cycle rainbow saturation number at desk
// scale.  Candidate graphs are scanned as lexicographic edge subsets with
// isomorphism rejection by orderly generation: a labeled graph is kept iff
// it is the canonical representative of its class.  Pruning uses only the
// necessary conditions (connected, minimum degree 2), so the search is a
// ground-truth oracle.  Edge budgets start at m = n since connectivity plus
// minimum degree 2 forces at least n edges.
//
// The subset space is walked in fixed-size rank blocks; within a block the
// work splits across workers by rank range and merges in rank order, so the
// value and certificate set are identical for any worker count.  A resume
// point (m, next rank, counters, pending hits) is offered to a checkpoint
// sink after every block.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rsat/canonical.hpp"
#include "rsat/coloring.hpp"
#include "rsat/graph.hpp"
#include "rsat/graph6.hpp"
#include "rsat/partitions.hpp"
#include "rsat/verifier.hpp"

namespace rsat {

class BudgetError : public std::runtime_error {
public:
        using std::runtime_error::runtime_error;
};

enum class SearchMode { all_colorings, rainbow_only };

struct SearchTask {
        int n = 5;
        int r = 4;
        SearchMode mode = SearchMode::all_colorings;
        int min_m = -1;                 // default n
        int max_m = -1;                 // default C(n,2)
        int jobs = 1;
        int coloring_edge_budget = 12;  // Bell-number guard for all_colorings
        bool override_n_cap = false;

        int default_n_cap() const { return mode == SearchMode::all_colorings ? 7 : 10; }

        void validate() const {
                if (r < 4 || r > n) throw std::invalid_argument("search: need 4 <= r <= n");
                if (n > (override_n_cap ? 16 : default_n_cap()))
                        throw BudgetError("search: n exceeds the mode's default cap of " +
                                          std::to_string(default_n_cap()) +
                                          " (raise the cap explicitly to proceed)");
        }
};

struct SearchCertificate {
        std::string graph6;
        std::string coloring;  // coloring text format

        friend bool operator==(const SearchCertificate&, const SearchCertificate&) = default;
};

struct SearchResult {
        std::optional<int> value;  // absent: undetermined within the edge budget
        std::vector<SearchCertificate> certificates;
        std::uint64_t graphs_examined = 0;  // canonical representatives scanned
        std::uint64_t colorings_examined = 0;
        int last_m_completed = -1;
};

// Mid-run state: scan is about to process `next_rank` of the m-edge subsets.
struct SearchCheckpoint {
        int m = 0;
        std::uint64_t next_rank = 0;
        std::uint64_t graphs_examined = 0;
        std::uint64_t colorings_examined = 0;
        std::vector<std::pair<std::uint64_t, SearchCertificate>> pending_hits;
};

using CheckpointSink = std::function<void(const SearchCheckpoint&)>;

// Colorings of g, one per set partition of its (u,v)-sorted edge list, in
// restricted-growth-string order.  Refuses when the Bell number would be
// astronomical, reporting the budget needed.
template <typename Fn>
void for_each_coloring(const SimpleGraph& g, int edge_budget, Fn&& visit) {
        int e = g.edge_count();
        if (e > edge_budget)
                throw BudgetError("coloring enumeration over " + std::to_string(e) +
                                  " edges exceeds the budget of " + std::to_string(edge_budget) +
                                  " (needs Bell(" + std::to_string(e) +
                                  ") = " + std::to_string(bell_number(e)) + " partitions)");
        std::vector<Edge> edges = g.edges();
        for_each_set_partition(e, [&](const std::vector<int>& rgs) {
                EdgeColoring coloring;
                for (int i = 0; i < e; ++i) coloring.set(edges[i], rgs[i]);
                return visit(const_cast<const EdgeColoring&>(coloring));
        });
}

namespace detail {

inline std::uint64_t binomial(int n, int k);

}  // namespace detail

// One canonical representative per isomorphism class of connected graphs on
// n vertices with m edges and minimum degree >= 2, in ascending rank of the
// representative's edge subset.  The visitor returns true to continue.
template <typename Fn>
void enumerate_graphs(int n, int m, Fn&& visit) {
        if (n < 1 || n > 16) throw std::invalid_argument("enumerate_graphs: supported n is 1..16");
        std::vector<Edge> all_edges;
        for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) all_edges.push_back(Edge(u, v));
        if (m < 0 || m > static_cast<int>(all_edges.size()))
                throw std::invalid_argument("enumerate_graphs: m out of range");
        std::vector<int> picks(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) picks[i] = i;
        std::uint64_t total = detail::binomial(static_cast<int>(all_edges.size()), m);
        for (std::uint64_t rank = 0; rank < total; ++rank) {
                if (rank > 0) {
                        int i = m - 1;
                        while (picks[i] == static_cast<int>(all_edges.size()) - m + i) --i;
                        ++picks[i];
                        for (int j = i + 1; j < m; ++j) picks[j] = picks[j - 1] + 1;
                }
                SimpleGraph g(n);
                for (int p : picks) g.add_edge(all_edges[static_cast<size_t>(p)]);
                if (min_degree(g) < 2 || !is_connected(g)) continue;
                if (!is_canonical_representative(g)) continue;
                if (!visit(const_cast<const SimpleGraph&>(g))) return;
        }
}

namespace detail {

inline std::uint64_t binomial(int n, int k) {
        if (k < 0 || k > n) return 0;
        std::uint64_t out = 1;
        for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
        return out;
}

// Lexicographic rank -> k-subset of {0..n-1}.
inline std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(k));
        int next = 0;
        for (int slot = k; slot > 0; --slot) {
                for (int v = next;; ++v) {
                        std::uint64_t block = binomial(n - v - 1, slot - 1);
                        if (rank < block) {
                                out.push_back(v);
                                next = v + 1;
                                break;
                        }
                        rank -= block;
                }
        }
        return out;
}

inline void advance_combination(std::vector<int>& picks, int universe) {
        int m = static_cast<int>(picks.size());
        int i = m - 1;
        while (picks[i] == universe - m + i) --i;
        ++picks[i];
        for (int j = i + 1; j < m; ++j) picks[j] = picks[j - 1] + 1;
}

// Decides whether the graph admits a saturated coloring (all_colorings mode)
// or whether its rainbow coloring is saturated (rainbow_only).  Reuses the
// dense verifier path; colorings_examined accumulates into `colorings`.
inline std::optional<EdgeColoring> saturating_coloring(const SimpleGraph& g, const SearchTask& task,
                                                       std::uint64_t& colorings) {
        if (task.mode == SearchMode::rainbow_only) {
                ++colorings;
                if (check_rainbow_iff(g, task.r)) return rainbow_coloring(g);
                return std::nullopt;
        }
        EdgeIndexer index(g);
        std::vector<Edge> nonedges = nonedges_of(g);
        std::vector<Edge> edges = g.edges();
        int e = static_cast<int>(edges.size());
        if (e > task.coloring_edge_budget)
                throw BudgetError("coloring enumeration over " + std::to_string(e) +
                                  " edges exceeds the budget of " +
                                  std::to_string(task.coloring_edge_budget) + " (needs Bell(" +
                                  std::to_string(e) + ") = " + std::to_string(bell_number(e)) +
                                  " partitions)");
        std::optional<EdgeColoring> witness;
        std::vector<int> class_of(static_cast<size_t>(e));
        for_each_set_partition(e, [&](const std::vector<int>& rgs) {
                ++colorings;
                int class_count = 0;
                for (int i = 0; i < e; ++i) {
                        class_of[static_cast<size_t>(index.index(edges[i]))] = rgs[i];
                        class_count = std::max(class_count, rgs[i] + 1);
                }
                DenseClasses view{&index, &class_of, class_count};
                if (saturated_dense(g, view, nonedges, task.r, {}).saturated()) {
                        EdgeColoring coloring;
                        for (int i = 0; i < e; ++i) coloring.set(edges[i], rgs[i]);
                        witness = std::move(coloring);
                        return false;
                }
                return true;
        });
        return witness;
}

struct BlockOutcome {
        std::uint64_t graphs = 0;
        std::uint64_t colorings = 0;
        std::vector<std::pair<std::uint64_t, SearchCertificate>> hits;  // keyed by subset rank
};

// Scans ranks [begin, end) of the m-edge subsets.
inline BlockOutcome scan_range(const SearchTask& task, int m, const std::vector<Edge>& all_edges,
                               std::uint64_t begin, std::uint64_t end) {
        BlockOutcome out;
        if (begin >= end) return out;
        int universe = static_cast<int>(all_edges.size());
        std::vector<int> picks = unrank_combination(universe, m, begin);
        for (std::uint64_t rank = begin; rank < end; ++rank) {
                if (rank > begin) advance_combination(picks, universe);
                SimpleGraph g(task.n);
                for (int p : picks) g.add_edge(all_edges[static_cast<size_t>(p)]);
                if (min_degree(g) < 2 || !is_connected(g)) continue;
                if (!is_canonical_representative(g)) continue;
                ++out.graphs;
                if (auto coloring = saturating_coloring(g, task, out.colorings))
                        out.hits.emplace_back(rank, SearchCertificate{encode_graph6(g),
                                                                      format_coloring(*coloring)});
        }
        return out;
}

}  // namespace detail

// Smallest edge count m admitting a saturated certificate, scanning m upward
// from n; collects every canonical graph class that works at that m.  Every
// certificate is re-verified from its serialized form before being reported.
// An exhausted budget yields an absent value, never a fabricated one.
inline SearchResult compute_rsat(const SearchTask& task,
                                 std::optional<SearchCheckpoint> resume = std::nullopt,
                                 const CheckpointSink& checkpoint = nullptr) {
        task.validate();
        SearchResult result;
        std::vector<Edge> all_edges;
        for (int u = 0; u < task.n; ++u)
                for (int v = u + 1; v < task.n; ++v) all_edges.push_back(Edge(u, v));
        int universe = static_cast<int>(all_edges.size());
        int max_m = task.max_m < 0 ? universe : std::min(task.max_m, universe);
        int min_m = task.min_m < 0 ? task.n : task.min_m;
        constexpr std::uint64_t kBlock = 1 << 16;

        int start_m = min_m;
        std::uint64_t start_rank = 0;
        std::vector<std::pair<std::uint64_t, SearchCertificate>> hits;
        if (resume) {
                start_m = resume->m;
                start_rank = resume->next_rank;
                result.graphs_examined = resume->graphs_examined;
                result.colorings_examined = resume->colorings_examined;
                hits = resume->pending_hits;
                result.last_m_completed = start_m - 1;
        }

        for (int m = start_m; m <= max_m; ++m) {
                std::uint64_t total = detail::binomial(universe, m);
                std::uint64_t cursor = m == start_m ? start_rank : 0;
                if (m != start_m) hits.clear();
                int jobs = std::max(1, task.jobs);
                while (cursor < total) {
                        std::uint64_t block_end = std::min<std::uint64_t>(total, cursor + kBlock);
                        std::vector<detail::BlockOutcome> outcomes(static_cast<size_t>(jobs));
                        if (jobs == 1) {
                                outcomes[0] = detail::scan_range(task, m, all_edges, cursor, block_end);
                        } else {
                                std::uint64_t span = block_end - cursor;
                                std::uint64_t chunk = (span + jobs - 1) / jobs;
                                std::vector<std::thread> workers;
                                for (int w = 0; w < jobs; ++w) {
                                        std::uint64_t b = std::min(block_end, cursor + w * chunk);
                                        std::uint64_t e = std::min(block_end, b + chunk);
                                        workers.emplace_back([&, w, b, e] {
                                                outcomes[static_cast<size_t>(w)] =
                                                    detail::scan_range(task, m, all_edges, b, e);
                                        });
                                }
                                for (auto& t : workers) t.join();
                        }
                        for (auto& block : outcomes) {
                                result.graphs_examined += block.graphs;
                                result.colorings_examined += block.colorings;
                                hits.insert(hits.end(), block.hits.begin(), block.hits.end());
                        }
                        cursor = block_end;
                        if (checkpoint)
                                checkpoint(SearchCheckpoint{m, cursor, result.graphs_examined,
                                                            result.colorings_examined, hits});
                }
                std::sort(hits.begin(), hits.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                result.last_m_completed = m;
                if (!hits.empty()) {
                        result.value = m;
                        for (auto& [rank, cert] : hits) {
                                // Re-verify through the serialized certificate.
                                SimpleGraph g = decode_graph6(cert.graph6);
                                ColoredGraph cg{g, parse_coloring(cert.coloring, g)};
                                if (!is_rainbow_saturated(cg, task.r).saturated())
                                        throw std::logic_error(
                                            "search certificate failed re-verification");
                                result.certificates.push_back(std::move(cert));
                        }
                        return result;
                }
        }
        return result;  // value absent: undetermined within [min_m, max_m]
}

}  // namespace rsat
