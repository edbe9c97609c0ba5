#pragma once

// Edge colorings: a total map from the edge set to non-negative color ids.
// Color ids are arbitrary (not required contiguous); normalization is an
// explicit operation.  The text format is one "u v c" line per edge, sorted
// by (u,v), with '#' comments and blank lines ignored.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rsat/graph.hpp"

namespace rsat {

class EdgeColoring {
public:
        EdgeColoring() = default;

        void set(const Edge& e, int color) {
                if (color < 0) throw std::invalid_argument("EdgeColoring: color must be >= 0");
                assign_[e] = color;
        }

        int at(const Edge& e) const {
                auto it = assign_.find(e);
                if (it == assign_.end()) throw std::out_of_range("EdgeColoring: edge not colored");
                return it->second;
        }

        bool contains(const Edge& e) const { return assign_.count(e) > 0; }
        size_t size() const { return assign_.size(); }
        auto begin() const { return assign_.begin(); }
        auto end() const { return assign_.end(); }

        // Color classes, keyed by color id; each class keeps its edges sorted.
        std::map<int, std::vector<Edge>> classes() const {
                std::map<int, std::vector<Edge>> out;
                for (const auto& [e, c] : assign_) out[c].push_back(e);
                return out;
        }

        bool is_rainbow() const {
                for (const auto& [c, cls] : classes())
                        if (cls.size() > 1) return false;
                return true;
        }

        // Remaps colors to 0..k-1 in order of first appearance over the
        // (u,v)-sorted edge list.
        EdgeColoring normalized() const {
                EdgeColoring out;
                std::map<int, int> remap;
                for (const auto& [e, c] : assign_) {
                        auto it = remap.try_emplace(c, static_cast<int>(remap.size())).first;
                        out.set(e, it->second);
                }
                return out;
        }

        friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
        std::map<Edge, int> assign_;
};

struct ColoredGraph {
        SimpleGraph graph;
        EdgeColoring coloring;

        // Domain of the coloring must equal E(graph) exactly.
        void validate() const {
                for (const auto& [e, c] : coloring)
                        if (!graph.has_edge(e))
                                throw std::invalid_argument("coloring assigns a non-edge " +
                                                            std::to_string(e.u) + " " + std::to_string(e.v));
                if (coloring.size() != static_cast<size_t>(graph.edge_count()))
                        throw std::invalid_argument("coloring does not cover every edge");
        }
};

// Distinct colors 0..e-1 in edge-sort order.
inline EdgeColoring rainbow_coloring(const SimpleGraph& g) {
        EdgeColoring out;
        int next = 0;
        for (const Edge& e : g.edges()) out.set(e, next++);
        return out;
}

inline ColoredGraph with_rainbow(const SimpleGraph& g) { return ColoredGraph{g, rainbow_coloring(g)}; }

class ColoringParseError : public std::runtime_error {
public:
        ColoringParseError(const std::string& what, int line)
            : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

        int line() const { return line_; }

private:
        int line_;
};

inline std::string format_coloring(const EdgeColoring& coloring) {
        std::ostringstream out;
        for (const auto& [e, c] : coloring) out << e.u << ' ' << e.v << ' ' << c << '\n';
        return out.str();
}

// Parses against a known graph: rejects duplicate or non-edge lines and a
// domain that does not cover every edge.
inline EdgeColoring parse_coloring(std::string_view text, const SimpleGraph& g) {
        EdgeColoring out;
        std::istringstream in{std::string(text)};
        std::string raw;
        int lineno = 0;
        while (std::getline(in, raw)) {
                ++lineno;
                std::string_view line = raw;
                if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
                std::istringstream fields{std::string(line)};
                long long u, v, c;
                if (!(fields >> u)) continue;  // blank or comment-only line
                if (!(fields >> v >> c)) throw ColoringParseError("expected 'u v c'", lineno);
                std::string extra;
                if (fields >> extra) throw ColoringParseError("trailing tokens", lineno);
                if (u < 0 || v < 0 || u >= g.n() || v >= g.n())
                        throw ColoringParseError("vertex id out of range", lineno);
                if (u == v) throw ColoringParseError("loop is not an edge", lineno);
                if (c < 0) throw ColoringParseError("negative color", lineno);
                Edge e(static_cast<int>(u), static_cast<int>(v));
                if (!g.has_edge(e)) throw ColoringParseError("not an edge of the graph", lineno);
                if (out.contains(e)) throw ColoringParseError("duplicate edge line", lineno);
                out.set(e, static_cast<int>(c));
        }
        if (out.size() != static_cast<size_t>(g.edge_count()))
                throw ColoringParseError("coloring does not cover every edge", lineno);
        return out;
}

}  // namespace rsat
