#pragma once

// Witness table text format, hand-authorable from path tables:
//
//   # comment
//   nonedge 5 12
//   path 5 4 0 2 12
//   path 5 0 2 11 12
//   mode cover            # or: mode pair
//
// Each entry starts at a `nonedge` line and carries one or more `path`
// lines plus exactly one `mode` line.

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rsat/graph.hpp"
#include "rsat/verifier.hpp"

namespace rsat {

struct WitnessEntry {
        Edge nonedge;
        std::vector<std::vector<int>> paths;
        WitnessMode mode = WitnessMode::edge_cover;
};

class WitnessParseError : public std::runtime_error {
public:
        WitnessParseError(const std::string& what, int line)
            : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

        int line() const { return line_; }

private:
        int line_;
};

inline std::vector<WitnessEntry> parse_witness_file(std::string_view text) {
        std::vector<WitnessEntry> entries;
        std::istringstream in{std::string(text)};
        std::string raw;
        int lineno = 0;
        bool open_entry = false;
        bool have_mode = false;
        auto close_entry = [&](int at) {
                if (!open_entry) return;
                if (entries.back().paths.empty())
                        throw WitnessParseError("entry lists no paths", at);
                if (!have_mode) throw WitnessParseError("entry has no mode line", at);
        };
        while (std::getline(in, raw)) {
                ++lineno;
                std::string_view line = raw;
                if (auto hash = line.find('#'); hash != std::string_view::npos)
                        line = line.substr(0, hash);
                std::istringstream fields{std::string(line)};
                std::string keyword;
                if (!(fields >> keyword)) continue;
                if (keyword == "nonedge") {
                        close_entry(lineno);
                        int u, v;
                        if (!(fields >> u >> v))
                                throw WitnessParseError("expected 'nonedge u v'", lineno);
                        if (u < 0 || v < 0 || u == v)
                                throw WitnessParseError("invalid nonedge endpoints", lineno);
                        entries.push_back(WitnessEntry{Edge(u, v), {}, WitnessMode::edge_cover});
                        open_entry = true;
                        have_mode = false;
                } else if (keyword == "path") {
                        if (!open_entry) throw WitnessParseError("path before any nonedge", lineno);
                        std::vector<int> p;
                        int v;
                        while (fields >> v) p.push_back(v);
                        if (p.size() < 2) throw WitnessParseError("path needs >= 2 vertices", lineno);
                        entries.back().paths.push_back(std::move(p));
                } else if (keyword == "mode") {
                        if (!open_entry) throw WitnessParseError("mode before any nonedge", lineno);
                        if (have_mode) throw WitnessParseError("duplicate mode line", lineno);
                        std::string which;
                        if (!(fields >> which)) throw WitnessParseError("expected 'mode cover|pair'", lineno);
                        if (which == "cover")
                                entries.back().mode = WitnessMode::edge_cover;
                        else if (which == "pair")
                                entries.back().mode = WitnessMode::disjoint_rainbow_pair;
                        else
                                throw WitnessParseError("unknown mode '" + which + "'", lineno);
                        have_mode = true;
                } else {
                        throw WitnessParseError("unknown keyword '" + keyword + "'", lineno);
                }
        }
        close_entry(lineno);
        if (entries.empty()) throw WitnessParseError("no witness entries", lineno);
        return entries;
}

inline std::string format_witness_file(const std::vector<WitnessEntry>& entries) {
        std::ostringstream out;
        for (const WitnessEntry& entry : entries) {
                out << "nonedge " << entry.nonedge.u << ' ' << entry.nonedge.v << '\n';
                for (const auto& p : entry.paths) {
                        out << "path";
                        for (int v : p) out << ' ' << v;
                        out << '\n';
                }
                out << "mode " << (entry.mode == WitnessMode::edge_cover ? "cover" : "pair") << '\n';
        }
        return out.str();
}

}  // namespace rsat
