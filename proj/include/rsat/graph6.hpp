#pragma once

// Short-form graph6 codec, bit-exact: header byte n+63, then the upper
// triangle in column order (0,1),(0,2),(1,2),(0,3),... packed into 6-bit
// groups MSB-first, each group +63, zero padding.  Long form (n > 62) is
// out of scope and rejected.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rsat/graph.hpp"

namespace rsat {

class Graph6ParseError : public std::runtime_error {
public:
        Graph6ParseError(const std::string& what, size_t offset)
            : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
              offset_(offset) {}

        size_t offset() const { return offset_; }

private:
        size_t offset_;
};

inline std::string encode_graph6(const SimpleGraph& g) {
        if (g.n() > 62) throw std::invalid_argument("encode_graph6: short form needs n <= 62");
        if (g.n() < 1) throw std::invalid_argument("encode_graph6: need n >= 1");
        std::string out;
        out.push_back(static_cast<char>(g.n() + 63));
        int bits = 0;
        int value = 0;
        for (int v = 1; v < g.n(); ++v) {
                for (int u = 0; u < v; ++u) {
                        value = value << 1 | (g.has_edge(u, v) ? 1 : 0);
                        if (++bits == 6) {
                                out.push_back(static_cast<char>(value + 63));
                                bits = 0;
                                value = 0;
                        }
                }
        }
        if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
        return out;
}

inline SimpleGraph decode_graph6(std::string_view bytes) {
        if (bytes.empty()) throw Graph6ParseError("empty graph6 string", 0);
        unsigned char head = static_cast<unsigned char>(bytes[0]);
        if (head == 126) throw Graph6ParseError("long-form graph6 not supported", 0);
        if (head < 63 || head > 125) throw Graph6ParseError("invalid size byte", 0);
        int n = head - 63;
        if (n < 1) throw Graph6ParseError("graph6 order must be >= 1", 0);
        SimpleGraph g(n);
        size_t total_bits = static_cast<size_t>(n) * (n - 1) / 2;
        size_t body = (total_bits + 5) / 6;
        if (bytes.size() != 1 + body) {
                size_t at = bytes.size() < 1 + body ? bytes.size() : 1 + body;
                throw Graph6ParseError(bytes.size() < 1 + body ? "truncated graph6 string"
                                                               : "trailing bytes after graph6 data",
                                       at);
        }
        size_t bit = 0;
        int u = 0;
        int v = 1;
        for (size_t k = 1; k < bytes.size(); ++k) {
                unsigned char c = static_cast<unsigned char>(bytes[k]);
                if (c < 63 || c > 126) throw Graph6ParseError("byte outside graph6 alphabet", k);
                int group = c - 63;
                for (int shift = 5; shift >= 0; --shift, ++bit) {
                        int b = group >> shift & 1;
                        if (bit >= total_bits) {
                                if (b) throw Graph6ParseError("nonzero padding bits", k);
                                continue;
                        }
                        if (b) g.add_edge(u, v);
                        if (++u == v) {
                                u = 0;
                                ++v;
                        }
                }
        }
        return g;
}

}  // namespace rsat
