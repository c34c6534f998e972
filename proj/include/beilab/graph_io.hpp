#pragma once

#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "beilab/graph.hpp"

namespace beilab {

// graph6 one-line encoding (n <= 62): byte n+63, then the upper triangle in
// column order (1,2),(1,3),(2,3),(1,4),... packed 6 bits per character,
// each character offset by 63.
inline std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("to_graph6: n > 62 not supported");
    std::string s;
    s.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                s.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) s.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return s;
}

inline Graph from_graph6(std::string line) {
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw std::invalid_argument("from_graph6: empty line");
    int n = static_cast<unsigned char>(line[0]) - 63;
    if (n < 0 || n > Graph::kMaxVertices)
        throw std::invalid_argument("from_graph6: vertex count out of supported range");
    Graph g(n);
    std::size_t idx = 1;
    int acc = 0, nbits = 0;
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u) {
            if (nbits == 0) {
                if (idx >= line.size()) throw std::invalid_argument("from_graph6: truncated encoding");
                int c = static_cast<unsigned char>(line[idx++]) - 63;
                if (c < 0 || c > 63) throw std::invalid_argument("from_graph6: bad character");
                acc = c;
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) g.add_edge(u, v);
            --nbits;
        }
    return g;
}

// Text format: first non-comment line is n, following lines are `i j` edge
// pairs (1-based); `#` starts a comment. A non-comment line that does not
// start with a digit is read as graph6 instead.
inline Graph read_graph(std::istream& in) {
    std::string line;
    bool have_n = false;
    Graph g;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r\n");
        line = line.substr(a, b - a + 1);
        if (!have_n) {
            if (!std::isdigit(static_cast<unsigned char>(line[0]))) return from_graph6(line);
            g = Graph(std::stoi(line));
            have_n = true;
            continue;
        }
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v)) throw std::invalid_argument("read_graph: bad edge line: " + line);
        if (u == v || u < 1 || v < 1) throw std::invalid_argument("read_graph: bad edge " + line);
        g.add_edge(std::min(u, v), std::max(u, v));
    }
    if (!have_n) throw std::invalid_argument("read_graph: no graph found");
    return g;
}

inline Graph read_graph_string(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

inline std::string write_graph_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace beilab
