#include "sumbalaban/graph6.hpp"

namespace sumbalaban {

std::string encode_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder) {
        throw Graph6Error("graph6 encoding is limited to " + std::to_string(kGraph6MaxOrder) + " vertices, got " +
                          std::to_string(n));
    }
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int value = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

Graph decode_graph6(std::string_view text) {
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw Graph6Error("empty graph6 string");
    for (const char c : text) {
        const auto u = static_cast<unsigned char>(c);
        if (u < 63 || u > 126) {
            throw Graph6Error("graph6 character outside 63..126: code " + std::to_string(u));
        }
    }
    const std::size_t n = static_cast<unsigned char>(text[0]) - 63;
    if (n > kGraph6MaxOrder) {
        throw Graph6Error("graph6 sizes above " + std::to_string(kGraph6MaxOrder) + " are not supported");
    }
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t groups = (bits + 5) / 6;
    if (text.size() - 1 < groups) throw Graph6Error("truncated graph6 bit stream");
    if (text.size() - 1 > groups) throw Graph6Error("graph6 string has trailing characters");

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int group = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if (((group >> (5 - static_cast<int>(k % 6))) & 1) != 0) edges.push_back({i, j});
        }
    }
    if (bits % 6 != 0) {
        const int last = static_cast<unsigned char>(text.back()) - 63;
        if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw Graph6Error("graph6 padding bits must be zero");
    }
    return Graph::from_edge_list(n, edges);
}

std::size_t for_each_graph6(std::istream& in, const std::function<void(const Graph&, std::string_view)>& visit) {
    std::size_t count = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view text = line;
        if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
        if (text.empty()) continue;
        visit(decode_graph6(text), text);
        ++count;
    }
    return count;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    for_each_graph6(in, [&](const Graph& g, std::string_view) { out.push_back(g); });
    return out;
}

}  // namespace sumbalaban
