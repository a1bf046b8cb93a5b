#include "mimkit/graph6.hpp"

#include <vector>

namespace mimkit {

namespace {

std::string_view strip(std::string_view line, std::size_t& offset) {
    offset = 0;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.starts_with(kGraph6Header)) {
        line.remove_prefix(kGraph6Header.size());
        offset = kGraph6Header.size();
    }
    return line;
}

}  // namespace

bool is_graph6_blank(std::string_view line) {
    std::size_t offset = 0;
    return strip(line, offset).empty();
}

Graph from_graph6(std::string_view line) {
    std::size_t base = 0;
    line = strip(line, base);
    if (line.empty()) throw Graph6Error("empty graph6 record", base);

    auto value = [&](std::size_t i) {
        auto c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw Graph6Error("character out of range 63..126", base + i);
        return static_cast<unsigned>(c - 63);
    };

    const std::size_t n = value(0);
    if (n > kGraph6MaxVertices)
        throw Graph6Error("multi-byte size field not supported (n > 62)", base);

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (line.size() < 1 + body) throw Graph6Error("truncated body", base + line.size());
    if (line.size() > 1 + body) throw Graph6Error("unexpected trailing data", base + 1 + body);

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const unsigned chunk = value(1 + k / 6);
            if ((chunk >> (5 - k % 6)) & 1U) edges.emplace_back(i, j);
        }
    }
    if (body > 0) {
        const std::size_t pad = body * 6 - bits;
        const unsigned last = value(body);
        if (last & ((1U << pad) - 1)) throw Graph6Error("nonzero padding bits", base + body);
    }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.n();
    if (n > kGraph6MaxVertices)
        throw std::invalid_argument("graph6 encoder supports n <= 62, got " + std::to_string(n));
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::string out(1 + (bits + 5) / 6, '\0');
    out[0] = static_cast<char>(63 + n);
    std::vector<unsigned> chunks((bits + 5) / 6, 0);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j)) chunks[k / 6] |= 1U << (5 - k % 6);
    for (std::size_t c = 0; c < chunks.size(); ++c) out[1 + c] = static_cast<char>(63 + chunks[c]);
    return out;
}

}  // namespace mimkit
