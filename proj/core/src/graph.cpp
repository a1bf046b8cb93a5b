#include "mimkit/graph.hpp"

#include <stdexcept>

namespace mimkit {

std::string to_string(const Edge& e) {
    return std::to_string(e.low) + "-" + std::to_string(e.high);
}

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (const auto& e : edges) {
        if (e.high >= n)
            throw std::invalid_argument("edge " + to_string(e) + " out of range for n=" +
                                        std::to_string(n));
        if (e.low == e.high)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.low));
        if (!rows_[e.low].contains(e.high)) ++edge_count_;
        rows_[e.low].insert(e.high);
        rows_[e.high].insert(e.low);
    }
}

Graph::Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)) {
    std::size_t degree_sum = 0;
    for (Vertex u = 0; u < rows_.size(); ++u) {
        if (rows_[u].universe() != rows_.size())
            throw std::invalid_argument("adjacency row universe mismatch");
        if (rows_[u].contains(u))
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        for (auto v : rows_[u])
            if (!rows_[v].contains(u)) throw std::invalid_argument("asymmetric adjacency");
        degree_sum += rows_[u].count();
    }
    edge_count_ = degree_sum / 2;
}

VertexSet Graph::closed_neighbors(Vertex v) const {
    VertexSet s = rows_[v];
    s.insert(v);
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n(); ++u)
        for (auto v = rows_[u].next(u); v != VertexSet::npos; v = rows_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& a) {
    VertexSet out = a;
    for (auto v : a) out |= g.neighbors(v);
    return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& a) {
    return closed_neighborhood(g, a) - a;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& a) {
    InducedSubgraph out;
    std::vector<std::size_t> new_label(g.n(), VertexSet::npos);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (a.contains(v)) continue;
        new_label[v] = out.original.size();
        out.original.push_back(v);
    }
    std::vector<Edge> kept;
    for (const auto& e : g.edges())
        if (new_label[e.low] != VertexSet::npos && new_label[e.high] != VertexSet::npos)
            kept.emplace_back(new_label[e.low], new_label[e.high]);
    out.graph = Graph(out.original.size(), kept);
    return out;
}

bool is_triangle_free(const Graph& g) {
    for (Vertex u = 0; u < g.n(); ++u)
        for (auto v = g.neighbors(u).next(u); v != VertexSet::npos; v = g.neighbors(u).next(v))
            if (g.neighbors(u).intersects(g.neighbors(v))) return false;
    return true;
}

TwinPartition twin_partition(const Graph& g) {
    std::vector<VertexSet> blocks;
    std::vector<std::size_t> block_of(g.n(), 0);
    std::vector<Vertex> representative;
    for (Vertex v = 0; v < g.n(); ++v) {
        std::size_t b = 0;
        while (b < representative.size() && g.neighbors(representative[b]) != g.neighbors(v)) ++b;
        if (b == representative.size()) {
            representative.push_back(v);
            blocks.emplace_back(g.n());
        }
        blocks[b].insert(v);
        block_of[v] = b;
    }
    return {std::move(blocks), std::move(block_of)};
}

}  // namespace mimkit
