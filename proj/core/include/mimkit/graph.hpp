#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mimkit/vertex_set.hpp"

namespace mimkit {

/// Undirected edge stored canonically with low < high.
struct Edge {
    Vertex low = 0;
    Vertex high = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : low(a < b ? a : b), high(a < b ? b : a) {}

    bool touches(Vertex v) const { return low == v || high == v; }
    auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

/// Finite simple undirected graph on vertices 0..n-1, immutable once built.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);
    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    /// Repeated edges collapse to one.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
    /// Adjacency rows must be symmetric and loop-free (checked).
    explicit Graph(std::vector<VertexSet> rows);

    std::size_t n() const { return rows_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t degree(Vertex v) const { return rows_[v].count(); }
    bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }

    /// Open neighborhood N(v).
    const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
    /// Closed neighborhood N[v].
    VertexSet closed_neighbors(Vertex v) const;

    /// Canonical edge list, sorted lexicographically by (low, high).
    std::vector<Edge> edges() const;

    VertexSet empty_set() const { return VertexSet(n()); }
    VertexSet all_vertices() const { return VertexSet::full(n()); }

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexSet> rows_;
    std::size_t edge_count_ = 0;
};

/// N[A], the union of closed neighborhoods of members of A.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& a);
/// N(A) = N[A] \ A.
VertexSet open_neighborhood(const Graph& g, const VertexSet& a);

/// G - A, relabeled 0..n-|A|-1 in ascending order of original label.
struct InducedSubgraph {
    Graph graph;
    /// original[i] is the label in the parent graph of vertex i.
    std::vector<Vertex> original;
};

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& a);

bool is_triangle_free(const Graph& g);

/// Partition of V(G) into classes of vertices with equal open neighborhoods.
class TwinPartition {
public:
    TwinPartition() = default;
    TwinPartition(std::vector<VertexSet> blocks, std::vector<std::size_t> block_of)
        : blocks_(std::move(blocks)), block_of_(std::move(block_of)) {}

    /// Blocks in ascending order of their smallest vertex.
    const std::vector<VertexSet>& blocks() const { return blocks_; }
    std::size_t tau() const { return blocks_.size(); }
    /// T_G(v).
    const VertexSet& twin_set(Vertex v) const { return blocks_[block_of_[v]]; }
    bool twins(Vertex u, Vertex v) const { return block_of_[u] == block_of_[v]; }

private:
    std::vector<VertexSet> blocks_;
    std::vector<std::size_t> block_of_;
};

TwinPartition twin_partition(const Graph& g);

}  // namespace mimkit
