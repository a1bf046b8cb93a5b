#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mimkit/graph.hpp"
#include "mimkit/matchings.hpp"

namespace mimkit {

/// A graph derived from the edges of a host graph: vertex i stands for
/// edge_of_vertex[i], listed in the host's canonical edge order.
struct LineGraphMap {
    Graph graph;
    std::vector<Edge> edge_of_vertex;
};

/// L(G): two edges adjacent iff they share an endpoint.
LineGraphMap line_graph(const Graph& g);

/// Same vertices; u ~ v iff their distance in g is 1 or 2.
Graph graph_square(const Graph& g);

/// L(G) squared, whose maximal independent sets are exactly the maximal
/// induced matchings of G.
LineGraphMap line_graph_square(const Graph& g);

/// Maximal independent sets by vertex-by-vertex extension: a node at level
/// j is a maximal independent set of G[0..j-1] and always has a child, so
/// the work between consecutive outputs is polynomial in n.
class MisStream {
public:
    /// g must outlive the stream.
    explicit MisStream(const Graph& g);

    /// Next set, or nullptr when exhausted. The pointee stays valid until
    /// the following call.
    const VertexSet* next_ref();
    std::optional<VertexSet> next();

private:
    struct Frame {
        VertexSet set;
        int stage = 0;
    };

    bool adopts_swap(std::size_t level, const VertexSet& parent, const VertexSet& child) const;

    const Graph* g_;
    std::vector<Frame> frames_;
    std::size_t level_ = 0;
    bool done_ = false;
};

std::uint64_t count_mis(const Graph& g);
std::vector<VertexSet> all_mis(const Graph& g);

/// Maximal induced matchings via maximal independent sets of L(G)^2.
class CameronStream final : public MatchingStream {
public:
    explicit CameronStream(const Graph& g);
    CameronStream(const CameronStream&) = delete;
    CameronStream& operator=(const CameronStream&) = delete;

    const LineGraphMap& derived() const { return map_; }

protected:
    std::optional<Matching> advance() override;

private:
    LineGraphMap map_;
    MisStream mis_;
};

inline CameronStream enumerate_mim_cameron(const Graph& g) { return CameronStream(g); }

enum class Strategy { Oracle, Cameron, Auto };

/// Vertex count above which Strategy::Auto selects the Cameron route.
inline constexpr std::size_t kAutoOracleMaxVertices = 12;

Strategy resolve(Strategy s, const Graph& g);

std::uint64_t count_mim(const Graph& g, Strategy s = Strategy::Cameron);

enum class MaximumStrategy { Stream, BranchAndBound };

/// A maximum induced matching; ties resolve to the lexicographically least.
Matching maximum_induced_matching(const Graph& g, MaximumStrategy s = MaximumStrategy::Stream);

}  // namespace mimkit
