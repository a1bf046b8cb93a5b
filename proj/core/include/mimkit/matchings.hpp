#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mimkit/graph.hpp"

namespace mimkit {

/// A set of pairwise disjoint edges, kept sorted in canonical order.
class Matching {
public:
    Matching() = default;
    /// Canonicalizes. Throws std::invalid_argument if two edges share an
    /// endpoint or an edge repeats.
    explicit Matching(std::vector<Edge> edges);
    Matching(std::initializer_list<Edge> edges) : Matching(std::vector<Edge>(edges)) {}

    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    bool covers(Vertex v) const;
    /// Endpoints of all edges as a set over 0..n-1.
    VertexSet covered(std::size_t n) const;

    /// Lexicographic on the sorted edge lists.
    auto operator<=>(const Matching&) const = default;

private:
    std::vector<Edge> edges_;
};

/// Space-separated "low-high" tokens, e.g. "0-1 3-4"; empty matching is "".
std::string to_string(const Matching& m);
/// Inverse of to_string. Throws std::invalid_argument on malformed tokens.
Matching parse_matching(std::string_view text);

/// Throws std::invalid_argument if an edge of m is absent from g.
bool is_induced_matching(const Graph& g, const Matching& m);
/// False when m is not induced; throws like is_induced_matching.
bool is_maximal_induced_matching(const Graph& g, const Matching& m);

struct DelayStats {
    std::size_t outputs = 0;
    double max_seconds = 0.0;
    double median_seconds = 0.0;
};

/// Pull-based, single-consumer producer of matchings.
class MatchingStream {
public:
    virtual ~MatchingStream() = default;

    std::optional<Matching> next();

    /// Records the wall-clock gap before every output from now on.
    void track_delay(bool on = true);
    DelayStats delay_stats() const;

protected:
    virtual std::optional<Matching> advance() = 0;

private:
    bool tracking_ = false;
    std::chrono::steady_clock::time_point last_{};
    std::vector<double> gaps_;
};

/// Ground-truth enumerator of all maximal induced matchings by backtracking
/// over edges in canonical order. Output order is lexicographic.
class OracleStream final : public MatchingStream {
public:
    explicit OracleStream(const Graph& g);

protected:
    std::optional<Matching> advance() override;

private:
    struct Frame {
        VertexSet blocked;  // N[V(M)] for the partial matching at this depth
        std::size_t cursor = 0;
        bool visited = false;
    };

    bool is_free(std::size_t edge, const VertexSet& blocked) const;
    bool doomed(const Frame& f) const;

    std::vector<Edge> edges_;
    std::vector<VertexSet> edge_closure_;  // N[low] | N[high] per edge
    std::vector<Frame> frames_;
    std::vector<std::size_t> chosen_;
    std::size_t depth_ = 0;
    bool done_ = false;
};

std::uint64_t count_mim_oracle(const Graph& g);
std::vector<Matching> all_mim_oracle(const Graph& g);

/// X (avoid) and Y (cover) for the class M_G(X, Y).
class ConstraintPair {
public:
    /// Throws std::invalid_argument when the sets overlap or universes differ.
    ConstraintPair(VertexSet avoid, VertexSet cover);

    const VertexSet& avoid() const { return avoid_; }
    const VertexSet& cover() const { return cover_; }
    bool admits(const Matching& m) const;

private:
    VertexSet avoid_;
    VertexSet cover_;
};

/// |M_G(X, Y)|. Maximality is with respect to g itself.
std::uint64_t count_mim_constrained(const Graph& g, const ConstraintPair& c);

/// Sizes of M({v},{u}), M({u},{v}), M(∅,{u,v}), M({u,v},∅).
struct PairPartition {
    std::uint64_t only_u = 0;
    std::uint64_t only_v = 0;
    std::uint64_t both = 0;
    std::uint64_t neither = 0;

    std::uint64_t total() const { return only_u + only_v + both + neither; }
    bool operator==(const PairPartition&) const = default;
};

/// Throws std::invalid_argument when u == v.
PairPartition partition_by_pair(const Graph& g, Vertex u, Vertex v);

}  // namespace mimkit
