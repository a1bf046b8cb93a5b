#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mimkit/graph.hpp"
#include "mimkit/random.hpp"

namespace mimkit {

// Named families. Every generator throws std::invalid_argument on a
// nonpositive parameter. Components of unions occupy consecutive label
// blocks in argument order.

Graph edgeless(std::size_t k);
Graph complete(std::size_t k);
/// Left side 0..a-1, right side a..a+b-1.
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph path(std::size_t k);
/// Requires k >= 3.
Graph cycle(std::size_t k);
/// Center 0 with k leaves.
Graph star(std::size_t k);
Graph disjoint_union(std::span<const Graph> parts);
/// p disjoint triangles.
Graph moon_moser(std::size_t p);
/// p disjoint copies of K_{3,3}.
Graph extremal_mim(std::size_t p);
/// p disjoint copies of K_5.
Graph gupta(std::size_t p);

/// Dispatches on a family name ("complete", "cycle", "extremal_mim", ...)
/// with integer parameters, as used by the command line.
Graph generate(std::string_view family, std::span<const long long> params);

/// Names accepted by generate().
std::span<const std::string_view> family_names();

/// G(n, p) with independent edges.
Graph random_graph(std::size_t n, double edge_probability, Rng& rng);

/// Every labeled simple graph on n vertices, 1 <= n <= 7. Graph number
/// `mask` contains the i-th canonical edge (lexicographic (low, high)) iff
/// bit i of mask is set.
class ExhaustiveGraphs {
public:
    static constexpr std::size_t kMaxVertices = 7;

    explicit ExhaustiveGraphs(std::size_t n);

    std::size_t vertex_count() const { return n_; }
    std::uint64_t size() const { return std::uint64_t{1} << pairs_.size(); }
    Graph at(std::uint64_t mask) const;
    std::optional<Graph> next();

private:
    std::size_t n_;
    std::vector<Edge> pairs_;
    std::uint64_t cursor_ = 0;
};

}  // namespace mimkit
