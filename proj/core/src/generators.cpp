#include "mimkit/generators.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace mimkit {

namespace {

void require_positive(std::size_t k, const char* what) {
    if (k == 0) throw std::invalid_argument(std::string(what) + " requires a positive parameter");
}

Graph copies(const Graph& g, std::size_t p) {
    std::vector<Graph> parts(p, g);
    return disjoint_union(parts);
}

constexpr std::array<std::string_view, 10> kFamilies = {
    "edgeless", "complete",     "complete_bipartite", "path",  "cycle",
    "star",     "moon_moser",   "extremal_mim",       "gupta", "random"};

}  // namespace

Graph edgeless(std::size_t k) {
    require_positive(k, "edgeless");
    return Graph(k);
}

Graph complete(std::size_t k) {
    require_positive(k, "complete");
    std::vector<Edge> e;
    for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v) e.emplace_back(u, v);
    return Graph(k, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    require_positive(a, "complete_bipartite");
    require_positive(b, "complete_bipartite");
    std::vector<Edge> e;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) e.emplace_back(u, v);
    return Graph(a + b, e);
}

Graph path(std::size_t k) {
    require_positive(k, "path");
    std::vector<Edge> e;
    for (Vertex u = 0; u + 1 < k; ++u) e.emplace_back(u, u + 1);
    return Graph(k, e);
}

Graph cycle(std::size_t k) {
    if (k < 3) throw std::invalid_argument("cycle requires at least 3 vertices");
    std::vector<Edge> e;
    for (Vertex u = 0; u < k; ++u) e.emplace_back(u, (u + 1) % k);
    return Graph(k, e);
}

Graph star(std::size_t k) {
    require_positive(k, "star");
    std::vector<Edge> e;
    for (Vertex v = 1; v <= k; ++v) e.emplace_back(0, v);
    return Graph(k + 1, e);
}

Graph disjoint_union(std::span<const Graph> parts) {
    std::size_t n = 0;
    std::vector<Edge> e;
    for (const auto& part : parts) {
        for (const auto& edge : part.edges()) e.emplace_back(edge.low + n, edge.high + n);
        n += part.n();
    }
    return Graph(n, e);
}

Graph moon_moser(std::size_t p) {
    require_positive(p, "moon_moser");
    return copies(complete(3), p);
}

Graph extremal_mim(std::size_t p) {
    require_positive(p, "extremal_mim");
    return copies(complete_bipartite(3, 3), p);
}

Graph gupta(std::size_t p) {
    require_positive(p, "gupta");
    return copies(complete(5), p);
}

std::span<const std::string_view> family_names() { return kFamilies; }

Graph generate(std::string_view family, std::span<const long long> params) {
    auto arity = [&](std::size_t want) {
        if (params.size() != want)
            throw std::invalid_argument(std::string(family) + " takes " + std::to_string(want) +
                                        " parameter(s), got " + std::to_string(params.size()));
    };
    auto param = [&](std::size_t i) {
        if (params[i] <= 0)
            throw std::invalid_argument(std::string(family) + ": parameters must be positive");
        return static_cast<std::size_t>(params[i]);
    };

    if (family == "edgeless") return arity(1), edgeless(param(0));
    if (family == "complete") return arity(1), complete(param(0));
    if (family == "complete_bipartite") return arity(2), complete_bipartite(param(0), param(1));
    if (family == "path") return arity(1), path(param(0));
    if (family == "cycle") return arity(1), cycle(param(0));
    if (family == "star") return arity(1), star(param(0));
    if (family == "moon_moser") return arity(1), moon_moser(param(0));
    if (family == "extremal_mim") return arity(1), extremal_mim(param(0));
    if (family == "gupta") return arity(1), gupta(param(0));
    if (family == "random") {
        // random N PERCENT SEED
        arity(3);
        if (params[1] < 0 || params[1] > 100 || params[2] < 0)
            throw std::invalid_argument("random: expected N PERCENT(0..100) SEED");
        Rng rng(static_cast<std::uint64_t>(params[2]));
        return random_graph(param(0), static_cast<double>(params[1]) / 100.0, rng);
    }
    throw std::invalid_argument("unknown graph family '" + std::string(family) + "'");
}

Graph random_graph(std::size_t n, double edge_probability, Rng& rng) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (uniform_unit(rng) < edge_probability) e.emplace_back(u, v);
    return Graph(n, e);
}

ExhaustiveGraphs::ExhaustiveGraphs(std::size_t n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("exhaustive enumeration supports 1 <= n <= 7, got " +
                                    std::to_string(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
}

Graph ExhaustiveGraphs::at(std::uint64_t mask) const {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        if ((mask >> i) & 1U) e.push_back(pairs_[i]);
    return Graph(n_, e);
}

std::optional<Graph> ExhaustiveGraphs::next() {
    if (cursor_ >= size()) return std::nullopt;
    return at(cursor_++);
}

}  // namespace mimkit
