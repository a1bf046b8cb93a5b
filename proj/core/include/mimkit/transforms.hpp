#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "mimkit/graph.hpp"

namespace mimkit {

/// Outcome of rewiring edges so that vertices become twins of a target.
struct RetargetResult {
    Graph graph;
    std::vector<Edge> removed;  // canonical order
    std::vector<Edge> added;    // canonical order
};

/// G_{u->v}: deletes ux for x in N(u)\N(v) and adds uy for y in N(v)\N(u).
/// Throws std::invalid_argument unless u != v are non-adjacent vertices of g.
RetargetResult retarget_vertex(const Graph& g, Vertex u, Vertex v);

/// G_{T(u)->v}: the same rewiring applied to every twin of u at once.
RetargetResult retarget_twin_set(const Graph& g, Vertex u, Vertex v);

/// retarget_vertex applied to each member of T(u) in ascending order; must
/// agree with retarget_twin_set.
RetargetResult retarget_twin_set_iterated(const Graph& g, Vertex u, Vertex v);

enum class Verdict { Inapplicable, Holds, Fails };
std::string_view to_string(Verdict v);

/// Counts |MIM(G)|, |MIM(forward)| and |MIM(backward)| for the pair (u, v),
/// where forward/backward are G_{u->v}/G_{v->u} (or the twin-set versions).
/// Applicable when u, v are distinct, non-adjacent and no maximal induced
/// matching covers both.
struct RetargetCountReport {
    Vertex u = 0;
    Vertex v = 0;
    Verdict verdict = Verdict::Inapplicable;
    std::uint64_t base = 0;
    std::uint64_t forward = 0;
    std::uint64_t backward = 0;
};

/// max(|MIM(G_{u->v})|, |MIM(G_{v->u})|) >= |MIM(G)|.
RetargetCountReport check_lemma2(const Graph& g, Vertex u, Vertex v);
/// Same disjunction for G_{T(u)->v} and G_{T(v)->u}.
RetargetCountReport check_lemma3(const Graph& g, Vertex u, Vertex v);

/// Triangle-freeness survives G_{T(u)->v}. Applicable when g is
/// triangle-free and u, v are distinct and non-adjacent.
struct TriangleFreeReport {
    Vertex u = 0;
    Vertex v = 0;
    Verdict verdict = Verdict::Inapplicable;
};
TriangleFreeReport check_lemma4(const Graph& g, Vertex u, Vertex v);

/// tau strictly drops under G_{T(u)->v}. Applicable when g is triangle-free
/// and u, v are distinct, non-adjacent and not twins.
struct TwinCountReport {
    Vertex u = 0;
    Vertex v = 0;
    Verdict verdict = Verdict::Inapplicable;
    std::size_t tau_before = 0;
    std::size_t tau_after = 0;
};
TwinCountReport check_lemma5(const Graph& g, Vertex u, Vertex v);

}  // namespace mimkit
