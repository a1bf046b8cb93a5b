#include "mimkit/transforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mimkit/matchings.hpp"

namespace mimkit {

namespace {

void require_retargetable(const Graph& g, Vertex u, Vertex v) {
    if (u >= g.n() || v >= g.n()) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("retarget needs two distinct vertices");
    if (g.adjacent(u, v))
        throw std::invalid_argument("retarget needs non-adjacent vertices, but " + std::to_string(u) +
                                    " and " + std::to_string(v) + " are adjacent");
}

RetargetResult rewire(const Graph& g, const VertexSet& movers, Vertex u, Vertex v) {
    const VertexSet drop = g.neighbors(u) - g.neighbors(v);
    const VertexSet gain = g.neighbors(v) - g.neighbors(u);
    std::vector<VertexSet> rows;
    rows.reserve(g.n());
    for (Vertex x = 0; x < g.n(); ++x) rows.push_back(g.neighbors(x));

    RetargetResult out;
    for (auto m : movers) {
        for (auto x : drop) {
            rows[m].erase(x);
            rows[x].erase(m);
            out.removed.emplace_back(m, x);
        }
        for (auto y : gain) {
            rows[m].insert(y);
            rows[y].insert(m);
            out.added.emplace_back(m, y);
        }
    }
    std::sort(out.removed.begin(), out.removed.end());
    std::sort(out.added.begin(), out.added.end());
    out.graph = Graph(std::move(rows));
    return out;
}

bool covered_together(const Graph& g, Vertex u, Vertex v) {
    OracleStream s(g);
    while (auto m = s.next())
        if (m->covers(u) && m->covers(v)) return true;
    return false;
}

template <typename Transform>
RetargetCountReport count_check(const Graph& g, Vertex u, Vertex v, Transform transform) {
    if (u >= g.n() || v >= g.n()) throw std::invalid_argument("vertex out of range");
    RetargetCountReport r{u, v, Verdict::Inapplicable, 0, 0, 0};
    if (u == v || g.adjacent(u, v) || covered_together(g, u, v)) return r;
    r.base = count_mim_oracle(g);
    r.forward = count_mim_oracle(transform(g, u, v).graph);
    r.backward = count_mim_oracle(transform(g, v, u).graph);
    r.verdict = (r.forward >= r.base || r.backward >= r.base) ? Verdict::Holds : Verdict::Fails;
    return r;
}

}  // namespace

RetargetResult retarget_vertex(const Graph& g, Vertex u, Vertex v) {
    require_retargetable(g, u, v);
    VertexSet movers(g.n());
    movers.insert(u);
    return rewire(g, movers, u, v);
}

RetargetResult retarget_twin_set(const Graph& g, Vertex u, Vertex v) {
    require_retargetable(g, u, v);
    return rewire(g, twin_partition(g).twin_set(u), u, v);
}

RetargetResult retarget_twin_set_iterated(const Graph& g, Vertex u, Vertex v) {
    require_retargetable(g, u, v);
    RetargetResult out{g, {}, {}};
    const auto twins = twin_partition(g);
    for (auto w : twins.twin_set(u)) {
        if (w == v) continue;  // u and v are twins; v is already in place
        auto step = retarget_vertex(out.graph, w, v);
        out.graph = std::move(step.graph);
        out.removed.insert(out.removed.end(), step.removed.begin(), step.removed.end());
        out.added.insert(out.added.end(), step.added.begin(), step.added.end());
    }
    std::sort(out.removed.begin(), out.removed.end());
    std::sort(out.added.begin(), out.added.end());
    return out;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Inapplicable: return "inapplicable";
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
    }
    return "unknown";
}

RetargetCountReport check_lemma2(const Graph& g, Vertex u, Vertex v) {
    return count_check(g, u, v, retarget_vertex);
}

RetargetCountReport check_lemma3(const Graph& g, Vertex u, Vertex v) {
    return count_check(g, u, v, retarget_twin_set);
}

TriangleFreeReport check_lemma4(const Graph& g, Vertex u, Vertex v) {
    if (u >= g.n() || v >= g.n()) throw std::invalid_argument("vertex out of range");
    TriangleFreeReport r{u, v, Verdict::Inapplicable};
    if (u == v || g.adjacent(u, v) || !is_triangle_free(g)) return r;
    r.verdict = is_triangle_free(retarget_twin_set(g, u, v).graph) ? Verdict::Holds : Verdict::Fails;
    return r;
}

TwinCountReport check_lemma5(const Graph& g, Vertex u, Vertex v) {
    if (u >= g.n() || v >= g.n()) throw std::invalid_argument("vertex out of range");
    TwinCountReport r{u, v, Verdict::Inapplicable, 0, 0};
    if (u == v || g.adjacent(u, v) || !is_triangle_free(g)) return r;
    const auto before = twin_partition(g);
    r.tau_before = before.tau();
    if (before.twins(u, v)) return r;
    r.tau_after = twin_partition(retarget_twin_set(g, u, v).graph).tau();
    r.verdict = r.tau_after < r.tau_before ? Verdict::Holds : Verdict::Fails;
    return r;
}

}  // namespace mimkit
