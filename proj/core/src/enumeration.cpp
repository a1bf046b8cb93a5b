#include "mimkit/enumeration.hpp"

namespace mimkit {

LineGraphMap line_graph(const Graph& g) {
    LineGraphMap out;
    out.edge_of_vertex = g.edges();
    const std::size_t m = out.edge_of_vertex.size();
    std::vector<VertexSet> incident(g.n(), VertexSet(m));
    for (std::size_t i = 0; i < m; ++i) {
        incident[out.edge_of_vertex[i].low].insert(i);
        incident[out.edge_of_vertex[i].high].insert(i);
    }
    std::vector<VertexSet> rows;
    rows.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& e = out.edge_of_vertex[i];
        VertexSet row = incident[e.low] | incident[e.high];
        row.erase(i);
        rows.push_back(std::move(row));
    }
    out.graph = Graph(std::move(rows));
    return out;
}

Graph graph_square(const Graph& g) {
    std::vector<VertexSet> rows;
    rows.reserve(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        VertexSet row = g.neighbors(v);
        for (auto w : g.neighbors(v)) row |= g.neighbors(w);
        row.erase(v);
        rows.push_back(std::move(row));
    }
    return Graph(std::move(rows));
}

LineGraphMap line_graph_square(const Graph& g) {
    LineGraphMap l = line_graph(g);
    l.graph = graph_square(l.graph);
    return l;
}

MisStream::MisStream(const Graph& g) : g_(&g), frames_(g.n() + 1) {
    for (auto& f : frames_) f.set = VertexSet(g.n());
}

// The child (parent \ N(w)) + w of `parent` at `level` (w = level) is kept
// iff it is maximal in G[0..w] and the greedy completion of parent \ N(w)
// in G[0..w-1] reproduces parent, which makes parent its unique generator.
bool MisStream::adopts_swap(std::size_t level, const VertexSet& parent, const VertexSet& child) const {
    for (Vertex x = 0; x < level; ++x)
        if (!child.contains(x) && !g_->neighbors(x).intersects(child)) return false;
    VertexSet greedy = parent - g_->neighbors(level);
    for (Vertex x = 0; x < level; ++x)
        if (!greedy.contains(x) && !g_->neighbors(x).intersects(greedy)) {
            if (!parent.contains(x)) return false;
            greedy.insert(x);
        }
    return greedy == parent;
}

const VertexSet* MisStream::next_ref() {
    const std::size_t n = g_->n();
    while (!done_) {
        Frame& f = frames_[level_];
        if (level_ == n) {
            // Leaf: the set is maximal in the whole graph.
            if (f.stage == 0) {
                f.stage = 1;
                return &f.set;
            }
        } else if (f.stage == 0) {
            const Vertex w = level_;
            Frame& child = frames_[level_ + 1];
            child.set = f.set;
            child.stage = 0;
            if (!f.set.intersects(g_->neighbors(w))) {
                child.set.insert(w);
                f.stage = 2;
            } else {
                f.stage = 1;
            }
            ++level_;
            continue;
        } else if (f.stage == 1) {
            f.stage = 2;
            const Vertex w = level_;
            Frame& child = frames_[level_ + 1];
            child.set = f.set;
            child.set -= g_->neighbors(w);
            child.set.insert(w);
            child.stage = 0;
            if (adopts_swap(w, f.set, child.set)) {
                ++level_;
                continue;
            }
        }
        if (level_ == 0) {
            done_ = true;
            break;
        }
        --level_;
    }
    return nullptr;
}

std::optional<VertexSet> MisStream::next() {
    if (const auto* s = next_ref()) return *s;
    return std::nullopt;
}

std::uint64_t count_mis(const Graph& g) {
    MisStream s(g);
    std::uint64_t c = 0;
    while (s.next_ref()) ++c;
    return c;
}

std::vector<VertexSet> all_mis(const Graph& g) {
    MisStream s(g);
    std::vector<VertexSet> out;
    while (const auto* set = s.next_ref()) out.push_back(*set);
    return out;
}

CameronStream::CameronStream(const Graph& g) : map_(line_graph_square(g)), mis_(map_.graph) {}

std::optional<Matching> CameronStream::advance() {
    const VertexSet* set = mis_.next_ref();
    if (!set) return std::nullopt;
    std::vector<Edge> edges;
    edges.reserve(set->count());
    for (auto i : *set) edges.push_back(map_.edge_of_vertex[i]);
    return Matching(std::move(edges));
}

Strategy resolve(Strategy s, const Graph& g) {
    if (s != Strategy::Auto) return s;
    return g.n() > kAutoOracleMaxVertices ? Strategy::Cameron : Strategy::Oracle;
}

std::uint64_t count_mim(const Graph& g, Strategy s) {
    if (resolve(s, g) == Strategy::Oracle) return count_mim_oracle(g);
    return count_mis(line_graph_square(g).graph);
}

namespace {

class BranchAndBound {
public:
    explicit BranchAndBound(const Graph& g) : edges_(g.edges()) {
        for (const auto& e : edges_) closure_.push_back(g.closed_neighbors(e.low) | g.closed_neighbors(e.high));
        blocked_.assign(edges_.size() + 1, VertexSet(g.n()));
    }

    Matching solve() {
        search(0, 0);
        std::vector<Edge> picked;
        for (auto i : best_) picked.push_back(edges_[i]);
        return Matching(std::move(picked));
    }

private:
    bool is_free(std::size_t i, const VertexSet& blocked) const {
        return !blocked.contains(edges_[i].low) && !blocked.contains(edges_[i].high);
    }

    void search(std::size_t depth, std::size_t start) {
        if (chosen_.size() > best_.size()) best_ = chosen_;
        const VertexSet& blocked = blocked_[depth];
        VertexSet reachable(blocked.universe());
        for (std::size_t i = start; i < edges_.size(); ++i)
            if (is_free(i, blocked)) {
                reachable.insert(edges_[i].low);
                reachable.insert(edges_[i].high);
            }
        if (chosen_.size() + reachable.count() / 2 <= best_.size()) return;
        for (std::size_t i = start; i < edges_.size(); ++i) {
            if (!is_free(i, blocked)) continue;
            blocked_[depth + 1] = blocked;
            blocked_[depth + 1] |= closure_[i];
            chosen_.push_back(i);
            search(depth + 1, i + 1);
            chosen_.pop_back();
        }
    }

    std::vector<Edge> edges_;
    std::vector<VertexSet> closure_;
    std::vector<VertexSet> blocked_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_;
};

}  // namespace

Matching maximum_induced_matching(const Graph& g, MaximumStrategy s) {
    if (s == MaximumStrategy::BranchAndBound) return BranchAndBound(g).solve();
    CameronStream stream(g);
    Matching best;
    while (auto m = stream.next())
        if (m->size() > best.size() || (m->size() == best.size() && *m < best)) best = std::move(*m);
    return best;
}

}  // namespace mimkit
