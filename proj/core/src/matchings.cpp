#include "mimkit/matchings.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace mimkit {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].low == edges_[i].high)
            throw std::invalid_argument("self-loop " + to_string(edges_[i]) + " in matching");
        for (std::size_t j = i + 1; j < edges_.size(); ++j)
            if (edges_[j].touches(edges_[i].low) || edges_[j].touches(edges_[i].high))
                throw std::invalid_argument("edges " + to_string(edges_[i]) + " and " +
                                            to_string(edges_[j]) + " share an endpoint");
    }
}

bool Matching::covers(Vertex v) const {
    return std::any_of(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.touches(v); });
}

VertexSet Matching::covered(std::size_t n) const {
    VertexSet s(n);
    for (const auto& e : edges_) {
        s.insert(e.low);
        s.insert(e.high);
    }
    return s;
}

std::string to_string(const Matching& m) {
    std::string out;
    for (const auto& e : m.edges()) {
        if (!out.empty()) out += ' ';
        out += to_string(e);
    }
    return out;
}

Matching parse_matching(std::string_view text) {
    std::vector<Edge> edges;
    std::size_t i = 0;
    auto number = [&](std::size_t& value) {
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{}) throw std::invalid_argument("malformed matching at offset " + std::to_string(i));
        i = static_cast<std::size_t>(ptr - text.data());
    };
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t a = 0, b = 0;
        number(a);
        if (i >= text.size() || text[i] != '-')
            throw std::invalid_argument("expected '-' at offset " + std::to_string(i));
        ++i;
        number(b);
        edges.emplace_back(a, b);
    }
    return Matching(std::move(edges));
}

bool is_induced_matching(const Graph& g, const Matching& m) {
    const auto& es = m.edges();
    for (const auto& e : es)
        if (e.high >= g.n() || !g.adjacent(e.low, e.high))
            throw std::invalid_argument("edge " + to_string(e) + " is not in the graph");
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (g.adjacent(es[i].low, es[j].low) || g.adjacent(es[i].low, es[j].high) ||
                g.adjacent(es[i].high, es[j].low) || g.adjacent(es[i].high, es[j].high))
                return false;
    return true;
}

bool is_maximal_induced_matching(const Graph& g, const Matching& m) {
    if (!is_induced_matching(g, m)) return false;
    // m + xy stays induced iff neither x nor y lies in N[V(m)].
    const VertexSet blocked = closed_neighborhood(g, m.covered(g.n()));
    for (const auto& e : g.edges())
        if (!blocked.contains(e.low) && !blocked.contains(e.high)) return false;
    return true;
}

std::optional<Matching> MatchingStream::next() {
    auto out = advance();
    if (tracking_ && out) {
        const auto now = std::chrono::steady_clock::now();
        gaps_.push_back(std::chrono::duration<double>(now - last_).count());
        last_ = now;
    }
    return out;
}

void MatchingStream::track_delay(bool on) {
    tracking_ = on;
    last_ = std::chrono::steady_clock::now();
}

DelayStats MatchingStream::delay_stats() const {
    DelayStats s;
    s.outputs = gaps_.size();
    if (gaps_.empty()) return s;
    std::vector<double> sorted = gaps_;
    std::sort(sorted.begin(), sorted.end());
    s.max_seconds = sorted.back();
    const std::size_t mid = sorted.size() / 2;
    s.median_seconds = sorted.size() % 2 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;
    return s;
}

OracleStream::OracleStream(const Graph& g) : edges_(g.edges()) {
    edge_closure_.reserve(edges_.size());
    for (const auto& e : edges_) edge_closure_.push_back(g.closed_neighbors(e.low) | g.closed_neighbors(e.high));
    frames_.resize(edges_.size() + 1);
    for (auto& f : frames_) f.blocked = VertexSet(g.n());
}

bool OracleStream::is_free(std::size_t edge, const VertexSet& blocked) const {
    return !blocked.contains(edges_[edge].low) && !blocked.contains(edges_[edge].high);
}

// A free edge before the cursor can only be blocked later by a chosen edge
// with an endpoint inside its closed neighborhood; if no free edge at or
// after the cursor offers one, no descendant is maximal.
bool OracleStream::doomed(const Frame& f) const {
    VertexSet reachable(f.blocked.universe());
    for (std::size_t i = f.cursor; i < edges_.size(); ++i)
        if (is_free(i, f.blocked)) {
            reachable.insert(edges_[i].low);
            reachable.insert(edges_[i].high);
        }
    for (std::size_t i = 0; i < f.cursor && i < edges_.size(); ++i)
        if (is_free(i, f.blocked) && !edge_closure_[i].intersects(reachable)) return true;
    return false;
}

std::optional<Matching> OracleStream::advance() {
    if (done_) return std::nullopt;
    while (true) {
        Frame& f = frames_[depth_];
        if (!f.visited) {
            f.visited = true;
            bool maximal = true;
            for (std::size_t i = 0; i < edges_.size() && maximal; ++i)
                if (is_free(i, f.blocked)) maximal = false;
            if (maximal || doomed(f)) {
                std::optional<Matching> out;
                if (maximal) {
                    std::vector<Edge> picked;
                    picked.reserve(chosen_.size());
                    for (auto i : chosen_) picked.push_back(edges_[i]);
                    out = Matching(std::move(picked));
                }
                if (depth_ == 0) {
                    done_ = true;
                    return out;
                }
                --depth_;
                chosen_.pop_back();
                if (out) return out;
                continue;
            }
        }
        while (f.cursor < edges_.size() && !is_free(f.cursor, f.blocked)) ++f.cursor;
        if (f.cursor == edges_.size()) {
            if (depth_ == 0) {
                done_ = true;
                return std::nullopt;
            }
            --depth_;
            chosen_.pop_back();
            continue;
        }
        const std::size_t pick = f.cursor++;
        Frame& child = frames_[depth_ + 1];
        child.blocked = f.blocked;
        child.blocked |= edge_closure_[pick];
        child.cursor = pick + 1;
        child.visited = false;
        chosen_.push_back(pick);
        ++depth_;
    }
}

std::uint64_t count_mim_oracle(const Graph& g) {
    OracleStream s(g);
    std::uint64_t c = 0;
    while (s.next()) ++c;
    return c;
}

std::vector<Matching> all_mim_oracle(const Graph& g) {
    OracleStream s(g);
    std::vector<Matching> out;
    while (auto m = s.next()) out.push_back(std::move(*m));
    return out;
}

ConstraintPair::ConstraintPair(VertexSet avoid, VertexSet cover)
    : avoid_(std::move(avoid)), cover_(std::move(cover)) {
    if (avoid_.universe() != cover_.universe())
        throw std::invalid_argument("constraint sets have different universes");
    if (avoid_.intersects(cover_)) throw std::invalid_argument("avoid and cover sets overlap");
}

bool ConstraintPair::admits(const Matching& m) const {
    const VertexSet c = m.covered(avoid_.universe());
    return !c.intersects(avoid_) && cover_.is_subset_of(c);
}

std::uint64_t count_mim_constrained(const Graph& g, const ConstraintPair& c) {
    if (c.avoid().universe() != g.n())
        throw std::invalid_argument("constraint sets do not match the graph's vertex count");
    OracleStream s(g);
    std::uint64_t count = 0;
    while (auto m = s.next())
        if (c.admits(*m)) ++count;
    return count;
}

PairPartition partition_by_pair(const Graph& g, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("partition_by_pair needs two distinct vertices");
    if (u >= g.n() || v >= g.n()) throw std::invalid_argument("vertex out of range");
    PairPartition p;
    OracleStream s(g);
    while (auto m = s.next()) {
        const bool cu = m->covers(u), cv = m->covers(v);
        if (cu && cv) ++p.both;
        else if (cu) ++p.only_u;
        else if (cv) ++p.only_v;
        else ++p.neither;
    }
    return p;
}

}  // namespace mimkit
