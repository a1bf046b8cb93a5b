#include "mimkit/verification.hpp"

#include <atomic>
#include <istream>
#include <set>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "mimkit/enumeration.hpp"
#include "mimkit/generators.hpp"
#include "mimkit/graph6.hpp"
#include "mimkit/matchings.hpp"

namespace mimkit {

namespace {

using boost::multiprecision::cpp_int;

cpp_int ipow(cpp_int base, std::size_t e) {
    cpp_int r = 1;
    while (e) {
        if (e & 1U) r *= base;
        base *= base;
        e >>= 1U;
    }
    return r;
}

// Runs `work(i)` for i in [0, count) on up to `jobs` threads.
template <typename Work>
void parallel_for(std::size_t count, unsigned jobs, Work work) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::jthread> pool;
    const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = cursor++; i < count; i = cursor++) work(i);
        });
}

constexpr std::size_t kBatch = 4096;

}  // namespace

bool power_bound_holds(std::uint64_t count, unsigned exponent, unsigned base, std::size_t n) {
    return ipow(cpp_int(count), exponent) <= ipow(cpp_int(base), n);
}

bool power_bound_tight(std::uint64_t count, unsigned exponent, unsigned base, std::size_t n) {
    return ipow(cpp_int(count), exponent) == ipow(cpp_int(base), n);
}

BoundReport verify_graph(const Graph& g, std::size_t cross_check_max_n) {
    BoundReport r;
    r.n = g.n();
    r.graph6 = g.n() <= kGraph6MaxVertices ? to_graph6(g) : std::string{};
    r.triangle_free = is_triangle_free(g);
    if (!r.triangle_free) return r;
    r.mim_count = count_mim(g, Strategy::Cameron);
    r.bound_holds = power_bound_holds(r.mim_count, 3, 3, g.n());
    r.extremal = power_bound_tight(r.mim_count, 3, 3, g.n());
    if (g.n() <= cross_check_max_n) r.oracle_count = count_mim_oracle(g);
    return r;
}

void BoundSummary::add(const BoundRecord& r) {
    if (!r.report) {
        ++errors;
        return;
    }
    ++graphs;
    if (r.report->skipped()) {
        ++skipped;
        return;
    }
    ++triangle_free;
    if (!r.report->bound_holds) ++violations;
    if (r.report->extremal) ++extremal;
    if (!r.report->cross_check_ok()) ++cross_check_mismatches;
}

BoundSummary verify_exhaustive(std::size_t n, unsigned jobs, const BoundSink& sink) {
    const ExhaustiveGraphs graphs(n);
    BoundSummary summary;
    std::vector<BoundRecord> batch;
    for (std::uint64_t start = 0; start < graphs.size(); start += kBatch) {
        const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, graphs.size() - start));
        batch.assign(len, {});
        parallel_for(len, jobs, [&](std::size_t i) {
            batch[i].seq = start + i;
            batch[i].report = verify_graph(graphs.at(start + i));
        });
        for (const auto& r : batch) {
            summary.add(r);
            if (sink) sink(r);
        }
    }
    return summary;
}

BoundSummary verify_graph6_stream(std::istream& in, unsigned jobs, const BoundSink& sink) {
    BoundSummary summary;
    std::uint64_t seq = 0;
    std::vector<std::string> lines;
    std::vector<BoundRecord> batch;
    std::string line;
    bool eof = false;
    while (!eof) {
        lines.clear();
        while (lines.size() < kBatch) {
            if (!std::getline(in, line)) {
                eof = true;
                break;
            }
            if (!is_graph6_blank(line)) lines.push_back(line);
        }
        batch.assign(lines.size(), {});
        parallel_for(lines.size(), jobs, [&](std::size_t i) {
            batch[i].seq = seq + i;
            try {
                batch[i].report = verify_graph(from_graph6(lines[i]));
            } catch (const std::exception& e) {
                batch[i].error = e.what();
            }
        });
        seq += lines.size();
        for (const auto& r : batch) {
            summary.add(r);
            if (sink) sink(r);
        }
    }
    return summary;
}

Lemma6Report check_lemma6(const Graph& g, const VertexSet& avoid, Vertex u, Vertex v) {
    if (u >= g.n() || v >= g.n() || !g.adjacent(u, v))
        throw std::invalid_argument("lemma 6 needs an edge uv of the graph");
    if (avoid.universe() != g.n()) throw std::invalid_argument("avoid set does not match the graph");
    if (avoid.contains(u) || avoid.contains(v)) throw std::invalid_argument("avoid set contains u or v");

    Lemma6Report r;
    r.u = std::min(u, v);
    r.v = std::max(u, v);
    r.avoid = avoid;

    VertexSet removed = avoid;
    removed |= g.closed_neighbors(u);
    removed |= g.closed_neighbors(v);
    const InducedSubgraph rest = delete_vertices(g, removed);
    std::vector<std::size_t> relabel(g.n(), VertexSet::npos);
    for (std::size_t i = 0; i < rest.original.size(); ++i) relabel[rest.original[i]] = i;

    VertexSet pair(g.n(), {u, v});
    const ConstraintPair cls(avoid, pair);
    const Edge uv(u, v);
    std::set<Matching> images;
    bool ok = true;
    OracleStream stream(g);
    while (auto m = stream.next()) {
        if (!cls.admits(*m)) continue;
        ++r.lhs;
        std::vector<Edge> image;
        for (const auto& e : m->edges()) {
            if (e == uv) continue;
            if (relabel[e.low] == VertexSet::npos || relabel[e.high] == VertexSet::npos) {
                ok = false;
                continue;
            }
            image.emplace_back(relabel[e.low], relabel[e.high]);
        }
        Matching mapped(std::move(image));
        if (!is_maximal_induced_matching(rest.graph, mapped)) ok = false;
        if (!images.insert(std::move(mapped)).second) ok = false;
    }
    r.rhs = count_mim_oracle(rest.graph);
    r.injection_ok = ok && images.size() == r.lhs;
    r.verdict = (r.injection_ok && r.lhs <= r.rhs) ? Verdict::Holds : Verdict::Fails;
    return r;
}

std::vector<Lemma6Report> lemma6_reports(const Graph& g, Rng& rng) {
    std::vector<Lemma6Report> out;
    for (const auto& e : g.edges()) {
        out.push_back(check_lemma6(g, g.empty_set(), e.low, e.high));
        VertexSet pool = g.all_vertices();
        pool.erase(e.low);
        pool.erase(e.high);
        if (pool.empty()) continue;
        VertexSet x(g.n());
        while (x.empty())
            for (auto w : pool)
                if (uniform_below(rng, 2)) x.insert(w);
        out.push_back(check_lemma6(g, x, e.low, e.high));
    }
    return out;
}

std::vector<RetargetCountReport> lemma2_reports(const Graph& g) {
    std::vector<RetargetCountReport> out;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) out.push_back(check_lemma2(g, u, v));
    return out;
}

std::vector<RetargetCountReport> lemma3_reports(const Graph& g) {
    std::vector<RetargetCountReport> out;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) out.push_back(check_lemma3(g, u, v));
    return out;
}

std::vector<TriangleFreeReport> lemma4_reports(const Graph& g) {
    std::vector<TriangleFreeReport> out;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < g.n(); ++v)
            if (u != v) out.push_back(check_lemma4(g, u, v));
    return out;
}

std::vector<TwinCountReport> lemma5_reports(const Graph& g) {
    std::vector<TwinCountReport> out;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < g.n(); ++v)
            if (u != v) out.push_back(check_lemma5(g, u, v));
    return out;
}

ExtremalFamilyReport verify_extremal_family(std::size_t p) {
    if (p < 1 || p > kExtremalMaxCopies)
        throw std::invalid_argument("extremal family supports 1 <= p <= " + std::to_string(kExtremalMaxCopies));
    ExtremalFamilyReport r;
    r.p = p;
    r.n = 6 * p;
    r.expected = 1;
    for (std::size_t i = 0; i < p; ++i) r.expected *= 9;
    if (p <= kExtremalEnumerateMax) {
        CameronStream stream(extremal_mim(p));
        while (stream.next()) ++r.mim_count;
        r.enumerated = true;
    } else {
        // |MIM| is multiplicative over components.
        const std::uint64_t component = count_mim(extremal_mim(1), Strategy::Cameron);
        r.mim_count = 1;
        for (std::size_t i = 0; i < p; ++i) r.mim_count *= component;
    }
    r.extremal = power_bound_tight(r.mim_count, 3, 3, r.n);
    return r;
}

bool is_k33_structured(const Graph& g) {
    if (g.n() != 6 || g.edge_count() != 9) return false;
    const VertexSet& right = g.neighbors(0);
    if (right.count() != 3) return false;
    const VertexSet left = right.complement();
    for (auto l : left)
        if (g.neighbors(l) != right) return false;
    return true;
}

ExtremalCharacterization characterize_extremal_n6() {
    ExtremalCharacterization c;
    ExhaustiveGraphs graphs(6);
    while (auto g = graphs.next()) {
        if (!is_triangle_free(*g)) continue;
        ++c.triangle_free_graphs;
        const std::uint64_t count = count_mim(*g, Strategy::Cameron);
        const bool extremal = power_bound_tight(count, 3, 3, 6);
        const bool k33 = is_k33_structured(*g);
        if (k33) ++c.k33_graphs;
        if (extremal) ++c.extremal_graphs;
        else c.max_non_extremal = std::max(c.max_non_extremal, count);
        if (extremal != k33) ++c.exceptions;
    }
    return c;
}

}  // namespace mimkit
