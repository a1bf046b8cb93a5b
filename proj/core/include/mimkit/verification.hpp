#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mimkit/graph.hpp"
#include "mimkit/random.hpp"
#include "mimkit/transforms.hpp"

namespace mimkit {

/// count^exponent <= base^n, evaluated in exact integers.
bool power_bound_holds(std::uint64_t count, unsigned exponent, unsigned base, std::size_t n);
/// count^exponent == base^n, evaluated in exact integers.
bool power_bound_tight(std::uint64_t count, unsigned exponent, unsigned base, std::size_t n);

/// The 3^{n/3} ceiling for one graph. Graphs with a triangle are skipped
/// and carry no count.
struct BoundReport {
    std::string graph6;
    std::size_t n = 0;
    bool triangle_free = false;
    std::uint64_t mim_count = 0;
    bool bound_holds = true;
    bool extremal = false;
    /// Oracle recount, present when n <= the cross-check limit.
    std::optional<std::uint64_t> oracle_count;

    bool skipped() const { return !triangle_free; }
    bool cross_check_ok() const { return !oracle_count || *oracle_count == mim_count; }
};

inline constexpr std::size_t kCrossCheckMaxVertices = 12;

BoundReport verify_graph(const Graph& g, std::size_t cross_check_max_n = kCrossCheckMaxVertices);

/// One entry of a verification stream: a report, or a diagnostic for an
/// input line that failed to parse.
struct BoundRecord {
    std::uint64_t seq = 0;
    std::optional<BoundReport> report;
    std::string error;
};

struct BoundSummary {
    std::uint64_t graphs = 0;
    std::uint64_t triangle_free = 0;
    std::uint64_t skipped = 0;
    std::uint64_t violations = 0;
    std::uint64_t extremal = 0;
    std::uint64_t cross_check_mismatches = 0;
    std::uint64_t errors = 0;

    void add(const BoundRecord& r);
    bool clean() const { return violations == 0 && cross_check_mismatches == 0 && errors == 0; }
};

using BoundSink = std::function<void(const BoundRecord&)>;

/// Verifies every labeled graph on n vertices (1 <= n <= 7). Records reach
/// the sink in sequence order regardless of `jobs`.
BoundSummary verify_exhaustive(std::size_t n, unsigned jobs, const BoundSink& sink);

/// Verifies graph6 lines from `in`; blank and header-only lines are ignored.
BoundSummary verify_graph6_stream(std::istream& in, unsigned jobs, const BoundSink& sink);

/// |M_G(X,{u,v})| <= |MIM(G - (X u N[{u,v}]))| with the map M -> M - uv
/// checked explicitly: every image must be a distinct maximal induced
/// matching of the smaller graph.
struct Lemma6Report {
    Vertex u = 0;
    Vertex v = 0;
    VertexSet avoid;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    bool injection_ok = false;
    Verdict verdict = Verdict::Fails;
};

/// Throws std::invalid_argument if uv is not an edge or X meets {u, v}.
Lemma6Report check_lemma6(const Graph& g, const VertexSet& avoid, Vertex u, Vertex v);

/// Lemma 6 for every edge of g, once with X empty and once with a random
/// nonempty X drawn from the remaining vertices (when any remain).
std::vector<Lemma6Report> lemma6_reports(const Graph& g, Rng& rng);

// Per-graph lemma sweeps over every qualifying pair. Lemmas 2 and 3 are
// symmetric in (u, v) and use u < v; Lemmas 4 and 5 use ordered pairs.
std::vector<RetargetCountReport> lemma2_reports(const Graph& g);
std::vector<RetargetCountReport> lemma3_reports(const Graph& g);
std::vector<TriangleFreeReport> lemma4_reports(const Graph& g);
std::vector<TwinCountReport> lemma5_reports(const Graph& g);

struct ExtremalFamilyReport {
    std::size_t p = 0;
    std::size_t n = 0;
    std::uint64_t mim_count = 0;
    std::uint64_t expected = 0;
    /// False when the count came from multiplicativity instead of a full
    /// enumeration (p > kExtremalEnumerateMax).
    bool enumerated = false;
    bool extremal = false;

    bool holds() const { return mim_count == expected && extremal; }
};

inline constexpr std::size_t kExtremalEnumerateMax = 5;
inline constexpr std::size_t kExtremalMaxCopies = 20;

/// p disjoint copies of K_{3,3}; 1 <= p <= kExtremalMaxCopies.
ExtremalFamilyReport verify_extremal_family(std::size_t p);

/// K_{3,3} up to relabeling: six vertices split 3+3 with exactly the nine
/// cross edges.
bool is_k33_structured(const Graph& g);

struct ExtremalCharacterization {
    std::uint64_t triangle_free_graphs = 0;
    std::uint64_t k33_graphs = 0;
    std::uint64_t extremal_graphs = 0;
    /// Extremal but not K_{3,3}, or K_{3,3} but not extremal.
    std::uint64_t exceptions = 0;
    std::uint64_t max_non_extremal = 0;

    bool holds() const { return exceptions == 0 && max_non_extremal <= 8 && k33_graphs > 0; }
};

/// Exhausts the labeled triangle-free graphs on six vertices.
ExtremalCharacterization characterize_extremal_n6();

}  // namespace mimkit
