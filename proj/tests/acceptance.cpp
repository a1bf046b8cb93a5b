// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runs the full desk-scale sweeps, so expect a few minutes.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mimkit/enumeration.hpp"
#include "mimkit/generators.hpp"
#include "mimkit/matchings.hpp"
#include "mimkit/transforms.hpp"
#include "mimkit/verification.hpp"
#include "oracles.hpp"

using namespace mimkit;

namespace {

int failures = 0;

void report(int id, const std::string& title, const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%s; %.2fs)\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.str().c_str(),
                secs);
    std::fflush(stdout);
}

unsigned jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

void for_each_graph(std::size_t max_n, const std::function<void(const Graph&)>& fn) {
    for (std::size_t n = 1; n <= max_n; ++n) {
        ExhaustiveGraphs all(n);
        while (auto g = all.next()) fn(*g);
    }
}

std::set<Matching> collect(MatchingStream& s) {
    std::set<Matching> out;
    while (auto m = s.next()) out.insert(std::move(*m));
    return out;
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// K_{3,3} up to labeling, tested directly from the adjacency matrix: some
// 3-subset S whose edges are exactly S x (V - S).
bool k33_by_matrix(const oracle::Matrix& a) {
    for (std::size_t x = 0; x < 6; ++x)
        for (std::size_t y = x + 1; y < 6; ++y)
            for (std::size_t z = y + 1; z < 6; ++z) {
                bool ok = true;
                for (std::size_t i = 0; i < 6 && ok; ++i)
                    for (std::size_t j = i + 1; j < 6 && ok; ++j) {
                        const bool si = i == x || i == y || i == z;
                        const bool sj = j == x || j == y || j == z;
                        if (a[i][j] != (si != sj)) ok = false;
                    }
                if (ok) return true;
            }
    return false;
}

}  // namespace

int main() {
    report(1, "disjoint K33 copies have exactly 9^p maximal induced matchings", [](auto& d) {
        bool ok = true;
        double p5_seconds = 0;
        for (std::size_t p = 1; p <= 5; ++p) {
            const auto start = std::chrono::steady_clock::now();
            const Graph g = extremal_mim(p);
            CameronStream stream(g);
            std::set<Matching> seen;
            while (auto m = stream.next()) {
                if (!is_maximal_induced_matching(g, *m)) ok = false;
                seen.insert(std::move(*m));
            }
            if (p == 5) p5_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            d << "p=" << p << ":" << seen.size() << ' ';
            if (seen.size() != pow_u64(9, static_cast<unsigned>(p))) ok = false;
        }
        d << "p5=" << p5_seconds << "s";
        return ok && p5_seconds < 60.0;
    });

    report(2, "every triangle-free labeled graph on 7 vertices has mim^3 <= 3^n", [](auto& d) {
        const auto start = std::chrono::steady_clock::now();
        const auto s = verify_exhaustive(7, jobs(), nullptr);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        d << "graphs=" << s.graphs << " triangle_free=" << s.triangle_free << " violations=" << s.violations
          << " cross_check_mismatches=" << s.cross_check_mismatches << " extremal=" << s.extremal;
        // 133501 labeled triangle-free graphs on 7 vertices.
        return s.graphs == (1U << 21) && s.triangle_free == 133501 && s.violations == 0 &&
               s.cross_check_mismatches == 0 && s.errors == 0 && secs < 600.0;
    });

    report(3, "on 6 vertices mim = 9 exactly for K33-structured graphs, otherwise <= 8", [](auto& d) {
        const auto c = characterize_extremal_n6();
        // Independent recount: brute-force triangle test, library oracle
        // counts, K33 test by matrix.
        std::uint64_t tf = 0, k33 = 0, nine = 0, exceptions = 0, max_other = 0;
        ExhaustiveGraphs all(6);
        while (auto g = all.next()) {
            if (!oracle::triangle_free(*g)) continue;
            ++tf;
            const auto count = count_mim_oracle(*g);
            const bool is_k33 = k33_by_matrix(oracle::matrix(*g));
            k33 += is_k33;
            nine += count == 9;
            if (is_k33 != (count == 9)) ++exceptions;
            if (!is_k33) max_other = std::max(max_other, count);
        }
        d << "triangle_free=" << tf << " k33=" << k33 << " count9=" << nine << " exceptions=" << exceptions
          << " max_non_extremal=" << max_other;
        return c.holds() && c.triangle_free_graphs == tf && c.k33_graphs == k33 && c.extremal_graphs == nine &&
               exceptions == 0 && max_other <= 8 && k33 == 10;
    });

    report(4, "all graphs n <= 7: mim^5 <= 10^n, mis^3 <= 3^n, mis^2 <= 2^n if triangle-free", [](auto& d) {
        std::uint64_t graphs = 0, v_mim = 0, v_mis = 0, v_tf = 0;
        for_each_graph(7, [&](const Graph& g) {
            ++graphs;
            const auto mim = count_mim(g);
            const auto mis = count_mis(g);
            v_mim += !power_bound_holds(mim, 5, 10, g.n());
            v_mis += !power_bound_holds(mis, 3, 3, g.n());
            if (is_triangle_free(g)) v_tf += !power_bound_holds(mis, 2, 2, g.n());
        });
        d << "graphs=" << graphs << " mim_violations=" << v_mim << " mis_violations=" << v_mis
          << " triangle_free_mis_violations=" << v_tf;
        return v_mim == 0 && v_mis == 0 && v_tf == 0;
    });

    report(5, "oracle and line-graph-square enumerations give identical sets", [](auto& d) {
        std::uint64_t checked = 0, mismatches = 0;
        auto compare = [&](const Graph& g) {
            OracleStream o(g);
            CameronStream c(g);
            ++checked;
            if (collect(o) != collect(c)) ++mismatches;
        };
        for_each_graph(6, compare);
        const auto exhaustive = checked;
        Rng rng(5);
        for (int i = 0; i < 500; ++i) compare(oracle::random_graph(rng, 1, 12));
        d << "exhaustive=" << exhaustive << " random=" << checked - exhaustive << " mismatches=" << mismatches;
        return mismatches == 0;
    });

    report(6, "retargeting u or v (and their twin sets) never loses on both sides", [](auto& d) {
        std::uint64_t applicable = 0, failed = 0;
        auto sweep = [&](const Graph& g) {
            for (const auto& r : lemma2_reports(g)) {
                applicable += r.verdict != Verdict::Inapplicable;
                failed += r.verdict == Verdict::Fails;
            }
            for (const auto& r : lemma3_reports(g)) {
                applicable += r.verdict != Verdict::Inapplicable;
                failed += r.verdict == Verdict::Fails;
            }
        };
        for_each_graph(6, sweep);
        Rng rng(6);
        for (int i = 0; i < 2000; ++i) sweep(oracle::random_graph(rng, 2, 10));
        d << "applicable_pairs=" << applicable << " failures=" << failed;
        return failed == 0 && applicable > 0;
    });

    report(7, "twin-set retargeting keeps triangle-freeness and lowers the twin count", [](auto& d) {
        std::uint64_t graphs = 0, pairs = 0, failed = 0;
        for_each_graph(7, [&](const Graph& g) {
            if (!is_triangle_free(g)) return;
            ++graphs;
            for (const auto& r : lemma4_reports(g)) {
                pairs += r.verdict != Verdict::Inapplicable;
                failed += r.verdict == Verdict::Fails;
            }
            for (const auto& r : lemma5_reports(g)) failed += r.verdict == Verdict::Fails;
        });
        d << "triangle_free_graphs=" << graphs << " pairs=" << pairs << " failures=" << failed;
        return failed == 0 && graphs == 1 + 2 + 7 + 41 + 388 + 5789 + 133501;
    });

    report(8, "matchings through uv inject into the reduced graph's matchings", [](auto& d) {
        std::uint64_t instances = 0, with_avoid = 0, failed = 0;
        Rng rng(8);
        for_each_graph(6, [&](const Graph& g) {
            for (const auto& r : lemma6_reports(g, rng)) {
                ++instances;
                with_avoid += !r.avoid.empty();
                failed += r.verdict != Verdict::Holds || !r.injection_ok;
            }
        });
        d << "instances=" << instances << " with_nonempty_X=" << with_avoid << " failures=" << failed;
        return failed == 0 && instances > 0;
    });

    report(9, "maximum induced matching solvers match the oracle maximum", [](auto& d) {
        std::uint64_t checked = 0, mismatches = 0;
        auto compare = [&](const Graph& g) {
            std::size_t best = 0;
            OracleStream o(g);
            while (auto m = o.next()) best = std::max(best, m->size());
            const auto a = maximum_induced_matching(g, MaximumStrategy::Stream);
            const auto b = maximum_induced_matching(g, MaximumStrategy::BranchAndBound);
            ++checked;
            if (a.size() != best || b.size() != best || !is_maximal_induced_matching(g, a) ||
                !is_maximal_induced_matching(g, b))
                ++mismatches;
        };
        for_each_graph(6, compare);
        Rng rng(9);
        for (int i = 0; i < 500; ++i) compare(oracle::random_graph(rng, 1, 12));

        // Delay statistics are reported, not asserted.
        const Graph big = extremal_mim(5);
        CameronStream stream(big);
        stream.track_delay();
        while (stream.next()) {
        }
        const auto s = stream.delay_stats();
        d << "graphs=" << checked << " mismatches=" << mismatches << " delay[extremal p=5]: outputs=" << s.outputs
          << " max=" << s.max_seconds << "s median=" << s.median_seconds << "s";
        return mismatches == 0;
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
