#include <doctest.h>

#include <sstream>

#include "mimkit/enumeration.hpp"
#include "mimkit/generators.hpp"
#include "mimkit/graph6.hpp"
#include "mimkit/report_json.hpp"
#include "mimkit/verification.hpp"
#include "oracles.hpp"

using namespace mimkit;

TEST_CASE("exact power comparisons") {
    CHECK(power_bound_tight(9, 3, 3, 6));
    CHECK(power_bound_holds(9, 3, 3, 6));
    CHECK_FALSE(power_bound_holds(10, 3, 3, 6));
    CHECK(power_bound_holds(5, 3, 3, 5));   // 125 <= 243
    CHECK_FALSE(power_bound_tight(5, 3, 3, 5));
    // 3^62 overflows 64 bits; 3^{62/3} is about 7.25e9.
    CHECK(power_bound_holds(7'200'000'000ULL, 3, 3, 62));
    CHECK_FALSE(power_bound_holds(7'300'000'000ULL, 3, 3, 62));
    CHECK(power_bound_tight(10, 5, 10, 5));
}

TEST_CASE("bound reports for named graphs") {
    const auto k33 = verify_graph(complete_bipartite(3, 3));
    CHECK(k33.triangle_free);
    CHECK(k33.mim_count == 9);
    CHECK(k33.bound_holds);
    CHECK(k33.extremal);
    CHECK(k33.cross_check_ok());

    const auto c5 = verify_graph(cycle(5));
    CHECK(c5.mim_count == 5);
    CHECK(c5.bound_holds);
    CHECK_FALSE(c5.extremal);

    const auto k3 = verify_graph(complete(3));
    CHECK(k3.skipped());
    CHECK_FALSE(k3.triangle_free);

    CHECK_FALSE(verify_graph(cycle(20)).oracle_count);
}

TEST_CASE("graph6 stream verification keeps input order") {
    std::ostringstream text;
    text << ">>graph6<<" << to_graph6(complete_bipartite(3, 3)) << "\n"
         << "\n"
         << to_graph6(complete(3)) << "\n"
         << "D?\n"
         << to_graph6(cycle(5)) << "\n";
    for (unsigned jobs : {1U, 4U}) {
        std::istringstream in(text.str());
        std::vector<BoundRecord> records;
        const auto summary = verify_graph6_stream(in, jobs, [&](const BoundRecord& r) { records.push_back(r); });
        REQUIRE(records.size() == 4);
        for (std::size_t i = 0; i < records.size(); ++i) CHECK(records[i].seq == i);
        CHECK(records[0].report->extremal);
        CHECK(records[1].report->skipped());
        CHECK_FALSE(records[2].report);
        CHECK(records[2].error.find("truncated") != std::string::npos);
        CHECK(records[3].report->mim_count == 5);
        CHECK(summary.graphs == 3);
        CHECK(summary.errors == 1);
        CHECK(summary.skipped == 1);
        CHECK(summary.extremal == 1);
        CHECK(summary.violations == 0);
        CHECK_FALSE(summary.clean());
    }
}

TEST_CASE("triangle-free graph6 streams beyond the exhaustive range") {
    // Random triangle-free graphs on 8..12 vertices, round-tripped through
    // graph6 text like an external generator's output.
    Rng rng(8);
    std::ostringstream text;
    std::size_t produced = 0;
    while (produced < 300) {
        const Graph g = oracle::random_graph(rng, 8, 12);
        if (!is_triangle_free(g)) continue;
        text << to_graph6(g) << '\n';
        ++produced;
    }
    std::istringstream in(text.str());
    std::size_t cross_checked = 0;
    const auto summary = verify_graph6_stream(in, 2, [&](const BoundRecord& r) {
        REQUIRE(r.report);
        if (r.report->oracle_count) ++cross_checked;
        // Hujter-Tuza: mis^2 <= 2^n for triangle-free graphs.
        const Graph g = from_graph6(r.report->graph6);
        CHECK(power_bound_holds(count_mis(g), 2, 2, g.n()));
    });
    CHECK(summary.triangle_free == 300);
    CHECK(summary.violations == 0);
    CHECK(summary.cross_check_mismatches == 0);
    CHECK(cross_checked == 300);
}

TEST_CASE("exhaustive verification on small n") {
    const auto s5 = verify_exhaustive(5, 2, nullptr);
    CHECK(s5.graphs == 1024);
    CHECK(s5.triangle_free == 388);
    CHECK(s5.violations == 0);
    CHECK(s5.cross_check_mismatches == 0);
    CHECK(s5.clean());
    CHECK_THROWS_AS(verify_exhaustive(8, 1, nullptr), std::invalid_argument);
}

TEST_CASE("lemma 6 on named graphs") {
    const Graph k33 = complete_bipartite(3, 3);
    const auto r = check_lemma6(k33, VertexSet(6), 0, 3);
    CHECK(r.lhs == 1);
    CHECK(r.rhs == 1);  // G' has no vertices; its only matching is empty
    CHECK(r.injection_ok);
    CHECK(r.verdict == Verdict::Holds);

    const auto c6 = check_lemma6(cycle(6), VertexSet(6), 0, 1);
    CHECK(c6.lhs == 1);
    CHECK(c6.rhs == 1);
    CHECK(c6.verdict == Verdict::Holds);

    // Avoiding vertex 3 rules out {0-1, 3-4}, the only matching through 0-1.
    const auto empty = check_lemma6(cycle(6), VertexSet(6, {3}), 0, 1);
    CHECK(empty.lhs == 0);
    CHECK(empty.rhs == 1);
    CHECK(empty.verdict == Verdict::Holds);

    CHECK_THROWS_AS(check_lemma6(cycle(6), VertexSet(6), 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(check_lemma6(cycle(6), VertexSet(6, {0}), 0, 1), std::invalid_argument);
}

TEST_CASE("lemma 6 on all graphs with n <= 5") {
    Rng rng(6);
    for (std::size_t n = 2; n <= 5; ++n) {
        ExhaustiveGraphs all(n);
        while (auto g = all.next())
            for (const auto& r : lemma6_reports(*g, rng)) {
                REQUIRE(r.verdict == Verdict::Holds);
                REQUIRE(r.injection_ok);
            }
    }
}

TEST_CASE("extremal family") {
    const auto p1 = verify_extremal_family(1);
    CHECK(p1.mim_count == 9);
    CHECK(p1.holds());
    CHECK(p1.enumerated);
    CHECK(verify_extremal_family(2).mim_count == 81);
    const auto p8 = verify_extremal_family(8);
    CHECK_FALSE(p8.enumerated);
    CHECK(p8.mim_count == 43046721);
    CHECK(p8.holds());
    CHECK_THROWS_AS(verify_extremal_family(0), std::invalid_argument);
    CHECK_THROWS_AS(verify_extremal_family(21), std::invalid_argument);
}

TEST_CASE("K33 structure recognition") {
    CHECK(is_k33_structured(complete_bipartite(3, 3)));
    CHECK(is_k33_structured(Graph(6, {Edge(0, 1), Edge(0, 3), Edge(0, 5), Edge(2, 1), Edge(2, 3), Edge(2, 5),
                                      Edge(4, 1), Edge(4, 3), Edge(4, 5)})));
    CHECK_FALSE(is_k33_structured(cycle(6)));
    CHECK_FALSE(is_k33_structured(complete_bipartite(2, 4)));
    std::vector<Edge> minus = complete_bipartite(3, 3).edges();
    minus.pop_back();
    const Graph k33_minus(6, minus);
    CHECK_FALSE(is_k33_structured(k33_minus));
    CHECK(count_mim_oracle(k33_minus) < 9);
    CHECK(count_mim_oracle(cycle(6)) == 3);
}

TEST_CASE("report JSON shapes") {
    nlohmann::json j = verify_graph(complete_bipartite(3, 3));
    CHECK(j["graph6"] == "EFz_");
    CHECK(j["mim_count"] == 9);
    CHECK(j["extremal"] == true);
    CHECK(j["oracle_count"] == 9);
    nlohmann::json skipped = verify_graph(complete(3));
    CHECK(skipped["skipped"] == true);
    CHECK_FALSE(skipped.contains("mim_count"));
    nlohmann::json summary = BoundSummary{};
    CHECK(summary["summary"] == true);
}
