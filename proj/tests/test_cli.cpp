#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int status = mimkit::cli::main_entry(args, in, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream s(text);
    for (std::string line; std::getline(s, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("gen piped into count") {
    const auto k33 = run({"gen", "extremal_mim", "1"});
    CHECK(k33.status == 0);
    CHECK(k33.out == "EFz_\n");
    CHECK(run({"count"}, k33.out).out == "9\n");
    CHECK(run({"count"}, run({"gen", "cycle", "4"}).out).out == "4\n");
}

TEST_CASE("enumerate lists matchings lexicographically") {
    const auto r = run({"enumerate"}, run({"gen", "path", "4"}).out);
    CHECK(r.status == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"0-1", "1-2", "2-3"});
}

TEST_CASE("oracle and cameron strategies agree") {
    std::string input;
    for (auto spec : {"cycle 7", "complete_bipartite 2 3", "random 9 40 1", "random 11 30 2", "star 5"}) {
        std::vector<std::string> args{"gen"};
        std::istringstream words(spec);
        for (std::string w; words >> w;) args.push_back(w);
        input += run(args).out;
    }
    CHECK(run({"count", "--strategy", "oracle"}, input).out == run({"count", "--strategy", "cameron"}, input).out);
    auto sorted_blocks = [](std::string text) {
        auto ls = lines(text);
        std::vector<std::vector<std::string>> blocks(1);
        for (auto& l : ls) {
            if (l == "#") blocks.emplace_back();
            else blocks.back().push_back(l);
        }
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        return blocks;
    };
    const auto oracle = run({"enumerate", "--strategy", "oracle"}, input);
    const auto cameron = run({"enumerate", "--strategy", "cameron"}, input);
    CHECK(oracle.status == 0);
    CHECK(sorted_blocks(oracle.out) == sorted_blocks(cameron.out));
}

TEST_CASE("identical configuration gives identical output") {
    const auto input = run({"gen", "random", "8", "50", "3"}).out;
    const auto a = run({"lemmas", "lemma6", "--seed", "4", "--format", "json"}, input);
    const auto b = run({"lemmas", "lemma6", "--seed", "4", "--format", "json"}, input);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("maximum reports size and witness") {
    CHECK(run({"maximum", "--gen", "cycle 6"}).out == "2\t0-1 3-4\n");
    CHECK(run({"maximum", "--gen", "cycle 6", "--solver", "branch-and-bound"}).out == "2\t0-1 3-4\n");
    const auto j = nlohmann::json::parse(run({"maximum", "--gen", "complete_bipartite 3 3", "--format", "json"}).out);
    CHECK(j["size"] == 1);
}

TEST_CASE("verify emits JSON lines with a summary last") {
    const auto r = run({"verify"}, "EFz_\nBw\nD?\n");
    CHECK(r.status == 1);  // one malformed line
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(nlohmann::json::parse(ls[0])["extremal"] == true);
    CHECK(nlohmann::json::parse(ls[1])["skipped"] == true);
    CHECK(nlohmann::json::parse(ls[2]).contains("error"));
    const auto summary = nlohmann::json::parse(ls[3]);
    CHECK(summary["summary"] == true);
    CHECK(summary["errors"] == 1);
    CHECK(summary["violations"] == 0);

    const auto clean = run({"verify", "--exhaustive", "4", "--quiet"});
    CHECK(clean.status == 0);
    CHECK(nlohmann::json::parse(clean.out)["triangle_free"] == 41);
}

TEST_CASE("transform prints graph6 and the edge delta") {
    const auto r = run({"transform", "-u", "0", "-v", "3", "--gen", "path 4"});
    CHECK(r.status == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"CX", "removed: 0-1", "added: 0-2"});
    const auto bad = run({"transform", "-u", "0", "-v", "1", "--gen", "path 4"});
    CHECK(bad.status != 0);
    CHECK(bad.err.find("adjacent") != std::string::npos);
}

TEST_CASE("lemma selectors") {
    const auto input = run({"gen", "cycle", "5"}).out;
    for (std::string lemma : {"lemma2", "lemma3", "lemma4", "lemma5", "lemma6"}) {
        const auto r = run({"lemmas", lemma}, input);
        CHECK(r.status == 0);
        CHECK(r.out.find("fails=0") != std::string::npos);
    }
    CHECK(run({"lemmas", "lemma9"}, input).status != 0);
}

TEST_CASE("input errors and guards") {
    const auto malformed = run({"count"}, "D?\nEFz_\n");
    CHECK(malformed.status == 1);
    CHECK(malformed.out == "9\n");
    CHECK(malformed.err.find("line 1") != std::string::npos);

    CHECK(run({"count", "--input", "/nonexistent/file.g6"}).status != 0);
    CHECK(run({"count", "--strategy", "bogus"}).status != 0);
    CHECK(run({"gen", "cycle", "2"}).status != 0);
    CHECK(run({}).status != 0);

    const auto guarded = run({"count", "--strategy", "oracle", "--max-n", "5", "--gen", "cycle 6"});
    CHECK(guarded.status != 0);
    CHECK(guarded.err.find("--force") != std::string::npos);
    CHECK(run({"count", "--strategy", "oracle", "--max-n", "5", "--force", "--gen", "cycle 6"}).out == "3\n");
    CHECK(run({"count", "--input", "-", "--gen", "cycle 6"}).status != 0);
}

TEST_CASE("disjoint union from input graphs") {
    const auto k33 = run({"gen", "extremal_mim", "1"}).out;
    const auto r = run({"gen", "disjoint_union"}, k33 + k33);
    CHECK(r.out == run({"gen", "extremal_mim", "2"}).out);
}

TEST_CASE("jobs default comes from the environment") {
    setenv("MIMKIT_JOBS", "3", 1);
    const auto r = run({"verify", "--exhaustive", "5", "--quiet"});
    unsetenv("MIMKIT_JOBS");
    CHECK(r.status == 0);
    CHECK(run({"verify", "--exhaustive", "5", "--quiet", "--jobs", "0"}).status != 0);
}

TEST_CASE("timestamps column") {
    const auto r = run({"enumerate", "--timestamps", "--gen", "path 4"});
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0].find('\t') != std::string::npos);
    CHECK(r.err.find("delay:") != std::string::npos);
}
