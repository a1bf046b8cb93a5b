#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mimkit/enumeration.hpp"
#include "mimkit/generators.hpp"
#include "mimkit/graph6.hpp"
#include "mimkit/report_json.hpp"
#include "mimkit/transforms.hpp"
#include "mimkit/verification.hpp"

namespace mimkit::cli {

namespace {

using Json = nlohmann::json;
using GraphVisitor = std::function<bool(const Graph&, const std::string& graph6)>;

Graph graph_from_spec(const std::string& spec) {
    std::istringstream tokens(spec);
    std::string family;
    tokens >> family;
    std::vector<long long> params;
    std::string word;
    while (tokens >> word) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(word, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != word.size()) throw std::invalid_argument("generator parameter '" + word + "' is not an integer");
        params.push_back(value);
    }
    return generate(family, params);
}

// Feeds every input graph to `visit` (which returns false on a violation).
// Malformed lines are reported on `err` and skipped. Returns the number of
// errors plus violations.
std::size_t for_each_input_graph(const CommandConfig& c, std::istream& in, std::ostream& err,
                                 const GraphVisitor& visit) {
    std::size_t problems = 0;
    if (c.generator) {
        const Graph g = graph_from_spec(*c.generator);
        const std::string g6 = g.n() <= kGraph6MaxVertices ? to_graph6(g) : std::string{};
        return visit(g, g6) ? 0 : 1;
    }
    std::ifstream file;
    std::istream* src = &in;
    if (c.input != "-") {
        file.open(c.input);
        if (!file) throw std::runtime_error("cannot open input file '" + c.input + "'");
        src = &file;
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*src, line)) {
        ++line_no;
        if (is_graph6_blank(line)) continue;
        Graph g;
        try {
            g = from_graph6(line);
        } catch (const Graph6Error& e) {
            err << "line " << line_no << ": " << e.what() << '\n';
            ++problems;
            continue;
        }
        if (!visit(g, to_graph6(g))) ++problems;
    }
    return problems;
}

Strategy parse_strategy(const std::string& s) {
    if (s == "oracle") return Strategy::Oracle;
    if (s == "cameron") return Strategy::Cameron;
    return Strategy::Auto;
}

// Resolves the strategy for g, refusing the oracle above --max-n.
std::optional<Strategy> pick_strategy(const CommandConfig& c, const Graph& g, std::ostream& err) {
    const Strategy s = resolve(parse_strategy(c.strategy), g);
    if (s == Strategy::Oracle && g.n() > c.max_n && !c.force) {
        err << "refusing oracle enumeration on n=" << g.n() << " (> --max-n " << c.max_n
            << "); use --strategy cameron or --force\n";
        return std::nullopt;
    }
    return s;
}

int status(std::size_t problems) { return problems == 0 ? 0 : 1; }

int run_count(const CommandConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
    return status(for_each_input_graph(c, in, err, [&](const Graph& g, const std::string& g6) {
        const auto s = pick_strategy(c, g, err);
        if (!s) return false;
        const std::uint64_t count = count_mim(g, *s);
        if (c.format == OutputFormat::Json)
            out << Json{{"graph6", g6}, {"n", g.n()}, {"count", count}}.dump() << '\n';
        else
            out << count << '\n';
        return true;
    }));
}

int run_enumerate(const CommandConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
    std::size_t graphs = 0;
    return status(for_each_input_graph(c, in, err, [&](const Graph& g, const std::string& g6) {
        const auto s = pick_strategy(c, g, err);
        if (!s) return false;
        std::unique_ptr<MatchingStream> stream;
        if (*s == Strategy::Oracle) stream = std::make_unique<OracleStream>(g);
        else stream = std::make_unique<CameronStream>(g);
        const auto start = std::chrono::steady_clock::now();
        stream->track_delay(c.timestamps);
        auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

        if (c.format == OutputFormat::Json) {
            Json matchings = Json::array();
            Json stamps = Json::array();
            while (auto m = stream->next()) {
                matchings.push_back(to_string(*m));
                if (c.timestamps) stamps.push_back(elapsed());
            }
            Json record{{"graph6", g6}, {"n", g.n()}, {"count", matchings.size()}, {"matchings", matchings}};
            if (c.timestamps) {
                const auto d = stream->delay_stats();
                record["timestamps"] = stamps;
                record["delay"] = {{"max_seconds", d.max_seconds}, {"median_seconds", d.median_seconds}};
            }
            out << record.dump() << '\n';
        } else {
            if (graphs > 0) out << "#\n";
            while (auto m = stream->next()) {
                out << to_string(*m);
                if (c.timestamps) out << '\t' << elapsed();
                out << '\n';
            }
            if (c.timestamps) {
                const auto d = stream->delay_stats();
                err << "delay: outputs=" << d.outputs << " max=" << d.max_seconds << "s median=" << d.median_seconds
                    << "s\n";
            }
        }
        ++graphs;
        return true;
    }));
}

int run_maximum(const CommandConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto solver = c.solver == "branch-and-bound" ? MaximumStrategy::BranchAndBound : MaximumStrategy::Stream;
    return status(for_each_input_graph(c, in, err, [&](const Graph& g, const std::string& g6) {
        const Matching m = maximum_induced_matching(g, solver);
        if (c.format == OutputFormat::Json)
            out << Json{{"graph6", g6}, {"n", g.n()}, {"size", m.size()}, {"witness", to_string(m)}}.dump() << '\n';
        else
            out << m.size() << '\t' << to_string(m) << '\n';
        return true;
    }));
}

int run_verify(const CommandConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
    const BoundSink sink = [&](const BoundRecord& r) {
        if (!r.report) err << "record " << r.seq << ": " << r.error << '\n';
        if (!c.quiet) out << Json(r).dump() << '\n';
    };
    BoundSummary summary;
    if (c.exhaustive) {
        summary = verify_exhaustive(*c.exhaustive, c.jobs, sink);
    } else if (c.generator) {
        std::istringstream one(to_graph6(graph_from_spec(*c.generator)));
        summary = verify_graph6_stream(one, c.jobs, sink);
    } else if (c.input == "-") {
        summary = verify_graph6_stream(in, c.jobs, sink);
    } else {
        std::ifstream file(c.input);
        if (!file) throw std::runtime_error("cannot open input file '" + c.input + "'");
        summary = verify_graph6_stream(file, c.jobs, sink);
    }
    out << Json(summary).dump() << '\n';
    return summary.clean() ? 0 : 1;
}

int run_transform(const CommandConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
    return status(for_each_input_graph(c, in, err, [&](const Graph& g, const std::string&) {
        RetargetResult r;
        try {
            r = c.twin_set ? retarget_twin_set(g, c.u, c.v) : retarget_vertex(g, c.u, c.v);
        } catch (const std::invalid_argument& e) {
            err << "transform: " << e.what() << '\n';
            return false;
        }
        if (c.format == OutputFormat::Json) {
            out << Json(r).dump() << '\n';
        } else {
            auto list = [](const std::vector<Edge>& edges) {
                std::string s;
                for (const auto& e : edges) s += (s.empty() ? "" : " ") + to_string(e);
                return s;
            };
            out << to_graph6(r.graph) << '\n'
                << "removed: " << list(r.removed) << '\n'
                << "added: " << list(r.added) << '\n';
        }
        return true;
    }));
}

struct Tally {
    std::size_t applicable = 0;
    std::size_t holds = 0;
    std::size_t fails = 0;
};

template <typename Report>
Tally emit_reports(const std::vector<Report>& reports, const CommandConfig& c, const std::string& g6,
                   std::ostream& out) {
    Tally t;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Inapplicable) continue;
        ++t.applicable;
        (r.verdict == Verdict::Holds ? t.holds : t.fails)++;
        if (c.format == OutputFormat::Json) {
            Json j = r;
            j["graph6"] = g6;
            j["lemma"] = c.lemma;
            out << j.dump() << '\n';
        }
    }
    return t;
}

int run_lemmas(const CommandConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
    Rng rng(c.seed);
    return status(for_each_input_graph(c, in, err, [&](const Graph& g, const std::string& g6) {
        if (c.lemma != "lemma4" && c.lemma != "lemma5" && g.n() > c.max_n && !c.force) {
            err << "refusing oracle-backed " << c.lemma << " on n=" << g.n() << " (> --max-n " << c.max_n
                << "); use --force\n";
            return false;
        }
        Tally t;
        if (c.lemma == "lemma2") t = emit_reports(lemma2_reports(g), c, g6, out);
        else if (c.lemma == "lemma3") t = emit_reports(lemma3_reports(g), c, g6, out);
        else if (c.lemma == "lemma4") t = emit_reports(lemma4_reports(g), c, g6, out);
        else if (c.lemma == "lemma5") t = emit_reports(lemma5_reports(g), c, g6, out);
        else t = emit_reports(lemma6_reports(g, rng), c, g6, out);
        if (c.format == OutputFormat::Text)
            out << g6 << '\t' << c.lemma << "\tapplicable=" << t.applicable << "\tholds=" << t.holds
                << "\tfails=" << t.fails << '\n';
        return t.fails == 0;
    }));
}

int run_gen(const CommandConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
    Graph g;
    if (c.family == "disjoint_union") {
        std::vector<Graph> parts;
        const std::size_t problems = for_each_input_graph(c, in, err, [&](const Graph& part, const std::string&) {
            parts.push_back(part);
            return true;
        });
        if (problems) return 1;
        if (parts.empty()) throw std::invalid_argument("disjoint_union needs at least one input graph");
        g = disjoint_union(parts);
    } else {
        g = generate(c.family, c.params);
    }
    if (c.format == OutputFormat::Json)
        out << Json{{"graph6", to_graph6(g)}, {"n", g.n()}, {"edges", g.edge_count()}}.dump() << '\n';
    else
        out << to_graph6(g) << '\n';
    return 0;
}

void add_common(CLI::App* sub, CommandConfig& c, std::string& format) {
    auto* input = sub->add_option("--input", c.input, "graph6 file, or - for standard input");
    sub->add_option("--gen", c.generator, "generate the input graph instead, e.g. \"cycle 5\"")->excludes(input);
    sub->add_option("--strategy", c.strategy, "oracle, cameron or auto")
        ->check(CLI::IsMember({"oracle", "cameron", "auto"}));
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", c.jobs, "worker threads")->envname("MIMKIT_JOBS")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "seed for randomized checks");
    sub->add_option("--max-n", c.max_n, "largest n for oracle-backed work without --force");
    sub->add_flag("--force", c.force, "lift the --max-n guard");
}

}  // namespace

int run(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        switch (config.subcommand) {
            case Subcommand::Count: return run_count(config, in, out, err);
            case Subcommand::Enumerate: return run_enumerate(config, in, out, err);
            case Subcommand::Maximum: return run_maximum(config, in, out, err);
            case Subcommand::Verify: return run_verify(config, in, out, err);
            case Subcommand::Transform: return run_transform(config, in, out, err);
            case Subcommand::Lemmas: return run_lemmas(config, in, out, err);
            case Subcommand::Gen: return run_gen(config, in, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate, count and maximize induced matchings; verify the triangle-free bound"};
    app.name("mimkit");
    app.require_subcommand(1);

    CommandConfig c;
    std::string format = "text";

    auto* count = app.add_subcommand("count", "number of maximal induced matchings per graph");
    add_common(count, c, format);

    auto* enumerate = app.add_subcommand("enumerate", "list maximal induced matchings, one per line");
    add_common(enumerate, c, format);
    enumerate->add_flag("--timestamps", c.timestamps, "append elapsed seconds to each matching");

    auto* maximum = app.add_subcommand("maximum", "size and witness of a maximum induced matching");
    add_common(maximum, c, format);
    maximum->add_option("--solver", c.solver, "stream or branch-and-bound")
        ->check(CLI::IsMember({"stream", "branch-and-bound"}));

    auto* verify = app.add_subcommand("verify", "check |MIM| <= 3^(n/3) on triangle-free graphs (JSON lines)");
    add_common(verify, c, format);
    verify->add_option("--exhaustive", c.exhaustive, "verify every labeled graph on N vertices (1..7)")
        ->check(CLI::Range(1, 7));
    verify->add_flag("--quiet", c.quiet, "print only the summary record");

    auto* transform = app.add_subcommand("transform", "rewire u into a twin of v");
    add_common(transform, c, format);
    transform->add_option("-u,--u", c.u, "vertex to rewire")->required();
    transform->add_option("-v,--v", c.v, "target vertex")->required();
    transform->add_flag("--twin-set", c.twin_set, "rewire every twin of u as well");

    auto* lemmas = app.add_subcommand("lemmas", "run lemma property checks on each input graph");
    add_common(lemmas, c, format);
    lemmas->add_option("lemma", c.lemma, "lemma2, lemma3, lemma4, lemma5 or lemma6")
        ->required()
        ->check(CLI::IsMember({"lemma2", "lemma3", "lemma4", "lemma5", "lemma6"}));

    auto* gen = app.add_subcommand("gen", "print the graph6 of a named family");
    add_common(gen, c, format);
    gen->add_option("family", c.family, "family name")->required();
    gen->add_option("params", c.params, "integer parameters");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    c.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
    if (count->parsed()) c.subcommand = Subcommand::Count;
    else if (enumerate->parsed()) c.subcommand = Subcommand::Enumerate;
    else if (maximum->parsed()) c.subcommand = Subcommand::Maximum;
    else if (verify->parsed()) c.subcommand = Subcommand::Verify;
    else if (transform->parsed()) c.subcommand = Subcommand::Transform;
    else if (lemmas->parsed()) c.subcommand = Subcommand::Lemmas;
    else c.subcommand = Subcommand::Gen;
    return run(c, in, out, err);
}

}  // namespace mimkit::cli
