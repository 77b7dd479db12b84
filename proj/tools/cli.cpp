#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "alp/bench.hpp"
#include "alp/embedding.hpp"
#include "alp/graph.hpp"
#include "alp/heuristics.hpp"
#include "alp/random.hpp"
#include "alp/search.hpp"

namespace alp::cli {
namespace {

// Sub-seed streams derived from --seed.
enum SeedStream : std::uint64_t { kGraphStream = 1, kLandmarkStream = 2, kWorkloadStream = 3 };

struct Options {
    std::string graph;
    std::string output;
    std::string graph_format = "dimacs";
    std::string strategy = "farthest";
    std::size_t landmarks = 8;
    std::uint64_t seed = 0;
    std::string method = "alp";
    std::vector<std::string> methods{"dijkstra", "alt", "alp"};
    std::string heuristic_mode = "paper-faithful";
    bool no_ptolemy = false;
    std::string embedding;
    VertexId source = 0;
    VertexId target = 0;
    std::size_t queries = 100;
    std::string stratify = "none";
    std::string report_format = "csv";
    std::string report;
    bool summary = false;
    bool timing = false;
    unsigned threads = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::size_t to_size(const std::string& s, const std::string& spec) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw std::invalid_argument("bad generator spec '" + spec + "'");
    return static_cast<std::size_t>(v);
}

bool is_generator_spec(const std::string& src) {
    return src.rfind("grid:", 0) == 0 || src.rfind("random:", 0) == 0 || src.rfind("path:", 0) == 0;
}

// `grid:RxC`, `random:N:EXTRA`, `path:N`, or a graph file path.
Graph load_source(const std::string& src, std::uint64_t seed) {
    if (src.empty()) throw std::invalid_argument("--graph is required");
    if (!is_generator_spec(src)) return load_graph_file(src);
    const auto parts = split(src, ':');
    if (parts[0] == "grid" && parts.size() == 2) {
        const auto dims = split(parts[1], 'x');
        if (dims.size() != 2) throw std::invalid_argument("bad generator spec '" + src + "'");
        return generate_grid(to_size(dims[0], src), to_size(dims[1], src));
    }
    if (parts[0] == "path" && parts.size() == 2) return generate_grid(1, to_size(parts[1], src));
    if (parts[0] == "random" && parts.size() == 3) {
        return generate_random_connected(to_size(parts[1], src), to_size(parts[2], src),
                                         derive_seed(seed, kGraphStream));
    }
    throw std::invalid_argument("bad generator spec '" + src + "'");
}

AlpConfig alp_config(const Options& o) {
    AlpConfig c;
    if (o.heuristic_mode == "paper-faithful") {
        c.mode = CountingMode::paper_faithful;
    } else if (o.heuristic_mode == "optimized") {
        c.mode = CountingMode::optimized;
    } else {
        throw std::invalid_argument("unknown heuristic mode '" + o.heuristic_mode + "'");
    }
    c.ptolemy = !o.no_ptolemy;
    return c;
}

LandmarkSet landmarks_for(const Graph& g, const Options& o) {
    return select_landmarks(g, parse_strategy(o.strategy), o.landmarks, derive_seed(o.seed, kLandmarkStream));
}

class OutputFile {
public:
    OutputFile(const std::string& path, std::ostream& fallback, bool binary = false) {
        if (path.empty() || path == "-") {
            stream_ = &fallback;
            return;
        }
        file_.open(path, binary ? std::ios::binary | std::ios::out : std::ios::out);
        if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
        stream_ = &file_;
    }
    std::ostream& stream() { return *stream_; }
    bool is_file() const { return stream_ == &file_; }

private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

void print_landmarks(const LandmarkSet& l, std::ostream& out) {
    out << "landmarks:";
    for (VertexId id : l.ids()) out << ' ' << id;
    out << '\n';
}

int cmd_gen(const Options& o, std::ostream& out) {
    if (!is_generator_spec(o.graph)) throw std::invalid_argument("gen needs a generator spec for --graph");
    const Graph g = load_source(o.graph, o.seed);
    OutputFile sink(o.output, out);
    if (o.graph_format == "dimacs") {
        write_dimacs(g, sink.stream());
    } else if (o.graph_format == "edgelist") {
        write_edge_list(g, sink.stream());
    } else {
        throw std::invalid_argument("unknown graph format '" + o.graph_format + "'");
    }
    if (!sink.stream()) throw std::runtime_error("failed writing graph");
    return 0;
}

int cmd_preprocess(const Options& o, std::ostream& out) {
    const Graph g = load_source(o.graph, o.seed);
    const Method m = parse_method(o.method);
    if (m == Method::dijkstra) throw std::invalid_argument("preprocess needs --method alt or alp");
    const LandmarkSet l = landmarks_for(g, o);
    SpaceReport space;
    KernelStats stats;
    std::ostringstream blob;
    if (m == Method::alt) {
        const auto e = build_alt_embedding(g, l);
        space = space_accounting(e);
        stats = e.build_stats;
        write_embedding(e, blob);
    } else {
        const auto e = build_distributed_embedding(g, l);
        space = space_accounting(e);
        stats = e.build_stats;
        write_embedding(e, blob);
    }
    if (!o.output.empty()) {
        std::ofstream file(o.output, std::ios::binary);
        if (!file || !(file << blob.str())) throw std::runtime_error("cannot write '" + o.output + "'");
    }
    out << "method: " << to_string(m) << '\n';
    out << "vertices: " << g.vertex_count() << '\n';
    print_landmarks(l, out);
    out << "entries: " << space.entries << '\n';
    out << "formula_entries: " << space.formula_entries << '\n';
    out << "full_passes: " << stats.full_passes << '\n';
    out << "truncated_runs: " << stats.truncated_runs << '\n';
    return space.entries == space.formula_entries ? 0 : 1;
}

template <typename E>
E load_embedding_file(const std::string& path, const Graph& g) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open embedding '" + path + "'");
    auto any = read_embedding(in);
    if (!std::holds_alternative<E>(any)) throw std::invalid_argument("embedding kind does not match --method");
    E e = std::get<E>(std::move(any));
    std::size_t n = 0;
    if constexpr (std::is_same_v<E, AltEmbedding>) {
        n = e.vertex_count;
    } else {
        n = e.vertex_count();
    }
    if (n != g.vertex_count()) throw std::invalid_argument("embedding vertex count does not match the graph");
    return e;
}

int cmd_query(const Options& o, std::ostream& out) {
    const Graph g = load_source(o.graph, o.seed);
    const Method m = parse_method(o.method);
    QueryResult r;
    if (m == Method::dijkstra) {
        r = dijkstra_query(g, o.source, o.target);
    } else if (m == Method::alt) {
        const auto e = o.embedding.empty() ? build_alt_embedding(g, landmarks_for(g, o))
                                           : load_embedding_file<AltEmbedding>(o.embedding, g);
        r = astar_alt(g, e, o.source, o.target);
    } else {
        const auto e = o.embedding.empty() ? build_distributed_embedding(g, landmarks_for(g, o))
                                           : load_embedding_file<DistributedEmbedding>(o.embedding, g);
        r = astar_alp(g, e, o.source, o.target, alp_config(o));
    }
    if (r.reachable()) {
        std::ostringstream d;
        d << r.distance;
        out << "distance: " << d.str() << '\n';
    } else {
        out << "distance: unreachable\n";
    }
    out << "path:";
    for (VertexId v : r.path) out << ' ' << v;
    out << '\n';
    out << "settled: " << r.settled << '\n';
    out << "expanded: " << r.expanded << '\n';
    out << "reopened: " << r.reopened << '\n';
    out << "heuristic_evals: " << r.heuristic_evals << '\n';
    out << "subs: " << r.op_totals.subtractions << '\n';
    out << "muls: " << r.op_totals.multiplications << '\n';
    out << "divs: " << r.op_totals.divisions << '\n';
    return 0;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
    const Graph g = load_source(o.graph, o.seed);
    std::vector<Method> methods;
    for (const auto& name : o.methods) methods.push_back(parse_method(name));
    if (methods.empty()) throw std::invalid_argument("--methods is empty");
    WorkloadSpec spec;
    spec.query_count = o.queries;
    spec.seed = derive_seed(o.seed, kWorkloadStream);
    spec.stratification = parse_stratification(o.stratify);
    const auto queries = generate_queries(g, spec);

    WorkloadOptions wopts;
    wopts.alp = alp_config(o);
    wopts.timing = o.timing;
    wopts.threads = o.threads;
    const bool needs_landmarks = std::any_of(methods.begin(), methods.end(), [](Method m) { return m != Method::dijkstra; });
    // Dijkstra-only runs never touch the landmarks; any single vertex will do.
    const LandmarkSet l = needs_landmarks ? landmarks_for(g, o) : LandmarkSet({0}, g.vertex_count());
    const auto rows = run_workload(g, l, queries, methods, wopts);

    OutputFile sink(o.output, out);
    emit_report(rows, parse_report_format(o.report_format), sink.stream());
    if (o.summary) {
        std::ostream& s = sink.is_file() ? out : err;
        write_summary(summarize(rows), s);
    }
    return 0;
}

ReportFormat format_for(const std::string& path, const std::string& requested) {
    if (!requested.empty()) return parse_report_format(requested);
    const auto dot = path.rfind('.');
    if (dot != std::string::npos && path.substr(dot) == ".json") return ReportFormat::json;
    return ReportFormat::csv;
}

int cmd_verify(const Options& o, const std::string& format, std::ostream& out) {
    const Graph g = load_source(o.graph, o.seed);
    if (o.report.empty()) throw std::invalid_argument("--report is required");
    std::ifstream in(o.report);
    if (!in) throw std::runtime_error("cannot open report '" + o.report + "'");
    const auto rows = parse_report(in, format_for(o.report, format));
    const auto report = verify_workload(g, rows);
    out << "rows: " << report.rows_checked << '\n';
    out << "violations: " << report.violations.size() << '\n';
    for (const auto& v : report.violations) {
        out << "  row " << v.row << ' ' << to_string(v.method) << " (" << v.source << "," << v.target
            << "): reported " << v.reported << ", expected " << v.expected << '\n';
    }
    return report.ok() ? 0 : 1;
}

void add_graph(CLI::App* cmd, Options& o) {
    cmd->add_option("--graph", o.graph, "Graph file (DIMACS .gr or edge list) or grid:RxC | random:N:EXTRA | path:N")
        ->required();
    cmd->add_option("--seed", o.seed, "Top-level seed; every stochastic choice derives from it");
}

void add_landmarks(CLI::App* cmd, Options& o) {
    cmd->add_option("--landmarks,-k", o.landmarks, "Landmark count")->check(CLI::PositiveNumber);
    cmd->add_option("--strategy", o.strategy, "Landmark selection: random | farthest | avoid")
        ->check(CLI::IsMember({"random", "farthest", "avoid"}));
}

void add_heuristic(CLI::App* cmd, Options& o) {
    cmd->add_option("--heuristic-mode", o.heuristic_mode, "paper-faithful | optimized")
        ->check(CLI::IsMember({"paper-faithful", "optimized"}));
    cmd->add_flag("--no-ptolemy", o.no_ptolemy, "Drop the Ptolemy component from the ALP bound");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Landmark shortest-path engine: Dijkstra, ALT and dual-landmark ALP"};
    app.require_subcommand(1);
    Options o;
    std::string verify_format;

    auto* gen = app.add_subcommand("gen", "Write a generated graph");
    add_graph(gen, o);
    gen->add_option("--output,-o", o.output, "Destination (default stdout)");
    gen->add_option("--format", o.graph_format, "dimacs | edgelist")->check(CLI::IsMember({"dimacs", "edgelist"}));

    auto* pre = app.add_subcommand("preprocess", "Build and serialize an embedding, report stored entries");
    add_graph(pre, o);
    add_landmarks(pre, o);
    pre->add_option("--method", o.method, "alt | alp")->check(CLI::IsMember({"alt", "alp"}));
    pre->add_option("--output,-o", o.output, "Embedding file to write");

    auto* query = app.add_subcommand("query", "Answer one source-target query");
    add_graph(query, o);
    add_landmarks(query, o);
    add_heuristic(query, o);
    query->add_option("--method", o.method, "dijkstra | alt | alp")->check(CLI::IsMember({"dijkstra", "alt", "alp"}));
    query->add_option("--source", o.source)->required();
    query->add_option("--target", o.target)->required();
    query->add_option("--embedding", o.embedding, "Use a preprocessed embedding file");

    auto* bench = app.add_subcommand("bench", "Run a query workload and emit a report");
    add_graph(bench, o);
    add_landmarks(bench, o);
    add_heuristic(bench, o);
    bench->add_option("--methods,--method", o.methods, "Comma-separated subset of dijkstra,alt,alp")
        ->delimiter(',')
        ->check(CLI::IsMember({"dijkstra", "alt", "alp"}));
    bench->add_option("--queries,-q", o.queries, "Query count")->check(CLI::PositiveNumber);
    bench->add_option("--stratify", o.stratify, "none | decile | corner")
        ->check(CLI::IsMember({"none", "decile", "corner"}));
    bench->add_option("--format", o.report_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    bench->add_option("--output,-o", o.output, "Report destination (default stdout)");
    bench->add_flag("--summary", o.summary, "Print per-method means");
    bench->add_flag("--timing", o.timing, "Record wall time per row (makes reports run-dependent)");
    bench->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Check a report's distances against the oracle");
    add_graph(verify, o);
    verify->add_option("--report", o.report, "Report file")->required();
    verify->add_option("--format", verify_format, "csv | json (default from extension)")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (*gen) return cmd_gen(o, out);
        if (*pre) return cmd_preprocess(o, out);
        if (*query) return cmd_query(o, out);
        if (*bench) return cmd_bench(o, out, err);
        if (*verify) return cmd_verify(o, verify_format, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"alp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace alp::cli
