// bench.hpp - query workloads, method comparison, oracle verification and
// CSV/JSON reports.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "alp/embedding.hpp"
#include "alp/graph.hpp"
#include "alp/heuristics.hpp"

namespace alp {

enum class Method { dijkstra, alt, alp };

Method parse_method(const std::string& name);
const char* to_string(Method m);

enum class Stratification {
    none,                // uniform random pairs
    by_distance_decile,  // round-robin over distance deciles of pilot pairs
    corner_biased,       // sources near one end of a double-sweep diameter, targets near the other
};

Stratification parse_stratification(const std::string& name);
const char* to_string(Stratification s);

struct WorkloadSpec {
    std::size_t query_count = 1;
    std::uint64_t seed = 0;
    Stratification stratification = Stratification::none;
};

struct Query {
    VertexId source;
    VertexId target;
    friend bool operator==(const Query&, const Query&) = default;
};

// Deterministic for a fixed spec. Throws std::invalid_argument when
// query_count is zero or the graph is empty.
std::vector<Query> generate_queries(const Graph& g, const WorkloadSpec& spec);

struct BenchRow {
    Method method = Method::dijkstra;
    VertexId source = 0;
    VertexId target = 0;
    Weight distance = 0.0;
    std::uint64_t settled = 0;
    std::uint64_t expanded = 0;
    std::uint64_t reopened = 0;
    std::uint64_t heuristic_evals = 0;
    std::uint64_t subs = 0;
    std::uint64_t muls = 0;
    std::uint64_t divs = 0;
    std::array<std::uint64_t, 5> scenarios{};  // S1..S5, ALP rows only
    std::uint64_t wall_time_ns = 0;

    friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

struct WorkloadOptions {
    AlpConfig alp;
    bool timing = false;   // off keeps wall_time_ns at 0 so reports are reproducible
    unsigned threads = 1;  // queries are spread over this many workers
};

// Raised when two methods disagree on a distance.
class WorkloadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One row per (query, method), ordered by query index and then by the order
// of `methods`. ALP rows carry a scenario histogram over every heuristic
// evaluation, which needs the ALT embedding as well.
std::vector<BenchRow> run_workload(const Graph& g, const LandmarkSet& landmarks, std::span<const Query> queries,
                                   std::span<const Method> methods, const WorkloadOptions& options = {});

struct Violation {
    std::size_t row = 0;
    Method method = Method::dijkstra;
    VertexId source = 0;
    VertexId target = 0;
    Weight reported = 0.0;
    Weight expected = 0.0;
};

struct VerificationReport {
    std::size_t rows_checked = 0;
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

// Checks every row's distance against an independent SPT per distinct source.
VerificationReport verify_workload(const Graph& g, std::span<const BenchRow> rows);

// ---- reports ----------------------------------------------------------------

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(const std::string& name);

inline constexpr const char* kCsvHeader =
    "method,source,target,distance,settled,expanded,reopened,heuristic_evals,subs,muls,divs,s1,s2,s3,s4,s5,"
    "wall_time_ns";

void emit_report(std::span<const BenchRow> rows, ReportFormat format, std::ostream& sink);

// Inverse of emit_report. Throws ParseError on malformed input.
std::vector<BenchRow> parse_report(std::istream& in, ReportFormat format);

struct MethodSummary {
    Method method = Method::dijkstra;
    std::size_t queries = 0;
    double mean_settled = 0.0;
    double mean_expanded = 0.0;
    double mean_reopened = 0.0;
    double mean_heuristic_evals = 0.0;
    double mean_arithmetic = 0.0;  // subs + muls + divs
    std::array<std::uint64_t, 5> scenarios{};
};

// One entry per method present, in first-appearance order.
std::vector<MethodSummary> summarize(std::span<const BenchRow> rows);
void write_summary(std::span<const MethodSummary> summary, std::ostream& out);

}  // namespace alp
