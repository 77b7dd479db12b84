#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

#include "alp/bench.hpp"
#include "alp/random.hpp"
#include "alp/search.hpp"

namespace alp {

Method parse_method(const std::string& name) {
    if (name == "dijkstra") return Method::dijkstra;
    if (name == "alt") return Method::alt;
    if (name == "alp") return Method::alp;
    throw std::invalid_argument("unknown method '" + name + "'");
}

const char* to_string(Method m) {
    switch (m) {
        case Method::dijkstra: return "dijkstra";
        case Method::alt: return "alt";
        case Method::alp: return "alp";
    }
    return "?";
}

Stratification parse_stratification(const std::string& name) {
    if (name == "none") return Stratification::none;
    if (name == "decile") return Stratification::by_distance_decile;
    if (name == "corner") return Stratification::corner_biased;
    throw std::invalid_argument("unknown stratification '" + name + "'");
}

const char* to_string(Stratification s) {
    switch (s) {
        case Stratification::none: return "none";
        case Stratification::by_distance_decile: return "decile";
        case Stratification::corner_biased: return "corner";
    }
    return "?";
}

namespace {

constexpr std::size_t kPilotSources = 32;
constexpr double kCornerRadius = 0.1;

VertexId random_vertex(Rng& rng, std::size_t n) { return static_cast<VertexId>(uniform_below(rng, n)); }

std::vector<Query> decile_queries(const Graph& g, const WorkloadSpec& spec, Rng& rng) {
    const std::size_t n = g.vertex_count();
    std::vector<VertexId> pilots(n);
    std::iota(pilots.begin(), pilots.end(), VertexId{0});
    const std::size_t pilot_count = std::min(n, kPilotSources);
    for (std::size_t i = 0; i < pilot_count; ++i) {
        std::swap(pilots[i], pilots[i + uniform_below(rng, n - i)]);
    }
    pilots.resize(pilot_count);
    std::sort(pilots.begin(), pilots.end());

    std::vector<std::pair<Query, Weight>> candidates;
    Weight longest = 0.0;
    for (VertexId s : pilots) {
        const auto run = shortest_path_tree(g, s);
        for (VertexId t = 0; t < n; ++t) {
            if (!run.reached(t)) continue;
            candidates.push_back({{s, t}, run.dist[t]});
            longest = std::max(longest, run.dist[t]);
        }
    }
    std::array<std::vector<Query>, 10> buckets;
    for (const auto& [q, d] : candidates) {
        const auto decile = longest > 0.0 ? std::min<std::size_t>(9, static_cast<std::size_t>(10.0 * d / longest)) : 0;
        buckets[decile].push_back(q);
    }
    std::vector<const std::vector<Query>*> nonempty;
    for (const auto& b : buckets) {
        if (!b.empty()) nonempty.push_back(&b);
    }
    std::vector<Query> out;
    out.reserve(spec.query_count);
    for (std::size_t i = 0; i < spec.query_count; ++i) {
        const auto& bucket = *nonempty[i % nonempty.size()];
        out.push_back(bucket[uniform_below(rng, bucket.size())]);
    }
    return out;
}

std::vector<Query> corner_queries(const Graph& g, const WorkloadSpec& spec, Rng& rng) {
    const std::size_t n = g.vertex_count();
    auto farthest = [&](const DistanceMap& run) {
        VertexId best = 0;
        for (VertexId v = 0; v < n; ++v) {
            if (run.reached(v) && run.dist[v] > run.dist[best]) best = v;
        }
        return best;
    };
    const VertexId a = farthest(shortest_path_tree(g, 0));
    const auto from_a = shortest_path_tree(g, a);
    const VertexId b = farthest(from_a);
    const auto from_b = shortest_path_tree(g, b);
    const Weight radius = kCornerRadius * from_a.dist[b];

    std::vector<VertexId> near_a;
    std::vector<VertexId> near_b;
    for (VertexId v = 0; v < n; ++v) {
        if (from_a.dist[v] <= radius) near_a.push_back(v);
        if (from_b.dist[v] <= radius) near_b.push_back(v);
    }
    std::vector<Query> out;
    out.reserve(spec.query_count);
    for (std::size_t i = 0; i < spec.query_count; ++i) {
        const VertexId s = near_a[uniform_below(rng, near_a.size())];
        const VertexId t = near_b[uniform_below(rng, near_b.size())];
        out.push_back({s, t});
    }
    return out;
}

BenchRow row_from(Method m, const Query& q, const QueryResult& r) {
    BenchRow row;
    row.method = m;
    row.source = q.source;
    row.target = q.target;
    row.distance = r.distance;
    row.settled = r.settled;
    row.expanded = r.expanded;
    row.reopened = r.reopened;
    row.heuristic_evals = r.heuristic_evals;
    row.subs = r.op_totals.subtractions;
    row.muls = r.op_totals.multiplications;
    row.divs = r.op_totals.divisions;
    return row;
}

// ALP bound that also bins every evaluation by scenario.
class ClassifyingAlp {
public:
    ClassifyingAlp(const AltEmbedding& alt, const DistributedEmbedding& alp, VertexId target, AlpConfig config,
                   std::array<std::uint64_t, 5>& histogram)
        : alt_(&alt), alp_(&alp), target_(target), config_(config), histogram_(&histogram) {}

    HeuristicEval operator()(VertexId v) const {
        ++(*histogram_)[scenario_index(classify_scenario(*alt_, *alp_, v, target_))];
        return alp_dual_h(*alp_, v, target_, config_);
    }

private:
    const AltEmbedding* alt_;
    const DistributedEmbedding* alp_;
    VertexId target_;
    AlpConfig config_;
    std::array<std::uint64_t, 5>* histogram_;
};

template <typename F>
QueryResult timed(bool timing, std::uint64_t& ns, F&& run) {
    if (!timing) return run();
    const auto start = std::chrono::steady_clock::now();
    QueryResult r = run();
    const auto stop = std::chrono::steady_clock::now();
    ns = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    return r;
}

}  // namespace

std::vector<Query> generate_queries(const Graph& g, const WorkloadSpec& spec) {
    if (spec.query_count == 0) throw std::invalid_argument("workload needs at least one query");
    if (g.vertex_count() == 0) throw std::invalid_argument("workload on an empty graph");
    Rng rng(spec.seed);
    switch (spec.stratification) {
        case Stratification::by_distance_decile: return decile_queries(g, spec, rng);
        case Stratification::corner_biased: return corner_queries(g, spec, rng);
        case Stratification::none: break;
    }
    std::vector<Query> out;
    out.reserve(spec.query_count);
    for (std::size_t i = 0; i < spec.query_count; ++i) {
        const VertexId s = random_vertex(rng, g.vertex_count());
        const VertexId t = random_vertex(rng, g.vertex_count());
        out.push_back({s, t});
    }
    return out;
}

std::vector<BenchRow> run_workload(const Graph& g, const LandmarkSet& landmarks, std::span<const Query> queries,
                                   std::span<const Method> methods, const WorkloadOptions& options) {
    const bool need_alt = std::find(methods.begin(), methods.end(), Method::alt) != methods.end();
    const bool need_alp = std::find(methods.begin(), methods.end(), Method::alp) != methods.end();
    std::optional<AltEmbedding> alt;
    std::optional<DistributedEmbedding> alp;
    if (need_alt || need_alp) alt = build_alt_embedding(g, landmarks);
    if (need_alp) alp = build_distributed_embedding(g, landmarks);

    auto run_one = [&](const Query& q) {
        std::vector<BenchRow> rows;
        rows.reserve(methods.size());
        for (Method m : methods) {
            std::uint64_t ns = 0;
            BenchRow row;
            switch (m) {
                case Method::dijkstra:
                    row = row_from(m, q, timed(options.timing, ns, [&] { return dijkstra_query(g, q.source, q.target); }));
                    break;
                case Method::alt:
                    row = row_from(m, q, timed(options.timing, ns, [&] { return astar_alt(g, *alt, q.source, q.target); }));
                    break;
                case Method::alp: {
                    row = row_from(m, q, timed(options.timing, ns, [&] {
                                       return astar_alp(g, *alp, q.source, q.target, options.alp);
                                   }));
                    // Second, untimed pass for the histogram; the search is
                    // deterministic so it evaluates the same vertices.
                    std::array<std::uint64_t, 5> histogram{};
                    const auto traced = astar(g, q.source, q.target,
                                              ClassifyingAlp(*alt, *alp, q.target, options.alp, histogram));
                    if (traced.heuristic_evals != row.heuristic_evals) {
                        throw WorkloadError("nondeterministic ALP search");
                    }
                    row.scenarios = histogram;
                    break;
                }
            }
            row.wall_time_ns = ns;
            if (!rows.empty() && rows.front().distance != row.distance) {
                throw WorkloadError("distance mismatch on query (" + std::to_string(q.source) + "," +
                                    std::to_string(q.target) + "): " + to_string(rows.front().method) + " " +
                                    std::to_string(rows.front().distance) + " vs " + to_string(m) + " " +
                                    std::to_string(row.distance));
            }
            rows.push_back(row);
        }
        return rows;
    };

    std::vector<std::vector<BenchRow>> per_query(queries.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(queries.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < queries.size(); ++i) per_query[i] = run_one(queries[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < queries.size(); i = next++) {
                    try {
                        per_query[i] = run_one(queries[i]);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<BenchRow> out;
    out.reserve(queries.size() * methods.size());
    for (auto& rows : per_query) out.insert(out.end(), rows.begin(), rows.end());
    return out;
}

VerificationReport verify_workload(const Graph& g, std::span<const BenchRow> rows) {
    VerificationReport report;
    std::map<VertexId, std::vector<Weight>> oracle;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        ++report.rows_checked;
        if (!g.contains(row.source) || !g.contains(row.target)) {
            report.violations.push_back({i, row.method, row.source, row.target, row.distance, kUnreached});
            continue;
        }
        auto it = oracle.find(row.source);
        if (it == oracle.end()) it = oracle.emplace(row.source, shortest_path_tree(g, row.source).dist).first;
        const Weight expected = it->second[row.target];
        if (row.distance != expected) {
            report.violations.push_back({i, row.method, row.source, row.target, row.distance, expected});
        }
    }
    return report;
}

std::vector<MethodSummary> summarize(std::span<const BenchRow> rows) {
    std::vector<MethodSummary> out;
    for (const auto& row : rows) {
        auto it = std::find_if(out.begin(), out.end(), [&](const MethodSummary& s) { return s.method == row.method; });
        if (it == out.end()) {
            out.push_back({});
            it = out.end() - 1;
            it->method = row.method;
        }
        ++it->queries;
        it->mean_settled += static_cast<double>(row.settled);
        it->mean_expanded += static_cast<double>(row.expanded);
        it->mean_reopened += static_cast<double>(row.reopened);
        it->mean_heuristic_evals += static_cast<double>(row.heuristic_evals);
        it->mean_arithmetic += static_cast<double>(row.subs + row.muls + row.divs);
        for (std::size_t s = 0; s < 5; ++s) it->scenarios[s] += row.scenarios[s];
    }
    for (auto& s : out) {
        const auto q = static_cast<double>(s.queries);
        s.mean_settled /= q;
        s.mean_expanded /= q;
        s.mean_reopened /= q;
        s.mean_heuristic_evals /= q;
        s.mean_arithmetic /= q;
    }
    return out;
}

}  // namespace alp
