// search.hpp - point-to-point A* (with reopening) and Dijkstra.

#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "alp/graph.hpp"
#include "alp/heuristics.hpp"

namespace alp {

struct QueryResult {
    Weight distance = kUnreached;
    std::vector<VertexId> path;
    std::uint64_t settled = 0;    // distinct vertices expanded
    std::uint64_t expanded = 0;   // expansions, reopenings included
    std::uint64_t reopened = 0;   // expanded - settled
    std::uint64_t heuristic_evals = 0;
    std::uint64_t priority_inversions = 0;  // pops with f below an earlier pop
    OpCounters op_totals;
    std::vector<VertexId> expansion_order;  // filled when SearchOptions::record_trace

    bool reachable() const noexcept { return distance != kUnreached; }
};

struct SearchOptions {
    bool record_trace = false;
};

template <typename H>
concept Heuristic = requires(const H& h, VertexId v) {
    { h(v) } -> std::convertible_to<HeuristicEval>;
};

struct ZeroHeuristic {
    HeuristicEval operator()(VertexId) const { return {}; }
};

// True when `path` runs source..target over existing edges whose weights sum
// to `distance`.
bool validate_path(const Graph& g, VertexId source, VertexId target, const std::vector<VertexId>& path,
                   Weight distance);

namespace detail {

inline void check_endpoints(const Graph& g, VertexId source, VertexId target) {
    if (!g.contains(source) || !g.contains(target)) {
        throw std::out_of_range("query endpoints (" + std::to_string(source) + "," + std::to_string(target) +
                                ") out of range");
    }
}

std::vector<VertexId> trace_path(const std::vector<VertexId>& parent, VertexId source, VertexId target);

struct OpenEntry {
    double f;
    Weight g;
    VertexId v;
};

// Min-heap order: smaller f, then larger g, then smaller vertex id.
struct OpenAfter {
    bool operator()(const OpenEntry& x, const OpenEntry& y) const {
        if (x.f != y.f) return x.f > y.f;
        if (x.g != y.g) return x.g < y.g;
        return x.v > y.v;
    }
};

}  // namespace detail

// Reopens a closed vertex whenever a strictly shorter tentative distance
// reaches it, so the result is exact for any admissible heuristic. The
// heuristic is evaluated each time a vertex's tentative distance improves and
// is never cached.
template <Heuristic H>
QueryResult astar(const Graph& g, VertexId source, VertexId target, const H& h, const SearchOptions& options = {}) {
    detail::check_endpoints(g, source, target);
    const std::size_t n = g.vertex_count();
    QueryResult out;
    std::vector<Weight> best(n, kUnreached);
    std::vector<VertexId> parent(n, kNoVertex);
    std::vector<char> expanded_once(n, 0);
    std::priority_queue<detail::OpenEntry, std::vector<detail::OpenEntry>, detail::OpenAfter> open;

    auto estimate = [&](VertexId v) {
        HeuristicEval e = h(v);
        ++out.heuristic_evals;
        out.op_totals += e.counters;
        return e.value;
    };

    best[source] = 0.0;
    open.push({estimate(source), 0.0, source});
    double last_f = -1.0;
    while (!open.empty()) {
        const auto top = open.top();
        open.pop();
        if (top.g > best[top.v]) continue;  // stale
        if (top.f < last_f) ++out.priority_inversions;
        last_f = std::max(last_f, top.f);
        ++out.expanded;
        if (!expanded_once[top.v]) {
            expanded_once[top.v] = 1;
            ++out.settled;
        }
        if (options.record_trace) out.expansion_order.push_back(top.v);
        if (top.v == target) break;
        for (const auto& arc : g.neighbors(top.v)) {
            const Weight ng = top.g + arc.weight;
            if (ng < best[arc.to]) {
                best[arc.to] = ng;
                parent[arc.to] = top.v;
                open.push({ng + estimate(arc.to), ng, arc.to});
            }
        }
    }
    out.reopened = out.expanded - out.settled;
    out.distance = best[target];
    if (out.reachable()) out.path = detail::trace_path(parent, source, target);
    return out;
}

QueryResult astar_alt(const Graph& g, const AltEmbedding& e, VertexId source, VertexId target,
                      const SearchOptions& options = {});
QueryResult astar_alp(const Graph& g, const DistributedEmbedding& e, VertexId source, VertexId target,
                      const AlpConfig& config = {}, const SearchOptions& options = {});

// Plain Dijkstra, stops once the target is settled. Performs no heuristic
// arithmetic, so op_totals stays zero.
QueryResult dijkstra_query(const Graph& g, VertexId source, VertexId target, const SearchOptions& options = {});

}  // namespace alp
