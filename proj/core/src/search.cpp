#include "alp/search.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace alp {

namespace detail {

std::vector<VertexId> trace_path(const std::vector<VertexId>& parent, VertexId source, VertexId target) {
    std::vector<VertexId> path{target};
    for (VertexId v = target; v != source;) {
        v = parent[v];
        path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace detail

bool validate_path(const Graph& g, VertexId source, VertexId target, const std::vector<VertexId>& path,
                   Weight distance) {
    if (path.empty() || path.front() != source || path.back() != target) return false;
    Weight total = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        auto w = g.edge_weight(path[i], path[i + 1]);
        if (!w) return false;
        total += *w;
    }
    return total == distance;
}

QueryResult astar_alt(const Graph& g, const AltEmbedding& e, VertexId source, VertexId target,
                      const SearchOptions& options) {
    detail::check_endpoints(g, source, target);
    return astar(g, source, target, AltHeuristic(e, target), options);
}

QueryResult astar_alp(const Graph& g, const DistributedEmbedding& e, VertexId source, VertexId target,
                      const AlpConfig& config, const SearchOptions& options) {
    detail::check_endpoints(g, source, target);
    return astar(g, source, target, AlpHeuristic(e, target, config), options);
}

QueryResult dijkstra_query(const Graph& g, VertexId source, VertexId target, const SearchOptions& options) {
    detail::check_endpoints(g, source, target);
    const std::size_t n = g.vertex_count();
    QueryResult out;
    std::vector<Weight> dist(n, kUnreached);
    std::vector<VertexId> parent(n, kNoVertex);
    std::vector<char> done(n, 0);
    using Entry = std::pair<Weight, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

    dist[source] = 0.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (done[u] || d > dist[u]) continue;
        done[u] = 1;
        ++out.settled;
        if (options.record_trace) out.expansion_order.push_back(u);
        if (u == target) break;
        for (const auto& arc : g.neighbors(u)) {
            const Weight nd = d + arc.weight;
            if (nd < dist[arc.to]) {
                dist[arc.to] = nd;
                parent[arc.to] = u;
                heap.emplace(nd, arc.to);
            }
        }
    }
    out.expanded = out.settled;
    out.distance = dist[target];
    if (out.reachable()) out.path = detail::trace_path(parent, source, target);
    return out;
}

}  // namespace alp
