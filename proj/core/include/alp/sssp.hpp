// sssp.hpp - Dijkstra kernels used for preprocessing and as test oracles.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "alp/graph.hpp"

namespace alp {

// Kernel invocation accounting. Callers pass one in to observe how many
// Dijkstra runs a construction performed; nothing here is global state.
struct KernelStats {
    std::size_t full_passes = 0;      // runs that settle every reachable vertex
    std::size_t truncated_runs = 0;   // runs that stop once their targets settle
    std::size_t vertices_settled = 0;

    KernelStats& operator+=(const KernelStats& o) {
        full_passes += o.full_passes;
        truncated_runs += o.truncated_runs;
        vertices_settled += o.vertices_settled;
        return *this;
    }
};

// Result of a single- or multi-source run. Unreached vertices carry
// dist = kUnreached, owner = parent = kNoVertex.
struct DistanceMap {
    std::vector<VertexId> sources;
    std::vector<Weight> dist;
    std::vector<VertexId> owner;   // attaining source vertex id
    std::vector<VertexId> parent;  // predecessor in the shortest path forest

    bool reached(VertexId v) const { return dist[v] != kUnreached; }
};

// Dense row-major square table of distances.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t size, Weight fill = 0.0) : size_(size), data_(size * size, fill) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t entry_count() const noexcept { return data_.size(); }

    Weight operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }
    Weight& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }

    std::span<const Weight> row(std::size_t i) const { return {data_.data() + i * size_, size_}; }
    std::span<const Weight> data() const noexcept { return data_; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t size_ = 0;
    std::vector<Weight> data_;
};

DistanceMap shortest_path_tree(const Graph& g, VertexId source, KernelStats* stats = nullptr);

// Nearest-source distances; ties go to the smallest source id.
DistanceMap multi_source_spt(const Graph& g, std::span<const VertexId> sources, KernelStats* stats = nullptr);

// Same pass, ties go to the source appearing first in `sources`.
DistanceMap multi_source_spt_ordered(const Graph& g, std::span<const VertexId> sources,
                                     KernelStats* stats = nullptr);

// Pairwise landmark distances. One SPT per landmark, each stopped as soon as
// every landmark is settled; only the |L|^2 entries are kept.
SquareMatrix landmark_matrix(const Graph& g, std::span<const VertexId> landmarks, KernelStats* stats = nullptr);

inline constexpr std::size_t kDefaultOracleCap = 5000;

// Exact all-pairs distances by one SPT per vertex. Throws std::length_error
// above `cap` vertices.
SquareMatrix all_pairs_oracle(const Graph& g, std::size_t cap = kDefaultOracleCap);

}  // namespace alp
