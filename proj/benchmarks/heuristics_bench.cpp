#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "alp/heuristics.hpp"

namespace {

using namespace alp;

struct Setup {
    Graph g;
    LandmarkSet landmarks;
    AltEmbedding alt;
    DistributedEmbedding alp;

    explicit Setup(std::size_t k)
        : g(generate_grid(100, 100)),
          landmarks(select_farthest(g, k, 0)),
          alt(build_alt_embedding(g, landmarks)),
          alp(build_distributed_embedding(g, landmarks)) {}
};

const Setup& setup(std::size_t k) {
    static std::vector<std::unique_ptr<Setup>> cache(65);
    if (!cache[k]) cache[k] = std::make_unique<Setup>(k);
    return *cache[k];
}

void BM_AltH(benchmark::State& state) {
    const auto& s = setup(static_cast<std::size_t>(state.range(0)));
    VertexId v = 0;
    const VertexId n = static_cast<VertexId>(s.g.vertex_count());
    for (auto _ : state) {
        benchmark::DoNotOptimize(alt_h(s.alt, v, n - 1 - v).value);
        v = (v + 7919) % n;
    }
}
BENCHMARK(BM_AltH)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

void BM_AlpDualH(benchmark::State& state) {
    const auto& s = setup(static_cast<std::size_t>(state.range(0)));
    const AlpConfig config{state.range(1) ? CountingMode::optimized : CountingMode::paper_faithful, true};
    VertexId v = 0;
    const VertexId n = static_cast<VertexId>(s.g.vertex_count());
    for (auto _ : state) {
        benchmark::DoNotOptimize(alp_dual_h(s.alp, v, n - 1 - v, config).value);
        v = (v + 7919) % n;
    }
}
BENCHMARK(BM_AlpDualH)->ArgsProduct({{4, 8, 16, 64}, {0, 1}});

}  // namespace
