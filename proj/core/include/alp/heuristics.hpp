// heuristics.hpp - ALT and dual-landmark ALP lower bounds with operation counts.
//
// Notation used below, for a visited vertex v and target t:
//   l1 = landmark owning v, l2 = landmark owning t
//   a  = d(v, l1),  b = d(l1, l2),  c = d(l2, t)
//
// Components (absent ones are std::nullopt):
//   pi1 = |a - b| - c
//   pi2 = |a - c| - b
//   pi3 = |b - c| - a
//   pi4 = pi5 = |d(v,l) - d(t,l)|            only when l1 == l2 == l
//   pi6 = (|a - b| * |b - c| - a * c) / b    only when l1 != l2
//
// The heuristic is max(0, max of the available components).

#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "alp/embedding.hpp"

namespace alp {

struct OpCounters {
    std::uint64_t subtractions = 0;
    std::uint64_t multiplications = 0;
    std::uint64_t divisions = 0;
    std::uint64_t max_arity = 0;  // operands fed to the final max; summed when aggregated

    std::uint64_t arithmetic() const noexcept { return subtractions + multiplications + divisions; }

    OpCounters& operator+=(const OpCounters& o) {
        subtractions += o.subtractions;
        multiplications += o.multiplications;
        divisions += o.divisions;
        max_arity += o.max_arity;
        return *this;
    }
    friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

inline constexpr std::size_t kComponentCount = 6;

struct HeuristicEval {
    double value = 0.0;
    std::array<std::optional<double>, kComponentCount> components{};  // pi1..pi6 at [0..5]
    OpCounters counters;

    std::optional<double> component(int one_based) const { return components[one_based - 1]; }
};

enum class CountingMode {
    paper_faithful,  // every component evaluated as written, nothing shared
    optimized,       // shared differences reused; identical values
};

struct AlpConfig {
    CountingMode mode = CountingMode::paper_faithful;
    bool ptolemy = true;  // include pi6 in the cross-partition case
};

// max over landmarks of |d(v,l) - d(t,l)|; one subtraction per landmark.
HeuristicEval alt_h(const AltEmbedding& e, VertexId v, VertexId t);

// Index of the landmark attaining alt_h, ties to the smallest index.
LandmarkIndex alt_best_landmark(const AltEmbedding& e, VertexId v, VertexId t);

// Raw components as written, no clamping and no counters.
std::array<std::optional<double>, kComponentCount> alp_components(const DistributedEmbedding& e, VertexId v,
                                                                  VertexId t, bool ptolemy = true);

HeuristicEval alp_dual_h(const DistributedEmbedding& e, VertexId v, VertexId t, const AlpConfig& config = {});

enum class Scenario : std::uint8_t { s1 = 1, s2, s3, s4, s5 };

inline constexpr int scenario_index(Scenario s) { return static_cast<int>(s) - 1; }
const char* to_string(Scenario s);

// Compares the ALT maximizing landmark with the owners of v and t.
// Throws std::invalid_argument if the embeddings use different landmark sets.
Scenario classify_scenario(const AltEmbedding& alt, const DistributedEmbedding& alp, VertexId v, VertexId t);

// Bound evaluators with a target fixed, the shape search expects.
class AltHeuristic {
public:
    AltHeuristic(const AltEmbedding& e, VertexId target) : e_(&e), target_(target) {}
    HeuristicEval operator()(VertexId v) const { return alt_h(*e_, v, target_); }

private:
    const AltEmbedding* e_;
    VertexId target_;
};

class AlpHeuristic {
public:
    AlpHeuristic(const DistributedEmbedding& e, VertexId target, AlpConfig config = {})
        : e_(&e), target_(target), config_(config) {}
    HeuristicEval operator()(VertexId v) const { return alp_dual_h(*e_, v, target_, config_); }

private:
    const DistributedEmbedding* e_;
    VertexId target_;
    AlpConfig config_;
};

}  // namespace alp
