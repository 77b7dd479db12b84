#include "alp/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace alp {
namespace {

// Counts one subtraction per binary minus. Absolute value is free.
struct Tally {
    OpCounters c;
    double sub(double x, double y) {
        ++c.subtractions;
        return x - y;
    }
    double mul(double x, double y) {
        ++c.multiplications;
        return x * y;
    }
    double div(double x, double y) {
        ++c.divisions;
        return x / y;
    }
};

struct Quad {
    double a;  // d(v, l1)
    double b;  // d(l1, l2)
    double c;  // d(l2, t)
    bool shared;
};

Quad quad_of(const DistributedEmbedding& e, VertexId v, VertexId t) {
    const LandmarkIndex l1 = e.owner[v];
    const LandmarkIndex l2 = e.owner[t];
    return {e.dist_to_owner[v], e.lmatrix(l1, l2), e.dist_to_owner[t], l1 == l2};
}

void check_pair(std::size_t n, VertexId v, VertexId t) {
    if (v >= n || t >= n) {
        throw std::out_of_range("heuristic query (" + std::to_string(v) + "," + std::to_string(t) +
                                ") out of range");
    }
}

double finish_max(const HeuristicEval& out) {
    double best = 0.0;
    for (const auto& comp : out.components) {
        if (comp && *comp > best) best = *comp;
    }
    return best;
}

void eval_paper_faithful(const Quad& q, bool ptolemy, HeuristicEval& out) {
    Tally t;
    auto& pi = out.components;
    pi[0] = t.sub(std::abs(t.sub(q.a, q.b)), q.c);
    pi[1] = t.sub(std::abs(t.sub(q.a, q.c)), q.b);
    pi[2] = t.sub(std::abs(t.sub(q.b, q.c)), q.a);
    if (q.shared) {
        pi[3] = std::abs(t.sub(q.a, q.c));
        pi[4] = std::abs(t.sub(q.a, q.c));
        t.c.max_arity = 5;
    } else if (ptolemy) {
        const double across = t.mul(std::abs(t.sub(q.a, q.b)), std::abs(t.sub(q.b, q.c)));
        pi[5] = t.div(t.sub(across, t.mul(q.a, q.c)), q.b);
        t.c.max_arity = 4;
    } else {
        t.c.max_arity = 3;
    }
    out.counters = t.c;
}

void eval_optimized(const Quad& q, bool ptolemy, HeuristicEval& out) {
    Tally t;
    auto& pi = out.components;
    if (q.shared) {
        // b == 0: every component collapses onto a - c.
        const double ac = t.sub(q.a, q.c);
        pi[0] = ac;
        pi[1] = std::abs(ac);
        pi[2] = -ac;
        pi[3] = std::abs(ac);
        pi[4] = std::abs(ac);
        t.c.max_arity = 1;
        out.counters = t.c;
        return;
    }
    const double ab = std::abs(t.sub(q.a, q.b));
    const double ac = std::abs(t.sub(q.a, q.c));
    const double bc = std::abs(t.sub(q.b, q.c));
    pi[0] = t.sub(ab, q.c);
    pi[1] = t.sub(ac, q.b);
    pi[2] = t.sub(bc, q.a);
    t.c.max_arity = 3;
    if (ptolemy) {
        pi[5] = t.div(t.sub(t.mul(ab, bc), t.mul(q.a, q.c)), q.b);
        t.c.max_arity = 4;
    }
    out.counters = t.c;
}

}  // namespace

HeuristicEval alt_h(const AltEmbedding& e, VertexId v, VertexId t) {
    check_pair(e.vertex_count, v, t);
    HeuristicEval out;
    double best = 0.0;
    for (LandmarkIndex i = 0; i < e.landmarks.size(); ++i) {
        best = std::max(best, std::abs(e.dist(i, v) - e.dist(i, t)));
    }
    out.value = best;
    out.counters.subtractions = e.landmarks.size();
    out.counters.max_arity = e.landmarks.size();
    return out;
}

LandmarkIndex alt_best_landmark(const AltEmbedding& e, VertexId v, VertexId t) {
    check_pair(e.vertex_count, v, t);
    LandmarkIndex best = 0;
    double best_value = -1.0;
    for (LandmarkIndex i = 0; i < e.landmarks.size(); ++i) {
        const double value = std::abs(e.dist(i, v) - e.dist(i, t));
        if (value > best_value) {
            best_value = value;
            best = i;
        }
    }
    return best;
}

std::array<std::optional<double>, kComponentCount> alp_components(const DistributedEmbedding& e, VertexId v,
                                                                  VertexId t, bool ptolemy) {
    check_pair(e.vertex_count(), v, t);
    HeuristicEval out;
    eval_paper_faithful(quad_of(e, v, t), ptolemy, out);
    return out.components;
}

HeuristicEval alp_dual_h(const DistributedEmbedding& e, VertexId v, VertexId t, const AlpConfig& config) {
    check_pair(e.vertex_count(), v, t);
    HeuristicEval out;
    const Quad q = quad_of(e, v, t);
    if (config.mode == CountingMode::paper_faithful) {
        eval_paper_faithful(q, config.ptolemy, out);
    } else {
        eval_optimized(q, config.ptolemy, out);
    }
    out.value = finish_max(out);
    return out;
}

const char* to_string(Scenario s) {
    switch (s) {
        case Scenario::s1: return "S1";
        case Scenario::s2: return "S2";
        case Scenario::s3: return "S3";
        case Scenario::s4: return "S4";
        case Scenario::s5: return "S5";
    }
    return "?";
}

Scenario classify_scenario(const AltEmbedding& alt, const DistributedEmbedding& alp, VertexId v, VertexId t) {
    if (!(alt.landmarks == alp.landmarks)) {
        throw std::invalid_argument("classify_scenario: embeddings use different landmark sets");
    }
    check_pair(alp.vertex_count(), v, t);
    const LandmarkIndex best = alt_best_landmark(alt, v, t);
    const LandmarkIndex l1 = alp.owner[v];
    const LandmarkIndex l2 = alp.owner[t];
    if (l1 == l2) return l1 == best ? Scenario::s3 : Scenario::s4;
    if (l1 == best) return Scenario::s1;
    if (l2 == best) return Scenario::s2;
    return Scenario::s5;
}

}  // namespace alp
