#include <chrono>
#include <stdexcept>

#include "meek_closer.hpp"
#include "pdag/error.hpp"
#include "pdag/orientation.hpp"

namespace pdag {

namespace {

using Clock = std::chrono::steady_clock;

double micros_since(Clock::time_point start) {
    return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

}  // namespace

CeOrientationResult maximal_orientation_ce(const Pdag& g, ExtensionAlgorithm extender) {
    CeOrientationResult result;

    auto t0 = Clock::now();
    ExtensionOutcome outcome = extend(g, extender);
    result.timings.extension_us = micros_since(t0);
    result.counters = outcome.counters;
    if (!outcome.extended()) throw InvalidInput("maximal_orientation_ce: input is not extendable");
    const Dag& dag = outcome.extension->dag;

    t0 = Clock::now();
    result.graph = dag_to_cpdag(dag);
    result.timings.cpdag_us = micros_since(t0);

    t0 = Clock::now();
    Pdag& out = result.graph;
    std::vector<std::size_t> position(g.vertex_count(), 0);
    const auto& order = dag.topological_order();
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    OrientationTrace trace;
    MeekCloser closer(out, trace, std::move(position));
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v : g.children(u)) {
            if (out.has_undirected(u, v)) {
                out.orient(u, v);
                ++result.seeded_arcs;
                closer.enqueue_around_arc(u, v);
            } else if (!out.has_arc(u, v)) {
                throw std::logic_error("maximal_orientation_ce: CPDAG reverses an arc of the input");
            }
        }
    }
    closer.run();
    result.timings.meek_us = micros_since(t0);
    result.max_enqueues = closer.max_enqueues();

#ifndef NDEBUG
    if (!(direct_meek(g).graph == result.graph)) {
        throw std::logic_error("maximal_orientation_ce: result differs from direct Meek closure");
    }
#endif
    return result;
}

}  // namespace pdag
