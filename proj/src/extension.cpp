#include "pdag/extension.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "pdag/degree_order.hpp"
#include "pdag/error.hpp"

namespace pdag {

namespace {

void require_valid(const Pdag& g, const char* op) {
    const ValidationResult check = validate(g);
    if (!check.ok()) throw UsageError(std::string(op) + ": invalid input graph, " + check.message);
}

// Working copy of the input plus the DAG under construction.
class Eliminator {
public:
    explicit Eliminator(const Pdag& g) : work_(g), out_(g.vertex_count()) {
        order_.reserve(g.alive_count());
    }

    Pdag& work() { return work_; }
    bool done() const { return work_.alive_count() == 0; }

    // Orients every remaining edge at sink towards it, then detaches sink.
    void eliminate(VertexId sink) {
        for (VertexId u : work_.siblings(sink)) out_.add_arc(u, sink);
        for (VertexId u : work_.parents(sink)) out_.add_arc(u, sink);
        work_.remove_vertex(sink);
        order_.push_back(sink);
    }

    ExtensionOutcome finish(const OpCounters& counters) {
        std::vector<VertexId> topo(order_.rbegin(), order_.rend());
        ExtensionOutcome outcome;
        outcome.counters = counters;
        outcome.extension = Extension{Dag(std::move(out_), std::move(topo)), std::move(order_)};
        return outcome;
    }

private:
    Pdag work_;
    Pdag out_;
    std::vector<VertexId> order_;
};

ExtensionOutcome not_extendable(const OpCounters& counters) {
    ExtensionOutcome outcome;
    outcome.counters = counters;
    return outcome;
}

}  // namespace

const char* to_string(ExtensionAlgorithm algo) noexcept {
    switch (algo) {
        case ExtensionAlgorithm::Dt: return "dt";
        case ExtensionAlgorithm::Dth: return "dth";
        case ExtensionAlgorithm::Dtic: return "dtic";
        case ExtensionAlgorithm::Brute: return "brute";
    }
    return "?";
}

std::optional<ExtensionAlgorithm> parse_extension_algorithm(std::string_view name) noexcept {
    if (name == "dt") return ExtensionAlgorithm::Dt;
    if (name == "dth") return ExtensionAlgorithm::Dth;
    if (name == "dtic") return ExtensionAlgorithm::Dtic;
    if (name == "brute") return ExtensionAlgorithm::Brute;
    return std::nullopt;
}

ExtensionOutcome extend_dt(const Pdag& g) {
    require_valid(g, "extend_dt");
    Eliminator elim(g);
    OpCounters counters;
    const auto n = static_cast<VertexId>(g.vertex_count());
    while (!elim.done()) {
        VertexId sink = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (elim.work().is_alive(v) && elim.work().is_potential_sink(v, &counters)) {
                sink = v;
                break;
            }
        }
        if (sink < 0) return not_extendable(counters);
        elim.eliminate(sink);
    }
    return elim.finish(counters);
}

ExtensionOutcome extend_dth(const Pdag& g) {
    require_valid(g, "extend_dth");
    Eliminator elim(g);
    DegreeOrder by_degree(g);
    OpCounters counters;
    while (!elim.done()) {
        VertexId sink = -1;
        for (VertexId v : by_degree.ascending()) {
            if (elim.work().is_potential_sink(v, &counters)) {
                sink = v;
                break;
            }
        }
        if (sink < 0) return not_extendable(counters);
        const Pdag& work = elim.work();
        for (VertexId u : work.parents(sink)) by_degree.decrement(u);
        for (VertexId u : work.siblings(sink)) by_degree.decrement(u);
        by_degree.remove(sink);
        elim.eliminate(sink);
    }
    return elim.finish(counters);
}

DticState::DticState(std::size_t n) : mentions_(n), live_(n, 0), scanned_(n, 0) {}

std::vector<std::pair<VertexId, VertexId>> DticState::violations(VertexId v) const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const Tuple& t : tuples_) {
        if (t.alive && t.owner == v) out.emplace_back(t.first, t.second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void DticState::scan(const Pdag& g, VertexId v, OpCounters& counters) {
    // Only reached while scanned_[v] is false, so the owned set is empty and
    // plain insertion is the same as the union.
    auto record = [&](VertexId u, VertexId w) {
        if (tuples_.size() >= std::numeric_limits<std::uint32_t>::max()) {
            throw std::length_error("DticState: tuple index overflow");
        }
        const auto id = static_cast<std::uint32_t>(tuples_.size());
        tuples_.push_back({v, u, w, true});
        mentions_[u].push_back(id);
        mentions_[w].push_back(id);
        ++live_[v];
    };
    std::uint64_t tests = 0;
    for (VertexId u : g.siblings(v)) {
        for (VertexId w : g.siblings(v)) {
            if (w == u) continue;
            ++tests;
            if (!g.adjacent(u, w)) record(u, w);
        }
        for (VertexId w : g.parents(v)) {
            ++tests;
            if (!g.adjacent(u, w)) record(u, w);
        }
    }
    counters.adjacency_tests += tests;
    scanned_[v] = 1;
}

void DticState::forget(VertexId v) {
    for (std::uint32_t id : mentions_[v]) {
        Tuple& t = tuples_[id];
        if (!t.alive) continue;
        t.alive = false;
        --live_[t.owner];
    }
    mentions_[v].clear();
    mentions_[v].shrink_to_fit();
}

ExtensionOutcome extend_dtic(const Pdag& g, const DticObserver& observer) {
    require_valid(g, "extend_dtic");
    Eliminator elim(g);
    DegreeOrder by_degree(g);
    DticState state(g.vertex_count());
    OpCounters counters;
    while (!elim.done()) {
        VertexId sink = -1;
        for (VertexId v : by_degree.ascending()) {
            const Pdag& work = elim.work();
            ++counters.potential_sink_checks;
            if (!state.scanned(v) && work.children(v).empty()) state.scan(work, v, counters);
            if (state.scanned(v) && state.violation_count(v) == 0) {
                sink = v;
                break;
            }
        }
        if (sink < 0) return not_extendable(counters);
        const Pdag& work = elim.work();
        for (VertexId u : work.parents(sink)) by_degree.decrement(u);
        for (VertexId u : work.siblings(sink)) by_degree.decrement(u);
        by_degree.remove(sink);
        elim.eliminate(sink);
        state.forget(sink);
        if (observer) observer(elim.work(), state);
    }
    return elim.finish(counters);
}

ExtensionOutcome brute_force_extend(const Pdag& g) {
    require_valid(g, "brute_force_extend");
    const std::vector<Edge> free_edges = g.undirected_edges();
    if (free_edges.size() > kBruteForceEdgeLimit) {
        throw UsageError("brute_force_extend: " + std::to_string(free_edges.size()) +
                         " undirected edges exceed the enumeration limit of " +
                         std::to_string(kBruteForceEdgeLimit));
    }
    const std::size_t n = g.vertex_count();
    const std::vector<Edge> fixed_arcs = g.arcs();

    // Arcs of g keep their v-structures in every orientation, so a candidate
    // is consistent iff it is acyclic and no oriented edge x -> y meets another
    // parent of y that is non-adjacent to x.
    std::vector<std::vector<VertexId>> extra_parents(n);
    std::vector<std::vector<VertexId>> children(n);
    std::vector<std::size_t> indegree(n);
    std::vector<VertexId> queue;
    queue.reserve(n);
    OpCounters counters;

    const std::uint64_t total = std::uint64_t{1} << free_edges.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (auto& p : extra_parents) p.clear();
        for (std::size_t i = 0; i < free_edges.size(); ++i) {
            const Edge& e = free_edges[i];
            if (((mask >> i) & 1U) == 0) {
                extra_parents[e.to].push_back(e.from);
            } else {
                extra_parents[e.from].push_back(e.to);
            }
        }
        bool consistent = true;
        for (std::size_t y = 0; consistent && y < n; ++y) {
            const auto& extra = extra_parents[y];
            for (std::size_t i = 0; consistent && i < extra.size(); ++i) {
                const VertexId x = extra[i];
                for (VertexId p : g.parents(static_cast<VertexId>(y))) {
                    ++counters.adjacency_tests;
                    if (!g.adjacent(x, p)) {
                        consistent = false;
                        break;
                    }
                }
                for (std::size_t j = i + 1; consistent && j < extra.size(); ++j) {
                    ++counters.adjacency_tests;
                    if (!g.adjacent(x, extra[j])) consistent = false;
                }
            }
        }
        if (!consistent) continue;

        for (auto& c : children) c.clear();
        std::fill(indegree.begin(), indegree.end(), 0);
        for (const Edge& e : fixed_arcs) {
            children[e.from].push_back(e.to);
            ++indegree[e.to];
        }
        for (std::size_t y = 0; y < n; ++y) {
            for (VertexId x : extra_parents[y]) {
                children[x].push_back(static_cast<VertexId>(y));
                ++indegree[y];
            }
        }
        queue.clear();
        for (std::size_t v = 0; v < n; ++v) {
            if (g.is_alive(static_cast<VertexId>(v)) && indegree[v] == 0) {
                queue.push_back(static_cast<VertexId>(v));
            }
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (VertexId c : children[queue[head]]) {
                if (--indegree[c] == 0) queue.push_back(c);
            }
        }
        if (queue.size() != g.alive_count()) continue;

        Pdag out(n);
        for (std::size_t v = 0; v < n; ++v) {
            if (!g.is_alive(static_cast<VertexId>(v))) out.remove_vertex(static_cast<VertexId>(v));
        }
        for (const Edge& e : fixed_arcs) out.add_arc(e.from, e.to);
        for (std::size_t y = 0; y < n; ++y) {
            for (VertexId x : extra_parents[y]) out.add_arc(x, static_cast<VertexId>(y));
        }
        ExtensionOutcome outcome;
        outcome.counters = counters;
        std::vector<VertexId> elimination(queue.rbegin(), queue.rend());
        outcome.extension = Extension{Dag(std::move(out), queue), std::move(elimination)};
        return outcome;
    }
    return not_extendable(counters);
}

ExtensionOutcome extend(const Pdag& g, ExtensionAlgorithm algo) {
    switch (algo) {
        case ExtensionAlgorithm::Dt: return extend_dt(g);
        case ExtensionAlgorithm::Dth: return extend_dth(g);
        case ExtensionAlgorithm::Dtic: return extend_dtic(g);
        case ExtensionAlgorithm::Brute: return brute_force_extend(g);
    }
    throw UsageError("extend: unknown algorithm");
}

bool is_consistent_extension(const Pdag& g, const Dag& d) {
    const Pdag& dg = d.graph();
    if (g.vertex_count() != dg.vertex_count() || dg.undirected_count() != 0) return false;
    if (g.edge_count() != dg.edge_count()) return false;
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId v = 0; v < n; ++v) {
        if (g.is_alive(v) != dg.is_alive(v)) return false;
        if (!g.is_alive(v)) continue;
        for (VertexId c : g.children(v)) {
            if (!dg.has_arc(v, c)) return false;
        }
        for (VertexId s : g.siblings(v)) {
            if (!dg.has_arc(v, s) && !dg.has_arc(s, v)) return false;
        }
    }
    // Equal edge counts plus the containment above give equal skeletons.
    return v_structures(g) == v_structures(dg);
}

}  // namespace pdag
