#include "pdag/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "pdag/error.hpp"

namespace pdag {

namespace {

std::pair<VertexId, VertexId> pair_key(const Edge& e) {
    return {std::min(e.from, e.to), std::max(e.from, e.to)};
}

void sort_canonical(std::vector<Edge>& edges) {
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return pair_key(a) < pair_key(b); });
}

std::vector<VertexId> sorted(const NeighborSet& set) {
    std::vector<VertexId> out(set.begin(), set.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const char* to_string(EdgeKind kind) noexcept {
    switch (kind) {
        case EdgeKind::None: return "none";
        case EdgeKind::ArcForward: return "->";
        case EdgeKind::ArcBackward: return "<-";
        case EdgeKind::Undirected: return "--";
    }
    return "?";
}

Pdag::Pdag(std::size_t n)
    : parents_(n), children_(n), siblings_(n), alive_(n, 1), alive_count_(n) {}

void Pdag::require_vertex(VertexId v, const char* op) const {
    if (v < 0 || static_cast<std::size_t>(v) >= alive_.size()) {
        throw UsageError(std::string(op) + ": vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(alive_.size()) + ")");
    }
    if (alive_[v] == 0) {
        throw UsageError(std::string(op) + ": vertex " + std::to_string(v) + " was removed");
    }
}

void Pdag::require_pair(VertexId u, VertexId v, const char* op) const {
    require_vertex(u, op);
    require_vertex(v, op);
    if (u == v) {
        throw UsageError(std::string(op) + ": self-loop on vertex " + std::to_string(u));
    }
}

void Pdag::require_insertable(VertexId u, VertexId v, const char* op) const {
    require_pair(u, v, op);
    if (adjacent(u, v)) {
        throw UsageError(std::string(op) + ": vertices " + std::to_string(u) + " and " +
                         std::to_string(v) + " are already adjacent");
    }
}

void Pdag::add_arc(VertexId from, VertexId to) {
    require_insertable(from, to, "add_arc");
    children_[from].insert(to);
    parents_[to].insert(from);
    ++arc_count_;
}

void Pdag::add_undirected(VertexId u, VertexId v) {
    require_insertable(u, v, "add_undirected");
    siblings_[u].insert(v);
    siblings_[v].insert(u);
    ++undirected_count_;
}

void Pdag::add(const Edge& e) {
    if (e.directed) {
        add_arc(e.from, e.to);
    } else {
        add_undirected(e.from, e.to);
    }
}

void Pdag::orient(VertexId from, VertexId to) {
    require_pair(from, to, "orient");
    if (!has_undirected(from, to)) {
        throw UsageError("orient: no undirected edge " + std::to_string(from) + " -- " +
                         std::to_string(to));
    }
    siblings_[from].erase(to);
    siblings_[to].erase(from);
    --undirected_count_;
    children_[from].insert(to);
    parents_[to].insert(from);
    ++arc_count_;
}

void Pdag::remove_edge(VertexId u, VertexId v) {
    require_pair(u, v, "remove_edge");
    if (siblings_[u].erase(v) != 0) {
        siblings_[v].erase(u);
        --undirected_count_;
    } else if (children_[u].erase(v) != 0) {
        parents_[v].erase(u);
        --arc_count_;
    } else if (parents_[u].erase(v) != 0) {
        children_[v].erase(u);
        --arc_count_;
    } else {
        throw UsageError("remove_edge: vertices " + std::to_string(u) + " and " +
                         std::to_string(v) + " are not adjacent");
    }
}

EdgeKind Pdag::adjacency(VertexId u, VertexId v) const {
    require_pair(u, v, "adjacency");
    if (children_[u].contains(v)) return EdgeKind::ArcForward;
    if (parents_[u].contains(v)) return EdgeKind::ArcBackward;
    if (siblings_[u].contains(v)) return EdgeKind::Undirected;
    return EdgeKind::None;
}

Neighborhood Pdag::neighborhood(VertexId v) const {
    require_vertex(v, "neighborhood");
    return Neighborhood{parents_[v], children_[v], siblings_[v]};
}

bool Pdag::is_potential_sink(VertexId v, OpCounters* counters) const {
    if (counters != nullptr) ++counters->potential_sink_checks;
    if (!children_[v].empty()) return false;

    // Pairs are visited in ascending id order so the number of tests does not
    // depend on the hash table layout.
    thread_local std::vector<VertexId> si;
    thread_local std::vector<VertexId> pa;
    si.assign(siblings_[v].begin(), siblings_[v].end());
    pa.assign(parents_[v].begin(), parents_[v].end());
    std::sort(si.begin(), si.end());
    std::sort(pa.begin(), pa.end());

    std::uint64_t tests = 0;
    bool ok = true;
    for (std::size_t i = 0; ok && i < si.size(); ++i) {
        for (std::size_t j = i + 1; j < si.size(); ++j) {
            ++tests;
            if (!adjacent(si[i], si[j])) {
                ok = false;
                break;
            }
        }
        if (!ok) break;
        for (VertexId p : pa) {
            ++tests;
            if (!adjacent(si[i], p)) {
                ok = false;
                break;
            }
        }
    }
    if (counters != nullptr) counters->adjacency_tests += tests;
    return ok;
}

std::vector<Edge> Pdag::remove_vertex(VertexId v) {
    require_vertex(v, "remove_vertex");
    std::vector<Edge> removed;
    removed.reserve(degree(v));
    for (VertexId p : parents_[v]) {
        children_[p].erase(v);
        removed.push_back({p, v, true});
    }
    for (VertexId c : children_[v]) {
        parents_[c].erase(v);
        removed.push_back({v, c, true});
    }
    for (VertexId s : siblings_[v]) {
        siblings_[s].erase(v);
        removed.push_back({std::min(s, v), std::max(s, v), false});
    }
    arc_count_ -= parents_[v].size() + children_[v].size();
    undirected_count_ -= siblings_[v].size();
    parents_[v].clear();
    children_[v].clear();
    siblings_[v].clear();
    alive_[v] = 0;
    --alive_count_;
    sort_canonical(removed);
    return removed;
}

std::vector<VertexId> Pdag::alive_vertices() const {
    std::vector<VertexId> out;
    out.reserve(alive_count_);
    for (std::size_t v = 0; v < alive_.size(); ++v) {
        if (alive_[v] != 0) out.push_back(static_cast<VertexId>(v));
    }
    return out;
}

std::vector<Edge> Pdag::arcs() const {
    std::vector<Edge> out;
    out.reserve(arc_count_);
    for (std::size_t v = 0; v < children_.size(); ++v) {
        for (VertexId c : children_[v]) out.push_back({static_cast<VertexId>(v), c, true});
    }
    sort_canonical(out);
    return out;
}

std::vector<Edge> Pdag::undirected_edges() const {
    std::vector<Edge> out;
    out.reserve(undirected_count_);
    for (std::size_t v = 0; v < siblings_.size(); ++v) {
        for (VertexId s : siblings_[v]) {
            if (static_cast<VertexId>(v) < s) out.push_back({static_cast<VertexId>(v), s, false});
        }
    }
    sort_canonical(out);
    return out;
}

std::vector<Edge> Pdag::edges() const {
    std::vector<Edge> out = arcs();
    std::vector<Edge> und = undirected_edges();
    out.insert(out.end(), und.begin(), und.end());
    sort_canonical(out);
    return out;
}

bool operator==(const Pdag& a, const Pdag& b) {
    return a.alive_ == b.alive_ && a.arc_count_ == b.arc_count_ &&
           a.undirected_count_ == b.undirected_count_ && a.parents_ == b.parents_ &&
           a.siblings_ == b.siblings_;
}

ValidationResult validate(const Pdag& g) {
    ValidationResult result;
    const auto n = static_cast<VertexId>(g.vertex_count());
    auto broken = [&](const std::string& msg) {
        result.status = ValidationResult::Status::BrokenInvariant;
        result.message = msg;
        return result;
    };
    auto in_range = [n](VertexId x) { return x >= 0 && x < n; };

    std::size_t arcs = 0;
    std::size_t undirected = 0;
    for (VertexId v = 0; v < n; ++v) {
        const NeighborSet& pa = g.parents(v);
        const NeighborSet& ch = g.children(v);
        const NeighborSet& si = g.siblings(v);
        if (!g.is_alive(v)) {
            if (!pa.empty() || !ch.empty() || !si.empty()) {
                return broken("removed vertex " + std::to_string(v) + " still has incident edges");
            }
            continue;
        }
        if (pa.contains(v) || ch.contains(v) || si.contains(v)) {
            return broken("vertex " + std::to_string(v) + " is its own neighbor");
        }
        for (VertexId p : pa) {
            if (!in_range(p) || !g.is_alive(p) || !g.children(p).contains(v)) {
                return broken("parent set of " + std::to_string(v) + " is not mirrored");
            }
            if (ch.contains(p) || si.contains(p)) {
                return broken("neighbor sets of " + std::to_string(v) + " overlap");
            }
        }
        for (VertexId c : ch) {
            if (!in_range(c) || !g.is_alive(c) || !g.parents(c).contains(v)) {
                return broken("child set of " + std::to_string(v) + " is not mirrored");
            }
            if (si.contains(c)) return broken("neighbor sets of " + std::to_string(v) + " overlap");
        }
        for (VertexId s : si) {
            if (!in_range(s) || !g.is_alive(s) || !g.siblings(s).contains(v)) {
                return broken("sibling set of " + std::to_string(v) + " is not symmetric");
            }
        }
        arcs += ch.size();
        undirected += si.size();
    }
    if (arcs != g.arc_count() || undirected != 2 * g.undirected_count()) {
        return broken("edge counters disagree with neighbor sets");
    }

    // Iterative DFS over arcs; gray vertices on the stack form the cycle.
    enum : std::uint8_t { kWhite, kGray, kBlack };
    std::vector<std::uint8_t> color(n, kWhite);
    std::vector<VertexId> parent(n, -1);
    struct Frame {
        VertexId v;
        std::vector<VertexId> next;
        std::size_t idx;
    };
    for (VertexId root = 0; root < n; ++root) {
        if (!g.is_alive(root) || color[root] != kWhite) continue;
        std::vector<Frame> stack;
        stack.push_back({root, sorted(g.children(root)), 0});
        color[root] = kGray;
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.idx == top.next.size()) {
                color[top.v] = kBlack;
                stack.pop_back();
                continue;
            }
            const VertexId w = top.next[top.idx++];
            if (color[w] == kGray) {
                std::vector<VertexId> cycle;
                for (VertexId x = top.v; x != w; x = parent[x]) cycle.push_back(x);
                cycle.push_back(w);
                std::reverse(cycle.begin(), cycle.end());
                std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
                result.status = ValidationResult::Status::DirectedCycle;
                result.cycle = std::move(cycle);
                std::ostringstream msg;
                msg << "directed cycle:";
                for (VertexId x : result.cycle) msg << ' ' << x;
                result.message = msg.str();
                return result;
            }
            if (color[w] == kWhite) {
                color[w] = kGray;
                parent[w] = top.v;
                stack.push_back({w, sorted(g.children(w)), 0});
            }
        }
    }
    return result;
}

std::optional<std::vector<VertexId>> topological_order(const Pdag& g) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    std::vector<std::size_t> indegree(n, 0);
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v) {
        if (!g.is_alive(v)) continue;
        indegree[v] = g.parents(v).size();
        if (indegree[v] == 0) ready.push(v);
    }
    std::vector<VertexId> order;
    order.reserve(g.alive_count());
    while (!ready.empty()) {
        const VertexId v = ready.top();
        ready.pop();
        order.push_back(v);
        for (VertexId c : g.children(v)) {
            if (--indegree[c] == 0) ready.push(c);
        }
    }
    if (order.size() != g.alive_count()) return std::nullopt;
    return order;
}

std::vector<VStructure> v_structures(const Pdag& g) {
    std::vector<VStructure> out;
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId v = 0; v < n; ++v) {
        if (g.parents(v).size() < 2) continue;
        const std::vector<VertexId> pa = sorted(g.parents(v));
        for (std::size_t i = 0; i < pa.size(); ++i) {
            for (std::size_t j = i + 1; j < pa.size(); ++j) {
                if (!g.adjacent(pa[i], pa[j])) out.push_back({pa[i], v, pa[j]});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t fingerprint(const Pdag& g) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xffU;
            h *= 1099511628211ULL;
        }
    };
    mix(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) mix(g.is_alive(static_cast<VertexId>(v)));
    for (const Edge& e : g.edges()) {
        mix(static_cast<std::uint64_t>(e.from));
        mix(static_cast<std::uint64_t>(e.to));
        mix(e.directed ? 1 : 0);
    }
    return h;
}

Dag::Dag(Pdag g, std::optional<std::vector<VertexId>> order) : graph_(std::move(g)) {
    if (graph_.undirected_count() != 0) {
        throw UsageError("Dag: graph has " + std::to_string(graph_.undirected_count()) +
                         " undirected edges");
    }
    if (order) {
        std::vector<std::size_t> pos(graph_.vertex_count(), graph_.vertex_count());
        if (order->size() != graph_.alive_count()) {
            throw UsageError("Dag: order does not cover the alive vertices");
        }
        for (std::size_t i = 0; i < order->size(); ++i) {
            const VertexId v = (*order)[i];
            if (!graph_.is_alive(v) || pos[v] != graph_.vertex_count()) {
                throw UsageError("Dag: order lists an invalid or repeated vertex");
            }
            pos[v] = i;
        }
        for (const Edge& e : graph_.arcs()) {
            if (pos[e.from] > pos[e.to]) throw UsageError("Dag: order is not topological");
        }
        order_ = std::move(*order);
        return;
    }
    auto topo = pdag::topological_order(graph_);
    if (!topo) throw UsageError("Dag: arcs contain a directed cycle");
    order_ = std::move(*topo);
}

}  // namespace pdag
