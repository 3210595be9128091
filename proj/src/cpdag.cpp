#include <algorithm>
#include <unordered_map>

#include "pdag/error.hpp"
#include "pdag/orientation.hpp"

namespace pdag {

namespace {

enum class Label : std::uint8_t { Unknown, Compelled, Reversible };

Pdag empty_like(const Pdag& g) {
    Pdag out(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!g.is_alive(static_cast<VertexId>(v))) out.remove_vertex(static_cast<VertexId>(v));
    }
    return out;
}

// Enumerates orientations of `free` on top of `fixed` (in mask order, bit i
// clear meaning free[i].from -> free[i].to) and calls visit(mask) for each
// one that is acyclic with exactly the v-structures `target`. Adjacency is
// read from `skeleton`, which must have the same skeleton as the candidates.
template <typename Visit>
void for_each_orientation(const Pdag& skeleton, const std::vector<Edge>& fixed,
                          const std::vector<Edge>& free, const std::vector<VStructure>& target,
                          const char* op, Visit&& visit) {
    if (free.size() > kBruteForceEdgeLimit) {
        throw UsageError(std::string(op) + ": " + std::to_string(free.size()) +
                         " edges exceed the enumeration limit of " +
                         std::to_string(kBruteForceEdgeLimit));
    }
    const std::size_t n = skeleton.vertex_count();
    std::vector<std::vector<VertexId>> parents(n);
    std::vector<std::size_t> indegree(n);
    std::vector<VertexId> queue;
    std::vector<VStructure> found;
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (auto& p : parents) p.clear();
        for (const Edge& e : fixed) parents[e.to].push_back(e.from);
        for (std::size_t i = 0; i < free.size(); ++i) {
            const Edge& e = free[i];
            if (((mask >> i) & 1U) == 0) {
                parents[e.to].push_back(e.from);
            } else {
                parents[e.from].push_back(e.to);
            }
        }
        found.clear();
        for (std::size_t v = 0; v < n; ++v) {
            auto& pa = parents[v];
            std::sort(pa.begin(), pa.end());
            for (std::size_t i = 0; i < pa.size(); ++i) {
                for (std::size_t j = i + 1; j < pa.size(); ++j) {
                    if (!skeleton.adjacent(pa[i], pa[j])) {
                        found.push_back({pa[i], static_cast<VertexId>(v), pa[j]});
                    }
                }
            }
        }
        std::sort(found.begin(), found.end());
        if (found != target) continue;

        // Acyclicity by repeatedly peeling vertices without remaining parents.
        queue.clear();
        for (std::size_t v = 0; v < n; ++v) {
            indegree[v] = parents[v].size();
            if (skeleton.is_alive(static_cast<VertexId>(v)) && indegree[v] == 0) {
                queue.push_back(static_cast<VertexId>(v));
            }
        }
        std::vector<std::vector<VertexId>> children(n);
        for (std::size_t v = 0; v < n; ++v) {
            for (VertexId p : parents[v]) children[p].push_back(static_cast<VertexId>(v));
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (VertexId c : children[queue[head]]) {
                if (--indegree[c] == 0) queue.push_back(c);
            }
        }
        if (queue.size() == skeleton.alive_count()) visit(mask);
    }
}

// An edge is directed in the output iff it had one orientation in every visited mask.
Pdag summarize(const Pdag& base, const std::vector<Edge>& free, std::uint64_t seen_forward,
               std::uint64_t seen_backward) {
    Pdag out = empty_like(base);
    for (const Edge& e : base.arcs()) out.add_arc(e.from, e.to);
    for (std::size_t i = 0; i < free.size(); ++i) {
        const bool fwd = ((seen_forward >> i) & 1U) != 0;
        const bool bwd = ((seen_backward >> i) & 1U) != 0;
        if (fwd && !bwd) {
            out.add_arc(free[i].from, free[i].to);
        } else if (bwd && !fwd) {
            out.add_arc(free[i].to, free[i].from);
        } else {
            out.add_undirected(free[i].from, free[i].to);
        }
    }
    return out;
}

}  // namespace

Pdag dag_to_cpdag(const Dag& d) {
    const Pdag& g = d.graph();
    const std::size_t n = g.vertex_count();
    const std::vector<VertexId>& order = d.topological_order();
    std::vector<std::size_t> position(n, 0);
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

    std::unordered_map<std::uint64_t, Label> label;
    label.reserve(g.arc_count());
    auto key = [n](VertexId from, VertexId to) {
        return static_cast<std::uint64_t>(from) * n + static_cast<std::uint64_t>(to);
    };
    auto get = [&](VertexId from, VertexId to) {
        auto it = label.find(key(from, to));
        return it == label.end() ? Label::Unknown : it->second;
    };
    auto label_unknown_into = [&](VertexId y, Label value) {
        for (VertexId p : g.parents(y)) {
            auto [it, inserted] = label.try_emplace(key(p, y), value);
            (void)it;
            (void)inserted;
        }
    };

    std::vector<VertexId> incoming;
    for (VertexId y : order) {
        incoming.assign(g.parents(y).begin(), g.parents(y).end());
        std::sort(incoming.begin(), incoming.end(),
                  [&](VertexId a, VertexId b) { return position[a] > position[b]; });
        for (VertexId x : incoming) {
            if (get(x, y) != Label::Unknown) continue;
            bool finished = false;
            for (VertexId w : g.parents(x)) {
                if (get(w, x) != Label::Compelled) continue;
                if (!g.has_arc(w, y)) {
                    label[key(x, y)] = Label::Compelled;
                    label_unknown_into(y, Label::Compelled);
                    finished = true;
                    break;
                }
                label[key(w, y)] = Label::Compelled;
            }
            if (finished) continue;
            bool compelled = false;
            for (VertexId z : g.parents(y)) {
                if (z != x && !g.has_arc(z, x)) {
                    compelled = true;
                    break;
                }
            }
            label[key(x, y)] = compelled ? Label::Compelled : Label::Reversible;
            label_unknown_into(y, compelled ? Label::Compelled : Label::Reversible);
        }
    }

    Pdag out = empty_like(g);
    for (const Edge& e : g.arcs()) {
        if (get(e.from, e.to) == Label::Compelled) {
            out.add_arc(e.from, e.to);
        } else {
            out.add_undirected(e.from, e.to);
        }
    }
    return out;
}

Pdag brute_force_cpdag(const Dag& d) {
    const Pdag& g = d.graph();
    std::vector<Edge> skeleton = g.arcs();
    for (Edge& e : skeleton) {
        if (e.from > e.to) std::swap(e.from, e.to);
        e.directed = false;
    }
    std::uint64_t fwd = 0;
    std::uint64_t bwd = 0;
    for_each_orientation(g, {}, skeleton, v_structures(g), "brute_force_cpdag",
                         [&](std::uint64_t mask) {
                             fwd |= ~mask;
                             bwd |= mask;
                         });
    const std::uint64_t used = skeleton.empty() ? 0 : (~std::uint64_t{0} >> (64 - skeleton.size()));
    Pdag base = empty_like(g);
    return summarize(base, skeleton, fwd & used, bwd & used);
}

Pdag brute_force_mpdag(const Pdag& g) {
    const std::vector<Edge> free = g.undirected_edges();
    const std::vector<Edge> fixed = g.arcs();
    std::uint64_t fwd = 0;
    std::uint64_t bwd = 0;
    bool any = false;
    for_each_orientation(g, fixed, free, v_structures(g), "brute_force_mpdag",
                         [&](std::uint64_t mask) {
                             any = true;
                             fwd |= ~mask;
                             bwd |= mask;
                         });
    if (!any) throw InvalidInput("brute_force_mpdag: input is not extendable");
    const std::uint64_t used = free.empty() ? 0 : (~std::uint64_t{0} >> (64 - free.size()));
    return summarize(g, free, fwd & used, bwd & used);
}

}  // namespace pdag
