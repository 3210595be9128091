#include "meek_closer.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>
#include <tuple>

#include "pdag/error.hpp"

namespace pdag {

namespace {

// Iterates the smaller of two sets and yields members of both.
template <typename Fn>
bool any_common(const NeighborSet& a, const NeighborSet& b, Fn&& fn) {
    const NeighborSet& small = a.size() <= b.size() ? a : b;
    const NeighborSet& large = a.size() <= b.size() ? b : a;
    for (VertexId x : small) {
        if (large.contains(x) && fn(x)) return true;
    }
    return false;
}

std::optional<RuleApplication> match_r1(const Pdag& g, VertexId from, VertexId to) {
    for (VertexId a : g.parents(from)) {
        if (!g.adjacent(a, to)) return RuleApplication{MeekRule::R1, from, to, {a, -1}};
    }
    return std::nullopt;
}

std::optional<RuleApplication> match_r2(const Pdag& g, VertexId from, VertexId to) {
    std::optional<RuleApplication> hit;
    any_common(g.children(from), g.parents(to), [&](VertexId b) {
        hit = RuleApplication{MeekRule::R2, from, to, {b, -1}};
        return true;
    });
    return hit;
}

std::optional<RuleApplication> match_r3(const Pdag& g, VertexId from, VertexId to) {
    std::vector<VertexId> common;
    any_common(g.siblings(from), g.parents(to), [&](VertexId b) {
        common.push_back(b);
        return false;
    });
    for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
            if (!g.adjacent(common[i], common[j])) {
                return RuleApplication{MeekRule::R3, from, to, {common[i], common[j]}};
            }
        }
    }
    return std::nullopt;
}

std::optional<RuleApplication> match_r4(const Pdag& g, VertexId from, VertexId to) {
    std::optional<RuleApplication> hit;
    any_common(g.siblings(from), g.parents(to), [&](VertexId c) {
        return any_common(g.siblings(from), g.parents(c), [&](VertexId d) {
            if (g.adjacent(d, to)) return false;
            hit = RuleApplication{MeekRule::R4, from, to, {c, d}};
            return true;
        });
    });
    return hit;
}

// Witness search over all vertices (pairs of vertices for R3 and R4), with
// no use of the neighbor sets: O(n^2) per candidate edge.
std::optional<RuleApplication> match_rule_scan(const Pdag& g, VertexId from, VertexId to) {
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId a = 0; a < n; ++a) {
        if (a != to && g.is_alive(a) && g.has_arc(a, from) && !g.adjacent(a, to)) {
            return RuleApplication{MeekRule::R1, from, to, {a, -1}};
        }
    }
    for (VertexId b = 0; b < n; ++b) {
        if (g.is_alive(b) && g.has_arc(from, b) && g.has_arc(b, to)) {
            return RuleApplication{MeekRule::R2, from, to, {b, -1}};
        }
    }
    for (VertexId b = 0; b < n; ++b) {
        for (VertexId d = b + 1; d < n; ++d) {
            if (g.is_alive(b) && g.is_alive(d) && g.has_undirected(from, b) && g.has_undirected(from, d) &&
                g.has_arc(b, to) && g.has_arc(d, to) && !g.adjacent(b, d)) {
                return RuleApplication{MeekRule::R3, from, to, {b, d}};
            }
        }
    }
    for (VertexId c = 0; c < n; ++c) {
        for (VertexId d = 0; d < n; ++d) {
            if (c != d && d != to && g.is_alive(c) && g.is_alive(d) && g.has_undirected(from, c) &&
                g.has_undirected(from, d) && g.has_arc(d, c) && g.has_arc(c, to) && !g.adjacent(d, to)) {
                return RuleApplication{MeekRule::R4, from, to, {c, d}};
            }
        }
    }
    return std::nullopt;
}

std::uint64_t pair_key(VertexId u, VertexId v, std::size_t n) {
    const auto lo = static_cast<std::uint64_t>(std::min(u, v));
    const auto hi = static_cast<std::uint64_t>(std::max(u, v));
    return lo * n + hi;
}

[[noreturn]] void conflict(const RuleApplication& fwd, const RuleApplication& bwd) {
    throw InvalidInput("input is not extendable: R" + std::to_string(static_cast<int>(fwd.rule)) +
                       " orients " + std::to_string(fwd.from) + "->" + std::to_string(fwd.to) +
                       " while R" + std::to_string(static_cast<int>(bwd.rule)) + " orients " +
                       std::to_string(bwd.from) + "->" + std::to_string(bwd.to));
}

void require_acyclic(const Pdag& g) {
    const ValidationResult check = validate(g);
    if (!check.ok()) throw InvalidInput("input is not extendable: closure has a " + check.message);
}

using Matcher = std::optional<RuleApplication> (*)(const Pdag&, VertexId, VertexId);

// Orients the undirected edge {u, v} if exactly one direction is forced.
std::optional<RuleApplication> decide(const Pdag& g, VertexId u, VertexId v, Matcher match = match_rule) {
    auto fwd = match(g, u, v);
    auto bwd = match(g, v, u);
    if (fwd && bwd) conflict(*fwd, *bwd);
    return fwd ? fwd : bwd;
}

}  // namespace

std::optional<RuleApplication> match_rule(const Pdag& g, VertexId from, VertexId to) {
    if (!g.has_undirected(from, to)) return std::nullopt;
    if (auto hit = match_r1(g, from, to)) return hit;
    if (auto hit = match_r2(g, from, to)) return hit;
    if (auto hit = match_r3(g, from, to)) return hit;
    return match_r4(g, from, to);
}

bool pattern_holds(const Pdag& g, const RuleApplication& s) {
    const VertexId x = s.from;
    const VertexId y = s.to;
    const auto n = static_cast<VertexId>(g.vertex_count());
    auto ok = [n, &g](VertexId v) { return v >= 0 && v < n && g.is_alive(v); };
    if (!ok(x) || !ok(y) || x == y || !g.has_undirected(x, y)) return false;
    const VertexId w0 = s.witnesses[0];
    const VertexId w1 = s.witnesses[1];
    switch (s.rule) {
        case MeekRule::R1:
            return ok(w0) && w0 != y && g.has_arc(w0, x) && !g.adjacent(w0, y);
        case MeekRule::R2:
            return ok(w0) && g.has_arc(x, w0) && g.has_arc(w0, y);
        case MeekRule::R3:
            return ok(w0) && ok(w1) && w0 != w1 && g.has_undirected(x, w0) &&
                   g.has_undirected(x, w1) && g.has_arc(w0, y) && g.has_arc(w1, y) &&
                   !g.adjacent(w0, w1);
        case MeekRule::R4:
            return ok(w0) && ok(w1) && w0 != w1 && w1 != y && g.has_undirected(x, w0) &&
                   g.has_undirected(x, w1) && g.has_arc(w1, w0) && g.has_arc(w0, y) &&
                   !g.adjacent(w1, y);
    }
    return false;
}

MeekCloser::MeekCloser(Pdag& g, OrientationTrace& trace, std::vector<std::size_t> priority)
    : g_(g), trace_(trace), priority_(std::move(priority)) {}

void MeekCloser::enqueue(VertexId u, VertexId v) {
    const std::uint64_t key = pair_key(u, v, g_.vertex_count());
    if (!queued_.insert(key).second) return;
    const std::size_t count = ++enqueues_[key];
    max_enqueues_ = std::max(max_enqueues_, count);
    if (priority_.empty()) {
        fifo_.emplace_back(u, v);
    } else {
        const std::size_t pu = priority_[u];
        const std::size_t pv = priority_[v];
        heap_.push({std::max(pu, pv), std::min(pu, pv), u, v});
    }
}

void MeekCloser::enqueue_incident(VertexId v) {
    for (VertexId s : g_.siblings(v)) enqueue(v, s);
}

void MeekCloser::enqueue_around_arc(VertexId from, VertexId to) {
    // Premises an arc from -> to can newly complete: R1 at `to`, R2 at either
    // end, R3 into `to`, R4 as c -> b (edges at `to`) or as d -> c (edges at
    // the children of `to`).
    enqueue_incident(from);
    enqueue_incident(to);
    for (VertexId b : g_.children(to)) enqueue_incident(b);
}

bool MeekCloser::pop(VertexId& u, VertexId& v) {
    if (priority_.empty()) {
        if (fifo_.empty()) return false;
        std::tie(u, v) = fifo_.front();
        fifo_.pop_front();
    } else {
        if (heap_.empty()) return false;
        const Entry top = heap_.top();
        heap_.pop();
        u = top.u;
        v = top.v;
    }
    queued_.erase(pair_key(u, v, g_.vertex_count()));
    return true;
}

void MeekCloser::run() {
    VertexId u = 0;
    VertexId v = 0;
    while (pop(u, v)) {
        if (!g_.has_undirected(u, v)) continue;
        const auto step = decide(g_, u, v);
        if (!step) continue;
        g_.orient(step->from, step->to);
        trace_.steps.push_back(*step);
        enqueue_around_arc(step->from, step->to);
    }
}

OrientationResult direct_meek(const Pdag& g) {
    OrientationResult result{g, {}, 0};
    result.trace.initial_fingerprint = fingerprint(g);
    MeekCloser closer(result.graph, result.trace);
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId v = 0; v < n; ++v) {
        if (g.parents(v).empty() && g.children(v).empty()) continue;
        closer.enqueue_incident(v);
    }
    closer.run();
    require_acyclic(result.graph);
    result.max_enqueues = closer.max_enqueues();
    result.trace.final_fingerprint = fingerprint(result.graph);
    return result;
}

OrientationResult direct_meek_naive(const Pdag& g) {
    OrientationResult result{g, {}, 0};
    result.trace.initial_fingerprint = fingerprint(g);
    Pdag& work = result.graph;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Edge& e : work.undirected_edges()) {
            if (!work.has_undirected(e.from, e.to)) continue;
            if (const auto step = decide(work, e.from, e.to, match_rule_scan)) {
                work.orient(step->from, step->to);
                result.trace.steps.push_back(*step);
                changed = true;
            }
        }
    }
    require_acyclic(work);
    result.trace.final_fingerprint = fingerprint(work);
    return result;
}

Pdag replay(const Pdag& initial, const OrientationTrace& trace) {
    if (fingerprint(initial) != trace.initial_fingerprint) {
        throw InvalidInput("replay: initial graph does not match the trace");
    }
    Pdag g = initial;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        if (!pattern_holds(g, trace.steps[i])) {
            throw InvalidInput("replay: step " + std::to_string(i) + " does not match its rule pattern");
        }
        g.orient(trace.steps[i].from, trace.steps[i].to);
    }
    if (fingerprint(g) != trace.final_fingerprint) {
        throw InvalidInput("replay: final graph does not match the trace");
    }
    return g;
}

std::string format_trace(const OrientationTrace& trace) {
    std::ostringstream out;
    for (const RuleApplication& s : trace.steps) {
        out << 'R' << static_cast<int>(s.rule) << ' ' << s.from << "->" << s.to << " witnesses:";
        for (std::size_t i = 0; i < s.witness_count(); ++i) out << ' ' << s.witnesses[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace pdag
