#ifndef PDAG_TESTS_ORACLES_HPP
#define PDAG_TESTS_ORACLES_HPP

// Reference implementations for the tests. They work on a dense adjacency
// matrix built from the edge lists and share no code with the library's
// algorithms.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pdag/graph.hpp"

namespace oracle {

// m(u, v) && m(v, u): undirected; m(u, v) only: arc u -> v.
struct Matrix {
    int n = 0;
    std::vector<std::uint8_t> cells;

    explicit Matrix(int n_) : n(n_), cells(static_cast<std::size_t>(n_) * n_, 0) {}

    static Matrix from(const pdag::Pdag& g) {
        Matrix m(static_cast<int>(g.vertex_count()));
        for (const pdag::Edge& e : g.edges()) {
            m.set(e.from, e.to);
            if (!e.directed) m.set(e.to, e.from);
        }
        return m;
    }

    bool at(int u, int v) const { return cells[static_cast<std::size_t>(u) * n + v] != 0; }
    void set(int u, int v) { cells[static_cast<std::size_t>(u) * n + v] = 1; }
    void clear(int u, int v) { cells[static_cast<std::size_t>(u) * n + v] = 0; }

    bool adj(int u, int v) const { return at(u, v) || at(v, u); }
    bool arc(int u, int v) const { return at(u, v) && !at(v, u); }
    bool und(int u, int v) const { return at(u, v) && at(v, u); }

    pdag::Pdag to_pdag() const {
        pdag::Pdag g(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (arc(u, v)) g.add_arc(u, v);
                if (u < v && und(u, v)) g.add_undirected(u, v);
            }
        }
        return g;
    }
};

inline bool acyclic(const Matrix& m) {
    std::vector<int> state(m.n, 0);
    bool ok = true;
    auto visit = [&](auto&& self, int u) -> void {
        state[u] = 1;
        for (int v = 0; v < m.n && ok; ++v) {
            if (!m.arc(u, v)) continue;
            if (state[v] == 1) ok = false;
            else if (state[v] == 0) self(self, v);
        }
        state[u] = 2;
    };
    for (int u = 0; u < m.n && ok; ++u) {
        if (state[u] == 0) visit(visit, u);
    }
    return ok;
}

// Sorted (a, c, b) triples with a < b, a -> c <- b, a !~ b.
inline std::vector<std::array<int, 3>> vstructs(const Matrix& m) {
    std::vector<std::array<int, 3>> out;
    for (int c = 0; c < m.n; ++c) {
        for (int a = 0; a < m.n; ++a) {
            for (int b = a + 1; b < m.n; ++b) {
                if (m.arc(a, c) && m.arc(b, c) && !m.adj(a, b)) out.push_back({a, c, b});
            }
        }
    }
    return out;
}

inline bool is_extension(const Matrix& g, const Matrix& d) {
    for (int u = 0; u < g.n; ++u) {
        for (int v = 0; v < g.n; ++v) {
            if (d.und(u, v)) return false;
            if (g.adj(u, v) != d.adj(u, v)) return false;
            if (g.arc(u, v) && !d.arc(u, v)) return false;
        }
    }
    return acyclic(d) && vstructs(g) == vstructs(d);
}

/**
 * Consistent extensions of g seen as vertex orders: placing v after the set S
 * of already placed vertices makes every neighbor in S a parent of v. The
 * placement is allowed iff all arcs into v come from S, no arc leaves v into
 * S, and any two non-adjacent neighbors in S both point to v in g. Whether a
 * placement is allowed depends only on S, so reachability over subsets
 * decides extendability and which orientations occur in some extension.
 */
class OrderSpace {
public:
    explicit OrderSpace(const Matrix& g) : g_(g) {
        if (g.n > 22) throw std::invalid_argument("OrderSpace: too many vertices");
        const std::size_t full = (std::size_t{1} << g.n) - 1;
        forward_.assign(full + 1, 0);
        backward_.assign(full + 1, 0);
        forward_[0] = 1;
        for (std::size_t s = 0; s <= full; ++s) {
            if (!forward_[s]) continue;
            for (int v = 0; v < g.n; ++v) {
                if (allowed(s, v)) forward_[s | (std::size_t{1} << v)] = 1;
            }
        }
        backward_[full] = 1;
        for (std::size_t s = full + 1; s-- > 0;) {
            if (backward_[s]) continue;
            for (int v = 0; v < g.n && !backward_[s]; ++v) {
                if (allowed(s, v) && backward_[s | (std::size_t{1} << v)]) backward_[s] = 1;
            }
        }
    }

    bool extendable() const { return backward_[0] != 0; }

    // Some consistent extension orients u -> v (u, v adjacent in g).
    bool possible(int from, int to) const {
        const std::size_t full = (std::size_t{1} << g_.n) - 1;
        for (std::size_t s = 0; s <= full; ++s) {
            if (!forward_[s] || (s >> from & 1) || (s >> to & 1)) continue;
            const std::size_t next = s | (std::size_t{1} << from);
            if (allowed(s, from) && backward_[next]) return true;
        }
        return false;
    }

    // One extension, or nullopt.
    std::optional<Matrix> witness() const {
        if (!extendable()) return std::nullopt;
        std::vector<int> order;
        std::size_t s = 0;
        while (static_cast<int>(order.size()) < g_.n) {
            for (int v = 0; v < g_.n; ++v) {
                if ((s >> v & 1) || !allowed(s, v) || !backward_[s | (std::size_t{1} << v)]) continue;
                order.push_back(v);
                s |= std::size_t{1} << v;
                break;
            }
        }
        Matrix d(g_.n);
        for (int i = 0; i < g_.n; ++i) {
            for (int j = i + 1; j < g_.n; ++j) {
                if (g_.adj(order[i], order[j])) d.set(order[i], order[j]);
            }
        }
        return d;
    }

    // Directed exactly where every extension agrees.
    Matrix maximal_orientation() const {
        Matrix out(g_.n);
        for (int u = 0; u < g_.n; ++u) {
            for (int v = 0; v < g_.n; ++v) {
                if (!g_.adj(u, v)) continue;
                if (possible(u, v)) out.set(u, v);
            }
        }
        return out;
    }

private:
    bool allowed(std::size_t s, int v) const {
        if (s >> v & 1) return false;
        for (int u = 0; u < g_.n; ++u) {
            if (g_.arc(u, v) && !(s >> u & 1)) return false;
            if (g_.arc(v, u) && (s >> u & 1)) return false;
        }
        for (int a = 0; a < g_.n; ++a) {
            if (!(s >> a & 1) || !g_.adj(a, v)) continue;
            for (int b = a + 1; b < g_.n; ++b) {
                if (!(s >> b & 1) || !g_.adj(b, v) || g_.adj(a, b)) continue;
                if (!g_.arc(a, v) || !g_.arc(b, v)) return false;
            }
        }
        return true;
    }

    Matrix g_;
    std::vector<std::uint8_t> forward_;
    std::vector<std::uint8_t> backward_;
};

// Skeleton of d with exactly its v-structure arcs directed.
inline Matrix pattern(const Matrix& d) {
    Matrix p(d.n);
    for (int u = 0; u < d.n; ++u) {
        for (int v = 0; v < d.n; ++v) {
            if (d.adj(u, v)) p.set(u, v);
        }
    }
    for (const auto& [a, c, b] : vstructs(d)) {
        p.clear(c, a);
        p.clear(c, b);
    }
    return p;
}

// The equivalence class of d is the extension set of its pattern.
inline Matrix cpdag(const Matrix& d) { return OrderSpace(pattern(d)).maximal_orientation(); }

// Every orientation of the undirected edges, filtered by is_extension. Tiny inputs only.
inline std::vector<Matrix> all_extensions(const Matrix& g) {
    std::vector<std::pair<int, int>> und;
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            if (g.und(u, v)) und.emplace_back(u, v);
        }
    }
    if (und.size() > 16) throw std::invalid_argument("all_extensions: too many undirected edges");
    std::vector<Matrix> out;
    for (std::uint32_t mask = 0; mask < (1u << und.size()); ++mask) {
        Matrix d = g;
        for (std::size_t i = 0; i < und.size(); ++i) {
            const auto [u, v] = und[i];
            if (mask >> i & 1) d.clear(v, u);
            else d.clear(u, v);
        }
        if (is_extension(g, d)) out.push_back(d);
    }
    return out;
}

// Name of the first Meek rule that would orient u -- v as u -> v, or 0.
inline int applicable_rule(const Matrix& m, int u, int v) {
    if (!m.und(u, v)) return 0;
    for (int a = 0; a < m.n; ++a) {
        if (m.arc(a, u) && !m.adj(a, v)) return 1;
    }
    for (int b = 0; b < m.n; ++b) {
        if (m.arc(u, b) && m.arc(b, v)) return 2;
    }
    for (int b = 0; b < m.n; ++b) {
        for (int d = b + 1; d < m.n; ++d) {
            if (m.und(u, b) && m.und(u, d) && m.arc(b, v) && m.arc(d, v) && !m.adj(b, d)) return 3;
        }
    }
    for (int c = 0; c < m.n; ++c) {
        for (int d = 0; d < m.n; ++d) {
            if (c == d) continue;
            if (m.und(u, c) && m.und(u, d) && m.arc(d, c) && m.arc(c, v) && !m.adj(d, v)) return 4;
        }
    }
    return 0;
}

inline bool meek_closed(const Matrix& m) {
    for (int u = 0; u < m.n; ++u) {
        for (int v = 0; v < m.n; ++v) {
            if (applicable_rule(m, u, v) != 0) return false;
        }
    }
    return true;
}

// Maximum cardinality search followed by the perfect elimination check.
inline bool chordal(const Matrix& m) {
    const int n = m.n;
    std::vector<int> weight(n, 0);
    std::vector<int> pos(n, -1);
    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (pos[v] < 0 && (best < 0 || weight[v] > weight[best])) best = v;
        }
        pos[best] = step;
        order.push_back(best);
        for (int w = 0; w < n; ++w) {
            if (pos[w] < 0 && m.adj(best, w)) ++weight[w];
        }
    }
    // In MCS order, the earlier neighbors of each vertex must form a clique;
    // it suffices that they are adjacent to the latest of them.
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        int latest = -1;
        for (int j = 0; j < i; ++j) {
            if (m.adj(v, order[j])) latest = order[j];
        }
        if (latest < 0) continue;
        for (int j = 0; j < i; ++j) {
            const int u = order[j];
            if (u != latest && m.adj(v, u) && !m.adj(u, latest)) return false;
        }
    }
    return true;
}

}  // namespace oracle

#endif  // PDAG_TESTS_ORACLES_HPP
