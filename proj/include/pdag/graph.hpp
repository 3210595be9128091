#ifndef PDAG_GRAPH_HPP
#define PDAG_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace pdag {

// Dense vertex index in [0, n). Ids stay stable when vertices are removed.
using VertexId = std::int32_t;

using NeighborSet = std::unordered_set<VertexId>;

// Relation between an ordered pair (u, v).
enum class EdgeKind : std::uint8_t {
    None,
    ArcForward,   // u -> v
    ArcBackward,  // u <- v
    Undirected,   // u -- v
};

const char* to_string(EdgeKind kind) noexcept;

// A single edge. For undirected edges `from < to` is kept canonical.
struct Edge {
    VertexId from = 0;
    VertexId to = 0;
    bool directed = false;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Induced u -> center <- w with u, w non-adjacent, stored with left < right.
struct VStructure {
    VertexId left = 0;
    VertexId center = 0;
    VertexId right = 0;

    friend auto operator<=>(const VStructure&, const VStructure&) = default;
};

// Operation counters shared by the extension algorithms and the benchmark.
struct OpCounters {
    std::uint64_t adjacency_tests = 0;
    std::uint64_t potential_sink_checks = 0;

    OpCounters& operator+=(const OpCounters& other) noexcept {
        adjacency_tests += other.adjacency_tests;
        potential_sink_checks += other.potential_sink_checks;
        return *this;
    }
};

struct Neighborhood {
    const NeighborSet& parents;
    const NeighborSet& children;
    const NeighborSet& siblings;

    std::size_t degree() const noexcept { return parents.size() + children.size() + siblings.size(); }
};

/**
 * Partially directed graph over vertices {0, ..., n-1}.
 *
 * Every vertex keeps three hashed neighbor sets (parents, children,
 * siblings), so adjacency tests, edge deletion and vertex removal run in
 * expected constant time per touched edge. Removed vertices keep their id and
 * are only flagged dead.
 *
 * Acyclicity of the arcs is not maintained on mutation; call validate().
 */
class Pdag {
public:
    Pdag() = default;
    explicit Pdag(std::size_t n);

    std::size_t vertex_count() const noexcept { return parents_.size(); }
    std::size_t alive_count() const noexcept { return alive_count_; }
    std::size_t arc_count() const noexcept { return arc_count_; }
    std::size_t undirected_count() const noexcept { return undirected_count_; }
    std::size_t edge_count() const noexcept { return arc_count_ + undirected_count_; }

    bool is_alive(VertexId v) const noexcept {
        return v >= 0 && static_cast<std::size_t>(v) < alive_.size() && alive_[v] != 0;
    }

    // Insertion rejects self-loops, dead endpoints and pairs that are already adjacent.
    void add_arc(VertexId from, VertexId to);
    void add_undirected(VertexId u, VertexId v);
    void add(const Edge& e);

    // Replaces u -- v by u -> v.
    void orient(VertexId from, VertexId to);
    void remove_edge(VertexId u, VertexId v);

    // Checked query; throws UsageError on dead, equal or out-of-range vertices.
    EdgeKind adjacency(VertexId u, VertexId v) const;

    // Unchecked hot-path variants used inside the algorithms.
    bool adjacent(VertexId u, VertexId v) const {
        return parents_[u].contains(v) || children_[u].contains(v) || siblings_[u].contains(v);
    }
    bool has_arc(VertexId from, VertexId to) const { return children_[from].contains(to); }
    bool has_undirected(VertexId u, VertexId v) const { return siblings_[u].contains(v); }

    const NeighborSet& parents(VertexId v) const { return parents_[v]; }
    const NeighborSet& children(VertexId v) const { return children_[v]; }
    const NeighborSet& siblings(VertexId v) const { return siblings_[v]; }
    std::size_t degree(VertexId v) const {
        return parents_[v].size() + children_[v].size() + siblings_[v].size();
    }

    // Checked; throws UsageError for a dead vertex.
    Neighborhood neighborhood(VertexId v) const;

    /// True iff v has no children and every sibling of v is adjacent to every
    /// other neighbor of v. Pairs are visited in ascending id order and the
    /// test returns on the first missing adjacency; each unordered neighbor
    /// pair is tested at most once.
    bool is_potential_sink(VertexId v, OpCounters* counters = nullptr) const;

    // Marks v dead and detaches it. Returns the removed edges as seen from the graph.
    std::vector<Edge> remove_vertex(VertexId v);

    std::vector<VertexId> alive_vertices() const;

    // Canonically sorted edge lists.
    std::vector<Edge> arcs() const;
    std::vector<Edge> undirected_edges() const;
    std::vector<Edge> edges() const;

    friend bool operator==(const Pdag& a, const Pdag& b);

private:
    void require_vertex(VertexId v, const char* op) const;
    void require_pair(VertexId u, VertexId v, const char* op) const;
    void require_insertable(VertexId u, VertexId v, const char* op) const;

    std::vector<NeighborSet> parents_;
    std::vector<NeighborSet> children_;
    std::vector<NeighborSet> siblings_;
    std::vector<std::uint8_t> alive_;
    std::size_t alive_count_ = 0;
    std::size_t arc_count_ = 0;
    std::size_t undirected_count_ = 0;
};

struct ValidationResult {
    enum class Status { Ok, DirectedCycle, BrokenInvariant };

    Status status = Status::Ok;
    // For DirectedCycle: c_1 -> c_2 -> ... -> c_k -> c_1.
    std::vector<VertexId> cycle;
    std::string message;

    bool ok() const noexcept { return status == Status::Ok; }
};

// Checks neighbor-set symmetry and disjointness, then acyclicity of the arcs.
ValidationResult validate(const Pdag& g);

// Topological order of the alive vertices using arcs only; nullopt if cyclic.
std::optional<std::vector<VertexId>> topological_order(const Pdag& g);

std::vector<VStructure> v_structures(const Pdag& g);

// FNV-1a over the canonical edge list and the alive mask.
std::uint64_t fingerprint(const Pdag& g);

/**
 * A PDAG without undirected edges whose arcs are acyclic. Construction
 * validates both conditions and caches a topological order.
 */
class Dag {
public:
    Dag() = default;

    // Throws UsageError if g has undirected edges, a directed cycle, or if a
    // supplied order is not a topological order of g.
    explicit Dag(Pdag g, std::optional<std::vector<VertexId>> order = std::nullopt);

    const Pdag& graph() const noexcept { return graph_; }
    const std::vector<VertexId>& topological_order() const noexcept { return order_; }
    std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }

    friend bool operator==(const Dag& a, const Dag& b) { return a.graph_ == b.graph_; }

private:
    Pdag graph_;
    std::vector<VertexId> order_;
};

}  // namespace pdag

#endif  // PDAG_GRAPH_HPP
