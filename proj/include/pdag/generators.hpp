#ifndef PDAG_GENERATORS_HPP
#define PDAG_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdag/graph.hpp"

namespace pdag {

// Edge count as a function of n: explicit m, c*n, n*log2(n) or n*sqrt(n).
struct EdgeRule {
    enum class Kind { Explicit, PerVertex, NLog2N, NSqrtN };
    Kind kind = Kind::PerVertex;
    std::size_t value = 3;  // m for Explicit, c for PerVertex

    std::size_t resolve(std::size_t n) const;
    std::string to_string() const;
    static EdgeRule parse(std::string_view text);  // "3n", "5n", "nlog2n", "nsqrtn", "120"
};

// Chordal subtree mean size: explicit k, log2(n) or sqrt(n).
struct ScaleRule {
    enum class Kind { Explicit, Log2N, SqrtN };
    Kind kind = Kind::Explicit;
    std::size_t value = 3;

    std::size_t resolve(std::size_t n) const;
    std::string to_string() const;
    static ScaleRule parse(std::string_view text);  // "3", "log2n", "sqrtn"
};

enum class GraphStyle { Uniform, ScaleFree, Chordal, DthWorstCase };

const char* to_string(GraphStyle style) noexcept;
std::optional<GraphStyle> parse_graph_style(std::string_view name) noexcept;

struct GeneratorConfig {
    std::size_t n = 0;
    EdgeRule edges;
    GraphStyle style = GraphStyle::Uniform;
    ScaleRule k;  // chordal subtree size, or the worst-case family parameter
    std::uint64_t seed = 0;
    std::size_t background_min = 2;
    std::size_t background_max = 5;

    // Throws UsageError on m > n(n-1)/2, k < 1, or an inverted background range.
    void check() const;
    std::size_t edge_count() const { return edges.resolve(n); }

    // `key=value` lines, also used as the header comment of generated files.
    std::vector<std::string> describe() const;
};

struct GeneratedInstance {
    Pdag graph;
    // The DAG the PDAG was derived from; set for uniform and scale-free styles.
    std::optional<Dag> hidden_dag;
};

/**
 * Random extendable PDAG: orient a random undirected graph along a random
 * vertex permutation, undirect every arc that is in no v-structure, then
 * re-orient between background_min and background_max random undirected
 * edges as in the DAG. Uniform style samples m distinct pairs; scale-free
 * grows a Barabasi-Albert graph with ceil(m/n) attachments per vertex and
 * trims or pads it to exactly m edges.
 */
GeneratedInstance random_pdag(const GeneratorConfig& cfg);

/**
 * Chordal graph by subtree intersection: a uniform random tree from a Prufer
 * sequence, one random subtree per vertex grown from a uniform root by
 * sampling the BFS frontier until its geometric(mean k) target size is
 * reached, and an edge between two vertices iff their subtrees share a node.
 * For k >= n every subtree is the whole tree. Fully undirected.
 */
Pdag chordal_graph(const GeneratorConfig& cfg);

/**
 * Fully undirected worst case of the degree heuristic on n = 5k + 2 vertices:
 * cliques C_vw (k vertices), C_v and C_w (2k each); v joined to C_v and C_vw,
 * w joined to C_w and C_vw, v and w non-adjacent. Ids: C_vw = [0, k),
 * C_v = [k, 3k), C_w = [3k, 5k), v = 5k, w = 5k + 1, so the one failing pair
 * of a C_vw vertex is the last pair its potential-sink test visits.
 */
Pdag dth_worst_case(std::size_t k);

// Dispatches on cfg.style; for DthWorstCase k = cfg.k and n is ignored.
GeneratedInstance generate(const GeneratorConfig& cfg);

}  // namespace pdag

#endif  // PDAG_GENERATORS_HPP
