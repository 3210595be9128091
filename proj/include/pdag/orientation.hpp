#ifndef PDAG_ORIENTATION_HPP
#define PDAG_ORIENTATION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdag/extension.hpp"
#include "pdag/graph.hpp"

namespace pdag {

enum class MeekRule : std::uint8_t { R1 = 1, R2 = 2, R3 = 3, R4 = 4 };

/**
 * One orientation step. `from -> to` is the concluded arc and the witnesses
 * complete the rule pattern, named after the standard drawings:
 *
 *   R1  a -> from -- to,  a !~ to                                 witnesses {a}
 *   R2  from -> b -> to,  from -- to                              witnesses {b}
 *   R3  from -- b, from -- d, b -> to, d -> to, b !~ d, from -- to  witnesses {b, d}
 *   R4  from -- c, from -- d, d -> c, c -> to, d !~ to, from -- to  witnesses {c, d}
 */
struct RuleApplication {
    MeekRule rule = MeekRule::R1;
    VertexId from = 0;
    VertexId to = 0;
    std::array<VertexId, 2> witnesses{-1, -1};

    std::size_t witness_count() const noexcept {
        return (rule == MeekRule::R3 || rule == MeekRule::R4) ? 2 : 1;
    }

    friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

struct OrientationTrace {
    std::uint64_t initial_fingerprint = 0;
    std::vector<RuleApplication> steps;
    std::uint64_t final_fingerprint = 0;
};

struct OrientationResult {
    Pdag graph;
    OrientationTrace trace;
    // Largest number of times a single edge entered the worklist.
    std::size_t max_enqueues = 0;
};

// First rule of R1..R4 whose premise orients from -- to as from -> to in g.
std::optional<RuleApplication> match_rule(const Pdag& g, VertexId from, VertexId to);

// True iff the premise of `step` holds in g right now (including non-adjacencies).
bool pattern_holds(const Pdag& g, const RuleApplication& step);

/// Meek closure driven by a FIFO worklist of candidate undirected edges.
/// Throws InvalidInput when g turns out not to be extendable.
OrientationResult direct_meek(const Pdag& g);

/// Meek closure by repeated full sweeps over all undirected edges until a
/// sweep orients nothing. Rule premises are checked without the neighbor
/// indexes, by trying every vertex (R1, R2) or vertex pair (R3, R4) as a
/// witness, so one sweep costs O(n^2) per undirected edge. Same contract as
/// direct_meek.
OrientationResult direct_meek_naive(const Pdag& g);

// Re-applies the trace to `initial`, checking each pattern; throws InvalidInput on mismatch.
Pdag replay(const Pdag& initial, const OrientationTrace& trace);

// One line per step: `R<k> <from>-><to> witnesses: <ids>`.
std::string format_trace(const OrientationTrace& trace);

/// CPDAG of the Markov equivalence class of d, via compelled-edge labelling
/// over the edges in topological order. Linear in the size of d up to hashing.
Pdag dag_to_cpdag(const Dag& d);

// Enumeration oracles; UsageError past kBruteForceEdgeLimit enumerated edges.
Pdag brute_force_cpdag(const Dag& d);
Pdag brute_force_mpdag(const Pdag& g);

struct PhaseTimings {
    double extension_us = 0.0;
    double cpdag_us = 0.0;
    double meek_us = 0.0;

    double total_us() const noexcept { return extension_us + cpdag_us + meek_us; }
};

struct CeOrientationResult {
    Pdag graph;
    PhaseTimings timings;
    OpCounters counters;  // from the extension phase
    std::size_t max_enqueues = 0;
    std::size_t seeded_arcs = 0;  // arcs of g that were undirected in the CPDAG
};

/**
 * Maximal orientation through a consistent extension: extend g to D, take the
 * CPDAG of D, re-orient the arcs of g inside it and close under the Meek rules
 * from those arcs only, in topological order of D. Throws InvalidInput if g is
 * not extendable.
 */
CeOrientationResult maximal_orientation_ce(const Pdag& g, ExtensionAlgorithm extender);

}  // namespace pdag

#endif  // PDAG_ORIENTATION_HPP
