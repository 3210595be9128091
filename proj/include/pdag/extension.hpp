#ifndef PDAG_EXTENSION_HPP
#define PDAG_EXTENSION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pdag/graph.hpp"

namespace pdag {

enum class ExtensionAlgorithm {
    Dt,     // Dor-Tarsi, vertices scanned by id
    Dth,    // Dor-Tarsi, vertices scanned by ascending current degree
    Dtic,   // degree scan plus cached violating pairs, O(n^3) expected
    Brute,  // enumeration of all orientations, small inputs only
};

const char* to_string(ExtensionAlgorithm algo) noexcept;
std::optional<ExtensionAlgorithm> parse_extension_algorithm(std::string_view name) noexcept;

struct Extension {
    Dag dag;
    // Potential-sinks in removal order; its reverse topologically orders `dag`.
    std::vector<VertexId> elimination_order;
};

struct ExtensionOutcome {
    std::optional<Extension> extension;  // nullopt: no consistent extension exists
    OpCounters counters;

    bool extended() const noexcept { return extension.has_value(); }
};

// All extenders require validate(g).ok() and throw UsageError otherwise.
ExtensionOutcome extend_dt(const Pdag& g);
ExtensionOutcome extend_dth(const Pdag& g);

/**
 * Bookkeeping of the cached-violation extender.
 *
 * For every vertex v whose neighborhood has been scanned, violations(v) holds
 * the ordered pairs (u, u') with u a sibling of v, u' a sibling or parent of
 * v, u != u' and u, u' non-adjacent, restricted to vertices still present.
 * A scanned vertex without children and without violations is a
 * potential-sink.
 */
class DticState {
public:
    explicit DticState(std::size_t n);

    bool scanned(VertexId v) const noexcept { return scanned_[v] != 0; }
    std::size_t violation_count(VertexId v) const noexcept { return live_[v]; }

    // Sorted copy of the live pairs owned by v; linear in the total tuple count.
    std::vector<std::pair<VertexId, VertexId>> violations(VertexId v) const;

    // Records every violating pair of v in g and marks v scanned.
    void scan(const Pdag& g, VertexId v, OpCounters& counters);

    // Drops every stored pair mentioning v, in time linear in their number.
    void forget(VertexId v);

private:
    struct Tuple {
        VertexId owner;
        VertexId first;
        VertexId second;
        bool alive;
    };

    std::vector<Tuple> tuples_;
    std::vector<std::vector<std::uint32_t>> mentions_;
    std::vector<std::uint32_t> live_;
    std::vector<std::uint8_t> scanned_;
};

// Called after each potential-sink removal with the remaining graph.
using DticObserver = std::function<void(const Pdag& remaining, const DticState& state)>;

ExtensionOutcome extend_dtic(const Pdag& g, const DticObserver& observer = {});

inline constexpr std::size_t kBruteForceEdgeLimit = 20;

// Tries all 2^|E| orientations in mask order; UsageError past kBruteForceEdgeLimit.
ExtensionOutcome brute_force_extend(const Pdag& g);

ExtensionOutcome extend(const Pdag& g, ExtensionAlgorithm algo);

// Same skeleton, every arc of g kept, every undirected edge oriented, same
// v-structures. `d` is acyclic by construction.
bool is_consistent_extension(const Pdag& g, const Dag& d);

}  // namespace pdag

#endif  // PDAG_EXTENSION_HPP
