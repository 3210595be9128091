#ifndef PDAG_DEGREE_ORDER_HPP
#define PDAG_DEGREE_ORDER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "pdag/graph.hpp"

namespace pdag {

/**
 * Vertices kept sorted by current degree in one array of bins.
 *
 * The array is partitioned into consecutive bins, bin 0 holding removed
 * vertices and bin d+1 the alive vertices of degree d. Lowering a degree swaps
 * the vertex with the first entry of its bin and shifts the bin boundary, so
 * decrement() is O(1) and remove() is O(current degree). The initial order
 * within a bin is by ascending id; later moves keep the order deterministic.
 */
class DegreeOrder {
public:
    explicit DegreeOrder(const Pdag& g);

    // Alive vertices by ascending degree. Invalidated by decrement()/remove().
    std::span<const VertexId> ascending() const noexcept {
        return {order_.data() + start_[1], order_.size() - start_[1]};
    }

    std::size_t degree(VertexId v) const noexcept { return static_cast<std::size_t>(degree_[v]); }

    void decrement(VertexId v);
    void remove(VertexId v);

private:
    std::vector<VertexId> order_;
    std::vector<std::size_t> position_;
    std::vector<std::size_t> start_;  // start_[b] = first slot of bin b
    std::vector<long> degree_;        // -1 once removed
};

}  // namespace pdag

#endif  // PDAG_DEGREE_ORDER_HPP
