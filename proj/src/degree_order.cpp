#include "pdag/degree_order.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace pdag {

DegreeOrder::DegreeOrder(const Pdag& g)
    : order_(g.vertex_count()), position_(g.vertex_count()), degree_(g.vertex_count(), -1) {
    const std::size_t n = g.vertex_count();
    std::size_t max_degree = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (!g.is_alive(static_cast<VertexId>(v))) continue;
        degree_[v] = static_cast<long>(g.degree(static_cast<VertexId>(v)));
        max_degree = std::max(max_degree, static_cast<std::size_t>(degree_[v]));
    }
    // Counting sort into bins; bin b holds degree b-1.
    start_.assign(max_degree + 3, 0);
    for (std::size_t v = 0; v < n; ++v) ++start_[static_cast<std::size_t>(degree_[v] + 1) + 1];
    for (std::size_t b = 1; b < start_.size(); ++b) start_[b] += start_[b - 1];
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t slot = fill[static_cast<std::size_t>(degree_[v] + 1)]++;
        order_[slot] = static_cast<VertexId>(v);
        position_[v] = slot;
    }
}

void DegreeOrder::decrement(VertexId v) {
    assert(degree_[v] >= 0);
    const auto bin = static_cast<std::size_t>(degree_[v] + 1);
    const std::size_t first = start_[bin];
    const VertexId w = order_[first];
    std::swap(order_[first], order_[position_[v]]);
    std::swap(position_[w], position_[v]);
    ++start_[bin];
    --degree_[v];
}

void DegreeOrder::remove(VertexId v) {
    while (degree_[v] >= 0) decrement(v);
}

}  // namespace pdag
