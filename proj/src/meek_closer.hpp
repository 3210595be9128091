#ifndef PDAG_SRC_MEEK_CLOSER_HPP
#define PDAG_SRC_MEEK_CLOSER_HPP

#include <cstdint>
#include <deque>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pdag/orientation.hpp"

namespace pdag {

// Worklist-driven Meek closure over a graph it mutates in place. With an empty
// priority vector the worklist is FIFO; otherwise edges come out ordered by
// (later endpoint, earlier endpoint) under that vertex ranking.
class MeekCloser {
public:
    MeekCloser(Pdag& g, OrientationTrace& trace, std::vector<std::size_t> priority = {});

    void enqueue(VertexId u, VertexId v);
    void enqueue_incident(VertexId v);
    void enqueue_around_arc(VertexId from, VertexId to);
    void run();

    std::size_t max_enqueues() const noexcept { return max_enqueues_; }

private:
    struct Entry {
        std::size_t hi;
        std::size_t lo;
        VertexId u;
        VertexId v;

        bool operator>(const Entry& o) const noexcept {
            return hi != o.hi ? hi > o.hi : lo > o.lo;
        }
    };

    bool pop(VertexId& u, VertexId& v);

    Pdag& g_;
    OrientationTrace& trace_;
    std::vector<std::size_t> priority_;
    std::deque<std::pair<VertexId, VertexId>> fifo_;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap_;
    std::unordered_set<std::uint64_t> queued_;
    std::unordered_map<std::uint64_t, std::size_t> enqueues_;
    std::size_t max_enqueues_ = 0;
};

}  // namespace pdag

#endif  // PDAG_SRC_MEEK_CLOSER_HPP
