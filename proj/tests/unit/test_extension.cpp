#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pdag/degree_order.hpp"
#include "pdag/error.hpp"
#include "pdag/extension.hpp"
#include "pdag/generators.hpp"
#include "pdag/rng.hpp"
#include "samples.hpp"

using pdag::ExtensionAlgorithm;

namespace {

const ExtensionAlgorithm kAll[] = {ExtensionAlgorithm::Dt, ExtensionAlgorithm::Dth, ExtensionAlgorithm::Dtic,
                                   ExtensionAlgorithm::Brute};

}  // namespace

TEST_CASE("algorithm names round-trip") {
    for (auto a : kAll) CHECK(pdag::parse_extension_algorithm(pdag::to_string(a)) == a);
    CHECK_FALSE(pdag::parse_extension_algorithm("wbl").has_value());
}

TEST_CASE("running example extends under every algorithm") {
    const pdag::Pdag g = samples::fig1_g();
    const oracle::Matrix gm = oracle::Matrix::from(g);
    for (auto a : kAll) {
        CAPTURE(pdag::to_string(a));
        const auto out = pdag::extend(g, a);
        REQUIRE(out.extended());
        CHECK(pdag::is_consistent_extension(g, out.extension->dag));
        CHECK(oracle::is_extension(gm, oracle::Matrix::from(out.extension->dag.graph())));
    }
}

TEST_CASE("degree scan removes the unique degree-1 vertex first") {
    CHECK(pdag::extend_dth(samples::fig1_g()).extension->elimination_order.front() == 4);
    CHECK(pdag::extend_dtic(samples::fig1_g()).extension->elimination_order.front() == 4);
    CHECK(pdag::extend_dth(samples::fig3_g()).extension->elimination_order.front() == 4);
    CHECK(pdag::extend_dt(samples::fig3_g()).extension->elimination_order.front() == 2);
}

TEST_CASE("elimination order reversed is a topological order of the result") {
    for (auto a : {ExtensionAlgorithm::Dt, ExtensionAlgorithm::Dth, ExtensionAlgorithm::Dtic}) {
        const auto out = pdag::extend(samples::fig1_g(), a);
        std::vector<pdag::VertexId> order = out.extension->elimination_order;
        std::reverse(order.begin(), order.end());
        CHECK_NOTHROW(pdag::Dag(out.extension->dag.graph(), order));
    }
}

TEST_CASE("undirected cycles of length four or more are not extendable") {
    for (int n : {4, 5, 7}) {
        for (auto a : kAll) {
            CAPTURE(n);
            CHECK_FALSE(pdag::extend(samples::undirected_cycle(n), a).extended());
        }
    }
    for (auto a : kAll) CHECK(pdag::extend(samples::undirected_cycle(3), a).extended());
}

TEST_CASE("small hand-checked instances") {
    pdag::Pdag edge(2);
    edge.add_undirected(0, 1);
    CHECK(pdag::brute_force_extend(edge).extended());

    pdag::Pdag forced(3);  // 0 -> 1 -> 2, 2 -- 0
    forced.add_arc(0, 1);
    forced.add_arc(1, 2);
    forced.add_undirected(0, 2);
    for (auto a : kAll) {
        const auto out = pdag::extend(forced, a);
        REQUIRE(out.extended());
        CHECK(out.extension->dag.graph().has_arc(0, 2));
    }

    pdag::Pdag new_collider(3);  // 0 -> 1 -- 2 with 0 !~ 2: 1 -> 2 only
    new_collider.add_arc(0, 1);
    new_collider.add_undirected(1, 2);
    for (auto a : kAll) CHECK(pdag::extend(new_collider, a).extension->dag.graph().has_arc(1, 2));
}

TEST_CASE("extenders agree with the order-space oracle") {
    const auto graphs = samples::small_mixed(300, 21);
    for (const pdag::Pdag& g : graphs) {
        const oracle::OrderSpace space(oracle::Matrix::from(g));
        for (auto a : kAll) {
            const auto out = pdag::extend(g, a);
            REQUIRE(out.extended() == space.extendable());
            if (out.extended()) {
                CHECK(oracle::is_extension(oracle::Matrix::from(g), oracle::Matrix::from(out.extension->dag.graph())));
            }
        }
    }
}

TEST_CASE("mutated graphs are rejected by every extender") {
    for (const pdag::Pdag& g : samples::non_extendable_mutants(40, 8)) {
        for (auto a : kAll) CHECK_FALSE(pdag::extend(g, a).extended());
    }
}

TEST_CASE("extenders reject cyclic input") {
    pdag::Pdag g(3);
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    g.add_arc(2, 0);
    for (auto a : kAll) CHECK_THROWS_AS(pdag::extend(g, a), pdag::UsageError);
}

TEST_CASE("enumeration refuses more than twenty undirected edges") {
    pdag::GeneratorConfig cfg;
    cfg.style = pdag::GraphStyle::Chordal;
    cfg.n = 12;
    cfg.k = pdag::ScaleRule::parse("12");
    const pdag::Pdag g = pdag::generate(cfg).graph;
    REQUIRE(g.undirected_count() > pdag::kBruteForceEdgeLimit);
    CHECK_THROWS_AS(pdag::brute_force_extend(g), pdag::UsageError);
}

TEST_CASE("is_consistent_extension rejects near misses") {
    const pdag::Pdag g = samples::fig1_g();
    const pdag::Pdag d = samples::fig1_d();
    CHECK(pdag::is_consistent_extension(g, pdag::Dag(d)));

    pdag::Pdag reversed = d;  // reverses a background arc of g
    reversed.remove_edge(1, 3);
    reversed.add_arc(3, 1);
    CHECK_FALSE(pdag::is_consistent_extension(g, pdag::Dag(reversed)));

    pdag::Pdag collider = d;  // e -> d creates b -> d <- e, e !~ b
    collider.remove_edge(3, 4);
    collider.add_arc(4, 3);
    CHECK_FALSE(pdag::is_consistent_extension(g, pdag::Dag(collider)));

    pdag::Pdag missing = d;
    missing.remove_edge(0, 3);
    CHECK_FALSE(pdag::is_consistent_extension(g, pdag::Dag(missing)));
}

TEST_CASE("worst-case family: first round of the degree scan") {
    const std::size_t k = 8;
    const pdag::Pdag g = pdag::dth_worst_case(k);
    const pdag::DegreeOrder order(g);
    const auto asc = order.ascending();
    std::size_t failed = 0;
    for (pdag::VertexId v : asc) {
        pdag::OpCounters c;
        if (g.is_potential_sink(v, &c)) break;
        ++failed;
        CHECK(c.adjacency_tests == (k + 1) * k / 2);
    }
    CHECK(failed == k);
    CHECK(pdag::extend_dth(g).extended());
    CHECK(pdag::extend_dtic(g).extended());
}

TEST_CASE("cached violations always match a fresh recount") {
    pdag::Rng rng(99);
    std::size_t callbacks = 0;
    for (int round = 0; round < 60; ++round) {
        const int n = 3 + static_cast<int>(rng.below(8));
        const pdag::Pdag g = samples::generated_pdag(rng(), n, rng.between(2, static_cast<std::uint64_t>(n * (n - 1) / 2)));
        const auto out = pdag::extend_dtic(g, [&](const pdag::Pdag& rest, const pdag::DticState& state) {
            ++callbacks;
            for (pdag::VertexId v : rest.alive_vertices()) {
                if (!state.scanned(v)) continue;
                std::vector<std::pair<pdag::VertexId, pdag::VertexId>> expected;
                for (pdag::VertexId u : rest.siblings(v)) {
                    for (pdag::VertexId w : rest.siblings(v)) {
                        if (u != w && !rest.adjacent(u, w)) expected.emplace_back(u, w);
                    }
                    for (pdag::VertexId w : rest.parents(v)) {
                        if (!rest.adjacent(u, w)) expected.emplace_back(u, w);
                    }
                }
                std::sort(expected.begin(), expected.end());
                CHECK(state.violations(v) == expected);
                CHECK(state.violation_count(v) == expected.size());
            }
        });
        CHECK(out.extended());
    }
    CHECK(callbacks > 0);
}

TEST_CASE("the cached variant scans each vertex at most once") {
    for (std::size_t k : {4, 8, 16}) {
        const pdag::Pdag g = pdag::dth_worst_case(k);
        const auto out = pdag::extend_dtic(g);
        CHECK(out.counters.potential_sink_checks <= 2 * g.vertex_count() * g.vertex_count());
        // Each scan costs at most deg^2 tests.
        std::uint64_t bound = 0;
        for (pdag::VertexId v = 0; v < static_cast<pdag::VertexId>(g.vertex_count()); ++v) bound += g.degree(v) * g.degree(v);
        CHECK(out.counters.adjacency_tests <= bound);
    }
}
