// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: pdag_acceptance [criterion ...]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pdag/error.hpp"
#include "pdag/extension.hpp"
#include "pdag/generators.hpp"
#include "pdag/orientation.hpp"
#include "pdag/rng.hpp"
#include "samples.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Verdict()> run;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double micros_since(Clock::time_point start) {
    return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

const pdag::ExtensionAlgorithm kExtenders[] = {pdag::ExtensionAlgorithm::Dt, pdag::ExtensionAlgorithm::Dth,
                                               pdag::ExtensionAlgorithm::Dtic};

Verdict extension_oracle() {
    std::vector<pdag::Pdag> graphs = samples::small_mixed(1000, 0xacce55'0001ULL);
    const std::vector<pdag::Pdag> mutants = samples::non_extendable_mutants(100, 0xacce55'0002ULL);
    graphs.insert(graphs.end(), mutants.begin(), mutants.end());

    std::size_t disagreements = 0;
    std::size_t invalid = 0;
    std::size_t extendable = 0;
    std::size_t mutants_accepted = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const pdag::Pdag& g = graphs[i];
        const bool expected = pdag::brute_force_extend(g).extended();
        extendable += expected;
        if (i >= 1000 && expected) ++mutants_accepted;
        for (auto algo : kExtenders) {
            const pdag::ExtensionOutcome out = pdag::extend(g, algo);
            if (out.extended() != expected) ++disagreements;
            if (out.extended() && !pdag::is_consistent_extension(g, out.extension->dag)) ++invalid;
        }
    }
    return {disagreements == 0 && invalid == 0 && mutants_accepted == 0,
            fmt("%zu graphs (%zu extendable), %zu disagreements, %zu invalid DAGs, %zu mutants extendable",
                graphs.size(), extendable, disagreements, invalid, mutants_accepted)};
}

Verdict orientation_oracle() {
    const std::vector<pdag::Pdag> graphs = samples::small_extendable(500, 7, 0xacce55'0003ULL);
    std::size_t mismatches = 0;
    std::size_t independent_mismatches = 0;
    for (const pdag::Pdag& g : graphs) {
        const pdag::Pdag m = pdag::direct_meek(g).graph;
        if (!(m == pdag::brute_force_mpdag(g))) ++mismatches;
        if (!(m == oracle::OrderSpace(oracle::Matrix::from(g)).maximal_orientation().to_pdag())) {
            ++independent_mismatches;
        }
    }
    return {mismatches == 0 && independent_mismatches == 0,
            fmt("%zu graphs, %zu mismatches vs enumeration, %zu vs order-space oracle", graphs.size(), mismatches,
                independent_mismatches)};
}

Verdict pipeline_equivalence() {
    std::size_t cases = 0;
    std::size_t mismatches = 0;
    std::uint64_t index = 0;
    for (std::size_t n : {50, 100, 200}) {
        for (const char* edges : {"3n", "5n", "nlog2n", "nsqrtn"}) {
            for (int rep = 0; rep < 25; ++rep) {
                pdag::GeneratorConfig cfg;
                cfg.n = n;
                cfg.edges = pdag::EdgeRule::parse(edges);
                cfg.style = rep % 2 == 0 ? pdag::GraphStyle::Uniform : pdag::GraphStyle::ScaleFree;
                cfg.seed = pdag::derive_seed(0xacce55'0004ULL, index++);
                const pdag::Pdag g = pdag::generate(cfg).graph;
                const pdag::Pdag expected = pdag::direct_meek(g).graph;
                ++cases;
                for (auto algo : kExtenders) {
                    if (!(pdag::maximal_orientation_ce(g, algo).graph == expected)) ++mismatches;
                }
            }
        }
    }
    return {mismatches == 0, fmt("%zu graphs x 3 extenders, %zu mismatches", cases, mismatches)};
}

Verdict figure_one() {
    const pdag::Pdag g = samples::fig1_g();
    const pdag::Pdag m = samples::fig1_m();
    const pdag::Dag d(samples::fig1_d());
    std::vector<std::string> failures;
    for (auto algo : kExtenders) {
        const auto out = pdag::extend(g, algo);
        if (!out.extended() || !pdag::is_consistent_extension(g, out.extension->dag)) {
            failures.push_back(std::string("extend ") + pdag::to_string(algo));
        }
    }
    if (!pdag::is_consistent_extension(g, d)) failures.push_back("D rejected");
    if (!(pdag::direct_meek(g).graph == m)) failures.push_back("direct_meek(G) != M");
    if (!(pdag::direct_meek_naive(g).graph == m)) failures.push_back("naive direct_meek(G) != M");
    for (auto algo : kExtenders) {
        if (!(pdag::maximal_orientation_ce(g, algo).graph == m)) failures.push_back("ce(G) != M");
    }
    if (!(pdag::dag_to_cpdag(d) == m)) failures.push_back("cpdag(D) != M");
    if (!(oracle::cpdag(oracle::Matrix::from(d.graph())).to_pdag() == m)) failures.push_back("oracle cpdag(D) != M");
    std::string detail = failures.empty() ? "G extends, orientation(G) = cpdag(D) = M" : "";
    for (const auto& f : failures) detail += f + "; ";
    return {failures.empty(), detail};
}

Verdict meek_patterns() {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    for (const samples::RulePattern& p : samples::rule_patterns()) {
        for (bool naive : {false, true}) {
            const pdag::OrientationResult r = naive ? pdag::direct_meek_naive(p.graph) : pdag::direct_meek(p.graph);
            pdag::Pdag expected = p.graph;
            expected.orient(p.from, p.to);
            if (!(r.graph == expected) || r.trace.steps.size() != 1 ||
                static_cast<int>(r.trace.steps[0].rule) != p.rule) {
                failures.push_back(fmt("R%d", p.rule));
            }
            ++checked;
            for (const pdag::Pdag& broken : p.broken) {
                const pdag::OrientationResult b = naive ? pdag::direct_meek_naive(broken) : pdag::direct_meek(broken);
                if (!(b.graph == broken)) failures.push_back(fmt("R%d broken variant oriented", p.rule));
                ++checked;
            }
        }
    }
    std::string detail = fmt("%zu pattern runs", checked);
    for (const auto& f : failures) detail += "; " + f;
    return {failures.empty(), detail};
}

Verdict cpdag_oracle() {
    const std::vector<pdag::Dag> dags = samples::small_dags(500, 10, 0xacce55'0006ULL);
    std::size_t mismatches = 0;
    std::size_t independent_mismatches = 0;
    for (const pdag::Dag& d : dags) {
        const pdag::Pdag c = pdag::dag_to_cpdag(d);
        if (!(c == pdag::brute_force_cpdag(d))) ++mismatches;
        if (!(c == oracle::cpdag(oracle::Matrix::from(d.graph())).to_pdag())) ++independent_mismatches;
    }
    return {mismatches == 0 && independent_mismatches == 0,
            fmt("%zu DAGs, %zu mismatches vs enumeration, %zu vs order-space oracle", dags.size(), mismatches,
                independent_mismatches)};
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += std::log(xs[i]);
        my += std::log(ys[i]);
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = std::log(xs[i]) - mx;
        sxy += dx * (std::log(ys[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

Verdict adversarial_scaling() {
    std::vector<double> ns, dth, dtic;
    std::string counts;
    for (std::size_t k : {8, 16, 32, 64}) {
        const pdag::Pdag g = pdag::dth_worst_case(k);
        const auto a = pdag::extend_dth(g);
        const auto b = pdag::extend_dtic(g);
        if (!a.extended() || !b.extended()) return {false, fmt("k=%zu not extended", k)};
        ns.push_back(static_cast<double>(g.vertex_count()));
        dth.push_back(static_cast<double>(a.counters.adjacency_tests));
        dtic.push_back(static_cast<double>(b.counters.adjacency_tests));
        counts += fmt(" k=%zu:%llu/%llu", k, static_cast<unsigned long long>(a.counters.adjacency_tests),
                      static_cast<unsigned long long>(b.counters.adjacency_tests));
    }
    const double e_dth = loglog_slope(ns, dth);
    const double e_dtic = loglog_slope(ns, dtic);
    return {e_dth >= 3.5 && e_dtic <= 3.2,
            fmt("exponent dth %.2f (>= 3.5), dtic %.2f (<= 3.2); adjacency tests dth/dtic", e_dth, e_dtic) +
                counts};
}

Verdict ce_vs_direct() {
    double ce_total = 0, naive_total = 0, worklist_total = 0;
    for (std::uint64_t i = 0; i < 5; ++i) {
        pdag::GeneratorConfig cfg;
        cfg.n = 1024;
        cfg.edges = {pdag::EdgeRule::Kind::Explicit, 1024 * 32};
        cfg.seed = pdag::derive_seed(0xacce55'0008ULL, i);
        const pdag::Pdag g = pdag::generate(cfg).graph;
        auto start = Clock::now();
        const pdag::Pdag a = pdag::maximal_orientation_ce(g, pdag::ExtensionAlgorithm::Dtic).graph;
        ce_total += micros_since(start);
        start = Clock::now();
        const pdag::Pdag b = pdag::direct_meek_naive(g).graph;
        naive_total += micros_since(start);
        start = Clock::now();
        const pdag::Pdag c = pdag::direct_meek(g).graph;
        worklist_total += micros_since(start);
        if (!(a == b) || !(a == c)) return {false, "ce and direct closures disagree"};
    }
    const double ratio = ce_total / naive_total;
    return {ratio <= 0.5, fmt("mean ce(dtic) %.0f us, naive direct %.0f us, ratio %.3f (<= 0.5); "
                              "indexed worklist direct %.0f us",
                              ce_total / 5, naive_total / 5, ratio, worklist_total / 5)};
}

Verdict phase_dominance() {
    double ext = 0, total = 0, worst = 1.0;
    for (std::uint64_t i = 0; i < 5; ++i) {
        pdag::GeneratorConfig cfg;
        cfg.n = 4096;
        cfg.edges = pdag::EdgeRule::parse("3n");
        cfg.seed = pdag::derive_seed(0xacce55'0009ULL, i);
        const pdag::Pdag g = pdag::generate(cfg).graph;
        const auto r = pdag::maximal_orientation_ce(g, pdag::ExtensionAlgorithm::Dtic);
        ext += r.timings.extension_us;
        total += r.timings.total_us();
        worst = std::min(worst, r.timings.extension_us / r.timings.total_us());
    }
    const double share = ext / total;
    return {share >= 0.5, fmt("extension share %.1f%% of ce total (>= 50%%), lowest instance %.1f%%", 100 * share,
                              100 * worst)};
}

Verdict generator_validity() {
    std::size_t failures = 0;
    std::uint64_t index = 0;
    const char* rules[] = {"3n", "5n", "nlog2n", "nsqrtn"};
    for (int i = 0; i < 1000; ++i) {
        pdag::GeneratorConfig cfg;
        cfg.n = 8 + static_cast<std::size_t>(i % 8) * 8;
        cfg.edges = pdag::EdgeRule::parse(rules[i % 4]);
        if (cfg.edge_count() > cfg.n * (cfg.n - 1) / 2) cfg.edges = pdag::EdgeRule::parse("3n");
        cfg.style = i % 2 == 0 ? pdag::GraphStyle::Uniform : pdag::GraphStyle::ScaleFree;
        cfg.seed = pdag::derive_seed(0xacce55'000aULL, index++);
        const pdag::GeneratedInstance inst = pdag::generate(cfg);
        const bool ok = inst.graph.edge_count() == cfg.edge_count() && inst.hidden_dag &&
                        pdag::is_consistent_extension(inst.graph, *inst.hidden_dag) &&
                        pdag::extend_dtic(inst.graph).extended();
        failures += !ok;
    }
    std::size_t chordal_failures = 0;
    const char* ks[] = {"3", "5", "log2n", "sqrtn"};
    for (int i = 0; i < 200; ++i) {
        pdag::GeneratorConfig cfg;
        cfg.n = 10 + static_cast<std::size_t>(i % 5) * 10;
        cfg.style = pdag::GraphStyle::Chordal;
        cfg.k = pdag::ScaleRule::parse(ks[i % 4]);
        cfg.seed = pdag::derive_seed(0xacce55'000bULL, static_cast<std::uint64_t>(i));
        const pdag::Pdag g = pdag::generate(cfg).graph;
        bool ok = oracle::chordal(oracle::Matrix::from(g)) && g.arc_count() == 0;
        for (auto algo : kExtenders) {
            const auto out = pdag::extend(g, algo);
            ok = ok && out.extended() && pdag::is_consistent_extension(g, out.extension->dag);
        }
        chordal_failures += !ok;
    }
    std::size_t count_failures = 0;
    for (std::size_t k = 1; k <= 10; ++k) {
        const std::size_t expected = 2 * (2 * k * (2 * k - 1) / 2) + k * (k - 1) / 2 + 6 * k;
        const pdag::Pdag g = pdag::dth_worst_case(k);
        count_failures += g.edge_count() != expected || g.vertex_count() != 5 * k + 2;
    }
    return {failures == 0 && chordal_failures == 0 && count_failures == 0,
            fmt("random_pdag %zu/1000 failed, chordal %zu/200 failed, worst-case counts %zu/10 wrong", failures,
                chordal_failures, count_failures)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "extension oracle equivalence", 60, extension_oracle},
        {2, "maximal orientation oracle equivalence", 120, orientation_oracle},
        {3, "ce pipeline equals direct closure", 120, pipeline_equivalence},
        {4, "running example regression", 1, figure_one},
        {5, "Meek rule patterns", 1, meek_patterns},
        {6, "DAG to CPDAG oracle", 60, cpdag_oracle},
        {7, "adversarial family scaling", 120, adversarial_scaling},
        {8, "ce faster than naive direct closure", 600, ce_vs_direct},
        {9, "extension phase dominates on sparse graphs", 300, phase_dominance},
        {10, "generator validity", 120, generator_validity},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    int failed = 0;
    for (const Criterion& c : criteria) {
        if (!only.empty() && !only.contains(c.id)) continue;
        const auto start = Clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = micros_since(start) / 1e6;
        if (seconds > c.budget_s) {
            v.pass = false;
            v.detail += fmt("; over budget (%.0f s)", c.budget_s);
        }
        std::printf("%s [%d] %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), seconds);
        std::fflush(stdout);
        failed += !v.pass;
    }
    return failed == 0 ? 0 : 1;
}
