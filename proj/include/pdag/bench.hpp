#ifndef PDAG_BENCH_HPP
#define PDAG_BENCH_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdag/extension.hpp"
#include "pdag/generators.hpp"
#include "pdag/orientation.hpp"

namespace pdag {

// Benchmarked algorithm: one of the extenders, or a maximal-orientation method.
struct AlgorithmId {
    enum class Kind { Extend, DirectMeek, DirectMeekWorklist, CeMeek };
    Kind kind = Kind::Extend;
    ExtensionAlgorithm extender = ExtensionAlgorithm::Dtic;

    // dt, dth, dtic, brute, direct-meek, direct-meek-wl, ce-meek (= dtic),
    // ce-meek-dt, ce-meek-dth, ce-meek-dtic.
    static std::optional<AlgorithmId> parse(std::string_view name);
    std::string name() const;

    friend bool operator==(const AlgorithmId&, const AlgorithmId&) = default;
};

struct Measurement {
    double wall_us = 0.0;
    std::optional<PhaseTimings> phases;  // ce-meek only
    OpCounters counters;
};

// Times one call of the algorithm on g; only the call itself is measured.
Measurement run_once(const Pdag& g, const AlgorithmId& algo);

struct SuiteCase {
    GeneratorConfig config;  // seed is the base seed of the instances
    std::vector<AlgorithmId> algorithms;
    std::size_t instances = 10;
    std::size_t reps = 10;
};

/**
 * Suite files hold blocks of `key=value` lines separated by blank lines; `#`
 * starts a comment. Keys: style, n, edges, k, seed, background (lo..hi),
 * algorithms, instances, reps. n, edges and k accept comma lists and a block
 * expands to their cross product.
 */
std::vector<SuiteCase> parse_suite(std::istream& in);
std::vector<SuiteCase> parse_suite(std::string_view text);
std::vector<SuiteCase> read_suite_file(const std::string& path);

struct BenchRecord {
    std::string algorithm;
    GeneratorConfig config;  // seed here is the instance seed
    std::size_t m = 0;
    std::size_t instance = 0;
    std::size_t rep = 0;
    Measurement measurement;
};

struct BenchAggregate {
    std::string algorithm;
    GeneratorConfig config;  // base seed
    double mean_m = 0.0;
    std::size_t runs = 0;
    double mean_us = 0.0;
    double stddev_us = 0.0;
    std::optional<PhaseTimings> mean_phases;
    double mean_adjacency_tests = 0.0;
    double mean_potential_sink_checks = 0.0;
};

struct BenchReport {
    std::vector<BenchRecord> records;
    std::vector<BenchAggregate> aggregates;
};

struct BenchOptions {
    std::size_t jobs = 1;
    bool warmup = true;  // one untimed run per (instance, algorithm)
    std::optional<std::size_t> instances_override;
    std::optional<std::size_t> reps_override;
};

/**
 * For each case: generate the instances from seeds derived from the base
 * seed, run every algorithm `reps` times per instance, and aggregate per
 * (case, algorithm). Cells (instance x algorithm) may run on `jobs` workers;
 * the repetitions inside a cell always run sequentially on one worker.
 * Records come back in a fixed order regardless of `jobs`.
 */
BenchReport run_bench(const std::vector<SuiteCase>& suite, const BenchOptions& options = {});

inline constexpr std::string_view kCsvHeader =
    "algo,n,m,style,seed,instance,rep,wall_us,phase1_us,phase2_us,phase3_us,adj_tests,ps_checks";

// Per-run rows, then one row per aggregate with instance=all and rep=mean.
void write_csv(std::ostream& out, const BenchReport& report);

// algo,n,m,style,seed,runs,mean_us,stddev_us,phase1_us,phase2_us,phase3_us,adj_tests,ps_checks
void write_summary_csv(std::ostream& out, const BenchReport& report);

}  // namespace pdag

#endif  // PDAG_BENCH_HPP
