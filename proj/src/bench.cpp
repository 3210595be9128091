#include "pdag/bench.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "pdag/error.hpp"
#include "pdag/rng.hpp"

namespace pdag {

namespace {

using Clock = std::chrono::steady_clock;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

std::size_t parse_size(std::string_view s, std::size_t line, const char* key) {
    std::size_t value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc() || ptr != end) {
        throw ParseError(line, std::string("invalid value for '") + key + "': '" + std::string(s) + "'");
    }
    return value;
}

struct Entry {
    std::string value;
    std::size_t line = 0;
};

std::vector<SuiteCase> expand_block(const std::map<std::string, Entry>& block) {
    static const char* const kKeys[] = {"style", "n",          "edges",     "k",   "seed",
                                        "background", "algorithms", "instances", "reps"};
    for (const auto& [key, entry] : block) {
        if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
            throw ParseError(entry.line, "unknown key '" + key + "'");
        }
    }
    auto get = [&block](const char* key) -> const Entry* {
        auto it = block.find(key);
        return it == block.end() ? nullptr : &it->second;
    };

    GeneratorConfig base;
    std::vector<AlgorithmId> algorithms;
    std::size_t instances = 10;
    std::size_t reps = 10;
    if (const Entry* e = get("style")) {
        auto style = parse_graph_style(e->value);
        if (!style) throw ParseError(e->line, "unknown style '" + e->value + "'");
        base.style = *style;
    }
    if (const Entry* e = get("seed")) {
        std::uint64_t seed = 0;
        const auto* end = e->value.data() + e->value.size();
        auto [ptr, ec] = std::from_chars(e->value.data(), end, seed);
        if (e->value.empty() || ec != std::errc() || ptr != end) {
            throw ParseError(e->line, "invalid seed '" + e->value + "'");
        }
        base.seed = seed;
    }
    if (const Entry* e = get("background")) {
        const auto dots = e->value.find("..");
        if (dots == std::string::npos) throw ParseError(e->line, "background must be lo..hi");
        base.background_min = parse_size(trim(std::string_view(e->value).substr(0, dots)), e->line, "background");
        base.background_max = parse_size(trim(std::string_view(e->value).substr(dots + 2)), e->line, "background");
    }
    if (const Entry* e = get("instances")) instances = parse_size(e->value, e->line, "instances");
    if (const Entry* e = get("reps")) reps = parse_size(e->value, e->line, "reps");
    if (instances == 0 || reps == 0) {
        throw ParseError(get(instances == 0 ? "instances" : "reps")->line, "instances and reps must be >= 1");
    }
    const Entry* algos = get("algorithms");
    if (algos == nullptr) throw ParseError(block.begin()->second.line, "block has no 'algorithms'");
    for (std::string_view name : split_list(algos->value)) {
        auto id = AlgorithmId::parse(name);
        if (!id) throw ParseError(algos->line, "unknown algorithm '" + std::string(name) + "'");
        algorithms.push_back(*id);
    }

    std::vector<std::size_t> ns;
    if (const Entry* e = get("n")) {
        for (auto item : split_list(e->value)) ns.push_back(parse_size(item, e->line, "n"));
    } else if (base.style != GraphStyle::DthWorstCase) {
        throw ParseError(block.begin()->second.line, "block has no 'n'");
    } else {
        ns.push_back(0);
    }
    std::vector<EdgeRule> edge_rules{base.edges};
    if (const Entry* e = get("edges")) {
        edge_rules.clear();
        for (auto item : split_list(e->value)) {
            try {
                edge_rules.push_back(EdgeRule::parse(item));
            } catch (const UsageError& err) {
                throw ParseError(e->line, err.what());
            }
        }
    }
    std::vector<ScaleRule> scale_rules{base.k};
    if (const Entry* e = get("k")) {
        scale_rules.clear();
        for (auto item : split_list(e->value)) {
            try {
                scale_rules.push_back(ScaleRule::parse(item));
            } catch (const UsageError& err) {
                throw ParseError(e->line, err.what());
            }
        }
    }

    std::vector<SuiteCase> out;
    for (std::size_t n : ns) {
        for (const EdgeRule& edges : edge_rules) {
            for (const ScaleRule& k : scale_rules) {
                SuiteCase c;
                c.config = base;
                c.config.n = n;
                c.config.edges = edges;
                c.config.k = k;
                if (c.config.style == GraphStyle::DthWorstCase) c.config.n = 5 * k.resolve(0) + 2;
                c.algorithms = algorithms;
                c.instances = instances;
                c.reps = reps;
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

void put_double(std::ostream& out, double value) {
    out << std::fixed << std::setprecision(3) << value;
}

void put_phases(std::ostream& out, const std::optional<PhaseTimings>& phases) {
    if (!phases) {
        out << ",,,";
        return;
    }
    out << ',';
    put_double(out, phases->extension_us);
    out << ',';
    put_double(out, phases->cpdag_us);
    out << ',';
    put_double(out, phases->meek_us);
}

}  // namespace

std::optional<AlgorithmId> AlgorithmId::parse(std::string_view name) {
    if (auto ext = parse_extension_algorithm(name)) return AlgorithmId{Kind::Extend, *ext};
    if (name == "direct-meek") return AlgorithmId{Kind::DirectMeek, ExtensionAlgorithm::Dtic};
    if (name == "direct-meek-wl") return AlgorithmId{Kind::DirectMeekWorklist, ExtensionAlgorithm::Dtic};
    if (name == "ce-meek") return AlgorithmId{Kind::CeMeek, ExtensionAlgorithm::Dtic};
    constexpr std::string_view prefix = "ce-meek-";
    if (name.starts_with(prefix)) {
        auto ext = parse_extension_algorithm(name.substr(prefix.size()));
        if (ext && *ext != ExtensionAlgorithm::Brute) return AlgorithmId{Kind::CeMeek, *ext};
    }
    return std::nullopt;
}

std::string AlgorithmId::name() const {
    switch (kind) {
        case Kind::Extend: return to_string(extender);
        case Kind::DirectMeek: return "direct-meek";
        case Kind::DirectMeekWorklist: return "direct-meek-wl";
        case Kind::CeMeek:
            return extender == ExtensionAlgorithm::Dtic ? "ce-meek"
                                                        : std::string("ce-meek-") + to_string(extender);
    }
    return "?";
}

Measurement run_once(const Pdag& g, const AlgorithmId& algo) {
    Measurement m;
    const auto start = Clock::now();
    switch (algo.kind) {
        case AlgorithmId::Kind::Extend: {
            ExtensionOutcome outcome = extend(g, algo.extender);
            m.wall_us = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
            m.counters = outcome.counters;
            break;
        }
        case AlgorithmId::Kind::DirectMeek: {
            OrientationResult r = direct_meek_naive(g);
            m.wall_us = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
            break;
        }
        case AlgorithmId::Kind::DirectMeekWorklist: {
            OrientationResult r = direct_meek(g);
            m.wall_us = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
            break;
        }
        case AlgorithmId::Kind::CeMeek: {
            CeOrientationResult r = maximal_orientation_ce(g, algo.extender);
            m.wall_us = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
            m.phases = r.timings;
            m.counters = r.counters;
            break;
        }
    }
    return m;
}

std::vector<SuiteCase> parse_suite(std::istream& in) {
    std::vector<SuiteCase> suite;
    std::map<std::string, Entry> block;
    auto flush = [&] {
        if (block.empty()) return;
        auto cases = expand_block(block);
        suite.insert(suite.end(), cases.begin(), cases.end());
        block.clear();
    };
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) {
            flush();
            continue;
        }
        if (line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected key=value");
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty() || value.empty()) throw ParseError(line_no, "empty key or value");
        if (!block.emplace(key, Entry{value, line_no}).second) {
            throw ParseError(line_no, "duplicate key '" + key + "'");
        }
    }
    flush();
    if (suite.empty()) throw ParseError(line_no + 1, "suite defines no benchmark cases");
    return suite;
}

std::vector<SuiteCase> parse_suite(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_suite(in);
}

std::vector<SuiteCase> read_suite_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return parse_suite(in);
}

BenchReport run_bench(const std::vector<SuiteCase>& suite, const BenchOptions& options) {
    struct Instance {
        GeneratorConfig config;
        Pdag graph;
    };
    struct Cell {
        std::size_t case_index;
        std::size_t instance;
        std::size_t algorithm;
        std::vector<Measurement> runs;
    };

    std::vector<std::vector<Instance>> instances(suite.size());
    std::vector<Cell> cells;
    for (std::size_t c = 0; c < suite.size(); ++c) {
        const SuiteCase& sc = suite[c];
        const std::size_t count = options.instances_override.value_or(sc.instances);
        for (std::size_t i = 0; i < count; ++i) {
            GeneratorConfig cfg = sc.config;
            cfg.seed = derive_seed(sc.config.seed, i);
            instances[c].push_back({cfg, generate(cfg).graph});
            for (std::size_t a = 0; a < sc.algorithms.size(); ++a) cells.push_back({c, i, a, {}});
        }
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t idx = next++; idx < cells.size(); idx = next++) {
            Cell& cell = cells[idx];
            const SuiteCase& sc = suite[cell.case_index];
            const Pdag& g = instances[cell.case_index][cell.instance].graph;
            const AlgorithmId& algo = sc.algorithms[cell.algorithm];
            try {
                if (options.warmup) run_once(g, algo);
                const std::size_t reps = options.reps_override.value_or(sc.reps);
                for (std::size_t r = 0; r < reps; ++r) cell.runs.push_back(run_once(g, algo));
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = cells.size();
            }
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    BenchReport report;
    std::size_t cell_index = 0;
    for (std::size_t c = 0; c < suite.size(); ++c) {
        const SuiteCase& sc = suite[c];
        const std::size_t first_cell = cell_index;
        const std::size_t n_inst = instances[c].size();
        const std::size_t n_alg = sc.algorithms.size();
        for (std::size_t i = 0; i < n_inst; ++i) {
            for (std::size_t a = 0; a < n_alg; ++a) {
                const Cell& cell = cells[first_cell + i * n_alg + a];
                const Instance& inst = instances[c][i];
                for (std::size_t r = 0; r < cell.runs.size(); ++r) {
                    report.records.push_back({sc.algorithms[a].name(), inst.config, inst.graph.edge_count(),
                                              i, r, cell.runs[r]});
                }
            }
        }
        for (std::size_t a = 0; a < n_alg; ++a) {
            BenchAggregate agg;
            agg.algorithm = sc.algorithms[a].name();
            agg.config = sc.config;
            double sum = 0.0;
            double sum_sq = 0.0;
            double sum_m = 0.0;
            PhaseTimings phases;
            bool has_phases = false;
            for (std::size_t i = 0; i < n_inst; ++i) {
                const Cell& cell = cells[first_cell + i * n_alg + a];
                for (const Measurement& m : cell.runs) {
                    ++agg.runs;
                    sum += m.wall_us;
                    sum_sq += m.wall_us * m.wall_us;
                    sum_m += static_cast<double>(instances[c][i].graph.edge_count());
                    agg.mean_adjacency_tests += static_cast<double>(m.counters.adjacency_tests);
                    agg.mean_potential_sink_checks += static_cast<double>(m.counters.potential_sink_checks);
                    if (m.phases) {
                        has_phases = true;
                        phases.extension_us += m.phases->extension_us;
                        phases.cpdag_us += m.phases->cpdag_us;
                        phases.meek_us += m.phases->meek_us;
                    }
                }
            }
            if (agg.runs > 0) {
                const auto runs = static_cast<double>(agg.runs);
                agg.mean_us = sum / runs;
                agg.mean_m = sum_m / runs;
                agg.mean_adjacency_tests /= runs;
                agg.mean_potential_sink_checks /= runs;
                if (agg.runs > 1) {
                    const double var = (sum_sq - runs * agg.mean_us * agg.mean_us) / (runs - 1.0);
                    agg.stddev_us = std::sqrt(std::max(0.0, var));
                }
                if (has_phases) {
                    phases.extension_us /= runs;
                    phases.cpdag_us /= runs;
                    phases.meek_us /= runs;
                    agg.mean_phases = phases;
                }
            }
            report.aggregates.push_back(std::move(agg));
        }
        cell_index += n_inst * n_alg;
    }
    return report;
}

void write_csv(std::ostream& out, const BenchReport& report) {
    out << kCsvHeader << '\n';
    for (const BenchRecord& r : report.records) {
        out << r.algorithm << ',' << r.config.n << ',' << r.m << ',' << to_string(r.config.style) << ','
            << r.config.seed << ',' << r.instance << ',' << r.rep << ',';
        put_double(out, r.measurement.wall_us);
        put_phases(out, r.measurement.phases);
        out << ',' << r.measurement.counters.adjacency_tests << ','
            << r.measurement.counters.potential_sink_checks << '\n';
    }
    for (const BenchAggregate& a : report.aggregates) {
        out << a.algorithm << ',' << a.config.n << ',' << std::llround(a.mean_m) << ','
            << to_string(a.config.style) << ',' << a.config.seed << ",all,mean,";
        put_double(out, a.mean_us);
        put_phases(out, a.mean_phases);
        out << ',';
        put_double(out, a.mean_adjacency_tests);
        out << ',';
        put_double(out, a.mean_potential_sink_checks);
        out << '\n';
    }
}

void write_summary_csv(std::ostream& out, const BenchReport& report) {
    out << "algo,n,m,style,seed,runs,mean_us,stddev_us,phase1_us,phase2_us,phase3_us,adj_tests,ps_checks\n";
    for (const BenchAggregate& a : report.aggregates) {
        out << a.algorithm << ',' << a.config.n << ',' << std::llround(a.mean_m) << ','
            << to_string(a.config.style) << ',' << a.config.seed << ',' << a.runs << ',';
        put_double(out, a.mean_us);
        out << ',';
        put_double(out, a.stddev_us);
        put_phases(out, a.mean_phases);
        out << ',';
        put_double(out, a.mean_adjacency_tests);
        out << ',';
        put_double(out, a.mean_potential_sink_checks);
        out << '\n';
    }
}

}  // namespace pdag
