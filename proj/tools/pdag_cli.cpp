// pdag: consistent extension, maximal orientation and benchmarking of PDAGs.
//
// Exit codes: 0 success, 1 check rejected, 2 not extendable, 64 usage or
// parse error, 70 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pdag/bench.hpp"
#include "pdag/error.hpp"
#include "pdag/extension.hpp"
#include "pdag/generators.hpp"
#include "pdag/io.hpp"
#include "pdag/orientation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitNotExtendable = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw pdag::UsageError("cannot write '" + path + "'");
    out << text;
}

int run_gen(const pdag::GeneratorConfig& cfg, const std::string& out_path) {
    const pdag::GeneratedInstance inst = pdag::generate(cfg);
    emit(pdag::format_edge_list(inst.graph, cfg.describe()), out_path);
    return kExitOk;
}

int run_extend(const std::string& algo_name, const std::string& in, const std::string& out_path) {
    const auto algo = pdag::parse_extension_algorithm(algo_name);
    if (!algo) throw pdag::UsageError("unknown algorithm '" + algo_name + "'");
    const pdag::Pdag g = pdag::read_edge_list_file(in);
    const pdag::ExtensionOutcome outcome = pdag::extend(g, *algo);
    if (!outcome.extended()) {
        std::cerr << "not extendable\n";
        return kExitNotExtendable;
    }
    if (!pdag::is_consistent_extension(g, outcome.extension->dag)) {
        throw std::logic_error("extension failed its own consistency check");
    }
    std::ostringstream order;
    order << "elimination order:";
    for (pdag::VertexId v : outcome.extension->elimination_order) order << ' ' << v;
    emit(pdag::format_edge_list(outcome.extension->dag.graph(),
                                {std::string("algo=") + pdag::to_string(*algo), order.str()}),
         out_path);
    return kExitOk;
}

int run_orient(const std::string& method, const std::string& extender_name, const std::string& in,
               const std::string& out_path, const std::string& trace_path) {
    const pdag::Pdag g = pdag::read_edge_list_file(in);
    pdag::Pdag result;
    if (method == "direct" || method == "direct-naive") {
        pdag::OrientationResult r = method == "direct" ? pdag::direct_meek(g) : pdag::direct_meek_naive(g);
        if (!trace_path.empty()) emit(pdag::format_trace(r.trace), trace_path);
        result = std::move(r.graph);
    } else if (method == "ce") {
        const auto extender = pdag::parse_extension_algorithm(extender_name);
        if (!extender) throw pdag::UsageError("unknown extender '" + extender_name + "'");
        if (!trace_path.empty()) throw pdag::UsageError("--trace is only available for direct methods");
        result = pdag::maximal_orientation_ce(g, *extender).graph;
    } else {
        throw pdag::UsageError("unknown method '" + method + "'");
    }
    emit(pdag::format_edge_list(result), out_path);
    return kExitOk;
}

int run_check(const std::string& what, const std::string& g_path, const std::string& d_path) {
    const pdag::Pdag g = pdag::read_edge_list_file(g_path);
    const pdag::Pdag candidate = pdag::read_edge_list_file(d_path);
    if (what == "extension") {
        const pdag::ValidationResult v = pdag::validate(candidate);
        if (candidate.undirected_count() != 0 || !v.ok()) {
            std::cout << "rejected: second graph is not a DAG\n";
            return kExitRejected;
        }
        const bool ok = pdag::is_consistent_extension(g, pdag::Dag(candidate));
        std::cout << (ok ? "ok: consistent extension\n" : "rejected: not a consistent extension\n");
        return ok ? kExitOk : kExitRejected;
    }
    if (what == "mpdag") {
        const bool small = g.undirected_count() <= pdag::kBruteForceEdgeLimit;
        const pdag::Pdag expected = small ? pdag::brute_force_mpdag(g) : pdag::direct_meek(g).graph;
        const bool ok = expected == candidate;
        std::cout << (ok ? "ok" : "rejected") << ": maximal orientation ("
                  << (small ? "enumeration" : "Meek closure") << " reference)\n";
        return ok ? kExitOk : kExitRejected;
    }
    throw pdag::UsageError("check: expected 'extension' or 'mpdag', got '" + what + "'");
}

int run_bench(const std::string& suite_path, const std::string& out_path, const std::string& summary_path,
              const pdag::BenchOptions& options, const std::optional<std::uint64_t>& seed) {
    std::vector<pdag::SuiteCase> suite = pdag::read_suite_file(suite_path);
    if (seed) {
        for (auto& c : suite) c.config.seed = *seed;
    }
    const pdag::BenchReport report = pdag::run_bench(suite, options);
    std::ostringstream csv;
    pdag::write_csv(csv, report);
    emit(csv.str(), out_path);
    if (!summary_path.empty()) {
        std::ostringstream summary;
        pdag::write_summary_csv(summary, report);
        emit(summary.str(), summary_path);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Consistent extensions and maximal orientations of PDAGs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate an instance in edge-list format");
    std::string style = "uniform";
    std::size_t n = 0;
    std::string edges = "3n";
    std::string k = "3";
    std::uint64_t gen_seed = 0;
    std::string background = "2..5";
    std::string gen_out;
    gen->add_option("--style", style, "uniform | scale_free | chordal | dth_worst_case")->capture_default_str();
    gen->add_option("--n", n, "Vertex count (ignored for dth_worst_case)");
    gen->add_option("--edges", edges, "Edge rule: <m>, <c>n, nlog2n, nsqrtn")->capture_default_str();
    gen->add_option("--k", k, "Chordal subtree size or worst-case parameter: <k>, log2n, sqrtn")
        ->capture_default_str();
    gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
    gen->add_option("--background", background, "Range of background arcs, lo..hi")->capture_default_str();
    gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

    // extend
    auto* ext = app.add_subcommand("extend", "Compute a consistent DAG extension");
    std::string algo = "dtic";
    std::string ext_in;
    std::string ext_out;
    std::uint64_t unused_seed = 0;
    ext->add_option("--algo", algo, "dt | dth | dtic | brute")->capture_default_str();
    ext->add_option("input", ext_in, "PDAG edge-list file")->required();
    ext->add_option("-o,--out", ext_out, "Output file (default stdout)");
    ext->add_option("--seed", unused_seed, "Accepted for uniformity; extension is deterministic");

    // orient
    auto* orient = app.add_subcommand("orient", "Compute the maximal orientation (MPDAG)");
    std::string method = "direct";
    std::string extender = "dtic";
    std::string orient_in;
    std::string orient_out;
    std::string trace_out;
    orient->add_option("--method", method, "direct | direct-naive | ce")->capture_default_str();
    orient->add_option("--extender", extender, "Extender for --method ce: dt | dth | dtic")->capture_default_str();
    orient->add_option("input", orient_in, "PDAG edge-list file")->required();
    orient->add_option("-o,--out", orient_out, "Output file (default stdout)");
    orient->add_option("--trace", trace_out, "Write the rule applications of a direct method");
    orient->add_option("--seed", unused_seed, "Accepted for uniformity; orientation is deterministic");

    // check
    auto* check = app.add_subcommand("check", "Validate a result against the oracles");
    std::string check_what;
    std::string check_g;
    std::string check_d;
    check->add_option("kind", check_what, "extension | mpdag")->required();
    check->add_option("graph", check_g, "Input PDAG")->required();
    check->add_option("candidate", check_d, "Claimed extension or maximal orientation")->required();
    check->add_option("--seed", unused_seed, "Accepted for uniformity; checks are deterministic");

    // bench
    auto* bench = app.add_subcommand("bench", "Run a benchmark suite and write CSV");
    std::string suite_path;
    std::string csv_out;
    std::string summary_out;
    pdag::BenchOptions options;
    std::size_t reps = 0;
    std::size_t instances = 0;
    std::uint64_t bench_seed = 0;
    bool no_warmup = false;
    bench->add_option("--suite", suite_path, "Suite file")->required();
    bench->add_option("--out", csv_out, "CSV output (default stdout)");
    bench->add_option("--summary", summary_out, "Write mean/stddev per (case, algorithm)");
    bench->add_option("--jobs", options.jobs, "Worker threads")->capture_default_str();
    auto* reps_opt = bench->add_option("--reps", reps, "Override repetitions per instance");
    auto* inst_opt = bench->add_option("--instances", instances, "Override instances per case");
    auto* seed_opt = bench->add_option("--seed", bench_seed, "Override the base seed of every case");
    bench->add_flag("--no-warmup", no_warmup, "Do not run an untimed warm-up per cell");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            pdag::GeneratorConfig cfg;
            const auto parsed_style = pdag::parse_graph_style(style);
            if (!parsed_style) throw pdag::UsageError("unknown style '" + style + "'");
            cfg.style = *parsed_style;
            cfg.n = n;
            cfg.edges = pdag::EdgeRule::parse(edges);
            cfg.k = pdag::ScaleRule::parse(k);
            cfg.seed = gen_seed;
            const auto dots = background.find("..");
            if (dots == std::string::npos) throw pdag::UsageError("--background must be lo..hi");
            cfg.background_min = std::stoul(background.substr(0, dots));
            cfg.background_max = std::stoul(background.substr(dots + 2));
            if (cfg.style == pdag::GraphStyle::DthWorstCase) cfg.n = 5 * cfg.k.resolve(0) + 2;
            return run_gen(cfg, gen_out);
        }
        if (ext->parsed()) return run_extend(algo, ext_in, ext_out);
        if (orient->parsed()) return run_orient(method, extender, orient_in, orient_out, trace_out);
        if (check->parsed()) return run_check(check_what, check_g, check_d);
        if (bench->parsed()) {
            if (*reps_opt) options.reps_override = reps;
            if (*inst_opt) options.instances_override = instances;
            options.warmup = !no_warmup;
            std::optional<std::uint64_t> seed;
            if (*seed_opt) seed = bench_seed;
            return run_bench(suite_path, csv_out, summary_out, options, seed);
        }
    } catch (const pdag::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const pdag::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const pdag::InvalidInput& e) {
        std::cerr << "not extendable: " << e.what() << '\n';
        return kExitNotExtendable;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
