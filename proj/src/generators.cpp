#include "pdag/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <queue>
#include <unordered_set>

#include "pdag/error.hpp"
#include "pdag/rng.hpp"

namespace pdag {

namespace {

std::size_t max_edges(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::optional<std::size_t> parse_count(std::string_view text) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
    return value;
}

std::uint64_t pair_key(VertexId u, VertexId v) {
    const auto lo = static_cast<std::uint64_t>(std::min(u, v));
    const auto hi = static_cast<std::uint64_t>(std::max(u, v));
    return (lo << 32) | hi;
}

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// m distinct unordered pairs drawn uniformly; dense requests sample the complement.
EdgeList uniform_pairs(std::size_t n, std::size_t m, Rng& rng) {
    const std::size_t total = max_edges(n);
    const bool complement = m > total / 2;
    const std::size_t draws = complement ? total - m : m;
    std::unordered_set<std::uint64_t> picked;
    picked.reserve(draws * 2);
    while (picked.size() < draws) {
        const auto u = static_cast<VertexId>(rng.below(n));
        const auto v = static_cast<VertexId>(rng.below(n));
        if (u != v) picked.insert(pair_key(u, v));
    }
    EdgeList out;
    out.reserve(m);
    if (complement) {
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                const auto a = static_cast<VertexId>(u);
                const auto b = static_cast<VertexId>(v);
                if (!picked.contains(pair_key(a, b))) out.emplace_back(a, b);
            }
        }
    } else {
        for (std::uint64_t key : picked) {
            out.emplace_back(static_cast<VertexId>(key >> 32), static_cast<VertexId>(key & 0xffffffffU));
        }
        // Hash iteration order is not part of the contract; fix it before use.
        std::sort(out.begin(), out.end());
    }
    return out;
}

// Preferential attachment, then trimmed or padded to exactly m edges and relabelled.
EdgeList barabasi_albert_pairs(std::size_t n, std::size_t m, Rng& rng) {
    const std::size_t attach = std::max<std::size_t>(1, (m + n - 1) / std::max<std::size_t>(n, 1));
    EdgeList edges;
    std::unordered_set<std::uint64_t> present;
    // Every vertex appears once up front so that isolated vertices can be picked.
    std::vector<VertexId> pool;
    pool.reserve(n + 2 * attach * n);
    std::vector<VertexId> targets;
    for (std::size_t t = 0; t < n; ++t) {
        const auto v = static_cast<VertexId>(t);
        const std::size_t want = std::min(attach, t);
        targets.clear();
        while (targets.size() < want) {
            const VertexId u = pool[rng.below(pool.size())];
            if (std::find(targets.begin(), targets.end(), u) == targets.end()) targets.push_back(u);
        }
        for (VertexId u : targets) {
            edges.emplace_back(u, v);
            present.insert(pair_key(u, v));
            pool.push_back(u);
            pool.push_back(v);
        }
        pool.push_back(v);
    }
    if (edges.size() > m) {
        rng.shuffle(edges);
        edges.resize(m);
    }
    while (edges.size() < m) {
        const auto u = static_cast<VertexId>(rng.below(n));
        const auto v = static_cast<VertexId>(rng.below(n));
        if (u == v || !present.insert(pair_key(u, v)).second) continue;
        edges.emplace_back(u, v);
    }
    std::vector<VertexId> label(n);
    for (std::size_t i = 0; i < n; ++i) label[i] = static_cast<VertexId>(i);
    rng.shuffle(label);
    for (auto& [u, v] : edges) {
        u = label[u];
        v = label[v];
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Uniform labelled tree on n vertices via a Prufer sequence.
std::vector<std::vector<VertexId>> random_tree(std::size_t n, Rng& rng) {
    std::vector<std::vector<VertexId>> adj(n);
    if (n < 2) return adj;
    auto link = [&adj](std::size_t a, std::size_t b) {
        adj[a].push_back(static_cast<VertexId>(b));
        adj[b].push_back(static_cast<VertexId>(a));
    };
    if (n == 2) {
        link(0, 1);
        return adj;
    }
    std::vector<std::size_t> code(n - 2);
    std::vector<std::size_t> remaining(n, 1);
    for (auto& c : code) {
        c = rng.below(n);
        ++remaining[c];
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        if (remaining[v] == 1) leaves.push(v);
    }
    for (std::size_t c : code) {
        const std::size_t leaf = leaves.top();
        leaves.pop();
        link(leaf, c);
        if (--remaining[c] == 1) leaves.push(c);
    }
    const std::size_t a = leaves.top();
    leaves.pop();
    link(a, leaves.top());
    return adj;
}

std::size_t geometric_size(double mean, std::size_t n, Rng& rng) {
    if (mean <= 1.0) return 1;
    const double p = 1.0 / mean;
    const double draw = std::floor(std::log(rng.unit_open_closed()) / std::log1p(-p));
    const double size = 1.0 + draw;
    return size >= static_cast<double>(n) ? n : static_cast<std::size_t>(size);
}

}  // namespace

std::size_t EdgeRule::resolve(std::size_t n) const {
    const double dn = static_cast<double>(n);
    switch (kind) {
        case Kind::Explicit: return value;
        case Kind::PerVertex: return value * n;
        case Kind::NLog2N: return n < 2 ? 0 : static_cast<std::size_t>(std::floor(dn * std::log2(dn)));
        case Kind::NSqrtN: return static_cast<std::size_t>(std::floor(dn * std::sqrt(dn)));
    }
    return 0;
}

std::string EdgeRule::to_string() const {
    switch (kind) {
        case Kind::Explicit: return std::to_string(value);
        case Kind::PerVertex: return std::to_string(value) + "n";
        case Kind::NLog2N: return "nlog2n";
        case Kind::NSqrtN: return "nsqrtn";
    }
    return "?";
}

EdgeRule EdgeRule::parse(std::string_view text) {
    if (text == "nlog2n") return {Kind::NLog2N, 0};
    if (text == "nsqrtn") return {Kind::NSqrtN, 0};
    if (!text.empty() && text.back() == 'n') {
        if (auto c = parse_count(text.substr(0, text.size() - 1))) return {Kind::PerVertex, *c};
    } else if (auto m = parse_count(text)) {
        return {Kind::Explicit, *m};
    }
    throw UsageError("unknown edge rule '" + std::string(text) +
                     "' (expected <m>, <c>n, nlog2n or nsqrtn)");
}

std::size_t ScaleRule::resolve(std::size_t n) const {
    const double dn = static_cast<double>(std::max<std::size_t>(n, 1));
    switch (kind) {
        case Kind::Explicit: return value;
        case Kind::Log2N: return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(std::log2(dn))));
        case Kind::SqrtN: return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(std::sqrt(dn))));
    }
    return 1;
}

std::string ScaleRule::to_string() const {
    switch (kind) {
        case Kind::Explicit: return std::to_string(value);
        case Kind::Log2N: return "log2n";
        case Kind::SqrtN: return "sqrtn";
    }
    return "?";
}

ScaleRule ScaleRule::parse(std::string_view text) {
    if (text == "log2n") return {Kind::Log2N, 0};
    if (text == "sqrtn") return {Kind::SqrtN, 0};
    if (auto k = parse_count(text)) return {Kind::Explicit, *k};
    throw UsageError("unknown scale rule '" + std::string(text) + "' (expected <k>, log2n or sqrtn)");
}

const char* to_string(GraphStyle style) noexcept {
    switch (style) {
        case GraphStyle::Uniform: return "uniform";
        case GraphStyle::ScaleFree: return "scale_free";
        case GraphStyle::Chordal: return "chordal";
        case GraphStyle::DthWorstCase: return "dth_worst_case";
    }
    return "?";
}

std::optional<GraphStyle> parse_graph_style(std::string_view name) noexcept {
    if (name == "uniform") return GraphStyle::Uniform;
    if (name == "scale_free") return GraphStyle::ScaleFree;
    if (name == "chordal") return GraphStyle::Chordal;
    if (name == "dth_worst_case") return GraphStyle::DthWorstCase;
    return std::nullopt;
}

void GeneratorConfig::check() const {
    if (k.resolve(n) < 1) throw UsageError("generator: k must be at least 1");
    if (background_min > background_max) {
        throw UsageError("generator: background range " + std::to_string(background_min) + ".." +
                         std::to_string(background_max) + " is empty");
    }
    if (style == GraphStyle::Uniform || style == GraphStyle::ScaleFree) {
        const std::size_t m = edge_count();
        if (m > max_edges(n)) {
            throw UsageError("generator: m = " + std::to_string(m) + " exceeds n(n-1)/2 = " +
                             std::to_string(max_edges(n)));
        }
    }
}

std::vector<std::string> GeneratorConfig::describe() const {
    std::vector<std::string> out;
    out.push_back(std::string("style=") + pdag::to_string(style));
    out.push_back("n=" + std::to_string(n));
    out.push_back("edges=" + edges.to_string());
    out.push_back("k=" + k.to_string());
    out.push_back("seed=" + std::to_string(seed));
    out.push_back("background=" + std::to_string(background_min) + ".." + std::to_string(background_max));
    return out;
}

GeneratedInstance random_pdag(const GeneratorConfig& cfg) {
    cfg.check();
    if (cfg.style != GraphStyle::Uniform && cfg.style != GraphStyle::ScaleFree) {
        throw UsageError("random_pdag: style must be uniform or scale_free");
    }
    const std::size_t n = cfg.n;
    const std::size_t m = cfg.edge_count();
    Rng rng(cfg.seed);
    const EdgeList pairs =
        cfg.style == GraphStyle::Uniform ? uniform_pairs(n, m, rng) : barabasi_albert_pairs(n, m, rng);

    // A random permutation is the topological order of the hidden DAG.
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[i] = i;
    rng.shuffle(rank);
    Pdag dag(n);
    for (const auto& [u, v] : pairs) {
        if (rank[u] < rank[v]) {
            dag.add_arc(u, v);
        } else {
            dag.add_arc(v, u);
        }
    }

    Pdag g(n);
    std::vector<Edge> undirected;
    for (const Edge& e : dag.arcs()) {
        bool in_v_structure = false;
        for (VertexId w : dag.parents(e.to)) {
            if (w != e.from && !dag.adjacent(w, e.from)) {
                in_v_structure = true;
                break;
            }
        }
        if (in_v_structure) {
            g.add_arc(e.from, e.to);
        } else {
            undirected.push_back(e);
        }
    }
    const std::size_t wanted = static_cast<std::size_t>(rng.between(cfg.background_min, cfg.background_max));
    const std::size_t background = std::min(wanted, undirected.size());
    // Partial Fisher-Yates: the first `background` entries become arcs.
    for (std::size_t i = 0; i < background; ++i) {
        std::swap(undirected[i], undirected[i + rng.below(undirected.size() - i)]);
    }
    for (std::size_t i = 0; i < undirected.size(); ++i) {
        const Edge& e = undirected[i];
        if (i < background) {
            g.add_arc(e.from, e.to);
        } else {
            g.add_undirected(e.from, e.to);
        }
    }
    return GeneratedInstance{std::move(g), Dag(std::move(dag))};
}

Pdag chordal_graph(const GeneratorConfig& cfg) {
    cfg.check();
    const std::size_t n = cfg.n;
    const std::size_t k = cfg.k.resolve(n);
    Rng rng(cfg.seed);
    const auto tree = random_tree(n, rng);

    std::vector<std::vector<VertexId>> owners(n);
    std::vector<std::size_t> stamp(n, 0);
    std::vector<VertexId> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t target = k >= n ? n : geometric_size(static_cast<double>(k), n, rng);
        const std::size_t mark = i + 1;
        frontier.assign(1, static_cast<VertexId>(rng.below(n)));
        stamp[frontier[0]] = mark;
        std::size_t size = 0;
        while (size < target && !frontier.empty()) {
            const std::size_t pick = rng.below(frontier.size());
            const VertexId node = frontier[pick];
            frontier[pick] = frontier.back();
            frontier.pop_back();
            owners[node].push_back(static_cast<VertexId>(i));
            ++size;
            for (VertexId next : tree[node]) {
                if (stamp[next] != mark) {
                    stamp[next] = mark;
                    frontier.push_back(next);
                }
            }
        }
    }

    Pdag g(n);
    for (const auto& group : owners) {
        for (std::size_t a = 0; a < group.size(); ++a) {
            for (std::size_t b = a + 1; b < group.size(); ++b) {
                if (!g.adjacent(group[a], group[b])) g.add_undirected(group[a], group[b]);
            }
        }
    }
    return g;
}

Pdag dth_worst_case(std::size_t k) {
    if (k < 1) throw UsageError("dth_worst_case: k must be at least 1");
    const auto kk = static_cast<VertexId>(k);
    const VertexId cvw = 0;
    const VertexId cv = cvw + kk;
    const VertexId cw = cv + 2 * kk;
    const VertexId v = 5 * kk;
    const VertexId w = v + 1;
    Pdag g(5 * k + 2);
    auto clique = [&g](VertexId first, VertexId count) {
        for (VertexId a = first; a < first + count; ++a) {
            for (VertexId b = a + 1; b < first + count; ++b) g.add_undirected(a, b);
        }
    };
    clique(cvw, kk);
    clique(cv, 2 * kk);
    clique(cw, 2 * kk);
    for (VertexId x = cvw; x < cvw + kk; ++x) {
        g.add_undirected(v, x);
        g.add_undirected(w, x);
    }
    for (VertexId x = cv; x < cv + 2 * kk; ++x) g.add_undirected(v, x);
    for (VertexId x = cw; x < cw + 2 * kk; ++x) g.add_undirected(w, x);
    return g;
}

GeneratedInstance generate(const GeneratorConfig& cfg) {
    switch (cfg.style) {
        case GraphStyle::Uniform:
        case GraphStyle::ScaleFree: return random_pdag(cfg);
        case GraphStyle::Chordal: return {chordal_graph(cfg), std::nullopt};
        case GraphStyle::DthWorstCase: return {dth_worst_case(cfg.k.resolve(cfg.n)), std::nullopt};
    }
    throw UsageError("generate: unknown style");
}

}  // namespace pdag
