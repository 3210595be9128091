#include "pdag/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "pdag/error.hpp"

namespace pdag {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view s, long long& out) {
    s = trim(s);
    if (s.empty()) return false;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace

Pdag parse_edge_list(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool have_n = false;
    Pdag g;
    long long n = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (!have_n) {
            if (!parse_int(line, n) || n < 0) {
                throw ParseError(line_no, "expected a non-negative vertex count, got '" +
                                              std::string(line) + "'");
            }
            g = Pdag(static_cast<std::size_t>(n));
            have_n = true;
            continue;
        }
        bool directed = true;
        auto op = line.find("->");
        if (op == std::string_view::npos) {
            op = line.find("--");
            directed = false;
        }
        if (op == std::string_view::npos) {
            throw ParseError(line_no, "expected 'u -> v' or 'u -- v', got '" + std::string(line) + "'");
        }
        long long u = 0;
        long long v = 0;
        if (!parse_int(line.substr(0, op), u) || !parse_int(line.substr(op + 2), v)) {
            throw ParseError(line_no, "malformed vertex id in '" + std::string(line) + "'");
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
        }
        if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
        const auto a = static_cast<VertexId>(u);
        const auto b = static_cast<VertexId>(v);
        if (g.adjacent(a, b)) {
            throw ParseError(line_no, "duplicate edge between " + std::to_string(u) + " and " +
                                          std::to_string(v));
        }
        if (directed) {
            g.add_arc(a, b);
        } else {
            g.add_undirected(a, b);
        }
    }
    if (!have_n) throw ParseError(line_no + 1, "missing vertex count");
    return g;
}

Pdag parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

Pdag read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return parse_edge_list(in);
}

std::string format_edge_list(const Pdag& g, const std::vector<std::string>& header) {
    if (g.alive_count() != g.vertex_count()) {
        throw UsageError("format_edge_list: graph has removed vertices");
    }
    std::ostringstream out;
    for (const std::string& h : header) out << "# " << h << '\n';
    out << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.from << (e.directed ? " -> " : " -- ") << e.to << '\n';
    }
    return out.str();
}

void write_edge_list_file(const std::string& path, const Pdag& g,
                          const std::vector<std::string>& header) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << format_edge_list(g, header);
}

}  // namespace pdag
