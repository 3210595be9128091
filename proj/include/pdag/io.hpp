#ifndef PDAG_IO_HPP
#define PDAG_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pdag/graph.hpp"

namespace pdag {

// Edge-list text format:
//
//   # comment lines anywhere
//   n
//   u -> v      arc
//   u -- v      undirected edge
//
// Vertices are 0-based. Duplicate pairs, self-loops and out-of-range ids are
// rejected with a ParseError carrying the 1-based line number.
Pdag parse_edge_list(std::istream& in);
Pdag parse_edge_list(std::string_view text);
Pdag read_edge_list_file(const std::string& path);

// Canonical form: optional `# ` header lines, the vertex count, then one edge
// per line ordered by (min endpoint, max endpoint). Removed vertices are not
// representable and make this throw UsageError.
std::string format_edge_list(const Pdag& g, const std::vector<std::string>& header = {});
void write_edge_list_file(const std::string& path, const Pdag& g,
                          const std::vector<std::string>& header = {});

}  // namespace pdag

#endif  // PDAG_IO_HPP
