#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "monopole/divisor.hpp"
#include "monopole/families.hpp"
#include "monopole/graph.hpp"

namespace monopole {

// Text format: first non-comment line is n, then one "u v" line per edge,
// 0-based. '#' starts a comment. Loops and duplicates are rejected.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

// "complete:4", "wheel:4", "bridged:triangle,c4", "unicyclic:4,0,2", ...
// Random families consume the seed.
GeneratedGraph graph_from_spec(const std::string& spec, std::uint64_t seed);

// Dense "a,b,c" or sparse "v:c,v:c" divisor text. The vertex name "P"
// resolves to p_alias when one is available.
Divisor parse_divisor(const std::string& text, int n, std::optional<int> p_alias);

// Vertex index, or "P" for the generator's distinguished vertex.
int parse_vertex(const std::string& text, int n, std::optional<int> p_alias);

}  // namespace monopole
