#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stab/autgroup.hpp"
#include "stab/graph.hpp"

namespace stab {

// graph6: one printable ASCII line per graph (bytes 63..126), order header
// followed by the upper triangle packed column-major into 6-bit groups.
// Strict: exact length, zero padding bits, no long (>262143 vertex) form.
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// Canonical graph6 string: equal for two graphs iff they are isomorphic.
std::string emit_graph6_canonical(const Graph& g, const SearchLimits& limits = {});

// Edge list: whitespace-separated tokens, first the order n, then pairs of
// endpoints.  Duplicate edges collapse; loops are rejected.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// Reads a single graph from `path`.  format_hint: "g6", "el" or "auto"
// (extension .g6/.el, otherwise try graph6 first then edge list).
Graph read_graph_file(const std::string& path, const std::string& format_hint = "auto");

// Built-in families by name: "petersen", "cube", "q<d>", "k<m>", "c<m>",
// "p<m>", "e<m>", "k<a>,<b>".  Unknown names yield nullopt.
std::optional<Graph> named_graph(const std::string& name);

// CLI-facing resolution: an existing file wins, then a built-in name, then a
// literal graph6 string; anything else is a parse_error.
Graph resolve_graph_arg(const std::string& arg, const std::string& format_hint = "auto");

std::vector<std::string> read_lines(const std::string& path);

}  // namespace stab
