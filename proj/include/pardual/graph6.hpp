#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pardual/graph.hpp"

namespace pardual {

// graph6 text codec (size byte chr(n+63) for n <= 62, then the upper
// triangle column-major in 6-bit groups, each offset by 63). The optional
// ">>graph6<<" header is tolerated on parse. Strict: bad bytes, truncation,
// trailing characters and nonzero padding all raise parse_error with the
// byte offset.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// One graph per line; blank lines skipped; header stripped.
std::vector<Graph> parse_graph6_lines(std::string_view text);

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

} // namespace pardual
