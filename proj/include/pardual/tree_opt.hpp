#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pardual/graph.hpp"

namespace pardual {

struct SpanningTree {
    const Graph* host = nullptr;
    EdgeSubset tree_edges; // exactly n-1 bits, acyclic, spanning
};

struct TreeOptResult {
    int value = 0;
    SpanningTree witness;               // achieves value; lex-least among optima
    std::uint64_t trees_examined = 0;
};

// Visits every spanning tree exactly once, in ascending lexicographic order
// of the sorted edge-index list (include-first backtracking over the
// canonical edge order, with forced inclusion of bridges). The callback
// returns false to stop the enumeration. Throws std::domain_error on
// disconnected input.
void for_each_spanning_tree(const Graph& g, const std::function<bool(std::uint64_t)>& fn);

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g);

// Decay number x_G = min over spanning trees T of c(G - E(T)). Stops early
// at the global minimum 1; prunes subtrees whose co-graph component count
// already meets the incumbent.
TreeOptResult decay_number(const Graph& g);

// xi(G) = min over spanning trees T of the number of components of G - E(T)
// with an odd number of edges. Stops early at the parity floor betti(G) mod 2.
TreeOptResult xuong_deficiency(const Graph& g);

// (betti - xi) / 2; integral and nonnegative for every connected graph.
int max_genus(const Graph& g);

// xi(G) <= 1, equivalently max_genus == floor(betti / 2).
bool is_upper_embeddable(const Graph& g);

} // namespace pardual
