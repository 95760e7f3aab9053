#pragma once

#include <string>
#include <vector>

#include "pardual/graph.hpp"

namespace pardual {

// Named constructors for the graph families the library works with. Vertex
// labelings are fixed so witnesses stay stable across runs.

// tag: "path" | "cycle" | "star" | "complete" | "empty". Paths are labeled
// along the path, cycles around the cycle, stars with the center at 0.
Graph make_basic(const std::string& tag, int n);

Graph make_path(int n);     // n >= 1
Graph make_cycle(int n);    // n >= 3
Graph make_star(int n);     // n >= 2, center 0
Graph make_complete(int n); // n >= 1
Graph make_empty(int n);    // n >= 1

// Identifies one chosen vertex of each of k >= 2 disjoint connected graphs
// into a single vertex, labeled 0; the remaining vertices follow in part
// order, each part keeping its internal order.
Graph identify_vertices(const std::vector<std::pair<Graph, int>>& parts);

// Disjoint union of g1 (labels kept) and g2 (shifted by g1.n()) plus 1 or 2
// cross edges, given as (vertex of g1, vertex of g2) pairs. The cross edges
// form a minimal edge cut separating the parts.
Graph cut_join(const Graph& g1, const Graph& g2, const std::vector<std::pair<int, int>>& cross);

// Two K_4s joined by two independent cross edges, and the same with one of
// them removed. Reference pair for the optimal-witness structure checks.
Graph fig1_G();
Graph fig1_Gprime();

// H (x) K_t: every vertex v of a subcubic planar connected H becomes a K_t
// block (vertices t*v .. t*v+t-1); each H-edge at v attaches to the block
// vertex whose offset is the edge's position in a fixed planar rotation of
// H, so the result is planar by construction (and asserted). t in {2,3},
// t >= max degree of H.
Graph tensor_kt(const Graph& h, int t);

// Built-in 3-edge-connected cubic planar bases; each entry is verified
// cubic, planar and lambda = 3 at construction.
std::vector<std::pair<std::string, Graph>> catalog_cubic_3ec_planar();
Graph catalog_graph(const std::string& name);

} // namespace pardual
