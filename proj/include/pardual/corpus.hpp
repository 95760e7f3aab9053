#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "pardual/graph.hpp"

namespace pardual {

// Streams every labeled connected graph on exactly n vertices, in ascending
// order of the edge-set bitmask over the canonical pair order. Return false
// from the callback to stop. n <= 8 (the n = 7 stream already has ~1.87M
// graphs; 8 is the hard cap).
void for_each_connected_graph(int n, const std::function<bool(const Graph&)>& fn);

// Same stream restricted to bitmask values in [lo, hi); lets scans shard the
// mask space into fixed blocks.
void stream_connected_masks(int n, std::uint64_t lo, std::uint64_t hi,
                            const std::function<bool(const Graph&)>& fn);

// Number of labeled connected graphs on n vertices (n <= 8), by streaming.
std::uint64_t count_connected_graphs(int n);

// Random connected graph: a uniform random labeled tree (Pruefer) plus
// `extra` distinct non-tree edges chosen uniformly. m = n - 1 + extra.
Graph random_connected_graph(int n, int m, std::mt19937_64& rng);

// Random connected planar graph with m in [m_lo, m_hi], by rejection.
Graph random_connected_planar_graph(int n, int m_lo, int m_hi, std::mt19937_64& rng);

} // namespace pardual
