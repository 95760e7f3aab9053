#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pardual/errors.hpp"

namespace pardual {

using Edge = std::pair<int, int>; // (u, v) with u < v

// Simple labeled graph on vertices 0..n-1. Edges are stored sorted
// lexicographically; that order is canonical across the whole library:
// bit i of any EdgeSubset refers to edges()[i].
class Graph {
public:
    Graph() = default;

    // Validates: endpoints in range, no loops, no duplicates. Edges may be
    // given in any order and as (u,v) or (v,u); they are normalized.
    static Graph make(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }

    // Adjacency as one 64-bit row per vertex (requires n <= 62, which the
    // graph6 size cap guarantees for all parsed inputs).
    const std::vector<std::uint64_t>& adj() const { return adj_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const;

    // Index of edge (u,v) in canonical order, or -1.
    int edge_index(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
};

// Bitmask over the host graph's canonical edge list. Host identity is by
// address; operations taking (graph, subset) pairs verify it.
struct EdgeSubset {
    const Graph* host = nullptr;
    std::uint64_t bits = 0;

    int count() const { return __builtin_popcountll(bits); }
    bool contains(int i) const { return (bits >> i) & 1; }
    std::vector<int> indices() const;
};

EdgeSubset make_subset(const Graph& g, std::uint64_t bits);
EdgeSubset subset_from_indices(const Graph& g, const std::vector<int>& idx);

// True iff `a` (as a sorted index list) precedes `b` lexicographically.
// Used as the canonical tie-break on witnesses throughout.
bool subset_lex_less(std::uint64_t a, std::uint64_t b);

void require_host(const Graph& g, const EdgeSubset& a);

// Partition of V(host) into classes, each inducing a complete subgraph.
struct CliquePartition {
    const Graph* host = nullptr;
    std::vector<std::vector<int>> classes;
};

// ---- basic invariants ----------------------------------------------------

// Connected components as sorted vertex sets, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

// Cycle rank |E| - |V| + c(G).
int betti(const Graph& g);

struct DegreeCounts {
    int n1 = 0;         // vertices of degree 1
    int n2 = 0;         // vertices of degree 2
    int min_degree = 0; // delta(G)
};
DegreeCounts degree_counts(const Graph& g);

Graph complement(const Graph& g);

// Edge deletion only; the vertex set is kept.
Graph spanning_subgraph_minus(const Graph& g, const EdgeSubset& a);

// Induced subgraph on the given (sorted or unsorted) vertex set, relabeled
// 0..k-1 in ascending original order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

struct Coloring {
    int chi = 0;
    std::vector<int> colors; // colors[v] in 0..chi-1
};

// Exact chromatic number. Guaranteed for n <= 16 (subset DP); larger inputs
// are attempted by branch and bound with a node budget and rejected with
// capacity_error if the budget runs out. Never returns a heuristic answer.
Coloring chromatic_number(const Graph& g);

// Color classes of an optimal coloring of complement(g): a minimum partition
// of V(g) into cliques. Class count equals chi(complement(g)).
CliquePartition clique_partition(const Graph& g);

// lambda(G): size of a minimum edge cut; 0 for disconnected graphs and K_1.
int edge_connectivity(const Graph& g);
// Same, but stops early once the answer is known to be >= cap (returns cap).
int edge_connectivity_at_most(const Graph& g, int cap);

// Exact planarity (Boyer-Myrvold, with the Euler edge-count rejection
// pre-filter in front).
bool is_planar(const Graph& g);

// A combinatorial planar embedding: per vertex, the incident edge indices in
// cyclic order. Empty optional iff the graph is not planar.
bool planar_rotation(const Graph& g, std::vector<std::vector<int>>& out);

} // namespace pardual
