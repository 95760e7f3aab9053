#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pardual/graph.hpp"
#include "pardual/report.hpp"

namespace pardual {

struct SubsetOptResult {
    int value = 0;
    EdgeSubset witness;                 // minimum cardinality, then lex-least
    std::uint64_t subsets_visited = 0;  // complete subsets evaluated
    std::uint64_t subsets_pruned = 0;   // subtree cutoffs taken by the bound
};

// 2 c(G - A) - |A| - 1.
int y_value(const Graph& g, const EdgeSubset& a);

// c(G - A) + b(G - A) - |A| - 1, where b counts components of odd Betti
// number.
int nebesky_value(const Graph& g, const EdgeSubset& a);

// y_G = max over A of y_value. Branch and bound over the canonical edge
// order (exclude-then-include); the witness is the minimum-cardinality,
// lexicographically least maximizer. Capacity: |E| <= max_edges.
SubsetOptResult y_max(const Graph& g, int max_edges = 30);

// xi(G) via the edge-subset characterization (max over A of nebesky_value).
SubsetOptResult nebesky_deficiency(const Graph& g, int max_edges = 30);

// n - y_G for connected planar graphs; std::domain_error otherwise.
int max_partial_dual_genus(const Graph& g, int max_edges = 30);

// G_A: one vertex per component of G - A, simple, loops and parallels
// dropped. origin_edges[i] lists the host edge indices that collapsed onto
// quotient edge i; component_vertices[j] lists the host vertices of the
// component behind quotient vertex j.
struct QuotientGraph {
    Graph graph;
    std::vector<std::vector<int>> origin_edges;
    std::vector<std::vector<int>> component_vertices;
};

QuotientGraph quotient_graph(const Graph& g, const EdgeSubset& a);

// Structural properties of an optimal witness: (i) the cardinality
// identities, (ii) components vertex-induced with y_F = 1, (iii) the
// inter-component edge-cut sizes for a smallest witness. All three hold for
// every optimizer-produced witness; a false clause signals a bug upstream.
struct StructureReport {
    bool clause_i = false;
    bool clause_ii = false;
    bool clause_iii = false;
    bool ksubsets_exhaustive = true; // false when c(G-A) > 10: pairwise checks only
    std::vector<std::string> violations;

    bool pass() const { return clause_i && clause_ii && clause_iii; }
};

StructureReport check_optimal_structure(const Graph& g, const SubsetOptResult& result);

// y_G against the lambda-branch bound evaluated at c(G - witness); requires
// the smallest witness and y_G >= 2 (otherwise not-applicable).
BoundCheck lemma25_bound_check(const Graph& g, const SubsetOptResult& result);

} // namespace pardual
