#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pardual/graph.hpp"

namespace pardual {

// Rotation system for a Graph: rotation[v] lists the indices of the edges
// incident to v in cyclic order. Each edge index appears exactly once at
// each of its two endpoints.
struct EmbeddingSpec {
    std::vector<std::vector<int>> rotation;
};

EmbeddingSpec parse_embedding_spec(std::string_view text);
std::string format_embedding_spec(const EmbeddingSpec& spec);

// Cellular embedding on an orientable surface, encoded by dart permutations.
// Darts 2i and 2i+1 are the two half-edges of edge i (2i at the smaller
// endpoint when built from a rotation system); alpha(d) = d XOR 1 pairs
// them. sigma is the rotation at each vertex (orbits of sigma = vertices).
// Faces are orbits of d -> sigma(alpha(d)); that convention is fixed
// project-wide.
//
// The underlying graph of a map may be non-simple (partial duals create
// loops and parallel edges); loops and parallels live naturally in the dart
// encoding and are never converted back to Graph.
struct CombinatorialMap {
    std::vector<int> sigma;
    std::vector<int> edge_label; // map edge i -> edge index of the source Graph
    int lone_vertices = 0;       // dartless vertices (only K_1 for connected input)

    int edge_count() const { return static_cast<int>(sigma.size()) / 2; }
    int dart_count() const { return static_cast<int>(sigma.size()); }
    static int alpha(int dart) { return dart ^ 1; }

    bool operator==(const CombinatorialMap& other) const {
        return sigma == other.sigma && edge_label == other.edge_label &&
               lone_vertices == other.lone_vertices;
    }
};

struct MapProfile {
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int genus = 0;

    bool operator==(const MapProfile&) const = default;
};

// Builds the map realizing `rot` on g. Throws std::invalid_argument on a
// malformed rotation (missing or duplicated half-edge) and std::domain_error
// if g is disconnected.
CombinatorialMap map_from_rotation(const Graph& g, const EmbeddingSpec& rot);

// A genus-0 map of a connected planar graph (deterministic; derived from the
// planarity algorithm's combinatorial output). Throws std::domain_error on
// non-planar or disconnected input.
CombinatorialMap planar_embedding(const Graph& g);

int vertex_count(const CombinatorialMap& m);
int face_count(const CombinatorialMap& m);
std::vector<std::vector<int>> faces(const CombinatorialMap& m);
std::vector<std::vector<int>> map_vertices(const CombinatorialMap& m);
bool map_connected(const CombinatorialMap& m);

// (2 - v + e - f) / 2; asserts Euler parity and nonnegativity (a violation
// is an internal bug, reported as std::logic_error).
int genus(const CombinatorialMap& m);
MapProfile profile(const CombinatorialMap& m);

CombinatorialMap geometric_dual(const CombinatorialMap& m);

// Reversed orientation (every rotation reversed); genus is preserved.
CombinatorialMap mirror(const CombinatorialMap& m);

// Partial dual over the edge subset given as a bitmask over the map's edge
// indices. Satisfies: A = 0 is the dart-level identity, A = all equals
// geometric_dual exactly, composing over A then B equals composing over the
// symmetric difference, and edge count and connectivity are preserved.
CombinatorialMap partial_dual(const CombinatorialMap& m, std::uint64_t edge_mask);
CombinatorialMap partial_dual(const CombinatorialMap& m, const EdgeSubset& a);

// Genus of the partial dual without materializing the map.
int partial_dual_genus(const CombinatorialMap& m, std::uint64_t edge_mask);

struct PartialDualScan {
    int max_genus = 0;
    std::uint64_t witness = 0;                            // lexicographically least maximizer
    std::vector<std::pair<int, std::uint64_t>> histogram; // genus -> count, ascending
};

// Full 2^e sweep; requires e <= max_edges (capacity_error otherwise) and a
// connected map.
PartialDualScan enumerate_partial_dual_genus(const CombinatorialMap& m, int max_edges = 22);

// Up to `want` distinct genus-0 maps of g (distinct as labeled rotation
// systems). Always contains the canonical embedding; the mirror and seeded
// relabeling/perturbation candidates fill the rest. Many graphs admit fewer
// distinct planar rotation systems than requested (cycles have exactly one;
// 3-connected planar graphs exactly two), so the result may be shorter.
std::vector<CombinatorialMap> distinct_planar_embeddings(const Graph& g, int want,
                                                         std::uint64_t seed);

// Rotation system of a map whose underlying graph is g (inverse of
// map_from_rotation for maps built from g).
EmbeddingSpec rotation_of(const Graph& g, const CombinatorialMap& m);

} // namespace pardual
