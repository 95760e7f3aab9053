#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/properties.hpp>

#include "pardual/graph.hpp"

namespace pardual {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(static_cast<std::size_t>(g.n()));
    int idx = 0;
    for (const auto& [u, v] : g.edges())
        boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), idx++, bg);
    return bg;
}

bool euler_reject(const Graph& g) {
    // |E| <= 3n - 6 is necessary for n >= 3; cheap pre-filter only.
    return g.n() >= 3 && g.m() > 3 * g.n() - 6;
}

} // namespace

bool is_planar(const Graph& g) {
    if (g.n() <= 4) return true;
    if (euler_reject(g)) return false;
    BoostGraph bg = to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

bool planar_rotation(const Graph& g, std::vector<std::vector<int>>& out) {
    out.clear();
    if (euler_reject(g)) return false;
    BoostGraph bg = to_boost(g);
    using EmbeddingStorage =
        std::vector<std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>>;
    EmbeddingStorage storage(boost::num_vertices(bg));
    auto embedding = storage.begin();
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding);
    if (!planar) return false;
    auto edge_index = boost::get(boost::edge_index, bg);
    out.resize(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        out[v].reserve(storage[v].size());
        for (const auto& e : storage[v]) out[v].push_back(boost::get(edge_index, e));
    }
    return true;
}

} // namespace pardual
