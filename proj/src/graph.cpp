#include "pardual/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pardual {

Graph Graph::make(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    if (n > 62) throw std::invalid_argument("graph: vertex count above 62 is unsupported");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
        if (u < 0 || v >= n) throw std::invalid_argument("graph: endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: parallel edge");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges_) {
        g.adj_[u] |= std::uint64_t{1} << v;
        g.adj_[v] |= std::uint64_t{1} << u;
    }
    return g;
}

int Graph::degree(int v) const { return __builtin_popcountll(adj_[v]); }

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> EdgeSubset::indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
}

EdgeSubset make_subset(const Graph& g, std::uint64_t bits) {
    if (g.m() > 64) throw capacity_error("edge subsets limited to hosts with at most 64 edges");
    if (g.m() < 64 && (bits >> g.m()) != 0)
        throw std::invalid_argument("edge subset: bit set beyond edge count");
    return EdgeSubset{&g, bits};
}

EdgeSubset subset_from_indices(const Graph& g, const std::vector<int>& idx) {
    std::uint64_t bits = 0;
    for (int i : idx) {
        if (i < 0 || i >= g.m()) throw std::invalid_argument("edge subset: index out of range");
        bits |= std::uint64_t{1} << i;
    }
    return make_subset(g, bits);
}

bool subset_lex_less(std::uint64_t a, std::uint64_t b) {
    // Sorted index lists compare lexicographically; common prefix cancels.
    while (a && b) {
        int ia = __builtin_ctzll(a), ib = __builtin_ctzll(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0; // proper prefix precedes
}

void require_host(const Graph& g, const EdgeSubset& a) {
    if (a.host != &g) throw std::invalid_argument("edge subset hosted on a different graph");
}

namespace {

// Component id per vertex via bitmask BFS; returns component count.
int label_components(const std::vector<std::uint64_t>& adj, int n, std::vector<int>& comp) {
    comp.assign(static_cast<std::size_t>(n), -1);
    int count = 0;
    std::uint64_t unseen = (n == 64) ? ~std::uint64_t{0}
                                     : ((std::uint64_t{1} << n) - 1);
    while (unseen) {
        int start = __builtin_ctzll(unseen);
        std::uint64_t frontier = std::uint64_t{1} << start;
        std::uint64_t reached = frontier;
        while (frontier) {
            std::uint64_t next = 0;
            while (frontier) {
                int v = __builtin_ctzll(frontier);
                frontier &= frontier - 1;
                next |= adj[v];
            }
            frontier = next & ~reached;
            reached |= frontier;
        }
        for (std::uint64_t r = reached; r; r &= r - 1) comp[__builtin_ctzll(r)] = count;
        unseen &= ~reached;
        ++count;
    }
    return count;
}

} // namespace

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp;
    int c = label_components(g.adj(), g.n(), comp);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(c));
    for (int v = 0; v < g.n(); ++v) out[comp[v]].push_back(v);
    return out;
}

int component_count(const Graph& g) {
    std::vector<int> comp;
    return label_components(g.adj(), g.n(), comp);
}

bool is_connected(const Graph& g) { return g.n() == 0 || component_count(g) == 1; }

int betti(const Graph& g) { return g.m() - g.n() + component_count(g); }

DegreeCounts degree_counts(const Graph& g) {
    DegreeCounts dc;
    dc.min_degree = g.n() > 0 ? g.n() : 0;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d == 1) ++dc.n1;
        if (d == 2) ++dc.n2;
        dc.min_degree = std::min(dc.min_degree, d);
    }
    return dc;
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph::make(g.n(), std::move(edges));
}

Graph spanning_subgraph_minus(const Graph& g, const EdgeSubset& a) {
    require_host(g, a);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.m() - a.count()));
    for (int i = 0; i < g.m(); ++i)
        if (!a.contains(i)) edges.push_back(g.edge(i));
    return Graph::make(g.n(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<int> relabel(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.n())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        relabel[vs[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (relabel[u] >= 0 && relabel[v] >= 0)
            edges.emplace_back(relabel[u], relabel[v]);
    return Graph::make(static_cast<int>(vs.size()), std::move(edges));
}

} // namespace pardual
