#include "pardual/families.hpp"

#include <stdexcept>

#include "pardual/map.hpp"

namespace pardual {

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path: order must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::make(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph::make(n, std::move(edges));
}

Graph make_star(int n) {
    if (n < 2) throw std::invalid_argument("star: order must be >= 2");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::make(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: order must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::make(n, std::move(edges));
}

Graph make_empty(int n) {
    if (n < 1) throw std::invalid_argument("empty: order must be >= 1");
    return Graph::make(n, {});
}

Graph make_basic(const std::string& tag, int n) {
    if (tag == "path") return make_path(n);
    if (tag == "cycle") return make_cycle(n);
    if (tag == "star") return make_star(n);
    if (tag == "complete") return make_complete(n);
    if (tag == "empty") return make_empty(n);
    throw std::invalid_argument("make_basic: unknown family '" + tag + "'");
}

Graph identify_vertices(const std::vector<std::pair<Graph, int>>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("identify_vertices: need k >= 2 parts");
    int total = 1;
    for (const auto& [g, v] : parts) {
        if (!is_connected(g))
            throw std::domain_error("identify_vertices: parts must be connected");
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("identify_vertices: chosen vertex out of range");
        total += g.n() - 1;
    }
    std::vector<Edge> edges;
    int offset = 1;
    for (const auto& [g, pick] : parts) {
        // labels: merged vertex -> 0, others packed in original order
        auto relabel = [&](int u) { return u == pick ? 0 : offset + u - (u > pick ? 1 : 0); };
        for (const auto& [u, v] : g.edges()) edges.emplace_back(relabel(u), relabel(v));
        offset += g.n() - 1;
    }
    return Graph::make(total, std::move(edges));
}

Graph cut_join(const Graph& g1, const Graph& g2, const std::vector<std::pair<int, int>>& cross) {
    if (cross.empty() || cross.size() > 2)
        throw std::invalid_argument("cut_join: need 1 or 2 cross edges");
    if (!is_connected(g1) || !is_connected(g2))
        throw std::domain_error("cut_join: parts must be connected");
    if (cross.size() == 2 && cross[0] == cross[1])
        throw std::invalid_argument("cut_join: duplicate cross edge");
    std::vector<Edge> edges = g1.edges();
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(g1.n() + u, g1.n() + v);
    for (const auto& [u, v] : cross) {
        if (u < 0 || u >= g1.n() || v < 0 || v >= g2.n())
            throw std::invalid_argument("cut_join: cross endpoint out of range");
        edges.emplace_back(u, g1.n() + v);
    }
    return Graph::make(g1.n() + g2.n(), std::move(edges));
}

Graph fig1_G() {
    return cut_join(make_complete(4), make_complete(4), {{2, 2}, {3, 3}});
}

Graph fig1_Gprime() {
    return cut_join(make_complete(4), make_complete(4), {{2, 2}});
}

Graph tensor_kt(const Graph& h, int t) {
    if (t != 2 && t != 3) throw std::invalid_argument("tensor: t must be 2 or 3");
    if (!is_connected(h)) throw std::domain_error("tensor: base must be connected");
    int max_deg = 0;
    for (int v = 0; v < h.n(); ++v) max_deg = std::max(max_deg, h.degree(v));
    if (max_deg > 3) throw std::invalid_argument("tensor: base must be subcubic");
    if (t < max_deg) throw std::invalid_argument("tensor: t below the maximum degree");
    std::vector<std::vector<int>> rot;
    if (!planar_rotation(h, rot)) throw std::invalid_argument("tensor: base must be planar");

    std::vector<Edge> edges;
    for (int v = 0; v < h.n(); ++v)
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b) edges.emplace_back(t * v + a, t * v + b);
    // attachment offset of edge e at endpoint v = position of e in the
    // planar rotation at v (realizes the planarity of the expansion)
    std::vector<std::pair<int, int>> attach(static_cast<std::size_t>(h.m()), {-1, -1});
    for (int v = 0; v < h.n(); ++v)
        for (std::size_t pos = 0; pos < rot[v].size(); ++pos) {
            int e = rot[v][pos];
            if (h.edge(e).first == v) attach[e].first = static_cast<int>(pos);
            else attach[e].second = static_cast<int>(pos);
        }
    for (int e = 0; e < h.m(); ++e) {
        auto [u, v] = h.edge(e);
        edges.emplace_back(t * u + attach[e].first, t * v + attach[e].second);
    }
    Graph g = Graph::make(t * h.n(), std::move(edges));
    if (g.m() != t * (t - 1) / 2 * h.n() + h.m())
        throw std::logic_error("tensor: edge count mismatch");
    if (!is_planar(g)) throw std::logic_error("tensor: expansion came out non-planar");
    return g;
}

namespace {

Graph prism_graph(int k) {
    // C_k x K_2: top cycle 0..k-1, bottom cycle k..2k-1, vertical matching
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(i, (i + 1) % k);
        edges.emplace_back(k + i, k + (i + 1) % k);
        edges.emplace_back(i, k + i);
    }
    return Graph::make(2 * k, std::move(edges));
}

Graph cube_graph() {
    std::vector<Edge> edges;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) edges.emplace_back(v, v ^ (1 << b));
    return Graph::make(8, std::move(edges));
}

Graph dodecahedron_graph() {
    // LCF notation [10, 7, 4, -4, -7, 10, -4, 7, -7, 4]^2 over a 20-cycle
    static const int lcf[10] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
    std::vector<Edge> edges;
    for (int i = 0; i < 20; ++i) edges.emplace_back(i, (i + 1) % 20);
    for (int i = 0; i < 20; ++i) {
        int j = ((i + lcf[i % 10]) % 20 + 20) % 20;
        if (i < j) edges.emplace_back(i, j);
    }
    return Graph::make(20, std::move(edges));
}

void validate_catalog(const std::string& name, const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 3) throw std::logic_error("catalog " + name + ": not cubic");
    if (!is_planar(g)) throw std::logic_error("catalog " + name + ": not planar");
    if (edge_connectivity(g) != 3) throw std::logic_error("catalog " + name + ": lambda != 3");
}

} // namespace

std::vector<std::pair<std::string, Graph>> catalog_cubic_3ec_planar() {
    std::vector<std::pair<std::string, Graph>> out;
    out.emplace_back("k4", make_complete(4));
    out.emplace_back("prism", prism_graph(3));
    out.emplace_back("cube", cube_graph());
    out.emplace_back("pentaprism", prism_graph(5));
    out.emplace_back("dodecahedron", dodecahedron_graph());
    for (const auto& [name, g] : out) validate_catalog(name, g);
    return out;
}

Graph catalog_graph(const std::string& name) {
    for (auto& [key, g] : catalog_cubic_3ec_planar())
        if (key == name) return g;
    throw std::invalid_argument("catalog: unknown graph '" + name + "'");
}

} // namespace pardual
