#include "pardual/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace pardual {

void stream_connected_masks(int n, std::uint64_t lo, std::uint64_t hi,
                            const std::function<bool(const Graph&)>& fn) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("stream_connected_masks: n must be in 1..8");
    std::vector<Edge> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v); // canonical graph6 bit order
    int np = static_cast<int>(pairs.size());
    hi = std::min(hi, std::uint64_t{1} << np);
    std::vector<Edge> edges;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        // cheap connectivity screen on adjacency bitmaps before building
        std::uint64_t adj[8] = {0};
        for (std::uint64_t b = mask; b; b &= b - 1) {
            int i = __builtin_ctzll(b);
            adj[pairs[i].first] |= std::uint64_t{1} << pairs[i].second;
            adj[pairs[i].second] |= std::uint64_t{1} << pairs[i].first;
        }
        std::uint64_t reached = 1, frontier = 1;
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
        if (reached != (std::uint64_t{1} << n) - 1) continue;
        edges.clear();
        for (std::uint64_t b = mask; b; b &= b - 1) edges.push_back(pairs[__builtin_ctzll(b)]);
        if (!fn(Graph::make(n, edges))) return;
    }
}

void for_each_connected_graph(int n, const std::function<bool(const Graph&)>& fn) {
    int np = n * (n - 1) / 2;
    stream_connected_masks(n, 0, std::uint64_t{1} << np, fn);
}

std::uint64_t count_connected_graphs(int n) {
    std::uint64_t count = 0;
    for_each_connected_graph(n, [&](const Graph&) {
        ++count;
        return true;
    });
    return count;
}

Graph random_connected_graph(int n, int m, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("random graph: n must be >= 1");
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_m)
        throw std::invalid_argument("random graph: m out of [n-1, n(n-1)/2]");

    std::vector<Edge> edges;
    std::vector<char> present(static_cast<std::size_t>(n) * n, 0);
    auto add = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        present[static_cast<std::size_t>(u) * n + v] = 1;
        edges.emplace_back(u, v);
    };

    if (n == 1) return Graph::make(1, {});
    if (n == 2) {
        add(0, 1);
    } else {
        // uniform random labeled tree via a Pruefer sequence
        std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
        for (int& x : pruefer) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        std::vector<int> degree(static_cast<std::size_t>(n), 1);
        for (int x : pruefer) ++degree[x];
        std::vector<int> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) leaves.push_back(v);
        std::make_heap(leaves.begin(), leaves.end(), std::greater<>{});
        for (int x : pruefer) {
            std::pop_heap(leaves.begin(), leaves.end(), std::greater<>{});
            int leaf = leaves.back();
            leaves.pop_back();
            add(leaf, x);
            if (--degree[x] == 1) {
                leaves.push_back(x);
                std::push_heap(leaves.begin(), leaves.end(), std::greater<>{});
            }
        }
        std::pop_heap(leaves.begin(), leaves.end(), std::greater<>{});
        int a = leaves.back();
        leaves.pop_back();
        add(a, leaves.front());
    }

    while (static_cast<int>(edges.size()) < m) {
        int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (present[static_cast<std::size_t>(u) * n + v]) continue;
        add(u, v);
    }
    return Graph::make(n, std::move(edges));
}

Graph random_connected_planar_graph(int n, int m_lo, int m_hi, std::mt19937_64& rng) {
    m_hi = std::min(m_hi, n >= 3 ? 3 * n - 6 : n * (n - 1) / 2);
    m_lo = std::max(m_lo, n - 1);
    if (m_lo > m_hi)
        throw std::invalid_argument("random planar graph: empty edge-count range");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        int m = m_lo + static_cast<int>(rng() % static_cast<std::uint64_t>(m_hi - m_lo + 1));
        Graph g = random_connected_graph(n, m, rng);
        if (is_planar(g)) return g;
    }
    throw std::runtime_error("random planar graph: rejection sampling failed");
}

} // namespace pardual
