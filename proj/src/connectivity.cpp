#include <algorithm>
#include <queue>
#include <vector>

#include "pardual/graph.hpp"

namespace pardual {

namespace {

// Unit-capacity max flow (BFS augmenting paths). Each undirected edge is a
// pair of arcs with one unit each; flow value equals the minimum edge cut
// separating s from t. Stops once `cap` is reached.
struct UnitFlow {
    int n;
    std::vector<int> head, to, next_arc, cap;

    explicit UnitFlow(const Graph& g) : n(g.n()), head(static_cast<std::size_t>(g.n()), -1) {
        to.reserve(static_cast<std::size_t>(2 * g.m()));
        for (const auto& [u, v] : g.edges()) {
            add(u, v);
            add(v, u);
        }
    }

    void add(int u, int v) {
        to.push_back(v);
        cap.push_back(1);
        next_arc.push_back(head[u]);
        head[u] = static_cast<int>(to.size()) - 1;
    }

    int run(int s, int t, int limit) {
        std::vector<int> orig_cap = cap;
        int flow = 0;
        std::vector<int> parent_arc(static_cast<std::size_t>(n));
        while (flow < limit) {
            std::fill(parent_arc.begin(), parent_arc.end(), -1);
            std::queue<int> q;
            q.push(s);
            parent_arc[s] = -2;
            while (!q.empty() && parent_arc[t] == -1) {
                int u = q.front();
                q.pop();
                for (int a = head[u]; a != -1; a = next_arc[a]) {
                    if (cap[a] > 0 && parent_arc[to[a]] == -1) {
                        parent_arc[to[a]] = a;
                        q.push(to[a]);
                    }
                }
            }
            if (parent_arc[t] == -1) break;
            for (int v = t; v != s;) {
                int a = parent_arc[v];
                --cap[a];
                ++cap[a ^ 1]; // arcs added in pairs
                v = to[a ^ 1];
            }
            ++flow;
        }
        cap = std::move(orig_cap);
        return flow;
    }
};

} // namespace

int edge_connectivity_at_most(const Graph& g, int limit) {
    if (g.n() <= 1) return 0;
    if (!is_connected(g)) return 0;
    UnitFlow net(g);
    int lambda = std::min(limit, g.n() - 1);
    // lambda(G) = min over t != s of maxflow(s, t) for any fixed s
    for (int t = 1; t < g.n() && lambda > 0; ++t)
        lambda = std::min(lambda, net.run(0, t, lambda));
    return lambda;
}

int edge_connectivity(const Graph& g) {
    return edge_connectivity_at_most(g, g.m() + 1);
}

} // namespace pardual
