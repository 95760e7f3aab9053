#include <algorithm>
#include <cstdint>
#include <vector>

#include "pardual/graph.hpp"

namespace pardual {

namespace {

using Mask = std::uint64_t;

struct BitGraph {
    int n;
    std::vector<Mask> adj;
};

BitGraph bitgraph(const Graph& g) {
    return BitGraph{g.n(), g.adj()};
}

// Greedy clique through descending-degree order; a cheap lower bound.
int greedy_clique(const BitGraph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return __builtin_popcountll(g.adj[a]) > __builtin_popcountll(g.adj[b]);
    });
    int best = 0;
    for (int start : order) {
        Mask clique = Mask{1} << start;
        Mask cand = g.adj[start];
        while (cand) {
            int v = __builtin_ctzll(cand);
            clique |= Mask{1} << v;
            cand &= g.adj[v];
        }
        best = std::max(best, __builtin_popcountll(clique));
    }
    return best;
}

// DSATUR greedy coloring; returns the number of colors used.
int dsatur_greedy(const BitGraph& g, std::vector<int>& colors) {
    colors.assign(static_cast<std::size_t>(g.n), -1);
    std::vector<Mask> neighbor_colors(static_cast<std::size_t>(g.n), 0);
    int used = 0;
    for (int step = 0; step < g.n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (colors[v] >= 0) continue;
            int sat = __builtin_popcountll(neighbor_colors[v]);
            int deg = __builtin_popcountll(g.adj[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int c = __builtin_ctzll(~neighbor_colors[pick]);
        colors[pick] = c;
        used = std::max(used, c + 1);
        for (Mask nb = g.adj[pick]; nb; nb &= nb - 1)
            neighbor_colors[__builtin_ctzll(nb)] |= Mask{1} << c;
    }
    return used;
}

// ---- subset DP (n <= 16) --------------------------------------------------
//
// chi[S] = 1 + min over maximal independent sets I of G[S] that contain the
// lowest vertex of S of chi[S \ I]. Restricting to maximal sets containing
// the lowest vertex is the standard sound reduction.

struct SubsetDp {
    const BitGraph& g;
    std::vector<int> memo;

    explicit SubsetDp(const BitGraph& bg)
        : g(bg), memo(std::size_t{1} << bg.n, -1) {}

    template <typename Fn>
    void for_each_class(Mask s, Fn&& fn) {
        int v0 = __builtin_ctzll(s);
        Mask cand = s & ~g.adj[v0] & ~(Mask{1} << v0);
        enumerate(Mask{1} << v0, cand, s, fn);
    }

    template <typename Fn>
    bool enumerate(Mask ind, Mask cand, Mask s, Fn&& fn) {
        if (cand == 0) {
            // keep only classes maximal within G[S]
            Mask closed = ind;
            for (Mask t = ind; t; t &= t - 1) closed |= g.adj[__builtin_ctzll(t)];
            if ((s & ~closed) == 0) return fn(ind);
            return true;
        }
        int u = __builtin_ctzll(cand);
        Mask ubit = Mask{1} << u;
        if (!enumerate(ind | ubit, cand & ~g.adj[u] & ~ubit, s, fn)) return false;
        return enumerate(ind, cand & ~ubit, s, fn);
    }

    int solve(Mask s) {
        if (s == 0) return 0;
        int& slot = memo[s];
        if (slot >= 0) return slot;
        slot = g.n + 1; // upper sentinel while recursing
        int best = g.n;
        for_each_class(s, [&](Mask ind) {
            best = std::min(best, 1 + solve(s & ~ind));
            return true;
        });
        slot = best;
        return best;
    }

    // Re-walks the DP choices; deterministic (first class in enumeration
    // order achieving the optimum).
    void reconstruct(Mask s, std::vector<int>& colors, int next_color) {
        if (s == 0) return;
        int want = solve(s);
        Mask chosen = 0;
        for_each_class(s, [&](Mask ind) {
            if (1 + solve(s & ~ind) == want) {
                chosen = ind;
                return false;
            }
            return true;
        });
        for (Mask t = chosen; t; t &= t - 1) colors[__builtin_ctzll(t)] = next_color;
        reconstruct(s & ~chosen, colors, next_color + 1);
    }
};

// ---- DSATUR branch and bound (n > 16) --------------------------------------

struct Bnb {
    const BitGraph& g;
    std::vector<int> colors, best_colors;
    int best;             // best full coloring found so far (count)
    int lower;            // clique lower bound
    long long budget;

    Bnb(const BitGraph& bg, int ub, int lb, long long node_budget)
        : g(bg), colors(static_cast<std::size_t>(bg.n), -1), best(ub), lower(lb),
          budget(node_budget) {}

    bool expand(int colored, int used) {
        if (budget-- <= 0) return false;
        if (used >= best) return true;
        if (colored == g.n) {
            best = used;
            best_colors = colors;
            return true;
        }
        // most saturated uncolored vertex
        int pick = -1, pick_sat = -1, pick_deg = -1;
        Mask pick_nc = 0;
        for (int v = 0; v < g.n; ++v) {
            if (colors[v] >= 0) continue;
            Mask nc = 0;
            for (Mask nb = g.adj[v]; nb; nb &= nb - 1) {
                int u = __builtin_ctzll(nb);
                if (colors[u] >= 0) nc |= Mask{1} << colors[u];
            }
            int sat = __builtin_popcountll(nc);
            int deg = __builtin_popcountll(g.adj[v]);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
                pick_nc = nc;
            }
        }
        int limit = std::min(used + 1, best - 1);
        for (int c = 0; c < limit; ++c) {
            if ((pick_nc >> c) & 1) continue;
            colors[pick] = c;
            if (!expand(colored + 1, std::max(used, c + 1))) return false;
            colors[pick] = -1;
            if (best <= lower) return true;
        }
        return true;
    }
};

void normalize_colors(std::vector<int>& colors) {
    std::vector<int> remap(colors.size(), -1);
    int next = 0;
    for (int& c : colors) {
        if (remap[c] < 0) remap[c] = next++;
        c = remap[c];
    }
}

} // namespace

Coloring chromatic_number(const Graph& g) {
    Coloring out;
    if (g.n() == 0) return out;
    if (g.m() == 0) {
        out.chi = 1;
        out.colors.assign(static_cast<std::size_t>(g.n()), 0);
        return out;
    }
    BitGraph bg = bitgraph(g);
    int lb = greedy_clique(bg);
    std::vector<int> greedy;
    int ub = dsatur_greedy(bg, greedy);
    if (lb == ub) {
        out.chi = ub;
        out.colors = std::move(greedy);
        normalize_colors(out.colors);
        return out;
    }

    if (g.n() <= 16) {
        SubsetDp dp(bg);
        Mask full = (Mask{1} << g.n()) - 1;
        out.chi = dp.solve(full);
        out.colors.assign(static_cast<std::size_t>(g.n()), -1);
        dp.reconstruct(full, out.colors, 0);
        return out;
    }

    Bnb bnb(bg, ub, lb, 5'000'000);
    bnb.best_colors = greedy;
    if (!bnb.expand(0, 0))
        throw capacity_error("chromatic_number: branch-and-bound budget exhausted for n = " +
                             std::to_string(g.n()));
    out.chi = bnb.best;
    out.colors = std::move(bnb.best_colors);
    normalize_colors(out.colors);
    return out;
}

CliquePartition clique_partition(const Graph& g) {
    Graph comp = complement(g);
    Coloring col = chromatic_number(comp);
    CliquePartition part;
    part.host = &g;
    part.classes.assign(static_cast<std::size_t>(col.chi), {});
    for (int v = 0; v < g.n(); ++v) part.classes[col.colors[v]].push_back(v);
    // classes ordered by smallest member for stable output
    std::sort(part.classes.begin(), part.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (const auto& cls : part.classes)
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (!g.has_edge(cls[i], cls[j]))
                    throw std::logic_error("clique_partition: class not a clique");
    return part;
}

} // namespace pardual
