#include "pardual/tree_opt.hpp"

#include <stdexcept>

#include "dsu.hpp"

namespace pardual {

namespace {

using detail::RollbackDsu;

// Scratch union-find over a plain parent array; cheaper than RollbackDsu for
// one-shot component counts.
struct Scratch {
    std::vector<int> parent;

    explicit Scratch(int n) : parent(static_cast<std::size_t>(n)) {}

    void reset(int n) {
        parent.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    // returns true if this union reduced the component count
    bool unite(int u, int v) {
        int a = find(u), b = find(v);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

struct TreeSearch {
    const Graph& g;
    int n, m;
    RollbackDsu dsu;
    Scratch scratch;
    std::uint64_t tree_mask = 0;
    std::uint64_t trees = 0;

    // hooks; either may be null
    // prune(tree_mask_so_far) -> true to cut this subtree
    bool (*prune)(TreeSearch&, void*) = nullptr;
    // leaf(tree_mask) -> false to stop the whole search
    bool (*leaf)(TreeSearch&, void*) = nullptr;
    void* ctx = nullptr;
    bool stopped = false;

    explicit TreeSearch(const Graph& graph)
        : g(graph), n(graph.n()), m(graph.m()), dsu(graph.n()), scratch(graph.n()) {}

    // Can the current components still be joined using edges >= i?
    bool spannable(int i) {
        scratch.reset(n);
        int comps = n;
        for (int v = 0; v < n; ++v)
            if (dsu.find(v) != v && scratch.unite(v, dsu.find(v))) --comps;
        for (int k = i; k < m && comps > 1; ++k)
            if (scratch.unite(g.edge(k).first, g.edge(k).second)) --comps;
        return comps == 1;
    }

    void run(int i, int picked) {
        if (stopped) return;
        if (prune && prune(*this, ctx)) return;
        if (picked == n - 1) {
            ++trees;
            if (leaf && !leaf(*this, ctx)) stopped = true;
            return;
        }
        if (i == m || n - 1 - picked > m - i) return;
        auto [u, v] = g.edge(i);
        if (dsu.find(u) != dsu.find(v)) {
            auto mark = dsu.checkpoint();
            dsu.add_edge(u, v);
            tree_mask |= std::uint64_t{1} << i;
            run(i + 1, picked + 1);
            tree_mask &= ~(std::uint64_t{1} << i);
            dsu.rewind(mark);
            if (stopped) return;
            if (spannable(i + 1)) run(i + 1, picked);
        } else {
            run(i + 1, picked);
        }
    }
};

void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g)) throw std::domain_error(std::string(who) + ": graph must be connected");
}

// Component count of (V, E \ tree_mask).
int cograph_components(const Graph& g, std::uint64_t tree_mask, Scratch& scratch) {
    scratch.reset(g.n());
    int comps = g.n();
    for (int k = 0; k < g.m(); ++k) {
        if ((tree_mask >> k) & 1) continue;
        if (scratch.unite(g.edge(k).first, g.edge(k).second)) --comps;
    }
    return comps;
}

// Number of components of (V, E \ tree_mask) with an odd number of edges.
int cograph_odd_components(const Graph& g, std::uint64_t tree_mask, RollbackDsu& dsu) {
    dsu.reset(g.n());
    for (int k = 0; k < g.m(); ++k) {
        if ((tree_mask >> k) & 1) continue;
        dsu.add_edge(g.edge(k).first, g.edge(k).second);
    }
    int odd = 0;
    for (int v = 0; v < g.n(); ++v)
        if (dsu.find(v) == v && dsu.component_edges(v) % 2 == 1) ++odd;
    return odd;
}

} // namespace

void for_each_spanning_tree(const Graph& g, const std::function<bool(std::uint64_t)>& fn) {
    require_connected(g, "for_each_spanning_tree");
    struct Ctx {
        const std::function<bool(std::uint64_t)>& fn;
    } c{fn};
    TreeSearch search(g);
    search.ctx = &c;
    search.leaf = [](TreeSearch& s, void* ctx) {
        return static_cast<Ctx*>(ctx)->fn(s.tree_mask);
    };
    search.run(0, 0);
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g) {
    std::vector<SpanningTree> out;
    for_each_spanning_tree(g, [&](std::uint64_t mask) {
        out.push_back(SpanningTree{&g, make_subset(g, mask)});
        return true;
    });
    return out;
}

TreeOptResult decay_number(const Graph& g) {
    require_connected(g, "decay_number");
    struct Ctx {
        const Graph& g;
        Scratch eval;
        int best = 0;
        std::uint64_t best_mask = 0;
    } c{g, Scratch(g.n()), g.n() + 1, 0};

    TreeSearch search(g);
    search.ctx = &c;
    // Every leaf below keeps at most the current co-graph, so its component
    // count can only be larger; cut when it already matches the incumbent.
    search.prune = [](TreeSearch& s, void* ctx) {
        auto* c = static_cast<Ctx*>(ctx);
        return cograph_components(s.g, s.tree_mask, s.scratch) >= c->best;
    };
    search.leaf = [](TreeSearch& s, void* ctx) {
        auto* c = static_cast<Ctx*>(ctx);
        int value = cograph_components(s.g, s.tree_mask, c->eval);
        if (value < c->best) {
            c->best = value;
            c->best_mask = s.tree_mask;
        }
        return c->best > 1; // x_G >= 1 always; stop at the floor
    };
    search.run(0, 0);

    TreeOptResult res;
    res.value = c.best;
    res.witness = SpanningTree{&g, make_subset(g, c.best_mask)};
    res.trees_examined = search.trees;
    return res;
}

TreeOptResult xuong_deficiency(const Graph& g) {
    require_connected(g, "xuong_deficiency");
    int floor = betti(g) % 2; // odd components have the parity of the co-tree size
    struct Ctx {
        const Graph& g;
        RollbackDsu eval;
        int best;
        int floor;
        std::uint64_t best_mask = 0;
    } c{g, RollbackDsu(g.n()), g.m() + 1, floor, 0};

    TreeSearch search(g);
    search.ctx = &c;
    search.leaf = [](TreeSearch& s, void* ctx) {
        auto* c = static_cast<Ctx*>(ctx);
        int value = cograph_odd_components(s.g, s.tree_mask, c->eval);
        if (value < c->best) {
            c->best = value;
            c->best_mask = s.tree_mask;
        }
        return c->best > c->floor;
    };
    search.run(0, 0);

    TreeOptResult res;
    res.value = c.best;
    res.witness = SpanningTree{&g, make_subset(g, c.best_mask)};
    res.trees_examined = search.trees;
    return res;
}

int max_genus(const Graph& g) {
    require_connected(g, "max_genus");
    int b = betti(g);
    int xi = xuong_deficiency(g).value;
    if ((b - xi) % 2 != 0 || b < xi)
        throw std::logic_error("max_genus: betti and deficiency parity mismatch");
    return (b - xi) / 2;
}

bool is_upper_embeddable(const Graph& g) {
    require_connected(g, "is_upper_embeddable");
    return xuong_deficiency(g).value <= 1;
}

} // namespace pardual
