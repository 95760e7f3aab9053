#include "pardual/subset_opt.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "dsu.hpp"

namespace pardual {

namespace {

using detail::RollbackDsu;

void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g)) throw std::domain_error(std::string(who) + ": graph must be connected");
}

// Components and odd-Betti components of (V, E \ a).
std::pair<int, int> deletion_profile(const Graph& g, std::uint64_t a_bits) {
    RollbackDsu dsu(g.n());
    for (int i = 0; i < g.m(); ++i) {
        if ((a_bits >> i) & 1) continue;
        dsu.add_edge(g.edge(i).first, g.edge(i).second);
    }
    int odd = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (dsu.find(v) != v) continue;
        // beta = e - v + 1 is odd iff e + v is even
        if ((dsu.component_edges(v) + dsu.component_size(v)) % 2 == 0) ++odd;
    }
    return {dsu.components(), odd};
}

struct Incumbent {
    int value = INT_MIN;
    std::uint64_t mask = 0;
    int card = 0;

    bool accept(int v, std::uint64_t m, int c) {
        if (v > value || (v == value && (c < card || (c == card && subset_lex_less(m, mask))))) {
            value = v;
            mask = m;
            card = c;
            return true;
        }
        return false;
    }
};

// Exclude-then-include DFS over the canonical edge order. The optimistic
// bound charges `gain` per still-deletable edge, capped by the number of
// splits the kept prefix still allows; ties on value are continued only
// while they can still improve the witness cardinality or its lex rank.
struct SubsetSearch {
    const Graph& g;
    int n, m;
    bool nebesky;
    int gain;
    RollbackDsu kept;
    std::vector<int> suffix_root;  // (m+1) x n component roots of (V, edges >= i)
    std::vector<int> suffix_edges; // per-root internal edge counts, same layout
    std::vector<int> sp;           // scratch parents for the merge
    std::vector<int> medges, mverts;
    Incumbent best;
    std::uint64_t visited = 0, pruned = 0;

    SubsetSearch(const Graph& graph, bool neb)
        : g(graph), n(graph.n()), m(graph.m()), nebesky(neb), gain(neb ? 2 : 1),
          kept(graph.n()), sp(static_cast<std::size_t>(graph.n())),
          medges(static_cast<std::size_t>(graph.n())), mverts(static_cast<std::size_t>(graph.n())) {
        suffix_root.resize(static_cast<std::size_t>(m + 1) * n);
        suffix_edges.assign(static_cast<std::size_t>(m + 1) * n, 0);
        RollbackDsu running(n);
        for (int i = m; i >= 0; --i) {
            int* root = &suffix_root[static_cast<std::size_t>(i) * n];
            int* edges = &suffix_edges[static_cast<std::size_t>(i) * n];
            if (i < m) running.add_edge(g.edge(i).first, g.edge(i).second);
            for (int v = 0; v < n; ++v) root[v] = running.find(v);
            for (int v = 0; v < n; ++v)
                if (root[v] == v) edges[v] = running.component_edges(v);
        }
    }

    int find(int v) {
        while (sp[v] != v) {
            sp[v] = sp[sp[v]];
            v = sp[v];
        }
        return v;
    }

    // Objective value when every undecided edge from level i on is kept.
    int stop_value(int i, int a_count, int& c_out) {
        const int* sroot = &suffix_root[static_cast<std::size_t>(i) * n];
        for (int v = 0; v < n; ++v) sp[v] = v;
        int comps = n;
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(kept.find(v));
            if (a != b) {
                sp[a] = b;
                --comps;
            }
        }
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(sroot[v]);
            if (a != b) {
                sp[a] = b;
                --comps;
            }
        }
        c_out = comps;
        if (!nebesky) return 2 * comps - a_count - 1;

        const int* sedge = &suffix_edges[static_cast<std::size_t>(i) * n];
        std::fill(medges.begin(), medges.end(), 0);
        std::fill(mverts.begin(), mverts.end(), 0);
        for (int v = 0; v < n; ++v) {
            ++mverts[find(v)];
            if (kept.find(v) == v) medges[find(v)] += kept.component_edges(v);
            if (sroot[v] == v) medges[find(v)] += sedge[v];
        }
        int b = 0;
        for (int v = 0; v < n; ++v)
            if (find(v) == v && (medges[v] + mverts[v]) % 2 == 0) ++b;
        return comps + b - a_count - 1;
    }

    void seed(std::uint64_t mask) {
        auto [c, odd] = deletion_profile(g, mask);
        int value = nebesky ? c + odd - __builtin_popcountll(mask) - 1
                            : 2 * c - __builtin_popcountll(mask) - 1;
        ++visited;
        best.accept(value, mask, __builtin_popcountll(mask));
    }

    void dfs(int i, std::uint64_t a_mask, int a_count) {
        int c_now = 0;
        int stop = stop_value(i, a_count, c_now);
        if (i == m) {
            ++visited;
            best.accept(stop, a_mask, a_count);
            return;
        }
        int r = m - i;
        int split_cap = kept.components() - c_now; // deleting everything undecided
        int ub = stop + gain * std::min(r, split_cap);
        if (ub < best.value) {
            ++pruned;
            return;
        }
        if (ub == best.value) {
            int need = best.value - stop;
            int min_extra = need <= 0 ? 0 : (need + gain - 1) / gain;
            int min_card = a_count + min_extra;
            if (min_card > best.card) {
                ++pruned;
                return;
            }
            if (min_card == best.card) {
                std::uint64_t lowest =
                    min_extra == 0 ? 0 : (((std::uint64_t{1} << min_extra) - 1) << i);
                if (!subset_lex_less(a_mask | lowest, best.mask)) {
                    ++pruned;
                    return;
                }
            }
        }
        auto mark = kept.checkpoint();
        kept.add_edge(g.edge(i).first, g.edge(i).second);
        dfs(i + 1, a_mask, a_count);
        kept.rewind(mark);
        dfs(i + 1, a_mask | (std::uint64_t{1} << i), a_count + 1);
    }
};

SubsetOptResult subset_maximize(const Graph& g, bool nebesky, int max_edges, const char* who) {
    require_connected(g, who);
    if (g.m() > max_edges)
        throw capacity_error(std::string(who) + ": |E| = " + std::to_string(g.m()) +
                             " exceeds the enumeration capacity " + std::to_string(max_edges));
    SubsetSearch search(g, nebesky);
    search.seed(0);
    if (g.m() > 0) {
        std::uint64_t full = (std::uint64_t{1} << g.m()) - 1;
        search.seed(full);
    }
    search.dfs(0, 0, 0);
    SubsetOptResult res;
    res.value = search.best.value;
    res.witness = make_subset(g, search.best.mask);
    res.subsets_visited = search.visited;
    res.subsets_pruned = search.pruned;
    return res;
}

} // namespace

int y_value(const Graph& g, const EdgeSubset& a) {
    require_host(g, a);
    require_connected(g, "y_value");
    auto [c, odd] = deletion_profile(g, a.bits);
    (void)odd;
    return 2 * c - a.count() - 1;
}

int nebesky_value(const Graph& g, const EdgeSubset& a) {
    require_host(g, a);
    require_connected(g, "nebesky_value");
    auto [c, odd] = deletion_profile(g, a.bits);
    return c + odd - a.count() - 1;
}

SubsetOptResult y_max(const Graph& g, int max_edges) {
    return subset_maximize(g, false, max_edges, "y_max");
}

SubsetOptResult nebesky_deficiency(const Graph& g, int max_edges) {
    return subset_maximize(g, true, max_edges, "nebesky_deficiency");
}

int max_partial_dual_genus(const Graph& g, int max_edges) {
    require_connected(g, "max_partial_dual_genus");
    if (!is_planar(g))
        throw std::domain_error("max_partial_dual_genus: the n - y formula requires a planar graph");
    return g.n() - y_max(g, max_edges).value;
}

QuotientGraph quotient_graph(const Graph& g, const EdgeSubset& a) {
    require_host(g, a);
    require_connected(g, "quotient_graph");
    Graph rest = spanning_subgraph_minus(g, a);
    std::vector<std::vector<int>> comps = components(rest);
    std::vector<int> comp_of(static_cast<std::size_t>(g.n()));
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);

    std::vector<std::pair<Edge, int>> cross; // quotient edge, host edge index
    for (int i : a.indices()) {
        int cu = comp_of[g.edge(i).first], cv = comp_of[g.edge(i).second];
        if (cu == cv) continue; // loop in the quotient, dropped
        cross.push_back({{std::min(cu, cv), std::max(cu, cv)}, i});
    }
    std::sort(cross.begin(), cross.end());

    QuotientGraph q;
    q.component_vertices = std::move(comps);
    std::vector<Edge> qedges;
    for (const auto& [e, host_idx] : cross) {
        if (qedges.empty() || qedges.back() != e) {
            qedges.push_back(e);
            q.origin_edges.emplace_back();
        }
        q.origin_edges.back().push_back(host_idx);
    }
    q.graph = Graph::make(static_cast<int>(q.component_vertices.size()), std::move(qedges));
    return q;
}

StructureReport check_optimal_structure(const Graph& g, const SubsetOptResult& result) {
    require_host(g, result.witness);
    StructureReport report;
    const std::uint64_t a_bits = result.witness.bits;
    const int a_size = result.witness.count();
    Graph rest = spanning_subgraph_minus(g, result.witness);
    std::vector<std::vector<int>> comps = components(rest);
    int c = static_cast<int>(comps.size());
    std::vector<int> comp_of(static_cast<std::size_t>(g.n()));
    for (std::size_t k = 0; k < comps.size(); ++k)
        for (int v : comps[k]) comp_of[v] = static_cast<int>(k);

    // (i) cardinality identities
    if (result.value == 1) {
        report.clause_i = (a_size == 2 * c - 2);
        if (!report.clause_i)
            report.violations.push_back("clause i: |A| = " + std::to_string(a_size) +
                                        " != 2c - 2 with c = " + std::to_string(c));
    } else {
        report.clause_i = (a_size >= 1 && c >= 2 && a_size <= 2 * c - 3);
        if (!report.clause_i)
            report.violations.push_back("clause i: |A| = " + std::to_string(a_size) +
                                        ", c = " + std::to_string(c) + " violates y >= 2 bounds");
    }

    // (ii) components vertex-induced (no witness edge inside a component)
    // with y_F = 1 each
    report.clause_ii = true;
    for (int i = 0; i < g.m(); ++i) {
        if (!((a_bits >> i) & 1)) continue;
        if (comp_of[g.edge(i).first] == comp_of[g.edge(i).second]) {
            report.clause_ii = false;
            report.violations.push_back("clause ii: witness edge " + std::to_string(i) +
                                        " lies inside a component");
        }
    }
    if (report.clause_ii) {
        for (std::size_t k = 0; k < comps.size(); ++k) {
            int y_f;
            if (c == 1) {
                y_f = result.value; // F = G; avoid re-running the optimizer
            } else {
                y_f = y_max(induced_subgraph(g, comps[k])).value;
            }
            if (y_f != 1) {
                report.clause_ii = false;
                report.violations.push_back("clause ii: component " + std::to_string(k) +
                                            " has y = " + std::to_string(y_f));
            }
        }
    }

    // (iii) inter-component cut sizes for the smallest witness
    std::vector<int> pair_count(static_cast<std::size_t>(c) * c, 0);
    for (int i = 0; i < g.m(); ++i) {
        if (!((a_bits >> i) & 1)) continue;
        int cu = comp_of[g.edge(i).first], cv = comp_of[g.edge(i).second];
        if (cu != cv) {
            ++pair_count[static_cast<std::size_t>(cu) * c + cv];
            ++pair_count[static_cast<std::size_t>(cv) * c + cu];
        }
    }
    report.clause_iii = true;
    for (int x = 0; x < c; ++x)
        for (int y = x + 1; y < c; ++y)
            if (pair_count[static_cast<std::size_t>(x) * c + y] > 1) {
                report.clause_iii = false;
                report.violations.push_back("clause iii: |E(F_" + std::to_string(x) + ", F_" +
                                            std::to_string(y) + ")| > 1");
            }
    if (c >= 2 && c <= 10) {
        for (std::uint32_t s = 0; s < (1u << c); ++s) {
            int k = __builtin_popcount(s);
            if (k < 2) continue;
            long long cut = 0;
            for (int x = 0; x < c; ++x) {
                if (!((s >> x) & 1)) continue;
                for (int y = x + 1; y < c; ++y)
                    if ((s >> y) & 1) cut += pair_count[static_cast<std::size_t>(x) * c + y];
            }
            if (cut > 2 * k - 3) {
                report.clause_iii = false;
                report.violations.push_back("clause iii: a " + std::to_string(k) +
                                            "-subset of components has cut " + std::to_string(cut));
            }
        }
    } else if (c > 10) {
        report.ksubsets_exhaustive = false;
    }
    return report;
}

BoundCheck lemma25_bound_check(const Graph& g, const SubsetOptResult& result) {
    require_host(g, result.witness);
    if (result.value < 2)
        return BoundCheck::not_applicable("L2.5", "requires y >= 2");
    int lambda = edge_connectivity(g);
    auto [c, odd] = deletion_profile(g, result.witness.bits);
    (void)odd;
    long long bound;
    std::string branch;
    if (lambda <= 1) {
        bound = c;
        branch = "lambda=1: y <= c(G-A)";
    } else if (lambda == 2) {
        bound = c - 1;
        branch = "lambda=2: y <= c(G-A)-1";
    } else if (lambda == 3) {
        bound = c / 2 - 1;
        branch = "lambda=3: y <= floor(c/2)-1";
    } else {
        // 4-edge-connected graphs have y = 1, so y >= 2 cannot occur
        return BoundCheck::not_applicable("L2.5", "lambda >= 4");
    }
    BoundCheck check = BoundCheck::of("L2.5", false, result.value, bound, branch);
    check.witness_data = "c(G-A)=" + std::to_string(c);
    return check;
}

} // namespace pardual
