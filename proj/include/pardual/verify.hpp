#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pardual/graph.hpp"
#include "pardual/report.hpp"

namespace pardual {

// Documented default seed for everything randomized; recorded in reports.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Which invariants to compute and at what enumeration budgets.
struct ReportOptions {
    bool want_x = true;          // decay number via spanning trees
    bool want_xi = true;         // Xuong deficiency via spanning trees
    bool want_xi_nebesky = true; // deficiency via edge subsets
    bool want_y = true;
    bool want_chi = true; // chi of the complement
    bool want_planar = true;
    bool want_ribbon_oracle = false; // partial-dual enumeration over an embedding
    bool want_witnesses = true;
    int max_subset_edges = 24;
    int max_pd_edges = 20;
};

// All per-graph theorem ids, in report order.
const std::vector<std::string>& all_theorem_ids();

// Minimal options needed to evaluate the given checks.
ReportOptions options_for(const std::vector<std::string>& theorem_ids);

// Invariants only; capacity problems land in report.errors per field.
InvariantReport compute_invariants(const Graph& g, const ReportOptions& opt = {});

// Per-graph checks. Each returns not-applicable when its hypothesis fails.
// Ids: T1.1-consistency, T1.2, T1.3-oracle, T1.4, T1.6, C1.7, T1.8, T2.3,
// P2.4, L2.5, T2.6, T3.1, T3.2, Claims3, P4.1, Conj4, prior-CK, prior-Huang.
// (L2.1, L2.2 and P3.3 are constructive checks, see below.)
std::vector<BoundCheck> run_checks(const Graph& g, const InvariantReport& report,
                                   const std::vector<std::string>& theorem_ids);

// Invariants plus every applicable per-graph check.
InvariantReport full_report(const Graph& g, const ReportOptions& opt = {});

// Compositional identities: builds the composite, evaluates both sides
// independently, asserts exact equality.
BoundCheck check_compositional_cut_join(const Graph& g1, const Graph& g2,
                                        const std::vector<std::pair<int, int>>& cross,
                                        int max_edges = 30);
BoundCheck check_compositional_identify(const std::vector<std::pair<Graph, int>>& parts,
                                        int max_edges = 30);

// The K_t expansion of a 3-edge-connected cubic planar base: checks the
// construction is 3-edge-connected cubic planar and that y = n/2 - 1 =
// 3 chi(G^c)/2 - 1 (y falls back to the spanning-tree route when the subset
// budget is too small for the expansion).
BoundCheck check_tensor_expansion(const Graph& base, int max_subset_edges = 24);

// ---- corpus scans ----------------------------------------------------------

struct ScanOptions {
    std::vector<std::string> theorems{std::string("all")};
    ReportOptions report;
    int parallel = 1;
    std::uint64_t seed = kDefaultSeed;
};

// Scans every labeled connected graph on 1..max_n vertices (streamed).
ScanReport scan_exhaustive(int max_n, const ScanOptions& opts);

// Scans an explicit corpus; when `rows` is non-null the per-graph reports
// (with checks) are captured in corpus order.
ScanReport scan_graphs(const std::vector<Graph>& corpus, const ScanOptions& opts,
                       std::vector<InvariantReport>* rows = nullptr);

// Conjecture scan: y <= 2 chi(G^c) - lambda + 1 on connected graphs with
// lambda in {1,2}, other than the triangle. Violations are findings, not
// errors; `counterexample_found` distinguishes them.
struct ConjectureScan {
    ScanReport report;
    bool counterexample_found = false;
};
ConjectureScan scan_conjecture_exhaustive(int max_n, const ScanOptions& opts);
ConjectureScan scan_conjecture_graphs(const std::vector<Graph>& corpus, const ScanOptions& opts);

} // namespace pardual
