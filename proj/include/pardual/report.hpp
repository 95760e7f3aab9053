#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pardual {

// One bound or equality evaluated on one graph. All comparisons are exact
// integer arithmetic; where a statement involves halves the two sides are
// stored doubled (noted in `note`). Orientation is normalized to lhs <= rhs,
// so pass means slack = rhs - lhs >= 0 (== 0 for equalities). A check whose
// hypothesis fails is reported not-applicable, which passes vacuously but is
// counted separately.
struct BoundCheck {
    std::string theorem_id;
    bool applicable = true;
    bool equality = false;
    long long lhs = 0;
    long long rhs = 0;
    long long slack = 0;
    bool pass = true;
    std::string note;
    std::string witness_data;

    static BoundCheck not_applicable(std::string id, std::string why) {
        BoundCheck b;
        b.theorem_id = std::move(id);
        b.applicable = false;
        b.pass = true;
        b.note = std::move(why);
        return b;
    }

    static BoundCheck of(std::string id, bool equality, long long lhs, long long rhs,
                         std::string note = {}) {
        BoundCheck b;
        b.theorem_id = std::move(id);
        b.equality = equality;
        b.lhs = lhs;
        b.rhs = rhs;
        b.slack = rhs - lhs;
        b.pass = equality ? (b.slack == 0) : (b.slack >= 0);
        b.note = std::move(note);
        return b;
    }
};

// Everything we can compute about one graph, with per-field capacity errors
// (a field over budget is left empty and recorded in `errors`; the rest of
// the report is still produced).
struct InvariantReport {
    std::string graph6;
    int n = 0;
    int m = 0;
    bool connected = false;
    int betti_number = 0;
    int lambda = 0;
    int min_degree = 0;
    int n1 = 0;
    int n2 = 0;

    std::optional<bool> planar;
    std::optional<int> chi_complement;
    std::optional<int> decay; // x_G
    std::optional<std::vector<int>> decay_tree;
    std::optional<int> xi;         // spanning-tree route
    std::optional<int> xi_nebesky; // edge-subset route
    std::optional<int> y;
    std::optional<std::vector<int>> y_witness;
    std::optional<int> maximum_genus;
    std::optional<int> pdual_formula;    // n - y, planar connected only
    std::optional<int> pdual_enumerated; // ribbon enumeration, when requested

    std::map<std::string, std::string> errors;
    std::vector<BoundCheck> checks;
};

struct TheoremStats {
    long long checked = 0;
    long long passed = 0;
    long long failed = 0;
    long long not_applicable = 0;
    long long tight = 0;
    std::optional<long long> min_slack; // over applicable inequality instances
    std::string min_slack_graph6;
};

struct ScanReport {
    std::string corpus;
    std::uint64_t seed = 0;
    long long graphs = 0;
    long long checked = 0;
    long long passed = 0;
    long long failed = 0;
    long long not_applicable = 0;
    long long skipped = 0; // capacity-skipped checks, outside the identity below

    // checked == passed + failed + not_applicable
    std::map<std::string, TheoremStats> by_theorem;

    // best observation of the chromatic branch of the lambda <= 2 upper
    // bound (no graph is known to attain it; scans report the closest seen)
    std::optional<long long> chi_branch_min_slack;
    std::string chi_branch_min_graph6;
    std::vector<std::pair<std::string, std::string>> tight; // (theorem_id, graph6)
    std::vector<InvariantReport> failures;

    static constexpr std::size_t kMaxStoredTight = 5000;
    static constexpr std::size_t kMaxStoredFailures = 1000;
    std::size_t tight_truncated = 0;
    std::size_t failures_truncated = 0;
};

std::string to_json(const BoundCheck& check);
std::string to_json(const InvariantReport& report);
std::string to_json(const ScanReport& report);
std::string to_csv_rows(const std::string& graph6, const std::vector<BoundCheck>& checks);
std::string to_human(const InvariantReport& report);
constexpr const char* kCsvHeader = "graph6,theorem_id,applicable,lhs,rhs,slack,pass\n";

} // namespace pardual
