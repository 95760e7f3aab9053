#include "pardual/report.hpp"

#include <sstream>

#include <json.hpp>

namespace pardual {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json check_to_json(const BoundCheck& c) {
    ordered_json j;
    j["theorem"] = c.theorem_id;
    j["applicable"] = c.applicable;
    j["equality"] = c.equality;
    if (c.applicable) {
        j["lhs"] = c.lhs;
        j["rhs"] = c.rhs;
        j["slack"] = c.slack;
    } else {
        j["lhs"] = nullptr;
        j["rhs"] = nullptr;
        j["slack"] = nullptr;
    }
    j["pass"] = c.pass;
    j["note"] = c.note;
    j["witness"] = c.witness_data;
    return j;
}

template <typename T>
ordered_json opt(const std::optional<T>& v) {
    if (v.has_value()) return ordered_json(*v);
    return ordered_json(nullptr);
}

ordered_json report_to_json(const InvariantReport& r) {
    ordered_json j;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    j["connected"] = r.connected;
    j["betti"] = r.betti_number;
    j["lambda"] = r.lambda;
    j["delta"] = r.min_degree;
    j["n1"] = r.n1;
    j["n2"] = r.n2;
    j["planar"] = opt(r.planar);
    j["chi_complement"] = opt(r.chi_complement);
    j["x"] = opt(r.decay);
    j["x_tree"] = opt(r.decay_tree);
    j["xi"] = opt(r.xi);
    j["xi_nebesky"] = opt(r.xi_nebesky);
    j["y"] = opt(r.y);
    j["y_witness"] = opt(r.y_witness);
    j["max_genus"] = opt(r.maximum_genus);
    j["pdual_genus"] = opt(r.pdual_formula);
    j["pdual_genus_enumerated"] = opt(r.pdual_enumerated);
    j["errors"] = ordered_json::object();
    for (const auto& [field, msg] : r.errors) j["errors"][field] = msg;
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks) j["checks"].push_back(check_to_json(c));
    return j;
}

} // namespace

std::string to_json(const BoundCheck& check) { return check_to_json(check).dump(); }

std::string to_json(const InvariantReport& report) { return report_to_json(report).dump(); }

std::string to_json(const ScanReport& report) {
    ordered_json j;
    j["corpus"] = report.corpus;
    j["seed"] = report.seed;
    j["graphs"] = report.graphs;
    j["checked"] = report.checked;
    j["passed"] = report.passed;
    j["failed"] = report.failed;
    j["not_applicable"] = report.not_applicable;
    j["skipped"] = report.skipped;
    j["by_theorem"] = ordered_json::object();
    for (const auto& [id, st] : report.by_theorem) {
        ordered_json t;
        t["checked"] = st.checked;
        t["passed"] = st.passed;
        t["failed"] = st.failed;
        t["not_applicable"] = st.not_applicable;
        t["tight"] = st.tight;
        t["min_slack"] = opt(st.min_slack);
        t["min_slack_graph6"] = st.min_slack_graph6;
        j["by_theorem"][id] = t;
    }
    j["chi_branch_min_slack"] = opt(report.chi_branch_min_slack);
    j["chi_branch_min_graph6"] = report.chi_branch_min_graph6;
    j["tight"] = ordered_json::array();
    for (const auto& [id, g6] : report.tight) j["tight"].push_back({id, g6});
    j["tight_truncated"] = report.tight_truncated;
    j["failures"] = ordered_json::array();
    for (const auto& f : report.failures) j["failures"].push_back(report_to_json(f));
    j["failures_truncated"] = report.failures_truncated;
    return j.dump();
}

std::string to_csv_rows(const std::string& graph6, const std::vector<BoundCheck>& checks) {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << graph6 << ',' << c.theorem_id << ',' << (c.applicable ? 1 : 0) << ',';
        if (c.applicable) out << c.lhs << ',' << c.rhs << ',' << c.slack;
        else out << ",,";
        out << ',' << (c.pass ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string to_human(const InvariantReport& r) {
    std::ostringstream out;
    auto line = [&](const std::string& k, const std::string& v) {
        out << "  " << k;
        for (std::size_t i = k.size(); i < 18; ++i) out << ' ';
        out << v << '\n';
    };
    auto show = [](const std::optional<int>& v) {
        return v.has_value() ? std::to_string(*v) : std::string("-");
    };
    out << "graph " << r.graph6 << " (n=" << r.n << ", m=" << r.m << ")\n";
    line("connected", r.connected ? "yes" : "no");
    line("betti", std::to_string(r.betti_number));
    line("lambda", std::to_string(r.lambda));
    line("delta", std::to_string(r.min_degree));
    line("n1 / n2", std::to_string(r.n1) + " / " + std::to_string(r.n2));
    if (r.planar.has_value()) line("planar", *r.planar ? "yes" : "no");
    line("chi(G^c)", show(r.chi_complement));
    line("x (decay)", show(r.decay));
    line("xi", show(r.xi));
    line("xi (subset)", show(r.xi_nebesky));
    line("y", show(r.y));
    line("max genus", show(r.maximum_genus));
    line("pdual genus", show(r.pdual_formula));
    if (r.pdual_enumerated.has_value()) line("pdual (enum)", show(r.pdual_enumerated));
    for (const auto& [field, msg] : r.errors) line(field + "!", msg);
    for (const auto& c : r.checks) {
        std::string verdict = !c.applicable ? "n/a " : (c.pass ? "pass" : "FAIL");
        std::string detail;
        if (c.applicable)
            detail = " lhs=" + std::to_string(c.lhs) + " rhs=" + std::to_string(c.rhs) +
                     " slack=" + std::to_string(c.slack);
        out << "  [" << verdict << "] " << c.theorem_id << detail;
        if (!c.note.empty()) out << "  (" << c.note << ")";
        out << '\n';
    }
    return out.str();
}

} // namespace pardual
