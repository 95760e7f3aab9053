#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pardual/corpus.hpp"
#include "pardual/families.hpp"
#include "pardual/graph6.hpp"
#include "pardual/map.hpp"
#include "pardual/subset_opt.hpp"
#include "pardual/tree_opt.hpp"
#include "pardual/verify.hpp"

namespace {

using namespace pardual;

constexpr int kHardSubsetCap = 30;
constexpr int kHardPdCap = 22;

struct IoOptions {
    std::string in;                // empty = stdin
    std::string format = "graph6"; // graph6 | edgelist
    std::string out = "json";      // json | csv | human
};

std::string read_all(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw parse_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

std::vector<Graph> load_graphs(const IoOptions& io) {
    std::string text = read_all(io.in);
    if (io.format == "edgelist") return {parse_edge_list(text)};
    if (io.format != "graph6")
        throw parse_error("unknown input format '" + io.format + "'");
    // parse line by line so errors can name the line
    std::vector<Graph> graphs;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const std::exception& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return graphs;
}

int clamp_cap(int requested, int hard, const char* what) {
    if (requested > hard) {
        std::cerr << "warning: " << what << " capped at the compiled limit " << hard << "\n";
        return hard;
    }
    return requested;
}

int env_max_edges(int fallback) {
    const char* env = std::getenv("PARDUAL_MAX_EDGES");
    if (!env) return fallback;
    return std::atoi(env);
}

std::vector<std::string> split_theorems(const std::string& spec) {
    std::vector<std::string> ids;
    std::istringstream in(spec);
    std::string id;
    while (std::getline(in, id, ','))
        if (!id.empty()) ids.push_back(id);
    if (ids.empty()) ids.push_back("all");
    return ids;
}

int cmd_invariants(const IoOptions& io, bool enumerate_pd, int max_edges, int max_pd) {
    std::vector<Graph> graphs;
    try {
        graphs = load_graphs(io);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    ReportOptions opt;
    opt.max_subset_edges = max_edges;
    opt.max_pd_edges = max_pd;
    opt.want_ribbon_oracle = enumerate_pd;
    bool first = true;
    for (const Graph& g : graphs) {
        InvariantReport r = full_report(g, opt);
        if (io.out == "json") std::cout << to_json(r) << "\n";
        else if (io.out == "csv") {
            if (first) std::cout << kCsvHeader;
            std::cout << to_csv_rows(r.graph6, r.checks);
        } else std::cout << to_human(r) << "\n";
        first = false;
    }
    return 0;
}

int cmd_verify(const IoOptions& io, const std::string& theorems, int exhaustive_n,
               const std::string& corpus_path, int parallel, std::uint64_t seed,
               int max_edges, int max_pd) {
    ScanOptions opts;
    opts.theorems = split_theorems(theorems);
    const auto& known = all_theorem_ids();
    for (const std::string& id : opts.theorems) {
        if (id != "all" && std::find(known.begin(), known.end(), id) == known.end()) {
            std::cerr << "error: unknown theorem id '" << id << "'; known ids:";
            for (const auto& k : known) std::cerr << ' ' << k;
            std::cerr << " (or 'all')\n";
            return 2;
        }
    }
    opts.report = options_for(opts.theorems);
    opts.report.max_subset_edges = max_edges;
    opts.report.max_pd_edges = max_pd;
    opts.parallel = parallel;
    opts.seed = seed;

    ScanReport total;
    std::vector<InvariantReport> rows;
    bool have_rows = false;
    if (exhaustive_n > 0) {
        if (exhaustive_n > 7) {
            std::cerr << "error: --exhaustive-n is limited to 7\n";
            return 2;
        }
        if (io.out == "csv") {
            // per-graph rows need the corpus materialized; fine up to n = 6
            if (exhaustive_n > 6) {
                std::cerr << "error: csv rows are limited to --exhaustive-n 6 "
                             "(about 27k graphs); use --out json for summaries\n";
                return 2;
            }
            std::vector<Graph> corpus;
            for (int n = 1; n <= exhaustive_n; ++n)
                for_each_connected_graph(n, [&](const Graph& g) {
                    corpus.push_back(g);
                    return true;
                });
            total = scan_graphs(corpus, opts, &rows);
            have_rows = true;
        } else {
            total = scan_exhaustive(exhaustive_n, opts);
        }
    }
    if (!corpus_path.empty()) {
        std::vector<Graph> corpus;
        try {
            corpus = parse_graph6_lines(read_all(corpus_path));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        std::vector<InvariantReport> corpus_rows;
        ScanReport rep = scan_graphs(corpus, opts, io.out == "csv" ? &corpus_rows : nullptr);
        if (io.out == "csv") {
            rows.insert(rows.end(), std::make_move_iterator(corpus_rows.begin()),
                        std::make_move_iterator(corpus_rows.end()));
            have_rows = true;
        }
        if (exhaustive_n > 0) {
            // combine the two sweeps
            total.corpus += " + " + rep.corpus;
            total.graphs += rep.graphs;
            total.checked += rep.checked;
            total.passed += rep.passed;
            total.failed += rep.failed;
            total.not_applicable += rep.not_applicable;
            total.skipped += rep.skipped;
            for (const auto& [id, st] : rep.by_theorem) {
                TheoremStats& t = total.by_theorem[id];
                t.checked += st.checked;
                t.passed += st.passed;
                t.failed += st.failed;
                t.not_applicable += st.not_applicable;
                t.tight += st.tight;
            }
            for (const auto& f : rep.failures) total.failures.push_back(f);
        } else {
            total = std::move(rep);
        }
    }
    if (exhaustive_n <= 0 && corpus_path.empty()) {
        std::cerr << "error: need --exhaustive-n or --corpus\n";
        return 2;
    }

    if (io.out == "csv" && have_rows) {
        std::cout << kCsvHeader;
        for (const auto& r : rows) std::cout << to_csv_rows(r.graph6, r.checks);
    } else {
        std::cout << to_json(total) << "\n";
    }
    long long conj_failures = 0;
    auto it = total.by_theorem.find("Conj4");
    if (it != total.by_theorem.end()) conj_failures = it->second.failed;
    return (total.failed - conj_failures) == 0 ? 0 : 1;
}

int cmd_scan_conjecture(const IoOptions& io, int exhaustive_n, const std::string& corpus_path,
                        int parallel, std::uint64_t seed) {
    ScanOptions opts;
    opts.parallel = parallel;
    opts.seed = seed;
    ConjectureScan scan;
    if (exhaustive_n > 0) {
        if (exhaustive_n > 7) {
            std::cerr << "error: --exhaustive-n is limited to 7\n";
            return 2;
        }
        scan = scan_conjecture_exhaustive(exhaustive_n, opts);
    } else if (!corpus_path.empty()) {
        std::vector<Graph> corpus;
        try {
            corpus = parse_graph6_lines(read_all(corpus_path));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        scan = scan_conjecture_graphs(corpus, opts);
    } else {
        // empty corpus is a clean run
        scan.report.corpus = "empty corpus";
        scan.report.seed = seed;
    }
    std::cout << to_json(scan.report) << "\n";
    (void)io;
    return scan.counterexample_found ? 3 : 0;
}

Graph parse_base(const std::string& name) {
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        std::string family = name.substr(0, colon);
        int n = std::stoi(name.substr(colon + 1));
        return make_basic(family, n);
    }
    return catalog_graph(name);
}

int cmd_construct(const std::string& family, int n, const std::string& base, int t,
                  const std::string& parts_spec, const std::string& cross_spec,
                  const std::string& out_format) {
    Graph g;
    try {
        if (family == "path" || family == "cycle" || family == "star" ||
            family == "complete" || family == "empty") {
            g = make_basic(family, n);
        } else if (family == "fig1_G") {
            g = fig1_G();
        } else if (family == "fig1_Gprime") {
            g = fig1_Gprime();
        } else if (family == "catalog") {
            g = catalog_graph(base);
        } else if (family == "tensor") {
            g = tensor_kt(parse_base(base), t);
        } else if (family == "identify") {
            // parts: "base@vertex,base@vertex,..."
            std::vector<std::pair<Graph, int>> parts;
            std::istringstream in(parts_spec);
            std::string item;
            while (std::getline(in, item, ',')) {
                auto at = item.find('@');
                if (at == std::string::npos)
                    throw std::invalid_argument("identify: parts are base@vertex");
                parts.emplace_back(parse_base(item.substr(0, at)),
                                   std::stoi(item.substr(at + 1)));
            }
            g = identify_vertices(parts);
        } else if (family == "cut_join") {
            // parts: "base,base"; cross: "u:v[,u:v]"
            std::istringstream in(parts_spec);
            std::string a, b;
            if (!std::getline(in, a, ',') || !std::getline(in, b, ','))
                throw std::invalid_argument("cut_join: needs --parts base,base");
            std::vector<std::pair<int, int>> cross;
            std::istringstream cin2(cross_spec);
            std::string pair;
            while (std::getline(cin2, pair, ',')) {
                auto colon = pair.find(':');
                if (colon == std::string::npos)
                    throw std::invalid_argument("cut_join: cross pairs are u:v");
                cross.emplace_back(std::stoi(pair.substr(0, colon)),
                                   std::stoi(pair.substr(colon + 1)));
            }
            g = cut_join(parse_base(a), parse_base(b), cross);
        } else {
            throw std::invalid_argument("unknown family '" + family + "'");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (out_format == "edgelist") std::cout << encode_edge_list(g);
    else std::cout << encode_graph6(g) << "\n";
    return 0;
}

int cmd_partial_duals(const IoOptions& io, const std::string& embedding_path, int max_pd,
                      int max_edges) {
    std::vector<Graph> graphs;
    try {
        graphs = load_graphs(io);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    for (const Graph& g : graphs) {
        if (!is_connected(g)) {
            std::cerr << "error: graph must be connected\n";
            return 2;
        }
        CombinatorialMap map;
        bool planar = is_planar(g);
        if (!embedding_path.empty()) {
            try {
                map = map_from_rotation(g, parse_embedding_spec(read_all(embedding_path)));
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        } else if (planar) {
            map = planar_embedding(g);
        } else {
            std::cerr << "error: the n - x formula requires a planar graph; supply an "
                         "embedding file to enumerate over a higher-genus map\n";
            return 2;
        }
        PartialDualScan scan;
        try {
            scan = enumerate_partial_dual_genus(map, max_pd);
        } catch (const capacity_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        std::optional<int> formula;
        if (planar) formula = g.n() - decay_number(g).value;
        (void)max_edges;

        if (io.out == "csv") {
            std::cout << "genus,count\n";
            for (const auto& [genus, count] : scan.histogram)
                std::cout << genus << ',' << count << "\n";
        } else if (io.out == "json") {
            std::ostringstream hist;
            std::cout << "{\"graph6\":\"" << encode_graph6(g) << "\",\"max_genus\":"
                      << scan.max_genus << ",\"witness\":[";
            bool first = true;
            for (std::uint64_t b = scan.witness; b; b &= b - 1) {
                if (!first) std::cout << ',';
                std::cout << __builtin_ctzll(b);
                first = false;
            }
            std::cout << "],\"formula\":";
            if (formula) std::cout << *formula;
            else std::cout << "null";
            std::cout << ",\"histogram\":[";
            for (std::size_t i = 0; i < scan.histogram.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << '[' << scan.histogram[i].first << ',' << scan.histogram[i].second
                          << ']';
            }
            std::cout << "]}\n";
        } else {
            std::cout << "graph " << encode_graph6(g) << "\n";
            std::cout << "  max partial-dual genus (enumerated): " << scan.max_genus << "\n";
            if (formula) std::cout << "  n - x formula:                       " << *formula << "\n";
            std::cout << "  witness A (edge indices):";
            for (std::uint64_t b = scan.witness; b; b &= b - 1)
                std::cout << ' ' << __builtin_ctzll(b);
            std::cout << "\n  histogram (genus,count):\n";
            for (const auto& [genus, count] : scan.histogram)
                std::cout << "    " << genus << ',' << count << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pardual: maximum partial-dual genus of planar graphs, the invariants "
                 "behind it, and a verification harness for the bounds relating them"};
    app.require_subcommand(1);

    IoOptions io;
    int parallel = 1;
    std::uint64_t seed = kDefaultSeed;
    int max_edges = env_max_edges(24);
    int max_pd = 20;

    auto add_io = [&](CLI::App* cmd, bool input) {
        if (input) {
            cmd->add_option("--in", io.in, "input file (default: stdin)");
            cmd->add_option("--format", io.format, "input format: graph6 | edgelist")
                ->check(CLI::IsMember({"graph6", "edgelist"}));
        }
        cmd->add_option("--out", io.out, "output format: json | csv | human")
            ->check(CLI::IsMember({"json", "csv", "human"}));
        cmd->add_option("--seed", seed, "random seed (default " + std::to_string(kDefaultSeed) + ")");
        cmd->add_option("--parallel", parallel, "worker threads (output is identical for any value)");
        cmd->add_option("--max-edges", max_edges, "edge budget for subset optimization (<= 30)");
    };

    auto* inv = app.add_subcommand("invariants", "per-graph invariant report");
    bool enumerate_pd = false;
    add_io(inv, true);
    inv->add_flag("--enumerate-partial-duals", enumerate_pd,
                  "also run the partial-dual enumeration oracle");

    auto* verify = app.add_subcommand("verify", "run theorem checks over a corpus");
    std::string theorems = "all";
    int exhaustive_n = 0;
    std::string corpus_path;
    add_io(verify, false);
    verify->add_option("--theorem", theorems, "comma-separated theorem ids, or 'all'");
    verify->add_option("--exhaustive-n", exhaustive_n,
                       "scan all labeled connected graphs on 1..k vertices (k <= 7)");
    verify->add_option("--corpus", corpus_path, "graph6 corpus file (one graph per line)");

    auto* scan = app.add_subcommand("scan-conjecture", "scan the y <= 2 chi(G^c) - lambda + 1 bound");
    int scan_exhaustive_n = 0;
    std::string scan_corpus;
    add_io(scan, false);
    scan->add_option("--exhaustive-n", scan_exhaustive_n,
                     "scan all labeled connected graphs on 1..k vertices (k <= 7)");
    scan->add_option("--corpus", scan_corpus, "graph6 corpus file");

    auto* construct = app.add_subcommand("construct", "emit a named family graph");
    std::string family, base = "k4", parts_spec, cross_spec, out_format = "graph6";
    int n = 0, t = 3;
    construct->add_option("--family", family,
                          "path|cycle|star|complete|empty|fig1_G|fig1_Gprime|catalog|tensor|"
                          "identify|cut_join")
        ->required();
    construct->add_option("--n", n, "order for basic families");
    construct->add_option("--base", base, "catalog name or family:N (tensor/catalog)");
    construct->add_option("--t", t, "clique size for tensor (2 or 3)");
    construct->add_option("--parts", parts_spec, "identify: base@vertex,... / cut_join: base,base");
    construct->add_option("--cross", cross_spec, "cut_join cross pairs u:v[,u:v]");
    construct->add_option("--out-format", out_format, "graph6 | edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    auto* pd = app.add_subcommand("partial-duals", "enumerate genus over all partial duals");
    std::string embedding_path;
    add_io(pd, true);
    pd->add_option("--embedding", embedding_path, "rotation-system file (v: e1 e2 ...)");
    pd->add_option("--max-pd-edges", max_pd, "edge budget for the 2^E enumeration (<= 22)");

    CLI11_PARSE(app, argc, argv);

    max_edges = clamp_cap(max_edges, kHardSubsetCap, "--max-edges");
    max_pd = clamp_cap(max_pd, kHardPdCap, "--max-pd-edges");

    try {
        if (inv->parsed()) return cmd_invariants(io, enumerate_pd, max_edges, max_pd);
        if (verify->parsed())
            return cmd_verify(io, theorems, exhaustive_n, corpus_path, parallel, seed, max_edges,
                              max_pd);
        if (scan->parsed()) return cmd_scan_conjecture(io, scan_exhaustive_n, scan_corpus,
                                                       parallel, seed);
        if (construct->parsed())
            return cmd_construct(family, n, base, t, parts_spec, cross_spec, out_format);
        if (pd->parsed()) return cmd_partial_duals(io, embedding_path, max_pd, max_edges);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
