#include "pardual/graph6.hpp"

#include <sstream>

namespace pardual {

namespace {
constexpr std::string_view kHeader = ">>graph6<<";
}

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) {
        base = kHeader.size();
        text.remove_prefix(kHeader.size());
    }
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (text.empty()) throw parse_error("graph6: empty input", static_cast<long>(base));

    unsigned char size_byte = static_cast<unsigned char>(text[0]);
    if (size_byte == 126)
        throw capacity_error("graph6: multi-byte size (n > 62) is unsupported");
    if (size_byte < 63 || size_byte > 125)
        throw parse_error("graph6: bad size byte", static_cast<long>(base));
    int n = size_byte - 63;

    int nbits = n * (n - 1) / 2;
    std::size_t payload = (static_cast<std::size_t>(nbits) + 5) / 6;
    if (text.size() < 1 + payload)
        throw parse_error("graph6: truncated payload", static_cast<long>(base + text.size()));
    if (text.size() > 1 + payload)
        throw parse_error("graph6: trailing garbage", static_cast<long>(base + 1 + payload));

    std::vector<Edge> edges;
    int bit = 0;
    for (std::size_t k = 0; k < payload; ++k) {
        unsigned char c = static_cast<unsigned char>(text[1 + k]);
        if (c < 63 || c > 126)
            throw parse_error("graph6: non-printable payload byte", static_cast<long>(base + 1 + k));
        int group = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (group >> b) & 1;
            if (bit >= nbits) {
                if (set)
                    throw parse_error("graph6: nonzero padding bit",
                                      static_cast<long>(base + 1 + k));
                continue;
            }
            if (set) {
                // Bits run column-major over the upper triangle: for each
                // column v, rows u = 0..v-1.
                int v = 1;
                int acc = bit;
                while (acc >= v) { acc -= v; ++v; }
                edges.emplace_back(acc, v);
            }
        }
    }
    return Graph::make(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    if (g.n() > 62) throw capacity_error("graph6: n > 62 is unsupported");
    std::string out;
    out.push_back(static_cast<char>(g.n() + 63));
    int group = 0, filled = 0;
    for (int v = 1; v < g.n(); ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) out.push_back(parse_graph6(line));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    int n, m;
    if (!(in >> n >> m)) throw parse_error("edge list: expected \"n m\" header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(std::max(m, 0)));
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw parse_error("edge list: expected edge line " + std::to_string(i + 1));
        edges.emplace_back(u, v);
    }
    std::string rest;
    if (in >> rest) throw parse_error("edge list: trailing tokens after " + std::to_string(m) + " edges");
    return Graph::make(n, std::move(edges));
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace pardual
