#include "pardual/map.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pardual {

namespace {

int count_orbits(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int orbits = 0;
    for (std::size_t d = 0; d < perm.size(); ++d) {
        if (seen[d]) continue;
        ++orbits;
        for (int x = static_cast<int>(d); !seen[x]; x = perm[x]) seen[x] = 1;
    }
    return orbits;
}

std::vector<std::vector<int>> orbit_lists(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    std::vector<std::vector<int>> out;
    for (std::size_t d = 0; d < perm.size(); ++d) {
        if (seen[d]) continue;
        out.emplace_back();
        for (int x = static_cast<int>(d); !seen[x]; x = perm[x]) {
            seen[x] = 1;
            out.back().push_back(x);
        }
    }
    return out;
}

std::vector<int> face_permutation(const CombinatorialMap& m) {
    std::vector<int> phi(m.sigma.size());
    for (std::size_t d = 0; d < phi.size(); ++d) phi[d] = m.sigma[d ^ 1];
    return phi;
}

} // namespace

CombinatorialMap map_from_rotation(const Graph& g, const EmbeddingSpec& rot) {
    if (!is_connected(g)) throw std::domain_error("map_from_rotation: graph must be connected");
    if (static_cast<int>(rot.rotation.size()) != g.n())
        throw std::invalid_argument("rotation: wrong number of vertices");

    // dart 2i sits at edges()[i].first, dart 2i+1 at .second
    std::vector<char> used(static_cast<std::size_t>(2 * g.m()), 0);
    CombinatorialMap m;
    m.sigma.assign(static_cast<std::size_t>(2 * g.m()), -1);
    m.edge_label.resize(static_cast<std::size_t>(g.m()));
    for (int i = 0; i < g.m(); ++i) m.edge_label[i] = i;

    for (int v = 0; v < g.n(); ++v) {
        const auto& ring = rot.rotation[v];
        std::vector<int> darts;
        darts.reserve(ring.size());
        for (int ei : ring) {
            if (ei < 0 || ei >= g.m())
                throw std::invalid_argument("rotation: edge index out of range");
            const Edge& e = g.edge(ei);
            int dart;
            if (e.first == v) dart = 2 * ei;
            else if (e.second == v) dart = 2 * ei + 1;
            else throw std::invalid_argument("rotation: edge " + std::to_string(ei) +
                                             " not incident to vertex " + std::to_string(v));
            if (used[dart]) throw std::invalid_argument("rotation: duplicated half-edge");
            used[dart] = 1;
            darts.push_back(dart);
        }
        for (std::size_t k = 0; k < darts.size(); ++k)
            m.sigma[darts[k]] = darts[(k + 1) % darts.size()];
    }
    for (char u : used)
        if (!u) throw std::invalid_argument("rotation: missing half-edge");
    for (int v = 0; v < g.n(); ++v)
        if (rot.rotation[v].empty()) ++m.lone_vertices;
    return m;
}

EmbeddingSpec rotation_of(const Graph& g, const CombinatorialMap& m) {
    if (2 * g.m() != m.dart_count())
        throw std::invalid_argument("rotation_of: map does not match graph");
    EmbeddingSpec spec;
    spec.rotation.resize(static_cast<std::size_t>(g.n()));
    std::vector<char> seen(m.sigma.size(), 0);
    for (int d0 = 0; d0 < m.dart_count(); ++d0) {
        if (seen[d0]) continue;
        int edge0 = d0 / 2;
        int v = (d0 % 2 == 0) ? g.edge(edge0).first : g.edge(edge0).second;
        for (int d = d0; !seen[d]; d = m.sigma[d]) {
            seen[d] = 1;
            spec.rotation[v].push_back(d / 2);
        }
    }
    return spec;
}

CombinatorialMap planar_embedding(const Graph& g) {
    if (!is_connected(g)) throw std::domain_error("planar_embedding: graph must be connected");
    std::vector<std::vector<int>> rot;
    if (!planar_rotation(g, rot)) throw std::domain_error("planar_embedding: graph is not planar");
    CombinatorialMap m = map_from_rotation(g, EmbeddingSpec{std::move(rot)});
    if (genus(m) != 0) throw std::logic_error("planar_embedding: embedding is not genus 0");
    return m;
}

int vertex_count(const CombinatorialMap& m) {
    return count_orbits(m.sigma) + m.lone_vertices;
}

int face_count(const CombinatorialMap& m) {
    return count_orbits(face_permutation(m)) + m.lone_vertices;
}

std::vector<std::vector<int>> faces(const CombinatorialMap& m) {
    return orbit_lists(face_permutation(m));
}

std::vector<std::vector<int>> map_vertices(const CombinatorialMap& m) {
    return orbit_lists(m.sigma);
}

bool map_connected(const CombinatorialMap& m) {
    if (m.lone_vertices > 0) return m.dart_count() == 0 && m.lone_vertices == 1;
    if (m.dart_count() == 0) return true;
    std::vector<char> seen(m.sigma.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int x : {m.sigma[d], d ^ 1}) {
            if (!seen[x]) {
                seen[x] = 1;
                ++reached;
                stack.push_back(x);
            }
        }
    }
    return reached == m.dart_count();
}

int genus(const CombinatorialMap& m) {
    int v = vertex_count(m);
    int e = m.edge_count();
    int f = face_count(m);
    int chi = v - e + f;
    if (chi % 2 != 0 || chi > 2)
        throw std::logic_error("map: Euler characteristic " + std::to_string(chi) +
                               " is not that of a closed orientable surface");
    return (2 - chi) / 2;
}

MapProfile profile(const CombinatorialMap& m) {
    MapProfile p;
    p.vertices = vertex_count(m);
    p.edges = m.edge_count();
    p.faces = face_count(m);
    p.genus = (2 - (p.vertices - p.edges + p.faces)) / 2;
    if ((p.vertices - p.edges + p.faces) % 2 != 0 || p.genus < 0)
        throw std::logic_error("map: bad Euler characteristic");
    return p;
}

CombinatorialMap partial_dual(const CombinatorialMap& m, std::uint64_t edge_mask) {
    // Per-edge role swap between the rotation and the face permutation:
    // darts of selected edges take their successor from sigma(alpha(.)).
    CombinatorialMap out;
    out.sigma.resize(m.sigma.size());
    out.edge_label = m.edge_label;
    out.lone_vertices = m.lone_vertices;
    for (int d = 0; d < m.dart_count(); ++d)
        out.sigma[d] = ((edge_mask >> (d >> 1)) & 1) ? m.sigma[d ^ 1] : m.sigma[d];
    return out;
}

CombinatorialMap partial_dual(const CombinatorialMap& m, const EdgeSubset& a) {
    // Translate graph edge indices to map edge indices via the labels.
    std::uint64_t mask = 0;
    for (int i = 0; i < m.edge_count(); ++i)
        if (a.contains(m.edge_label[i])) mask |= std::uint64_t{1} << i;
    return partial_dual(m, mask);
}

CombinatorialMap geometric_dual(const CombinatorialMap& m) {
    std::uint64_t all = (m.edge_count() >= 64) ? ~std::uint64_t{0}
                                               : ((std::uint64_t{1} << m.edge_count()) - 1);
    return partial_dual(m, all);
}

CombinatorialMap mirror(const CombinatorialMap& m) {
    CombinatorialMap out;
    out.sigma.resize(m.sigma.size());
    out.edge_label = m.edge_label;
    out.lone_vertices = m.lone_vertices;
    for (int d = 0; d < m.dart_count(); ++d) out.sigma[m.sigma[d]] = d;
    return out;
}

int partial_dual_genus(const CombinatorialMap& m, std::uint64_t edge_mask) {
    int darts = m.dart_count();
    std::vector<char> seen(static_cast<std::size_t>(darts));
    // vertex orbits of the partial dual
    std::fill(seen.begin(), seen.end(), 0);
    int v = m.lone_vertices;
    for (int d0 = 0; d0 < darts; ++d0) {
        if (seen[d0]) continue;
        ++v;
        int x = d0;
        while (!seen[x]) {
            seen[x] = 1;
            x = ((edge_mask >> (x >> 1)) & 1) ? m.sigma[x ^ 1] : m.sigma[x];
        }
    }
    // face orbits: successor roles swapped on the selected edges
    std::fill(seen.begin(), seen.end(), 0);
    int f = m.lone_vertices;
    for (int d0 = 0; d0 < darts; ++d0) {
        if (seen[d0]) continue;
        ++f;
        int x = d0;
        while (!seen[x]) {
            seen[x] = 1;
            x = ((edge_mask >> (x >> 1)) & 1) ? m.sigma[x] : m.sigma[x ^ 1];
        }
    }
    int e = darts / 2;
    int chi = v - e + f;
    if (chi % 2 != 0 || chi > 2) throw std::logic_error("partial_dual_genus: bad Euler characteristic");
    return (2 - chi) / 2;
}

PartialDualScan enumerate_partial_dual_genus(const CombinatorialMap& m, int max_edges) {
    int e = m.edge_count();
    if (e > max_edges)
        throw capacity_error("partial-dual enumeration limited to " + std::to_string(max_edges) +
                             " edges, got " + std::to_string(e));
    if (!map_connected(m))
        throw std::domain_error("enumerate_partial_dual_genus: map must be connected");

    PartialDualScan scan;
    std::vector<std::uint64_t> hist;
    scan.max_genus = -1;
    int darts = m.dart_count();
    std::vector<char> seen(static_cast<std::size_t>(darts));

    std::uint64_t total = std::uint64_t{1} << e;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        // inline the two orbit counts (hot loop)
        std::fill(seen.begin(), seen.end(), 0);
        int v = m.lone_vertices;
        for (int d0 = 0; d0 < darts; ++d0) {
            if (seen[d0]) continue;
            ++v;
            int x = d0;
            while (!seen[x]) {
                seen[x] = 1;
                x = ((mask >> (x >> 1)) & 1) ? m.sigma[x ^ 1] : m.sigma[x];
            }
        }
        std::fill(seen.begin(), seen.end(), 0);
        int f = m.lone_vertices;
        for (int d0 = 0; d0 < darts; ++d0) {
            if (seen[d0]) continue;
            ++f;
            int x = d0;
            while (!seen[x]) {
                seen[x] = 1;
                x = ((mask >> (x >> 1)) & 1) ? m.sigma[x] : m.sigma[x ^ 1];
            }
        }
        int g = (2 - (v - e + f)) / 2;
        if ((v - e + f) % 2 != 0 || g < 0)
            throw std::logic_error("partial dual enumeration: bad Euler characteristic");
        if (static_cast<int>(hist.size()) <= g) hist.resize(static_cast<std::size_t>(g) + 1, 0);
        ++hist[g];
        if (g > scan.max_genus ||
            (g == scan.max_genus && subset_lex_less(mask, scan.witness))) {
            scan.max_genus = g;
            scan.witness = mask;
        }
    }
    for (std::size_t g = 0; g < hist.size(); ++g)
        if (hist[g] > 0) scan.histogram.emplace_back(static_cast<int>(g), hist[g]);
    return scan;
}

std::vector<CombinatorialMap> distinct_planar_embeddings(const Graph& g, int want,
                                                         std::uint64_t seed) {
    CombinatorialMap canonical = planar_embedding(g);
    std::vector<CombinatorialMap> out{canonical};
    auto try_add = [&](const CombinatorialMap& cand) {
        for (const auto& have : out)
            if (have.sigma == cand.sigma) return;
        out.push_back(cand);
    };
    if (static_cast<int>(out.size()) < want) try_add(mirror(canonical));

    std::mt19937_64 rng(seed);
    std::vector<int> perm(static_cast<std::size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i) perm[i] = i;

    // Relabel, re-embed, pull the rotation back. Different labelings explore
    // different embeddings when the graph has embedding freedom.
    for (int attempt = 0; attempt < 40 && static_cast<int>(out.size()) < want; ++attempt) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> relabeled;
        relabeled.reserve(g.edges().size());
        for (const auto& [u, v] : g.edges()) relabeled.emplace_back(perm[u], perm[v]);
        Graph h = Graph::make(g.n(), std::move(relabeled));
        std::vector<std::vector<int>> rot_h;
        if (!planar_rotation(h, rot_h)) continue;
        EmbeddingSpec spec;
        spec.rotation.resize(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v) {
            for (int eh : rot_h[perm[v]]) {
                const Edge& he = h.edge(eh);
                int u0 = -1, v0 = -1;
                // invert the relabeling on the edge endpoints
                for (int w = 0; w < g.n(); ++w) {
                    if (perm[w] == he.first) u0 = w;
                    if (perm[w] == he.second) v0 = w;
                }
                spec.rotation[v].push_back(g.edge_index(u0, v0));
            }
        }
        CombinatorialMap cand = map_from_rotation(g, spec);
        if (genus(cand) != 0) continue;
        try_add(cand);
        if (static_cast<int>(out.size()) < want) try_add(mirror(cand));
    }

    // Local perturbations keep trees and loosely connected graphs covered.
    for (int attempt = 0; attempt < 200 && static_cast<int>(out.size()) < want; ++attempt) {
        EmbeddingSpec spec = rotation_of(g, out[rng() % out.size()]);
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.n()));
        if (spec.rotation[v].size() < 3) continue;
        std::shuffle(spec.rotation[v].begin(), spec.rotation[v].end(), rng);
        CombinatorialMap cand = map_from_rotation(g, spec);
        if (vertex_count(cand) - cand.edge_count() + face_count(cand) != 2) continue;
        try_add(cand);
    }
    return out;
}

EmbeddingSpec parse_embedding_spec(std::string_view text) {
    EmbeddingSpec spec;
    std::istringstream in{std::string(text)};
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("embedding: missing ':' on line " + std::to_string(lineno));
        int v = -1;
        try {
            v = std::stoi(line.substr(0, colon));
        } catch (const std::exception&) {
            throw parse_error("embedding: bad vertex on line " + std::to_string(lineno));
        }
        if (v < 0) throw parse_error("embedding: negative vertex on line " + std::to_string(lineno));
        if (static_cast<int>(spec.rotation.size()) <= v)
            spec.rotation.resize(static_cast<std::size_t>(v) + 1);
        std::istringstream rest(line.substr(colon + 1));
        int ei;
        while (rest >> ei) spec.rotation[v].push_back(ei);
        if (!rest.eof())
            throw parse_error("embedding: bad edge index on line " + std::to_string(lineno));
    }
    return spec;
}

std::string format_embedding_spec(const EmbeddingSpec& spec) {
    std::ostringstream out;
    for (std::size_t v = 0; v < spec.rotation.size(); ++v) {
        out << v << ':';
        for (int ei : spec.rotation[v]) out << ' ' << ei;
        out << '\n';
    }
    return out.str();
}

} // namespace pardual
