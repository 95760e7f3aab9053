#include <doctest.h>

#include <random>

#include "pardual/corpus.hpp"
#include "pardual/families.hpp"
#include "pardual/graph.hpp"
#include "pardual/subset_opt.hpp"
#include "pardual/verify.hpp"

using namespace pardual;

namespace {

bool degrees_are(const Graph& g, std::vector<int> expect) {
    std::vector<int> deg;
    for (int v = 0; v < g.n(); ++v) deg.push_back(g.degree(v));
    std::sort(deg.begin(), deg.end());
    std::sort(expect.begin(), expect.end());
    return deg == expect;
}

bool is_path_shaped(const Graph& g) {
    if (!is_connected(g) || g.m() != g.n() - 1) return false;
    auto dc = degree_counts(g);
    return dc.n1 == 2 && dc.n2 == g.n() - 2;
}

bool is_cycle_shaped(const Graph& g) {
    return is_connected(g) && g.m() == g.n() && degree_counts(g).n2 == g.n();
}

} // namespace

TEST_CASE("basic families") {
    Graph c6 = make_basic("cycle", 6);
    CHECK(c6.n() == 6);
    CHECK(c6.m() == 6);
    CHECK(degree_counts(c6).n2 == 6);

    CHECK(make_basic("complete", 4).m() == 6);

    Graph s5 = make_basic("star", 5);
    CHECK(s5.degree(0) == 4);
    CHECK(degree_counts(s5).n1 == 4);

    CHECK(make_basic("path", 1).m() == 0);
    CHECK(make_basic("empty", 4).m() == 0);
    CHECK_THROWS_AS(make_basic("cycle", 2), std::invalid_argument);
    CHECK_THROWS_AS(make_basic("star", 1), std::invalid_argument);
    CHECK_THROWS_AS(make_basic("blub", 3), std::invalid_argument);
}

TEST_CASE("identify_vertices") {
    Graph k2 = make_complete(2);
    Graph p3 = identify_vertices({{k2, 1}, {k2, 0}});
    CHECK(is_path_shaped(p3));
    CHECK(p3.n() == 3);

    // k copies of K_2 identified at one endpoint give the star S_{k+1}
    for (int k = 2; k <= 5; ++k) {
        std::vector<std::pair<Graph, int>> parts(static_cast<std::size_t>(k), {k2, 0});
        Graph star = identify_vertices(parts);
        CHECK(star.n() == k + 1);
        CHECK(star.degree(0) == k); // merged vertex is labeled 0
        CHECK(degrees_are(star, [&] {
            std::vector<int> d(static_cast<std::size_t>(k), 1);
            d.push_back(k);
            return d;
        }()));
    }

    // merged degree = sum of part degrees at the chosen vertices
    Graph k4 = make_complete(4);
    Graph c5 = make_cycle(5);
    Graph joined = identify_vertices({{k4, 2}, {c5, 0}});
    CHECK(joined.n() == 4 + 5 - 1);
    CHECK(joined.degree(0) == 3 + 2);
    CHECK(is_connected(joined));

    CHECK_THROWS_AS(identify_vertices({{k2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(identify_vertices({{make_empty(2), 0}, {k2, 0}}), std::domain_error);
}

TEST_CASE("cut_join") {
    Graph k2 = make_complete(2);
    Graph p4 = cut_join(k2, k2, {{1, 0}});
    CHECK(is_path_shaped(p4));
    CHECK(p4.n() == 4);

    Graph g = fig1_G();
    CHECK(g.n() == 8);
    CHECK(g.m() == 14);
    Graph gp = fig1_Gprime();
    CHECK(gp.m() == 13);

    // G' = G - e1 exactly
    std::uint64_t e1 = std::uint64_t{1} << g.edge_index(3, 7);
    CHECK(spanning_subgraph_minus(g, make_subset(g, e1)) == gp);

    // the cross edges form a cut whose removal splits into the two parts
    Graph k4 = make_complete(4);
    Graph joined = cut_join(k4, k4, {{2, 2}, {3, 3}});
    CHECK(edge_connectivity(joined) <= 2);
    std::uint64_t cross = (std::uint64_t{1} << joined.edge_index(2, 6)) |
                          (std::uint64_t{1} << joined.edge_index(3, 7));
    Graph split = spanning_subgraph_minus(joined, make_subset(joined, cross));
    auto comps = components(split);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].size() == 4);
    CHECK(comps[1].size() == 4);

    CHECK_THROWS_AS(cut_join(k2, k2, {}), std::invalid_argument);
    CHECK_THROWS_AS(cut_join(k2, k2, {{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(cut_join(make_empty(2), k2, {{0, 0}}), std::domain_error);
}

TEST_CASE("tensor expansion shapes") {
    Graph g = tensor_kt(make_complete(4), 3);
    CHECK(g.n() == 12);
    CHECK(g.m() == 18);
    CHECK(degrees_are(g, std::vector<int>(12, 3)));
    CHECK(is_planar(g));
    CHECK(edge_connectivity(g) == 3);

    // P_k (x) K_2 is the path on 2k vertices; same for cycles
    for (int k = 2; k <= 5; ++k) CHECK(is_path_shaped(tensor_kt(make_path(k), 2)));
    for (int k = 3; k <= 5; ++k) CHECK(is_cycle_shaped(tensor_kt(make_cycle(k), 2)));

    // attachment is injective per block: degrees stay <= t - 1 + 1
    Graph pent = tensor_kt(catalog_graph("pentaprism"), 3);
    CHECK(pent.n() == 30);
    CHECK(degrees_are(pent, std::vector<int>(30, 3)));
    CHECK(is_planar(pent));

    CHECK_THROWS_AS(tensor_kt(make_complete(4), 2), std::invalid_argument); // t < max degree
    CHECK_THROWS_AS(tensor_kt(make_complete(5), 3), std::invalid_argument); // not subcubic
    CHECK_THROWS_AS(tensor_kt(make_empty(2), 2), std::domain_error);
}

TEST_CASE("tensor expansion edge counts") {
    for (const auto& [name, h] : catalog_cubic_3ec_planar()) {
        Graph g = tensor_kt(h, 3);
        CHECK(g.n() == 3 * h.n());
        CHECK(g.m() == 3 * h.n() + h.m());
        (void)name;
    }
}

TEST_CASE("catalog graphs are cubic, planar and 3-edge-connected") {
    auto catalog = catalog_cubic_3ec_planar();
    REQUIRE(catalog.size() == 5);
    std::vector<std::pair<std::string, int>> orders = {
        {"k4", 4}, {"prism", 6}, {"cube", 8}, {"pentaprism", 10}, {"dodecahedron", 20}};
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        CHECK(catalog[i].first == orders[i].first);
        const Graph& g = catalog[i].second;
        CHECK(g.n() == orders[i].second);
        CHECK(degrees_are(g, std::vector<int>(static_cast<std::size_t>(g.n()), 3)));
        CHECK(is_planar(g));
        CHECK(edge_connectivity(g) == 3);
    }
    CHECK_THROWS_AS(catalog_graph("petersen"), std::invalid_argument);
}

TEST_CASE("fig1 pair reproduces its reference values") {
    CHECK(y_max(fig1_G()).value == 1);
    CHECK(y_max(fig1_Gprime()).value == 2);
    CHECK(max_partial_dual_genus(fig1_G()) == 7); // n - y = 8 - 1
}
