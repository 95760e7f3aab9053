#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pardual/corpus.hpp"
#include "pardual/families.hpp"
#include "pardual/subset_opt.hpp"
#include "pardual/verify.hpp"

using namespace pardual;

TEST_CASE("y_value arithmetic") {
    Graph k4 = make_complete(4);
    CHECK(y_value(k4, make_subset(k4, 0)) == 1);
    CHECK(y_value(k4, make_subset(k4, 0b111111)) == 1); // 2*4 - 6 - 1

    Graph gp = fig1_Gprime();
    int cross = gp.edge_index(2, 6); // the bridge between the two K_4s
    REQUIRE(cross >= 0);
    CHECK(y_value(gp, make_subset(gp, std::uint64_t{1} << cross)) == 2);

    Graph c6 = make_cycle(6);
    CHECK_THROWS_AS(y_value(c6, make_subset(k4, 0)), std::invalid_argument);
    Graph e3 = make_empty(3);
    CHECK_THROWS_AS(y_value(e3, make_subset(e3, 0)), std::domain_error);
}

TEST_CASE("y_max point values and witnesses") {
    auto k4 = y_max(make_complete(4));
    CHECK(k4.value == 1);
    CHECK(k4.witness.bits == 0); // the empty set is the unique smallest witness

    auto c6 = y_max(make_cycle(6));
    CHECK(c6.value == 5);
    CHECK(c6.witness.bits == 0b111111); // all six edges

    CHECK(y_max(fig1_G()).value == 1);
    CHECK(y_max(fig1_G()).witness.bits == 0);
    CHECK(y_max(fig1_Gprime()).value == 2);

    for (int n = 3; n <= 9; ++n) CHECK(y_max(make_star(n)).value == n);
    for (int n = 2; n <= 9; ++n) CHECK(y_max(make_path(n)).value == n);
    for (int n = 3; n <= 9; ++n) CHECK(y_max(make_cycle(n)).value == n - 1);
    CHECK(y_max(make_path(1)).value == 1); // K_1 via the empty subset

    // fig1_Gprime: the smallest witness is exactly the cut edge
    Graph gp = fig1_Gprime();
    auto res = y_max(gp);
    CHECK(res.witness.indices() == std::vector<int>{gp.edge_index(2, 6)});
}

TEST_CASE("y_max equals the unpruned sweep, witness included") {
    for_each_connected_graph(5, [&](const Graph& g) {
        auto fast = y_max(g);
        auto brute = oracle::brute_y_max(g);
        CHECK(fast.value == brute.value);
        CHECK(fast.witness.bits == brute.witness);
        return true;
    });
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; ++i) {
        int n = 5 + static_cast<int>(rng() % 4);
        int m = std::min(n * (n - 1) / 2, n - 1 + static_cast<int>(rng() % 7));
        Graph g = random_connected_graph(n, m, rng);
        auto fast = y_max(g);
        auto brute = oracle::brute_y_max(g);
        CHECK(fast.value == brute.value);
        CHECK(fast.witness.bits == brute.witness);
        CHECK(y_value(g, fast.witness) == fast.value);
    }
}

TEST_CASE("nebesky deficiency point values") {
    CHECK(nebesky_deficiency(make_path(6)).value == 0);
    CHECK(nebesky_deficiency(make_star(7)).value == 0);
    for (int n = 3; n <= 8; ++n) CHECK(nebesky_deficiency(make_cycle(n)).value == 1);
    CHECK(nebesky_deficiency(make_complete(4)).value == 1);
}

TEST_CASE("nebesky equals the unpruned sweep") {
    for_each_connected_graph(5, [&](const Graph& g) {
        auto fast = nebesky_deficiency(g);
        auto brute = oracle::brute_nebesky(g);
        CHECK(fast.value == brute.value);
        CHECK(fast.witness.bits == brute.witness);
        return true;
    });
    std::mt19937_64 rng(47);
    for (int i = 0; i < 40; ++i) {
        int n = 5 + static_cast<int>(rng() % 4);
        int m = std::min(n * (n - 1) / 2, n - 1 + static_cast<int>(rng() % 7));
        Graph g = random_connected_graph(n, m, rng);
        auto fast = nebesky_deficiency(g);
        auto brute = oracle::brute_nebesky(g);
        CHECK(fast.value == brute.value);
        CHECK(fast.witness.bits == brute.witness);
    }
}

TEST_CASE("pruned search equals the unpruned sweep on every n=6 graph with m <= 12") {
    long long index = 0;
    for_each_connected_graph(6, [&](const Graph& g) {
        if (g.m() > 12) return true;
        ++index;
        auto fast = y_max(g);
        auto brute = oracle::brute_y_max(g);
        CHECK(fast.value == brute.value);
        CHECK(fast.witness.bits == brute.witness);
        if (index % 3 == 0) { // the deficiency form, sampled for time
            auto nfast = nebesky_deficiency(g);
            auto nbrute = oracle::brute_nebesky(g);
            CHECK(nfast.value == nbrute.value);
            CHECK(nfast.witness.bits == nbrute.witness);
        }
        return true;
    });
    CHECK(index > 20000);
}

TEST_CASE("nebesky_value arithmetic") {
    Graph c5 = make_cycle(5);
    CHECK(nebesky_value(c5, make_subset(c5, 0)) == 1);     // one odd-Betti component
    CHECK(nebesky_value(c5, make_subset(c5, 0b1)) == -1);  // c=1, b=0, |A|=1
    Graph p4 = make_path(4);
    CHECK(nebesky_value(p4, make_subset(p4, 0)) == 0);
}

TEST_CASE("capacity guard") {
    std::mt19937_64 rng(49);
    Graph big = random_connected_graph(10, 40, rng);
    CHECK_THROWS_AS(y_max(big, 30), capacity_error);
    CHECK_THROWS_AS(nebesky_deficiency(big, 30), capacity_error);
}

TEST_CASE("max partial-dual genus formula") {
    CHECK(max_partial_dual_genus(make_complete(4)) == 3);
    CHECK(max_partial_dual_genus(make_cycle(4)) == 1);
    CHECK(max_partial_dual_genus(catalog_graph("prism")) == 4);
    CHECK(max_partial_dual_genus(catalog_graph("cube")) == 5);
    CHECK_THROWS_AS(max_partial_dual_genus(make_complete(5)), std::domain_error);
    CHECK_THROWS_AS(max_partial_dual_genus(make_empty(2)), std::domain_error);
}

TEST_CASE("quotient graph") {
    Graph c6 = make_cycle(6);
    auto q0 = quotient_graph(c6, make_subset(c6, 0));
    CHECK(q0.graph.n() == 1);
    CHECK(q0.graph.m() == 0);

    Graph c4 = make_cycle(4);
    auto q = quotient_graph(c4, make_subset(c4, 0b1111));
    CHECK(q.graph == c4); // all singletons: the quotient is the cycle itself
    CHECK(q.origin_edges.size() == 4);

    Graph gp = fig1_Gprime();
    int cross = gp.edge_index(2, 6);
    auto q2 = quotient_graph(gp, make_subset(gp, std::uint64_t{1} << cross));
    CHECK(q2.graph == make_complete(2));
    CHECK(q2.origin_edges[0] == std::vector<int>{cross});
    CHECK(q2.component_vertices.size() == 2);

    // parallel edges collapse: two K_4s joined by two cross edges
    Graph g = fig1_G();
    std::uint64_t both = (std::uint64_t{1} << g.edge_index(2, 6)) |
                         (std::uint64_t{1} << g.edge_index(3, 7));
    auto q3 = quotient_graph(g, make_subset(g, both));
    CHECK(q3.graph == make_complete(2));
    CHECK(q3.origin_edges[0].size() == 2);
}

TEST_CASE("quotient of a smallest witness has |E(G_A)| = |A| when y >= 2") {
    std::mt19937_64 rng(53);
    int tested = 0;
    for (int i = 0; i < 80; ++i) {
        int n = 4 + static_cast<int>(rng() % 5);
        int m = std::min(n * (n - 1) / 2, n - 1 + static_cast<int>(rng() % 6));
        Graph g = random_connected_graph(n, m, rng);
        auto res = y_max(g);
        if (res.value < 2) continue;
        ++tested;
        auto q = quotient_graph(g, res.witness);
        CHECK(q.graph.m() == res.witness.count());
        CHECK(is_connected(q.graph));
    }
    CHECK(tested > 5);
}

TEST_CASE("optimal-structure checks pass on optimizer output") {
    auto check = [](const Graph& g) {
        auto res = y_max(g);
        StructureReport rep = check_optimal_structure(g, res);
        CHECK(rep.pass());
        CHECK(rep.violations.empty());
    };
    check(make_complete(4));
    check(fig1_G());
    check(fig1_Gprime());
    check(make_cycle(6));
    check(make_star(6));
    for_each_connected_graph(5, [&](const Graph& g) {
        auto res = y_max(g);
        CHECK(check_optimal_structure(g, res).pass());
        return true;
    });
}

TEST_CASE("structure checks flag a fabricated non-optimal witness") {
    // pretend the middle edge of P_4 were an optimal witness of value 2
    Graph p4 = make_path(4);
    SubsetOptResult fake;
    fake.value = 2;
    fake.witness = make_subset(p4, std::uint64_t{1} << 1);
    StructureReport rep = check_optimal_structure(p4, fake);
    CHECK_FALSE(rep.pass()); // the components are P_2s with y = 2, not 1
}

TEST_CASE("lemma 2.5 bound check") {
    Graph c6 = make_cycle(6);
    BoundCheck b = lemma25_bound_check(c6, y_max(c6));
    CHECK(b.applicable);
    CHECK(b.pass);
    CHECK(b.slack == 0); // lambda=2: y = 5 = c - 1 with c = 6

    Graph p4 = make_path(4);
    BoundCheck bp = lemma25_bound_check(p4, y_max(p4));
    CHECK(bp.applicable);
    CHECK(bp.slack == 0); // lambda=1: y = 4 = c

    Graph prism = catalog_graph("prism");
    BoundCheck br = lemma25_bound_check(prism, y_max(prism));
    CHECK(br.applicable);
    CHECK(br.pass);
    CHECK(br.slack == 0); // lambda=3: y = 2 = floor(6/2) - 1

    Graph k4 = make_complete(4);
    BoundCheck bk = lemma25_bound_check(k4, y_max(k4));
    CHECK_FALSE(bk.applicable); // y = 1
}

TEST_CASE("search bookkeeping looks sane") {
    auto res = y_max(make_cycle(8));
    CHECK(res.subsets_visited >= 1);
    CHECK(res.subsets_visited + res.subsets_pruned > 1);
}
