#include <doctest.h>

#include "turan/graph.hpp"

using namespace turan;

TEST_CASE("basic constructors and invariants") {
    SmallGraph k1 = complete(1);
    CHECK(k1.n() == 1);
    CHECK(k1.edge_count() == 0);

    SmallGraph p4 = path_graph(4);
    CHECK(p4.n() == 5);
    CHECK(p4.edge_count() == 4);

    SmallGraph t93 = turan_graph(9, 3);
    CHECK(t93.edge_count() == 27);  // K_{3,3,3}
    CHECK(t93.degree(0) == 6);

    SmallGraph c5 = cycle_graph(5);
    CHECK(c5.min_degree() == 2);
    CHECK(c5.max_degree() == 2);

    CHECK(k4_minus().edge_count() == 5);
    CHECK(biclique(3, 3).edge_count() == 9);

    CHECK_THROWS_AS(turan_graph(5, 0), BadParameter);
    CHECK_THROWS_AS(cycle_graph(2), BadParameter);
    CHECK_THROWS_AS(SmallGraph(65), CapacityExceeded);
}

TEST_CASE("turan graph edge count matches the closed forms") {
    for (int n = 1; n <= 30; ++n)
        for (int r = 1; r <= n; ++r) {
            CHECK(turan_graph(n, r).edge_count() == turan_edge_count(n, r));
            // the floor form holds exactly in its regime (always for r <= 7)
            long long s = n % r;
            if (s * (r - s) < 2 * r) {
                long long floor_form = static_cast<long long>(r - 1) * n * n / (2 * r);
                CHECK(turan_graph(n, r).edge_count() == floor_form);
            }
        }
}

TEST_CASE("every constructor output validates") {
    // validate() throws on broken symmetry/loops; these exercise it
    for (const SmallGraph& g :
         {complete(6), biclique(2, 5), turan_graph(10, 4), path_graph(3), cycle_graph(6),
          k4_minus(), k5_minus_edge(), k5_minus_two_adjacent(), k5_minus_two_disjoint(),
          k5_minus_triangle(), k5_minus_path3(), k5_minus_edge_plus_path2(), k5_minus_star3()})
        CHECK_NOTHROW(g.validate());
}

TEST_CASE("disjoint union and vertex identification") {
    SmallGraph two_triangles = disjoint_union(complete(3), complete(3));
    CHECK(two_triangles.n() == 6);
    CHECK(two_triangles.edge_count() == 6);
    CHECK_FALSE(two_triangles.is_connected());

    SmallGraph bowtie = identify_vertex(complete(3), 0, complete(3), 0);
    CHECK(bowtie.n() == 5);
    CHECK(bowtie.edge_count() == 6);
    CHECK(bowtie.is_connected());
    CHECK(bowtie.degree(0) == 4);
}

TEST_CASE("bipartition detection") {
    std::uint64_t s0, s1;
    CHECK(biclique(3, 4).bipartition(s0, s1));
    CHECK(__builtin_popcountll(s0) + __builtin_popcountll(s1) == 7);
    CHECK(cycle_graph(6).bipartition(s0, s1));
    CHECK_FALSE(cycle_graph(5).bipartition(s0, s1));
    CHECK_FALSE(complete(3).bipartition(s0, s1));
}

TEST_CASE("edge sets stay inside their host") {
    SmallGraph host = cycle_graph(4);
    EdgeSet es = edge_set_from_edges(host, {{0, 1}, {2, 3}});
    CHECK(es.size() == 2);
    SmallGraph sub = subgraph_of(host, es);
    CHECK(sub.edge_count() == 2);
    CHECK_THROWS_AS(edge_set_from_edges(host, {{0, 2}}), BadParameter);  // chord not in C4
    CHECK_THROWS_AS(edge_set_from_edges(host, {{0, 1}, {0, 1}}), BadParameter);
}
