#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "turan/enumerate.hpp"
#include "turan/pattern.hpp"

using namespace turan;

TEST_CASE("pattern literals parse and print") {
    CHECK(Pattern::parse("P4").kind() == Pattern::Kind::Path);
    CHECK(Pattern::parse("P4").a() == 4);
    CHECK(Pattern::parse("C6").a() == 6);
    CHECK(Pattern::parse("K5").kind() == Pattern::Kind::Clique);
    CHECK(Pattern::parse("K3,3").kind() == Pattern::Kind::Biclique);
    CHECK(Pattern::parse("K4-").graph().edge_count() == 5);
    CHECK(Pattern::parse("g6:Bw").graph().edge_count() == 3);
    Pattern fam = Pattern::parse("any(P4,C4)");
    REQUIRE(fam.kind() == Pattern::Kind::Family);
    CHECK(fam.members().size() == 2);
    CHECK(fam.literal() == "any(P4,C4)");
    Pattern fam2 = Pattern::parse("any(K3,3,P5)");
    REQUIRE(fam2.members().size() == 2);
    CHECK(fam2.members()[0].kind() == Pattern::Kind::Biclique);
    CHECK_THROWS_AS(Pattern::parse("Q7"), BadParameter);
    CHECK_THROWS_AS(Pattern::parse("C2"), BadParameter);
    for (const char* lit : {"P4", "C6", "K5", "K3,3", "K4-", "any(P4,C4)"})
        CHECK(Pattern::parse(Pattern::parse(lit).literal()).literal() == Pattern::parse(lit).literal());
}

TEST_CASE("star and matching recognition") {
    CHECK(Pattern::path(1).is_star());   // K_2 = K_{1,1}
    CHECK(Pattern::path(2).is_star());   // K_{1,2}
    CHECK(Pattern::biclique(1, 7).is_star());
    CHECK(Pattern::clique(2).is_star());
    CHECK_FALSE(Pattern::path(3).is_star());
    CHECK(Pattern::path(1).is_matching());
    CHECK_FALSE(Pattern::path(2).is_matching());
    SmallGraph m2 = disjoint_union(complete(2), complete(2));
    CHECK(Pattern::explicit_graph(m2).is_matching());
    CHECK_FALSE(Pattern::explicit_graph(m2).is_star());
}

TEST_CASE("containment examples") {
    CHECK_FALSE(contains(complete(3), Pattern::path(3)).has_value());
    CHECK_FALSE(contains(biclique(2, 5), Pattern::path(5)).has_value());
    auto w = contains(k4_minus(), Pattern::cycle(4));
    REQUIRE(w.has_value());
    // the witness maps cycle edges onto host edges
    const SmallGraph& c4 = Pattern::cycle(4).graph();
    for (auto [i, j] : c4.edges()) CHECK(k4_minus().has_edge(w->map[i], w->map[j]));
    // and is injective
    std::set<int> image(w->map.begin(), w->map.end());
    CHECK(image.size() == w->map.size());

    CHECK(contains(complete(5), Pattern::clique(4)).has_value());
    CHECK_FALSE(contains(biclique(3, 3), Pattern::clique(3)).has_value());
    CHECK(contains(biclique(3, 3), Pattern::biclique(2, 3)).has_value());
    CHECK_FALSE(contains(biclique(2, 5), Pattern::biclique(3, 3)).has_value());
    CHECK(contains(cycle_graph(6), Pattern::family({Pattern::clique(3), Pattern::cycle(6)})).has_value());
    CHECK_FALSE(contains(path_graph(3), Pattern::family({Pattern::clique(3), Pattern::cycle(4)})).has_value());
}

TEST_CASE("witness is the lexicographically least map") {
    // clique K_3 inside K_4: least map is (0,1,2)
    auto w = contains(complete(4), Pattern::clique(3));
    REQUIRE(w.has_value());
    CHECK(w->map == std::vector<int>{0, 1, 2});
    // path of 2 edges in a star centered at 3 (star K_{1,3} on {3;0,1,2})
    SmallGraph star(4);
    star.add_edge(3, 0);
    star.add_edge(3, 1);
    star.add_edge(3, 2);
    auto pw = contains(star, Pattern::path(2));
    REQUIRE(pw.has_value());
    CHECK(pw->map == std::vector<int>{0, 3, 1});
}

TEST_CASE("longest path examples and oracle equality") {
    CHECK(longest_path_edges(cycle_graph(5)) == 4);
    CHECK(longest_path_edges(biclique(1, 3)) == 2);
    CHECK(longest_path_edges(turan_graph(6, 3)) == 5);
    CHECK(longest_path_edges(SmallGraph(3)) == 0);
    for (int n = 0; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n))
            CHECK(longest_path_edges(g) == oracles::longest_path_by_permutations(g));
}

TEST_CASE("explicit matcher agrees with the specialized deciders") {
    std::vector<std::pair<Pattern, Pattern>> pairs;
    for (int t = 1; t <= 5; ++t)
        pairs.emplace_back(Pattern::path(t), Pattern::explicit_graph(path_graph(t)));
    for (int t = 3; t <= 6; ++t)
        pairs.emplace_back(Pattern::cycle(t), Pattern::explicit_graph(cycle_graph(t)));
    for (int r = 2; r <= 4; ++r)
        pairs.emplace_back(Pattern::clique(r), Pattern::explicit_graph(complete(r)));
    for (auto [s, t] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {1, 4}})
        pairs.emplace_back(Pattern::biclique(s, t), Pattern::explicit_graph(biclique(s, t)));
    for (int n = 0; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n))
            for (const auto& [fast, slow] : pairs)
                CHECK(contains_any(g, fast) == contains_any(g, slow));
}

TEST_CASE("containment is monotone under supergraphs") {
    std::mt19937_64 rng(7);
    std::vector<Pattern> pats = {Pattern::path(3), Pattern::cycle(4), Pattern::clique(3),
                                 Pattern::biclique(2, 2)};
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        SmallGraph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) g.add_edge(i, j);
        SmallGraph super = g;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 4 == 0) super.add_edge(i, j);
        for (const auto& p : pats)
            if (contains_any(g, p)) CHECK(contains_any(super, p));
    }
}

TEST_CASE("copy counting") {
    CHECK(count_copies(Pattern::cycle(4), biclique(2, 2)) == 1);
    CHECK(count_copies(Pattern::clique(3), complete(4)) == 4);
    CHECK(count_copies(Pattern::biclique(2, 2), biclique(2, 3)) == 3);
    CHECK(count_copies(Pattern::path(2), complete(3)) == 3);   // cherries in a triangle
    CHECK(count_copies(Pattern::clique(2), complete(5)) == 10);
    CHECK(count_copies(Pattern::cycle(5), cycle_graph(5)) == 1);
    CHECK_THROWS_AS(count_copies(Pattern::clique(9), complete(10)), CapacityExceeded);
    // positivity agrees with containment
    for (int n = 0; n <= 5; ++n)
        for (const auto& g : enumerate_graphs(n))
            for (const auto& p : {Pattern::path(3), Pattern::cycle(4), Pattern::clique(3)})
                CHECK((count_copies(p, g) > 0) == contains_any(g, p));
}
