#include <doctest.h>

#include "oracles.hpp"
#include "turan/canonical.hpp"
#include "turan/enumerate.hpp"

using namespace turan;

TEST_CASE("class counts match the known sequence") {
    const long long expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n)
        CHECK(static_cast<long long>(enumerate_graphs(n).size()) == expected[n]);
    // independent labeled brute force at small n
    for (int n = 0; n <= 5; ++n)
        CHECK(oracles::count_classes_by_brute_force(n) ==
              static_cast<long long>(enumerate_graphs(n).size()));
}

TEST_CASE("filters and edge windows") {
    EnumOptions only_k3;
    only_k3.min_edges = 3;
    only_k3.max_edges = 3;
    auto got = enumerate_graphs(3, only_k3);
    REQUIRE(got.size() == 1);
    CHECK(got[0] == canonical_form(complete(3)).graph);

    EnumOptions connected;
    connected.filter = [](const SmallGraph& g) { return g.is_connected(); };
    CHECK(enumerate_graphs(4, connected).size() == 6);

    CHECK(enumerate_graphs(1).size() == 1);
    CHECK_THROWS_AS(enumerate_graphs(11), CapacityExceeded);
}

TEST_CASE("deterministic output order") {
    auto a = enumerate_graphs(5);
    auto b = enumerate_graphs(5);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    // sorted by canonical key
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        CHECK(canonical_key(a[i]) < canonical_key(a[i + 1]));
}

TEST_CASE("hereditary extension keeps only filtered classes") {
    // triangle-free levels: 0..4 vertices give 1,1,2,3,7 classes
    auto triangle_free = [](const SmallGraph& g) {
        return !contains_any(g, Pattern::clique(3));
    };
    std::vector<SmallGraph> level = {SmallGraph(0)};
    const long long expected[] = {1, 1, 2, 3, 7};
    for (int n = 0; n <= 4; ++n) {
        if (n > 0) level = extend_level(level, n, LLONG_MAX, triangle_free);
        CHECK(static_cast<long long>(level.size()) == expected[n]);
    }
}
