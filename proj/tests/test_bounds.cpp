#include <doctest.h>

#include "oracles.hpp"
#include "turan/bounds.hpp"

using namespace turan;

TEST_CASE("path bound values") {
    CHECK(ex_upper_eg(complete(6), 3).value == Rat(6));
    CHECK(ex_upper_eg(complete(4), 3).value == Rat(4));
    CHECK(ex_upper_eg(SmallGraph(0), 5).value == Rat(0));
    CHECK(ex_upper_eg(complete(3), 2).value == Rat(3, 2));  // stays rational
    CHECK(ex_upper_eg(complete(5), 4).value == Rat(15, 2));
}

TEST_CASE("C4 bound values") {
    CHECK(ex_upper_ers_c4(complete(4)).value == Rat(6));
    CHECK(ex_upper_ers_c4(complete(9)).value == Rat(18));
    // capped at e(g): a single vertex has no edges
    CHECK(ex_upper_ers_c4(complete(1)).value == Rat(0));
    CHECK(ex_upper_ers_c4(complete(8)).value == Rat((isqrt_floor(Int(512)) + 8) / 2));
}

TEST_CASE("bipartite even-cycle bound") {
    CHECK(ex_upper_nv(9, 9, 2).value == Rat(45));
    CHECK(ex_upper_nv(1, 1, 3).value == Rat(9));
    CHECK(ex_upper_nv(4, 4, 2).value == Rat(16));
    CHECK_THROWS_AS(ex_upper_nv(4, 4, 1), BadParameter);
    // round-up keeps validity
    CHECK(ex_upper_nv(8, 2, 3).value >= Rat(3 * (8 + 2)));
}

TEST_CASE("partite block bound") {
    CHECK(turan_path_block_value(18, 2, 2) == Rat(18));  // n(t-1)
    CHECK(turan_path_block_value(10, 4, 2) == Rat(10) * Rat(3, 2));
    CHECK(turan_path_block_value(12, 3, 2) == Rat(12) * Rat(5, 4));
    // both min candidates agree at r = 2t
    CHECK(turan_path_block_value(10, 4, 2) == Rat(10) * std::min(Rat(3, 2), Rat(1, 2) + Rat(4, 4)));
    CHECK_THROWS_AS(turan_path_block_value(10, 1, 2), BadParameter);
}

TEST_CASE("convexity minimum matches exhaustive partitions") {
    for (long long parts = 1; parts <= 5; ++parts)
        for (long long cap = 0; cap <= 5; ++cap)
            for (long long total = 0; total <= parts * cap; ++total)
                for (int s = 1; s <= 3; ++s) {
                    Int fast = min_sum_binom(total, parts, cap, s);
                    long long slow = oracles::min_sum_binom_exhaustive(total, parts, cap, s);
                    CHECK(fast == slow);
                }
    CHECK_THROWS_AS(min_sum_binom(10, 3, 2, 2), BadParameter);  // 10 > 6
}

TEST_CASE("bipartite C4 budget bound") {
    // K_{2,3}: one degree-2 vertex on the 3-side plus singletons
    CHECK(c4_upper_bipartite(2, 3) == 4);
    CHECK(c4_upper_bipartite(2, 7) == 8);
    CHECK(c4_upper_bipartite(4, 15) == 21);
    CHECK(c4_upper_bipartite(5, 5) == 12);  // the Zarankiewicz value z(5,5)
    CHECK(c4_upper_bipartite(1, 9) == 9);   // stars are C4-free
    CHECK(c4_upper_bipartite(0, 9) == 0);
}
