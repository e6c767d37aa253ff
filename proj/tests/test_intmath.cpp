#include <doctest.h>

#include "turan/rational.hpp"

using namespace turan;

TEST_CASE("binomial coefficients") {
    CHECK(binom(0, 0) == 1);
    CHECK(binom(5, 2) == 10);
    CHECK(binom(9, 2) == 36);
    CHECK(binom(50, 2) == 1225);
    CHECK(binom(16, 11) == 4368);
    CHECK(binom(4, 7) == 0);
    CHECK(binom(6, -1) == 0);
    // Pascal recurrence on a grid
    for (int n = 1; n <= 20; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("integer roots bracket exactly") {
    for (long long x = 0; x <= 2000; ++x) {
        Int f = isqrt_floor(x);
        CHECK(f * f <= x);
        CHECK((f + 1) * (f + 1) > x);
    }
    for (unsigned k = 2; k <= 5; ++k)
        for (long long x = 0; x <= 500; ++x) {
            Int f = iroot_floor(x, k);
            CHECK(ipow(f, k) <= x);
            CHECK(ipow(f + 1, k) > x);
            Int c = iroot_ceil(x, k);
            CHECK(ipow(c, k) >= x);
            if (c > 0) CHECK(ipow(c - 1, k) < x);
        }
}

TEST_CASE("rational arithmetic and ordering") {
    Rat a(1, 2), b(1, 3);
    CHECK(a + b == Rat(5, 6));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 6));
    CHECK(a / b == Rat(3, 2));
    CHECK(Rat(-4, -8) == Rat(1, 2));
    CHECK(Rat(4, -8) == Rat(-1, 2));
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(7, 2).ceil() == 4);
    CHECK(Rat(6, 3).is_integer());
    CHECK(Rat(5, 4) < Rat(3, 2));
    CHECK(Rat(3, 2).str() == "3/2");
    CHECK(Rat(4, 2).str() == "2");
    CHECK(Rat(1, 3).pow(3) == Rat(1, 27));
    CHECK_THROWS_AS(Rat(1, 0), BadParameter);
}
