#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "turan/errors.hpp"

namespace turan {

using Int = boost::multiprecision::cpp_int;

inline Int ipow(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

// Binomial coefficient, 0 when k < 0 or k > n.
inline Int binom(const Int& n, long long k) {
    if (k < 0 || n < k) return 0;
    Int r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // divides exactly: product of i+1 consecutive integers
    }
    return r;
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw BadParameter("isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

// floor(n^(1/k)), n >= 0, k >= 1.
inline Int iroot_floor(const Int& n, unsigned k) {
    if (n < 0 || k == 0) throw BadParameter("iroot: bad arguments");
    if (n <= 1 || k == 1) return n;
    Int lo = 0, hi = 1;
    while (ipow(hi, k) <= n) hi <<= 1;
    while (lo + 1 < hi) {
        Int mid = (lo + hi) / 2;
        if (ipow(mid, k) <= n) lo = mid;
        else hi = mid;
    }
    return lo;
}

// ceil(n^(1/k)).
inline Int iroot_ceil(const Int& n, unsigned k) {
    Int f = iroot_floor(n, k);
    return ipow(f, k) == n ? f : f + 1;
}

inline long long to_ll(const Int& n) { return n.convert_to<long long>(); }

}  // namespace turan
