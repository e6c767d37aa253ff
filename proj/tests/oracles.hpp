#pragma once

// Independent reference implementations used only by tests. Kept brute-force
// on purpose: they must not share code paths with the solvers they check.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "turan/graph.hpp"
#include "turan/pattern.hpp"

namespace oracles {

using turan::Edge;
using turan::Pattern;
using turan::SmallGraph;

// ex(G, F) by enumerating every edge subset. Feasible to ~20 edges.
inline long long ex_by_subsets(const SmallGraph& g, const Pattern& f) {
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    long long best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        int size = __builtin_popcountll(mask);
        if (size <= best) continue;
        SmallGraph s(g.n());
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) s.add_edge(edges[e].first, edges[e].second);
        if (!turan::contains_any(s, f)) best = size;
    }
    return best;
}

// longest path by trying every vertex sequence (n <= 8)
inline int longest_path_by_permutations(const SmallGraph& g) {
    int n = g.n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    int best = 0;
    do {
        int run = 0;
        for (int i = 0; i + 1 < n; ++i) {
            if (g.has_edge(perm[i], perm[i + 1])) {
                ++run;
                best = std::max(best, run);
            } else {
                run = 0;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// exhaustive minimum of sum C(d_i, s) over all capped integer degree
// sequences with the given total
inline long long min_sum_binom_exhaustive(long long total, long long parts, long long cap, int s) {
    auto choose = [](long long n, int k) {
        if (k < 0 || n < k) return 0LL;
        long long r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    long long best = -1;
    std::vector<long long> deg(parts, 0);
    // enumerate weakly decreasing sequences
    std::function<void(long long, long long, long long, long long)> rec =
        [&](long long idx, long long remaining, long long prev_cap, long long acc) {
            if (idx == parts) {
                if (remaining == 0 && (best < 0 || acc < best)) best = acc;
                return;
            }
            long long slots = parts - idx;
            for (long long d = std::min(prev_cap, remaining); d >= 0; --d) {
                if (d * slots < remaining) break;  // cannot place the rest
                rec(idx + 1, remaining - d, d, acc + choose(d, s));
            }
        };
    rec(0, total, cap, 0);
    return best;
}

// isomorphism classes of graphs on exactly n labeled vertices, counted by
// brute-force labeled enumeration and permutation dedup (n <= 6)
inline long long count_classes_by_brute_force(int n) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    int m = static_cast<int>(pairs.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::set<std::uint64_t> reps;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        std::uint64_t least = ~std::uint64_t(0);
        std::vector<int> p(perm);
        std::sort(p.begin(), p.end());
        do {
            std::uint64_t relabeled = 0;
            for (int e = 0; e < m; ++e) {
                if (!((mask >> e) & 1)) continue;
                int a = p[pairs[e].first], b = p[pairs[e].second];
                if (a > b) std::swap(a, b);
                for (int e2 = 0; e2 < m; ++e2)
                    if (pairs[e2].first == a && pairs[e2].second == b) {
                        relabeled |= std::uint64_t(1) << e2;
                        break;
                    }
            }
            least = std::min(least, relabeled);
        } while (std::next_permutation(p.begin(), p.end()));
        reps.insert(least);
    }
    return static_cast<long long>(reps.size());
}

// ex^-1(k, f) over ALL labeled graphs within the caps, with ex computed by
// edge-subset enumeration; fully independent of the canonical machinery
inline long long inverse_by_labeled_brute_force(long long k, const Pattern& f, int max_vertices,
                                                long long max_edges) {
    long long best = 0;
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<Edge> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        int m = static_cast<int>(pairs.size());
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
            long long edges = __builtin_popcountll(mask);
            if (edges > max_edges || edges <= best) continue;
            SmallGraph g(n);
            for (int e = 0; e < m; ++e)
                if ((mask >> e) & 1) g.add_edge(pairs[e].first, pairs[e].second);
            if (g.min_degree() < 1) continue;  // isolated vertices never matter
            if (ex_by_subsets(g, f) < k) best = edges;
        }
    }
    return best;
}

}  // namespace oracles
