#pragma once

#include <climits>
#include <functional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

inline constexpr int kEnumerateDefaultCap = 10;

struct EnumOptions {
    long long min_edges = 0;
    long long max_edges = LLONG_MAX;
    // isomorphism-invariant predicate, applied at yield time
    std::function<bool(const SmallGraph&)> filter;
    int cap = kEnumerateDefaultCap;
};

// One canonical representative per isomorphism class on exactly n vertices,
// ordered by canonical key. Unfiltered levels are cached process-wide.
std::vector<SmallGraph> enumerate_graphs(int n, const EnumOptions& opts = {});

// Extends a canonical level by one vertex: every child of every parent, with
// edge-count pruning and an optional hereditary predicate (the caller asserts
// heredity under vertex deletion; F-freeness qualifies). Results canonical,
// deduplicated, sorted by key.
std::vector<SmallGraph> extend_level(const std::vector<SmallGraph>& prev, int n,
                                     long long max_edges,
                                     const std::function<bool(const SmallGraph&)>& hereditary);

}  // namespace turan
