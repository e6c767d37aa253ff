#pragma once

#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Result of one exhaustive finite check. `violations` holds counterexample
// encodings (cross-edge bitmask in hex and/or graph6); expected empty.
struct LemmaReport {
    std::string lemma;
    long long universe = 0;
    std::vector<std::string> violations;
    double millis = 0;
    std::string note;
    bool pass() const { return violations.empty(); }
};

enum class CrossBlock { K4, K4Minus, C4 };

// Disjunctive conclusions checked over every cross-edge configuration.
enum class CrossConclusion {
    TwoDisjointK4,             // a 4+4 split with K_4 on both sides
    TwoDisjointK4OrK4K4Minus,  // K_4 + K_4 split, or K_4 on one side and K_4^- on the other
    K4AnywhereOrTwoDisjointK4Minus,
};

// Block A on vertices 0..3, block B on 4..7, internal edges fixed as named;
// iterates every cross-edge bitmask with popcount >= threshold.
LemmaReport verify_cross_edge(CrossBlock a, CrossBlock b, int threshold, CrossConclusion conclusion);

// All 15 (2,2,1)-partitions of a 5-set: the exact per-degree averages of
// retained edges, and the 7-class pair cover.
LemmaReport verify_partition_expectation();

// Edge counts and containment facts for the 5-vertex deletion variants.
LemmaReport verify_k5_claims();

// Connected graphs with min degree >= t on 2t < n <= n_max all carry a path
// with 2t edges. t in {2,3}, n_max <= 8.
LemmaReport verify_dirac(int t, int n_max);

// The path bound with its equality clause, against the exact solver:
// ex(K_n, P_t) <= (t-1)n/2 with equality iff t | n, and equality witnesses
// split into disjoint K_t. n_max <= 9, t in {2,3,4}.
LemmaReport verify_erdos_gallai(int n_max, const std::vector<int>& t_set);

// Pendant-star bookkeeping: a block exceeding its neighbor allowance k'
// yields a star forest plus remaining blocks with >= k edges and no P_4.
long long observation_kprime(int x, int y, int z, long long k);
LemmaReport verify_observation_kprime(int x, int y, int z, long long k);

// The full battery at the claimed parameter instances.
std::vector<LemmaReport> verify_all();
// One named verifier; BadParameter for unknown ids.
LemmaReport verify_by_id(const std::string& id);
std::vector<std::string> lemma_ids();

}  // namespace turan
