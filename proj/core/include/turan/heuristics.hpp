#pragma once

#include <cstdint>

#include "turan/graph.hpp"
#include "turan/pattern.hpp"
#include "turan/rational.hpp"

namespace turan {

// Edge-keeping probability k^{-1/s}/2 used by the deletion heuristic.
double deletion_keep_probability(int s, long long k);

// Random sparsification at p = k^{-1/s}/2 followed by deleting one edge from
// every surviving copy of K_{s,s}; best of `trials` seeded attempts. The
// result never contains the forbidden biclique. Deterministic in (seed,
// trials) regardless of thread count.
EdgeSet heuristic_deletion(const SmallGraph& g, const Pattern& f, long long k,
                           std::uint64_t seed, int trials = 1, int threads = 1);

// Expected edges kept by a uniform bijection onto a template:
// 2 e(G) e(H) / (v (v-1)).
Rat template_expected_edges(const SmallGraph& g, const SmallGraph& templ);

struct TemplateStats {
    EdgeSet best;
    double mean_kept = 0;
    long long trials = 0;
};

// Keep the edges of g that a uniformly random bijection maps onto template
// edges; best over `trials` bijections, plus the empirical mean for
// calibration. The template must have the same vertex count as g.
TemplateStats heuristic_template(const SmallGraph& g, const SmallGraph& templ,
                                 long long trials, std::uint64_t seed, int threads = 1);

}  // namespace turan
