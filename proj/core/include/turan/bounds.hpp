#pragma once

#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/rational.hpp"

namespace turan {

// A numeric bound with provenance. Values are exact rationals; anything
// irrational is rounded in the direction that keeps the record valid and
// flagged in the note.
struct BoundRecord {
    enum class Kind { Lower, Upper };
    enum class Provenance { Formula, Certificate, Exact, Conjectured };
    enum class Caveat { ExactAtK, Asymptotic, Conjectured };

    Kind kind;
    Rat value;
    Provenance provenance;
    std::string name;    // stable identifier, e.g. "erdos-gallai"
    std::string anchor;  // provenance string printed next to the number
    Caveat caveat = Caveat::ExactAtK;
    std::string note;
};

// ex(G, P_t) <= (t-1) v(G) / 2, exact rational. Valid for every host on
// v(G) vertices.
BoundRecord ex_upper_eg(const SmallGraph& g, int path_edges);

// ex(n, C_4) <= n^{3/2}/2 + n/2, floored to an integer and capped at e(g).
BoundRecord ex_upper_ers_c4(const SmallGraph& g);

// C_{2t}-free subgraphs of a bipartite host inside K_{m,n}; the irrational
// power is rounded up so the record stays a valid upper bound. t >= 2.
BoundRecord ex_upper_nv(long long m, long long n, int t);

// ex(T(n,r), P_{2t}): n(t-1) for 2 <= r <= t, and
// n min{(2t-1)/2, (2t-3)/2 + r/(2t)} for r > t. The degree-peeling argument
// gives these without any error term, so they certify at every n.
Rat turan_path_block_value(long long n, int r, int t);
BoundRecord ex_upper_turan_block(long long n, int r, int t);

// min over integer degree sequences (parts values in [0, cap], summing to
// `total`) of sum_i C(d_i, s). Convexity makes the balanced sequence optimal;
// exact at every size, unlike the real-valued convexity step.
Int min_sum_binom(long long total, long long parts, long long cap, int s);

// Largest edge count m for which a C4-free subgraph can live inside a
// bipartite host with parts (a, b): cherries on either side may not exceed
// the opposite side's pair budget.
long long c4_upper_bipartite(long long a, long long b);

std::string bound_kind_name(BoundRecord::Kind k);
std::string bound_caveat_name(BoundRecord::Caveat c);
std::string bound_provenance_name(BoundRecord::Provenance p);

}  // namespace turan
