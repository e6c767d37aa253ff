#pragma once

#include <string>
#include <vector>

#include "turan/bounds.hpp"
#include "turan/graph.hpp"
#include "turan/pattern.hpp"

namespace turan {

// Parameterized extremal host family with a closed-form edge count.
struct HostFamily {
    enum class Kind { Complete, Turan, Biclique };
    Kind kind;
    long long p1 = 0, p2 = 0;  // Complete: n | Turan: n, r | Biclique: a, b
    Rat closed_form_edges;
    std::string family;  // "complete" | "turan" | "biclique"
    std::string anchor;
    std::vector<std::pair<std::string, std::string>> params;  // name -> value

    bool generable() const;
    SmallGraph instance() const;  // CapacityExceeded above 64 vertices
    long long vertex_count() const;
};

struct FamilyResult {
    HostFamily host;
    BoundRecord lower;  // closed-form edge count, pending certification at k
};

// Lower-bound host for ex^-1(k, f): complete graphs for odd paths, Turan
// graphs for even paths, bicliques for C_4 / K_{s,t} / longer even cycles.
// InfiniteInverse for matchings and stars; BadParameter below feasibility.
FamilyResult family_for(long long k, const Pattern& f);

// Leading-order value of ex(T(n,r), P_{2t}) (no error term); n >= 2t, r >= 2.
Rat prop_pr_formula(long long n, int r, int t);

// The P_{2t}-free subgraph of T(n,r) built in the matching lower bound:
// two star bundles for r <= t, floor(n/2t) balanced blocks for r > t.
SmallGraph prop_pr_witness(long long n, int r, int t);

struct EvenCycleConstants {
    bool odd_branch;  // (alpha, beta) for odd t, (gamma, delta) for even t
    Rat c1, c2;       // part-size coefficients
    Rat threshold;    // 1/(2t-3)
};

// Grid search maximizing c1*c2 subject to the strict constant inequality,
// re-verified in exact arithmetic. Denominators stay <= 10^4.
EvenCycleConstants even_cycle_constants(int t);

struct SearchFailed : Error {
    using Error::Error;
};

// Conjectured asymptotics, quarantined: never eligible for certification.
std::vector<BoundRecord> conjecture_ledger(long long k, const Pattern& f);

}  // namespace turan
