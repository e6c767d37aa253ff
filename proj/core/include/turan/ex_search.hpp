#pragma once

#include <optional>

#include "turan/bounds.hpp"
#include "turan/graph.hpp"
#include "turan/pattern.hpp"

namespace turan {

struct Attestation {
    enum class Kind { ExhaustiveSearch, BoundMatch };
    Kind kind = Kind::ExhaustiveSearch;
    std::string bound_name;  // which formula closed the search, for BoundMatch
};

enum class SolveStatus { Complete, BudgetExhausted, TargetReached };

// Value of ex(G,F) with a witness F-free subgraph. The attestation is absent
// exactly when the node budget ran out and only the incumbent is known.
struct ExResult {
    long long value = 0;
    EdgeSet witness;
    std::optional<Attestation> attestation;
    long long nodes_explored = 0;
    SolveStatus status = SolveStatus::Complete;
    std::vector<BoundRecord> bounds;  // formula bounds evaluated on the host
};

struct ExOptions {
    long long budget = 10'000'000;  // node expansions
    std::uint64_t seed = 1;
    int restarts = 32;       // seeded greedy incumbents before the search
    long long stop_at = -1;  // decision mode: stop once the incumbent reaches this
    long long edge_cap_generic = 40;
    long long edge_cap_path = 128;  // paths prune well, so a higher cap is usable
    int threads = 1;                // accepted for interface symmetry; value-neutral
};

// Exact maximum F-free subgraph. Strategy: if every F-free isomorphism class
// on <= v(G) vertices can be enumerated cheaply, scan classes by decreasing
// edge count for one embeddable into the host; otherwise branch and bound on
// the edges of one found copy per node, pruned by formula upper bounds and a
// greedy disjoint-copy packing.
ExResult ex_exact(const SmallGraph& g, const Pattern& f, const ExOptions& opts = {});

}  // namespace turan
