#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/intmath.hpp"

namespace turan {

// Forbidden-subgraph descriptor. Path/Cycle sizes are EDGE counts throughout
// (P_4 has four edges and five vertices).
class Pattern {
public:
    enum class Kind { Path, Cycle, Clique, Biclique, Explicit, Family };

    static Pattern path(int t_edges);
    static Pattern cycle(int t_edges);
    static Pattern clique(int r);
    static Pattern biclique(int s, int t);
    static Pattern explicit_graph(SmallGraph g);
    static Pattern family(std::vector<Pattern> members);

    // Literal syntax: P4, C6, K5, K3,3, K4-, g6:<bytes>, any(P4,C4)
    static Pattern parse(const std::string& literal);
    std::string literal() const;

    Kind kind() const { return kind_; }
    int a() const { return a_; }
    int b() const { return b_; }
    const std::vector<Pattern>& members() const { return members_; }

    // Pattern as an explicit graph with a fixed labeling (Family: throws).
    const SmallGraph& graph() const;
    int vertex_count() const;
    long long edge_count() const;

    bool is_star() const;      // all edges share one vertex (K_{1,m}, incl. K_2)
    bool is_matching() const;  // max degree <= 1
    bool has_edge() const;     // at least one edge (all members, for Family)

    friend bool operator==(const Pattern& x, const Pattern& y) {
        return x.literal() == y.literal();
    }

private:
    Pattern() = default;
    Kind kind_ = Kind::Path;
    int a_ = 0, b_ = 0;
    SmallGraph graph_;
    std::vector<Pattern> members_;
};

// Injective map from pattern vertices to host vertices carrying every
// pattern edge onto a host edge.
struct MatchWitness {
    std::vector<int> map;  // pattern vertex -> host vertex
};

// Subgraph containment (not induced). The witness is the lexicographically
// least vertex map; Family returns the first member in sequence order that
// matches. Total: no preconditions.
std::optional<MatchWitness> contains(const SmallGraph& g, const Pattern& p);
// Decision only; skips witness reconstruction.
bool contains_any(const SmallGraph& g, const Pattern& p);

// Exact maximum number of edges over all simple paths; 0 for edgeless graphs.
// Subset DP for n <= 20, branching DFS above.
int longest_path_edges(const SmallGraph& g);
// Is there a path with exactly t edges (equivalently, >= t)?
bool has_path_with_edges(const SmallGraph& g, int t_edges);

// Copies counted as distinct vertex-subset/edge-set occurrences (embeddings
// divided by pattern automorphisms). Pattern limited to 8 vertices.
Int count_copies(const Pattern& p, const SmallGraph& g);

namespace detail {
// Lexicographically least edge-preserving injective map, if any.
std::optional<std::vector<int>> find_embedding(const SmallGraph& host, const SmallGraph& pat);
Int count_embeddings(const SmallGraph& host, const SmallGraph& pat);
}  // namespace detail

}  // namespace turan
