#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;  // (i, j) with i < j

// Undirected simple graph on at most 64 labeled vertices, one adjacency
// bitmask per vertex. Immutable by convention once built (the mutating
// members are for constructors and the solvers' scratch copies).
class SmallGraph {
public:
    SmallGraph() : n_(0) { rows_.fill(0); }
    explicit SmallGraph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices) throw CapacityExceeded("graph on " + std::to_string(n) + " vertices");
        rows_.fill(0);
    }

    int n() const { return n_; }
    std::uint64_t row(int v) const { return rows_[v]; }

    bool has_edge(int i, int j) const { return (rows_[i] >> j) & 1; }

    void add_edge(int i, int j) {
        if (i == j) throw BadParameter("loop edge");
        if (i < 0 || j < 0 || i >= n_ || j >= n_) throw BadParameter("edge endpoint out of range");
        rows_[i] |= std::uint64_t(1) << j;
        rows_[j] |= std::uint64_t(1) << i;
    }
    void remove_edge(int i, int j) {
        rows_[i] &= ~(std::uint64_t(1) << j);
        rows_[j] &= ~(std::uint64_t(1) << i);
    }

    int degree(int v) const { return __builtin_popcountll(rows_[v]); }
    int min_degree() const;
    int max_degree() const;

    long long edge_count() const {
        long long s = 0;
        for (int v = 0; v < n_; ++v) s += degree(v);
        return s / 2;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> e;
        for (int i = 0; i < n_; ++i) {
            std::uint64_t m = rows_[i] >> (i + 1) << (i + 1);
            while (m) {
                int j = __builtin_ctzll(m);
                m &= m - 1;
                e.emplace_back(i, j);
            }
        }
        return e;
    }

    bool is_connected() const;
    // 2-colorable check; on success fills side masks (component roots on side 0).
    bool bipartition(std::uint64_t& side0, std::uint64_t& side1) const;

    SmallGraph complement() const;
    SmallGraph induced(std::uint64_t vertex_mask) const;
    // Keep only vertices of degree >= 1, relabeling to the front.
    SmallGraph without_isolated() const;
    SmallGraph relabeled(const std::vector<int>& perm) const;  // vertex v -> perm[v]

    // Symmetry, no loops, no bits at positions >= n. Constructors call this;
    // cheap enough to run unconditionally.
    void validate() const;

    friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.rows_[v] != b.rows_[v]) return false;
        return true;
    }

private:
    int n_;
    std::array<std::uint64_t, kMaxVertices> rows_;
};

// --- constructors -----------------------------------------------------------

SmallGraph complete(int n);
SmallGraph biclique(int s, int t);
// Balanced complete r-partite graph, parts contiguous in vertex index,
// ceil-sized parts first.
SmallGraph turan_graph(int n, int r);
// e(T(n,r)), exactly. Coincides with floor((r-1)/(2r) n^2) whenever
// s(r-s) < 2r for s = n mod r, which covers every r <= 7 and every r | n.
long long turan_edge_count(long long n, long long r);
SmallGraph path_graph(int t_edges);   // t+1 vertices 0..t in path order
SmallGraph cycle_graph(int t_edges);  // t >= 3
SmallGraph k4_minus();                // K_4 with one edge deleted

// The 5-vertex deletion variants used in the P_5 case analysis.
SmallGraph k5_minus_edge();            // K_5^-
SmallGraph k5_minus_two_adjacent();    // K_5^-- (deleted edges share a vertex)
SmallGraph k5_minus_two_disjoint();    // K_5^-- (deleted edges disjoint)
SmallGraph k5_minus_triangle();
SmallGraph k5_minus_path3();           // missing a path of 3 edges
SmallGraph k5_minus_edge_plus_path2(); // missing P_1 u P_2
SmallGraph k5_minus_star3();           // missing a star on four vertices

SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b);
// Glue b's vertex vb onto a's vertex va; b's other vertices are appended.
SmallGraph identify_vertex(const SmallGraph& a, int va, const SmallGraph& b, int vb);

// --- edge subsets over a fixed host -----------------------------------------

// Ordered edge subset of a host graph: the edges (lex order) plus a
// membership bitmask over the host's edge list.
struct EdgeSet {
    std::vector<Edge> edges;            // sorted lex, i < j
    std::vector<std::uint64_t> mask;    // bit e set <=> host.edges()[e] selected

    std::size_t size() const { return edges.size(); }
};

EdgeSet edge_set_from_mask(const SmallGraph& host, const std::vector<std::uint64_t>& mask);
EdgeSet edge_set_from_edges(const SmallGraph& host, std::vector<Edge> edges);
// Subgraph of `host` on the same vertex set holding exactly these edges.
SmallGraph subgraph_of(const SmallGraph& host, const EdgeSet& es);

// Lexicographic comparison of edge lists, used for witness tie-breaking.
bool edge_list_less(const std::vector<Edge>& a, const std::vector<Edge>& b);

}  // namespace turan
