#include "turan/graph.hpp"

#include <algorithm>

namespace turan {

int SmallGraph::min_degree() const {
    int d = n_ == 0 ? 0 : kMaxVertices + 1;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
}

int SmallGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool SmallGraph::is_connected() const {
    if (n_ <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            next |= rows_[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    std::uint64_t all = n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1;
    return seen == all;
}

bool SmallGraph::bipartition(std::uint64_t& side0, std::uint64_t& side1) const {
    side0 = side1 = 0;
    std::uint64_t seen = 0;
    for (int root = 0; root < n_; ++root) {
        if ((seen >> root) & 1) continue;
        std::uint64_t frontier = std::uint64_t(1) << root;
        bool color = false;
        while (frontier) {
            (color ? side1 : side0) |= frontier;
            seen |= frontier;
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= rows_[v];
            }
            frontier = next & ~seen;
            color = !color;
        }
    }
    for (int v = 0; v < n_; ++v) {
        std::uint64_t own = ((side0 >> v) & 1) ? side0 : side1;
        if (rows_[v] & own) return false;
    }
    return true;
}

SmallGraph SmallGraph::complement() const {
    SmallGraph c(n_);
    std::uint64_t all = n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1;
    for (int v = 0; v < n_; ++v)
        c.rows_[v] = (~rows_[v]) & all & ~(std::uint64_t(1) << v);
    return c;
}

SmallGraph SmallGraph::induced(std::uint64_t vertex_mask) const {
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if ((vertex_mask >> v) & 1) keep.push_back(v);
    SmallGraph g(static_cast<int>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b)
            if (has_edge(keep[a], keep[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

SmallGraph SmallGraph::without_isolated() const {
    std::uint64_t keep = 0;
    for (int v = 0; v < n_; ++v)
        if (degree(v) > 0) keep |= std::uint64_t(1) << v;
    return induced(keep);
}

SmallGraph SmallGraph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw BadParameter("relabel: size mismatch");
    SmallGraph g(n_);
    for (auto [i, j] : edges()) g.add_edge(perm[i], perm[j]);
    return g;
}

void SmallGraph::validate() const {
    std::uint64_t all = n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1;
    for (int v = 0; v < n_; ++v) {
        if (rows_[v] & ~all) throw BadParameter("adjacency bit beyond vertex count");
        if ((rows_[v] >> v) & 1) throw BadParameter("loop at vertex " + std::to_string(v));
        std::uint64_t m = rows_[v];
        while (m) {
            int u = __builtin_ctzll(m);
            m &= m - 1;
            if (!has_edge(u, v)) throw BadParameter("asymmetric adjacency");
        }
    }
    for (int v = n_; v < kMaxVertices; ++v)
        if (rows_[v]) throw BadParameter("row beyond vertex count");
}

// --- constructors -----------------------------------------------------------

SmallGraph complete(int n) {
    SmallGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    g.validate();
    return g;
}

SmallGraph biclique(int s, int t) {
    if (s < 0 || t < 0) throw BadParameter("biclique with negative side");
    SmallGraph g(s + t);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) g.add_edge(i, s + j);
    g.validate();
    return g;
}

SmallGraph turan_graph(int n, int r) {
    if (r < 1) throw BadParameter("Turan graph needs r >= 1");
    if (n < 0) throw BadParameter("negative vertex count");
    SmallGraph g(n);
    // parts contiguous, the n mod r larger parts first
    std::vector<int> part_of(n);
    int q = r == 0 ? 0 : n / r, rem = n % r, v = 0;
    for (int p = 0; p < r && v < n; ++p) {
        int size = q + (p < rem ? 1 : 0);
        for (int i = 0; i < size; ++i) part_of[v++] = p;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) g.add_edge(i, j);
    g.validate();
    return g;
}

long long turan_edge_count(long long n, long long r) {
    if (r < 1 || n < 0) throw BadParameter("bad Turan parameters");
    long long q = n / r, s = n % r;
    // complement is s cliques on q+1 vertices and r-s cliques on q vertices
    return n * (n - 1) / 2 - s * (q + 1) * q / 2 - (r - s) * q * (q - 1) / 2;
}

SmallGraph path_graph(int t_edges) {
    if (t_edges < 0) throw BadParameter("negative path length");
    SmallGraph g(t_edges + 1);
    for (int i = 0; i < t_edges; ++i) g.add_edge(i, i + 1);
    g.validate();
    return g;
}

SmallGraph cycle_graph(int t_edges) {
    if (t_edges < 3) throw BadParameter("cycle needs at least 3 edges");
    SmallGraph g(t_edges);
    for (int i = 0; i < t_edges; ++i) g.add_edge(i, (i + 1) % t_edges);
    g.validate();
    return g;
}

namespace {
SmallGraph k5_without(const std::vector<Edge>& missing) {
    SmallGraph g = complete(5);
    for (auto [i, j] : missing) g.remove_edge(i, j);
    g.validate();
    return g;
}
}  // namespace

SmallGraph k4_minus() {
    SmallGraph g = complete(4);
    g.remove_edge(0, 1);
    g.validate();
    return g;
}

SmallGraph k5_minus_edge() { return k5_without({{0, 1}}); }
SmallGraph k5_minus_two_adjacent() { return k5_without({{0, 1}, {0, 2}}); }
SmallGraph k5_minus_two_disjoint() { return k5_without({{0, 1}, {2, 3}}); }
SmallGraph k5_minus_triangle() { return k5_without({{0, 1}, {0, 2}, {1, 2}}); }
SmallGraph k5_minus_path3() { return k5_without({{0, 1}, {1, 2}, {2, 3}}); }
SmallGraph k5_minus_edge_plus_path2() { return k5_without({{0, 1}, {2, 3}, {3, 4}}); }
SmallGraph k5_minus_star3() { return k5_without({{0, 1}, {0, 2}, {0, 3}}); }

SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b) {
    if (a.n() + b.n() > kMaxVertices)
        throw CapacityExceeded("disjoint union exceeds 64 vertices");
    SmallGraph g(a.n() + b.n());
    for (auto [i, j] : a.edges()) g.add_edge(i, j);
    for (auto [i, j] : b.edges()) g.add_edge(a.n() + i, a.n() + j);
    g.validate();
    return g;
}

SmallGraph identify_vertex(const SmallGraph& a, int va, const SmallGraph& b, int vb) {
    if (va < 0 || va >= a.n() || vb < 0 || vb >= b.n())
        throw BadParameter("identify: vertex out of range");
    if (a.n() + b.n() - 1 > kMaxVertices)
        throw CapacityExceeded("identification exceeds 64 vertices");
    SmallGraph g(a.n() + b.n() - 1);
    for (auto [i, j] : a.edges()) g.add_edge(i, j);
    // b's vertices: vb -> va, others packed after a's
    std::vector<int> map(b.n());
    int next = a.n();
    for (int v = 0; v < b.n(); ++v) map[v] = v == vb ? va : next++;
    for (auto [i, j] : b.edges()) g.add_edge(map[i], map[j]);
    g.validate();
    return g;
}

// --- edge subsets ------------------------------------------------------------

EdgeSet edge_set_from_mask(const SmallGraph& host, const std::vector<std::uint64_t>& mask) {
    auto host_edges = host.edges();
    EdgeSet es;
    es.mask = mask;
    es.mask.resize((host_edges.size() + 63) / 64, 0);
    for (std::size_t e = 0; e < host_edges.size(); ++e)
        if ((es.mask[e / 64] >> (e % 64)) & 1) es.edges.push_back(host_edges[e]);
    return es;
}

EdgeSet edge_set_from_edges(const SmallGraph& host, std::vector<Edge> edges) {
    auto host_edges = host.edges();
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw BadParameter("duplicate edge in edge set");
    EdgeSet es;
    es.mask.assign((host_edges.size() + 63) / 64, 0);
    for (auto e : edges) {
        auto it = std::lower_bound(host_edges.begin(), host_edges.end(), e);
        if (it == host_edges.end() || *it != e)
            throw BadParameter("edge not present in host graph");
        std::size_t idx = static_cast<std::size_t>(it - host_edges.begin());
        es.mask[idx / 64] |= std::uint64_t(1) << (idx % 64);
    }
    es.edges = std::move(edges);
    return es;
}

SmallGraph subgraph_of(const SmallGraph& host, const EdgeSet& es) {
    SmallGraph g(host.n());
    for (auto [i, j] : es.edges) {
        if (!host.has_edge(i, j)) throw BadParameter("edge set escapes host");
        g.add_edge(i, j);
    }
    g.validate();
    return g;
}

bool edge_list_less(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace turan
