#include "turan/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "turan/graph6.hpp"

namespace turan {

namespace {

using Partition = std::vector<std::vector<int>>;  // ordered classes

struct Searcher {
    const SmallGraph& g;
    int n;

    bool have_bytes = false;
    std::vector<std::vector<int>> best_inv;  // class-size sequence per depth
    std::vector<std::uint8_t> best_bytes;
    std::vector<int> best_perm;

    std::vector<std::vector<int>> generators;  // verified automorphisms
    std::vector<int> prefix;                   // individualized vertices on this path

    explicit Searcher(const SmallGraph& graph) : g(graph), n(graph.n()) {}

    void refine(Partition& classes) const {
        for (;;) {
            std::vector<std::uint64_t> masks(classes.size(), 0);
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (int v : classes[c]) masks[c] |= std::uint64_t(1) << v;
            Partition next;
            next.reserve(classes.size());
            for (auto& cls : classes) {
                if (cls.size() <= 1) {
                    next.push_back(cls);
                    continue;
                }
                // split by neighbor-count signature against the current classes,
                // new groups ordered by signature (isomorphism-invariant)
                std::vector<std::pair<std::vector<int>, int>> sigs;
                sigs.reserve(cls.size());
                for (int v : cls) {
                    std::vector<int> sig(classes.size());
                    for (std::size_t c = 0; c < classes.size(); ++c)
                        sig[c] = __builtin_popcountll(g.row(v) & masks[c]);
                    sigs.emplace_back(std::move(sig), v);
                }
                std::sort(sigs.begin(), sigs.end());
                std::size_t i = 0;
                while (i < sigs.size()) {
                    std::size_t j = i;
                    while (j < sigs.size() && sigs[j].first == sigs[i].first) ++j;
                    std::vector<int> group;
                    for (std::size_t t = i; t < j; ++t) group.push_back(sigs[t].second);
                    std::sort(group.begin(), group.end());
                    next.push_back(std::move(group));
                    i = j;
                }
            }
            bool changed = next.size() != classes.size();
            classes = std::move(next);
            if (!changed) return;
        }
    }

    std::vector<std::uint8_t> leaf_bytes(const Partition& classes) const {
        std::vector<int> vert(n);
        for (int p = 0; p < n; ++p) vert[p] = classes[p][0];
        std::vector<std::uint8_t> bytes((n * (n - 1) / 2 + 7) / 8, 0);
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                if (g.has_edge(vert[i], vert[j])) bytes[bit / 8] |= 1 << (bit % 8);
                ++bit;
            }
        return bytes;
    }

    // Orbits of the subgroup generated by automorphisms fixing `prefix`
    // pointwise; used to skip equivalent candidates in the target cell.
    std::vector<int> prefix_stable_orbits() const {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gen : generators) {
            bool fixes = true;
            for (int w : prefix)
                if (gen[w] != w) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(gen[v]);
                if (a != b) parent[a] = b;
            }
        }
        std::vector<int> root(n);
        for (int v = 0; v < n; ++v) root[v] = find(v);
        return root;
    }

    // status: 0 = equal to best prefix so far, 1 = strictly better prefix
    void search(Partition classes, int depth, int status) {
        refine(classes);

        std::vector<int> inv;
        inv.reserve(classes.size());
        for (const auto& c : classes) inv.push_back(static_cast<int>(c.size()));

        if (status == 0 && static_cast<int>(best_inv.size()) > depth) {
            if (inv < best_inv[depth]) status = 1;
            else if (inv > best_inv[depth]) return;  // prune: worse invariant
        }
        if (status == 1 || static_cast<int>(best_inv.size()) <= depth) {
            best_inv.resize(depth);
            best_inv.push_back(inv);
            have_bytes = false;  // everything deeper is stale
            status = 1;
        }

        bool discrete = true;
        std::size_t target = 0;
        std::size_t target_size = static_cast<std::size_t>(n) + 1;
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (classes[c].size() >= 2) {
                discrete = false;
                if (classes[c].size() < target_size) {
                    target_size = classes[c].size();
                    target = c;
                }
            }

        if (discrete) {
            auto bytes = leaf_bytes(classes);
            std::vector<int> perm(n);
            for (int p = 0; p < n; ++p) perm[classes[p][0]] = p;
            if (!have_bytes || bytes < best_bytes) {
                best_bytes = bytes;
                best_perm = perm;
                have_bytes = true;
            } else if (bytes == best_bytes) {
                // two labelings of the same canonical image: an automorphism
                std::vector<int> pos_to_vert(n);
                for (int v = 0; v < n; ++v) pos_to_vert[best_perm[v]] = v;
                std::vector<int> gamma(n);
                for (int v = 0; v < n; ++v) gamma[v] = pos_to_vert[perm[v]];
                bool ok = true;
                for (auto [i, j] : g.edges())
                    if (!g.has_edge(gamma[i], gamma[j])) {
                        ok = false;
                        break;
                    }
                if (ok) generators.push_back(std::move(gamma));
            }
            return;
        }

        const std::vector<int> cell = classes[target];
        std::vector<int> tried;
        std::size_t gen_snapshot = generators.size();
        std::vector<int> orbit = prefix_stable_orbits();
        for (int v : cell) {
            if (!tried.empty()) {
                if (generators.size() != gen_snapshot) {
                    orbit = prefix_stable_orbits();
                    gen_snapshot = generators.size();
                }
                bool skip = false;
                for (int u : tried)
                    if (orbit[u] == orbit[v]) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            tried.push_back(v);
            Partition child;
            child.reserve(classes.size() + 1);
            for (std::size_t c = 0; c < classes.size(); ++c) {
                if (c == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int u : cell)
                        if (u != v) rest.push_back(u);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(classes[c]);
                }
            }
            prefix.push_back(v);
            // siblings after a better-first child compare against the updated best
            search(std::move(child), depth + 1, status == 1 && tried.size() == 1 ? 1 : 0);
            prefix.pop_back();
        }
    }
};

}  // namespace

CanonicalResult canonical_form(const SmallGraph& g) {
    g.validate();
    if (g.n() > kCanonicalMaxVertices)
        throw CapacityExceeded("canonical form limited to " + std::to_string(kCanonicalMaxVertices) + " vertices");
    if (g.n() == 0) return {g, graph6_encode(g), {}};

    // canonicalize the sparser of g / complement; the permutation transfers
    long long m = g.edge_count();
    long long full = static_cast<long long>(g.n()) * (g.n() - 1) / 2;
    SmallGraph work = (2 * m > full) ? g.complement() : g;

    Searcher s(work);
    Partition init{std::vector<int>(static_cast<std::size_t>(g.n()))};
    std::iota(init[0].begin(), init[0].end(), 0);
    s.search(std::move(init), 0, 1);

    SmallGraph canon = g.relabeled(s.best_perm);
    return {canon, graph6_encode(canon), s.best_perm};
}

CanonicalKey canonical_key(const SmallGraph& g) { return canonical_form(g).key; }

bool are_isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace turan
