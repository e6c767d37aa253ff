#include "turan/ex_search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

#include "turan/enumerate.hpp"

namespace turan {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = splitmix64(state);
        return state;
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// --- route 1: scan F-free isomorphism classes --------------------------------

constexpr long long kClassWorkBudget = 2'000'000;  // canonicalizations per pattern
constexpr int kEnumerationHostCap = 12;

struct FreeClassLevels {
    std::deque<std::vector<SmallGraph>> levels;  // [n] = classes on exactly n vertices
    long long work = 0;
    bool failed = false;  // extension blew the work budget
};

std::mutex free_class_mutex;
std::map<std::string, FreeClassLevels> free_class_cache;

// Stable pointers to the class levels 0..nmax, or empty when the widths
// exceed the work budget. Levels are append-only, so the pointers survive
// later extensions by other callers.
std::vector<const std::vector<SmallGraph>*> free_classes_up_to(const Pattern& f, int nmax) {
    std::lock_guard<std::mutex> lock(free_class_mutex);
    auto& entry = free_class_cache[f.literal()];
    if (entry.levels.empty()) entry.levels.push_back({SmallGraph(0)});
    auto hereditary = [&f](const SmallGraph& g) { return !contains_any(g, f); };
    while (static_cast<int>(entry.levels.size()) <= nmax && !entry.failed) {
        int n = static_cast<int>(entry.levels.size());
        const auto& prev = entry.levels.back();
        entry.work += static_cast<long long>(prev.size()) << (n - 1);
        if (entry.work > kClassWorkBudget) {
            entry.failed = true;
            break;
        }
        entry.levels.push_back(extend_level(prev, n, LLONG_MAX, hereditary));
    }
    std::vector<const std::vector<SmallGraph>*> out;
    if (static_cast<int>(entry.levels.size()) <= nmax) return out;
    for (int n = 0; n <= nmax; ++n) out.push_back(&entry.levels[n]);
    return out;
}

std::optional<ExResult> ex_by_enumeration(const SmallGraph& g, const Pattern& f) {
    if (g.n() > kEnumerationHostCap) return std::nullopt;
    auto levels = free_classes_up_to(f, g.n());
    if (levels.empty()) return std::nullopt;

    // classes by decreasing edge count; ties in (vertex count, key) order
    std::vector<const SmallGraph*> pool;
    for (const auto* level : levels)
        for (const auto& h : *level) pool.push_back(&h);
    std::stable_sort(pool.begin(), pool.end(), [](const SmallGraph* a, const SmallGraph* b) {
        return a->edge_count() > b->edge_count();
    });

    bool host_complete = g.edge_count() == static_cast<long long>(g.n()) * (g.n() - 1) / 2;
    std::uint64_t hs0, hs1;
    bool host_bipartite = g.bipartition(hs0, hs1);
    std::vector<int> host_degrees;
    for (int v = 0; v < g.n(); ++v) host_degrees.push_back(g.degree(v));
    std::sort(host_degrees.rbegin(), host_degrees.rend());

    ExResult res;
    for (const SmallGraph* h : pool) {
        ++res.nodes_explored;
        std::vector<Edge> image;
        if (host_complete) {
            image = h->edges();
        } else {
            // cheap refutations before the backtracking matcher
            if (host_bipartite) {
                std::uint64_t s0, s1;
                if (!h->bipartition(s0, s1)) continue;  // odd cycle cannot embed
            }
            bool dominated = true;
            std::vector<int> pat_degrees;
            for (int v = 0; v < h->n(); ++v) pat_degrees.push_back(h->degree(v));
            std::sort(pat_degrees.rbegin(), pat_degrees.rend());
            for (std::size_t i = 0; i < pat_degrees.size(); ++i)
                if (pat_degrees[i] > host_degrees[i]) {
                    dominated = false;
                    break;
                }
            if (!dominated) continue;
            auto emb = detail::find_embedding(g, *h);
            if (!emb) continue;
            for (auto [i, j] : h->edges()) {
                int a = (*emb)[i], b = (*emb)[j];
                image.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
        res.value = h->edge_count();
        res.witness = edge_set_from_edges(g, std::move(image));
        res.attestation = Attestation{Attestation::Kind::ExhaustiveSearch, ""};
        res.status = SolveStatus::Complete;
        return res;
    }
    return std::nullopt;  // unreachable: the edgeless class embeds everywhere
}

// --- route 2: copy-deletion branch and bound ----------------------------------

// edge-subset bitmask; the solver caps keep m <= 128
struct EMask {
    std::uint64_t w[2] = {0, 0};
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    int count() const { return __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]); }
};

struct BnB {
    const SmallGraph& host;
    const Pattern& f;
    const ExOptions& opts;
    std::vector<Edge> host_edges;
    int m;

    SmallGraph cur;  // graph of the node being expanded
    long long inc_value = -1;
    EMask inc_mask;
    long long nodes = 0;
    bool exhausted = false;
    bool target_reached = false;
    bool bound_matched = false;

    long long root_formula_ub = -1;
    std::string root_formula_name;

    bool host_bipartite = false;
    std::uint64_t side0 = 0, side1 = 0;
    std::map<std::pair<int, int>, long long> cherry_memo;

    BnB(const SmallGraph& g, const Pattern& pat, const ExOptions& o)
        : host(g), f(pat), opts(o), host_edges(g.edges()),
          m(static_cast<int>(host_edges.size())), cur(g) {
        host_bipartite = g.bipartition(side0, side1);
    }

    static bool pattern_is_c4(const Pattern& p) {
        return (p.kind() == Pattern::Kind::Cycle && p.a() == 4) ||
               (p.kind() == Pattern::Kind::Biclique && p.a() == 2 && p.b() == 2);
    }

    long long cherry_bound(int a, int b) {
        auto it = cherry_memo.find({a, b});
        if (it != cherry_memo.end()) return it->second;
        long long v = c4_upper_bipartite(a, b);
        cherry_memo[{a, b}] = v;
        return v;
    }

    // formula upper bound on ex(graph, p); -1 when nothing applies
    long long member_bound(const Pattern& p, const SmallGraph& graph, std::string* name) {
        long long best = -1;
        auto take = [&](long long v, const char* nm) {
            if (best < 0 || v < best) {
                best = v;
                if (name) *name = nm;
            }
        };
        std::uint64_t nonisolated_mask = 0;
        for (int v = 0; v < graph.n(); ++v)
            if (graph.degree(v) > 0) nonisolated_mask |= std::uint64_t(1) << v;
        int nonisolated = __builtin_popcountll(nonisolated_mask);

        if (p.kind() == Pattern::Kind::Path) {
            // per-component floor of (t-1) v / 2
            long long total = 0;
            std::uint64_t seen = 0;
            std::uint64_t rest = nonisolated_mask;
            while (rest) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                if ((seen >> v) & 1) continue;
                std::uint64_t comp = std::uint64_t(1) << v, frontier = comp;
                while (frontier) {
                    std::uint64_t next = 0, fr = frontier;
                    while (fr) {
                        int u = __builtin_ctzll(fr);
                        fr &= fr - 1;
                        next |= graph.row(u);
                    }
                    frontier = next & ~comp;
                    comp |= next;
                }
                seen |= comp;
                total += static_cast<long long>(p.a() - 1) * __builtin_popcountll(comp) / 2;
            }
            take(total, "erdos-gallai");
        }
        if (pattern_is_c4(p)) {
            Int q = isqrt_floor(Int(nonisolated) * nonisolated * nonisolated);
            take(to_ll((q + nonisolated) / 2), "erdos-renyi-sos");
            if (host_bipartite) {
                int a = __builtin_popcountll(nonisolated_mask & side0);
                int b = __builtin_popcountll(nonisolated_mask & side1);
                take(cherry_bound(a, b), "cherry-pair-budget");
            }
        }
        if (p.kind() == Pattern::Kind::Clique && p.a() >= 2) {
            long long r = p.a(), v = nonisolated;
            take((r - 2) * v * v / (2 * (r - 1)), "turan");
        }
        return best;
    }

    long long node_bound(const SmallGraph& graph, std::string* name = nullptr) {
        if (f.kind() == Pattern::Kind::Family) {
            long long best = -1;
            for (const auto& mem : f.members()) {
                std::string nm;
                long long b = member_bound(mem, graph, &nm);
                if (b >= 0 && (best < 0 || b < best)) {
                    best = b;
                    if (name) *name = nm;
                }
            }
            return best;
        }
        return member_bound(f, graph, name);
    }

    std::vector<int> witness_edges(const Pattern& p, const MatchWitness& wit) {
        std::vector<int> idx;
        for (auto [i, j] : p.graph().edges()) {
            int a = wit.map[i], b = wit.map[j];
            Edge e{std::min(a, b), std::max(a, b)};
            auto it = std::lower_bound(host_edges.begin(), host_edges.end(), e);
            idx.push_back(static_cast<int>(it - host_edges.begin()));
        }
        std::sort(idx.begin(), idx.end());
        return idx;
    }

    // one copy in `graph` as host edge indices; empty when F-free
    std::vector<int> find_copy(const SmallGraph& graph) {
        if (f.kind() == Pattern::Kind::Family) {
            for (const auto& mem : f.members())
                if (auto w = contains(graph, mem)) return witness_edges(mem, *w);
            return {};
        }
        if (auto w = contains(graph, f)) return witness_edges(f, *w);
        return {};
    }

    // greedy edge-disjoint copy packing; each packed copy forces a future
    // deletion. -1 when some copy lies entirely inside `kept`.
    long long packing(const EMask& kept, long long enough) {
        SmallGraph scratch = cur;
        long long count = 0;
        for (;;) {
            auto copy = find_copy(scratch);
            if (copy.empty()) return count;
            bool all_kept = true;
            for (int e : copy)
                if (!kept.test(e)) {
                    all_kept = false;
                    break;
                }
            if (all_kept) return -1;
            for (int e : copy) scratch.remove_edge(host_edges[e].first, host_edges[e].second);
            if (++count >= enough) return count;
        }
    }

    void consider_incumbent(const EMask& current) {
        long long v = current.count();
        if (v < inc_value) return;
        if (v == inc_value) {
            // equal-size sorted edge lists: the one holding the first
            // differing index is lexicographically smaller
            int diff = -1;
            for (int e = 0; e < m; ++e)
                if (current.test(e) != inc_mask.test(e)) {
                    diff = e;
                    break;
                }
            if (diff < 0 || !current.test(diff)) return;
        }
        inc_value = v;
        inc_mask = current;
        if (opts.stop_at >= 0 && inc_value >= opts.stop_at) target_reached = true;
        if (root_formula_ub >= 0 && inc_value >= root_formula_ub) bound_matched = true;
    }

    void dfs(EMask current, EMask kept) {
        if (exhausted || target_reached || bound_matched) return;
        if (++nodes > opts.budget) {
            exhausted = true;
            return;
        }
        auto copy = find_copy(cur);
        if (copy.empty()) {
            consider_incumbent(current);
            return;
        }
        long long cur_edges = current.count();
        if (cur_edges - 1 <= inc_value) return;  // one deletion is already mandatory
        long long ub = node_bound(cur);
        if (ub >= 0 && ub <= inc_value) return;
        long long gap = cur_edges - inc_value;
        long long packed = packing(kept, gap);
        if (packed < 0) return;  // a copy is locked into kept edges
        if (cur_edges - packed <= inc_value) return;

        EMask child_kept = kept;
        for (int e : copy) {
            if (child_kept.test(e)) continue;
            EMask child = current;
            child.reset(e);
            auto [u, v] = host_edges[e];
            cur.remove_edge(u, v);
            dfs(child, child_kept);
            cur.add_edge(u, v);
            if (exhausted || target_reached || bound_matched) return;
            child_kept.set(e);
        }
    }

    void greedy_incumbent(std::uint64_t seed, bool lex_rule) {
        SmallGraph work = host;
        EMask mask;
        for (int e = 0; e < m; ++e) mask.set(e);
        SmallGraph saved_cur = cur;
        cur = work;
        Rng rng(seed);
        for (;;) {
            auto copy = find_copy(cur);
            if (copy.empty()) break;
            int pick = lex_rule ? copy.back() : copy[rng.below(copy.size())];
            mask.reset(pick);
            cur.remove_edge(host_edges[pick].first, host_edges[pick].second);
        }
        consider_incumbent(mask);
        cur = saved_cur;
    }

    ExResult run() {
        ExResult res;
        {
            std::string name;
            long long ub = node_bound(host, &name);
            if (ub >= 0) {
                root_formula_ub = std::min(ub, static_cast<long long>(m));
                root_formula_name = name;
            }
        }
        greedy_incumbent(0, true);
        for (int t = 0; t < opts.restarts && !bound_matched && !target_reached; ++t)
            greedy_incumbent(splitmix64(opts.seed ^ splitmix64(t + 1)), false);

        if (!bound_matched && !target_reached) {
            EMask current, kept;
            for (int e = 0; e < m; ++e) current.set(e);
            dfs(current, kept);
        }

        res.value = inc_value;
        std::vector<Edge> wedges;
        for (int e = 0; e < m; ++e)
            if (inc_mask.test(e)) wedges.push_back(host_edges[e]);
        res.witness = edge_set_from_edges(host, std::move(wedges));
        res.nodes_explored = nodes;
        if (target_reached) {
            res.status = SolveStatus::TargetReached;
        } else if (exhausted) {
            res.status = SolveStatus::BudgetExhausted;
        } else {
            res.status = SolveStatus::Complete;
            if (bound_matched)
                res.attestation = Attestation{Attestation::Kind::BoundMatch, root_formula_name};
            else
                res.attestation = Attestation{Attestation::Kind::ExhaustiveSearch, ""};
        }
        return res;
    }
};

std::vector<BoundRecord> host_formula_bounds(const SmallGraph& g, const Pattern& f) {
    std::vector<BoundRecord> out;
    auto add_for = [&](const Pattern& p) {
        if (p.kind() == Pattern::Kind::Path) out.push_back(ex_upper_eg(g, p.a()));
        if (BnB::pattern_is_c4(p)) out.push_back(ex_upper_ers_c4(g));
        std::uint64_t s0, s1;
        if (p.kind() == Pattern::Kind::Cycle && p.a() >= 6 && p.a() % 2 == 0 && g.bipartition(s0, s1))
            out.push_back(ex_upper_nv(__builtin_popcountll(s0), __builtin_popcountll(s1), p.a() / 2));
    };
    if (f.kind() == Pattern::Kind::Family)
        for (const auto& mem : f.members()) add_for(mem);
    else
        add_for(f);
    return out;
}

}  // namespace

ExResult ex_exact(const SmallGraph& g, const Pattern& f, const ExOptions& opts) {
    g.validate();
    if (!f.has_edge()) throw BadParameter("forbidden pattern needs at least one edge");
    long long m = g.edge_count();
    bool paths_only;
    if (f.kind() == Pattern::Kind::Family) {
        paths_only = true;
        for (const auto& mem : f.members()) paths_only = paths_only && mem.kind() == Pattern::Kind::Path;
    } else {
        paths_only = f.kind() == Pattern::Kind::Path;
    }
    long long cap = paths_only ? opts.edge_cap_path : opts.edge_cap_generic;
    if (m > cap)
        throw CapacityExceeded("host has " + std::to_string(m) + " edges, cap " + std::to_string(cap));

    if (!contains_any(g, f)) {
        ExResult res;
        res.value = m;
        res.witness = edge_set_from_edges(g, g.edges());
        res.attestation = Attestation{Attestation::Kind::ExhaustiveSearch, ""};
        res.bounds = host_formula_bounds(g, f);
        return res;
    }

    if (auto res = ex_by_enumeration(g, f)) {
        res->bounds = host_formula_bounds(g, f);
        return *res;
    }

    BnB solver(g, f, opts);
    ExResult res = solver.run();
    res.bounds = host_formula_bounds(g, f);
    return res;
}

}  // namespace turan
