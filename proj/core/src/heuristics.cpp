#include "turan/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <vector>

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
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

std::uint64_t trial_seed(std::uint64_t seed, long long trial) {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial) + 0x51ed2701));
}

int clamp_threads(int threads) { return std::max(1, std::min(threads, 64)); }

}  // namespace

double deletion_keep_probability(int s, long long k) {
    if (s < 2 || k < 1) throw BadParameter("deletion heuristic needs s >= 2, k >= 1");
    return std::pow(static_cast<double>(k), -1.0 / s) / 2.0;
}

EdgeSet heuristic_deletion(const SmallGraph& g, const Pattern& f, long long k,
                           std::uint64_t seed, int trials, int threads) {
    if (f.kind() != Pattern::Kind::Biclique || f.a() != f.b())
        throw BadParameter("deletion heuristic expects a balanced biclique pattern");
    double p = deletion_keep_probability(f.a(), k);
    auto host_edges = g.edges();
    if (trials < 1) trials = 1;

    struct Trial {
        long long size = -1;
        std::vector<Edge> edges;
    };
    auto run_trial = [&](long long t) {
        Rng rng(trial_seed(seed, t));
        SmallGraph kept(g.n());
        for (auto [i, j] : host_edges)
            if (rng.unit() < p) kept.add_edge(i, j);
        // one edge deleted per surviving copy, largest edge of the least witness
        while (auto w = contains(kept, f)) {
            std::vector<Edge> copy;
            for (auto [pi, pj] : f.graph().edges()) {
                int a = w->map[pi], b = w->map[pj];
                copy.emplace_back(std::min(a, b), std::max(a, b));
            }
            Edge victim = *std::max_element(copy.begin(), copy.end());
            kept.remove_edge(victim.first, victim.second);
        }
        Trial out;
        out.edges = kept.edges();
        out.size = static_cast<long long>(out.edges.size());
        return out;
    };

    std::vector<Trial> results(static_cast<std::size_t>(trials));
    int workers = clamp_threads(threads);
    if (workers == 1) {
        for (int t = 0; t < trials; ++t) results[t] = run_trial(t);
    } else {
        std::vector<std::future<void>> futs;
        for (int w = 0; w < workers; ++w)
            futs.push_back(std::async(std::launch::async, [&, w] {
                for (int t = w; t < trials; t += workers) results[t] = run_trial(t);
            }));
        for (auto& fu : futs) fu.get();
    }
    int best = 0;
    for (int t = 1; t < trials; ++t)
        if (results[t].size > results[best].size) best = t;
    return edge_set_from_edges(g, std::move(results[best].edges));
}

Rat template_expected_edges(const SmallGraph& g, const SmallGraph& templ) {
    if (g.n() != templ.n()) throw BadParameter("template must match the host vertex count");
    if (g.n() < 2) return Rat(0);
    return Rat(Int(2) * g.edge_count() * templ.edge_count(),
               Int(g.n()) * (g.n() - 1));
}

TemplateStats heuristic_template(const SmallGraph& g, const SmallGraph& templ,
                                 long long trials, std::uint64_t seed, int threads) {
    if (g.n() != templ.n()) throw BadParameter("template must match the host vertex count");
    if (trials < 1) trials = 1;
    auto host_edges = g.edges();
    int n = g.n();

    struct Shard {
        long long best_size = -1;
        long long best_trial = -1;
        std::vector<Edge> best_edges;
        double sum = 0;
    };
    auto run_range = [&](long long lo, long long hi) {
        Shard sh;
        std::vector<int> perm(n);
        for (long long t = lo; t < hi; ++t) {
            Rng rng(trial_seed(seed, t));
            for (int i = 0; i < n; ++i) perm[i] = i;
            for (int i = n - 1; i > 0; --i)
                std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
            std::vector<Edge> kept;
            for (auto [u, v] : host_edges)
                if (templ.has_edge(perm[u], perm[v])) kept.emplace_back(u, v);
            sh.sum += static_cast<double>(kept.size());
            if (static_cast<long long>(kept.size()) > sh.best_size) {
                sh.best_size = static_cast<long long>(kept.size());
                sh.best_trial = t;
                sh.best_edges = std::move(kept);
            }
        }
        return sh;
    };

    int workers = clamp_threads(threads);
    std::vector<Shard> shards;
    if (workers == 1 || trials < 2 * workers) {
        shards.push_back(run_range(0, trials));
    } else {
        std::vector<std::future<Shard>> futs;
        long long chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            long long lo = w * chunk, hi = std::min<long long>(trials, lo + chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, run_range, lo, hi));
        }
        for (auto& fu : futs) shards.push_back(fu.get());
    }

    TemplateStats stats;
    stats.trials = trials;
    double total = 0;
    const Shard* best = nullptr;
    for (const auto& sh : shards) {
        total += sh.sum;
        if (!best || sh.best_size > best->best_size ||
            (sh.best_size == best->best_size && sh.best_trial < best->best_trial))
            best = &sh;
    }
    stats.mean_kept = total / static_cast<double>(trials);
    stats.best = edge_set_from_edges(g, best->best_edges);
    return stats;
}

}  // namespace turan
