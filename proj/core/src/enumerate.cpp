#include "turan/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "turan/canonical.hpp"

namespace turan {

namespace {

// Order of canonical representatives: same as lexicographic order of their
// graph6 keys (vertex count, then the column-major upper-triangle bits).
bool key_less(const SmallGraph& a, const SmallGraph& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    for (int j = 1; j < a.n(); ++j)
        for (int i = 0; i < j; ++i) {
            bool ea = a.has_edge(i, j), eb = b.has_edge(i, j);
            if (ea != eb) return eb;
        }
    return false;
}

std::mutex cache_mutex;
std::map<int, std::vector<SmallGraph>> level_cache;  // unfiltered, unbounded-edge levels

}  // namespace

std::vector<SmallGraph> extend_level(const std::vector<SmallGraph>& prev, int n,
                                     long long max_edges,
                                     const std::function<bool(const SmallGraph&)>& hereditary) {
    if (n == 0) {
        SmallGraph empty(0);
        if (hereditary && !hereditary(empty)) return {};
        return {empty};
    }
    std::unordered_set<std::string> seen;
    std::vector<SmallGraph> out;
    for (const auto& parent : prev) {
        long long pe = parent.edge_count();
        auto parent_edges = parent.edges();
        std::uint64_t nbhd_count = std::uint64_t(1) << (n - 1);
        for (std::uint64_t nbhd = 0; nbhd < nbhd_count; ++nbhd) {
            if (pe + __builtin_popcountll(nbhd) > max_edges) continue;
            SmallGraph child(n);
            for (auto [i, j] : parent_edges) child.add_edge(i, j);
            std::uint64_t m = nbhd;
            while (m) {
                int v = __builtin_ctzll(m);
                m &= m - 1;
                child.add_edge(v, n - 1);
            }
            if (hereditary && !hereditary(child)) continue;
            auto canon = canonical_form(child);
            if (seen.insert(canon.key).second) out.push_back(std::move(canon.graph));
        }
    }
    std::sort(out.begin(), out.end(), key_less);
    return out;
}

namespace {

std::vector<SmallGraph> unrestricted_level(int n) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = level_cache.find(n);
        if (it != level_cache.end()) return it->second;
    }
    std::vector<SmallGraph> level;
    if (n == 0) {
        level = {SmallGraph(0)};
    } else {
        auto prev = unrestricted_level(n - 1);
        level = extend_level(prev, n, LLONG_MAX, nullptr);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    level_cache.emplace(n, level);
    return level;
}

}  // namespace

std::vector<SmallGraph> enumerate_graphs(int n, const EnumOptions& opts) {
    if (n < 0) throw BadParameter("negative vertex count");
    if (n > opts.cap || n > 16)
        throw CapacityExceeded("enumeration capped at " + std::to_string(std::min(opts.cap, 16)) + " vertices");

    std::vector<SmallGraph> level;
    bool bounded = opts.max_edges < static_cast<long long>(n) * (n - 1) / 2;
    if (!bounded) {
        level = unrestricted_level(n);
    } else {
        level = {SmallGraph(0)};
        for (int m = 1; m <= n; ++m) level = extend_level(level, m, opts.max_edges, nullptr);
    }

    std::vector<SmallGraph> out;
    for (auto& g : level) {
        long long e = g.edge_count();
        if (e < opts.min_edges || e > opts.max_edges) continue;
        if (opts.filter && !opts.filter(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace turan
