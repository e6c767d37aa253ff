#include "turan/lemmas.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <tuple>

#include "turan/canonical.hpp"
#include "turan/enumerate.hpp"
#include "turan/ex_search.hpp"
#include "turan/graph6.hpp"
#include "turan/inverse.hpp"
#include "turan/pattern.hpp"
#include "turan/rational.hpp"

namespace turan {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

SmallGraph block_graph(CrossBlock b) {
    switch (b) {
        case CrossBlock::K4: return complete(4);
        case CrossBlock::K4Minus: return k4_minus();
        case CrossBlock::C4: return cycle_graph(4);
    }
    throw BadParameter("unknown block");
}

std::string block_name(CrossBlock b) {
    switch (b) {
        case CrossBlock::K4: return "K4";
        case CrossBlock::K4Minus: return "K4m";
        case CrossBlock::C4: return "C4";
    }
    return "";
}

int side_edges(const SmallGraph& g, std::uint64_t side) {
    int count = 0;
    std::uint64_t rest = side;
    while (rest) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        count += __builtin_popcountll(g.row(v) & side);
    }
    return count / 2;
}

bool side_has_k4(const SmallGraph& g, std::uint64_t side) { return side_edges(g, side) == 6; }
bool side_has_k4_minus(const SmallGraph& g, std::uint64_t side) { return side_edges(g, side) >= 5; }

bool any_k4(const SmallGraph& g) {
    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            for (int c = b + 1; c < 8; ++c)
                for (int d = c + 1; d < 8; ++d) {
                    std::uint64_t side = (1ULL << a) | (1ULL << b) | (1ULL << c) | (1ULL << d);
                    if (side_has_k4(g, side)) return true;
                }
    return false;
}

}  // namespace

LemmaReport verify_cross_edge(CrossBlock ba, CrossBlock bb, int threshold,
                              CrossConclusion conclusion) {
    if (threshold < 0 || threshold > 16) throw BadParameter("threshold out of range");
    Timer timer;
    LemmaReport rep;
    rep.lemma = "cross-edge-" + block_name(ba) + "-" + block_name(bb) + "-" + std::to_string(threshold);

    SmallGraph base(8);
    for (auto [i, j] : block_graph(ba).edges()) base.add_edge(i, j);
    for (auto [i, j] : block_graph(bb).edges()) base.add_edge(i + 4, j + 4);

    // all 4+4 splits, as masks of the side containing vertex 0
    std::vector<std::uint64_t> splits;
    for (int a = 1; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            for (int c = b + 1; c < 8; ++c)
                splits.push_back(1ULL | (1ULL << a) | (1ULL << b) | (1ULL << c));

    for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
        if (__builtin_popcount(mask) < threshold) continue;
        ++rep.universe;
        SmallGraph g = base;
        for (int bit = 0; bit < 16; ++bit)
            if ((mask >> bit) & 1) g.add_edge(bit / 4, 4 + bit % 4);

        bool ok = false;
        switch (conclusion) {
            case CrossConclusion::TwoDisjointK4:
                for (std::uint64_t s : splits)
                    if (side_has_k4(g, s) && side_has_k4(g, 0xFFull & ~s)) {
                        ok = true;
                        break;
                    }
                break;
            case CrossConclusion::TwoDisjointK4OrK4K4Minus:
                for (std::uint64_t s : splits) {
                    std::uint64_t o = 0xFFull & ~s;
                    if ((side_has_k4(g, s) && side_has_k4_minus(g, o)) ||
                        (side_has_k4_minus(g, s) && side_has_k4(g, o))) {
                        ok = true;
                        break;
                    }
                }
                break;
            case CrossConclusion::K4AnywhereOrTwoDisjointK4Minus:
                ok = any_k4(g);
                if (!ok)
                    for (std::uint64_t s : splits)
                        if (side_has_k4_minus(g, s) && side_has_k4_minus(g, 0xFFull & ~s)) {
                            ok = true;
                            break;
                        }
                break;
        }
        if (!ok) {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "0x%04x", mask);
            rep.violations.push_back(std::string(buf) + " " + graph6_encode(g));
        }
    }
    rep.millis = timer.ms();
    return rep;
}

LemmaReport verify_partition_expectation() {
    Timer timer;
    LemmaReport rep;
    rep.lemma = "partition-expectation";

    // all (2,2,1)-partitions of {0..4} as (pair, pair) with the singleton implied
    std::vector<std::pair<int, int>> partitions;  // masks of the two pair classes
    for (int p1 = 0; p1 < 32; ++p1) {
        if (__builtin_popcount(p1) != 2) continue;
        for (int p2 = p1 + 1; p2 < 32; ++p2) {
            if (__builtin_popcount(p2) != 2 || (p1 & p2)) continue;
            partitions.emplace_back(p1, p2);
        }
    }
    rep.universe = static_cast<long long>(partitions.size());
    if (partitions.size() != 15) rep.violations.push_back("partition count != 15");

    const Rat expected[6] = {Rat(0), Rat(1), Rat(6, 5), Rat(8, 5), Rat(2), Rat(2)};
    for (int d = 1; d <= 5; ++d) {
        for (int nbhd = 0; nbhd < 32; ++nbhd) {
            if (__builtin_popcount(nbhd) != d) continue;
            Rat total(0);
            for (auto [p1, p2] : partitions) {
                int singleton = 31 & ~(p1 | p2);
                int kept = std::max({__builtin_popcount(nbhd & p1), __builtin_popcount(nbhd & p2),
                                     __builtin_popcount(nbhd & singleton)});
                total += Rat(kept);
            }
            Rat avg = total / Rat(15);
            if (avg != expected[d])
                rep.violations.push_back("degree " + std::to_string(d) + " neighborhood " +
                                         std::to_string(nbhd) + ": average " + avg.str() +
                                         " != " + expected[d].str());
        }
    }

    // the seven named partitions: each pins a pair inside {v1,v2,v3} and
    // their union covers all ten pairs
    const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> seven = {
        {{0, 1}, {2, 3}}, {{0, 1}, {2, 4}}, {{0, 1}, {3, 4}}, {{1, 2}, {0, 3}},
        {{1, 2}, {0, 4}}, {{0, 2}, {1, 3}}, {{0, 2}, {1, 4}},
    };
    std::vector<bool> covered(25, false);
    for (auto& [pa, pb] : seven) {
        auto inside_a = [&](std::pair<int, int> p) { return p.first <= 2 && p.second <= 2; };
        if (!inside_a(pa) && !inside_a(pb))
            rep.violations.push_back("a named partition has no pair inside {v1,v2,v3}");
        covered[pa.first * 5 + pa.second] = true;
        covered[pb.first * 5 + pb.second] = true;
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!covered[i * 5 + j])
                rep.violations.push_back("pair {" + std::to_string(i) + "," + std::to_string(j) +
                                         "} not covered by the seven classes");
    rep.note = "15 partitions; averages 1, 6/5, 8/5, 2, 2; 7-class pair cover";
    rep.millis = timer.ms();
    return rep;
}

LemmaReport verify_k5_claims() {
    Timer timer;
    LemmaReport rep;
    rep.lemma = "k5-claims";
    auto check = [&](bool cond, const std::string& what) {
        ++rep.universe;
        if (!cond) rep.violations.push_back(what);
    };

    // edge counts of the named deletion variants
    check(k5_minus_edge().edge_count() == 9, "e(K5-) != 9");
    check(k5_minus_two_adjacent().edge_count() == 8, "e(K5-- adjacent) != 8");
    check(k5_minus_two_disjoint().edge_count() == 8, "e(K5-- disjoint) != 8");
    check(k5_minus_triangle().edge_count() == 7, "e(K5 - K3) != 7");
    check(k5_minus_path3().edge_count() == 7, "e(K5 - P3) != 7");
    check(k5_minus_edge_plus_path2().edge_count() == 7, "e(K5 - P1uP2) != 7");
    check(!are_isomorphic(k5_minus_two_adjacent(), k5_minus_two_disjoint()),
          "the two K5-- variants must be non-isomorphic");
    check(!are_isomorphic(k5_minus_triangle(), k5_minus_path3()), "K5-K3 vs K5-P3 isomorphic");
    check(!are_isomorphic(k5_minus_triangle(), k5_minus_edge_plus_path2()),
          "K5-K3 vs K5-P1uP2 isomorphic");
    check(!are_isomorphic(k5_minus_path3(), k5_minus_edge_plus_path2()),
          "K5-P3 vs K5-P1uP2 isomorphic");

    // the star deletion keeps a K4; the other three-edge deletions do not
    Pattern k4 = Pattern::clique(4);
    check(contains_any(k5_minus_star3(), k4), "K5 minus a 4-vertex star must contain K4");
    check(!contains_any(k5_minus_triangle(), k4), "K5 - K3 must be K4-free");
    check(!contains_any(k5_minus_path3(), k4), "K5 - P3 must be K4-free");
    check(!contains_any(k5_minus_edge_plus_path2(), k4), "K5 - P1uP2 must be K4-free");

    // K_{2,s} is P5-free
    Pattern p5 = Pattern::path(5);
    for (int s = 1; s <= 12; ++s)
        check(!contains_any(biclique(2, s), p5), "K_{2," + std::to_string(s) + "} contains P5");

    // every 5-vertex graph with >= 8 edges holds a K5-- variant
    Pattern k5mm = Pattern::family({Pattern::explicit_graph(k5_minus_two_adjacent()),
                                    Pattern::explicit_graph(k5_minus_two_disjoint())});
    for (const auto& g : enumerate_graphs(5, {8, LLONG_MAX, nullptr, 5}))
        check(contains_any(g, k5mm),
              "8+-edge 5-vertex graph misses K5--: " + graph6_encode(g));

    // every 7-edge 5-vertex graph holds K4 or one of the three named variants
    Pattern seven_family = Pattern::family({
        Pattern::clique(4),
        Pattern::explicit_graph(k5_minus_triangle()),
        Pattern::explicit_graph(k5_minus_path3()),
        Pattern::explicit_graph(k5_minus_edge_plus_path2()),
    });
    for (const auto& g : enumerate_graphs(5, {7, 7, nullptr, 5}))
        check(contains_any(g, seven_family),
              "7-edge 5-vertex graph misses all variants: " + graph6_encode(g));

    // a vertex with two neighbors on a K4 forces K5--
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            SmallGraph g = disjoint_union(complete(4), complete(1));
            g.add_edge(i, 4);
            g.add_edge(j, 4);
            check(contains_any(g, k5mm), "K4 plus a 2-neighbor vertex misses K5--");
        }
    // a vertex with three neighbors on a C4 forces K4^-
    Pattern k4m = Pattern::explicit_graph(k4_minus());
    for (int skip = 0; skip < 4; ++skip) {
        SmallGraph g = disjoint_union(cycle_graph(4), complete(1));
        for (int v = 0; v < 4; ++v)
            if (v != skip) g.add_edge(v, 4);
        check(contains_any(g, k4m), "C4 plus a 3-neighbor vertex misses K4-");
    }

    rep.millis = timer.ms();
    return rep;
}

LemmaReport verify_dirac(int t, int n_max) {
    if (t != 2 && t != 3) throw BadParameter("dirac check supports t in {2,3}");
    if (n_max > 8) throw CapacityExceeded("dirac check capped at 8 vertices");
    Timer timer;
    LemmaReport rep;
    rep.lemma = "dirac-t" + std::to_string(t);
    for (int n = 2 * t + 1; n <= n_max; ++n) {
        EnumOptions eo;
        eo.filter = [t](const SmallGraph& g) { return g.min_degree() >= t && g.is_connected(); };
        for (const auto& g : enumerate_graphs(n, eo)) {
            ++rep.universe;
            if (longest_path_edges(g) < 2 * t)
                rep.violations.push_back(graph6_encode(g));
        }
    }
    rep.note = "connected, min degree >= " + std::to_string(t) + ", " + std::to_string(2 * t) +
               " < n <= " + std::to_string(n_max);
    rep.millis = timer.ms();
    return rep;
}

LemmaReport verify_erdos_gallai(int n_max, const std::vector<int>& t_set) {
    if (n_max > 9) throw CapacityExceeded("path-bound check capped at n = 9");
    Timer timer;
    LemmaReport rep;
    rep.lemma = "erdos-gallai";
    for (int t : t_set) {
        if (t < 2 || t > 4) throw BadParameter("path-bound check supports t in {2,3,4}");
        for (int n = 1; n <= n_max; ++n) {
            ++rep.universe;
            ExResult r = ex_exact(complete(n), Pattern::path(t));
            std::string tag = "n=" + std::to_string(n) + " t=" + std::to_string(t);
            if (2 * r.value > static_cast<long long>(t - 1) * n) {
                rep.violations.push_back(tag + ": value exceeds the bound");
                continue;
            }
            bool equality = 2 * r.value == static_cast<long long>(t - 1) * n;
            if (equality != (n % t == 0 && n >= t)) {
                rep.violations.push_back(tag + ": equality clause mismatch");
                continue;
            }
            if (equality) {
                SmallGraph w = subgraph_of(complete(n), r.witness).without_isolated();
                // disjoint K_t blocks: every component is a t-clique
                bool blocks_ok = w.n() == n && w.edge_count() == static_cast<long long>(n) / t * (t * (t - 1) / 2);
                std::uint64_t seen = 0;
                for (int v = 0; v < w.n() && blocks_ok; ++v) {
                    if ((seen >> v) & 1) continue;
                    std::uint64_t comp = (std::uint64_t(1) << v) | w.row(v);
                    std::uint64_t frontier = comp;
                    while (frontier) {
                        std::uint64_t next = 0, fr = frontier;
                        while (fr) {
                            int u = __builtin_ctzll(fr);
                            fr &= fr - 1;
                            next |= w.row(u);
                        }
                        frontier = next & ~comp;
                        comp |= next;
                    }
                    seen |= comp;
                    if (__builtin_popcountll(comp) != t ||
                        side_edges(w, comp) != t * (t - 1) / 2)
                        blocks_ok = false;
                }
                if (!blocks_ok)
                    rep.violations.push_back(tag + ": equality witness is not a disjoint K_t union");
            }
        }
    }
    rep.note = "bound, equality clause, and equality-witness shape";
    rep.millis = timer.ms();
    return rep;
}

long long observation_kprime(int x, int y, int z, long long k) {
    if (x < 0 || y < 0 || z < 0) throw BadParameter("negative block counts");
    if (k < 6LL * x + 5 * y + 4 * z) throw BadParameter("k below the blocks' internal edges");
    return k - 6 * x - 5 * y - 4 * z + 6;
}

LemmaReport verify_observation_kprime(int x, int y, int z, long long k) {
    long long kprime = observation_kprime(x, y, z, k);
    if (x + y + z < 1) throw BadParameter("need at least one block");
    Timer timer;
    LemmaReport rep;
    rep.lemma = "observation-kprime";

    // overloaded block type -> stars on its four vertices replace its edges;
    // the other blocks keep their internal edges
    struct Choice {
        int cx, cy, cz;
        const char* name;
    };
    std::vector<Choice> choices;
    if (x >= 1) choices.push_back({x - 1, y, z, "K4"});
    if (y >= 1) choices.push_back({x, y - 1, z, "K4m"});
    if (z >= 1) choices.push_back({x, y, z - 1, "C4"});

    for (const auto& ch : choices) {
        ++rep.universe;
        long long pendant_edges = kprime + 1;  // the allowance exceeded by one
        long long vertices = 4 + pendant_edges + 4LL * (ch.cx + ch.cy + ch.cz);
        if (vertices > kMaxVertices) {
            rep.violations.push_back(std::string(ch.name) + ": instance exceeds 64 vertices");
            continue;
        }
        SmallGraph g(static_cast<int>(vertices));
        int next = 4;
        for (long long p = 0; p < pendant_edges; ++p)
            g.add_edge(static_cast<int>(p % 4), next++);
        auto add_block = [&](const SmallGraph& block) {
            for (auto [i, j] : block.edges()) g.add_edge(next + i, next + j);
            next += 4;
        };
        for (int i = 0; i < ch.cx; ++i) add_block(complete(4));
        for (int i = 0; i < ch.cy; ++i) add_block(k4_minus());
        for (int i = 0; i < ch.cz; ++i) add_block(cycle_graph(4));
        g.validate();

        long long internal = 6LL * ch.cx + 5 * ch.cy + 4 * ch.cz;
        if (g.edge_count() != pendant_edges + internal) {
            rep.violations.push_back(std::string(ch.name) + ": edge bookkeeping failed");
            continue;
        }
        if (g.edge_count() < k)
            rep.violations.push_back(std::string(ch.name) + ": assembled graph has fewer than k edges");
        if (has_path_with_edges(g, 4))
            rep.violations.push_back(std::string(ch.name) + ": stars plus blocks contain P4: " +
                                     graph6_encode(g));
    }
    rep.note = "k' = " + std::to_string(kprime);
    rep.millis = timer.ms();
    return rep;
}

std::vector<std::string> lemma_ids() {
    return {"cross-edge-K4-K4m-15", "cross-edge-K4-C4-13", "cross-edge-K4m-C4-11",
            "partition-expectation", "k5-claims", "dirac-t2", "dirac-t3",
            "erdos-gallai", "observation-kprime"};
}

LemmaReport verify_by_id(const std::string& id) {
    if (id == "cross-edge-K4-K4m-15")
        return verify_cross_edge(CrossBlock::K4, CrossBlock::K4Minus, 15,
                                 CrossConclusion::TwoDisjointK4);
    if (id == "cross-edge-K4-C4-13")
        return verify_cross_edge(CrossBlock::K4, CrossBlock::C4, 13,
                                 CrossConclusion::TwoDisjointK4OrK4K4Minus);
    if (id == "cross-edge-K4m-C4-11")
        return verify_cross_edge(CrossBlock::K4Minus, CrossBlock::C4, 11,
                                 CrossConclusion::K4AnywhereOrTwoDisjointK4Minus);
    if (id == "partition-expectation") return verify_partition_expectation();
    if (id == "k5-claims") return verify_k5_claims();
    if (id == "dirac-t2") return verify_dirac(2, 7);
    if (id == "dirac-t3") return verify_dirac(3, 8);
    if (id == "erdos-gallai") return verify_erdos_gallai(9, {2, 3, 4});
    if (id == "observation-kprime") {
        // the three sampled parameter instances folded into one report
        LemmaReport combined;
        combined.lemma = "observation-kprime";
        for (auto [x, y, z, k] : std::vector<std::tuple<int, int, int, long long>>{
                 {1, 0, 0, 10}, {0, 0, 1, 4}, {1, 1, 1, 21}}) {
            LemmaReport r = verify_observation_kprime(x, y, z, k);
            combined.universe += r.universe;
            combined.millis += r.millis;
            for (auto& v : r.violations) combined.violations.push_back(v);
            if (!combined.note.empty()) combined.note += "; ";
            combined.note += "(" + std::to_string(x) + "," + std::to_string(y) + "," +
                             std::to_string(z) + ",k=" + std::to_string(k) + ") " + r.note;
        }
        return combined;
    }
    throw BadParameter("unknown lemma id '" + id + "'");
}

std::vector<LemmaReport> verify_all() {
    std::vector<LemmaReport> out;
    for (const auto& id : lemma_ids()) out.push_back(verify_by_id(id));
    return out;
}

}  // namespace turan
