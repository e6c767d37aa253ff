#include "turan/pattern.hpp"

#include <algorithm>

#include "turan/graph6.hpp"

namespace turan {

// --- Pattern construction and parsing ---------------------------------------

Pattern Pattern::path(int t) {
    if (t < 1) throw BadParameter("path pattern needs t >= 1 edges");
    Pattern p;
    p.kind_ = Kind::Path;
    p.a_ = t;
    p.graph_ = path_graph(t);
    return p;
}

Pattern Pattern::cycle(int t) {
    if (t < 3) throw BadParameter("cycle pattern needs t >= 3 edges");
    Pattern p;
    p.kind_ = Kind::Cycle;
    p.a_ = t;
    p.graph_ = cycle_graph(t);
    return p;
}

Pattern Pattern::clique(int r) {
    if (r < 1) throw BadParameter("clique pattern needs r >= 1");
    Pattern p;
    p.kind_ = Kind::Clique;
    p.a_ = r;
    p.graph_ = complete(r);
    return p;
}

Pattern Pattern::biclique(int s, int t) {
    if (s < 1 || t < s) throw BadParameter("biclique pattern needs 1 <= s <= t");
    Pattern p;
    p.kind_ = Kind::Biclique;
    p.a_ = s;
    p.b_ = t;
    p.graph_ = turan::biclique(s, t);
    return p;
}

Pattern Pattern::explicit_graph(SmallGraph g) {
    g.validate();
    Pattern p;
    p.kind_ = Kind::Explicit;
    p.graph_ = std::move(g);
    return p;
}

Pattern Pattern::family(std::vector<Pattern> members) {
    if (members.empty()) throw BadParameter("empty pattern family");
    for (const auto& m : members)
        if (m.kind_ == Kind::Family) throw BadParameter("nested pattern family");
    Pattern p;
    p.kind_ = Kind::Family;
    p.members_ = std::move(members);
    return p;
}

namespace {
bool parse_int(const std::string& s, std::size_t& pos, int& out) {
    std::size_t start = pos;
    long long v = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        v = v * 10 + (s[pos] - '0');
        if (v > 1'000'000) return false;
        ++pos;
    }
    if (pos == start) return false;
    out = static_cast<int>(v);
    return true;
}
}  // namespace

Pattern Pattern::parse(const std::string& lit) {
    if (lit.empty()) throw BadParameter("empty pattern literal");
    if (lit.rfind("g6:", 0) == 0) return explicit_graph(decode_any(lit.substr(3)));
    if (lit.rfind("any(", 0) == 0 && lit.back() == ')') {
        std::vector<Pattern> members;
        std::string inner = lit.substr(4, lit.size() - 5);
        std::size_t start = 0;
        int depth = 0;
        for (std::size_t i = 0; i <= inner.size(); ++i) {
            if (i == inner.size() || (inner[i] == ',' && depth == 0 &&
                                      // K3,3 commas stay inside their literal: a comma
                                      // splits only if the next token starts a pattern
                                      !(i + 1 < inner.size() && inner[i + 1] >= '0' && inner[i + 1] <= '9'))) {
                std::string tok = inner.substr(start, i - start);
                if (!tok.empty()) members.push_back(parse(tok));
                start = i + 1;
            } else if (inner[i] == '(') {
                ++depth;
            } else if (inner[i] == ')') {
                --depth;
            }
        }
        return family(std::move(members));
    }
    char head = lit[0];
    std::size_t pos = 1;
    int first = 0;
    if ((head == 'P' || head == 'C' || head == 'K') && parse_int(lit, pos, first)) {
        if (pos == lit.size()) {
            if (head == 'P') return path(first);
            if (head == 'C') return cycle(first);
            return clique(first);
        }
        if (head == 'K' && lit[pos] == ',') {
            ++pos;
            int second = 0;
            if (parse_int(lit, pos, second) && pos == lit.size())
                return biclique(std::min(first, second), std::max(first, second));
        }
        if (head == 'K' && lit.compare(pos, std::string::npos, "-") == 0) {
            if (first == 4) return explicit_graph(k4_minus());
            if (first == 5) return explicit_graph(k5_minus_edge());
        }
    }
    throw BadParameter("cannot parse pattern literal '" + lit + "'");
}

std::string Pattern::literal() const {
    switch (kind_) {
        case Kind::Path: return "P" + std::to_string(a_);
        case Kind::Cycle: return "C" + std::to_string(a_);
        case Kind::Clique: return "K" + std::to_string(a_);
        case Kind::Biclique: return "K" + std::to_string(a_) + "," + std::to_string(b_);
        case Kind::Explicit: return "g6:" + graph6_encode(graph_);
        case Kind::Family: {
            std::string s = "any(";
            for (std::size_t i = 0; i < members_.size(); ++i) {
                if (i) s += ",";
                s += members_[i].literal();
            }
            return s + ")";
        }
    }
    return "";
}

const SmallGraph& Pattern::graph() const {
    if (kind_ == Kind::Family) throw BadParameter("family pattern has no single graph");
    return graph_;
}

int Pattern::vertex_count() const { return graph().n(); }
long long Pattern::edge_count() const { return graph().edge_count(); }

bool Pattern::is_star() const {
    if (kind_ == Kind::Family) return false;
    const SmallGraph& g = graph_;
    long long m = g.edge_count();
    if (m == 0) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == m) return true;
    return false;
}

bool Pattern::is_matching() const {
    if (kind_ == Kind::Family) return false;
    return graph_.max_degree() <= 1;
}

bool Pattern::has_edge() const {
    if (kind_ == Kind::Family) {
        for (const auto& m : members_)
            if (!m.has_edge()) return false;
        return true;
    }
    return graph_.edge_count() > 0;
}

// --- generic backtracking matcher --------------------------------------------

namespace {

// Lexicographically least injective map sending pattern edges onto host
// edges. Ascending candidate order at every depth makes the first complete
// assignment the least one.
struct Matcher {
    const SmallGraph& host;
    const SmallGraph& pat;
    bool count_mode = false;
    Int embeddings = 0;
    std::vector<int> map;       // pattern vertex -> host vertex, -1 unset
    std::uint64_t used = 0;

    Matcher(const SmallGraph& h, const SmallGraph& p) : host(h), pat(p), map(p.n(), -1) {}

    bool extend(int pv) {
        if (pv == pat.n()) {
            if (count_mode) {
                ++embeddings;
                return false;  // keep enumerating
            }
            return true;
        }
        for (int hv = 0; hv < host.n(); ++hv) {
            if ((used >> hv) & 1) continue;
            if (host.degree(hv) < pat.degree(pv)) continue;
            bool ok = true;
            std::uint64_t prow = pat.row(pv);
            while (prow) {
                int pu = __builtin_ctzll(prow);
                prow &= prow - 1;
                if (pu < pv && map[pu] >= 0 && !host.has_edge(map[pu], hv)) {
                    ok = false;
                    break;
                }
                if (pu >= pv) break;  // later pattern vertices not yet mapped
            }
            if (!ok) continue;
            map[pv] = hv;
            used |= std::uint64_t(1) << hv;
            if (extend(pv + 1)) return true;
            used &= ~(std::uint64_t(1) << hv);
            map[pv] = -1;
        }
        return false;
    }
};

}  // namespace

namespace detail {

std::optional<std::vector<int>> find_embedding(const SmallGraph& host, const SmallGraph& pat) {
    if (pat.n() > host.n() || pat.edge_count() > host.edge_count()) return std::nullopt;
    Matcher m(host, pat);
    if (m.extend(0)) return m.map;
    return std::nullopt;
}

Int count_embeddings(const SmallGraph& host, const SmallGraph& pat) {
    if (pat.n() > host.n()) return 0;
    Matcher m(host, pat);
    m.count_mode = true;
    m.extend(0);
    return m.embeddings;
}

}  // namespace detail

// --- specialized deciders -----------------------------------------------------

namespace {

// exact-length path search, depth-limited DFS
bool path_dfs(const SmallGraph& g, int v, std::uint64_t visited, int remaining) {
    if (remaining == 0) return true;
    std::uint64_t cand = g.row(v) & ~visited;
    while (cand) {
        int u = __builtin_ctzll(cand);
        cand &= cand - 1;
        if (path_dfs(g, u, visited | (std::uint64_t(1) << u), remaining - 1)) return true;
    }
    return false;
}

// cycle with exactly t edges through root as its least vertex
bool cycle_dfs(const SmallGraph& g, int root, int v, std::uint64_t visited, int remaining) {
    if (remaining == 1) return g.has_edge(v, root);
    std::uint64_t cand = g.row(v) & ~visited;
    // only vertices above the root keep each cycle counted once
    cand &= ~((std::uint64_t(1) << (root + 1)) - 1);
    while (cand) {
        int u = __builtin_ctzll(cand);
        cand &= cand - 1;
        if (cycle_dfs(g, root, u, visited | (std::uint64_t(1) << u), remaining - 1)) return true;
    }
    return false;
}

bool has_cycle_with_edges(const SmallGraph& g, int t) {
    for (int root = 0; root + t <= g.n(); ++root)
        if (cycle_dfs(g, root, root, std::uint64_t(1) << root, t)) return true;
    return false;
}

bool clique_dfs(const SmallGraph& g, std::uint64_t candidates, int need) {
    if (need == 0) return true;
    if (__builtin_popcountll(candidates) < need) return false;
    std::uint64_t c = candidates;
    while (c) {
        int v = __builtin_ctzll(c);
        c &= c - 1;
        if (clique_dfs(g, candidates & g.row(v) & ~((std::uint64_t(1) << (v + 1)) - 1), need - 1))
            return true;
        candidates &= ~(std::uint64_t(1) << v);
        if (__builtin_popcountll(candidates) < need) return false;
    }
    return false;
}

bool has_clique(const SmallGraph& g, int r) {
    if (r <= 0) return true;
    if (r == 1) return g.n() >= 1;
    std::uint64_t all = g.n() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n()) - 1;
    return clique_dfs(g, all, r);
}

// s vertices with at least t common neighbors elsewhere
bool biclique_subsets(const SmallGraph& g, std::vector<int>& chosen, int next, int s, int t,
                      std::uint64_t common, std::uint64_t chosen_mask) {
    if (static_cast<int>(chosen.size()) == s)
        return __builtin_popcountll(common & ~chosen_mask) >= t;
    if (__builtin_popcountll(common) < t) return false;
    for (int v = next; v < g.n(); ++v) {
        std::uint64_t nc = (chosen.empty() ? g.row(v) : (common & g.row(v)));
        if (__builtin_popcountll(nc) < t) continue;
        chosen.push_back(v);
        if (biclique_subsets(g, chosen, v + 1, s, t, nc, chosen_mask | (std::uint64_t(1) << v)))
            return true;
        chosen.pop_back();
    }
    return false;
}

bool has_biclique(const SmallGraph& g, int s, int t) {
    std::vector<int> chosen;
    return biclique_subsets(g, chosen, 0, s, t, ~std::uint64_t(0), 0);
}

}  // namespace

bool has_path_with_edges(const SmallGraph& g, int t) {
    if (t <= 0) return g.n() >= 1;
    if (t + 1 > g.n()) return false;
    for (int v = 0; v < g.n(); ++v)
        if (path_dfs(g, v, std::uint64_t(1) << v, t)) return true;
    return false;
}

bool contains_any(const SmallGraph& g, const Pattern& p) {
    switch (p.kind()) {
        case Pattern::Kind::Path: return has_path_with_edges(g, p.a());
        case Pattern::Kind::Cycle: return has_cycle_with_edges(g, p.a());
        case Pattern::Kind::Clique: return has_clique(g, p.a());
        case Pattern::Kind::Biclique: return has_biclique(g, p.a(), p.b());
        case Pattern::Kind::Explicit: return detail::find_embedding(g, p.graph()).has_value();
        case Pattern::Kind::Family:
            for (const auto& m : p.members())
                if (contains_any(g, m)) return true;
            return false;
    }
    return false;
}

std::optional<MatchWitness> contains(const SmallGraph& g, const Pattern& p) {
    if (p.kind() == Pattern::Kind::Family) {
        for (const auto& m : p.members())
            if (auto w = contains(g, m)) return w;
        return std::nullopt;
    }
    if (!contains_any(g, p)) return std::nullopt;
    auto emb = detail::find_embedding(g, p.graph());
    if (!emb) throw Error("internal: decider and matcher disagree");
    return MatchWitness{*emb};
}

// --- longest path -------------------------------------------------------------

namespace {

int longest_path_subset_dp(const SmallGraph& g) {
    int n = g.n();
    std::vector<std::uint32_t> dp(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) dp[std::size_t(1) << v] = std::uint32_t(1) << v;
    int best = 0;
    for (std::size_t mask = 1; mask < dp.size(); ++mask) {
        std::uint32_t ends = dp[mask];
        if (!ends) continue;
        best = std::max(best, __builtin_popcountll(mask) - 1);
        std::uint32_t e = ends;
        while (e) {
            int v = __builtin_ctz(e);
            e &= e - 1;
            std::uint64_t ext = g.row(v) & ~static_cast<std::uint64_t>(mask);
            while (ext) {
                int u = __builtin_ctzll(ext);
                ext &= ext - 1;
                dp[mask | (std::size_t(1) << u)] |= std::uint32_t(1) << u;
            }
        }
    }
    return best;
}

void longest_path_dfs(const SmallGraph& g, int v, std::uint64_t visited, int len, int& best) {
    best = std::max(best, len);
    if (best == g.n() - 1) return;
    std::uint64_t cand = g.row(v) & ~visited;
    while (cand) {
        int u = __builtin_ctzll(cand);
        cand &= cand - 1;
        longest_path_dfs(g, u, visited | (std::uint64_t(1) << u), len + 1, best);
        if (best == g.n() - 1) return;
    }
}

}  // namespace

int longest_path_edges(const SmallGraph& g) {
    if (g.n() == 0 || g.edge_count() == 0) return 0;
    if (g.n() <= 20) return longest_path_subset_dp(g);
    int best = 0;
    for (int v = 0; v < g.n(); ++v) {
        longest_path_dfs(g, v, std::uint64_t(1) << v, 0, best);
        if (best == g.n() - 1) break;
    }
    return best;
}

// --- copy counting ------------------------------------------------------------

Int count_copies(const Pattern& p, const SmallGraph& g) {
    if (p.kind() == Pattern::Kind::Family)
        throw BadParameter("copy counting takes a single pattern");
    const SmallGraph& pg = p.graph();
    if (pg.n() > 8) throw CapacityExceeded("copy counting limited to 8-vertex patterns");
    Int embeddings = detail::count_embeddings(g, pg);
    Int automorphisms = detail::count_embeddings(pg, pg);
    // every copy is hit once per pattern automorphism
    return embeddings / automorphisms;
}

}  // namespace turan
