#include "turan/constructions.hpp"

#include <algorithm>

namespace turan {

namespace {

// floor(c * k^{num/den}) for rational c, via (m q)^den <= p^den k^num
long long floor_scaled_power(const Rat& c, long long k, unsigned num, unsigned den) {
    Int x = ipow(c.num(), den) * ipow(Int(k), num);
    Int root = iroot_floor(x, den);
    return to_ll(root / c.den());
}

// largest a with den_coeff * a^2 <= num_coeff (for floor(sqrt(num/den)))
long long floor_sqrt_ratio(long long num, long long den) {
    if (num < 0) return -1;
    Int a = isqrt_floor(Int(num) / den);
    while ((a + 1) * (a + 1) * den <= num) ++a;
    while (a * a * den > num) --a;
    return to_ll(a);
}

BoundRecord lower_record(const Rat& value, const std::string& name, const std::string& anchor,
                         const std::string& note) {
    BoundRecord r;
    r.kind = BoundRecord::Kind::Lower;
    r.value = value;
    r.provenance = BoundRecord::Provenance::Formula;
    r.name = name;
    r.anchor = anchor;
    r.caveat = BoundRecord::Caveat::ExactAtK;
    r.note = note;
    return r;
}

}  // namespace

bool HostFamily::generable() const { return vertex_count() <= kMaxVertices; }

long long HostFamily::vertex_count() const {
    switch (kind) {
        case Kind::Complete: return p1;
        case Kind::Turan: return p1;
        case Kind::Biclique: return p1 + p2;
    }
    return 0;
}

SmallGraph HostFamily::instance() const {
    if (!generable())
        throw CapacityExceeded("family instance needs " + std::to_string(vertex_count()) + " vertices");
    switch (kind) {
        case Kind::Complete: return complete(static_cast<int>(p1));
        case Kind::Turan: return turan_graph(static_cast<int>(p1), static_cast<int>(p2));
        case Kind::Biclique: return biclique(static_cast<int>(p1), static_cast<int>(p2));
    }
    throw Error("unreachable");
}

FamilyResult family_for(long long k, const Pattern& f) {
    if (f.kind() == Pattern::Kind::Family)
        throw Unsupported("host families are dispatched on single patterns");
    if (f.is_matching() || f.is_star())
        throw InfiniteInverse("ex^-1 is infinite for matchings and stars");
    if (k < 1) throw BadParameter("k must be positive");

    HostFamily host;
    if (f.kind() == Pattern::Kind::Path && f.a() % 2 == 1) {
        int t = f.a();  // odd, >= 3 (P_1 is a star)
        long long m = 2 * k / (t - 1) - 1;
        if (m < 1) throw BadParameter("k below feasibility for this path");
        host.kind = HostFamily::Kind::Complete;
        host.p1 = m;
        host.family = "complete";
        host.anchor = "briggs-cox complete-graph bound for paths";
        host.params = {{"n", std::to_string(m)}};
        host.closed_form_edges = Rat(binom(m, 2));
        return {host, lower_record(host.closed_form_edges, "briggs-cox-complete", host.anchor,
                                   "K_" + std::to_string(m) + " stays below " + std::to_string(k) +
                                       " by the path bound")};
    }
    if (f.kind() == Pattern::Kind::Path) {
        int t = f.a() / 2;  // even path P_{2t}, t >= 2 (P_2 is a star)
        long long n = (k - 1) / (t - 1);
        if (n < t) throw BadParameter("k below feasibility for this path");
        host.kind = HostFamily::Kind::Turan;
        host.p1 = n;
        host.p2 = t;
        host.family = "turan";
        host.anchor = "balanced multipartite host for even paths";
        host.params = {{"n", std::to_string(n)}, {"r", std::to_string(t)}};
        host.closed_form_edges = Rat(turan_edge_count(n, t));
        return {host, lower_record(host.closed_form_edges, "turan-even-path", host.anchor,
                                   "T(" + std::to_string(n) + "," + std::to_string(t) + ")")};
    }
    if (f.kind() == Pattern::Kind::Cycle && f.a() == 4) {
        long long a = floor_sqrt_ratio(2 * k, 3);
        long long b = (2 * k - 3) / 3;
        if (a < 1 || b < 1) throw BadParameter("k below feasibility for C4");
        host.kind = HostFamily::Kind::Biclique;
        host.p1 = a;
        host.p2 = b;
        host.family = "biclique";
        host.anchor = "cherry-count biclique host for C4";
        host.params = {{"a", std::to_string(a)}, {"b", std::to_string(b)}};
        host.closed_form_edges = Rat(Int(a) * b);
        return {host, lower_record(host.closed_form_edges, "cherry-host", host.anchor,
                                   "K_{" + std::to_string(a) + "," + std::to_string(b) + "}")};
    }
    if (f.kind() == Pattern::Kind::Biclique) {
        int s = f.a(), t = f.b();  // 2 <= s <= t here (s = 1 is a star)
        long long a = k / s;
        long long b = to_ll(iroot_floor(Int(k) / t, static_cast<unsigned>(s)));
        if (a < 1 || b < 1) throw BadParameter("k below feasibility for this biclique");
        host.kind = HostFamily::Kind::Biclique;
        host.p1 = a;
        host.p2 = b;
        host.family = "biclique";
        host.anchor = "jensen star-count biclique host";
        host.params = {{"a", std::to_string(a)}, {"b", std::to_string(b)}};
        host.closed_form_edges = Rat(Int(a) * b);
        BoundRecord rec = lower_record(host.closed_form_edges, "jensen-host", host.anchor,
                                       "K_{" + std::to_string(a) + "," + std::to_string(b) +
                                           "}; leading term k^{1+1/s}/(s t^{1/s})");
        return {host, rec};
    }
    if (f.kind() == Pattern::Kind::Cycle && f.a() % 2 == 0 && f.a() >= 6) {
        int t = f.a() / 2;
        EvenCycleConstants cs = even_cycle_constants(t);
        unsigned expo_den = static_cast<unsigned>(t + (t % 2 == 1 ? 1 : 2));
        unsigned expo_num = expo_den - 2;  // 1 - 2/(t+1) or 1 - 2/(t+2)
        long long a = floor_scaled_power(cs.c1, k, expo_num, expo_den);
        long long b = (cs.c2 * Rat(k)).floor().convert_to<long long>();
        if (a < 1 || b < 1) throw BadParameter("k below feasibility for this cycle");
        host.kind = HostFamily::Kind::Biclique;
        host.p1 = a;
        host.p2 = b;
        host.family = "biclique";
        host.anchor = "constant-tuned biclique host for even cycles";
        host.params = {{"a", std::to_string(a)},
                       {"b", std::to_string(b)},
                       {"c1", cs.c1.str()},
                       {"c2", cs.c2.str()}};
        host.closed_form_edges = Rat(Int(a) * b);
        return {host, lower_record(host.closed_form_edges, "even-cycle-host", host.anchor,
                                   "K_{" + std::to_string(a) + "," + std::to_string(b) + "}")};
    }
    throw Unsupported("no host family dispatch for pattern " + f.literal());
}

Rat prop_pr_formula(long long n, int r, int t) {
    if (n < 2 * t || r < 2 || t < 2) throw BadParameter("formula needs n >= 2t, r >= 2, t >= 2");
    return turan_path_block_value(n, r, t);
}

SmallGraph prop_pr_witness(long long n, int r, int t) {
    if (r < 2 || t < 2 || n < 2 * t) throw BadParameter("witness needs n >= 2t, r >= 2, t >= 2");
    if (n > kMaxVertices) throw CapacityExceeded("witness needs " + std::to_string(n) + " vertices");
    int ni = static_cast<int>(n);
    SmallGraph w(ni);

    // contiguous part layout of turan_graph(n, r)
    std::vector<int> part_of(ni), offset(r, 0), size(r, 0);
    {
        int q = ni / r, rem = ni % r, v = 0;
        for (int p = 0; p < r; ++p) {
            size[p] = q + (p < rem ? 1 : 0);
            offset[p] = v;
            for (int i = 0; i < size[p] && v < ni; ++i) part_of[v++] = p;
        }
    }

    if (r <= t) {
        // t-1 centers inside part 0 joined across, t-1 centers outside joined into part 0
        int a_size = size[0];
        if (a_size < t - 1 || ni - a_size < t - 1)
            throw BadParameter("parts too small for the star construction");
        std::vector<int> centers_in, centers_out;
        for (int i = 0; i < t - 1; ++i) centers_in.push_back(i);  // first of part 0
        for (int i = 0; i < t - 1; ++i) centers_out.push_back(a_size + i);
        auto is_center_out = [&](int v) {
            return v >= a_size && v < a_size + (t - 1);
        };
        for (int c : centers_in)
            for (int v = a_size; v < ni; ++v)
                if (!is_center_out(v)) w.add_edge(c, v);
        for (int c : centers_out)
            for (int v = t - 1; v < a_size; ++v) w.add_edge(c, v);
    } else {
        // floor(n/2t) disjoint balanced blocks, assembled in the round-robin
        // numbering and mapped back to the contiguous labeling
        std::vector<int> used(r, 0);
        auto to_contiguous = [&](long long j) {
            int p = static_cast<int>(j % r);
            return offset[p] + static_cast<int>(j / r);
        };
        long long blocks = n / (2 * t);
        for (long long bidx = 0; bidx < blocks; ++bidx) {
            long long lo = 2LL * t * bidx;
            for (long long i = lo; i < lo + 2 * t; ++i)
                for (long long j = i + 1; j < lo + 2 * t; ++j)
                    if (i % r != j % r) w.add_edge(to_contiguous(i), to_contiguous(j));
        }
    }
    w.validate();
    if (has_path_with_edges(w, 2 * t)) throw Error("internal: witness contains the forbidden path");
    {
        SmallGraph host = turan_graph(ni, r);
        for (auto [i, j] : w.edges())
            if (!host.has_edge(i, j)) throw Error("internal: witness escapes the Turan host");
    }
    return w;
}

EvenCycleConstants even_cycle_constants(int t) {
    bool odd = t % 2 == 1;
    if ((odd && t < 3) || (!odd && t < 2)) throw BadParameter("even-cycle constants need t >= 2");
    Rat threshold(1, 2 * t - 3);

    EvenCycleConstants best;
    best.odd_branch = odd;
    best.threshold = threshold;
    bool found = false;
    Rat best_product(0);

    // c2 on a /100 grid, c1 binary-searched on a /1024 grid, inequality
    // checked exactly after clearing denominators
    auto feasible = [&](const Rat& c1, const Rat& c2) {
        Rat slack = threshold - c2;
        if (!(slack > Rat(0))) return false;
        Rat rhs = slack.pow(static_cast<unsigned>(2 * t));
        if (odd) return (c1 * c2).pow(static_cast<unsigned>(t + 1)) < rhs;
        return c1.pow(static_cast<unsigned>(t + 2)) * c2.pow(static_cast<unsigned>(t)) < rhs;
    };
    for (int i = 1; i < 100; ++i) {
        Rat c2(i, 100);
        if (!(c2 < threshold)) break;
        long long lo = 0, hi = 4096;  // c1 = m/1024 up to 4
        while (lo < hi) {
            long long mid = (lo + hi + 1) / 2;
            if (feasible(Rat(mid, 1024), c2)) lo = mid;
            else hi = mid - 1;
        }
        if (lo == 0) continue;
        Rat c1(lo, 1024);
        if (!found || c1 * c2 > best_product) {
            best.c1 = c1;
            best.c2 = c2;
            best_product = c1 * c2;
            found = true;
        }
    }
    if (!found) throw SearchFailed("no grid point satisfies the constant inequality for t=" + std::to_string(t));
    if (!feasible(best.c1, best.c2)) throw Error("internal: constants fail re-verification");
    return best;
}

std::vector<BoundRecord> conjecture_ledger(long long k, const Pattern& f) {
    std::vector<BoundRecord> out;
    auto conj = [&](const Rat& value, const std::string& name, const std::string& note) {
        BoundRecord r;
        r.kind = BoundRecord::Kind::Lower;
        r.value = value;
        r.provenance = BoundRecord::Provenance::Conjectured;
        r.name = name;
        r.anchor = "conjectured asymptotic, not certified";
        r.caveat = BoundRecord::Caveat::Conjectured;
        r.note = note;
        out.push_back(r);
    };
    if (f.kind() == Pattern::Kind::Path && f.a() % 2 == 1 && f.a() >= 3) {
        int t = (f.a() - 1) / 2;
        conj(Rat(binom(k / t, 2)), "conjecture-odd-path",
             "complete graph conjectured extremal, value C(floor(k/t),2)");
        return out;
    }
    if (f.kind() == Pattern::Kind::Path && f.a() % 2 == 0 && f.a() >= 4) {
        int t = f.a() / 2;
        Rat v = Rat(Int(k) * k, Int(2) * (t - 1) * (t - 1)) * (Rat(1) - Rat(1, t));
        conj(v, "conjecture-even-path", "balanced t-partite host conjectured extremal");
        return out;
    }
    if (f.kind() == Pattern::Kind::Cycle && f.a() == 4) {
        // 2 sqrt(2) k^{3/2} / (3 sqrt(3)) = sqrt(8 k^3 / 27), reported to 1/1000
        Int x = Int(8) * 1'000'000 * ipow(Int(k), 3);
        Int mq = isqrt_floor(x / 27);
        while ((mq + 1) * (mq + 1) * 27 <= x) ++mq;
        conj(Rat(mq, 1000), "conjecture-c4",
             "value 2*sqrt(2)k^{3/2}/(3*sqrt(3)), rounded down at 1/1000");
        return out;
    }
    throw Unsupported("no conjecture entries for pattern " + f.literal());
}

}  // namespace turan
