#include "turan/bounds.hpp"

#include <algorithm>

namespace turan {

BoundRecord ex_upper_eg(const SmallGraph& g, int path_edges) {
    if (path_edges < 1) throw BadParameter("path length must be positive");
    Rat value = Rat(Int(path_edges - 1) * g.n(), 2);
    BoundRecord r;
    r.kind = BoundRecord::Kind::Upper;
    r.value = value;
    r.provenance = BoundRecord::Provenance::Formula;
    r.name = "erdos-gallai";
    r.anchor = "erdos-gallai path bound (t-1)n/2";
    r.note = "t=" + std::to_string(path_edges) + ", n=" + std::to_string(g.n());
    return r;
}

BoundRecord ex_upper_ers_c4(const SmallGraph& g) {
    Int n = g.n();
    // floor((sqrt(n^3) + n) / 2) agrees with floor((n^{3/2} + n)/2)
    Int q = isqrt_floor(n * n * n);
    Int bound = (q + n) / 2;
    Int capped = std::min(bound, Int(g.edge_count()));
    BoundRecord r;
    r.kind = BoundRecord::Kind::Upper;
    r.value = Rat(capped);
    r.provenance = BoundRecord::Provenance::Formula;
    r.name = "erdos-renyi-sos";
    r.anchor = "erdos-renyi-sos C4 bound n^{3/2}/2 + n/2";
    r.note = "n=" + std::to_string(g.n());
    return r;
}

BoundRecord ex_upper_nv(long long m, long long n, int t) {
    if (t < 2) throw BadParameter("even-cycle bound needs t >= 2");
    if (m < 0 || n < 0) throw BadParameter("negative part size");
    Int power_term;
    if (t % 2 == 1) {
        // (mn)^{(t+1)/(2t)}, rounded up: smallest c with c^{2t} >= (mn)^{t+1}
        power_term = iroot_ceil(ipow(Int(m) * n, static_cast<unsigned>(t + 1)), static_cast<unsigned>(2 * t));
    } else {
        // m^{(t+2)/(2t)} n^{1/2}
        power_term = iroot_ceil(ipow(Int(m), static_cast<unsigned>(t + 2)) * ipow(Int(n), static_cast<unsigned>(t)),
                                static_cast<unsigned>(2 * t));
    }
    Int value = Int(2 * t - 3) * (power_term + m + n);
    BoundRecord r;
    r.kind = BoundRecord::Kind::Upper;
    r.value = Rat(value);
    r.provenance = BoundRecord::Provenance::Formula;
    r.name = "naor-verstraete";
    r.anchor = "naor-verstraete bipartite even-cycle bound";
    r.note = "C_{" + std::to_string(2 * t) + "} in K_{" + std::to_string(m) + "," + std::to_string(n) +
             "}, irrational power rounded up";
    return r;
}

Rat turan_path_block_value(long long n, int r, int t) {
    if (t < 2 || r < 2 || n < 0) throw BadParameter("block bound needs t >= 2, r >= 2");
    if (r <= t) return Rat(Int(n) * (t - 1));
    Rat opt1 = Rat(2 * t - 1, 2);
    Rat opt2 = Rat(2 * t - 3, 2) + Rat(r, 2 * t);
    return Rat(Int(n)) * std::min(opt1, opt2);
}

BoundRecord ex_upper_turan_block(long long n, int r, int t) {
    Rat v = turan_path_block_value(n, r, t);
    BoundRecord rec;
    rec.kind = BoundRecord::Kind::Upper;
    rec.value = v;
    rec.provenance = BoundRecord::Provenance::Formula;
    rec.name = "turan-partite-block";
    rec.anchor = "degree-peeling block bound for P_{2t} in T(n,r)";
    rec.note = "n=" + std::to_string(n) + ", r=" + std::to_string(r) + ", t=" + std::to_string(t);
    return rec;
}

Int min_sum_binom(long long total, long long parts, long long cap, int s) {
    if (total < 0 || parts < 0 || cap < 0 || s < 1) throw BadParameter("min_sum_binom: bad arguments");
    if (parts == 0) {
        if (total > 0) throw BadParameter("min_sum_binom: no parts to hold the total");
        return 0;
    }
    if (total > parts * cap) throw BadParameter("min_sum_binom: total exceeds parts*cap");
    long long q = total / parts, rem = total % parts;
    // balanced degrees minimize a convex symmetric sum
    return Int(parts - rem) * binom(q, s) + Int(rem) * binom(q + 1, s);
}

long long c4_upper_bipartite(long long a, long long b) {
    if (a < 0 || b < 0) throw BadParameter("negative part size");
    auto side_max = [](long long centers, long long leaves) {
        // largest m with min cherry count (centers side) within the leaf pair budget
        Int budget = binom(leaves, 2);
        long long lo = 0, hi = centers * leaves;
        while (lo < hi) {
            long long mid = (lo + hi + 1) / 2;
            if (min_sum_binom(mid, centers, leaves, 2) <= budget) lo = mid;
            else hi = mid - 1;
        }
        return lo;
    };
    return std::min(side_max(b, a), side_max(a, b));
}

std::string bound_kind_name(BoundRecord::Kind k) {
    return k == BoundRecord::Kind::Lower ? "lower" : "upper";
}
std::string bound_caveat_name(BoundRecord::Caveat c) {
    switch (c) {
        case BoundRecord::Caveat::ExactAtK: return "exact-at-k";
        case BoundRecord::Caveat::Asymptotic: return "asymptotic";
        case BoundRecord::Caveat::Conjectured: return "conjectured";
    }
    return "";
}
std::string bound_provenance_name(BoundRecord::Provenance p) {
    switch (p) {
        case BoundRecord::Provenance::Formula: return "formula";
        case BoundRecord::Provenance::Certificate: return "certificate";
        case BoundRecord::Provenance::Exact: return "exact";
        case BoundRecord::Provenance::Conjectured: return "conjectured";
    }
    return "";
}

}  // namespace turan
