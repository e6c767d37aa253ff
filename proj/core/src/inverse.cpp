#include "turan/inverse.hpp"

#include <algorithm>
#include <future>

#include "turan/canonical.hpp"
#include "turan/enumerate.hpp"

namespace turan {

namespace {

void require_finite(const Pattern& f) {
    if (f.kind() == Pattern::Kind::Family)
        throw Unsupported("inverse dispatch covers single patterns only");
    if (!f.has_edge()) throw BadParameter("pattern needs at least one edge");
    if (f.is_matching() || f.is_star())
        throw InfiniteInverse("ex^-1(k, F) is infinite: F is a matching or a star");
}

std::string int_str(const Int& v) { return v.str(); }

}  // namespace

std::optional<int> complete_multipartite_parts(const SmallGraph& g) {
    int n = g.n();
    if (n == 0) return 0;
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    std::vector<std::uint64_t> part(n);
    for (int v = 0; v < n; ++v) part[v] = (~g.row(v)) & all;  // non-neighbors + self
    std::uint64_t seen = 0;
    int parts = 0;
    for (int v = 0; v < n; ++v) {
        if ((seen >> v) & 1) continue;
        std::uint64_t p = part[v];
        std::uint64_t rest = p;
        while (rest) {
            int u = __builtin_ctzll(rest);
            rest &= rest - 1;
            if (part[u] != p) return std::nullopt;  // non-adjacency not transitive
        }
        seen |= p;
        ++parts;
    }
    return parts;
}

// --- counting certificates ----------------------------------------------------

namespace {

// success: every k-edge subgraph of K_{leaves, centers} contains K_{s,t}
// (s leaves, t centers), by exact convexity over integer degree sequences.
CountingCertificate star_forcing_chain(const std::string& kind, long long k, long long leaves,
                                       long long centers, int s, int t) {
    CountingCertificate cert;
    cert.kind = kind;
    cert.k = k;
    cert.side_a = leaves;
    cert.side_b = centers;
    cert.s = s;
    cert.t = t;
    cert.chain.push_back("host K_{" + std::to_string(leaves) + "," + std::to_string(centers) +
                         "}, k=" + std::to_string(k));
    long long host_edges = leaves * centers;
    if (k > host_edges) {
        cert.vacuous = true;
        cert.success = true;
        cert.chain.push_back("k > e(host) = " + std::to_string(host_edges) +
                             ": no k-edge subgraph exists, forcing is vacuous");
        return cert;
    }
    Int stars_min = min_sum_binom(k, centers, leaves, s);
    Int budget = Int(t - 1) * binom(leaves, s);
    cert.chain.push_back("min over k-edge subgraphs of sum_c C(d_c," + std::to_string(s) +
                         ") = " + int_str(stars_min) + " (balanced integer degrees)");
    cert.chain.push_back("leaf-subset budget (t-1) C(" + std::to_string(leaves) + "," +
                         std::to_string(s) + ") = " + int_str(budget));
    if (stars_min > budget) {
        cert.success = true;
        cert.chain.push_back(int_str(stars_min) + " > " + int_str(budget) + ": some " +
                             std::to_string(s) + "-subset carries >= " + std::to_string(t) +
                             " stars, yielding K_{" + std::to_string(s) + "," + std::to_string(t) + "}");
    } else {
        cert.failing = int_str(stars_min) + " <= " + int_str(budget) +
                       ": the pigeonhole step does not close at this k";
    }
    return cert;
}

}  // namespace

CountingCertificate cherry_certificate(long long k) {
    if (k < 1) throw BadParameter("k must be positive");
    // parts floor(sqrt(2k/3)) and floor(2k/3 - 1)
    long long a = 0;
    while (3 * (a + 1) * (a + 1) <= 2 * k) ++a;
    long long b = std::max<long long>(0, (2 * k - 3) / 3);
    return star_forcing_chain("cherry", k, a, b, 2, 2);
}

CountingCertificate jensen_certificate(long long k, int s, int t) {
    if (s < 2 || t < s) throw BadParameter("jensen certificate needs 2 <= s <= t");
    if (k < 1) throw BadParameter("k must be positive");
    long long a = k / s;
    long long b = to_ll(iroot_floor(Int(k) / t, static_cast<unsigned>(s)));
    if (b < s) {
        CountingCertificate cert;
        cert.kind = "jensen";
        cert.k = k;
        cert.side_a = b;
        cert.side_b = a;
        cert.s = s;
        cert.t = t;
        cert.failing = "leaf side " + std::to_string(b) + " < s = " + std::to_string(s);
        cert.chain.push_back(cert.failing);
        return cert;
    }
    return star_forcing_chain("jensen", k, b, a, s, t);
}

// --- certification -------------------------------------------------------------

namespace {

BoundRecord certified_lower(long long edges, BoundRecord::Provenance prov, const std::string& name,
                            const std::string& anchor, const std::string& note) {
    BoundRecord r;
    r.kind = BoundRecord::Kind::Lower;
    r.value = Rat(edges);
    r.provenance = prov;
    r.name = name;
    r.anchor = anchor;
    r.caveat = BoundRecord::Caveat::ExactAtK;
    r.note = note;
    return r;
}

bool is_c4_pattern(const Pattern& f) {
    return (f.kind() == Pattern::Kind::Cycle && f.a() == 4) ||
           (f.kind() == Pattern::Kind::Biclique && f.a() == 2 && f.b() == 2);
}

}  // namespace

CertifyResult certify_lower(long long k, const Pattern& f, const SmallGraph& host,
                            const ExOptions& opts) {
    if (k < 1) throw BadParameter("k must be positive");
    if (!f.has_edge()) throw BadParameter("pattern needs at least one edge");
    CertifyResult res;
    long long host_edges = host.edge_count();

    // exact solver when the host is small; larger hosts go straight to the
    // counting certificates and the formula ledger
    if (host_edges <= opts.edge_cap_generic) {
        try {
            ExOptions o = opts;
            o.stop_at = k;  // a k-edge F-free subgraph disproves immediately
            ExResult r = ex_exact(host, f, o);
            if (r.status == SolveStatus::TargetReached) {
                res.ex_value = r.value;
                res.failure = "construction does not certify: a " + std::to_string(r.value) +
                              "-edge F-free subgraph exists, >= k = " + std::to_string(k);
                return res;
            }
            if (r.status == SolveStatus::Complete) {
                res.ex_value = r.value;
                if (r.value <= k - 1) {
                    res.certified = true;
                    res.evidence = "exact solver: ex(host, F) = " + std::to_string(r.value) +
                                   " < " + std::to_string(k);
                    res.lower = certified_lower(host_edges, BoundRecord::Provenance::Exact,
                                                "exact-search", "exhaustive solver verdict",
                                                res.evidence);
                    return res;
                }
                res.failure = "construction does not certify: ex(host, F) = " +
                              std::to_string(r.value) + " >= k = " + std::to_string(k);
                return res;
            }
            // budget ran out below k: inconclusive, fall through
        } catch (const CapacityExceeded&) {
        }
    }

    // counting certificates on complete bipartite hosts
    std::uint64_t s0 = 0, s1 = 0;
    bool bip = host.bipartition(s0, s1);
    long long a = __builtin_popcountll(s0), b = __builtin_popcountll(s1);
    bool complete_bip = bip && host_edges == a * b;
    if (complete_bip && is_c4_pattern(f)) {
        for (int orient = 0; orient < 2; ++orient) {
            auto cert = star_forcing_chain("cherry", k, orient ? b : a, orient ? a : b, 2, 2);
            if (cert.success) {
                res.certified = true;
                res.evidence = "cherry certificate: " + cert.chain.back();
                res.lower = certified_lower(host_edges, BoundRecord::Provenance::Certificate,
                                            "cherry-certificate", "cherry-count forcing chain",
                                            res.evidence);
                return res;
            }
        }
    }
    if (complete_bip && f.kind() == Pattern::Kind::Biclique && f.a() >= 2) {
        for (int orient = 0; orient < 2; ++orient) {
            auto cert = star_forcing_chain("jensen", k, orient ? b : a, orient ? a : b, f.a(), f.b());
            if (cert.success) {
                res.certified = true;
                res.evidence = "jensen certificate: " + cert.chain.back();
                res.lower = certified_lower(host_edges, BoundRecord::Provenance::Certificate,
                                            "jensen-certificate", "jensen star-count forcing chain",
                                            res.evidence);
                return res;
            }
        }
    }

    // formula ledger
    if (f.kind() == Pattern::Kind::Path) {
        Rat eg = Rat(Int(f.a() - 1) * host.n(), 2);
        if (eg.floor() <= k - 1) {
            res.certified = true;
            res.evidence = "erdos-gallai: ex(host, P) <= " + eg.str() + " < " + std::to_string(k);
            res.lower = certified_lower(host_edges, BoundRecord::Provenance::Formula, "erdos-gallai",
                                        "erdos-gallai path bound", res.evidence);
            return res;
        }
        if (f.a() % 2 == 0) {
            auto parts = complete_multipartite_parts(host);
            if (parts && *parts >= 2) {
                Rat block = turan_path_block_value(host.n(), *parts, f.a() / 2);
                if (block.floor() <= k - 1) {
                    res.certified = true;
                    res.evidence = "block bound: ex(T-host, P) <= " + block.str() + " < " +
                                   std::to_string(k);
                    res.lower = certified_lower(host_edges, BoundRecord::Provenance::Formula,
                                                "turan-partite-block",
                                                "degree-peeling block bound", res.evidence);
                    return res;
                }
            }
        }
    }
    if (is_c4_pattern(f)) {
        auto ers = ex_upper_ers_c4(host);
        if (ers.value.floor() <= k - 1) {
            res.certified = true;
            res.evidence = "erdos-renyi-sos: ex(host, C4) <= " + ers.value.str() + " < " +
                           std::to_string(k);
            res.lower = certified_lower(host_edges, BoundRecord::Provenance::Formula, "erdos-renyi-sos",
                                        "erdos-renyi-sos C4 bound", res.evidence);
            return res;
        }
    }
    if (f.kind() == Pattern::Kind::Cycle && f.a() % 2 == 0 && f.a() >= 4 && bip) {
        auto nv = ex_upper_nv(a, b, f.a() / 2);
        if (nv.value.floor() <= k - 1) {
            res.certified = true;
            res.evidence = "naor-verstraete: ex(host, C) <= " + nv.value.str() + " < " +
                           std::to_string(k);
            res.lower = certified_lower(host_edges, BoundRecord::Provenance::Formula, "naor-verstraete",
                                        "naor-verstraete bipartite even-cycle bound", res.evidence);
            return res;
        }
    }

    if (res.failure.empty())
        res.failure = "no certification route closed ex(host, F) < k at this size";
    return res;
}

CertifyResult certify_lower(long long k, const Pattern& f, const HostFamily& family,
                            const ExOptions& opts) {
    if (!family.generable()) {
        CertifyResult res;
        res.failure = "family instance exceeds the 64-vertex cap; certificate-only route not available";
        // counting certificates can still work without generating the instance
        if (family.kind == HostFamily::Kind::Biclique) {
            if (is_c4_pattern(f)) {
                auto cert = star_forcing_chain("cherry", k, family.p1, family.p2, 2, 2);
                if (!cert.success)
                    cert = star_forcing_chain("cherry", k, family.p2, family.p1, 2, 2);
                if (cert.success) {
                    res.certified = true;
                    res.failure.clear();
                    res.evidence = "cherry certificate: " + cert.chain.back();
                    res.lower = certified_lower(family.p1 * family.p2,
                                                BoundRecord::Provenance::Certificate,
                                                "cherry-certificate", "cherry-count forcing chain",
                                                res.evidence);
                }
            } else if (f.kind() == Pattern::Kind::Biclique && f.a() >= 2) {
                auto cert = star_forcing_chain("jensen", k, family.p2, family.p1, f.a(), f.b());
                if (!cert.success)
                    cert = star_forcing_chain("jensen", k, family.p1, family.p2, f.a(), f.b());
                if (cert.success) {
                    res.certified = true;
                    res.failure.clear();
                    res.evidence = "jensen certificate: " + cert.chain.back();
                    res.lower = certified_lower(family.p1 * family.p2,
                                                BoundRecord::Provenance::Certificate,
                                                "jensen-certificate", "jensen star-count forcing chain",
                                                res.evidence);
                }
            }
        }
        return res;
    }
    return certify_lower(k, f, family.instance(), opts);
}

// --- exhaustive inverse search ---------------------------------------------------

InverseResult inv_ex_exact(long long k, const Pattern& f, const InverseCaps& caps, int threads,
                           const ExOptions& solver) {
    require_finite(f);
    if (k < 1) throw BadParameter("k must be positive");
    if (caps.max_vertices < 0 || caps.max_vertices > kEnumerateDefaultCap)
        throw CapacityExceeded("host search capped at " + std::to_string(kEnumerateDefaultCap) +
                               " vertices");

    InverseResult res;
    res.k = k;
    res.pattern = f.literal();
    res.value = 0;  // the empty host always qualifies

    bool pathlike = f.kind() == Pattern::Kind::Path && f.a() >= 3;
    long long vertex_bound = pathlike ? 2 * k - 1 : -1;
    bool bound_fits = pathlike && vertex_bound <= caps.max_vertices &&
                      Int(caps.max_edges) >= binom(vertex_bound, 2);

    struct HostVerdict {
        bool pass = false;
        bool unresolved = false;
        long long edges = 0;
        CanonicalKey key;
    };

    std::vector<std::pair<long long, CanonicalKey>> passing;
    for (int n = 1; n <= caps.max_vertices; ++n) {
        EnumOptions eo;
        eo.max_edges = caps.max_edges;
        eo.cap = caps.max_vertices;
        eo.filter = [](const SmallGraph& g) { return g.min_degree() >= 1; };
        auto hosts = enumerate_graphs(n, eo);
        res.hosts_examined += static_cast<long long>(hosts.size());

        auto judge = [&](const SmallGraph& host) {
            HostVerdict v;
            v.edges = host.edge_count();
            if (v.edges < k) {
                v.pass = true;  // ex <= e(host) < k with nothing to search
            } else {
                ExOptions o = solver;
                o.stop_at = k;
                ExResult r = ex_exact(host, f, o);
                if (r.status == SolveStatus::TargetReached) {
                    v.pass = false;
                } else if (r.status == SolveStatus::Complete) {
                    v.pass = r.value <= k - 1;
                } else {
                    v.unresolved = true;
                }
            }
            if (v.pass) v.key = canonical_key(host);
            return v;
        };

        std::vector<HostVerdict> verdicts(hosts.size());
        int workers = std::max(1, std::min(threads, 64));
        if (workers == 1 || hosts.size() < 32) {
            for (std::size_t i = 0; i < hosts.size(); ++i) verdicts[i] = judge(hosts[i]);
        } else {
            std::vector<std::future<void>> futs;
            for (int w = 0; w < workers; ++w)
                futs.push_back(std::async(std::launch::async, [&, w] {
                    for (std::size_t i = w; i < hosts.size(); i += workers)
                        verdicts[i] = judge(hosts[i]);
                }));
            for (auto& fu : futs) fu.get();
        }
        for (auto& v : verdicts) {
            if (v.unresolved) ++res.hosts_unresolved;
            if (v.pass) passing.emplace_back(v.edges, v.key);
        }
    }

    for (auto& [e, key] : passing) res.value = std::max(res.value, e);
    for (auto& [e, key] : passing)
        if (e == res.value && res.value > 0) res.extremal_hosts.push_back(key);
    std::sort(res.extremal_hosts.begin(), res.extremal_hosts.end());

    res.attestation.max_vertices = caps.max_vertices;
    res.attestation.max_edges = caps.max_edges;
    if (pathlike && bound_fits && res.hosts_unresolved == 0) {
        res.attestation.kind = InverseAttestation::Kind::ExhaustiveHostSearch;
        res.attestation.absolute = true;
        res.attestation.note = "star-forest vertex bound v < 2k fits inside the caps";
    } else if (pathlike && !bound_fits) {
        res.attestation.kind = InverseAttestation::Kind::CertifiedLowerOnly;
        res.attestation.absolute = false;
        res.attestation.note = "caps too tight: proven vertex bound " + std::to_string(vertex_bound) +
                               " exceeds the search caps; value is a certified lower bound";
    } else {
        res.attestation.kind = InverseAttestation::Kind::ExhaustiveHostSearch;
        res.attestation.absolute = false;
        res.attestation.note = "exact relative to the caps; no proven vertex bound for this pattern";
    }
    if (res.hosts_unresolved > 0)
        res.attestation.note += "; " + std::to_string(res.hosts_unresolved) +
                                " hosts hit the solver budget and were rejected conservatively";

    try {
        res.bounds = bound_report(k, f);
    } catch (const Unsupported&) {
    }
    return res;
}

// --- the bound ledger -------------------------------------------------------------

namespace {

BoundRecord asym(BoundRecord::Kind kind, const Rat& value, const std::string& name,
                 const std::string& anchor, const std::string& note) {
    BoundRecord r;
    r.kind = kind;
    r.value = value;
    r.provenance = BoundRecord::Provenance::Formula;
    r.name = name;
    r.anchor = anchor;
    r.caveat = BoundRecord::Caveat::Asymptotic;
    r.note = note;
    return r;
}

Rat power_floor(long long k, unsigned num, unsigned den) {
    return Rat(iroot_floor(ipow(Int(k), num), den));
}

}  // namespace

std::vector<BoundRecord> bound_report(long long k, const Pattern& f) {
    if (f.kind() == Pattern::Kind::Family) throw Unsupported("ledger covers single patterns");
    if (!f.has_edge() || f.is_star() || f.is_matching())
        throw Unsupported("no ledger for stars or matchings (infinite inverse)");
    if (k < 1) throw BadParameter("k must be positive");

    std::vector<BoundRecord> out;
    auto push_family_lower = [&](bool require_cert) {
        try {
            FamilyResult fam = family_for(k, f);
            BoundRecord rec = fam.lower;
            if (require_cert) rec.caveat = BoundRecord::Caveat::Asymptotic;
            out.push_back(rec);
            return true;
        } catch (const BadParameter&) {
            return false;
        }
    };

    if (f.kind() == Pattern::Kind::Path) {
        int t = f.a();
        long long m = 2 * k / (t - 1) - 1;
        if (m >= 1) {
            BoundRecord bc;
            bc.kind = BoundRecord::Kind::Lower;
            bc.value = Rat(binom(m, 2));
            bc.provenance = BoundRecord::Provenance::Formula;
            bc.name = "briggs-cox-complete";
            bc.anchor = "complete-graph lower bound for paths";
            bc.caveat = BoundRecord::Caveat::ExactAtK;
            bc.note = "C(floor(2k/(t-1))-1, 2) with t=" + std::to_string(t);
            out.push_back(bc);
        }
        if (t % 2 == 0) {
            int tau = t / 2;
            try {
                FamilyResult fam = family_for(k, f);
                out.push_back(fam.lower);
            } catch (const BadParameter&) {
            }
            out.push_back(asym(BoundRecord::Kind::Lower,
                               Rat(Int(k - 1) * (k - 1), Int(2) * tau * (tau - 1)),
                               "turan-even-path-asymptotic", "leading term (k-1)^2/(2t(t-1))",
                               "order-k error term omitted"));
        }
        if (t == 4)
            out.push_back(asym(BoundRecord::Kind::Upper, Rat(Int(k) * k, 4), "p4-upper-quadratic",
                               "quadratic upper bound k^2/4 for P4",
                               "error term O(k^{3/2}) omitted"));
        if (t == 5)
            out.push_back(asym(BoundRecord::Kind::Upper, Rat(Int(k) * k, 8), "p5-upper-quadratic",
                               "quadratic upper bound k^2/8 for P5", "error term O(k) omitted"));
        for (auto& c : conjecture_ledger(k, f)) out.push_back(c);
        return out;
    }

    if (f.kind() == Pattern::Kind::Cycle && f.a() == 4) {
        bool chain = cherry_certificate(k).success;
        push_family_lower(!chain);
        out.push_back(asym(BoundRecord::Kind::Upper, Rat(isqrt_floor(ipow(Int(k), 3))),
                           "c4-upper-three-halves", "upper bound k^{3/2} + o(k^{3/2})",
                           "leading term only"));
        for (auto& c : conjecture_ledger(k, f)) out.push_back(c);
        return out;
    }

    if (f.kind() == Pattern::Kind::Biclique && f.a() >= 2) {
        int s = f.a(), t = f.b();
        bool chain = jensen_certificate(k, s, t).success;
        push_family_lower(!chain);
        // leading constant k^{1+1/s} / (s t^{1/s})
        Int inner = ipow(Int(k), static_cast<unsigned>(s + 1)) / (ipow(Int(s), static_cast<unsigned>(s)) * t);
        out.push_back(asym(BoundRecord::Kind::Lower, Rat(iroot_floor(inner, static_cast<unsigned>(s))),
                           "kst-lower-constant", "explicit constant k^{1+1/s}/(s t^{1/s})",
                           "leading term only"));
        out.push_back(asym(BoundRecord::Kind::Upper, power_floor(k, static_cast<unsigned>(s + 1),
                                                                 static_cast<unsigned>(s)),
                           "kst-upper-exponent", "order of magnitude k^{1+1/s}",
                           "constant factor not explicit"));
        return out;
    }

    if (f.kind() == Pattern::Kind::Cycle && f.a() % 2 == 0 && f.a() >= 6) {
        int t = f.a() / 2;
        bool odd = t % 2 == 1;
        bool certifies = false;
        try {
            FamilyResult fam = family_for(k, f);
            auto nv = ex_upper_nv(fam.host.p1, fam.host.p2, t);
            certifies = nv.value.floor() <= k - 1;
            BoundRecord rec = fam.lower;
            if (!certifies) {
                rec.caveat = BoundRecord::Caveat::Asymptotic;
                rec.note += "; constants close only for larger k";
            }
            out.push_back(rec);
        } catch (const BadParameter&) {
        }
        unsigned om_num = odd ? static_cast<unsigned>(2 * t) : static_cast<unsigned>(2 * t + 2);
        unsigned om_den = odd ? static_cast<unsigned>(t + 1) : static_cast<unsigned>(t + 2);
        out.push_back(asym(BoundRecord::Kind::Lower, power_floor(k, om_num, om_den),
                           "even-cycle-lower-exponent",
                           odd ? "order k^{2-2/(t+1)}" : "order k^{2-2/(t+2)}",
                           "order of magnitude only"));
        unsigned up_num = odd ? static_cast<unsigned>(6 * t - 8) : static_cast<unsigned>(6 * t - 6);
        unsigned up_den = odd ? static_cast<unsigned>(3 * t - 3) : static_cast<unsigned>(3 * t - 2);
        out.push_back(asym(BoundRecord::Kind::Upper, power_floor(k, up_num, up_den),
                           "even-cycle-upper-exponent",
                           odd ? "order k^{2-2/(3t-3)}" : "order k^{2-2/(3t-2)}",
                           "order of magnitude only"));
        return out;
    }

    throw Unsupported("no ledger dispatch for pattern " + f.literal());
}

}  // namespace turan
