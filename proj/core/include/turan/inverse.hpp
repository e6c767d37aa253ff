#pragma once

#include <optional>

#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/ex_search.hpp"

namespace turan {

struct InverseCaps {
    int max_vertices = 8;
    long long max_edges = 40;
};

struct InverseAttestation {
    enum class Kind { ExhaustiveHostSearch, CertifiedLowerOnly };
    Kind kind = Kind::ExhaustiveHostSearch;
    int max_vertices = 0;
    long long max_edges = 0;
    // true when a proven vertex bound (paths: v < 2k once isolated vertices
    // are dropped) fits inside the caps, making the caps-relative value the
    // true supremum
    bool absolute = false;
    std::string note;
};

struct InverseResult {
    long long k = 0;
    std::string pattern;
    long long value = 0;
    std::vector<CanonicalKey> extremal_hosts;
    InverseAttestation attestation;
    std::vector<BoundRecord> bounds;
    long long hosts_examined = 0;
    long long hosts_unresolved = 0;  // solver budget ran out; treated as rejected
};

// Exact ex^-1(k, f) relative to the caps by isomorph-free host search.
// Isolated vertices never matter and are excluded. InfiniteInverse for
// matchings and stars.
InverseResult inv_ex_exact(long long k, const Pattern& f, const InverseCaps& caps = {},
                           int threads = 1, const ExOptions& solver = {});

struct CertifyResult {
    bool certified = false;
    BoundRecord lower;  // e(host), meaningful when certified
    std::string evidence;
    std::optional<long long> ex_value;  // when the solver produced the proof
    std::string failure;
};

// Prove ex(host, f) <= k-1 and return e(host) as a lower bound on
// ex^-1(k, f). Tries the exact solver, then counting certificates, then the
// formula ledger; a failure is reported, never silently dropped.
CertifyResult certify_lower(long long k, const Pattern& f, const SmallGraph& host,
                            const ExOptions& opts = {});
CertifyResult certify_lower(long long k, const Pattern& f, const HostFamily& family,
                            const ExOptions& opts = {});

// Exact inequality chain forcing a pattern inside every k-edge subgraph of a
// biclique, evaluated over integer degree sequences.
struct CountingCertificate {
    std::string kind;  // "cherry" | "jensen"
    long long k = 0;
    long long side_a = 0, side_b = 0;  // leaves side, centers side
    int s = 2, t = 2;
    bool success = false;
    bool vacuous = false;  // k exceeds e(host): nothing to force
    std::vector<std::string> chain;
    std::string failing;  // the inequality that broke, when !success
};

// C_4 forcing in K_{floor(sqrt(2k/3)), floor(2k/3-1)} by cherry counting.
CountingCertificate cherry_certificate(long long k);
// K_{s,t} forcing in K_{floor(k/s), floor((k/t)^{1/s})} by star counting.
CountingCertificate jensen_certificate(long long k, int s, int t);

// The full ledger for one (k, pattern): formula lower bounds, asymptotic
// records, and quarantined conjectures. Unsupported outside the dispatch set.
std::vector<BoundRecord> bound_report(long long k, const Pattern& f);

// Complete multipartite recognition (parts of any sizes); returns the part
// count. Used to route Turan-host certificates.
std::optional<int> complete_multipartite_parts(const SmallGraph& g);

}  // namespace turan
