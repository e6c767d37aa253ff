#include "turan/json_io.hpp"

#include "turan/canonical.hpp"
#include "turan/graph6.hpp"

namespace turan {

Json to_json(const BoundRecord& r) {
    Json j;
    j["kind"] = bound_kind_name(r.kind);
    j["value"] = r.value.str();
    j["value_real"] = r.value.to_double();
    j["provenance"] = bound_provenance_name(r.provenance);
    j["name"] = r.name;
    j["anchor"] = r.anchor;
    j["caveat"] = bound_caveat_name(r.caveat);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json to_json(const SmallGraph& g) {
    Json j;
    j["g6"] = graph6_encode(g);
    j["vertices"] = g.n();
    j["edges"] = g.edge_count();
    return j;
}

Json to_json(const EdgeSet& es) {
    Json j = Json::array();
    for (auto [a, b] : es.edges) j.push_back(Json::array({a, b}));
    return j;
}

Json to_json(const ExResult& r, const SmallGraph& host, const std::string& pattern_literal) {
    Json j;
    j["op"] = "ex";
    j["host"] = to_json(host);
    j["pattern"] = pattern_literal;
    j["value"] = r.value;
    SmallGraph wg = subgraph_of(host, r.witness);
    j["witness_g6"] = graph6_encode(wg);
    j["witness_edges"] = to_json(r.witness);
    if (r.attestation) {
        Json a;
        a["kind"] = r.attestation->kind == Attestation::Kind::ExhaustiveSearch ? "exhaustive-search"
                                                                               : "bound-match";
        if (!r.attestation->bound_name.empty()) a["bound"] = r.attestation->bound_name;
        j["attestation"] = a;
    } else {
        j["attestation"] = nullptr;
        j["incumbent_only"] = true;
    }
    j["nodes_explored"] = r.nodes_explored;
    Json bounds = Json::array();
    for (const auto& b : r.bounds) bounds.push_back(to_json(b));
    j["bounds"] = bounds;
    return j;
}

Json to_json(const InverseResult& r) {
    Json j;
    j["op"] = "invex";
    j["k"] = r.k;
    j["pattern"] = r.pattern;
    j["value"] = r.value;
    j["hosts"] = r.extremal_hosts;
    Json a;
    a["kind"] = r.attestation.kind == InverseAttestation::Kind::ExhaustiveHostSearch
                    ? "exhaustive-host-search"
                    : "certified-lower-only";
    a["max_vertices"] = r.attestation.max_vertices;
    a["max_edges"] = r.attestation.max_edges;
    a["absolute"] = r.attestation.absolute;
    if (!r.attestation.note.empty()) a["note"] = r.attestation.note;
    j["attestation"] = a;
    j["hosts_examined"] = r.hosts_examined;
    Json bounds = Json::array();
    for (const auto& b : r.bounds) bounds.push_back(to_json(b));
    j["bounds"] = bounds;
    return j;
}

Json to_json(const HostFamily& f) {
    Json j;
    j["family"] = f.family;
    Json params;
    for (const auto& [k, v] : f.params) params[k] = v;
    j["params"] = params;
    j["closed_form"] = f.closed_form_edges.str();
    j["paper_anchor"] = f.anchor;
    j["generable"] = f.generable();
    if (f.generable()) j["instance_g6"] = graph6_encode(f.instance());
    return j;
}

Json to_json(const FamilyResult& f) {
    Json j;
    j["host"] = to_json(f.host);
    j["lower_bound"] = to_json(f.lower);
    return j;
}

Json to_json(const CountingCertificate& c) {
    Json j;
    j["kind"] = c.kind;
    j["k"] = c.k;
    j["leaf_side"] = c.side_a;
    j["center_side"] = c.side_b;
    j["s"] = c.s;
    j["t"] = c.t;
    j["success"] = c.success;
    j["vacuous"] = c.vacuous;
    j["chain"] = c.chain;
    if (!c.failing.empty()) j["failing"] = c.failing;
    return j;
}

Json to_json(const CertifyResult& c) {
    Json j;
    j["certified"] = c.certified;
    if (c.certified) {
        j["lower_bound"] = to_json(c.lower);
        j["evidence"] = c.evidence;
    } else {
        j["failure"] = c.failure;
    }
    if (c.ex_value) j["ex_value"] = *c.ex_value;
    return j;
}

Json to_json(const LemmaReport& r) {
    Json j;
    j["lemma"] = r.lemma;
    j["universe"] = r.universe;
    j["violations"] = r.violations;
    j["pass"] = r.pass();
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace turan
