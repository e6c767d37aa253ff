#pragma once

#include <nlohmann/json.hpp>

#include "turan/constructions.hpp"
#include "turan/ex_search.hpp"
#include "turan/inverse.hpp"
#include "turan/lemmas.hpp"

namespace turan {

using Json = nlohmann::ordered_json;

Json to_json(const BoundRecord& r);
Json to_json(const SmallGraph& g);
Json to_json(const EdgeSet& es);
Json to_json(const ExResult& r, const SmallGraph& host, const std::string& pattern_literal);
Json to_json(const InverseResult& r);
Json to_json(const HostFamily& f);
Json to_json(const FamilyResult& f);
Json to_json(const CountingCertificate& c);
Json to_json(const CertifyResult& c);
// timing is deliberately omitted so reruns stay byte-identical
Json to_json(const LemmaReport& r);

}  // namespace turan
