#pragma once

#include <string>

#include <json.hpp>

#include "stabset/codegree.hpp"
#include "stabset/ehrhart.hpp"
#include "stabset/graph.hpp"
#include "stabset/hperfect.hpp"
#include "stabset/invariants.hpp"
#include "stabset/perfect.hpp"
#include "stabset/regularity.hpp"
#include "stabset/triples.hpp"

namespace stabset {

// Machine-readable report pieces. Field order is part of the contract
// (ordered_json), so re-runs diff cleanly; big integers and rationals are
// serialized as decimal strings.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json graph_json(const Graph& g);
Json invariants_json(const InvariantBundle& inv);
Json perfect_json(const PerfectnessCertificate& cert);
Json inequality_json(const Inequality& ineq);
Json codegree_json(const CodegreeReport& r);
Json hperfect_json(const HPerfectCertificate& cert);
Json ehrhart_json(const EhrhartData& data);
Json regularity_json(const RegularityReport& r);
Json triples_json(const TripleSearchResult& r);

}  // namespace stabset
