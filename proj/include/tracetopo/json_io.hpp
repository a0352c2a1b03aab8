#pragma once
// JSON forms of the external file formats and reports. Canonical output:
// objects carry sorted keys, arrays are explicitly ordered.

#include "tracetopo/axioms.hpp"
#include "tracetopo/enumerate.hpp"
#include "tracetopo/metrics.hpp"
#include "tracetopo/star_graph.hpp"
#include "tracetopo/topology.hpp"

#include <json.hpp>

namespace tracetopo {

using Json = nlohmann::json;

// {"nodes":[{"label":...,"anonymous":...}],"edges":[[a,b],...]}, both sorted
// lexicographically by label.
Json topology_to_json(const Topology& g);
Topology topology_from_json(const Json& j);

// Flat symbol-label -> node-label object.
Json mapping_to_json(const MappingFunction& m);
MappingFunction mapping_from_json(const Json& j);

Json stats_to_json(const TraceSetStats& stats);
Json verdict_to_json(const Verdict& v);
Json star_graph_to_json(const StarGraph& g);
Json partition_to_json(const MergePartition& p);
Json metric_record_to_json(const MetricRecord& r);
Json audit_to_json(const BoundAudit& a);

} // namespace tracetopo
