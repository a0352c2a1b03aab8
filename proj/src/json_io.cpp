#include "tracetopo/json_io.hpp"

#include <algorithm>

namespace tracetopo {

Json topology_to_json(const Topology& g) {
    std::vector<std::pair<std::string, bool>> nodes;
    for (const auto& n : g.nodes()) nodes.emplace_back(n.label, n.anonymous);
    std::sort(nodes.begin(), nodes.end());

    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [a, b] : g.edges()) {
        std::string la = g.node(a).label;
        std::string lb = g.node(b).label;
        if (lb < la) std::swap(la, lb);
        edges.emplace_back(std::move(la), std::move(lb));
    }
    std::sort(edges.begin(), edges.end());

    Json j;
    j["nodes"] = Json::array();
    for (const auto& [label, anonymous] : nodes)
        j["nodes"].push_back({{"label", label}, {"anonymous", anonymous}});
    j["edges"] = Json::array();
    for (const auto& [a, b] : edges) j["edges"].push_back({a, b});
    return j;
}

Topology topology_from_json(const Json& j) {
    Topology g;
    for (const auto& node : j.at("nodes"))
        g.add_node(node.at("label").get<std::string>(), node.at("anonymous").get<bool>());
    for (const auto& edge : j.at("edges")) {
        if (!edge.is_array() || edge.size() != 2) throw std::invalid_argument("topology JSON: bad edge entry");
        g.add_edge(edge.at(0).get<std::string>(), edge.at(1).get<std::string>());
    }
    return g;
}

Json mapping_to_json(const MappingFunction& m) {
    Json j = Json::object();
    for (const auto& [sym, label] : m.entries()) j[sym] = label;
    return j;
}

MappingFunction mapping_from_json(const Json& j) {
    std::map<std::string, std::string> entries;
    for (const auto& [key, value] : j.items()) entries.emplace(key, value.get<std::string>());
    return MappingFunction(std::move(entries));
}

Json stats_to_json(const TraceSetStats& stats) {
    return Json{{"named", stats.n}, {"stars", stats.s}, {"symbols", stats.N}, {"named_edges", stats.nu}};
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["passed"] = v.passed;
    j["violations"] = Json::array();
    for (const auto& viol : v.violations) {
        Json entry{{"axiom", viol.axiom},      {"trace", viol.trace},       {"symbols", {viol.sym1, viol.sym2}},
                   {"required", viol.required}, {"detail", viol.detail}};
        if (viol.actual)
            entry["actual"] = *viol.actual;
        else
            entry["actual"] = nullptr;
        j["violations"].push_back(std::move(entry));
    }
    return j;
}

Json star_graph_to_json(const StarGraph& g) {
    Json j;
    j["vertices"] = g.vertices();
    j["edges"] = Json::array();
    for (const auto& [pair, justs] : g.edges()) {
        Json edge;
        edge["stars"] = {pair.first, pair.second};
        edge["justifications"] = Json::array();
        for (const auto& just : justs) {
            Json record{{"kind", just.kind_name()}, {"trace", just.trace}};
            switch (just.kind) {
            case StarJustification::Kind::SameTrace:
                break;
            case StarJustification::Kind::CondI:
                record["star"] = just.star;
                record["named"] = just.u;
                break;
            case StarJustification::Kind::CondII:
                record["u"] = just.u;
                record["v"] = just.v;
                break;
            }
            edge["justifications"].push_back(std::move(record));
        }
        j["edges"].push_back(std::move(edge));
    }
    return j;
}

Json partition_to_json(const MergePartition& p) {
    Json j = Json::array();
    for (const auto& block : p.blocks) j.push_back(block);
    return j;
}

Json metric_record_to_json(const MetricRecord& r) {
    Json j{{"nodes", r.nodes},
           {"edges", r.edges},
           {"components", r.components},
           {"diameter", r.diameter},
           {"disconnected", r.disconnected},
           {"max_degree", r.max_degree},
           {"triangles", r.triangles}};
    j["stretch"] = r.stretch ? Json(to_string(*r.stretch)) : Json(nullptr);
    j["stretch_pairs_skipped"] = r.stretch_pairs_skipped;
    return j;
}

Json audit_to_json(const BoundAudit& a) {
    Json entries = Json::array();
    for (const auto& e : a.entries) {
        Json entry{{"metric", e.metric}, {"kind", e.kind},       {"enforced", e.enforced},
                   {"tight", e.tight},   {"verdict", e.verdict}};
        entry["observed"] = e.observed ? Json(to_string(*e.observed)) : Json(nullptr);
        entry["bound"] = e.bound ? Json(to_string(*e.bound)) : Json(nullptr);
        entries.push_back(std::move(entry));
    }
    return Json{{"entries", std::move(entries)}, {"all_within", a.all_within()}};
}

} // namespace tracetopo
