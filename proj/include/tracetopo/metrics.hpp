#pragma once
// Per-topology graph metrics, ensemble ranges, and audits of the worst-case
// bounds on how much inferrable topologies can differ.

#include "tracetopo/enumerate.hpp"
#include "tracetopo/rational.hpp"
#include "tracetopo/topology.hpp"
#include "tracetopo/trace.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tracetopo {

struct MetricRecord {
    int nodes = 0;
    int edges = 0;
    int components = 0;
    int diameter = 0; // largest finite hop distance
    bool disconnected = false;
    int max_degree = 0;
    long long triangles = 0;
    std::optional<BigRat> stretch;  // worst named-pair ratio vs the reference
    bool stretch_pairs_skipped = false; // some named pair not connected in both
};

// Exact metrics; stretch only when a reference topology is supplied (its
// named labels must cover the measured topology's).
MetricRecord measure(const Topology& g, const Topology* reference = nullptr);

struct AuditEntry {
    std::string metric;           // nodes, edges, components, stretch, diameter, max_degree, triangles
    std::string kind;             // "difference" or "ratio"
    std::optional<BigRat> observed;
    std::optional<BigRat> bound;
    bool enforced = true;         // false for cells the audit only reports
    bool tight = false;           // observed equals the bound
    std::string verdict;          // "within", "violated" or "skipped"
};

struct BoundAudit {
    std::vector<AuditEntry> entries;

    bool all_within() const;
    const AuditEntry* find(const std::string& metric, const std::string& kind) const;
};

// Compares ensemble-wide metric spreads against the bound table. Difference
// audits are exact integers, ratio audits exact rationals. Diameter entries
// compare connected members only; stretch entries skip named pairs that are
// disconnected in some member.
BoundAudit audit_ensemble(const Ensemble& e, const TraceSetStats& stats, int chi, bool fully_explored);

struct FullExploration {
    bool fully_explored = true;
    std::vector<std::pair<std::string, std::string>> missing_pairs; // sorted
};

// True iff every pair of named nodes sharing a canonic component occurs
// together in at least one trace.
FullExploration is_fully_explored(const TraceSet& ts);

} // namespace tracetopo
