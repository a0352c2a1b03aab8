#pragma once
// Enumeration of the inferrable-topology set: all partitions of the stars
// into independent sets of the conflict graph, each contracted and then kept
// only if it passes full axiom verification.

#include "tracetopo/axioms.hpp"
#include "tracetopo/star_graph.hpp"
#include "tracetopo/topology.hpp"
#include "tracetopo/trace.hpp"

#include <cstdint>
#include <vector>

namespace tracetopo {

// Disjoint nonempty star-id blocks covering the star set. Canonical form:
// blocks ordered by smallest member, members ascending.
struct MergePartition {
    std::vector<std::vector<int>> blocks;

    static MergePartition canonical(std::vector<std::vector<int>> blocks);
    bool operator==(const MergePartition&) const = default;
};

// Contraction of the canonic graph under the partition; every block must be
// an independent set of the star graph.
Topology induce_topology(const TraceSet& ts, const StarGraph& stars, const MergePartition& p);
Topology induce_topology(const TraceSet& ts, const Topology& canonic, const StarGraph& stars,
                         const MergePartition& p);

struct Ensemble {
    std::vector<MergePartition> partitions; // canonical order
    std::vector<Topology> topologies;       // parallel to partitions
    bool truncated = false;                 // candidate cap was hit

    struct Rejection {
        MergePartition partition;
        Violation witness;
    };
    std::vector<Rejection> rejections; // only when collect_rejections is set
};

struct EnumerateOptions {
    std::int64_t max_partitions = 1'000'000; // candidate cap; sets truncated
    int max_stars = 12;                      // hard limit, throws limit_error
    int workers = 1;                         // verification parallelism
    bool collect_rejections = false;
};

// Iterates all partitions of the stars into independent sets in restricted-
// growth-string order, keeping each candidate whose induced topology passes
// verification at alpha. Deterministic and independent of worker count.
Ensemble enumerate_inferrable(const TraceSet& ts, const Alpha& alpha, const EnumerateOptions& options = {});

// Exact Bell number; the Bell-triangle and Stirling-sum routes are computed
// and cross-checked.
BigInt bell_number(int s);

} // namespace tracetopo
