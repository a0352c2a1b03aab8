#pragma once
// Ground-truth topologies and trace sets: the extremal constructions behind
// the worst-case bounds, plus seeded consistency-respecting trace sampling.

#include "tracetopo/axioms.hpp"
#include "tracetopo/star_graph.hpp"
#include "tracetopo/topology.hpp"
#include "tracetopo/trace.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tracetopo {

struct GroundTruth {
    Topology topology;       // covered subgraph, anonymity flags per node
    TraceSet traces;
    MappingFunction mapping; // stars -> true anonymous nodes
    Alpha alpha_used;
};

// One anonymous hub joined to 2s named leaves; trace (u_i, *_i, v_i) per
// star. The conflict graph is edgeless, so the ensemble realizes every
// partition of the stars.
GroundTruth gen_star_network(int s);

// s chained traces (u_i, w_i_1..w_i_{x/2}, *_i, w_i_{x/2+1}..w_i_x, u_{i+1});
// x even. Merging all stars contracts the diameter by the factor s.
GroundTruth gen_diameter_chain(int s, int x);

// Trace set whose conflict graph equals the given graph exactly, for any
// alpha: per vertex a named chain of length tau = ceil(3/(2 alpha) - 1/2),
// one anonymous node and a terminal; per edge a cross trace through it.
GroundTruth realize_star_graph(const SmallGraph& g, const Alpha& alpha);

// Fully explored diameter gadget: center c, four named rays of length k to
// u_1..u_4, six ray traces covering all named pairs, and two anonymous
// chains (2k+1 stars each, middle stars sigma = k+1 and sigma' = 3k+2)
// between u_1,u_2 and u_3,u_4. The chain traces overshoot the ray route by
// two hops, so the set is only k/(k+1)-consistent; alpha_used reflects that.
GroundTruth gen_fullexp_diameter(int k);

// Fully explored triangle gadget: traces (v_i, *_i, w) plus every pair trace
// (v_i, v_j); edgeless conflict graph; merging all stars creates
// s(s-1)/2 anonymous triangles where the canonic graph has none.
GroundTruth gen_fullexp_triangles(int s);

// One trace per requested named pair along a seed-deterministic random path
// every sub-segment of which respects the consistency bound; for alpha = 1 a
// uniformly predecessor-sampled shortest path. Anonymous hops become fresh
// stars. The returned topology is the covered subgraph.
GroundTruth sample_traces(const Topology& g0, const std::vector<std::pair<std::string, std::string>>& pairs,
                          const Alpha& alpha, std::uint64_t seed);

// Adds traces until every named pair of the ground truth's components shares
// a trace (alpha must be 1). Default: deterministic shortest-path traces.
// preserve_anonymous_degrees instead inserts a named relay node per missing
// pair, leaving every anonymous node's degree and the conflict graph intact;
// relay nodes themselves are exempt from the coverage requirement.
GroundTruth make_fully_explored(const GroundTruth& gt, bool preserve_anonymous_degrees = false);

} // namespace tracetopo
