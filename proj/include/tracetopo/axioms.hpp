#pragma once
// Verification of candidate (topology, mapping) pairs against the sampling
// axioms: complete cover, reality sampling, and alpha-routing consistency.
// The trace-merging axiom is implied by reality sampling and never checked
// separately.

#include "tracetopo/rational.hpp"
#include "tracetopo/topology.hpp"
#include "tracetopo/trace.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tracetopo {

// Total mapping of alphabet symbols to node labels. Bijective on named
// symbols, many-to-one on stars.
class MappingFunction {
public:
    MappingFunction() = default;
    explicit MappingFunction(std::map<std::string, std::string> entries) : map_(std::move(entries)) {}

    // Named symbols map to themselves, each star *i to its own node "*i".
    static MappingFunction identity(const TraceSet& ts);
    // Named symbols to themselves, each star to its block's merged label.
    static MappingFunction for_blocks(const TraceSet& ts, const std::vector<std::vector<int>>& blocks);

    const std::string& at(const Symbol& sym) const;
    const std::map<std::string, std::string>& entries() const { return map_; }

    // Checks totality on the trace set's symbols, bijectivity on named
    // symbols, star targets, and surjectivity onto g; throws on violation.
    void validate(const TraceSet& ts, const Topology& g) const;

private:
    std::map<std::string, std::string> map_; // symbol label -> node label
};

struct Violation {
    int axiom = 0;                // 0, 1 or 2
    int trace = -1;               // -1 for graph-level complete-cover findings
    std::string sym1, sym2;       // witness symbol pair (or edge labels)
    int required = 0;             // bound that had to hold
    std::optional<int> actual;    // observed value; nullopt = unreachable / absent
    std::string detail;
};

struct Verdict {
    bool passed = true;
    std::vector<Violation> violations;
};

// Checks the axioms for (g, m) against ts at the given alpha. Violations are
// collected exhaustively up to max_violations (1 gives fail-fast behavior).
Verdict verify(const TraceSet& ts, const Topology& g, const MappingFunction& m, const Alpha& alpha,
               int max_violations = 100);

// Largest consistency the pair actually satisfies: min over traces and
// within-trace symbol pairs of d_g(images) / d_T. Requires the reality-
// sampling axiom to hold (throws on an unreachable image pair).
BigRat effective_alpha(const TraceSet& ts, const Topology& g, const MappingFunction& m);

} // namespace tracetopo
