#pragma once
// Conflict graph over star ids: edges join stars that can never originate
// from the same router, with machine-checkable witnesses. Also exact
// chromatic number, chromatic polynomial, and the coloring-based upper bound
// on the number of inferrable topologies.

#include "tracetopo/rational.hpp"
#include "tracetopo/topology.hpp"
#include "tracetopo/trace.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tracetopo {

// Plain graph on vertices 0..n-1; the working representation for coloring
// computations and for star-graph realization inputs.
struct SmallGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // normalized a<b, deduplicated

    void add_edge(int a, int b);
    bool has_edge(int a, int b) const;
    std::vector<std::vector<int>> adjacency() const;
};

struct StarJustification {
    enum class Kind { SameTrace, CondI, CondII };
    Kind kind;
    int trace = -1;     // witness trace index
    int star = 0;       // cond-i: the star whose trace path is too long
    std::string u, v;   // cond-i: u = named witness; cond-ii: both named

    std::string kind_name() const;
};

class StarGraph {
public:
    StarGraph() = default;
    explicit StarGraph(std::vector<int> vertices) : vertices_(std::move(vertices)) {}

    const std::vector<int>& vertices() const { return vertices_; } // sorted star ids
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    void add_edge(int a, int b, StarJustification just);
    bool has_edge(int a, int b) const;
    // Normalized id pairs in sorted order, with their justifications.
    const std::map<std::pair<int, int>, std::vector<StarJustification>>& edges() const { return edges_; }

    // Vertices renumbered 0..s-1 in sorted-id order.
    SmallGraph as_small_graph() const;

private:
    std::vector<int> vertices_;
    std::map<std::pair<int, int>, std::vector<StarJustification>> edges_;
};

// Conflict edges from three rules: stars sharing a trace, a trace path too
// long for the other star's canonic distance (checked in both orders), and a
// named pair whose consistency bound exceeds the canonic detour through the
// two stars (checked over both assignments). Comparisons against the
// unreachable marker are false.
StarGraph build_star_graph(const TraceSet& ts, const Alpha& alpha);
StarGraph build_star_graph(const TraceSet& ts, const Topology& canonic, const Alpha& alpha);

struct ChromaticPolynomial {
    std::vector<BigInt> coeffs; // coeffs[i] multiplies k^i

    BigInt eval(int k) const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Exact minimum proper-coloring size; branch and bound with a greedy upper
// bound and a clique lower bound. 0 for the empty vertex set.
int chromatic_number(const StarGraph& g);
int chromatic_number(const SmallGraph& g);

// Exact polynomial by deletion-contraction, memoized on a canonical edge-set
// form. Throws limit_error beyond max_vertices.
ChromaticPolynomial chromatic_polynomial(const StarGraph& g, int max_vertices = 15);
ChromaticPolynomial chromatic_polynomial(const SmallGraph& g, int max_vertices = 15);

// Upper bound on the number of inferrable topologies: sum over palette sizes
// from the chromatic number to the vertex count of P(k)/k!, as an exact
// rational.
BigRat counting_upper_bound(const StarGraph& g, int max_vertices = 15);

class limit_error : public std::runtime_error {
public:
    limit_error(const std::string& limit_name, const std::string& what)
        : std::runtime_error(what), limit_name_(limit_name) {}
    const std::string& limit_name() const { return limit_name_; }

private:
    std::string limit_name_;
};

} // namespace tracetopo
