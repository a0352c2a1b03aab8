#pragma once
// Labeled undirected topologies, the canonic graph built from a trace set,
// and exact BFS hop distances with an explicit unreachable marker.

#include "tracetopo/trace.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tracetopo {

// Simple undirected labeled graph. Nodes carry an anonymity flag; edges are
// deduplicated and self-loops rejected. Node order is insertion order; use
// sorted_node_labels() for canonical output.
class Topology {
public:
    struct Node {
        std::string label;
        bool anonymous = false;
    };

    int add_node(const std::string& label, bool anonymous);
    void add_edge(const std::string& a, const std::string& b);
    void add_edge(int a, int b);

    int index_of(const std::string& label) const; // -1 if absent
    bool has_node(const std::string& label) const { return index_of(label) >= 0; }
    bool has_edge(const std::string& a, const std::string& b) const;

    int num_nodes() const { return static_cast<int>(nodes_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int anonymous_count() const;

    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(int idx) const { return nodes_[static_cast<std::size_t>(idx)]; }
    const std::vector<int>& neighbors(int idx) const { return adj_[static_cast<std::size_t>(idx)]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; } // normalized a<b, insertion order
    int degree(int idx) const { return static_cast<int>(adj_[static_cast<std::size_t>(idx)].size()); }

    std::vector<std::string> sorted_node_labels() const;

    // BFS hop distances from one node; nullopt marks unreachable.
    std::vector<std::optional<int>> bfs_from(int source) const;

    bool operator==(const Topology& other) const; // same labeled node and edge sets

private:
    std::vector<Node> nodes_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Rows of exact hop distances for a chosen source set.
class DistanceTable {
public:
    DistanceTable() = default;
    DistanceTable(const Topology& g, const std::vector<std::string>& sources);

    // Distance by label; throws if the source row was not requested or a
    // label is unknown. nullopt is the unreachable marker.
    std::optional<int> at(const std::string& source, const std::string& target) const;

    bool has_row(const std::string& source) const { return rows_.count(source) > 0; }

private:
    const Topology* g_ = nullptr;
    std::map<std::string, std::vector<std::optional<int>>> rows_;
};

// The canonic graph: every star its own anonymous node, edges exactly the
// consecutive pairs of the traces. Linear in the input size.
Topology build_canonic(const TraceSet& ts);

// BFS rows for every requested source label.
DistanceTable all_pairs_distances(const Topology& g, const std::vector<std::string>& sources);

// Contract the canonic graph under a grouping of stars: each block becomes
// one anonymous node labeled per the sorted-index convention. Parallel edges
// collapse; self-loops (possible only for conflicting blocks) are dropped.
// No independence requirement here; induce_topology layers that on top.
Topology contract_stars(const Topology& canonic, const std::vector<std::vector<int>>& blocks, bool dotted_labels);

} // namespace tracetopo
