#include "tracetopo/topology.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace tracetopo {

int Topology::add_node(const std::string& label, bool anonymous) {
    auto [it, inserted] = index_.try_emplace(label, num_nodes());
    if (!inserted) {
        if (nodes_[static_cast<std::size_t>(it->second)].anonymous != anonymous)
            throw std::invalid_argument("node " + label + " added with conflicting anonymity");
        return it->second;
    }
    nodes_.push_back({label, anonymous});
    adj_.emplace_back();
    return it->second;
}

void Topology::add_edge(const std::string& a, const std::string& b) {
    const int ia = index_of(a);
    const int ib = index_of(b);
    if (ia < 0 || ib < 0) throw std::invalid_argument("edge references unknown node");
    add_edge(ia, ib);
}

void Topology::add_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("self-loop on node " + nodes_[static_cast<std::size_t>(a)].label);
    if (a > b) std::swap(a, b);
    if (std::find(adj_[static_cast<std::size_t>(a)].begin(), adj_[static_cast<std::size_t>(a)].end(), b) !=
        adj_[static_cast<std::size_t>(a)].end())
        return;
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
    edges_.emplace_back(a, b);
}

int Topology::index_of(const std::string& label) const {
    const auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

bool Topology::has_edge(const std::string& a, const std::string& b) const {
    const int ia = index_of(a);
    const int ib = index_of(b);
    if (ia < 0 || ib < 0) return false;
    return std::find(adj_[static_cast<std::size_t>(ia)].begin(), adj_[static_cast<std::size_t>(ia)].end(), ib) !=
           adj_[static_cast<std::size_t>(ia)].end();
}

int Topology::anonymous_count() const {
    int a = 0;
    for (const auto& n : nodes_) a += n.anonymous ? 1 : 0;
    return a;
}

std::vector<std::string> Topology::sorted_node_labels() const {
    std::vector<std::string> labels;
    labels.reserve(nodes_.size());
    for (const auto& n : nodes_) labels.push_back(n.label);
    std::sort(labels.begin(), labels.end());
    return labels;
}

std::vector<std::optional<int>> Topology::bfs_from(int source) const {
    std::vector<std::optional<int>> dist(nodes_.size());
    std::deque<int> queue;
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        const int du = *dist[static_cast<std::size_t>(u)];
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            if (!dist[static_cast<std::size_t>(v)]) {
                dist[static_cast<std::size_t>(v)] = du + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

bool Topology::operator==(const Topology& other) const {
    if (num_nodes() != other.num_nodes() || num_edges() != other.num_edges()) return false;
    for (const auto& n : nodes_) {
        const int oi = other.index_of(n.label);
        if (oi < 0 || other.nodes()[static_cast<std::size_t>(oi)].anonymous != n.anonymous) return false;
    }
    std::set<std::pair<std::string, std::string>> mine, theirs;
    auto norm = [](const std::string& a, const std::string& b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    for (const auto& [a, b] : edges_) mine.insert(norm(nodes_[static_cast<std::size_t>(a)].label, nodes_[static_cast<std::size_t>(b)].label));
    for (const auto& [a, b] : other.edges_)
        theirs.insert(norm(other.nodes_[static_cast<std::size_t>(a)].label, other.nodes_[static_cast<std::size_t>(b)].label));
    return mine == theirs;
}

DistanceTable::DistanceTable(const Topology& g, const std::vector<std::string>& sources) : g_(&g) {
    for (const auto& src : sources) {
        const int idx = g.index_of(src);
        if (idx < 0) throw std::invalid_argument("unknown source label " + src);
        rows_.emplace(src, g.bfs_from(idx));
    }
}

std::optional<int> DistanceTable::at(const std::string& source, const std::string& target) const {
    const auto it = rows_.find(source);
    if (it == rows_.end()) throw std::invalid_argument("no distance row for source " + source);
    const int idx = g_->index_of(target);
    if (idx < 0) throw std::invalid_argument("unknown target label " + target);
    return it->second[static_cast<std::size_t>(idx)];
}

Topology build_canonic(const TraceSet& ts) {
    Topology g;
    for (const auto& t : ts.traces()) {
        int prev = -1;
        for (const auto& sym : t.symbols) {
            const int idx = g.add_node(sym.label(), sym.is_star());
            if (prev >= 0) g.add_edge(prev, idx);
            prev = idx;
        }
    }
    return g;
}

DistanceTable all_pairs_distances(const Topology& g, const std::vector<std::string>& sources) {
    return DistanceTable(g, sources);
}

Topology contract_stars(const Topology& canonic, const std::vector<std::vector<int>>& blocks, bool dotted_labels) {
    // Star label -> merged block label.
    std::map<std::string, std::string> relabel;
    for (const auto& block : blocks) {
        const std::string merged = anonymous_label(block, dotted_labels);
        for (int id : block) relabel["*" + std::to_string(id)] = merged;
    }
    auto mapped = [&](const Topology::Node& n) -> std::string {
        if (!n.anonymous) return n.label;
        const auto it = relabel.find(n.label);
        if (it == relabel.end()) throw std::invalid_argument("blocks do not cover star " + n.label);
        return it->second;
    };

    Topology out;
    for (const auto& n : canonic.nodes()) out.add_node(mapped(n), n.anonymous);
    for (const auto& [a, b] : canonic.edges()) {
        const std::string la = mapped(canonic.node(a));
        const std::string lb = mapped(canonic.node(b));
        if (la == lb) continue; // merged adjacent stars; axiom checks report this downstream
        out.add_edge(la, lb);
    }
    return out;
}

} // namespace tracetopo
