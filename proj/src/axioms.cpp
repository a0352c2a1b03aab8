#include "tracetopo/axioms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tracetopo {

MappingFunction MappingFunction::identity(const TraceSet& ts) {
    std::map<std::string, std::string> m;
    for (const auto& name : ts.named_ids()) m.emplace(name, name);
    for (int id : ts.star_ids()) {
        const std::string star = "*" + std::to_string(id);
        m.emplace(star, star);
    }
    return MappingFunction(std::move(m));
}

MappingFunction MappingFunction::for_blocks(const TraceSet& ts, const std::vector<std::vector<int>>& blocks) {
    const bool dotted = ts.max_star_id() >= 10;
    std::map<std::string, std::string> m;
    for (const auto& name : ts.named_ids()) m.emplace(name, name);
    for (const auto& block : blocks) {
        const std::string label = anonymous_label(block, dotted);
        for (int id : block) m.emplace("*" + std::to_string(id), label);
    }
    return MappingFunction(std::move(m));
}

const std::string& MappingFunction::at(const Symbol& sym) const {
    const auto it = map_.find(sym.label());
    if (it == map_.end()) throw std::invalid_argument("mapping not total: no image for " + sym.label());
    return it->second;
}

void MappingFunction::validate(const TraceSet& ts, const Topology& g) const {
    std::set<std::string> named_images;
    for (const auto& name : ts.named_ids()) {
        const auto it = map_.find(name);
        if (it == map_.end()) throw std::invalid_argument("mapping not total: no image for " + name);
        const int idx = g.index_of(it->second);
        if (idx < 0) throw std::invalid_argument("mapping image " + it->second + " is not a node");
        if (g.node(idx).anonymous)
            throw std::invalid_argument("named symbol " + name + " mapped to anonymous node " + it->second);
        if (it->second != name)
            throw std::invalid_argument("named symbol " + name + " must map to its own identifier");
        if (!named_images.insert(it->second).second)
            throw std::invalid_argument("mapping not injective on named symbols at " + it->second);
    }
    std::set<std::string> images = named_images;
    for (int id : ts.star_ids()) {
        const std::string star = "*" + std::to_string(id);
        const auto it = map_.find(star);
        if (it == map_.end()) throw std::invalid_argument("mapping not total: no image for " + star);
        const int idx = g.index_of(it->second);
        if (idx < 0) throw std::invalid_argument("mapping image " + it->second + " is not a node");
        if (!g.node(idx).anonymous)
            throw std::invalid_argument("star " + star + " mapped to named node " + it->second);
        images.insert(it->second);
    }
    if (static_cast<int>(images.size()) != g.num_nodes())
        throw std::invalid_argument("mapping not surjective onto the topology's nodes");
}

namespace {

// Distance rows for exactly the nodes that appear as images of trace symbols.
class ImageDistances {
public:
    explicit ImageDistances(const Topology& g) : g_(g), rows_(static_cast<std::size_t>(g.num_nodes())) {}

    std::optional<int> dist(int from, int to) {
        auto& row = rows_[static_cast<std::size_t>(from)];
        if (row.empty()) row = g_.bfs_from(from);
        return row[static_cast<std::size_t>(to)];
    }

private:
    const Topology& g_;
    std::vector<std::vector<std::optional<int>>> rows_;
};

} // namespace

Verdict verify(const TraceSet& ts, const Topology& g, const MappingFunction& m, const Alpha& alpha,
               int max_violations) {
    m.validate(ts, g);

    Verdict verdict;
    auto report = [&](Violation v) {
        verdict.passed = false;
        if (static_cast<int>(verdict.violations.size()) < max_violations)
            verdict.violations.push_back(std::move(v));
        return static_cast<int>(verdict.violations.size()) >= max_violations;
    };

    // Complete cover: the edge set equals the mapped consecutive trace pairs.
    std::set<std::pair<int, int>> covered;
    bool done = false;
    for (std::size_t ti = 0; ti < ts.traces().size() && !done; ++ti) {
        const auto& t = ts.traces()[ti];
        for (std::size_t i = 0; i + 1 < t.symbols.size(); ++i) {
            int a = g.index_of(m.at(t.symbols[i]));
            int b = g.index_of(m.at(t.symbols[i + 1]));
            if (a == b) continue; // merged pair: reported by the path check below
            if (a > b) std::swap(a, b);
            covered.insert({a, b});
            if (!g.has_edge(g.node(a).label, g.node(b).label)) {
                done = report({0, static_cast<int>(ti), t.symbols[i].label(), t.symbols[i + 1].label(), 1,
                               std::nullopt, "consecutive trace pair is not an edge"});
                if (done) break;
            }
        }
    }
    for (const auto& [a, b] : g.edges()) {
        if (done) break;
        int x = a, y = b;
        if (x > y) std::swap(x, y);
        if (!covered.count({x, y}))
            done = report({0, -1, g.node(a).label, g.node(b).label, 1, std::nullopt,
                           "edge appears in no trace"});
    }

    // Reality sampling: the trace image is a simple path, so mapped symbols
    // must be pairwise distinct (consecutive-pair edges were checked above).
    for (std::size_t ti = 0; ti < ts.traces().size() && !done; ++ti) {
        const auto& t = ts.traces()[ti];
        std::map<int, std::size_t> seen;
        for (std::size_t i = 0; i < t.symbols.size() && !done; ++i) {
            const int node = g.index_of(m.at(t.symbols[i]));
            const auto [it, inserted] = seen.emplace(node, i);
            if (!inserted)
                done = report({1, static_cast<int>(ti), t.symbols[it->second].label(), t.symbols[i].label(), 1,
                               0, "two symbols of one trace map to the same node"});
        }
    }

    // Routing consistency: over every within-trace symbol pair.
    ImageDistances dists(g);
    for (std::size_t ti = 0; ti < ts.traces().size() && !done; ++ti) {
        const auto& t = ts.traces()[ti];
        for (std::size_t i = 0; i < t.symbols.size() && !done; ++i) {
            const int a = g.index_of(m.at(t.symbols[i]));
            for (std::size_t j = i + 1; j < t.symbols.size() && !done; ++j) {
                const int b = g.index_of(m.at(t.symbols[j]));
                const int required = ceil_alpha(alpha, static_cast<int>(j - i));
                const std::optional<int> actual = a == b ? std::optional<int>(0) : dists.dist(a, b);
                if (!actual || *actual < required)
                    done = report({2, static_cast<int>(ti), t.symbols[i].label(), t.symbols[j].label(), required,
                                   actual, "image distance below the consistency bound"});
            }
        }
    }

    return verdict;
}

BigRat effective_alpha(const TraceSet& ts, const Topology& g, const MappingFunction& m) {
    m.validate(ts, g);
    ImageDistances dists(g);
    std::optional<BigRat> best;
    for (const auto& t : ts.traces()) {
        for (std::size_t i = 0; i < t.symbols.size(); ++i) {
            const int a = g.index_of(m.at(t.symbols[i]));
            for (std::size_t j = i + 1; j < t.symbols.size(); ++j) {
                const int b = g.index_of(m.at(t.symbols[j]));
                const std::optional<int> d = a == b ? std::optional<int>(0) : dists.dist(a, b);
                if (!d)
                    throw std::invalid_argument("effective_alpha: unreachable image pair " +
                                                t.symbols[i].label() + "," + t.symbols[j].label());
                const BigRat ratio(*d, static_cast<int>(j - i));
                if (!best || ratio < *best) best = ratio;
            }
        }
    }
    if (!best) throw std::invalid_argument("effective_alpha: empty trace set");
    return *best;
}

} // namespace tracetopo
