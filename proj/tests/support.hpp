#pragma once
// Shared test fixtures and independent oracles (brute-force partition and
// coloring enumeration, naive metrics, random instances). Oracles stay
// independent of the library code paths they check.

#include "tracetopo/generators.hpp"
#include "tracetopo/star_graph.hpp"
#include "tracetopo/topology.hpp"
#include "tracetopo/trace.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

using namespace tracetopo;

// Every set partition of items, by direct recursion.
inline std::vector<std::vector<std::vector<int>>> all_partitions(const std::vector<int>& items) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> current;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == items.size()) {
            out.push_back(current);
            return;
        }
        const std::size_t existing = current.size(); // nested calls restore the size
        for (std::size_t b = 0; b < existing; ++b) {
            current[b].push_back(items[i]);
            self(self, i + 1);
            current[b].pop_back();
        }
        current.push_back({items[i]});
        self(self, i + 1);
        current.pop_back();
    };
    if (items.empty()) out.push_back({});
    else rec(rec, 0);
    return out;
}

// Number of proper colorings with palette {0..k-1}, by odometer scan.
inline long long count_proper_colorings(const SmallGraph& g, int k) {
    if (g.n == 0) return 1;
    if (k == 0) return 0;
    std::vector<int> color(static_cast<std::size_t>(g.n), 0);
    long long count = 0;
    while (true) {
        bool proper = true;
        for (const auto& [a, b] : g.edges)
            if (color[static_cast<std::size_t>(a)] == color[static_cast<std::size_t>(b)]) { proper = false; break; }
        if (proper) ++count;
        int pos = 0;
        while (pos < g.n) {
            if (++color[static_cast<std::size_t>(pos)] < k) break;
            color[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == g.n) break;
    }
    return count;
}

// Triangle count by triple loop.
inline long long brute_triangles(const Topology& g) {
    long long total = 0;
    for (int a = 0; a < g.num_nodes(); ++a)
        for (int b = a + 1; b < g.num_nodes(); ++b)
            for (int c = b + 1; c < g.num_nodes(); ++c)
                if (g.has_edge(g.node(a).label, g.node(b).label) && g.has_edge(g.node(b).label, g.node(c).label) &&
                    g.has_edge(g.node(a).label, g.node(c).label))
                    ++total;
    return total;
}

inline SmallGraph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
    SmallGraph g;
    g.n = n;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng) < edge_prob) g.add_edge(a, b);
    return g;
}

// Connected ground truth with the requested number of anonymous nodes;
// random spanning tree plus extra edges.
inline Topology random_ground_truth(int n, int anonymous_count, double extra_edge_prob, std::mt19937_64& rng) {
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<bool> anonymous(static_cast<std::size_t>(n), false);
    for (int i = 0; i < anonymous_count; ++i) anonymous[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])] = true;

    Topology g;
    for (int i = 0; i < n; ++i) {
        const bool anon = anonymous[static_cast<std::size_t>(i)];
        g.add_node((anon ? "anon" : "x") + std::to_string(i), anon);
    }
    for (int i = 1; i < n; ++i) {
        const int parent = std::uniform_int_distribution<int>(0, i - 1)(rng);
        g.add_edge(i, parent);
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!g.has_edge(g.node(a).label, g.node(b).label) && coin(rng) < extra_edge_prob) g.add_edge(a, b);
    return g;
}

inline std::vector<std::string> named_labels_of(const Topology& g) {
    std::vector<std::string> names;
    for (const auto& n : g.nodes())
        if (!n.anonymous) names.push_back(n.label);
    std::sort(names.begin(), names.end());
    return names;
}

// Up to max_pairs distinct random named pairs.
inline std::vector<std::pair<std::string, std::string>> random_named_pairs(const Topology& g, int max_pairs,
                                                                           std::mt19937_64& rng) {
    const auto names = named_labels_of(g);
    std::vector<std::pair<std::string, std::string>> all;
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j) all.emplace_back(names[i], names[j]);
    std::shuffle(all.begin(), all.end(), rng);
    if (static_cast<int>(all.size()) > max_pairs) all.resize(static_cast<std::size_t>(max_pairs));
    return all;
}

// Partition merging exactly one pair, all other stars singleton.
inline std::vector<std::vector<int>> merge_pair_blocks(const TraceSet& ts, int a, int b) {
    std::vector<std::vector<int>> blocks{{a, b}};
    for (int id : ts.star_ids())
        if (id != a && id != b) blocks.push_back({id});
    return blocks;
}

// The two-pair merge gadget: five traces through four stars, parameterized
// so that exactly the cross and outer star pairs conflict; merging the two
// non-conflicting pairs jointly collapses the long route.
inline TraceSet merge_collapse_fixture(int k_prime) {
    const int k = 2 * k_prime + 4;
    std::vector<Trace> traces;
    Trace t1;
    t1.symbols.push_back(Symbol::named("s"));
    for (int i = 1; i <= k - 1; ++i) t1.symbols.push_back(Symbol::named("y" + std::to_string(i)));
    t1.symbols.push_back(Symbol::named("t"));
    traces.push_back(std::move(t1));

    auto interior = [&](Trace& t, const std::string& prefix) {
        for (int i = 1; i <= k_prime - 1; ++i) t.symbols.push_back(Symbol::named(prefix + std::to_string(i)));
    };
    Trace t2;
    t2.symbols.push_back(Symbol::named("s"));
    t2.symbols.push_back(Symbol::star(1));
    interior(t2, "c");
    t2.symbols.push_back(Symbol::named("m1"));
    traces.push_back(std::move(t2));

    Trace t3;
    t3.symbols.push_back(Symbol::named("m1"));
    interior(t3, "d");
    t3.symbols.push_back(Symbol::star(2));
    t3.symbols.push_back(Symbol::named("m2"));
    traces.push_back(std::move(t3));

    Trace t4;
    t4.symbols.push_back(Symbol::named("m2"));
    t4.symbols.push_back(Symbol::star(3));
    interior(t4, "e");
    t4.symbols.push_back(Symbol::named("m3"));
    traces.push_back(std::move(t4));

    Trace t5;
    t5.symbols.push_back(Symbol::named("m3"));
    interior(t5, "f");
    t5.symbols.push_back(Symbol::star(4));
    t5.symbols.push_back(Symbol::named("t"));
    traces.push_back(std::move(t5));

    return TraceSet(std::move(traces));
}

// Fig.-style stretch pair: two traces sharing only the far endpoint.
inline TraceSet stretch_fixture(int k) {
    auto mk = [&](const std::string& head, const std::string& prefix, int star) {
        Trace t;
        t.symbols.push_back(Symbol::named(head));
        t.symbols.push_back(Symbol::star(star));
        for (int i = 1; i <= k; ++i) t.symbols.push_back(Symbol::named(prefix + std::to_string(i)));
        t.symbols.push_back(Symbol::named("u"));
        return t;
    };
    return TraceSet({mk("v", "v", 1), mk("w", "w", 2)});
}

} // namespace testsupport
