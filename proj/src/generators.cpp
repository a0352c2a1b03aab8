#include "tracetopo/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace tracetopo {

namespace {

Symbol named(const std::string& s) { return Symbol::named(s); }

// Ground truth whose topology is exactly the canonic graph of its traces.
GroundTruth canonic_ground_truth(TraceSet ts, const Alpha& alpha) {
    GroundTruth gt{build_canonic(ts), std::move(ts), {}, alpha};
    gt.mapping = MappingFunction::identity(gt.traces);
    return gt;
}

} // namespace

GroundTruth gen_star_network(int s) {
    if (s < 1) throw std::invalid_argument("gen_star_network: s must be >= 1");
    std::vector<Trace> traces;
    for (int i = 1; i <= s; ++i)
        traces.push_back({{named("u" + std::to_string(i)), Symbol::star(i), named("v" + std::to_string(i))}});
    TraceSet ts(std::move(traces));

    std::vector<int> all(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    const std::string hub = anonymous_label(all, ts.max_star_id() >= 10);

    Topology g;
    g.add_node(hub, true);
    for (int i = 1; i <= s; ++i) {
        g.add_node("u" + std::to_string(i), false);
        g.add_node("v" + std::to_string(i), false);
        g.add_edge(hub, "u" + std::to_string(i));
        g.add_edge(hub, "v" + std::to_string(i));
    }

    std::map<std::string, std::string> m;
    for (const auto& name : ts.named_ids()) m.emplace(name, name);
    for (int i = 1; i <= s; ++i) m.emplace("*" + std::to_string(i), hub);

    return {std::move(g), std::move(ts), MappingFunction(std::move(m)), Alpha(1, 1)};
}

GroundTruth gen_diameter_chain(int s, int x) {
    if (s < 1) throw std::invalid_argument("gen_diameter_chain: s must be >= 1");
    if (x < 2 || x % 2 != 0) throw std::invalid_argument("gen_diameter_chain: x must be even and >= 2");
    std::vector<Trace> traces;
    for (int i = 1; i <= s; ++i) {
        Trace t;
        t.symbols.push_back(named("u" + std::to_string(i)));
        for (int k = 1; k <= x / 2; ++k)
            t.symbols.push_back(named("w" + std::to_string(i) + "_" + std::to_string(k)));
        t.symbols.push_back(Symbol::star(i));
        for (int k = x / 2 + 1; k <= x; ++k)
            t.symbols.push_back(named("w" + std::to_string(i) + "_" + std::to_string(k)));
        t.symbols.push_back(named("u" + std::to_string(i + 1)));
        traces.push_back(std::move(t));
    }
    return canonic_ground_truth(TraceSet(std::move(traces)), Alpha(1, 1));
}

GroundTruth realize_star_graph(const SmallGraph& g, const Alpha& alpha) {
    if (g.n < 1) throw std::invalid_argument("realize_star_graph: graph needs at least one vertex");
    // tau = ceil(3/(2 alpha) - 1/2) = ceil((3q - p) / (2p)) for alpha = p/q.
    const std::int64_t p = alpha.num();
    const std::int64_t q = alpha.den();
    const int tau = static_cast<int>((3 * q - p + 2 * p - 1) / (2 * p));

    auto w = [&](int vertex, int k) { return "w" + std::to_string(vertex + 1) + "_" + std::to_string(k); };

    std::vector<Trace> traces;
    for (int v = 0; v < g.n; ++v)
        traces.push_back({{named(w(v, tau)), Symbol::star(v + 1), named(w(v, tau + 1))}});

    auto edges = g.edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) {
        Trace t;
        for (int k = tau; k >= 1; --k) t.symbols.push_back(named(w(a, k)));
        t.symbols.push_back(named("v" + std::to_string(a + 1)));
        t.symbols.push_back(named("v" + std::to_string(b + 1)));
        for (int k = 1; k <= tau; ++k) t.symbols.push_back(named(w(b, k)));
        traces.push_back(std::move(t));
    }
    return canonic_ground_truth(TraceSet(std::move(traces)), alpha);
}

GroundTruth gen_fullexp_diameter(int k) {
    if (k < 1) throw std::invalid_argument("gen_fullexp_diameter: k must be >= 1");
    auto ray = [&](int i, int j) { return "r" + std::to_string(i) + "_" + std::to_string(j); };

    std::vector<Trace> traces;
    // Six ray-to-ray traces through the center cover every named pair.
    for (int a = 1; a <= 4; ++a) {
        for (int b = a + 1; b <= 4; ++b) {
            Trace t;
            t.symbols.push_back(named("u" + std::to_string(a)));
            for (int j = k - 1; j >= 1; --j) t.symbols.push_back(named(ray(a, j)));
            t.symbols.push_back(named("c"));
            for (int j = 1; j <= k - 1; ++j) t.symbols.push_back(named(ray(b, j)));
            t.symbols.push_back(named("u" + std::to_string(b)));
            traces.push_back(std::move(t));
        }
    }
    // Two anonymous chains, 2k+1 stars each.
    int next_star = 1;
    auto chain = [&](const std::string& from, const std::string& to) {
        Trace t;
        t.symbols.push_back(named(from));
        for (int j = 0; j < 2 * k + 1; ++j) t.symbols.push_back(Symbol::star(next_star++));
        t.symbols.push_back(named(to));
        return t;
    };
    traces.push_back(chain("u1", "u2"));
    traces.push_back(chain("u3", "u4"));

    // The chain route between u1 and u2 is two hops longer than the ray
    // route, so shortest-path consistency does not hold; k/(k+1) does.
    return canonic_ground_truth(TraceSet(std::move(traces)), Alpha(k, k + 1));
}

GroundTruth gen_fullexp_triangles(int s) {
    if (s < 2) throw std::invalid_argument("gen_fullexp_triangles: s must be >= 2");
    std::vector<Trace> traces;
    for (int i = 1; i <= s; ++i)
        traces.push_back({{named("v" + std::to_string(i)), Symbol::star(i), named("w")}});
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j)
            traces.push_back({{named("v" + std::to_string(i)), named("v" + std::to_string(j))}});
    TraceSet ts(std::move(traces));

    std::vector<int> all(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    const std::string hub = anonymous_label(all, ts.max_star_id() >= 10);

    Topology g;
    g.add_node(hub, true);
    g.add_node("w", false);
    g.add_edge(hub, "w");
    for (int i = 1; i <= s; ++i) {
        g.add_node("v" + std::to_string(i), false);
        g.add_edge(hub, "v" + std::to_string(i));
    }
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j)
            g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));

    std::map<std::string, std::string> m;
    for (const auto& name : ts.named_ids()) m.emplace(name, name);
    for (int i = 1; i <= s; ++i) m.emplace("*" + std::to_string(i), hub);

    return {std::move(g), std::move(ts), MappingFunction(std::move(m)), Alpha(1, 1)};
}

namespace {

// Distance rows computed on demand.
class LazyDistances {
public:
    explicit LazyDistances(const Topology& g) : g_(g), rows_(static_cast<std::size_t>(g.num_nodes())) {}
    const std::vector<std::optional<int>>& row(int from) {
        auto& r = rows_[static_cast<std::size_t>(from)];
        if (r.empty()) r = g_.bfs_from(from);
        return r;
    }

private:
    const Topology& g_;
    std::vector<std::vector<std::optional<int>>> rows_;
};

// Uniform predecessor walk over the BFS DAG towards the target.
std::vector<int> random_shortest_path(const Topology& g, int src, int dst, std::mt19937_64& rng) {
    const auto dist = g.bfs_from(dst);
    if (!dist[static_cast<std::size_t>(src)])
        throw std::invalid_argument("sample_traces: requested pair is disconnected");
    std::vector<int> path{src};
    int cur = src;
    while (cur != dst) {
        const int d = *dist[static_cast<std::size_t>(cur)];
        std::vector<int> next;
        for (int nb : g.neighbors(cur))
            if (dist[static_cast<std::size_t>(nb)] && *dist[static_cast<std::size_t>(nb)] == d - 1)
                next.push_back(nb);
        std::sort(next.begin(), next.end());
        cur = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
        path.push_back(cur);
    }
    return path;
}

// Randomized search for a simple path whose every sub-segment keeps the
// consistency bound; falls back to a shortest path (always admissible).
std::vector<int> random_admissible_path(const Topology& g, LazyDistances& dists, int src, int dst,
                                        const Alpha& alpha, std::mt19937_64& rng) {
    const auto& dist_dst = dists.row(dst);
    if (!dist_dst[static_cast<std::size_t>(src)])
        throw std::invalid_argument("sample_traces: requested pair is disconnected");
    const int d = *dist_dst[static_cast<std::size_t>(src)];
    const std::int64_t depth_cap = static_cast<std::int64_t>(d) * alpha.den() / alpha.num();

    auto admissible_extension = [&](const std::vector<int>& path, int candidate) {
        const int pos = static_cast<int>(path.size());
        for (int i = 0; i < pos; ++i) {
            const auto dd = dists.row(path[static_cast<std::size_t>(i)])[static_cast<std::size_t>(candidate)];
            if (!dd || *dd < ceil_alpha(alpha, pos - i)) return false;
        }
        return true;
    };

    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<int> path{src};
        std::set<int> used{src};
        while (static_cast<std::int64_t>(path.size()) - 1 < depth_cap) {
            const int cur = path.back();
            if (cur == dst) return path;
            std::vector<int> options;
            for (int nb : g.neighbors(cur)) {
                if (used.count(nb)) continue;
                const auto rest = dist_dst[static_cast<std::size_t>(nb)];
                if (!rest) continue;
                if (static_cast<std::int64_t>(path.size()) + *rest > depth_cap) continue;
                if (!admissible_extension(path, nb)) continue;
                options.push_back(nb);
            }
            if (options.empty()) break;
            std::sort(options.begin(), options.end());
            const int pick = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
            path.push_back(pick);
            used.insert(pick);
        }
        if (!path.empty() && path.back() == dst) return path;
    }
    return random_shortest_path(g, src, dst, rng);
}

} // namespace

GroundTruth sample_traces(const Topology& g0, const std::vector<std::pair<std::string, std::string>>& pairs,
                          const Alpha& alpha, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    LazyDistances dists(g0);

    std::vector<std::vector<int>> paths;
    for (const auto& [a, b] : pairs) {
        const int ia = g0.index_of(a);
        const int ib = g0.index_of(b);
        if (ia < 0 || ib < 0) throw std::invalid_argument("sample_traces: unknown pair node");
        if (g0.node(ia).anonymous || g0.node(ib).anonymous)
            throw std::invalid_argument("sample_traces: pair endpoints must be named");
        if (ia == ib) throw std::invalid_argument("sample_traces: pair endpoints must differ");
        paths.push_back(alpha == Alpha(1, 1) ? random_shortest_path(g0, ia, ib, rng)
                                             : random_admissible_path(g0, dists, ia, ib, alpha, rng));
    }

    int next_star = 1;
    std::map<std::string, std::string> mapping; // symbol -> g0 label
    std::vector<Trace> traces;
    std::set<int> covered_nodes;
    std::set<std::pair<int, int>> covered_edges;
    for (const auto& path : paths) {
        Trace t;
        for (std::size_t i = 0; i < path.size(); ++i) {
            const auto& node = g0.node(path[i]);
            covered_nodes.insert(path[i]);
            if (i)
                covered_edges.insert({std::min(path[i - 1], path[i]), std::max(path[i - 1], path[i])});
            if (node.anonymous) {
                const int id = next_star++;
                t.symbols.push_back(Symbol::star(id));
                mapping.emplace("*" + std::to_string(id), node.label);
            } else {
                t.symbols.push_back(named(node.label));
                mapping.emplace(node.label, node.label);
            }
        }
        traces.push_back(std::move(t));
    }

    Topology covered;
    for (int v = 0; v < g0.num_nodes(); ++v)
        if (covered_nodes.count(v)) covered.add_node(g0.node(v).label, g0.node(v).anonymous);
    for (const auto& [a, b] : covered_edges) covered.add_edge(g0.node(a).label, g0.node(b).label);

    return {std::move(covered), TraceSet(std::move(traces)), MappingFunction(std::move(mapping)), alpha};
}

GroundTruth make_fully_explored(const GroundTruth& gt, bool preserve_anonymous_degrees) {
    if (!(gt.alpha_used == Alpha(1, 1)))
        throw std::invalid_argument("make_fully_explored requires alpha = 1");

    const Topology& g0 = gt.topology;

    // Component labels of the ground truth.
    std::vector<int> comp(static_cast<std::size_t>(g0.num_nodes()), -1);
    int comp_count = 0;
    for (int v = 0; v < g0.num_nodes(); ++v) {
        if (comp[static_cast<std::size_t>(v)] >= 0) continue;
        std::vector<int> stack{v};
        comp[static_cast<std::size_t>(v)] = comp_count;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : g0.neighbors(u))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = comp_count;
                    stack.push_back(w);
                }
        }
        ++comp_count;
    }

    std::set<std::pair<std::string, std::string>> covered;
    for (const auto& t : gt.traces.traces()) {
        std::vector<std::string> names;
        for (const auto& sym : t.symbols)
            if (!sym.is_star()) names.push_back(sym.name());
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = i + 1; j < names.size(); ++j)
                covered.insert(names[i] < names[j] ? std::make_pair(names[i], names[j])
                                                   : std::make_pair(names[j], names[i]));
    }

    std::vector<std::pair<std::string, std::string>> missing;
    const auto& names = gt.traces.named_ids();
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            const int a = g0.index_of(names[i]);
            const int b = g0.index_of(names[j]);
            if (a < 0 || b < 0 || comp[static_cast<std::size_t>(a)] != comp[static_cast<std::size_t>(b)]) continue;
            if (!covered.count({names[i], names[j]})) missing.emplace_back(names[i], names[j]);
        }
    }
    if (missing.empty()) return gt;

    std::vector<Trace> traces = gt.traces.traces();
    std::map<std::string, std::string> mapping = gt.mapping.entries();
    Topology topo = g0;
    int next_star = gt.traces.max_star_id() + 1;

    if (preserve_anonymous_degrees) {
        // Named relay per missing pair; anonymous degrees and the conflict
        // graph stay untouched. Relays themselves are exempt from coverage.
        for (const auto& [a, b] : missing) {
            std::string relay = "fe:" + a + ":" + b;
            while (topo.has_node(relay)) relay += "x";
            topo.add_node(relay, false);
            topo.add_edge(a, relay);
            topo.add_edge(relay, b);
            traces.push_back({{named(a), named(relay), named(b)}});
            mapping.emplace(relay, relay);
        }
    } else {
        // Deterministic shortest-path trace per missing pair: BFS distances
        // from the target, stepping to the lexicographically least neighbor.
        for (const auto& [a, b] : missing) {
            const int src = topo.index_of(a);
            const int dst = topo.index_of(b);
            const auto dist = topo.bfs_from(dst);
            Trace t;
            int cur = src;
            while (true) {
                const auto& node = topo.node(cur);
                if (node.anonymous) {
                    const int id = next_star++;
                    t.symbols.push_back(Symbol::star(id));
                    mapping.emplace("*" + std::to_string(id), node.label);
                } else {
                    t.symbols.push_back(named(node.label));
                }
                if (cur == dst) break;
                const int d = *dist[static_cast<std::size_t>(cur)];
                int best = -1;
                for (int nb : topo.neighbors(cur)) {
                    if (!dist[static_cast<std::size_t>(nb)] || *dist[static_cast<std::size_t>(nb)] != d - 1) continue;
                    if (best < 0 || topo.node(nb).label < topo.node(best).label) best = nb;
                }
                cur = best;
            }
            traces.push_back(std::move(t));
        }
    }

    GroundTruth out{std::move(topo), TraceSet(std::move(traces)), MappingFunction(std::move(mapping)),
                    gt.alpha_used};
    const Verdict check = verify(out.traces, out.topology, out.mapping, out.alpha_used, 1);
    if (!check.passed)
        throw std::invalid_argument("make_fully_explored: augmentation breaks consistency (" +
                                    check.violations.front().detail + ")");
    return out;
}

} // namespace tracetopo
