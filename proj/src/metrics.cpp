#include "tracetopo/metrics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tracetopo {

namespace {

std::vector<int> component_labels(const Topology& g, int& count) {
    std::vector<int> comp(static_cast<std::size_t>(g.num_nodes()), -1);
    count = 0;
    for (int v = 0; v < g.num_nodes(); ++v) {
        if (comp[static_cast<std::size_t>(v)] >= 0) continue;
        std::vector<int> stack{v};
        comp[static_cast<std::size_t>(v)] = count;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return comp;
}

long long triangle_count(const Topology& g) {
    std::vector<std::set<int>> nb(static_cast<std::size_t>(g.num_nodes()));
    for (int v = 0; v < g.num_nodes(); ++v)
        nb[static_cast<std::size_t>(v)].insert(g.neighbors(v).begin(), g.neighbors(v).end());
    long long total = 0;
    for (const auto& [a, b] : g.edges()) {
        const auto& small = nb[static_cast<std::size_t>(a)].size() < nb[static_cast<std::size_t>(b)].size()
                                ? nb[static_cast<std::size_t>(a)]
                                : nb[static_cast<std::size_t>(b)];
        const auto& large = nb[static_cast<std::size_t>(a)].size() < nb[static_cast<std::size_t>(b)].size()
                                ? nb[static_cast<std::size_t>(b)]
                                : nb[static_cast<std::size_t>(a)];
        for (int c : small)
            if (c != a && c != b && large.count(c)) ++total;
    }
    return total / 3;
}

std::vector<std::string> named_labels(const Topology& g) {
    std::vector<std::string> out;
    for (const auto& n : g.nodes())
        if (!n.anonymous) out.push_back(n.label);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

MetricRecord measure(const Topology& g, const Topology* reference) {
    MetricRecord r;
    r.nodes = g.num_nodes();
    r.edges = g.num_edges();
    r.max_degree = 0;
    for (int v = 0; v < g.num_nodes(); ++v) r.max_degree = std::max(r.max_degree, g.degree(v));
    r.triangles = triangle_count(g);

    int comp_count = 0;
    component_labels(g, comp_count);
    r.components = comp_count;
    r.disconnected = comp_count > 1;

    r.diameter = 0;
    for (int v = 0; v < g.num_nodes(); ++v) {
        const auto dist = g.bfs_from(v);
        for (const auto& d : dist)
            if (d) r.diameter = std::max(r.diameter, *d);
    }

    if (reference) {
        const auto names = named_labels(g);
        for (const auto& name : names)
            if (!reference->has_node(name))
                throw std::invalid_argument("reference topology is missing named node " + name);

        std::map<std::string, std::vector<std::optional<int>>> dg, dr;
        for (const auto& name : names) {
            dg.emplace(name, g.bfs_from(g.index_of(name)));
            dr.emplace(name, reference->bfs_from(reference->index_of(name)));
        }
        std::optional<BigRat> worst;
        for (std::size_t i = 0; i < names.size(); ++i) {
            for (std::size_t j = i + 1; j < names.size(); ++j) {
                const auto a = dg.at(names[i])[static_cast<std::size_t>(g.index_of(names[j]))];
                const auto b = dr.at(names[i])[static_cast<std::size_t>(reference->index_of(names[j]))];
                if (!a || !b) {
                    r.stretch_pairs_skipped = true;
                    continue;
                }
                if (*a == 0 || *b == 0) continue;
                const BigRat ratio = *a > *b ? BigRat(*a, *b) : BigRat(*b, *a);
                if (!worst || ratio > *worst) worst = ratio;
            }
        }
        r.stretch = worst;
    }
    return r;
}

bool BoundAudit::all_within() const {
    for (const auto& e : entries)
        if (e.enforced && e.verdict == "violated") return false;
    return true;
}

const AuditEntry* BoundAudit::find(const std::string& metric, const std::string& kind) const {
    for (const auto& e : entries)
        if (e.metric == metric && e.kind == kind) return &e;
    return nullptr;
}

namespace {

AuditEntry make_entry(std::string metric, std::string kind, std::optional<BigRat> observed,
                      std::optional<BigRat> bound, bool enforced) {
    AuditEntry e;
    e.metric = std::move(metric);
    e.kind = std::move(kind);
    e.observed = std::move(observed);
    e.bound = std::move(bound);
    e.enforced = enforced;
    if (!e.observed || !e.bound) {
        e.verdict = "skipped";
    } else {
        e.tight = *e.observed == *e.bound;
        e.verdict = !enforced ? "skipped" : (*e.observed <= *e.bound ? "within" : "violated");
    }
    return e;
}

struct Range {
    long long min = 0, max = 0;
    bool any = false;
    void add(long long v) {
        if (!any) { min = max = v; any = true; }
        else { min = std::min(min, v); max = std::max(max, v); }
    }
    std::optional<BigRat> diff() const { return any ? std::optional<BigRat>(BigRat(max - min)) : std::nullopt; }
    std::optional<BigRat> ratio() const {
        if (!any || min <= 0) return std::nullopt;
        return BigRat(max, min);
    }
};

} // namespace

BoundAudit audit_ensemble(const Ensemble& e, const TraceSetStats& stats, int chi, bool fully_explored) {
    if (e.topologies.empty()) throw std::invalid_argument("audit_ensemble: empty ensemble");

    Range nodes, edges, comps, max_deg, triangles, diam_connected;
    for (const auto& g : e.topologies) {
        const MetricRecord r = measure(g);
        nodes.add(r.nodes);
        edges.add(r.edges);
        comps.add(r.components);
        max_deg.add(r.max_degree);
        triangles.add(r.triangles);
        if (!r.disconnected) diam_connected.add(r.diameter);
    }

    // Worst named-pair distance ratio across members, per pair; pairs that
    // are disconnected in some member are skipped (components entry covers
    // that case).
    std::optional<BigRat> stretch_observed;
    {
        const auto names = named_labels(e.topologies.front());
        std::map<std::pair<std::string, std::string>, std::pair<int, int>> span; // min,max distance
        std::set<std::pair<std::string, std::string>> skipped;
        for (const auto& g : e.topologies) {
            for (const auto& name : names) {
                const int src = g.index_of(name);
                if (src < 0) { continue; }
                const auto dist = g.bfs_from(src);
                for (const auto& other : names) {
                    if (!(name < other)) continue;
                    const int dst = g.index_of(other);
                    const auto key = std::make_pair(name, other);
                    if (dst < 0 || !dist[static_cast<std::size_t>(dst)]) {
                        skipped.insert(key);
                        continue;
                    }
                    const int d = *dist[static_cast<std::size_t>(dst)];
                    auto [it, inserted] = span.emplace(key, std::make_pair(d, d));
                    if (!inserted) {
                        it->second.first = std::min(it->second.first, d);
                        it->second.second = std::max(it->second.second, d);
                    }
                }
            }
        }
        for (const auto& [key, mm] : span) {
            if (skipped.count(key) || mm.first == 0) continue;
            const BigRat ratio(mm.second, mm.first);
            if (!stretch_observed || ratio > *stretch_observed) stretch_observed = ratio;
        }
    }

    const int s = stats.s;
    const int n = stats.n;
    const int N = stats.N;
    const int nu = stats.nu;

    // Ratios are >= 1 by construction; a formula that degenerates below 1
    // (possible only without stars) is floored at the trivial bound.
    auto ratio_bound = [](BigRat formula) { return formula < 1 ? BigRat(1) : formula; };

    BoundAudit audit;
    audit.entries.push_back(make_entry("nodes", "difference", nodes.diff(), BigRat(s - chi), true));
    audit.entries.push_back(make_entry("nodes", "ratio", nodes.ratio(), ratio_bound(BigRat(n + s, n + chi)), true));
    audit.entries.push_back(make_entry("edges", "difference", edges.diff(), BigRat(2 * (s - chi)), true));
    audit.entries.push_back(make_entry("edges", "ratio", edges.ratio(), ratio_bound(BigRat(nu + 2 * s, nu + 2)), true));
    audit.entries.push_back(make_entry("components", "difference", comps.diff(),
                                       fully_explored ? BigRat(0) : BigRat(n, 2), true));
    audit.entries.push_back(make_entry("stretch", "ratio", stretch_observed,
                                       fully_explored ? BigRat(1) : ratio_bound(BigRat(N - 1, 2)), true));
    audit.entries.push_back(make_entry("diameter", "difference", diam_connected.diff(),
                                       fully_explored ? BigRat(s, 2)
                                                      : (s == 0 ? BigRat(0) : BigRat((s - 1) * (N - 1), s)),
                                       !fully_explored));
    audit.entries.push_back(make_entry("diameter", "ratio", diam_connected.ratio(),
                                       fully_explored ? BigRat(2) : ratio_bound(BigRat(s)), true));
    audit.entries.push_back(make_entry("max_degree", "difference", max_deg.diff(), BigRat(2 * (s - chi)), true));
    audit.entries.push_back(make_entry("max_degree", "ratio", max_deg.ratio(), ratio_bound(BigRat(s - chi + 1)), true));
    audit.entries.push_back(make_entry("triangles", "difference", triangles.diff(),
                                       fully_explored ? BigRat(s * (s - 1), 2) : BigRat(2 * s * (s - 1)), true));
    audit.entries.push_back(make_entry("triangles", "ratio", triangles.ratio(), std::nullopt, false));
    return audit;
}

FullExploration is_fully_explored(const TraceSet& ts) {
    const Topology canonic = build_canonic(ts);
    int comp_count = 0;
    const auto comp = component_labels(canonic, comp_count);

    std::set<std::pair<std::string, std::string>> covered;
    for (const auto& t : ts.traces()) {
        std::vector<std::string> names;
        for (const auto& sym : t.symbols)
            if (!sym.is_star()) names.push_back(sym.name());
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = i + 1; j < names.size(); ++j)
                covered.insert(names[i] < names[j] ? std::make_pair(names[i], names[j])
                                                   : std::make_pair(names[j], names[i]));
    }

    FullExploration out;
    const auto& names = ts.named_ids();
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            const int ci = comp[static_cast<std::size_t>(canonic.index_of(names[i]))];
            const int cj = comp[static_cast<std::size_t>(canonic.index_of(names[j]))];
            if (ci != cj) continue;
            if (!covered.count({names[i], names[j]})) {
                out.fully_explored = false;
                out.missing_pairs.emplace_back(names[i], names[j]);
            }
        }
    }
    return out;
}

} // namespace tracetopo
