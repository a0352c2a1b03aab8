#include "tracetopo/star_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tracetopo {

void SmallGraph::add_edge(int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("SmallGraph: bad edge");
    if (a > b) std::swap(a, b);
    const auto e = std::make_pair(a, b);
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
}

bool SmallGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

std::vector<std::vector<int>> SmallGraph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return adj;
}

std::string StarJustification::kind_name() const {
    switch (kind) {
    case Kind::SameTrace: return "same-trace";
    case Kind::CondI: return "cond-i";
    case Kind::CondII: return "cond-ii";
    }
    return "?";
}

void StarGraph::add_edge(int a, int b, StarJustification just) {
    if (a == b) throw std::invalid_argument("star graph self-loop");
    if (a > b) std::swap(a, b);
    auto& justs = edges_[{a, b}];
    // Keep one witness per rule kind.
    for (const auto& j : justs)
        if (j.kind == just.kind) return;
    justs.push_back(std::move(just));
}

bool StarGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return edges_.count({a, b}) > 0;
}

SmallGraph StarGraph::as_small_graph() const {
    SmallGraph g;
    g.n = num_vertices();
    std::map<int, int> index;
    for (int i = 0; i < g.n; ++i) index[vertices_[static_cast<std::size_t>(i)]] = i;
    for (const auto& [pair, justs] : edges_) g.add_edge(index.at(pair.first), index.at(pair.second));
    return g;
}

StarGraph build_star_graph(const TraceSet& ts, const Alpha& alpha) {
    return build_star_graph(ts, build_canonic(ts), alpha);
}

StarGraph build_star_graph(const TraceSet& ts, const Topology& canonic, const Alpha& alpha) {
    StarGraph g(ts.star_ids());
    const auto& stars = ts.star_ids();
    if (stars.empty()) return g;

    // One BFS row per star gives every d_C(named, star) and d_C(star, star).
    std::vector<std::string> star_labels;
    star_labels.reserve(stars.size());
    for (int id : stars) star_labels.push_back("*" + std::to_string(id));
    const DistanceTable dc(canonic, star_labels);
    auto d_star = [&](std::size_t star_idx, const std::string& label) {
        return dc.at(star_labels[star_idx], label);
    };

    // Rule 1: stars sharing a trace always conflict (loop-free routing).
    for (std::size_t ti = 0; ti < ts.traces().size(); ++ti) {
        const auto& t = ts.traces()[ti];
        std::vector<int> in_trace;
        for (const auto& sym : t.symbols)
            if (sym.is_star()) in_trace.push_back(sym.star_id());
        for (std::size_t i = 0; i < in_trace.size(); ++i)
            for (std::size_t j = i + 1; j < in_trace.size(); ++j)
                g.add_edge(in_trace[i], in_trace[j],
                           {StarJustification::Kind::SameTrace, static_cast<int>(ti), 0, "", ""});
    }

    // Rule 2 (condition i): the trace of one star describes a path to a named
    // node that is too long for the canonic distance to the other star.
    for (std::size_t ai = 0; ai < stars.size(); ++ai) {
        for (int ti : ts.traces_with_star(stars[ai])) {
            const auto& t = ts.traces()[static_cast<std::size_t>(ti)];
            const Symbol star_sym = Symbol::star(stars[ai]);
            for (const auto& sym : t.symbols) {
                if (sym.is_star()) continue;
                const int bound = ceil_alpha(alpha, trace_distance(t, star_sym, sym));
                for (std::size_t bi = 0; bi < stars.size(); ++bi) {
                    if (bi == ai) continue;
                    const auto d = d_star(bi, sym.name());
                    if (d && bound > *d)
                        g.add_edge(stars[ai], stars[bi],
                                   {StarJustification::Kind::CondI, ti, stars[ai], sym.name(), ""});
                }
            }
        }
    }

    // Rule 3 (condition ii): a named pair's consistency bound exceeds the
    // canonic detour through the two stars; both assignments covered by
    // iterating ordered pairs.
    for (std::size_t ti = 0; ti < ts.traces().size(); ++ti) {
        const auto& t = ts.traces()[ti];
        std::vector<std::size_t> named_pos;
        for (std::size_t i = 0; i < t.symbols.size(); ++i)
            if (!t.symbols[i].is_star()) named_pos.push_back(i);
        for (std::size_t pi = 0; pi < named_pos.size(); ++pi) {
            for (std::size_t pj = 0; pj < named_pos.size(); ++pj) {
                if (pi == pj) continue;
                const auto& u = t.symbols[named_pos[pi]];
                const auto& v = t.symbols[named_pos[pj]];
                const int span = named_pos[pi] < named_pos[pj]
                                     ? static_cast<int>(named_pos[pj] - named_pos[pi])
                                     : static_cast<int>(named_pos[pi] - named_pos[pj]);
                const int bound = ceil_alpha(alpha, span);
                for (std::size_t ai = 0; ai < stars.size(); ++ai) {
                    const auto du = d_star(ai, u.name());
                    if (!du || *du >= bound) continue;
                    for (std::size_t bi = 0; bi < stars.size(); ++bi) {
                        if (bi == ai) continue;
                        const auto dv = d_star(bi, v.name());
                        if (dv && bound > *du + *dv)
                            g.add_edge(stars[ai], stars[bi],
                                       {StarJustification::Kind::CondII, static_cast<int>(ti), 0, u.name(), v.name()});
                    }
                }
            }
        }
    }

    return g;
}

// ---- coloring machinery ----

namespace {

std::vector<int> greedy_clique(const SmallGraph& g) {
    const auto adj = g.adjacency();
    std::vector<int> order(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return adj[static_cast<std::size_t>(a)].size() > adj[static_cast<std::size_t>(b)].size();
    });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) { ok = false; break; }
        if (ok) clique.push_back(v);
    }
    return clique;
}

int greedy_coloring_size(const SmallGraph& g) {
    const auto adj = g.adjacency();
    std::vector<int> order(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return adj[static_cast<std::size_t>(a)].size() > adj[static_cast<std::size_t>(b)].size();
    });
    std::vector<int> color(static_cast<std::size_t>(g.n), -1);
    int used = 0;
    for (int v : order) {
        std::set<int> taken;
        for (int u : adj[static_cast<std::size_t>(v)])
            if (color[static_cast<std::size_t>(u)] >= 0) taken.insert(color[static_cast<std::size_t>(u)]);
        int c = 0;
        while (taken.count(c)) ++c;
        color[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c + 1);
    }
    return g.n == 0 ? 0 : std::max(used, 1);
}

bool colorable_rec(const std::vector<std::vector<int>>& adj, std::vector<int>& color, int k, int colored, int max_used) {
    const int n = static_cast<int>(adj.size());
    if (colored == n) return true;
    // Most saturated vertex first, ties by degree.
    int pick = -1;
    int best_sat = -1;
    for (int v = 0; v < n; ++v) {
        if (color[static_cast<std::size_t>(v)] >= 0) continue;
        std::set<int> sat;
        for (int u : adj[static_cast<std::size_t>(v)])
            if (color[static_cast<std::size_t>(u)] >= 0) sat.insert(color[static_cast<std::size_t>(u)]);
        const int s = static_cast<int>(sat.size());
        if (s > best_sat ||
            (s == best_sat && pick >= 0 &&
             adj[static_cast<std::size_t>(v)].size() > adj[static_cast<std::size_t>(pick)].size())) {
            best_sat = s;
            pick = v;
        }
    }
    const int limit = std::min(k, max_used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int u : adj[static_cast<std::size_t>(pick)])
            if (color[static_cast<std::size_t>(u)] == c) { ok = false; break; }
        if (!ok) continue;
        color[static_cast<std::size_t>(pick)] = c;
        if (colorable_rec(adj, color, k, colored + 1, std::max(max_used, c + 1))) return true;
        color[static_cast<std::size_t>(pick)] = -1;
    }
    return false;
}

bool colorable(const SmallGraph& g, int k) {
    if (g.n == 0) return true;
    if (k <= 0) return false;
    const auto adj = g.adjacency();
    std::vector<int> color(static_cast<std::size_t>(g.n), -1);
    return colorable_rec(adj, color, k, 0, 0);
}

} // namespace

int chromatic_number(const SmallGraph& g) {
    if (g.n == 0) return 0;
    if (g.edges.empty()) return 1;
    const int lb = static_cast<int>(greedy_clique(g).size());
    const int ub = greedy_coloring_size(g);
    for (int k = lb; k < ub; ++k)
        if (colorable(g, k)) return k;
    return ub;
}

int chromatic_number(const StarGraph& g) { return chromatic_number(g.as_small_graph()); }

// ---- chromatic polynomial ----

namespace {

using Poly = std::vector<BigInt>; // Poly[i] multiplies k^i

Poly poly_monomial(int power) {
    Poly p(static_cast<std::size_t>(power) + 1);
    p[static_cast<std::size_t>(power)] = 1;
    return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

// Edge list with vertices compacted to 0..n-1, as a memoization key.
std::string graph_key(int n, const std::vector<std::pair<int, int>>& edges) {
    std::ostringstream key;
    key << n << ':';
    for (const auto& [a, b] : edges) key << a << ',' << b << ';';
    return key.str();
}

struct PolyContext {
    std::map<std::string, Poly> memo;
};

std::vector<std::vector<int>> components_of(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] >= 0) continue;
        const int c = static_cast<int>(groups.size());
        groups.emplace_back();
        std::vector<int> stack{v};
        comp[static_cast<std::size_t>(v)] = c;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            groups.back().push_back(u);
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = c;
                    stack.push_back(w);
                }
            }
        }
    }
    for (auto& grp : groups) std::sort(grp.begin(), grp.end());
    return groups;
}

Poly poly_connected(PolyContext& ctx, int n, std::vector<std::pair<int, int>> edges);

// General entry: split into connected components, multiply.
Poly poly_of(PolyContext& ctx, int n, std::vector<std::pair<int, int>> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.empty()) return poly_monomial(n);

    const auto groups = components_of(n, edges);
    Poly result{BigInt(1)};
    for (const auto& grp : groups) {
        if (grp.size() == 1) {
            result = poly_mul(result, poly_monomial(1));
            continue;
        }
        std::map<int, int> relabel;
        for (std::size_t i = 0; i < grp.size(); ++i) relabel[grp[i]] = static_cast<int>(i);
        std::vector<std::pair<int, int>> sub;
        for (const auto& [a, b] : edges) {
            const auto ia = relabel.find(a);
            if (ia == relabel.end()) continue;
            const int x = ia->second;
            const int y = relabel.at(b);
            sub.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(sub.begin(), sub.end());
        result = poly_mul(result, poly_connected(ctx, static_cast<int>(grp.size()), std::move(sub)));
    }
    return result;
}

Poly poly_connected(PolyContext& ctx, int n, std::vector<std::pair<int, int>> edges) {
    // Tree shortcut: connected with n-1 edges gives k(k-1)^(n-1).
    if (static_cast<int>(edges.size()) == n - 1) {
        Poly p = poly_monomial(1);
        const Poly k_minus_1{BigInt(-1), BigInt(1)};
        for (int i = 0; i < n - 1; ++i) p = poly_mul(p, k_minus_1);
        return p;
    }

    const std::string key = graph_key(n, edges);
    if (const auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

    // Deletion-contraction on the first edge.
    const auto [u, v] = edges.front();
    std::vector<std::pair<int, int>> deleted(edges.begin() + 1, edges.end());
    Poly p_del = poly_of(ctx, n, deleted);

    // Contract v into u, compact labels above v.
    std::vector<std::pair<int, int>> contracted;
    for (std::size_t i = 1; i < edges.size(); ++i) {
        int a = edges[i].first == v ? u : edges[i].first;
        int b = edges[i].second == v ? u : edges[i].second;
        if (a == b) continue;
        if (a > v) --a;
        if (b > v) --b;
        contracted.emplace_back(std::min(a, b), std::max(a, b));
    }
    Poly p_con = poly_of(ctx, n - 1, contracted);

    Poly result = poly_sub(std::move(p_del), p_con);
    ctx.memo.emplace(key, result);
    return result;
}

} // namespace

BigInt ChromaticPolynomial::eval(int k) const {
    BigInt acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * k + coeffs[i];
    return acc;
}

ChromaticPolynomial chromatic_polynomial(const SmallGraph& g, int max_vertices) {
    if (g.n > max_vertices)
        throw limit_error("max_poly_vertices",
                          "chromatic polynomial limited to " + std::to_string(max_vertices) + " vertices, got " +
                              std::to_string(g.n));
    PolyContext ctx;
    ChromaticPolynomial out;
    out.coeffs = poly_of(ctx, g.n, g.edges);
    return out;
}

ChromaticPolynomial chromatic_polynomial(const StarGraph& g, int max_vertices) {
    return chromatic_polynomial(g.as_small_graph(), max_vertices);
}

BigRat counting_upper_bound(const StarGraph& g, int max_vertices) {
    const ChromaticPolynomial poly = chromatic_polynomial(g, max_vertices);
    const int chi = chromatic_number(g);
    const int s = g.num_vertices();
    BigRat bound = 0;
    BigInt factorial = 1;
    for (int k = 0; k <= s; ++k) {
        if (k > 0) factorial *= k;
        if (k < chi) continue;
        bound += BigRat(poly.eval(k), factorial);
    }
    return bound;
}

} // namespace tracetopo
