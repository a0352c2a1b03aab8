#include "tracetopo/star_graph.hpp"

#include "support.hpp"
#include "tracetopo/enumerate.hpp"

#include <doctest.h>

#include <random>

using namespace tracetopo;

namespace {

SmallGraph cycle(int n) {
    SmallGraph g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SmallGraph triangle() { return cycle(3); }

SmallGraph path3() {
    SmallGraph g;
    g.n = 3;
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

} // namespace

TEST_CASE("a too-long trace path forces a conflict") {
    const TraceSet ts = parse_trace_set(std::string("u *1 v\nu a b c *2 v"));
    const StarGraph g = build_star_graph(ts, Alpha(1, 1));
    REQUIRE(g.has_edge(1, 2));
    bool cond_i = false;
    for (const auto& just : g.edges().at({1, 2})) cond_i |= (just.kind == StarJustification::Kind::CondI);
    CHECK(cond_i);
}

TEST_CASE("the stretch pair has no conflicts") {
    const StarGraph g = build_star_graph(testsupport::stretch_fixture(3), Alpha(1, 1));
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 0);
}

TEST_CASE("disjoint short traces have no conflicts") {
    const TraceSet ts = parse_trace_set(std::string("a *1 b\nc *2 d"));
    CHECK(build_star_graph(ts, Alpha(1, 1)).num_edges() == 0);
}

TEST_CASE("stars sharing a trace always conflict") {
    const TraceSet ts = parse_trace_set(std::string("u *1 *2 v"));
    const StarGraph g = build_star_graph(ts, Alpha(1, 1));
    REQUIRE(g.has_edge(1, 2));
    bool same_trace = false;
    for (const auto& just : g.edges().at({1, 2}))
        same_trace |= (just.kind == StarJustification::Kind::SameTrace);
    CHECK(same_trace);
}

TEST_CASE("named pair spans force conflicts through the canonic detour") {
    // (u,v) has trace distance 4 but both stars sit adjacent to u and v.
    const TraceSet ts = parse_trace_set(std::string("u *1 w\nw x u\nu y z v\nv *2 w2\nw2 q v"));
    const StarGraph g = build_star_graph(ts, Alpha(1, 1));
    // cond-ii: ceil(1*3) = 3 > d_C(u,*1) + d_C(v,*2) = 1 + 1.
    CHECK(g.has_edge(1, 2));
}

TEST_CASE("conflict edges are necessary: merging endpoints fails verification") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int iter = 0; iter < 30 && checked < 40; ++iter) {
        const Topology g0 = testsupport::random_ground_truth(9, 3, 0.3, rng);
        const auto pairs = testsupport::random_named_pairs(g0, 5, rng);
        if (pairs.empty()) continue;
        const GroundTruth gt = sample_traces(g0, pairs, Alpha(1, 1), 2100 + iter);
        const Alpha alpha(1, 1);
        const StarGraph stars = build_star_graph(gt.traces, alpha);
        const Topology gc = build_canonic(gt.traces);
        for (const auto& [pair, justs] : stars.edges()) {
            std::vector<std::vector<int>> blocks{{pair.first, pair.second}};
            for (int id : gt.traces.star_ids())
                if (id != pair.first && id != pair.second) blocks.push_back({id});
            const Topology merged = contract_stars(gc, blocks, gt.traces.max_star_id() >= 10);
            const Verdict v = verify(gt.traces, merged, MappingFunction::for_blocks(gt.traces, blocks), alpha);
            CHECK(!v.passed);
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("conflicts only grow with alpha") {
    std::mt19937_64 rng(37);
    const std::vector<Alpha> ascending{Alpha(1, 3), Alpha(1, 2), Alpha(2, 3), Alpha(1, 1)};
    for (int iter = 0; iter < 15; ++iter) {
        const Topology g0 = testsupport::random_ground_truth(9, 3, 0.3, rng);
        const auto pairs = testsupport::random_named_pairs(g0, 5, rng);
        if (pairs.empty()) continue;
        const GroundTruth gt = sample_traces(g0, pairs, Alpha(1, 3), 2500 + iter);
        std::vector<StarGraph> graphs;
        for (const auto& alpha : ascending) graphs.push_back(build_star_graph(gt.traces, alpha));
        for (std::size_t i = 0; i + 1 < graphs.size(); ++i)
            for (const auto& [pair, justs] : graphs[i].edges())
                CHECK(graphs[i + 1].has_edge(pair.first, pair.second));
    }
}

TEST_CASE("chromatic numbers of reference graphs") {
    SmallGraph edgeless;
    edgeless.n = 5;
    CHECK(chromatic_number(edgeless) == 1);
    CHECK(chromatic_number(triangle()) == 3);
    CHECK(chromatic_number(cycle(5)) == 3);
    SmallGraph empty;
    CHECK(chromatic_number(empty) == 0);

    // Brute-force cross-check: smallest k with a nonzero coloring count.
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 20; ++iter) {
        const SmallGraph g = testsupport::random_graph(6, 0.4, rng);
        int expected = 0;
        if (g.n > 0) {
            expected = 1;
            while (testsupport::count_proper_colorings(g, expected) == 0) ++expected;
        }
        CHECK(chromatic_number(g) == expected);
    }
}

TEST_CASE("chromatic polynomials of reference graphs") {
    SmallGraph edgeless;
    edgeless.n = 4;
    const ChromaticPolynomial pe = chromatic_polynomial(edgeless);
    CHECK(pe.coeffs == std::vector<BigInt>{0, 0, 0, 0, 1}); // k^4

    const ChromaticPolynomial pt = chromatic_polynomial(triangle());
    CHECK(pt.eval(3) == 6); // brute force: 6 proper 3-colorings
    CHECK(pt.coeffs == std::vector<BigInt>{0, 2, -3, 1}); // k(k-1)(k-2)

    const ChromaticPolynomial pp = chromatic_polynomial(path3());
    CHECK(pp.eval(2) == 2);
    CHECK(pp.coeffs == std::vector<BigInt>{0, 1, -2, 1}); // k(k-1)^2
}

TEST_CASE("chromatic polynomial matches brute-force counts and invariants") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 15; ++iter) {
        const SmallGraph g = testsupport::random_graph(6, 0.45, rng);
        const ChromaticPolynomial p = chromatic_polynomial(g);
        const int chi = chromatic_number(g);
        for (int k = 0; k <= g.n; ++k) {
            CHECK(p.eval(k) == testsupport::count_proper_colorings(g, k));
            if (k < chi) CHECK(p.eval(k) == 0);
        }
        CHECK(p.coeffs.back() == 1); // leading coefficient
    }
}

TEST_CASE("chromatic polynomial size limit") {
    SmallGraph big;
    big.n = 16;
    CHECK_THROWS_AS(chromatic_polynomial(big), limit_error);
    try {
        chromatic_polynomial(big);
    } catch (const limit_error& e) {
        CHECK(e.limit_name() == "max_poly_vertices");
    }
}

TEST_CASE("counting bound evaluations") {
    // Edgeless on two stars: 1/1! + 4/2! = 3.
    const TraceSet ts2 = parse_trace_set(std::string("a *1 b\nc *2 d"));
    CHECK(counting_upper_bound(build_star_graph(ts2, Alpha(1, 1))) == BigRat(3));

    // Single star: bound 1.
    const TraceSet ts1 = parse_trace_set(std::string("a *1 b"));
    CHECK(counting_upper_bound(build_star_graph(ts1, Alpha(1, 1))) == BigRat(1));

    // Triangle conflict graph: only the k = 3 term, 6/3! = 1.
    const TraceSet ts3 = parse_trace_set(std::string("u *1 *2 *3 v"));
    const StarGraph g3 = build_star_graph(ts3, Alpha(1, 1));
    CHECK(g3.num_edges() == 3);
    CHECK(counting_upper_bound(g3) == BigRat(1));

    // Direct-summation oracle on random graphs.
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 10; ++iter) {
        const SmallGraph g = testsupport::random_graph(5, 0.4, rng);
        StarGraph sg(std::vector<int>{1, 2, 3, 4, 5});
        for (const auto& [a, b] : g.edges)
            sg.add_edge(a + 1, b + 1, {StarJustification::Kind::SameTrace, 0, 0, "", ""});
        BigRat expected = 0;
        BigInt fact = 1;
        const int chi = chromatic_number(g);
        for (int k = 1; k <= 5; ++k) {
            fact *= k;
            if (k >= chi) expected += BigRat(testsupport::count_proper_colorings(g, k), fact);
        }
        CHECK(counting_upper_bound(sg) == expected);
    }
}

TEST_CASE("realization round trip on fixed graphs") {
    SmallGraph single_edge;
    single_edge.n = 2;
    single_edge.add_edge(0, 1);
    const GroundTruth gt1 = realize_star_graph(single_edge, Alpha(1, 1));
    const StarGraph sg1 = build_star_graph(gt1.traces, Alpha(1, 1));
    CHECK(sg1.num_vertices() == 2);
    CHECK(sg1.num_edges() == 1);
    CHECK(sg1.has_edge(1, 2));

    SmallGraph edgeless3;
    edgeless3.n = 3;
    for (const Alpha& alpha : {Alpha(1, 1), Alpha(1, 2)}) {
        const GroundTruth gt = realize_star_graph(edgeless3, alpha);
        CHECK(build_star_graph(gt.traces, alpha).num_edges() == 0);
    }

    const GroundTruth gt5 = realize_star_graph(cycle(5), Alpha(1, 2));
    const StarGraph sg5 = build_star_graph(gt5.traces, Alpha(1, 2));
    SmallGraph back;
    back.n = sg5.num_vertices();
    for (const auto& [pair, justs] : sg5.edges()) back.add_edge(pair.first - 1, pair.second - 1);
    auto sorted = [](SmallGraph g) {
        std::sort(g.edges.begin(), g.edges.end());
        return g.edges;
    };
    CHECK(back.n == 5);
    CHECK(sorted(back) == sorted(cycle(5)));
}
