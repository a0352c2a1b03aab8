#include "tracetopo/topology.hpp"

#include "support.hpp"
#include "tracetopo/json_io.hpp"

#include <doctest.h>

#include <random>

using namespace tracetopo;

TEST_CASE("canonic graph from two parallel star traces") {
    const TraceSet ts = parse_trace_set(std::string("u *1 v\nu *2 v"));
    const Topology g = build_canonic(ts);
    CHECK(g.num_nodes() == 4);
    CHECK(g.num_edges() == 4);
    CHECK(g.anonymous_count() == 2);
    CHECK(g.has_edge("u", "*1"));
    CHECK(g.has_edge("*1", "v"));
    CHECK(g.has_edge("u", "*2"));
    CHECK(g.has_edge("*2", "v"));
}

TEST_CASE("canonic graph of a single named pair") {
    const Topology g = build_canonic(parse_trace_set(std::string("u v")));
    CHECK(g.num_nodes() == 2);
    CHECK(g.num_edges() == 1);
    CHECK(g.anonymous_count() == 0);
}

TEST_CASE("canonic graph of the stretch pair is two chains sharing an endpoint") {
    const int k = 4;
    const TraceSet ts = testsupport::stretch_fixture(k);
    const Topology g = build_canonic(ts);
    CHECK(g.anonymous_count() == 2);
    CHECK(g.num_nodes() == 2 * (k + 2) + 1);
    CHECK(g.num_edges() == 2 * (k + 2));
}

TEST_CASE("distances with the unreachable marker") {
    const Topology chain = build_canonic(parse_trace_set(std::string("u *1 v")));
    const DistanceTable d1 = all_pairs_distances(chain, {"u"});
    CHECK(d1.at("u", "v") == 2);
    CHECK(d1.at("u", "u") == 0);

    const Topology split = build_canonic(parse_trace_set(std::string("u v\nw x")));
    const DistanceTable d2 = all_pairs_distances(split, {"u"});
    CHECK(!d2.at("u", "w").has_value());

    CHECK_THROWS_AS(all_pairs_distances(chain, {"nope"}), std::invalid_argument);

    const int k = 3;
    const Topology fig = build_canonic(testsupport::stretch_fixture(k));
    const DistanceTable d3 = all_pairs_distances(fig, {"v"});
    CHECK(d3.at("v", "w") == 2 * (k + 2));
}

TEST_CASE("distance table is symmetric with zero diagonal and triangle inequality") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 20; ++iter) {
        const Topology g = testsupport::random_ground_truth(9, 3, 0.25, rng);
        std::vector<std::string> labels;
        for (const auto& n : g.nodes()) labels.push_back(n.label);
        const DistanceTable d = all_pairs_distances(g, labels);
        for (const auto& a : labels) {
            CHECK(d.at(a, a) == 0);
            for (const auto& b : labels) {
                CHECK(d.at(a, b) == d.at(b, a));
                for (const auto& c : labels) {
                    const auto ab = d.at(a, b), bc = d.at(b, c), ac = d.at(a, c);
                    if (ab && bc) {
                        REQUIRE(ac.has_value());
                        CHECK(*ac <= *ab + *bc);
                    }
                }
            }
        }
    }
}

TEST_CASE("every consecutive pair is an edge and every edge has a consecutive pair") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 25; ++iter) {
        const Topology g0 = testsupport::random_ground_truth(8, 2, 0.3, rng);
        const auto pairs = testsupport::random_named_pairs(g0, 5, rng);
        if (pairs.empty()) continue;
        const GroundTruth gt = sample_traces(g0, pairs, Alpha(1, 1), 100 + iter);
        const Topology gc = build_canonic(gt.traces);

        std::set<std::pair<std::string, std::string>> from_traces;
        for (const auto& t : gt.traces.traces()) {
            for (std::size_t i = 0; i + 1 < t.symbols.size(); ++i) {
                std::string a = t.symbols[i].label(), b = t.symbols[i + 1].label();
                if (b < a) std::swap(a, b);
                from_traces.insert({a, b});
                CHECK(gc.has_edge(a, b));
            }
        }
        CHECK(static_cast<int>(from_traces.size()) == gc.num_edges());

        // The trace itself is a walk, so canonic distances never exceed
        // trace distances.
        for (const auto& t : gt.traces.traces()) {
            for (std::size_t i = 0; i < t.symbols.size(); ++i) {
                const DistanceTable d = all_pairs_distances(gc, {t.symbols[i].label()});
                for (std::size_t j = i + 1; j < t.symbols.size(); ++j) {
                    const auto dc = d.at(t.symbols[i].label(), t.symbols[j].label());
                    REQUIRE(dc.has_value());
                    CHECK(*dc <= static_cast<int>(j - i));
                }
            }
        }
    }
}

TEST_CASE("topology JSON round trip with canonical ordering") {
    const Topology g = build_canonic(parse_trace_set(std::string("u *2 v\nb a")));
    const Json j = topology_to_json(g);
    CHECK(j.at("nodes").at(0).at("label") == "*2"); // lexicographic
    const Topology back = topology_from_json(j);
    CHECK(back == g);
    CHECK(topology_to_json(back) == j);
}

TEST_CASE("topology rejects self-loops and unknown labels") {
    Topology g;
    g.add_node("a", false);
    CHECK_THROWS_AS(g.add_edge("a", "a"), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge("a", "zz"), std::invalid_argument);
}

TEST_CASE("contract_stars merges blocks and collapses parallel edges") {
    const TraceSet ts = parse_trace_set(std::string("u *1 v\nu *2 v"));
    const Topology gc = build_canonic(ts);
    const Topology merged = contract_stars(gc, {{1, 2}}, false);
    CHECK(merged.num_nodes() == 3);
    CHECK(merged.num_edges() == 2);
    CHECK(merged.has_node("*12"));
    CHECK(merged.has_edge("u", "*12"));
    CHECK(merged.has_edge("*12", "v"));
}
