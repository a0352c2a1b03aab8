#include "tracetopo/cli.hpp"

#include "tracetopo/enumerate.hpp"
#include "tracetopo/generators.hpp"
#include "tracetopo/json_io.hpp"
#include "tracetopo/metrics.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace tracetopo {

namespace {

TraceSet load_traces(const std::string& path) {
    if (path == "-") return parse_trace_set(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read trace file " + path);
    return parse_trace_set(in);
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    Json j;
    in >> j;
    return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

struct Options {
    std::string traces_path;
    std::string alpha = "1";
    std::string format = "json";
    std::int64_t max_partitions = 1'000'000;
    int max_stars = 12;
    int max_poly = 15;
    int workers = 1;
};

Json ensemble_records(const Topology& canonic, const Ensemble& ensemble) {
    Json records = Json::array();
    for (std::size_t i = 0; i < ensemble.partitions.size(); ++i) {
        const Topology& g = ensemble.topologies[i];
        Json record;
        record["partition"] = partition_to_json(ensemble.partitions[i]);
        const Json topo = topology_to_json(g);
        record["nodes"] = topo.at("nodes");
        record["edges"] = topo.at("edges");
        record["metrics"] = metric_record_to_json(measure(g, &canonic));
        records.push_back(std::move(record));
    }
    return records;
}

Json range_json(const Ensemble& ensemble) {
    auto range_of = [&](auto getter) {
        long long mn = 0, mx = 0;
        bool any = false;
        for (const auto& g : ensemble.topologies) {
            const MetricRecord r = measure(g);
            const long long v = getter(r);
            if (!any) { mn = mx = v; any = true; }
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        return Json{{"min", mn}, {"max", mx}};
    };
    Json j;
    j["nodes"] = range_of([](const MetricRecord& r) { return static_cast<long long>(r.nodes); });
    j["edges"] = range_of([](const MetricRecord& r) { return static_cast<long long>(r.edges); });
    j["components"] = range_of([](const MetricRecord& r) { return static_cast<long long>(r.components); });
    j["diameter"] = range_of([](const MetricRecord& r) { return static_cast<long long>(r.diameter); });
    j["max_degree"] = range_of([](const MetricRecord& r) { return static_cast<long long>(r.max_degree); });
    j["triangles"] = range_of([](const MetricRecord& r) { return r.triangles; });
    return j;
}

void render_audit_text(std::ostream& out, const BoundAudit& audit) {
    for (const auto& e : audit.entries) {
        out << e.metric << " " << e.kind << ": observed=" << (e.observed ? to_string(*e.observed) : "-")
            << " bound=" << (e.bound ? to_string(*e.bound) : "-") << " " << e.verdict
            << (e.tight ? " (tight)" : "") << "\n";
    }
}

int cmd_validate(const Options& opt, std::ostream& out) {
    const TraceSet ts = load_traces(opt.traces_path);
    if (opt.format == "text") {
        out << "traces: " << ts.traces().size() << "\nnamed: " << ts.stats().n << "\nstars: " << ts.stats().s
            << "\nsymbols: " << ts.stats().N << "\nnamed_edges: " << ts.stats().nu << "\n";
        return 0;
    }
    Json j;
    j["traces"] = ts.traces().size();
    j["stats"] = stats_to_json(ts.stats());
    j["serialized"] = serialize_trace_set(ts);
    emit(out, j);
    return 0;
}

int cmd_canonic(const Options& opt, std::ostream& out) {
    const TraceSet ts = load_traces(opt.traces_path);
    emit(out, topology_to_json(build_canonic(ts)));
    return 0;
}

int cmd_stars(const Options& opt, std::ostream& out) {
    const TraceSet ts = load_traces(opt.traces_path);
    const Alpha alpha = Alpha::parse(opt.alpha);
    const StarGraph stars = build_star_graph(ts, alpha);
    const int chi = chromatic_number(stars);
    const ChromaticPolynomial poly = chromatic_polynomial(stars, opt.max_poly);
    const BigRat bound = counting_upper_bound(stars, opt.max_poly);
    if (opt.format == "text") {
        out << "stars: " << stars.num_vertices() << "\nconflict_edges: " << stars.num_edges()
            << "\nchromatic_number: " << chi << "\ncounting_bound: " << to_string(bound) << "\n";
        return 0;
    }
    Json j = star_graph_to_json(stars);
    j["alpha"] = alpha.str();
    j["chromatic_number"] = chi;
    Json coeffs = Json::array();
    for (const auto& c : poly.coeffs) coeffs.push_back(to_string(c));
    j["chromatic_polynomial"] = std::move(coeffs);
    j["counting_bound"] = to_string(bound);
    emit(out, j);
    return 0;
}

int cmd_enumerate(const Options& opt, bool rejected, std::ostream& out) {
    const TraceSet ts = load_traces(opt.traces_path);
    const Alpha alpha = Alpha::parse(opt.alpha);
    EnumerateOptions eo;
    eo.max_partitions = opt.max_partitions;
    eo.max_stars = opt.max_stars;
    eo.workers = opt.workers;
    eo.collect_rejections = rejected;
    const Ensemble ensemble = enumerate_inferrable(ts, alpha, eo);

    const Topology canonic = build_canonic(ts);
    const StarGraph stars = build_star_graph(ts, canonic, alpha);

    Json summary;
    summary["count"] = ensemble.partitions.size();
    summary["truncated"] = ensemble.truncated;
    summary["alpha"] = alpha.str();
    summary["chromatic_number"] = chromatic_number(stars);
    if (ts.stats().s <= opt.max_poly)
        summary["counting_bound"] = to_string(counting_upper_bound(stars, opt.max_poly));
    else
        summary["counting_bound"] = nullptr;
    if (stars.num_edges() == 0)
        summary["bell"] = to_string(bell_number(ts.stats().s));
    else
        summary["bell"] = nullptr;

    if (opt.format == "text") {
        out << "count: " << ensemble.partitions.size() << "\ntruncated: " << (ensemble.truncated ? "true" : "false")
            << "\n";
        for (std::size_t i = 0; i < ensemble.partitions.size(); ++i) {
            out << i << ":";
            for (const auto& block : ensemble.partitions[i].blocks) {
                out << " {";
                for (std::size_t k = 0; k < block.size(); ++k) out << (k ? "," : "") << block[k];
                out << "}";
            }
            out << "\n";
        }
        return 0;
    }

    Json j;
    j["summary"] = std::move(summary);
    j["topologies"] = ensemble_records(canonic, ensemble);
    if (rejected) {
        Json rj = Json::array();
        for (const auto& r : ensemble.rejections) {
            Json entry;
            entry["partition"] = partition_to_json(r.partition);
            entry["witness"] = verdict_to_json(Verdict{false, {r.witness}}).at("violations").at(0);
            rj.push_back(std::move(entry));
        }
        j["rejected"] = std::move(rj);
    }
    emit(out, j);
    return 0;
}

int cmd_metrics(const Options& opt, std::ostream& out) {
    const TraceSet ts = load_traces(opt.traces_path);
    const Alpha alpha = Alpha::parse(opt.alpha);
    EnumerateOptions eo;
    eo.max_partitions = opt.max_partitions;
    eo.max_stars = opt.max_stars;
    eo.workers = opt.workers;
    const Ensemble ensemble = enumerate_inferrable(ts, alpha, eo);
    const Topology canonic = build_canonic(ts);
    const StarGraph stars = build_star_graph(ts, canonic, alpha);
    const FullExploration fe = is_fully_explored(ts);

    Json j;
    j["fully_explored"] = fe.fully_explored;
    j["count"] = ensemble.partitions.size();
    if (!ensemble.topologies.empty()) {
        Json per = Json::array();
        for (std::size_t i = 0; i < ensemble.topologies.size(); ++i) {
            Json entry;
            entry["partition"] = partition_to_json(ensemble.partitions[i]);
            entry["metrics"] = metric_record_to_json(measure(ensemble.topologies[i], &canonic));
            per.push_back(std::move(entry));
        }
        j["per_topology"] = std::move(per);
        j["ranges"] = range_json(ensemble);
        const BoundAudit audit =
            audit_ensemble(ensemble, ts.stats(), chromatic_number(stars), fe.fully_explored);
        if (opt.format == "text") {
            out << "count: " << ensemble.partitions.size() << "\nfully_explored: "
                << (fe.fully_explored ? "true" : "false") << "\n";
            render_audit_text(out, audit);
            return 0;
        }
        j["audit"] = audit_to_json(audit);
    } else {
        j["per_topology"] = Json::array();
        j["ranges"] = nullptr;
        j["audit"] = nullptr;
        if (opt.format == "text") {
            out << "count: 0\nfully_explored: " << (fe.fully_explored ? "true" : "false") << "\n";
            return 0;
        }
    }
    emit(out, j);
    return 0;
}

int cmd_check(const Options& opt, const std::string& topology_path, const std::string& mapping_path,
              std::ostream& out) {
    const TraceSet ts = load_traces(opt.traces_path);
    const Alpha alpha = Alpha::parse(opt.alpha);
    const Topology g = topology_from_json(load_json(topology_path));
    const MappingFunction m =
        mapping_path.empty() ? MappingFunction::identity(ts) : mapping_from_json(load_json(mapping_path));
    const Verdict v = verify(ts, g, m, alpha);
    if (opt.format == "text") {
        out << (v.passed ? "passed" : "failed") << "\n";
        for (const auto& viol : v.violations)
            out << "axiom " << viol.axiom << " trace " << viol.trace << " (" << viol.sym1 << "," << viol.sym2
                << ") required " << viol.required << " actual "
                << (viol.actual ? std::to_string(*viol.actual) : "unreachable") << "\n";
    } else {
        emit(out, verdict_to_json(v));
    }
    return v.passed ? 0 : 1;
}

int cmd_fullexp(const Options& opt, std::ostream& out) {
    const TraceSet ts = load_traces(opt.traces_path);
    const FullExploration fe = is_fully_explored(ts);
    if (opt.format == "text") {
        out << "fully_explored: " << (fe.fully_explored ? "true" : "false") << "\n";
        for (const auto& [a, b] : fe.missing_pairs) out << "missing: " << a << " " << b << "\n";
        return 0;
    }
    Json j;
    j["fully_explored"] = fe.fully_explored;
    j["missing_pairs"] = Json::array();
    for (const auto& [a, b] : fe.missing_pairs) j["missing_pairs"].push_back({a, b});
    emit(out, j);
    return 0;
}

int emit_ground_truth(const GroundTruth& gt, const std::string& out_prefix, const Json& header,
                      std::ostream& out) {
    const std::string traces = serialize_trace_set(gt.traces);
    if (!out_prefix.empty()) {
        write_file(out_prefix + ".traces", traces);
        write_file(out_prefix + ".topology.json", topology_to_json(gt.topology).dump(2) + "\n");
        write_file(out_prefix + ".mapping.json", mapping_to_json(gt.mapping).dump(2) + "\n");
        Json j = header;
        j["traces_file"] = out_prefix + ".traces";
        j["topology_file"] = out_prefix + ".topology.json";
        j["mapping_file"] = out_prefix + ".mapping.json";
        emit(out, j);
        return 0;
    }
    Json j = header;
    j["traces"] = traces;
    j["topology"] = topology_to_json(gt.topology);
    j["mapping"] = mapping_to_json(gt.mapping);
    emit(out, j);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"inferrable-topology toolkit for traceroute-style traces with anonymous routers"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool needs_traces = true) {
        if (needs_traces) cmd->add_option("traces", opt.traces_path, "trace file (- for stdin)")->required();
        cmd->add_option("--alpha", opt.alpha, "routing consistency, \"1\" or \"p/q\"");
        cmd->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };
    auto add_limits = [&](CLI::App* cmd) {
        cmd->add_option("--max-partitions", opt.max_partitions, "candidate partition cap")->check(CLI::PositiveNumber);
        cmd->add_option("--max-stars", opt.max_stars, "enumeration star limit")->check(CLI::PositiveNumber);
        cmd->add_option("--workers", opt.workers, "verification worker threads")->check(CLI::PositiveNumber);
    };

    auto* validate = app.add_subcommand("validate", "parse and summarize a trace file");
    add_common(validate);

    auto* canonic = app.add_subcommand("canonic", "emit the canonic topology");
    add_common(canonic);

    auto* stars = app.add_subcommand("stars", "emit the conflict graph, chromatic data and counting bound");
    add_common(stars);
    stars->add_option("--max-poly", opt.max_poly, "chromatic polynomial vertex limit")->check(CLI::PositiveNumber);

    bool rejected = false;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate all inferrable topologies");
    add_common(enumerate);
    add_limits(enumerate);
    enumerate->add_option("--max-poly", opt.max_poly, "chromatic polynomial vertex limit")->check(CLI::PositiveNumber);
    enumerate->add_flag("--rejected", rejected, "include rejected partitions with witnesses");

    auto* metrics = app.add_subcommand("metrics", "per-topology metrics, ranges and bound audit");
    add_common(metrics);
    add_limits(metrics);

    std::string topology_path, mapping_path;
    auto* check = app.add_subcommand("check", "verify a topology + mapping against traces");
    add_common(check);
    check->add_option("--topology", topology_path, "topology JSON")->required();
    check->add_option("--mapping", mapping_path, "mapping JSON (identity when omitted)");

    auto* fullexp = app.add_subcommand("fullexp", "full-exploration check with missing pairs");
    add_common(fullexp);

    auto* gen = app.add_subcommand("gen", "generate ground truths and trace sets");
    gen->require_subcommand(1);
    std::string out_prefix;
    int gen_s = 3, gen_x = 2, gen_k = 1;
    std::uint64_t gen_seed = 1;
    std::string gen_alpha = "1", graph_path, g0_path;
    std::vector<std::string> pair_args;

    auto* g_star = gen->add_subcommand("star", "anonymous hub with 2s leaves");
    g_star->add_option("--s", gen_s, "number of stars")->required();
    auto* g_diam = gen->add_subcommand("diam-chain", "diameter chain gadget");
    g_diam->add_option("--s", gen_s, "number of stars")->required();
    g_diam->add_option("--x", gen_x, "named interior nodes per trace (even)")->required();
    auto* g_realize = gen->add_subcommand("realize", "trace set realizing a given conflict graph");
    g_realize->add_option("--graph", graph_path, "graph JSON {\"n\":..,\"edges\":[[i,j],..]}")->required();
    g_realize->add_option("--alpha", gen_alpha, "routing consistency");
    auto* g_fediam = gen->add_subcommand("fe-diam", "fully explored diameter gadget");
    g_fediam->add_option("--k", gen_k, "ray length")->required();
    auto* g_fetri = gen->add_subcommand("fe-tri", "fully explored triangle gadget");
    g_fetri->add_option("--s", gen_s, "number of stars")->required();
    auto* g_sample = gen->add_subcommand("sample", "sample consistency-respecting traces from a topology");
    g_sample->add_option("--topology", g0_path, "ground-truth topology JSON")->required();
    g_sample->add_option("--pair", pair_args, "named pair \"u,v\" (repeatable)")->required();
    g_sample->add_option("--alpha", gen_alpha, "routing consistency");
    g_sample->add_option("--seed", gen_seed, "random seed");
    for (auto* sub : {g_star, g_diam, g_realize, g_fediam, g_fetri, g_sample})
        sub->add_option("--out", out_prefix, "write <prefix>.traces/.topology.json/.mapping.json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*validate) return cmd_validate(opt, out);
        if (*canonic) return cmd_canonic(opt, out);
        if (*stars) return cmd_stars(opt, out);
        if (*enumerate) return cmd_enumerate(opt, rejected, out);
        if (*metrics) return cmd_metrics(opt, out);
        if (*check) return cmd_check(opt, topology_path, mapping_path, out);
        if (*fullexp) return cmd_fullexp(opt, out);
        if (*gen) {
            const Alpha alpha = Alpha::parse(gen_alpha);
            GroundTruth gt;
            Json header;
            if (*g_star) {
                gt = gen_star_network(gen_s);
                header["generator"] = "star";
            } else if (*g_diam) {
                gt = gen_diameter_chain(gen_s, gen_x);
                header["generator"] = "diam-chain";
            } else if (*g_realize) {
                const Json gj = load_json(graph_path);
                SmallGraph sg;
                sg.n = gj.at("n").get<int>();
                for (const auto& e : gj.at("edges")) sg.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
                gt = realize_star_graph(sg, alpha);
                header["generator"] = "realize";
            } else if (*g_fediam) {
                gt = gen_fullexp_diameter(gen_k);
                header["generator"] = "fe-diam";
            } else if (*g_fetri) {
                gt = gen_fullexp_triangles(gen_s);
                header["generator"] = "fe-tri";
            } else {
                std::vector<std::pair<std::string, std::string>> pairs;
                for (const auto& p : pair_args) {
                    const auto comma = p.find(',');
                    if (comma == std::string::npos)
                        throw std::invalid_argument("pair must be \"u,v\", got \"" + p + "\"");
                    pairs.emplace_back(p.substr(0, comma), p.substr(comma + 1));
                }
                gt = sample_traces(topology_from_json(load_json(g0_path)), pairs, alpha, gen_seed);
                header["generator"] = "sample";
                header["seed"] = gen_seed;
            }
            header["alpha"] = gt.alpha_used.str();
            return emit_ground_truth(gt, out_prefix, header, out);
        }
    } catch (const limit_error& e) {
        err << "error (" << e.limit_name() << "): " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace tracetopo
