// graphcoh: Betti numbers of Lie algebras attached to finite simple graphs.
//
// Subcommands: betti, essential, census, verify. Graphs are given as
// name:K5 / name:S2+K1, g6:<code>, or file:<path>; clique families as a JSON
// list of vertex lists. Reports print as plain tables or JSON.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphcoh/census.hpp"
#include "graphcoh/closed_forms.hpp"
#include "graphcoh/cohomology.hpp"
#include "graphcoh/verify.hpp"

namespace {

using nlohmann::json;
using namespace graphcoh;

constexpr const char* kSchema = "graphcoh.report/1";

struct CommonOpts {
    std::string format = "table";
    bool no_cache = false;
    std::string cache_dir;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    cmd->add_flag("--no-cache", c.no_cache, "Disable the on-disk memo cache");
    cmd->add_option("--cache-dir", c.cache_dir,
                    "Cache directory (default $GRAPHCOH_CACHE_DIR)");
    cmd->add_option("--threads", c.threads, "Worker threads (0 = auto)");
}

DiskCache open_cache(const CommonOpts& c) {
    if (c.no_cache) return DiskCache();
    std::string dir = c.cache_dir;
    if (dir.empty())
        if (const char* env = std::getenv("GRAPHCOH_CACHE_DIR")) dir = env;
    if (dir.empty()) return DiskCache();
    return DiskCache(dir);
}

CliqueFamily load_cliques(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open clique file: " + path);
    json doc = json::parse(in);
    if (!doc.is_array()) throw std::invalid_argument("clique file must hold a JSON array");
    CliqueFamily sigma;
    for (const auto& entry : doc) {
        VertexSet s;
        for (const auto& v : entry) s.insert(v.get<int>());
        sigma.push_back(s);
    }
    sigma.validate_for(g);
    return sigma;
}

json graph_summary(const Graph& g, const std::string& spec) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    json out{{"spec", spec},
             {"vertices", g.vertex_count()},
             {"edges", g.edge_count()},
             {"edge_list", edges}};
    if (g.vertex_count() <= 62) out["graph6"] = encode_graph6(g);
    return out;
}

json engine_summary(const EngineStats& stats, const DiskCache& cache) {
    return json{{"blocks", stats.blocks},
                {"rank_calls", stats.rank_calls},
                {"max_block_cols", stats.max_block_cols},
                {"cache",
                 {{"enabled", cache.enabled()}, {"hits", cache.hits()}, {"misses", cache.misses()}}}};
}

void emit(const json& report, const CommonOpts& opts) {
    if (opts.format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::cout << report["command"].get<std::string>();
    if (report.contains("graph"))
        std::cout << "  " << report["graph"]["spec"].get<std::string>() << "  (n="
                  << report["graph"]["vertices"] << ", |E|=" << report["graph"]["edges"] << ")";
    std::cout << "\n";
    const json& results = report["results"];
    for (auto it = results.begin(); it != results.end(); ++it) {
        std::cout << "  " << it.key() << ": ";
        if (it.value().is_array() && !it.value().empty() && it.value().front().is_object()) {
            std::cout << "\n";
            for (const auto& row : it.value()) std::cout << "    " << row.dump() << "\n";
        } else {
            std::cout << it.value().dump() << "\n";
        }
    }
    std::cout << "  timing_ms: " << report["timing_ms"] << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Cohomology of Lie algebras attached to finite simple graphs"};
    app.require_subcommand(1);

    CommonOpts copts;
    std::string graph_spec, cliques_path, method = "direct", suite;
    int degree = -1, max_order = 5, max_vertices = 5, samples = 50;
    bool all_degrees = false, bigraded = false;
    std::uint64_t seed = 1;

    CLI::App* betti_cmd = app.add_subcommand("betti", "Betti numbers of L(G) or L(G,Sigma)");
    betti_cmd->add_option("--graph", graph_spec, "Graph spec")->required();
    betti_cmd->add_option("--cliques", cliques_path, "JSON list of vertex lists");
    auto* deg_opt = betti_cmd->add_option("--degree", degree, "Single degree");
    betti_cmd->add_flag("--all", all_degrees, "Whole table")->excludes(deg_opt);
    betti_cmd->add_option("--method", method, "direct|monolithic|decomposition|reduced")
        ->check(CLI::IsMember({"direct", "monolithic", "decomposition", "reduced"}))
        ->capture_default_str();
    add_common(betti_cmd, copts);

    CLI::App* ess_cmd = app.add_subcommand("essential", "Essential cohomology of L(G)");
    ess_cmd->add_option("--graph", graph_spec, "Graph spec")->required();
    ess_cmd->add_flag("--bigraded", bigraded, "Include the (degree, r) refinement");
    add_common(ess_cmd, copts);

    CLI::App* census_cmd = app.add_subcommand("census", "Induced-subgraph census");
    census_cmd->add_option("--graph", graph_spec, "Graph spec")->required();
    census_cmd->add_option("--max-order", max_order, "Largest subgraph order")
        ->capture_default_str();
    add_common(census_cmd, copts);

    CLI::App* verify_cmd = app.add_subcommand("verify", "Cross-validation suites");
    verify_cmd->add_option("--suite", suite, "b2|b3|star|ggi|duality|decomposition|figure3")
        ->required()
        ->check(CLI::IsMember({"b2", "b3", "star", "ggi", "duality", "decomposition", "figure3"}));
    verify_cmd->add_option("--max-vertices", max_vertices, "Class sweep bound")
        ->capture_default_str();
    verify_cmd->add_option("--seed", seed, "RNG seed for sampled checks")->capture_default_str();
    verify_cmd->add_option("--samples", samples, "Sample count for seeded suites")
        ->capture_default_str();
    add_common(verify_cmd, copts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help text or the usage error
        return code == 0 ? 0 : 2;
    }

    DiskCache cache = open_cache(copts);
    EngineOptions engine;
    engine.threads = copts.threads;
    engine.cache = &cache;
    EngineStats stats;
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&t0] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    json report{{"schema", kSchema}};

    if (*betti_cmd) {
        if (!all_degrees && degree < 0)
            throw CLI::ValidationError("betti", "pass --degree K or --all");
        Graph g = parse_graph_spec(graph_spec);
        CliqueFamily sigma;
        if (!cliques_path.empty()) sigma = load_cliques(cliques_path, g);
        if (method == "reduced" && cliques_path.empty())
            throw CLI::ValidationError("betti", "--method reduced requires --cliques");
        if (method == "decomposition" && !sigma.empty())
            throw CLI::ValidationError("betti", "--method decomposition requires Sigma = {}");
        if (method == "monolithic") engine.method = BettiMethod::Monolithic;

        report["command"] = "betti";
        report["graph"] = graph_summary(g, graph_spec);
        report["method"] = method;
        json cl = json::array();
        for (const auto& c : sigma.cliques()) cl.push_back(c.vertices());
        report["cliques"] = cl;

        json results;
        if (all_degrees) {
            BettiTable bt;
            if (method == "reduced") {
                bt = ggi_betti_reduced(g, sigma, engine, &stats);
            } else if (method == "decomposition") {
                bt.dims.resize(g.vertex_count() + g.edge_count() + 1);
                for (int d = 0; d <= bt.top_degree(); ++d)
                    bt.dims[d] = betti_via_decomposition(g, d, engine, &stats);
            } else {
                bt = betti(g, sigma, engine, &stats);
            }
            results["betti"] = bt.dims;
            results["total"] = bt.total();
            results["euler"] = bt.euler();
        } else {
            std::int64_t value;
            if (method == "reduced")
                value = ggi_betti_reduced(g, sigma, engine, &stats).at(degree);
            else if (method == "decomposition")
                value = betti_via_decomposition(g, degree, engine, &stats);
            else
                value = betti_degree(g, sigma, degree, engine, &stats);
            results["degree"] = degree;
            results["betti"] = value;
        }
        report["results"] = results;
    } else if (*ess_cmd) {
        Graph g = parse_graph_spec(graph_spec);
        report["command"] = "essential";
        report["graph"] = graph_summary(g, graph_spec);
        EssentialTable ess = essential_betti(g, engine, &stats);
        json results{{"essential", ess.dims}};
        if (bigraded) {
            json rows = json::array();
            for (const auto& [key, value] : ess.bigraded)
                rows.push_back({{"degree", key.first}, {"r", key.second}, {"dim", value}});
            results["bigraded"] = rows;
        }
        report["results"] = results;
    } else if (*census_cmd) {
        Graph g = parse_graph_spec(graph_spec);
        report["command"] = "census";
        report["graph"] = graph_summary(g, graph_spec);
        Census c = census(g, max_order);
        report["results"] = json{{"max_order", max_order}, {"classes", census_report(c)}};
    } else if (*verify_cmd) {
        VerifyOptions vopts;
        vopts.max_vertices = max_vertices;
        vopts.seed = seed;
        vopts.samples = samples;
        vopts.engine = engine;
        SuiteResult result = run_suite(suite, vopts);
        report["command"] = "verify";
        report["results"] = json::object();
        report["results"]["suite"] = suite;
        report["results"]["seed"] = seed;
        report["results"]["passed"] = result.passed();
        json rows = json::array();
        for (const auto& c : result.checks)
            rows.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        report["results"]["checks"] = rows;
        report["timing_ms"] = elapsed_ms();
        report["engine"] = engine_summary(stats, cache);
        emit(report, copts);
        return result.passed() ? 0 : 1;
    }

    report["timing_ms"] = elapsed_ms();
    report["engine"] = engine_summary(stats, cache);
    emit(report, copts);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const graphcoh::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
