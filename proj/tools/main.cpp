// Command-line front end: load a temporal edge list, couple the layers, run
// supracentrality solves / sweeps / asymptotic limits, and write result tables.
#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "supra/asymptotics.hpp"
#include "supra/edge_list.hpp"
#include "supra/emit.hpp"
#include "supra/errors.hpp"
#include "supra/format.hpp"
#include "supra/supra_operator.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitIo = 3;

struct RunConfig {
    std::string input;
    std::string coupling = "undirected-chain";
    double gamma = 0.001;
    double sigma = 0.85;
    std::string omegas = "100";
    std::string centrality = "pagerank";
    std::string asymptotic = "none";
    std::string dangling = "uniform";
    std::string format = "csv";
    std::string out_dir = ".";
    std::string outputs = "joint,mlc,mnc,cond_node,cond_layer,eigenvalue";
    std::string nodes;
    double tol = 1e-12;
    long max_iter = 1'000'000;
    std::string delimiter = ",";
    std::string duplicates = "sum";
    bool fill_missing_layers = false;
    supra::Index dense_threshold = 2048;
};

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> items;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            items.push_back(item);
        }
    }
    return items;
}

supra::LayerCentralityKind parse_kind(const RunConfig &cfg) {
    supra::LayerCentralityKind kind;
    if (cfg.centrality == "pagerank") {
        kind.family = supra::CentralityFamily::PageRank;
    } else if (cfg.centrality == "eigenvector") {
        kind.family = supra::CentralityFamily::Eigenvector;
    } else if (cfg.centrality == "hub") {
        kind.family = supra::CentralityFamily::Hub;
    } else if (cfg.centrality == "authority") {
        kind.family = supra::CentralityFamily::Authority;
    } else {
        throw supra::ParseError("unknown centrality '" + cfg.centrality + "'");
    }
    kind.sigma = cfg.sigma;
    kind.dense_threshold = cfg.dense_threshold;
    if (cfg.dangling == "uniform") {
        kind.dangling = supra::DanglingPolicy::Uniform;
    } else if (cfg.dangling == "self-loop") {
        kind.dangling = supra::DanglingPolicy::SelfLoop;
    } else if (cfg.dangling == "error") {
        kind.dangling = supra::DanglingPolicy::Error;
    } else {
        throw supra::ParseError("unknown dangling policy '" + cfg.dangling + "'");
    }
    return kind;
}

supra::InterlayerCoupling parse_coupling(const RunConfig &cfg, supra::Index t_count) {
    if (cfg.coupling == "undirected-chain") {
        return supra::undirected_chain(t_count);
    }
    if (cfg.coupling == "directed-chain") {
        return supra::directed_chain_teleport(t_count, cfg.gamma);
    }
    if (cfg.coupling == "reversed-directed-chain") {
        return supra::reverse(supra::directed_chain_teleport(t_count, cfg.gamma));
    }
    if (cfg.coupling.rfind("custom:", 0) == 0) {
        const fs::path path = cfg.coupling.substr(7);
        std::ifstream in(path);
        if (!in) {
            throw supra::ParseError("cannot open coupling file " + path.string());
        }
        supra::InterlayerCoupling c = path.extension() == ".json"
                                          ? supra::coupling_from_json(in)
                                          : supra::coupling_from_csv(in);
        if (c.layer_count() != t_count) {
            throw std::domain_error("custom coupling is " + std::to_string(c.layer_count()) +
                                    "x" + std::to_string(c.layer_count()) + " but the input has " +
                                    std::to_string(t_count) + " layers");
        }
        return c;
    }
    throw supra::ParseError("unknown coupling '" + cfg.coupling + "'");
}

std::vector<supra::OutputKind> parse_outputs(const std::string &list) {
    std::vector<supra::OutputKind> kinds;
    for (const auto &name : split_list(list)) {
        if (name == "joint") {
            kinds.push_back(supra::OutputKind::Joint);
        } else if (name == "mlc") {
            kinds.push_back(supra::OutputKind::Mlc);
        } else if (name == "mnc") {
            kinds.push_back(supra::OutputKind::Mnc);
        } else if (name == "cond_node") {
            kinds.push_back(supra::OutputKind::CondNode);
        } else if (name == "cond_layer") {
            kinds.push_back(supra::OutputKind::CondLayer);
        } else if (name == "eigenvalue") {
            kinds.push_back(supra::OutputKind::Eigenvalue);
        } else {
            throw supra::ParseError("unknown output '" + name + "'");
        }
    }
    if (kinds.empty()) {
        throw supra::ParseError("no outputs requested");
    }
    return kinds;
}

// temp-file-then-rename so readers never observe partial tables
void write_atomic(const fs::path &path, const std::string &content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << content;
    }
    fs::rename(tmp, path);
}

json config_echo(const RunConfig &cfg) {
    json j;
    j["input"] = cfg.input;
    j["coupling"] = cfg.coupling;
    j["gamma"] = cfg.gamma;
    j["sigma"] = cfg.sigma;
    j["omega"] = cfg.omegas;
    j["centrality"] = cfg.centrality;
    j["asymptotic"] = cfg.asymptotic;
    j["dangling"] = cfg.dangling;
    j["format"] = cfg.format;
    j["out"] = cfg.out_dir;
    j["outputs"] = cfg.outputs;
    j["nodes"] = cfg.nodes;
    j["tol"] = cfg.tol;
    j["max_iter"] = cfg.max_iter;
    j["delimiter"] = cfg.delimiter;
    j["duplicates"] = cfg.duplicates;
    j["fill_missing_layers"] = cfg.fill_missing_layers;
    j["dense_threshold"] = cfg.dense_threshold;
    return j;
}

int run(const RunConfig &cfg) {
    const auto t_start = std::chrono::steady_clock::now();

    supra::EdgeListOptions load_opts;
    if (cfg.delimiter.size() != 1) {
        throw supra::ParseError("delimiter must be a single character");
    }
    load_opts.delimiter = cfg.delimiter[0];
    load_opts.duplicates = cfg.duplicates == "error" ? supra::EdgeListOptions::Duplicates::Error
                                                     : supra::EdgeListOptions::Duplicates::Sum;
    load_opts.fill_missing_layers = cfg.fill_missing_layers;

    std::ifstream in(cfg.input);
    if (!in) {
        throw supra::ParseError("cannot open input file " + cfg.input);
    }
    const supra::TemporalNetwork net = supra::load_edge_list(in, load_opts);

    const supra::LayerCentralityKind kind = parse_kind(cfg);
    const supra::InterlayerCoupling coupling = parse_coupling(cfg, net.layer_count());
    const auto output_kinds = parse_outputs(cfg.outputs);
    const bool as_json = cfg.format == "json";
    if (!as_json && cfg.format != "csv") {
        throw supra::ParseError("unknown format '" + cfg.format + "'");
    }

    std::vector<supra::Index> node_subset;
    for (const auto &label : split_list(cfg.nodes)) {
        const auto idx = net.registry().find(label);
        if (!idx) {
            throw supra::ParseError("node '" + label + "' does not appear in the input");
        }
        node_subset.push_back(*idx);
    }

    fs::create_directories(cfg.out_dir);
    const auto emit_tables = [&](const supra::CentralityResult &result, const std::string &tag) {
        for (supra::OutputKind k : output_kinds) {
            const std::string stem = std::string(supra::output_kind_name(k)) + "_" + tag;
            if (as_json) {
                const json j = supra::emit_json(k, result, net.registry().labels(),
                                                net.layer_keys(), node_subset);
                write_atomic(fs::path(cfg.out_dir) / (stem + ".json"), j.dump(2) + "\n");
            } else {
                write_atomic(fs::path(cfg.out_dir) / (stem + ".csv"),
                             supra::emit_csv(k, result, net.registry().labels(), net.layer_keys(),
                                             node_subset));
            }
        }
    };

    json manifest;
    manifest["config"] = config_echo(cfg);

    supra::PowerOptions solver_opts;
    solver_opts.tol = cfg.tol;
    solver_opts.max_iter = cfg.max_iter;

    if (cfg.asymptotic == "weak" || cfg.asymptotic == "strong") {
        const supra::LayerCentralitySet set = supra::build_layer_set(net, kind);
        supra::CentralityResult result;
        json info;
        if (cfg.asymptotic == "weak") {
            const supra::WeakLimit limit = supra::weak_limit(set, coupling, solver_opts);
            result = supra::extract_limit(limit.limit_vector, limit.lambda1, set.node_count,
                                          set.layer_count());
            info["lambda1"] = limit.lambda1;
            json top = json::array();
            for (supra::Index t : limit.top_layers) {
                top.push_back(net.layer_keys()[static_cast<std::size_t>(t)]);
            }
            info["top_layers"] = std::move(top);
        } else {
            const supra::StrongLimit limit = supra::strong_limit(set, coupling, solver_opts);
            result = supra::extract_limit(limit.limit_vector, limit.mu1, set.node_count,
                                          set.layer_count());
            info["mu1"] = limit.mu1;
            info["aggregated_eigenvalue"] = limit.aggregated_eigenvalue;
            info["eigenvalue_matches_mu1"] = limit.eigenvalue_matches_mu1;
            if (!limit.eigenvalue_matches_mu1) {
                std::cerr << "warning: aggregated-matrix eigenvalue "
                          << supra::format_double17(limit.aggregated_eigenvalue)
                          << " differs from coupling eigenvalue "
                          << supra::format_double17(limit.mu1) << "\n";
            }
        }
        emit_tables(result, cfg.asymptotic);
        manifest["asymptotic"] = std::move(info);
    } else if (cfg.asymptotic == "none") {
        std::vector<double> omegas;
        for (const auto &field : split_list(cfg.omegas)) {
            try {
                std::size_t consumed = 0;
                omegas.push_back(std::stod(field, &consumed));
                if (consumed != field.size()) {
                    throw std::invalid_argument(field);
                }
            } catch (const std::exception &) {
                throw supra::ParseError("bad omega value '" + field + "'");
            }
            if (!(omegas.back() >= 0.0)) {
                throw std::domain_error("omega values must be >= 0");
            }
        }
        if (omegas.empty()) {
            throw supra::ParseError("no omega values given");
        }

        const auto results = supra::sweep(net, kind, coupling, omegas, solver_opts);
        json runs = json::array();
        for (std::size_t k = 0; k < results.size(); ++k) {
            emit_tables(results[k], "omega" + std::to_string(k));
            json r;
            r["omega"] = omegas[k];
            r["lambda_max"] = results[k].lambda_max;
            r["iterations"] = results[k].iterations;
            r["residual"] = results[k].residual;
            runs.push_back(std::move(r));
        }
        manifest["runs"] = std::move(runs);
    } else {
        throw supra::ParseError("unknown asymptotic mode '" + cfg.asymptotic + "'");
    }

    const auto t_end = std::chrono::steady_clock::now();
    manifest["wall_ms"] =
        std::chrono::duration<double, std::milli>(t_end - t_start).count();
    write_atomic(fs::path(cfg.out_dir) / "manifest.json", manifest.dump(2) + "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    RunConfig cfg;
    CLI::App app{"Eigenvector-based supracentralities of discrete-time temporal networks"};
    app.add_option("input", cfg.input, "edge-list CSV: layer,src,dst[,weight]")->required();
    app.add_option("--coupling", cfg.coupling,
                   "undirected-chain | directed-chain | reversed-directed-chain | custom:<path>");
    app.add_option("--gamma", cfg.gamma, "layer-teleportation rate for directed chains");
    app.add_option("--sigma", cfg.sigma, "PageRank node-teleportation parameter in (0,1)");
    app.add_option("--omega", cfg.omegas, "comma list of coupling strengths");
    app.add_option("--centrality", cfg.centrality, "pagerank | eigenvector | hub | authority");
    app.add_option("--asymptotic", cfg.asymptotic, "none | weak | strong");
    app.add_option("--dangling", cfg.dangling, "uniform | self-loop | error");
    app.add_option("--format", cfg.format, "csv | json");
    app.add_option("--out", cfg.out_dir, "output directory");
    app.add_option("--outputs", cfg.outputs,
                   "comma list from joint,mlc,mnc,cond_node,cond_layer,eigenvalue");
    app.add_option("--nodes", cfg.nodes, "comma list of node labels to report");
    app.add_option("--tol", cfg.tol, "solver residual tolerance");
    app.add_option("--max-iter", cfg.max_iter, "solver iteration cap");
    app.add_option("--delimiter", cfg.delimiter, "edge-list field delimiter");
    app.add_option("--duplicates", cfg.duplicates, "sum | error");
    app.add_flag("--fill-missing-layers", cfg.fill_missing_layers,
                 "insert empty layers for missing integer keys");
    app.add_option("--dense-threshold", cfg.dense_threshold,
                   "materialize PageRank matrices up to this dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitIo;
    }

    try {
        return run(cfg);
    } catch (const supra::PreconditionError &e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const supra::ConvergenceError &e) {
        std::cerr << "no convergence: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
