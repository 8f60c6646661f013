// Command-line surface for the nonrepetitive colouring toolkit.
// Every run prints exactly one JSON document on stdout; diagnostics go to
// stderr. Exit codes: 0 success / property holds / witness found,
// 1 property fails / no witness, 2 invalid input, 3 budget exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nonrep/containment.hpp"
#include "nonrep/decomposition.hpp"
#include "nonrep/graph.hpp"
#include "nonrep/json_io.hpp"
#include "nonrep/search.hpp"
#include "nonrep/strategies.hpp"
#include "nonrep/transform.hpp"
#include "nonrep/verifier.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nonrep::Graph load_graph(const std::string& path) { return nonrep::parse_graph_any(slurp(path)); }

nonrep::json load_json(const std::string& path) { return nonrep::json::parse(slurp(path)); }

void emit(nonrep::json j, const std::string& kind) {
    j["kind"] = kind;
    j["version"] = kVersion;
    std::cout << j.dump(2) << "\n";
}

int status_exit(nonrep::SearchStatus s) {
    switch (s) {
        case nonrep::SearchStatus::found: return 0;
        case nonrep::SearchStatus::exhausted: return 1;
        default: return 3;
    }
}

int status_exit(nonrep::StrategyStatus s) {
    return s == nonrep::StrategyStatus::found ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace nonrep;

    CLI::App app{"nonrepetitive graph colouring toolkit"};
    app.require_subcommand(1);

    std::string graph_path, pattern_path, decomp_path, colouring_path, torsos_path;
    std::uint64_t seed = 0;
    std::int64_t cap = 1'000'000, budget = kDefaultBudget;
    int t_param = 1, d_param = 0, palette = 1, n_param = 1, node = 0;
    int palette_factor = 4;
    std::optional<int> t_max, root, upper_bound;
    bool strong = false, topological = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "random seed (default 0)");
        cmd->add_option("--cap", cap, "max resampling rounds");
        cmd->add_option("--budget", budget, "search-tree node budget");
        cmd->add_option("--t-max", t_max, "bounded verification half-length");
        cmd->add_option("--palette-factor", palette_factor, "multiplier on the degree-square term");
    };
    auto make_opts = [&]() {
        StrategyOptions o;
        o.seed = seed;
        o.resample_cap = cap;
        o.budget = budget;
        o.t_max = t_max;
        o.palette_factor = palette_factor;
        return o;
    };

    auto* verify = app.add_subcommand("verify", "check a colouring for repetitively coloured paths");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("colouring", colouring_path)->required();
    verify->add_option("--t-max", t_max, "bounded mode half-length");

    auto* pi = app.add_subcommand("pi", "exact nonrepetitive chromatic number");
    pi->add_option("graph", graph_path)->required();
    pi->add_option("--budget", budget);
    pi->add_option("--k", upper_bound, "upper bound on the palette");

    auto* cpath = app.add_subcommand("colour-path", "nonrepetitive 3-colouring of a path");
    cpath->add_option("n", n_param, "path order")->required();

    auto* cdeg = app.add_subcommand("colour-degree", "bounded-degree colouring scheme");
    cdeg->add_option("graph", graph_path)->required();
    cdeg->add_option("--d", d_param, "degree threshold")->required();
    add_common(cdeg);

    auto* cres = app.add_subcommand("colour-resample", "randomized resampling colourer");
    cres->add_option("graph", graph_path)->required();
    cres->add_option("--palette", palette, "palette size")->required();
    add_common(cres);

    auto* compose = app.add_subcommand("compose", "compose verified torso colourings");
    compose->add_option("graph", graph_path)->required();
    compose->add_option("decomposition", decomp_path)->required();
    compose->add_option("torsos", torsos_path, "JSON with per-node torso colourings")->required();
    add_common(compose);

    auto* adhesion = app.add_subcommand("adhesion", "adhesion of a decomposition or T-partition");
    adhesion->add_option("graph", graph_path)->required();
    adhesion->add_option("decomposition", decomp_path)->required();

    auto* torso = app.add_subcommand("torso", "torso of a node");
    torso->add_option("graph", graph_path)->required();
    torso->add_option("decomposition", decomp_path)->required();
    torso->add_option("--node", node, "tree node")->required();

    auto* validate = app.add_subcommand("validate", "validate a decomposition or T-partition");
    validate->add_option("graph", graph_path)->required();
    validate->add_option("decomposition", decomp_path)->required();

    auto* transform = app.add_subcommand("transform", "T-partition to tree decomposition");
    transform->add_option("graph", graph_path)->required();
    transform->add_option("partition", decomp_path)->required();
    transform->add_option("--t", t_param, "structure parameter");
    transform->add_option("--root", root, "root node");

    auto* pipeline = app.add_subcommand("pipeline", "end-to-end colouring from a T-partition");
    pipeline->add_option("graph", graph_path)->required();
    pipeline->add_option("partition", decomp_path)->required();
    pipeline->add_option("--t", t_param, "structure parameter")->required();
    add_common(pipeline);

    auto* contains = app.add_subcommand("contains", "immersion / topological-minor oracle");
    contains->add_option("graph", graph_path)->required();
    contains->add_option("pattern", pattern_path)->required();
    contains->add_flag("--strong", strong, "strong immersion");
    contains->add_flag("--topological", topological, "topological minor");
    contains->add_option("--budget", budget);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            Graph g = load_graph(graph_path);
            Colouring col = colouring_from_json(load_json(colouring_path));
            auto w = find_repetition(g, col, t_max);
            emit(colouring_to_json(col, t_max ? "bounded" : "exact", t_max, w),
                 "colouring-certificate");
            return w ? 1 : 0;
        }
        if (*pi) {
            Graph g = load_graph(graph_path);
            auto r = exact_pi(g, upper_bound, budget);
            json j = {{"pi", r.determined ? json(r.pi) : json(nullptr)},
                      {"determined", r.determined},
                      {"nodes", r.nodes},
                      {"colouring", r.determined ? colouring_to_json(r.colouring)
                                                 : json(nullptr)}};
            emit(j, "exact-pi");
            return r.determined ? 0 : 3;
        }
        if (*cpath) {
            auto col = colour_path(n_param);
            emit(colouring_to_json(col), "colouring-certificate");
            return 0;
        }
        if (*cdeg) {
            Graph g = load_graph(graph_path);
            auto r = colour_bounded_degree(g, d_param, make_opts());
            json j = {{"status", r.status == StrategyStatus::found ? "found" : "budget-exhausted"},
                      {"high_degree_vertices", r.high_degree_vertices},
                      {"sub_palette", r.sub_palette},
                      {"used_fallback", r.used_fallback},
                      {"colouring", r.status == StrategyStatus::found
                                        ? colouring_to_json(r.colouring)
                                        : json(nullptr)}};
            emit(j, "bounded-degree-colouring");
            return status_exit(r.status);
        }
        if (*cres) {
            Graph g = load_graph(graph_path);
            auto r = resample_colouring(g, palette, make_opts());
            json j = {{"status", r.status == StrategyStatus::found ? "found" : "cap-exhausted"},
                      {"rounds", r.rounds},
                      {"colouring", r.status == StrategyStatus::found
                                        ? colouring_to_json(r.colouring, t_max ? "bounded" : "exact",
                                                            t_max)
                                        : json(nullptr)}};
            emit(j, "resample-colouring");
            return status_exit(r.status);
        }
        if (*compose) {
            Graph g = load_graph(graph_path);
            auto file = bag_family_from_json(load_json(decomp_path));
            if (file.kind != "tree-decomposition") {
                std::cerr << "compose expects a tree-decomposition file\n";
                return 2;
            }
            std::map<int, Colouring> torso_cols;
            for (const auto& [key, val] : load_json(torsos_path).at("torso_colourings").items())
                torso_cols[std::stoi(key)] = colouring_from_json(val);
            auto input = CompositionInput::make(g, file.family, std::move(torso_cols));
            auto r = compose_colourings(g, input, make_opts());
            json j = {{"status", r.status == StrategyStatus::found ? "found" : "budget-exhausted"},
                      {"k", input.k},
                      {"c", input.c},
                      {"used_fallback", r.used_fallback},
                      {"colouring", r.status == StrategyStatus::found
                                        ? colouring_to_json(r.colouring)
                                        : json(nullptr)}};
            emit(j, "composed-colouring");
            return status_exit(r.status);
        }
        if (*adhesion) {
            Graph g = load_graph(graph_path);
            auto file = bag_family_from_json(load_json(decomp_path));
            int a = file.kind == "t-partition" ? adhesion_tp(g, file.family)
                                               : adhesion_td(file.family);
            emit({{"adhesion", a}, {"decomposition_kind", file.kind}}, "adhesion");
            return 0;
        }
        if (*torso) {
            Graph g = load_graph(graph_path);
            auto file = bag_family_from_json(load_json(decomp_path));
            Torso t = file.kind == "t-partition" ? torso_tp(g, file.family, node)
                                                 : torso_td(g, file.family, node);
            emit(torso_to_json(t), "torso");
            return 0;
        }
        if (*validate) {
            Graph g = load_graph(graph_path);
            auto file = bag_family_from_json(load_json(decomp_path));
            auto vs = file.kind == "t-partition" ? validate_tpartition(g, file.family)
                                                 : validate_tree_decomposition(g, file.family);
            json j = {{"valid", vs.empty()}, {"violations", violations_to_json(vs)}};
            if (file.kind != "t-partition") j["width"] = width(file.family);
            emit(j, "validation");
            return vs.empty() ? 0 : 1;
        }
        if (*transform) {
            Graph g = load_graph(graph_path);
            auto file = bag_family_from_json(load_json(decomp_path));
            if (file.kind != "t-partition") {
                std::cerr << "transform expects a t-partition file\n";
                return 2;
            }
            auto td = build_tree_decomposition(g, file.family, root);
            auto report = check_transform_guarantees(g, file.family, td,
                                                     transform->count("--t") ? std::optional<int>(t_param)
                                                                             : std::nullopt);
            json j = {{"decomposition", bag_family_to_json(td, "tree-decomposition")},
                      {"report", transform_report_to_json(report)}};
            emit(j, "transform");
            return 0;
        }
        if (*pipeline) {
            Graph g = load_graph(graph_path);
            auto file = bag_family_from_json(load_json(decomp_path));
            if (file.kind != "t-partition") {
                std::cerr << "pipeline expects a t-partition file\n";
                return 2;
            }
            auto r = immersion_pipeline(g, file.family, t_param, make_opts());
            json torsos = json::object();
            for (const auto& [x, tr] : r.torso_results)
                torsos[std::to_string(x)] = {{"palette_size", tr.colouring.palette_size},
                                             {"high_degree_vertices", tr.high_degree_vertices},
                                             {"used_fallback", tr.used_fallback}};
            json j = {{"status", r.status == StrategyStatus::found ? "found" : "budget-exhausted"},
                      {"report", transform_report_to_json(r.report)},
                      {"decomposition", bag_family_to_json(r.td, "tree-decomposition")},
                      {"torso_colourings", torsos},
                      {"c", r.c},
                      {"k", r.k},
                      {"d", r.d},
                      {"palette_bound", r.palette_bound},
                      {"bound_claimed", r.report.hypothesis_met},
                      {"used_fallback", r.used_fallback},
                      {"colouring", r.status == StrategyStatus::found
                                        ? colouring_to_json(r.colouring)
                                        : json(nullptr)}};
            emit(j, "pipeline-certificate");
            return status_exit(r.status);
        }
        if (*contains) {
            Graph g = load_graph(graph_path);
            Graph h = load_graph(pattern_path);
            ContainmentResult r = topological ? find_topological_minor(g, h, budget)
                                              : find_immersion(g, h, strong, budget);
            json j = {{"status", r.status == SearchStatus::found      ? "found"
                                 : r.status == SearchStatus::exhausted ? "none"
                                                                       : "budget-exhausted"},
                      {"nodes", r.nodes},
                      {"witness",
                       r.witness ? containment_witness_to_json(*r.witness) : json(nullptr)}};
            emit(j, "containment");
            return status_exit(r.status);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
