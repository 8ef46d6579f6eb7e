// Command-line front end: graph generation, equilibrium solving,
// interventions, query-based estimation, SBM fitting, experiment sweeps and
// plot-script generation.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "netgame/concentration.hpp"
#include "netgame/edge_list.hpp"
#include "netgame/estimation.hpp"
#include "netgame/experiment.hpp"
#include "netgame/game.hpp"
#include "netgame/girvan_newman.hpp"
#include "netgame/graph.hpp"
#include "netgame/interventions.hpp"
#include "netgame/random_models.hpp"
#include "netgame/spectral.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace netgame;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;

struct OutputTarget {
    std::string path = "-";

    std::ostream& open(std::ofstream& file) const {
        if (path == "-") return std::cout;
        file.open(path);
        if (!file) throw DataError("cannot open " + path + " for writing");
        return file;
    }
};

std::vector<double> split_csv_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

struct ModelFlags {
    std::string family;
    int n = 0;
    double p = 0.0;
    double sigma = 0.0;
    double d_max = 0.0;
    double d_min = 0.0;
    std::vector<double> weights;
    std::vector<int> sbm_sizes;
    std::vector<std::string> sbm_rows;
    bool self_loops = false;

    GraphModel build() const {
        if (family == "gnp") return GraphModel(GNPSpec{n, p}, self_loops);
        if (family == "gw") {
            Eigen::VectorXd w(static_cast<Eigen::Index>(weights.size()));
            for (std::size_t i = 0; i < weights.size(); ++i) w[static_cast<Eigen::Index>(i)] = weights[i];
            return GraphModel(GWSpec{w}, self_loops);
        }
        if (family == "powerlaw") {
            const PowerLawFit fit = power_law_from_degrees(n, sigma, d_max, d_min);
            return GraphModel(PowerLawSpec{n, sigma, fit.c, fit.i0}, self_loops);
        }
        if (family == "sbm") {
            const auto m = static_cast<Eigen::Index>(sbm_rows.size());
            Eigen::MatrixXd probs(m, m);
            for (Eigen::Index i = 0; i < m; ++i) {
                const auto row = split_csv_doubles(sbm_rows[i]);
                if (static_cast<Eigen::Index>(row.size()) != m)
                    throw ConfigError("--sbm-prow: need one row per group, one entry per group");
                for (Eigen::Index j = 0; j < m; ++j) probs(i, j) = row[j];
            }
            return GraphModel(SBMSpec{sbm_sizes, probs}, self_loops);
        }
        throw ConfigError("unknown model family '" + family + "'");
    }
};

struct GameFlags {
    std::string edges;
    bool one_based = false;
    bool self_loops = false;
    double b_value = 1.0;
    std::optional<double> beta;
    std::optional<double> radius;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--edges", edges, "edge list file")->required();
        cmd.add_flag("--one-based", one_based, "edge list uses 1-based labels");
        cmd.add_flag("--self-loops", self_loops, "permit self-loop lines");
        cmd.add_option("--b", b_value, "constant standalone value (default 1)");
        auto* beta_opt = cmd.add_option("--beta", beta, "complementarity strength");
        auto* radius_opt = cmd.add_option("--radius", radius, "target spectral radius of beta*A in [0,1)");
        beta_opt->excludes(radius_opt);
    }

    std::pair<Graph, GameInstance> load() const {
        const EdgeListResult loaded =
            load_edge_list(edges, one_based ? Indexing::one_based : Indexing::zero_based, self_loops);
        const Eigen::MatrixXd adjacency = loaded.graph.adjacency_matrix();
        double beta_value = 0.0;
        if (beta) {
            beta_value = *beta;
        } else if (radius) {
            if (*radius < 0.0 || *radius >= 1.0) throw ConfigError("--radius must lie in [0,1)");
            const double lambda1 = first_eigenvector(adjacency).eigenvalue;
            beta_value = lambda1 > 0.0 ? *radius / lambda1 : 0.0;
        } else {
            throw ConfigError("one of --beta / --radius is required");
        }
        GameInstance game(adjacency, beta_value,
                          Eigen::VectorXd::Constant(loaded.graph.size(), b_value));
        return {loaded.graph, std::move(game)};
    }
};

std::vector<int> read_labels_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open group file " + path);
    std::vector<int> labels;
    int value = 0;
    while (in >> value) labels.push_back(value);
    if (static_cast<int>(labels.size()) != n)
        throw DataError("group file " + path + ": expected one label per vertex");
    return labels;
}

int run_generate(const ModelFlags& model, std::uint64_t seed, const std::string& out_path, bool one_based) {
    const GraphModel built = model.build();
    const Graph g = sample(built, seed);
    save_edge_list(g, out_path, one_based ? Indexing::one_based : Indexing::zero_based);
    std::cerr << "wrote " << g.size() << " vertices, " << g.edge_count() << " edges to " << out_path << "\n";
    return kExitOk;
}

int run_solve(const GameFlags& flags, const OutputTarget& out_target) {
    const auto [graph, game] = flags.load();
    const EquilibriumResult eq = equilibrium(game);
    std::ofstream file;
    std::ostream& out = out_target.open(file);
    json summary;
    summary["n"] = graph.size();
    summary["beta"] = game.beta();
    summary["welfare"] = eq.welfare;
    summary["residual"] = eq.residual;
    summary["feasible"] = eq.feasible;
    out << summary.dump() << '\n';
    for (int i = 0; i < graph.size(); ++i) {
        json row;
        row["vertex"] = i;
        row["action"] = eq.actions[i];
        out << row.dump() << '\n';
    }
    return kExitOk;
}

int run_intervene(const GameFlags& flags, const std::string& strategy_name_arg, double budget, bool budget_scaled,
                  const std::string& groups_path, const OutputTarget& out_target) {
    const auto [graph, game] = flags.load();
    const auto strategy = strategy_from_name(strategy_name_arg);
    if (!strategy) throw ConfigError("unknown strategy '" + strategy_name_arg + "'");
    const double total_budget = budget_scaled ? budget * graph.size() : budget;

    HeuristicInputs inputs;
    if (*strategy == Strategy::sbm_reconstructed) {
        inputs.group_labels = groups_path.empty() ? girvan_newman_groups(graph)
                                                  : read_labels_file(groups_path, graph.size());
    }
    if (*strategy == Strategy::expected_degree || *strategy == Strategy::first_eigenvector_expected)
        throw ConfigError("expected-matrix strategies need a generative model; not available from an edge list");

    const Intervention optimal = optimal_intervention(game, total_budget);
    Intervention chosen = *strategy == Strategy::optimal
                              ? optimal
                              : heuristic_suite(game, {*strategy}, total_budget, inputs).front();

    const double baseline = welfare_after(game, Eigen::VectorXd::Zero(graph.size()));
    const RatioResult ratio = competitive_ratio(game, chosen, optimal);

    json doc;
    doc["strategy"] = strategy_name(chosen.strategy);
    doc["budget"] = total_budget;
    doc["beta"] = game.beta();
    doc["welfare"] = ratio.welfare;
    doc["baseline_welfare"] = baseline;
    doc["optimal_welfare"] = ratio.optimal_welfare;
    doc["competitive_ratio"] = ratio.ratio;
    if (chosen.y.norm() > 0.0) doc["cosine_to_optimal"] = cosine_similarity(chosen.y, optimal.y);
    doc["y"] = std::vector<double>(chosen.y.data(), chosen.y.data() + chosen.y.size());
    std::ofstream file;
    out_target.open(file) << doc.dump(2) << '\n';
    return kExitOk;
}

int run_estimate(const std::string& edges, bool one_based, bool self_loops, const std::string& method, double eps,
                 double delta, int samples, std::uint64_t seed, const std::string& groups_path, bool as_csv,
                 const OutputTarget& out_target) {
    const EdgeListResult loaded =
        load_edge_list(edges, one_based ? Indexing::one_based : Indexing::zero_based, self_loops);
    const Graph& g = loaded.graph;

    EstimationResult result;
    double error_metric = 0.0;

    if (method == "degrees") {
        EdgeOracle oracle(g);
        result = estimate_degrees_edge_queries(oracle, eps, delta, seed);
        const auto true_deg = degree_vector(g);
        for (int i = 0; i < g.size(); ++i)
            error_metric = std::max(error_metric, std::abs(result.vector_estimate[i] - true_deg[i]));
    } else if (method == "walk") {
        NeighborOracle oracle(g, seed);
        const auto component = largest_connected_component(g);
        if (component.vertices.empty()) throw DataError("graph has no vertices");
        const int start = component.vertices.front();
        result = random_walk_sampler(oracle, start, samples, mixing_steps_default(g.size(), eps));
        result.epsilon = eps;
        const auto deg = degree_vector(g);
        double total = 0.0;
        for (int d : deg) total += d;
        for (int i = 0; i < g.size(); ++i)
            error_metric += std::abs(result.vector_estimate[i] - (total > 0.0 ? deg[i] / total : 0.0));
    } else if (method == "sbm-edge" || method == "sbm-neighbor") {
        const std::vector<int> labels =
            groups_path.empty() ? girvan_newman_groups(g) : read_labels_file(groups_path, g.size());
        const BlockEstimate truth = block_probabilities(g, labels);
        if (method == "sbm-edge") {
            EdgeOracle oracle(g);
            result = estimate_sbm_edge_queries(oracle, labels, eps, delta, seed);
            error_metric = (result.matrix_estimate - truth.probabilities).cwiseAbs().maxCoeff();
        } else {
            NeighborOracle oracle(g, seed);
            result = estimate_sbm_neighbor_queries(oracle, labels, samples, seed + 1);
            // scale-free comparison: cosine distance between vectorized matrices
            Eigen::VectorXd a = Eigen::Map<const Eigen::VectorXd>(result.matrix_estimate.data(),
                                                                  result.matrix_estimate.size());
            Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(truth.probabilities.data(),
                                                                  truth.probabilities.size());
            error_metric = (a.norm() > 0 && b.norm() > 0) ? 1.0 - cosine_similarity(a, b) : 1.0;
        }
    } else {
        throw ConfigError("unknown estimation method '" + method + "'");
    }

    std::ofstream file;
    std::ostream& out = out_target.open(file);
    if (as_csv) {
        out << "method,queries,error_metric,epsilon,delta\n";
        out << result.method << ',' << result.queries_used << ',' << format_double(error_metric) << ','
            << format_double(result.epsilon) << ',' << format_double(result.delta) << '\n';
    } else {
        json doc;
        doc["method"] = result.method;
        doc["queries"] = result.queries_used;
        doc["error_metric"] = error_metric;
        doc["epsilon"] = result.epsilon;
        doc["delta"] = result.delta;
        if (result.vector_estimate.size() > 0)
            doc["estimate"] =
                std::vector<double>(result.vector_estimate.data(),
                                    result.vector_estimate.data() + result.vector_estimate.size());
        if (result.matrix_estimate.size() > 0) {
            json rows = json::array();
            for (Eigen::Index i = 0; i < result.matrix_estimate.rows(); ++i) {
                json row = json::array();
                for (Eigen::Index j = 0; j < result.matrix_estimate.cols(); ++j)
                    row.push_back(result.matrix_estimate(i, j));
                rows.push_back(row);
            }
            doc["estimate_matrix"] = rows;
        }
        if (!result.notes.empty()) doc["notes"] = result.notes;
        out << doc.dump(2) << '\n';
    }
    return kExitOk;
}

int run_fit_sbm(const std::string& edges, bool one_based, bool self_loops, int min_big, int min_size,
                int max_clusters, const OutputTarget& out_target) {
    const EdgeListResult loaded =
        load_edge_list(edges, one_based ? Indexing::one_based : Indexing::zero_based, self_loops);
    GirvanNewmanOptions options;
    options.min_big_clusters = min_big;
    options.min_cluster_size = min_size;
    options.max_clusters = max_clusters;
    const std::vector<int> labels = girvan_newman_groups(loaded.graph, options);
    const BlockEstimate blocks = block_probabilities(loaded.graph, labels);

    json doc;
    doc["n"] = loaded.graph.size();
    doc["groups"] = blocks.probabilities.rows();
    doc["labels"] = labels;
    json rows = json::array();
    for (Eigen::Index i = 0; i < blocks.probabilities.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < blocks.probabilities.cols(); ++j) row.push_back(blocks.probabilities(i, j));
        rows.push_back(row);
    }
    doc["block_matrix"] = rows;
    if (!blocks.flags.empty()) doc["flags"] = blocks.flags;
    std::ofstream file;
    out_target.open(file) << doc.dump(2) << '\n';
    return kExitOk;
}

int run_check(const ModelFlags& model, double eps, double delta, bool as_csv, const OutputTarget& out_target) {
    const GraphModel built = model.build();
    const ExpectedMatrix bar = expected_matrix(built);

    std::vector<ConcentrationReport> reports;
    if (model.family == "gnp") reports.push_back(check_gnp(model.n, model.p, eps, delta));
    if (model.family == "gw")
        reports.push_back(check_gw(std::get<GWSpec>(built.spec()).weights, eps, delta));
    if (model.family == "powerlaw") {
        const auto& pl = std::get<PowerLawSpec>(built.spec());
        reports.push_back(check_gw(power_law_weights(pl.n, pl.sigma, pl.c, pl.i0), eps, delta));
    }
    reports.push_back(check_general(bar, eps, delta));

    const double d_max = max_expected_degree(bar);
    const double lambda1 = first_eigenvector(bar.entries()).eigenvalue;
    const double deviation = chung_radcliffe_deviation(d_max, bar.size(), delta);
    const double beta_max = lambda1 > 0.0 ? spectral_radius_threshold(lambda1, d_max, bar.size(), delta) : 0.0;

    std::ofstream file;
    std::ostream& out = out_target.open(file);
    if (as_csv) {
        out << "model,condition,required,actual,satisfied,note\n";
        for (const auto& report : reports)
            for (const auto& c : report.conditions)
                out << report.model << ",\"" << c.name << "\"," << format_double(c.required) << ','
                    << format_double(c.actual) << ',' << (c.satisfied ? "true" : "false") << ",\"" << c.note
                    << "\"\n";
    } else {
        for (const auto& report : reports) {
            for (const auto& c : report.conditions) {
                json row;
                row["model"] = report.model;
                row["condition"] = c.name;
                row["required"] = c.required;
                row["actual"] = c.actual;
                row["satisfied"] = c.satisfied;
                if (!c.note.empty()) row["note"] = c.note;
                out << row.dump() << '\n';
            }
            json summary;
            summary["model"] = report.model;
            summary["epsilon"] = report.epsilon;
            summary["delta"] = report.delta;
            summary["satisfied"] = report.satisfied();
            out << summary.dump() << '\n';
        }
        json extras;
        extras["deviation_bound"] = deviation;
        extras["deviation_bound_applicable"] = chung_radcliffe_applicable(d_max, bar.size(), delta);
        if (beta_max > 0.0) extras["beta_feasibility_threshold"] = beta_max;
        out << extras.dump() << '\n';
    }
    return kExitOk;
}

int run_experiment_cmd(const std::string& config_path, const std::string& out_path, int workers_override) {
    ExperimentConfig config = load_experiment_config(config_path);
    if (workers_override > 0) config.workers = workers_override;
    const std::vector<ResultRow> rows = run_experiment(config);
    if (out_path == "-") {
        write_result_csv(rows, std::cout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw DataError("cannot open " + out_path + " for writing");
        write_result_csv(rows, out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Network-game intervention toolkit"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "sample a random graph into an edge list");
    ModelFlags model;
    std::uint64_t gen_seed = 1;
    std::string gen_out = "graph.txt";
    bool gen_one_based = false;
    generate->add_option("--model", model.family, "gnp | gw | powerlaw | sbm")->required();
    generate->add_option("--n", model.n, "vertex count");
    generate->add_option("--p", model.p, "edge probability (gnp)");
    generate->add_option("--sigma", model.sigma, "power-law exponent");
    generate->add_option("--d-max", model.d_max, "largest expected degree (powerlaw)");
    generate->add_option("--d-min", model.d_min, "smallest expected degree (powerlaw)");
    generate->add_option("--w", model.weights, "expected degrees, descending (gw)");
    generate->add_option("--sbm-sizes", model.sbm_sizes, "group sizes (sbm)");
    generate->add_option("--sbm-prow", model.sbm_rows, "one comma-separated probability row per group (sbm)");
    generate->add_flag("--self-loops", model.self_loops, "allow self-loops");
    generate->add_option("--seed", gen_seed, "sampling seed");
    generate->add_option("--out", gen_out, "output edge list path");
    generate->add_flag("--one-based", gen_one_based, "write 1-based labels");

    // solve
    auto* solve = app.add_subcommand("solve", "equilibrium actions and welfare as JSON lines");
    GameFlags solve_flags;
    solve_flags.add_to(*solve);
    OutputTarget solve_out;
    solve->add_option("--out", solve_out.path, "output path or - for stdout");

    // intervene
    auto* intervene = app.add_subcommand("intervene", "build one intervention and report its welfare");
    GameFlags intervene_flags;
    intervene_flags.add_to(*intervene);
    std::string intervene_strategy = "uniform";
    double intervene_budget = 0.0;
    bool intervene_scaled = false;
    std::string intervene_groups;
    OutputTarget intervene_out;
    intervene->add_option("--strategy", intervene_strategy,
                          "baseline | uniform | realized_degree | first_eigenvector_realized | "
                          "sbm_reconstructed | optimal")
        ->required();
    intervene->add_option("--budget", intervene_budget, "intervention budget C")->required();
    intervene->add_flag("--budget-scaled", intervene_scaled, "interpret budget as C/n");
    intervene->add_option("--groups-file", intervene_groups, "one group label per vertex (sbm_reconstructed)");
    intervene->add_option("--out", intervene_out.path, "output path or - for stdout");

    // estimate
    auto* estimate = app.add_subcommand("estimate", "query-based estimation against a hidden graph");
    std::string est_edges;
    bool est_one_based = false;
    bool est_self_loops = false;
    std::string est_method;
    double est_eps = 0.1;
    double est_delta = 0.05;
    int est_samples = 10000;
    std::uint64_t est_seed = 1;
    std::string est_groups;
    bool est_csv = false;
    OutputTarget est_out;
    estimate->add_option("--edges", est_edges, "edge list file")->required();
    estimate->add_flag("--one-based", est_one_based, "edge list uses 1-based labels");
    estimate->add_flag("--self-loops", est_self_loops, "permit self-loop lines");
    estimate->add_option("--method", est_method, "degrees | walk | sbm-edge | sbm-neighbor")->required();
    estimate->add_option("--eps", est_eps, "accuracy parameter");
    estimate->add_option("--delta", est_delta, "failure probability");
    estimate->add_option("--samples", est_samples, "samples (walk, sbm-neighbor)");
    estimate->add_option("--seed", est_seed, "query randomness seed");
    estimate->add_option("--groups-file", est_groups, "one group label per vertex");
    estimate->add_flag("--csv", est_csv, "emit the CSV row (method,queries,error_metric,epsilon,delta)");
    estimate->add_option("--out", est_out.path, "output path or - for stdout");

    // fit-sbm
    auto* fit = app.add_subcommand("fit-sbm", "Girvan-Newman groups plus block edge frequencies");
    std::string fit_edges;
    bool fit_one_based = false;
    bool fit_self_loops = false;
    int fit_min_big = 10;
    int fit_min_size = 5;
    int fit_max_clusters = 50;
    OutputTarget fit_out;
    fit->add_option("--edges", fit_edges, "edge list file")->required();
    fit->add_flag("--one-based", fit_one_based, "edge list uses 1-based labels");
    fit->add_flag("--self-loops", fit_self_loops, "permit self-loop lines");
    fit->add_option("--min-big-clusters", fit_min_big, "stop once this many clusters reach the size floor");
    fit->add_option("--min-cluster-size", fit_min_size, "size floor for a big cluster");
    fit->add_option("--max-clusters", fit_max_clusters, "or stop at this many clusters in total");
    fit->add_option("--out", fit_out.path, "output path or - for stdout");

    // check
    auto* check_cmd = app.add_subcommand("check", "concentration conditions and deviation bounds for a model");
    ModelFlags check_model;
    double check_eps = 0.5;
    double check_delta = 0.1;
    bool check_csv = false;
    OutputTarget check_out;
    check_cmd->add_option("--model", check_model.family, "gnp | gw | powerlaw")->required();
    check_cmd->add_option("--n", check_model.n, "vertex count");
    check_cmd->add_option("--p", check_model.p, "edge probability (gnp)");
    check_cmd->add_option("--sigma", check_model.sigma, "power-law exponent");
    check_cmd->add_option("--d-max", check_model.d_max, "largest expected degree (powerlaw)");
    check_cmd->add_option("--d-min", check_model.d_min, "smallest expected degree (powerlaw)");
    check_cmd->add_option("--w", check_model.weights, "expected degrees, descending (gw)");
    check_cmd->add_option("--eps", check_eps, "accuracy parameter");
    check_cmd->add_option("--delta", check_delta, "failure probability");
    check_cmd->add_flag("--csv", check_csv, "emit CSV rows instead of JSON lines");
    check_cmd->add_option("--out", check_out.path, "output path or - for stdout");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "run a sweep from a config file into CSV");
    std::string exp_config;
    std::string exp_out = "-";
    int exp_workers = 0;
    experiment->add_option("--config", exp_config, "key=value config file")->required();
    experiment->add_option("--out", exp_out, "CSV output path or - for stdout");
    experiment->add_option("--workers", exp_workers, "override the config worker count");

    // plot
    auto* plot = app.add_subcommand("plot", "gnuplot script of mean competitive ratios from a result CSV");
    std::string plot_csv;
    std::string plot_out = "plot.gp";
    plot->add_option("--csv", plot_csv, "result CSV path")->required();
    plot->add_option("--out", plot_out, "script output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (generate->parsed()) return run_generate(model, gen_seed, gen_out, gen_one_based);
        if (solve->parsed()) return run_solve(solve_flags, solve_out);
        if (intervene->parsed())
            return run_intervene(intervene_flags, intervene_strategy, intervene_budget, intervene_scaled,
                                 intervene_groups, intervene_out);
        if (estimate->parsed())
            return run_estimate(est_edges, est_one_based, est_self_loops, est_method, est_eps, est_delta,
                                est_samples, est_seed, est_groups, est_csv, est_out);
        if (fit->parsed())
            return run_fit_sbm(fit_edges, fit_one_based, fit_self_loops, fit_min_big, fit_min_size,
                               fit_max_clusters, fit_out);
        if (check_cmd->parsed()) return run_check(check_model, check_eps, check_delta, check_csv, check_out);
        if (experiment->parsed()) return run_experiment_cmd(exp_config, exp_out, exp_workers);
        if (plot->parsed()) {
            emit_plot_script(plot_csv, plot_out);
            return kExitOk;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
