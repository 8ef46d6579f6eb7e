#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netgame/errors.hpp"
#include "netgame/interventions.hpp"
#include "netgame/random_models.hpp"

namespace netgame {

enum class SweepAxis { budget, density_param, spectral_radius };
enum class BudgetMode { scaled, absolute };  ///< scaled: C = value * n
enum class BetaMode { absolute, target_radius };

std::string axis_name(SweepAxis axis);

struct ModelConfig {
    std::string family;  ///< gnp | gw | powerlaw | sbm | edgelist
    int n = 0;
    double p = 0.0;
    double sigma = 0.0;
    double d_max = 0.0;
    double d_min = 0.0;
    Eigen::VectorXd gw_weights;
    std::vector<int> sbm_sizes;
    Eigen::MatrixXd sbm_probs;
    std::string edgelist_path;
    bool one_based = false;
    bool allow_self_loops = false;
};

struct ExperimentConfig {
    ModelConfig model;
    SweepAxis axis = SweepAxis::budget;
    std::vector<double> axis_values;
    std::vector<Strategy> strategies;
    int trials = 1;
    std::uint64_t base_seed = 1;
    BetaMode beta_mode = BetaMode::absolute;
    double beta = 0.0;
    double target_radius = 0.0;
    BudgetMode budget_mode = BudgetMode::scaled;
    double budget = 1.0;
    double b_value = 1.0;
    int workers = 1;
};

/// One (graph, strategy) outcome. Fields without a defined value for a row
/// (cosine of the zero baseline, query counts outside estimator runs) are
/// absent rather than zero; wall_time is measured but never serialized, so
/// equal-seed runs write byte-identical CSV.
struct ResultRow {
    std::string graph_id;
    std::string model;
    std::string axis;
    double axis_value = 0.0;
    std::uint64_t seed = 0;
    std::string strategy;
    std::optional<double> welfare;
    std::optional<double> baseline_welfare;
    std::optional<double> competitive_ratio;
    std::optional<double> cosine_to_optimal;
    std::optional<std::uint64_t> queries_used;
    double wall_time = 0.0;
    bool feasible = true;
};

/// Parses the plain-text key=value grammar ('#' comments, repeated keys for
/// list values) and validates it. Throws ConfigError on unknown keys,
/// missing requirements, or inconsistent combinations.
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig load_experiment_config(const std::string& path);

/// Runs the sweep: per (axis value, trial) cell, sample or load the graph,
/// resolve beta, build every configured intervention plus the budget-matched
/// optimum, and emit one row per strategy. Deterministic given the base seed
/// (per-cell seeds are hashes of base seed, axis index and trial index) and
/// independent of the worker count. Infeasible cells emit flagged rows
/// rather than aborting.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

/// Shortest-round-trip decimal formatting ('.' decimal point, no locale).
std::string format_double(double value);

void write_result_csv(const std::vector<ResultRow>& rows, std::ostream& out);
std::string result_csv_string(const std::vector<ResultRow>& rows);

/// Reads a result CSV and writes a self-contained gnuplot script drawing the
/// mean competitive ratio against the axis value, one series per strategy
/// (legend alphabetical). An empty CSV produces a script with no series and
/// a warning on stderr. Throws DataError on schema mismatch.
void emit_plot_script(const std::string& csv_path, const std::string& out_path);

/// The per-cell RNG seed used by run_experiment.
std::uint64_t cell_seed(std::uint64_t base_seed, int axis_index, int trial_index);

}  // namespace netgame
