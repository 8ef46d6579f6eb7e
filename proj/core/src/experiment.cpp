#include "netgame/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "netgame/edge_list.hpp"
#include "netgame/game.hpp"
#include "netgame/girvan_newman.hpp"
#include "netgame/rng.hpp"
#include "netgame/spectral.hpp"

namespace netgame {

std::string axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::budget: return "budget";
        case SweepAxis::density_param: return "density_param";
        case SweepAxis::spectral_radius: return "spectral_radius";
    }
    return "budget";
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

std::uint64_t cell_seed(std::uint64_t base_seed, int axis_index, int trial_index) {
    return mix_seed(base_seed, static_cast<std::uint64_t>(axis_index) + 1,
                    static_cast<std::uint64_t>(trial_index) + 1);
}

namespace {

struct KeyValues {
    std::map<std::string, std::vector<std::string>> entries;

    const std::string* single(const std::string& key) const {
        const auto it = entries.find(key);
        if (it == entries.end()) return nullptr;
        if (it->second.size() != 1) throw ConfigError("config key '" + key + "' given more than once");
        return &it->second.front();
    }
    std::vector<std::string> list(const std::string& key) const {
        const auto it = entries.find(key);
        return it == entries.end() ? std::vector<std::string>{} : it->second;
    }
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double out = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return out;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': cannot parse number '" + value + "'");
    }
}

long long parse_int(const std::string& value, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long long out = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return out;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': cannot parse integer '" + value + "'");
    }
}

bool parse_bool(const std::string& value, const std::string& key) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError("config key '" + key + "': expected true/false, got '" + value + "'");
}

std::vector<double> split_doubles(const std::string& value, const std::string& key) {
    std::vector<double> out;
    std::string item;
    std::istringstream stream(value);
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(item, key));
    }
    return out;
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "model",     "n",          "p",        "sigma",      "d_max",    "d_min",   "gw_weight",
        "sbm_size",  "sbm_prow",   "edgelist", "indexing",   "self_loops", "axis",  "axis_value",
        "strategy",  "trials",     "seed",     "beta",       "radius",   "budget",  "budget_mode",
        "b",         "workers"};
    return keys;
}

GraphModel build_model(const ModelConfig& m, SweepAxis axis, double axis_value) {
    const bool density_axis = axis == SweepAxis::density_param;
    if (m.family == "gnp") {
        const double p = density_axis ? axis_value : m.p;
        return GraphModel(GNPSpec{m.n, p}, m.allow_self_loops);
    }
    if (m.family == "powerlaw") {
        const double sigma = density_axis ? axis_value : m.sigma;
        const PowerLawFit fit = power_law_from_degrees(m.n, sigma, m.d_max, m.d_min);
        return GraphModel(PowerLawSpec{m.n, sigma, fit.c, fit.i0}, m.allow_self_loops);
    }
    if (m.family == "gw") return GraphModel(GWSpec{m.gw_weights}, m.allow_self_loops);
    if (m.family == "sbm") return GraphModel(SBMSpec{m.sbm_sizes, m.sbm_probs}, m.allow_self_loops);
    throw ConfigError("model family '" + m.family + "' cannot be sampled");
}

struct CellOutcome {
    std::vector<ResultRow> rows;
};

}  // namespace

ExperimentConfig parse_experiment_config(std::istream& in) {
    KeyValues kv;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (known_keys().count(key) == 0)
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        if (value.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty value");
        kv.entries[key].push_back(value);
    }

    ExperimentConfig config;
    const std::string* model = kv.single("model");
    if (model == nullptr) throw ConfigError("config: 'model' is required");
    config.model.family = *model;

    if (const auto* v = kv.single("n")) config.model.n = static_cast<int>(parse_int(*v, "n"));
    if (const auto* v = kv.single("p")) config.model.p = parse_double(*v, "p");
    if (const auto* v = kv.single("sigma")) config.model.sigma = parse_double(*v, "sigma");
    if (const auto* v = kv.single("d_max")) config.model.d_max = parse_double(*v, "d_max");
    if (const auto* v = kv.single("d_min")) config.model.d_min = parse_double(*v, "d_min");
    if (const auto* v = kv.single("edgelist")) config.model.edgelist_path = *v;
    if (const auto* v = kv.single("indexing")) {
        if (*v == "one")
            config.model.one_based = true;
        else if (*v != "zero")
            throw ConfigError("config key 'indexing': expected zero or one");
    }
    if (const auto* v = kv.single("self_loops")) config.model.allow_self_loops = parse_bool(*v, "self_loops");

    const auto weights = kv.list("gw_weight");
    if (!weights.empty()) {
        config.model.gw_weights.resize(static_cast<Eigen::Index>(weights.size()));
        for (std::size_t i = 0; i < weights.size(); ++i)
            config.model.gw_weights[static_cast<Eigen::Index>(i)] = parse_double(weights[i], "gw_weight");
    }
    const auto sizes = kv.list("sbm_size");
    for (const auto& s : sizes) config.model.sbm_sizes.push_back(static_cast<int>(parse_int(s, "sbm_size")));
    const auto prows = kv.list("sbm_prow");
    if (!prows.empty()) {
        const auto m = static_cast<Eigen::Index>(prows.size());
        config.model.sbm_probs.resize(m, m);
        for (Eigen::Index i = 0; i < m; ++i) {
            const auto row = split_doubles(prows[i], "sbm_prow");
            if (static_cast<Eigen::Index>(row.size()) != m)
                throw ConfigError("config key 'sbm_prow': need one row per group with one entry per group");
            for (Eigen::Index j = 0; j < m; ++j) config.model.sbm_probs(i, j) = row[j];
        }
    }

    const std::string* axis = kv.single("axis");
    if (axis == nullptr) throw ConfigError("config: 'axis' is required");
    if (*axis == "budget")
        config.axis = SweepAxis::budget;
    else if (*axis == "density_param")
        config.axis = SweepAxis::density_param;
    else if (*axis == "spectral_radius")
        config.axis = SweepAxis::spectral_radius;
    else
        throw ConfigError("config key 'axis': unknown axis '" + *axis + "'");

    for (const auto& v : kv.list("axis_value")) config.axis_values.push_back(parse_double(v, "axis_value"));
    if (config.axis_values.empty()) throw ConfigError("config: at least one 'axis_value' is required");
    for (double v : config.axis_values) {
        if (!std::isfinite(v) || v < 0.0) throw ConfigError("config: axis values must be finite and nonnegative");
        if (v == 0.0 && config.axis != SweepAxis::spectral_radius)
            throw ConfigError("config: axis values must be positive for this axis");
    }

    for (const auto& v : kv.list("strategy")) {
        const auto s = strategy_from_name(v);
        if (!s || *s == Strategy::custom) throw ConfigError("config key 'strategy': unknown strategy '" + v + "'");
        config.strategies.push_back(*s);
    }
    if (config.strategies.empty()) throw ConfigError("config: at least one 'strategy' is required");

    if (const auto* v = kv.single("trials")) config.trials = static_cast<int>(parse_int(*v, "trials"));
    if (config.trials < 1) throw ConfigError("config: trials must be at least 1");
    if (const auto* v = kv.single("seed")) config.base_seed = static_cast<std::uint64_t>(parse_int(*v, "seed"));
    if (const auto* v = kv.single("workers")) config.workers = static_cast<int>(parse_int(*v, "workers"));
    if (config.workers < 1) throw ConfigError("config: workers must be at least 1");
    if (const auto* v = kv.single("b")) config.b_value = parse_double(*v, "b");
    if (config.b_value < 0.0) throw ConfigError("config: b must be nonnegative");

    const std::string* beta = kv.single("beta");
    const std::string* radius = kv.single("radius");
    if (beta != nullptr && radius != nullptr) throw ConfigError("config: give 'beta' or 'radius', not both");
    if (config.axis == SweepAxis::spectral_radius) {
        if (beta != nullptr || radius != nullptr)
            throw ConfigError("config: the spectral_radius axis supplies beta; drop 'beta'/'radius'");
        config.beta_mode = BetaMode::target_radius;
    } else if (beta != nullptr) {
        config.beta_mode = BetaMode::absolute;
        config.beta = parse_double(*beta, "beta");
        if (config.beta < 0.0) throw ConfigError("config: beta must be nonnegative");
    } else if (radius != nullptr) {
        config.beta_mode = BetaMode::target_radius;
        config.target_radius = parse_double(*radius, "radius");
        if (config.target_radius < 0.0 || config.target_radius >= 1.0)
            throw ConfigError("config: radius must lie in [0, 1)");
    } else {
        throw ConfigError("config: 'beta' or 'radius' is required off the spectral_radius axis");
    }

    if (const auto* v = kv.single("budget_mode")) {
        if (*v == "scaled")
            config.budget_mode = BudgetMode::scaled;
        else if (*v == "absolute")
            config.budget_mode = BudgetMode::absolute;
        else
            throw ConfigError("config key 'budget_mode': expected scaled or absolute");
    }
    if (const auto* v = kv.single("budget")) config.budget = parse_double(*v, "budget");
    if (config.axis != SweepAxis::budget && !(config.budget > 0.0))
        throw ConfigError("config: 'budget' must be positive off the budget axis");

    // family-specific requirements
    const auto& m = config.model;
    if (m.family == "gnp") {
        if (m.n < 1) throw ConfigError("config: gnp needs n >= 1");
        if (config.axis != SweepAxis::density_param && !(m.p >= 0.0 && m.p <= 1.0))
            throw ConfigError("config: gnp needs p in [0,1]");
    } else if (m.family == "powerlaw") {
        if (m.n < 2 || !(m.d_max > m.d_min && m.d_min > 0.0))
            throw ConfigError("config: powerlaw needs n >= 2 and d_max > d_min > 0");
        if (config.axis != SweepAxis::density_param && !(m.sigma > 2.0))
            throw ConfigError("config: powerlaw needs sigma > 2");
    } else if (m.family == "gw") {
        if (m.gw_weights.size() == 0) throw ConfigError("config: gw needs gw_weight entries");
    } else if (m.family == "sbm") {
        if (m.sbm_sizes.empty() || m.sbm_probs.size() == 0)
            throw ConfigError("config: sbm needs sbm_size and sbm_prow entries");
    } else if (m.family == "edgelist") {
        if (m.edgelist_path.empty()) throw ConfigError("config: edgelist needs a path");
    } else {
        throw ConfigError("config: unknown model family '" + m.family + "'");
    }

    if (config.axis == SweepAxis::density_param && m.family != "gnp" && m.family != "powerlaw")
        throw ConfigError("config: the density_param axis applies to gnp and powerlaw models only");
    const bool needs_expected =
        std::count(config.strategies.begin(), config.strategies.end(), Strategy::expected_degree) > 0 ||
        std::count(config.strategies.begin(), config.strategies.end(), Strategy::first_eigenvector_expected) > 0;
    if (needs_expected && m.family == "edgelist")
        throw ConfigError("config: expected-matrix strategies are unavailable for edge-list input");
    return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    return parse_experiment_config(in);
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
    const int cells = static_cast<int>(config.axis_values.size()) * config.trials;
    std::vector<CellOutcome> outcomes(cells);

    // an edge-list graph is fixed across cells; load it once
    std::optional<EdgeListResult> loaded;
    if (config.model.family == "edgelist") {
        try {
            loaded = load_edge_list(config.model.edgelist_path,
                                    config.model.one_based ? Indexing::one_based : Indexing::zero_based,
                                    config.model.allow_self_loops);
        } catch (const std::exception& e) {
            throw DataError(e.what());
        }
    }

    const bool wants_sbm_rule =
        std::count(config.strategies.begin(), config.strategies.end(), Strategy::sbm_reconstructed) > 0;

    const auto run_cell = [&](int cell) {
        const int axis_index = cell / config.trials;
        const int trial = cell % config.trials;
        const double axis_value = config.axis_values[axis_index];
        const std::uint64_t seed = cell_seed(config.base_seed, axis_index, trial);
        const auto started = std::chrono::steady_clock::now();

        ResultRow base;
        base.model = config.model.family;
        base.axis = axis_name(config.axis);
        base.axis_value = axis_value;
        base.seed = seed;
        base.graph_id = config.model.family + "_a" + std::to_string(axis_index) + "_t" + std::to_string(trial);

        std::optional<GraphModel> model;
        Graph graph;
        if (loaded) {
            graph = loaded->graph;
        } else {
            model.emplace(build_model(config.model, config.axis, axis_value));
            graph = sample(*model, seed);
        }

        const Eigen::MatrixXd adjacency = graph.adjacency_matrix();
        const double lambda1 = graph.size() > 0 ? first_eigenvector(adjacency).eigenvalue : 0.0;

        double beta = 0.0;
        if (config.axis == SweepAxis::spectral_radius)
            beta = lambda1 > 0.0 ? axis_value / lambda1 : 0.0;
        else if (config.beta_mode == BetaMode::absolute)
            beta = config.beta;
        else
            beta = lambda1 > 0.0 ? config.target_radius / lambda1 : 0.0;

        double budget = config.axis == SweepAxis::budget ? axis_value : config.budget;
        if (config.budget_mode == BudgetMode::scaled) budget *= graph.size();

        const bool feasible = beta * lambda1 < 1.0 - 1e-9;
        auto& rows = outcomes[cell].rows;
        if (!feasible) {
            for (Strategy s : config.strategies) {
                ResultRow row = base;
                row.strategy = strategy_name(s);
                row.feasible = false;
                rows.push_back(std::move(row));
            }
            return;
        }

        GameInstance game(adjacency, beta, Eigen::VectorXd::Constant(graph.size(), config.b_value));

        HeuristicInputs inputs;
        if (model) inputs.expected = expected_matrix(*model);
        if (wants_sbm_rule) {
            if (const auto* sbm = std::get_if<SBMSpec>(model ? &model->spec() : nullptr))
                inputs.group_labels = sbm->labels();
            else
                inputs.group_labels = girvan_newman_groups(graph);
        }

        const Intervention optimal = optimal_intervention(game, budget);
        const double baseline_welfare = welfare_after(game, Eigen::VectorXd::Zero(graph.size()));
        const double optimal_welfare = welfare_after(game, optimal.y);

        for (Strategy s : config.strategies) {
            ResultRow row = base;
            row.strategy = strategy_name(s);
            try {
                const Intervention intervention =
                    s == Strategy::optimal ? optimal : heuristic_suite(game, {s}, budget, inputs).front();
                const double welfare =
                    s == Strategy::optimal ? optimal_welfare : welfare_after(game, intervention.y);
                row.welfare = welfare;
                row.baseline_welfare = baseline_welfare;
                row.competitive_ratio = optimal_welfare > 0.0 ? welfare / optimal_welfare : 1.0;
                if (intervention.y.norm() > 0.0 && optimal.y.norm() > 0.0)
                    row.cosine_to_optimal = cosine_similarity(intervention.y, optimal.y);
            } catch (const std::exception&) {
                // a strategy without a usable direction (say, degrees on an
                // empty graph) flags its row instead of killing the sweep
                row.feasible = false;
            }
            row.wall_time =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            rows.push_back(std::move(row));
        }
    };

    if (config.workers <= 1) {
        for (int cell = 0; cell < cells; ++cell) run_cell(cell);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        const int workers = std::min(config.workers, cells);
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (int cell = next.fetch_add(1); cell < cells; cell = next.fetch_add(1)) run_cell(cell);
            });
        }
        for (auto& t : pool) t.join();
    }

    std::vector<ResultRow> rows;
    for (auto& cell : outcomes)
        for (auto& row : cell.rows) rows.push_back(std::move(row));
    return rows;
}

namespace {

constexpr const char* kCsvHeader =
    "graph_id,model,axis,axis_value,seed,strategy,welfare,baseline_welfare,"
    "competitive_ratio,cosine_to_optimal,queries_used,wall_time,feasible";

}  // namespace

void write_result_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& row : rows) {
        out << row.graph_id << ',' << row.model << ',' << row.axis << ',' << format_double(row.axis_value) << ','
            << row.seed << ',' << row.strategy << ',';
        if (row.welfare) out << format_double(*row.welfare);
        out << ',';
        if (row.baseline_welfare) out << format_double(*row.baseline_welfare);
        out << ',';
        if (row.competitive_ratio) out << format_double(*row.competitive_ratio);
        out << ',';
        if (row.cosine_to_optimal) out << format_double(*row.cosine_to_optimal);
        out << ',';
        if (row.queries_used) out << *row.queries_used;
        out << ',';
        // wall_time intentionally blank: identical seeds must give identical bytes
        out << ',' << (row.feasible ? "true" : "false") << '\n';
    }
}

std::string result_csv_string(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    write_result_csv(rows, out);
    return out.str();
}

void emit_plot_script(const std::string& csv_path, const std::string& out_path) {
    std::ifstream in(csv_path);
    if (!in) throw DataError("cannot open CSV " + csv_path);
    std::string header;
    if (!std::getline(in, header) || header != kCsvHeader)
        throw DataError(csv_path + ": unexpected CSV schema");

    std::string axis = "axis";
    // strategy -> axis value -> ratios
    std::map<std::string, std::map<double, std::vector<double>>> series;
    std::string line;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream fs(line);
        while (std::getline(fs, field, ',')) fields.push_back(field);
        while (fields.size() < 13) fields.emplace_back();
        if (fields.size() != 13) throw DataError(csv_path + ":" + std::to_string(line_no) + ": bad row");
        if (fields[12] != "true" || fields[8].empty()) continue;  // infeasible or ratio-less rows
        axis = fields[2];
        try {
            series[fields[5]][std::stod(fields[3])].push_back(std::stod(fields[8]));
        } catch (const std::exception&) {
            throw DataError(csv_path + ":" + std::to_string(line_no) + ": non-numeric axis value or ratio");
        }
    }

    std::ofstream out(out_path);
    if (!out) throw DataError("cannot open " + out_path + " for writing");
    out << "# mean competitive ratio per strategy vs " << axis << "\n";
    out << "set datafile separator ','\n";
    out << "set xlabel '" << axis << "'\n";
    out << "set ylabel 'mean competitive ratio'\n";
    out << "set key outside right\n";
    out << "set grid\n";
    if (series.empty()) {
        std::cerr << "emit_plot_script: no plottable rows in " << csv_path << "\n";
        out << "# no plottable rows\n";
        return;
    }
    int index = 0;
    for (const auto& [strategy, points] : series) {  // std::map: alphabetical
        out << "$data" << index << " << EOD\n";
        for (const auto& [value, ratios] : points) {
            double mean = 0.0;
            for (double r : ratios) mean += r;
            mean /= static_cast<double>(ratios.size());
            out << format_double(value) << ',' << format_double(mean) << '\n';
        }
        out << "EOD\n";
        ++index;
    }
    out << "plot ";
    index = 0;
    for (const auto& [strategy, points] : series) {
        if (index > 0) out << ", \\\n     ";
        out << "$data" << index << " using 1:2 with linespoints title '" << strategy << "'";
        ++index;
    }
    out << '\n';
}

}  // namespace netgame
