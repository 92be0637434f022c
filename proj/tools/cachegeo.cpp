/*
   Copyright 2026 The cachegeo Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// cachegeo command-line tool.
//
// Exit codes: 0 success, 1 I/O or internal failure, 2 invalid input,
// 3 degenerate simulation (no effective samples), 4 infeasible plan.

#include "cachegeo/cachegeo.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using cachegeo::detail::format_number;
using json = nlohmann::ordered_json;

constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitInfeasible = 4;

struct ParamFlags {
    double lambda_s = 0.0;
    double alpha = 0.0;
    double gamma_db = 0.0;
    double r_th = 0.0;
    std::int64_t d = 0;
    std::int64_t library = 0;
    std::vector<CLI::Option*> options;

    void add(CLI::App* app, bool required)
    {
        options = {
            app->add_option("--lambda", lambda_s, "SBS density [1/m^2]"),
            app->add_option("--alpha", alpha, "path loss exponent (> 2)"),
            app->add_option("--gamma-db", gamma_db, "SIR threshold [dB]"),
            app->add_option("--rth", r_th, "threshold distance [m]"),
            app->add_option("--d", d, "contents cached per SBS"),
            app->add_option("--library", library, "library size |C|"),
        };
        for (auto* opt : options) {
            opt->required(required);
        }
    }

    // Overlays the flags the user actually passed onto `base`.
    cachegeo::SystemParams merge(cachegeo::SystemParams base) const
    {
        if (options[0]->count()) base.lambda_s = lambda_s;
        if (options[1]->count()) base.alpha = alpha;
        if (options[2]->count()) base.gamma = cachegeo::db_to_linear(gamma_db);
        if (options[3]->count()) base.r_th = r_th;
        if (options[4]->count()) base.cache_size_d = d;
        if (options[5]->count()) base.library_size = library;
        return base;
    }
};

struct SimFlags {
    std::int64_t trials = 5000;
    std::uint64_t seed = 1;
    std::string mode = "emulated";
    double window = 0.0;
    double confidence = 0.99;
    CLI::Option* trials_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* mode_opt = nullptr;
    CLI::Option* window_opt = nullptr;
    CLI::Option* confidence_opt = nullptr;

    void add(CLI::App* app)
    {
        trials_opt = app->add_option("--trials", trials, "Monte Carlo trials")->capture_default_str();
        seed_opt = app->add_option("--seed", seed, "master seed")->capture_default_str();
        mode_opt = app->add_option("--mode", mode, "association: emulated | physical")
                       ->check(CLI::IsMember({"emulated", "physical"}))
                       ->capture_default_str();
        window_opt = app->add_option("--window", window, "interference window radius [m] (default: auto)");
        confidence_opt = app->add_option("--confidence", confidence, "CI confidence level")->capture_default_str();
    }

    cachegeo::SimConfig merge(cachegeo::SimConfig cfg) const
    {
        if (trials_opt->count()) cfg.trials = trials;
        if (seed_opt->count()) cfg.master_seed = seed;
        if (mode_opt->count()) cfg.mode = cachegeo::mode_from_string(mode);
        if (window_opt->count()) cfg.window_radius = window;
        if (confidence_opt->count()) cfg.confidence = confidence;
        return cfg;
    }
};

unsigned workers_from_env()
{
    const char* raw = std::getenv("CACHEGEO_THREADS");
    if (raw == nullptr || *raw == '\0') {
        return 0;
    }
    try {
        std::size_t used = 0;
        const long v = std::stol(raw, &used);
        if (used != std::string(raw).size() || v < 0) {
            throw std::invalid_argument(raw);
        }
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw cachegeo::ValidationError("CACHEGEO_THREADS", "expected a non-negative integer");
    }
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(); }

std::string optional_text(const std::optional<double>& v) { return v ? format_number(*v) : std::string("undefined"); }

// ---------------------------------------------------------------------------

int cmd_analytic(const ParamFlags& pf, const std::optional<double>& epsilon, bool as_json)
{
    const auto params = cachegeo::validate(pf.merge({}));
    const double k = cachegeo::kappa(params.alpha);
    const double pc = cachegeo::replication_ratio(params).value();
    const double hit = cachegeo::cache_hit_prob(params);
    std::optional<double> outage;
    if (pc > 0.0) {
        outage = cachegeo::content_outage(params);
    }
    std::optional<bool> holds;
    if (epsilon) {
        holds = cachegeo::lemma1_holds(params, *epsilon);
    }

    if (as_json) {
        json j;
        j["params"] = cachegeo::to_json(params);
        j["kappa"] = k;
        j["replication_ratio"] = pc;
        j["cache_hit"] = hit;
        j["content_outage"] = optional_number(outage);
        if (epsilon) {
            j["lemma1"] = {{"epsilon", *epsilon}, {"holds", *holds}};
        } else {
            j["lemma1"] = nullptr;
        }
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "kappa             " << format_number(k) << '\n'
              << "P_c               " << format_number(pc) << '\n'
              << "cache_hit         " << format_number(hit) << '\n'
              << "content_outage    " << optional_text(outage) << '\n';
    if (epsilon) {
        std::cout << "lemma1            " << (*holds ? "holds" : "violated") << " (epsilon=" << format_number(*epsilon)
                  << ")\n";
    }
    return 0;
}

int cmd_simulate(const ParamFlags& pf, const SimFlags& sf, bool as_json)
{
    const auto params = cachegeo::validate(pf.merge({}));
    cachegeo::SimConfig cfg = sf.merge({});
    cfg.workers = workers_from_env();
    const double analytic = cachegeo::content_outage(params);
    const cachegeo::Estimate est = cachegeo::simulate_content_outage(params, cfg);
    const bool pass = est.contains(analytic);

    for (const auto& w : est.warnings) {
        std::cerr << "warning: " << w << '\n';
    }
    if (as_json) {
        json j;
        j["params"] = cachegeo::to_json(params);
        j["config"] = cachegeo::to_json(cfg);
        j["config"]["window_radius"] = est.window_radius;
        j["analytic"] = analytic;
        j["estimate"] = {{"mean", est.mean},
                         {"ci_low", est.ci_low},
                         {"ci_high", est.ci_high},
                         {"confidence", est.confidence},
                         {"n", est.n},
                         {"successes", est.successes},
                         {"attempted", est.attempted}};
        j["verdict"] = pass ? "PASS" : "FAIL";
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "trials            " << cfg.trials << '\n'
              << "mode              " << cachegeo::to_string(cfg.mode) << '\n'
              << "seed              " << cfg.master_seed << '\n'
              << "window_radius     " << format_number(est.window_radius) << '\n'
              << "analytic          " << format_number(analytic) << '\n'
              << "sim_mean          " << format_number(est.mean) << '\n'
              << "ci                [" << format_number(est.ci_low) << ", " << format_number(est.ci_high) << "] at "
              << format_number(est.confidence) << '\n'
              << "effective_n       " << est.n << " of " << est.attempted << '\n'
              << "verdict           " << (pass ? "PASS" : "FAIL") << '\n';
    return 0;
}

int write_table(const cachegeo::SweepTable& table, const std::filesystem::path& out_dir, std::uint64_t seed)
{
    std::filesystem::create_directories(out_dir);
    const std::string stem = cachegeo::output_stem(table.spec, seed);
    const auto csv = out_dir / (stem + ".csv");
    const auto js = out_dir / (stem + ".json");
    cachegeo::emit_csv(table, csv);
    cachegeo::emit_json(table, js);
    std::cout << csv.string() << '\n' << js.string() << '\n';
    if (const auto errors = cachegeo::error_count(table); errors > 0) {
        std::cerr << "warning: " << errors << " cell(s) failed; see '# error row' lines\n";
    }
    return 0;
}

int cmd_plan(std::optional<double> epsilon, std::optional<double> pc, std::optional<double> lambda_s,
             std::optional<double> r_th, bool as_json)
{
    if (!epsilon || !r_th) {
        throw cachegeo::ValidationError("plan", "--epsilon and --rth are required");
    }
    if (pc.has_value() == lambda_s.has_value()) {
        throw cachegeo::ValidationError("plan", "give exactly one of --pc (solve density) or --lambda (solve P_c bounds)");
    }
    if (!(*r_th > 0.0)) {
        throw cachegeo::ValidationError("rth", "threshold distance must be positive");
    }
    if (pc) {
        const cachegeo::ReplicationRatio ratio(*pc);
        const double density = cachegeo::optimal_density(*epsilon, ratio, *r_th);
        if (as_json) {
            json j;
            j["epsilon"] = *epsilon;
            j["pc"] = *pc;
            j["r_th"] = *r_th;
            j["lambda_s"] = density;
            j["min_density_area_product"] = cachegeo::case1_min_density_area(ratio, *epsilon);
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "lambda_s          " << format_number(density) << '\n'
                      << "min_lambda_pi_r2  " << format_number(cachegeo::case1_min_density_area(ratio, *epsilon))
                      << '\n';
        }
        return 0;
    }
    if (!(*lambda_s > 0.0)) {
        throw cachegeo::ValidationError("lambda", "density must be positive");
    }
    const auto bound = cachegeo::case2_pc_bounds(*lambda_s, *r_th, *epsilon);
    if (as_json) {
        json j;
        j["epsilon"] = *epsilon;
        j["lambda_s"] = *lambda_s;
        j["r_th"] = *r_th;
        j["pc_lower"] = bound.pc_lower;
        j["pc_upper"] = bound.pc_upper;
        j["feasible"] = bound.feasible;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "pc_lower          " << format_number(bound.pc_lower) << '\n'
                  << "pc_upper          " << format_number(bound.pc_upper) << '\n'
                  << "feasible          " << (bound.feasible ? "yes" : "no") << '\n';
    }
    if (!bound.feasible) {
        std::cerr << "infeasible: required replication ratio " << format_number(bound.pc_lower) << " exceeds 1\n";
        return kExitInfeasible;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cachegeo: content caching in PPP small cell networks"};
    app.set_version_flag("--version", std::string(cachegeo::kVersion));
    app.require_subcommand(1);

    // analytic
    auto* analytic = app.add_subcommand("analytic", "evaluate every closed-form quantity");
    ParamFlags analytic_params;
    analytic_params.add(analytic, true);
    std::optional<double> analytic_epsilon;
    bool analytic_json = false;
    analytic->add_option("--epsilon", analytic_epsilon, "target hit probability for the feasibility check");
    analytic->add_flag("--json", analytic_json, "machine-readable output");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate vs closed-form content outage");
    ParamFlags sim_params;
    sim_params.add(simulate, true);
    SimFlags sim_flags;
    sim_flags.add(simulate);
    bool sim_json = false;
    simulate->add_flag("--json", sim_json, "machine-readable output");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep and write CSV + JSON");
    ParamFlags sweep_params;
    sweep_params.add(sweep, false);
    SimFlags sweep_sim;
    sweep_sim.add(sweep);
    std::string sweep_config;
    std::string sweep_axis = "gamma-db";
    std::string sweep_series_axis;
    std::vector<double> sweep_series;
    std::vector<double> sweep_values;
    std::string sweep_quantity = "outage";
    std::string sweep_name;
    double sweep_from = 0.0;
    double sweep_to = 0.0;
    int sweep_steps = 0;
    bool sweep_log = false;
    bool sweep_with_sim = false;
    std::string sweep_out = ".";
    sweep->add_option("--config", sweep_config, "sweep spec JSON; flags override its values")->check(CLI::ExistingFile);
    auto* axis_opt = sweep->add_option("--axis", sweep_axis, "lambda | pc | rth | gamma-db | epsilon");
    auto* from_opt = sweep->add_option("--from", sweep_from, "first grid value");
    auto* to_opt = sweep->add_option("--to", sweep_to, "last grid value");
    auto* steps_opt = sweep->add_option("--steps", sweep_steps, "grid size")->check(CLI::PositiveNumber);
    sweep->add_flag("--log", sweep_log, "log-spaced grid between --from and --to");
    auto* values_opt = sweep->add_option("--values", sweep_values, "explicit grid values")->delimiter(',');
    auto* series_axis_opt = sweep->add_option("--series-axis", sweep_series_axis, "second parameter, one curve per value");
    auto* series_opt = sweep->add_option("--series", sweep_series, "series values")->delimiter(',');
    auto* quantity_opt = sweep->add_option("--quantity", sweep_quantity, "outage | hit | density");
    auto* name_opt = sweep->add_option("--name", sweep_name, "output name prefix");
    auto* sweep_sim_flag = sweep->add_flag("--sim", sweep_with_sim, "add Monte Carlo columns");
    sweep->add_option("--out", sweep_out, "output directory")->capture_default_str();
    from_opt->needs(to_opt, steps_opt);
    values_opt->excludes(from_opt);

    // figure
    auto* figure = app.add_subcommand("figure", "reproduce a figure preset as CSV + JSON");
    int fig_number = 2;
    bool fig_with_sim = false;
    std::string fig_out = ".";
    SimFlags fig_sim;
    figure->add_option("--fig", fig_number, "figure number 2..9")->required()->check(CLI::Range(2, 9));
    fig_sim.add(figure);
    figure->add_flag("--sim", fig_with_sim, "add Monte Carlo columns (outage and hit figures)");
    figure->add_option("--out", fig_out, "output directory")->capture_default_str();

    // plan
    auto* plan = app.add_subcommand("plan", "optimal density or replication ratio bounds for a hit target");
    std::optional<double> plan_epsilon;
    std::optional<double> plan_pc;
    std::optional<double> plan_lambda;
    std::optional<double> plan_rth;
    bool plan_json = false;
    plan->add_option("--epsilon", plan_epsilon, "target cache hit probability in [0, 1)")->required();
    plan->add_option("--pc", plan_pc, "replication ratio (solve for density)");
    plan->add_option("--lambda", plan_lambda, "SBS density (solve for replication ratio bounds)");
    plan->add_option("--rth", plan_rth, "threshold distance [m]")->required();
    plan->add_flag("--json", plan_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*analytic) {
            return cmd_analytic(analytic_params, analytic_epsilon, analytic_json);
        }
        if (*simulate) {
            return cmd_simulate(sim_params, sim_flags, sim_json);
        }
        if (*sweep) {
            cachegeo::SweepSpec spec;
            spec.base = cachegeo::SystemParams{};
            if (!sweep_config.empty()) {
                std::ifstream in(sweep_config);
                spec = cachegeo::spec_from_json(nlohmann::ordered_json::parse(in));
            }
            spec.base = sweep_params.merge(spec.base);
            if (axis_opt->count() || sweep_config.empty()) {
                spec.axis = cachegeo::axis_from_string(sweep_axis);
            }
            if (quantity_opt->count()) {
                spec.quantity = cachegeo::quantity_from_string(sweep_quantity);
            } else if (sweep_config.empty()) {
                spec.quantity = spec.axis == cachegeo::Axis::Epsilon ? cachegeo::Quantity::OptimalDensity
                                                                     : cachegeo::Quantity::ContentOutage;
            }
            if (values_opt->count()) {
                spec.values = sweep_values;
            } else if (from_opt->count()) {
                spec.values = sweep_log ? cachegeo::detail::logspace(std::log10(sweep_from), std::log10(sweep_to), sweep_steps)
                                        : cachegeo::detail::linspace(sweep_from, sweep_to, sweep_steps);
            }
            if (series_opt->count()) {
                if (!series_axis_opt->count()) {
                    throw cachegeo::SpecError("--series requires --series-axis");
                }
                spec.series = cachegeo::SeriesSpec{cachegeo::axis_from_string(sweep_series_axis), sweep_series};
            }
            if (name_opt->count()) {
                spec.name = sweep_name;
            }
            if (sweep_sim_flag->count() || spec.sim) {
                spec.sim = sweep_sim.merge(spec.sim.value_or(cachegeo::SimConfig{}));
                spec.sim->workers = workers_from_env();
            }
            const std::uint64_t seed = spec.sim ? spec.sim->master_seed : sweep_sim.seed;
            return write_table(cachegeo::run_sweep(spec), sweep_out, seed);
        }
        if (*figure) {
            cachegeo::SweepSpec spec = cachegeo::figure_preset(cachegeo::figure_from_number(fig_number));
            if (fig_with_sim && spec.quantity != cachegeo::Quantity::OptimalDensity) {
                spec.sim = fig_sim.merge(cachegeo::SimConfig{});
                spec.sim->workers = workers_from_env();
            }
            return write_table(cachegeo::run_sweep(spec), fig_out, fig_sim.seed);
        }
        if (*plan) {
            return cmd_plan(plan_epsilon, plan_pc, plan_lambda, plan_rth, plan_json);
        }
    } catch (const cachegeo::DegenerateSampleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const cachegeo::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const cachegeo::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const cachegeo::SpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return 0;
}
