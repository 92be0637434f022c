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

#pragma once

// Parameter sweeps pairing closed-form curves with Monte Carlo points, the
// figure presets, and CSV / JSON emission of the resulting tables.

#include "cachegeo/analytic.hpp"
#include "cachegeo/model.hpp"
#include "cachegeo/simulate.hpp"
#include "cachegeo/version.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace cachegeo {

enum class Axis { LambdaS, Pc, RTh, GammaDb, Epsilon };

enum class Quantity { ContentOutage, CacheHit, OptimalDensity };

enum class Figure { Fig2 = 2, Fig3, Fig4, Fig5, Fig6, Fig7, Fig8, Fig9 };

struct SeriesSpec {
    Axis axis = Axis::Pc;
    std::vector<double> values;

    friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

/// A grid over one axis (optionally crossed with a series axis) around a
/// base parameter set. Replication ratios are realised as d / |C| with the
/// base library size; gamma values on the GammaDb axis are in dB.
struct SweepSpec {
    std::string name = "sweep";
    Quantity quantity = Quantity::ContentOutage;
    SystemParams base;
    Axis axis = Axis::LambdaS;
    std::vector<double> values;
    std::optional<SeriesSpec> series;
    std::optional<SimConfig> sim; // analytic only when absent
    std::string note;
};

struct SweepRow {
    double axis_value = 0.0;
    std::optional<double> series_value;
    std::optional<double> analytic;
    std::optional<double> sim_mean;
    std::optional<double> ci_low;
    std::optional<double> ci_high;
    std::string error; // empty unless the cell failed

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepTable {
    SweepSpec spec;
    std::string tool_version = kVersion;
    std::vector<SweepRow> rows;
};

class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Names

inline std::string_view to_string(Axis axis)
{
    switch (axis) {
    case Axis::LambdaS: return "lambda_s";
    case Axis::Pc: return "pc";
    case Axis::RTh: return "r_th";
    case Axis::GammaDb: return "gamma_db";
    case Axis::Epsilon: return "epsilon";
    }
    return "?";
}

inline std::string_view to_string(Quantity q)
{
    switch (q) {
    case Quantity::ContentOutage: return "content_outage";
    case Quantity::CacheHit: return "cache_hit";
    case Quantity::OptimalDensity: return "optimal_density";
    }
    return "?";
}

inline std::string_view to_string(AssociationMode mode)
{
    return mode == AssociationMode::Emulated ? "emulated" : "physical";
}

inline Axis axis_from_string(std::string_view s)
{
    if (s == "lambda_s" || s == "lambda") return Axis::LambdaS;
    if (s == "pc") return Axis::Pc;
    if (s == "r_th" || s == "rth") return Axis::RTh;
    if (s == "gamma_db" || s == "gamma-db") return Axis::GammaDb;
    if (s == "epsilon") return Axis::Epsilon;
    throw SpecError("unknown axis '" + std::string(s) + "'");
}

inline Quantity quantity_from_string(std::string_view s)
{
    if (s == "content_outage" || s == "outage") return Quantity::ContentOutage;
    if (s == "cache_hit" || s == "hit") return Quantity::CacheHit;
    if (s == "optimal_density" || s == "density") return Quantity::OptimalDensity;
    throw SpecError("unknown quantity '" + std::string(s) + "'");
}

inline AssociationMode mode_from_string(std::string_view s)
{
    if (s == "emulated") return AssociationMode::Emulated;
    if (s == "physical") return AssociationMode::Physical;
    throw SpecError("unknown mode '" + std::string(s) + "'");
}

inline std::string preset_name(Figure fig) { return "fig" + std::to_string(static_cast<int>(fig)); }

inline Figure figure_from_number(int n)
{
    if (n < 2 || n > 9) {
        throw SpecError("figure presets exist for 2..9, got " + std::to_string(n));
    }
    return static_cast<Figure>(n);
}

// ---------------------------------------------------------------------------
// Spec checks and grid evaluation

/// Structural checks. Per-cell parameter problems are reported in-row by
/// run_sweep instead.
inline void validate_spec(const SweepSpec& spec)
{
    if (spec.values.empty()) {
        throw SpecError("sweep values must be non-empty");
    }
    for (std::size_t i = 1; i < spec.values.size(); ++i) {
        if (!(spec.values[i] > spec.values[i - 1])) {
            throw SpecError("sweep values must be strictly increasing");
        }
    }
    for (double v : spec.values) {
        if (!std::isfinite(v)) {
            throw SpecError("sweep values must be finite");
        }
    }
    if (spec.series) {
        if (spec.series->values.empty()) {
            throw SpecError("series values must be non-empty");
        }
        if (spec.series->axis == spec.axis) {
            throw SpecError("series axis must differ from the swept axis");
        }
        if (spec.series->axis == Axis::Epsilon) {
            throw SpecError("epsilon can only be the swept axis");
        }
    }
    const bool density = spec.quantity == Quantity::OptimalDensity;
    if (density != (spec.axis == Axis::Epsilon)) {
        throw SpecError("the epsilon axis pairs exactly with the optimal_density quantity");
    }
    if (density && spec.series &&
        (spec.series->axis == Axis::LambdaS || spec.series->axis == Axis::GammaDb)) {
        throw SpecError("optimal density depends only on pc and r_th");
    }
    if (spec.sim && spec.sim->trials < 1) {
        throw SpecError("sim.trials must be at least 1");
    }
    validate(spec.base);
}

namespace detail {

inline void apply_axis(SystemParams& p, Axis axis, double v)
{
    switch (axis) {
    case Axis::LambdaS: p.lambda_s = v; break;
    case Axis::RTh: p.r_th = v; break;
    case Axis::GammaDb: p.gamma = db_to_linear(v); break;
    case Axis::Pc: {
        const double d = std::round(v * static_cast<double>(p.library_size));
        if (std::fabs(d / static_cast<double>(p.library_size) - v) > 1e-12) {
            throw DomainError("pc=" + std::to_string(v) + " is not d/|C| for |C|=" + std::to_string(p.library_size));
        }
        p.cache_size_d = static_cast<std::int64_t>(d);
        break;
    }
    case Axis::Epsilon: break;
    }
}

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace detail

/// Seed of grid cell `cell` under a sweep-level master seed.
inline std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t cell)
{
    return detail::splitmix64(master_seed ^ detail::splitmix64(static_cast<std::uint64_t>(cell)));
}

/// Evaluates every (series value, axis value) cell. Rows are grouped by
/// series value, each group in `values` order.
inline SweepTable run_sweep(const SweepSpec& spec)
{
    validate_spec(spec);
    SweepTable table;
    table.spec = spec;

    std::vector<std::optional<double>> series_values;
    if (spec.series) {
        series_values.assign(spec.series->values.begin(), spec.series->values.end());
    } else {
        series_values.push_back(std::nullopt);
    }

    std::size_t cell = 0;
    for (const auto& sv : series_values) {
        for (double v : spec.values) {
            SweepRow row;
            row.axis_value = v;
            row.series_value = sv;
            try {
                SystemParams p = spec.base;
                if (sv) {
                    detail::apply_axis(p, spec.series->axis, *sv);
                }
                detail::apply_axis(p, spec.axis, v);
                validate(p);
                switch (spec.quantity) {
                case Quantity::ContentOutage:
                    row.analytic = content_outage(p);
                    break;
                case Quantity::CacheHit:
                    row.analytic = cache_hit_prob(p);
                    break;
                case Quantity::OptimalDensity:
                    row.analytic = optimal_density(v, replication_ratio(p), p.r_th);
                    break;
                }
                if (spec.sim && spec.quantity != Quantity::OptimalDensity) {
                    SimConfig cfg = *spec.sim;
                    cfg.master_seed = cell_seed(spec.sim->master_seed, cell);
                    const Estimate est = spec.quantity == Quantity::CacheHit ? estimate_cache_hit(p, cfg)
                                                                             : simulate_content_outage(p, cfg);
                    row.sim_mean = est.mean;
                    row.ci_low = est.ci_low;
                    row.ci_high = est.ci_high;
                }
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            table.rows.push_back(std::move(row));
            ++cell;
        }
    }
    return table;
}

inline std::size_t error_count(const SweepTable& table)
{
    std::size_t n = 0;
    for (const auto& row : table.rows) {
        n += !row.error.empty();
    }
    return n;
}

// ---------------------------------------------------------------------------
// Figure presets. Axis ranges are reconstructions: the published curves are
// not numerically legible, so each preset spans the visible domain with a
// grid chosen here. Replication ratios are realised with |C| = 1000.

namespace detail {

inline std::vector<double> linspace(double from, double to, int steps)
{
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        v.push_back(steps == 1 ? from : from + (to - from) * i / (steps - 1));
    }
    return v;
}

inline std::vector<double> logspace(double from_exp, double to_exp, int steps)
{
    auto v = linspace(from_exp, to_exp, steps);
    for (double& x : v) {
        x = std::pow(10.0, x);
    }
    return v;
}

inline SystemParams preset_base(double lambda_s, double gamma_db, double r_th, std::int64_t d)
{
    return SystemParams{lambda_s, 3.0, db_to_linear(gamma_db), r_th, d, 1000};
}

} // namespace detail

inline SweepSpec figure_preset(Figure fig)
{
    SweepSpec s;
    s.name = preset_name(fig);
    switch (fig) {
    case Figure::Fig2:
        s.base = detail::preset_base(0.1, -10.0, 5.0, 20);
        s.axis = Axis::LambdaS;
        s.values = detail::logspace(-3.0, 0.0, 13);
        s.series = SeriesSpec{Axis::Pc, {0.02, 0.05, 0.1, 0.2}};
        s.note = "outage vs SBS density per replication ratio; gamma=-10dB r_th=5 alpha=3; "
                 "lambda_s in [1e-3, 1] log-spaced (reconstructed range)";
        break;
    case Figure::Fig3:
        // Small density with a small replication ratio gives very low outage:
        // conditioning on a hit leaves a short link with little interference.
        // Kept as the closed form yields it.
        s.base = detail::preset_base(0.1, -10.0, 5.0, 20);
        s.axis = Axis::Pc;
        s.values = {0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
        s.series = SeriesSpec{Axis::LambdaS, {0.001, 0.01, 0.05, 0.1}};
        s.note = "outage vs replication ratio per SBS density; r_th=5 gamma=-10dB alpha=3; "
                 "pc in [0.01, 1] (reconstructed range)";
        break;
    case Figure::Fig4:
        s.base = detail::preset_base(0.1, -10.0, 5.0, 20);
        s.axis = Axis::RTh;
        s.values = detail::linspace(1.0, 30.0, 30);
        s.series = SeriesSpec{Axis::Pc, {0.02, 0.05, 0.1, 0.2}};
        s.note = "outage vs threshold distance per replication ratio; gamma=-10dB lambda_s=0.1 alpha=3; "
                 "r_th in [1, 30] m (reconstructed range)";
        break;
    case Figure::Fig5:
        s.base = detail::preset_base(0.1, -10.0, 5.0, 20);
        s.axis = Axis::RTh;
        s.values = detail::linspace(1.0, 30.0, 30);
        s.series = SeriesSpec{Axis::LambdaS, {0.01, 0.05, 0.1, 0.2}};
        s.note = "outage vs threshold distance per SBS density; pc=0.02 gamma=-10dB alpha=3; "
                 "r_th in [1, 30] m (reconstructed range)";
        break;
    case Figure::Fig6:
        s.base = detail::preset_base(0.1, -10.0, 10.0, 20);
        s.axis = Axis::GammaDb;
        s.values = detail::linspace(-30.0, 60.0, 19);
        s.series = SeriesSpec{Axis::Pc, {0.02, 0.05, 0.1, 0.2}};
        s.note = "outage vs SIR threshold per replication ratio; lambda_s=0.1 r_th=10 alpha=3; "
                 "gamma in [-30, 60] dB (reconstructed range)";
        break;
    case Figure::Fig7:
        s.base = detail::preset_base(0.1, -10.0, 10.0, 20);
        s.axis = Axis::GammaDb;
        s.values = detail::linspace(-30.0, 60.0, 19);
        s.series = SeriesSpec{Axis::LambdaS, {0.01, 0.05, 0.1, 0.2}};
        s.note = "outage vs SIR threshold per SBS density; pc=0.02 r_th=10 alpha=3; "
                 "gamma in [-30, 60] dB (reconstructed range)";
        break;
    case Figure::Fig8: {
        s.quantity = Quantity::OptimalDensity;
        s.base = detail::preset_base(0.1, -10.0, 10.0, 100);
        s.axis = Axis::Epsilon;
        s.values = detail::linspace(0.05, 0.95, 19);
        s.values.push_back(0.99);
        s.series = SeriesSpec{Axis::RTh, {5.0, 10.0, 15.0, 20.0}};
        s.note = "optimal SBS density vs target hit probability per threshold distance; pc=0.1; "
                 "epsilon in [0.05, 0.99] (reconstructed range)";
        break;
    }
    case Figure::Fig9: {
        s.quantity = Quantity::OptimalDensity;
        s.base = detail::preset_base(0.1, -10.0, 10.0, 100);
        s.axis = Axis::Epsilon;
        s.values = detail::linspace(0.05, 0.95, 19);
        s.values.push_back(0.99);
        s.series = SeriesSpec{Axis::Pc, {0.02, 0.05, 0.1, 0.2, 0.5}};
        s.note = "optimal SBS density vs target hit probability per replication ratio; r_th=10; "
                 "epsilon in [0.05, 0.99] (reconstructed range)";
        break;
    }
    }
    return s;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json to_json(const SystemParams& p)
{
    nlohmann::ordered_json j;
    j["lambda_s"] = p.lambda_s;
    j["alpha"] = p.alpha;
    j["gamma"] = p.gamma;
    j["r_th"] = p.r_th;
    j["cache_size_d"] = p.cache_size_d;
    j["library_size"] = p.library_size;
    return j;
}

inline nlohmann::ordered_json to_json(const SimConfig& c)
{
    nlohmann::ordered_json j;
    j["trials"] = c.trials;
    j["master_seed"] = c.master_seed;
    j["window_radius"] = c.window_radius ? nlohmann::ordered_json(*c.window_radius) : nlohmann::ordered_json();
    j["mode"] = std::string(to_string(c.mode));
    j["confidence"] = c.confidence;
    return j;
}

inline nlohmann::ordered_json to_json(const SweepSpec& s)
{
    nlohmann::ordered_json j;
    j["name"] = s.name;
    j["quantity"] = std::string(to_string(s.quantity));
    j["base"] = to_json(s.base);
    j["axis"] = std::string(to_string(s.axis));
    j["values"] = s.values;
    if (s.series) {
        j["series"] = {{"axis", std::string(to_string(s.series->axis))}, {"values", s.series->values}};
    } else {
        j["series"] = nullptr;
    }
    j["sim"] = s.sim ? to_json(*s.sim) : nlohmann::ordered_json();
    j["note"] = s.note;
    return j;
}

namespace detail {

template <class T, class J>
void read_if(const J& j, const char* key, T& out)
{
    if (j.contains(key) && !j.at(key).is_null()) {
        out = j.at(key).template get<T>();
    }
}

} // namespace detail

/// Missing keys keep the defaults of the output argument, so partial config
/// files layer over a base spec.
template <class J>
void from_json(const J& j, SystemParams& p)
{
    detail::read_if(j, "lambda_s", p.lambda_s);
    detail::read_if(j, "alpha", p.alpha);
    detail::read_if(j, "gamma", p.gamma);
    detail::read_if(j, "r_th", p.r_th);
    detail::read_if(j, "cache_size_d", p.cache_size_d);
    detail::read_if(j, "library_size", p.library_size);
}

template <class J>
void from_json(const J& j, SimConfig& c)
{
    detail::read_if(j, "trials", c.trials);
    detail::read_if(j, "master_seed", c.master_seed);
    if (j.contains("window_radius")) {
        c.window_radius = j.at("window_radius").is_null() ? std::nullopt
                                                          : std::optional<double>(j.at("window_radius").template get<double>());
    }
    if (j.contains("mode")) {
        c.mode = mode_from_string(j.at("mode").template get<std::string>());
    }
    detail::read_if(j, "confidence", c.confidence);
}

template <class J>
void from_json(const J& j, SweepSpec& s)
{
    try {
        detail::read_if(j, "name", s.name);
        if (j.contains("quantity")) {
            s.quantity = quantity_from_string(j.at("quantity").template get<std::string>());
        }
        if (j.contains("base")) {
            from_json(j.at("base"), s.base);
        }
        if (j.contains("axis")) {
            s.axis = axis_from_string(j.at("axis").template get<std::string>());
        }
        detail::read_if(j, "values", s.values);
        if (j.contains("series")) {
            if (j.at("series").is_null()) {
                s.series.reset();
            } else {
                SeriesSpec series;
                series.axis = axis_from_string(j.at("series").at("axis").template get<std::string>());
                series.values = j.at("series").at("values").template get<std::vector<double>>();
                s.series = std::move(series);
            }
        }
        if (j.contains("sim")) {
            if (j.at("sim").is_null()) {
                s.sim.reset();
            } else {
                SimConfig cfg = s.sim.value_or(SimConfig{});
                from_json(j.at("sim"), cfg);
                s.sim = cfg;
            }
        }
        detail::read_if(j, "note", s.note);
    } catch (const nlohmann::json::exception& e) {
        throw SpecError(std::string("malformed sweep spec: ") + e.what());
    }
}

inline SweepSpec spec_from_json(const nlohmann::ordered_json& j)
{
    SweepSpec s;
    from_json(j, s);
    return s;
}

inline nlohmann::ordered_json to_json(const SweepTable& t)
{
    nlohmann::ordered_json meta;
    meta["tool_version"] = t.tool_version;
    meta["spec"] = to_json(t.spec);

    auto opt = [](const std::optional<double>& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(); };
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
        nlohmann::ordered_json row;
        row["axis"] = r.axis_value;
        row["series"] = opt(r.series_value);
        row["analytic"] = opt(r.analytic);
        row["sim_mean"] = opt(r.sim_mean);
        row["ci_low"] = opt(r.ci_low);
        row["ci_high"] = opt(r.ci_high);
        row["error"] = r.error.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.error);
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json j;
    j["metadata"] = std::move(meta);
    j["rows"] = std::move(rows);
    return j;
}

inline SweepTable table_from_json(const nlohmann::ordered_json& j)
{
    SweepTable t;
    const auto& meta = j.at("metadata");
    t.tool_version = meta.at("tool_version").get<std::string>();
    t.spec = spec_from_json(meta.at("spec"));
    auto opt = [](const nlohmann::ordered_json& v) {
        return v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
    };
    for (const auto& r : j.at("rows")) {
        SweepRow row;
        row.axis_value = r.at("axis").get<double>();
        row.series_value = opt(r.at("series"));
        row.analytic = opt(r.at("analytic"));
        row.sim_mean = opt(r.at("sim_mean"));
        row.ci_low = opt(r.at("ci_low"));
        row.ci_high = opt(r.at("ci_high"));
        row.error = r.at("error").is_null() ? std::string() : r.at("error").get<std::string>();
        t.rows.push_back(std::move(row));
    }
    return t;
}

// ---------------------------------------------------------------------------
// Emission

namespace detail {

inline std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_optional(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

} // namespace detail

inline void emit_csv(const SweepTable& t, std::ostream& out)
{
    const SweepSpec& s = t.spec;
    out << "# tool: cachegeo " << t.tool_version << '\n';
    out << "# name: " << s.name << '\n';
    out << "# quantity: " << to_string(s.quantity) << '\n';
    out << "# axis: " << to_string(s.axis) << '\n';
    out << "# series_axis: " << (s.series ? std::string(to_string(s.series->axis)) : std::string("none")) << '\n';
    out << "# lambda_s: " << detail::format_number(s.base.lambda_s) << '\n';
    out << "# alpha: " << detail::format_number(s.base.alpha) << '\n';
    out << "# gamma: " << detail::format_number(s.base.gamma) << '\n';
    out << "# r_th: " << detail::format_number(s.base.r_th) << '\n';
    out << "# cache_size_d: " << s.base.cache_size_d << '\n';
    out << "# library_size: " << s.base.library_size << '\n';
    if (s.sim) {
        out << "# seed: " << s.sim->master_seed << '\n';
        out << "# trials: " << s.sim->trials << '\n';
        out << "# mode: " << to_string(s.sim->mode) << '\n';
        out << "# window_radius: "
            << (s.sim->window_radius ? detail::format_number(*s.sim->window_radius) : std::string("auto")) << '\n';
        out << "# confidence: " << detail::format_number(s.sim->confidence) << '\n';
    } else {
        out << "# sim: none\n";
    }
    if (!s.note.empty()) {
        out << "# note: " << s.note << '\n';
    }
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (!t.rows[i].error.empty()) {
            out << "# error row " << i << ": " << t.rows[i].error << '\n';
        }
    }
    out << "axis,series,analytic,sim_mean,ci_low,ci_high\n";
    for (const auto& r : t.rows) {
        out << detail::format_number(r.axis_value) << ',' << detail::format_optional(r.series_value) << ','
            << detail::format_optional(r.analytic) << ',' << detail::format_optional(r.sim_mean) << ','
            << detail::format_optional(r.ci_low) << ',' << detail::format_optional(r.ci_high) << '\n';
    }
}

inline void emit_json(const SweepTable& t, std::ostream& out) { out << to_json(t).dump(2) << '\n'; }

namespace detail {

template <class Emit>
void write_file(const std::filesystem::path& path, const SweepTable& t, Emit emit)
{
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    emit(t, file);
    file.flush();
    if (!file) {
        throw std::runtime_error("failed writing '" + path.string() + "'");
    }
}

} // namespace detail

inline void emit_csv(const SweepTable& t, const std::filesystem::path& path)
{
    detail::write_file(path, t, [](const SweepTable& tt, std::ostream& o) { emit_csv(tt, o); });
}

inline void emit_json(const SweepTable& t, const std::filesystem::path& path)
{
    detail::write_file(path, t, [](const SweepTable& tt, std::ostream& o) { emit_json(tt, o); });
}

/// `<name>_<seed>`; the seed is the sim seed, or 0 for analytic-only tables.
inline std::string output_stem(const SweepSpec& spec, std::uint64_t seed)
{
    return spec.name + "_" + std::to_string(seed);
}

} // namespace cachegeo
