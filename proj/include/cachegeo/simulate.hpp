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

// Monte Carlo engine for the cached small cell model. It shares no code with
// the closed forms in analytic.hpp except kappa(), which only feeds the
// truncation-window heuristic, never a simulated outcome.
//
// Interference is generated on a disc of radius `window` centred on the
// user. The serving SBS is NOT removed from the interference field in
// Emulated mode: the serving link is drawn separately from the conditional
// nearest-cached-SBS distance law while the whole PPP interferes. Physical
// mode serves from the actual nearest caching SBS and lets every other SBS
// interfere; it is a cross-check and is expected to sit below Emulated.

#include "cachegeo/analytic.hpp"
#include "cachegeo/model.hpp"
#include "cachegeo/rng.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

namespace cachegeo {

enum class AssociationMode { Emulated, Physical };

struct SimConfig {
    std::int64_t trials = 5000;
    std::uint64_t master_seed = 1;
    std::optional<double> window_radius; // recommended_window_radius() when absent
    AssociationMode mode = AssociationMode::Emulated;
    double confidence = 0.99;
    unsigned workers = 0; // 0 = hardware concurrency
};

/// Binomial Monte Carlo estimate with a Wilson score interval.
struct Estimate {
    double mean = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double confidence = 0.99;
    std::int64_t n = 0;          // effective sample size
    std::int64_t successes = 0;  // events counted among the n samples
    std::int64_t attempted = 0;  // trials run, including discarded ones
    double window_radius = 0.0;  // 0 when no interference field was simulated
    std::vector<std::string> warnings;

    double half_width() const { return 0.5 * (ci_high - ci_low); }
    bool contains(double value) const { return ci_low <= value && value <= ci_high; }
};

/// Physical mode found no caching SBS within r_th in any trial.
class DegenerateSampleError : public std::runtime_error {
public:
    DegenerateSampleError(const std::string& what, std::int64_t attempted)
        : std::runtime_error(what), attempted_(attempted)
    {
    }
    std::int64_t attempted() const noexcept { return attempted_; }

private:
    std::int64_t attempted_;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    double squared_norm() const { return x * x + y * y; }
};

/// One realization of the SBS process restricted to an origin-centred disc.
struct PointSet {
    double window_radius = 0.0;
    std::vector<Point> points;
};

struct Interval {
    double low = 0.0;
    double high = 1.0;
};

// Tolerated first-order outage bias from dropping interferers beyond the window.
inline constexpr double kTruncationBiasTolerance = 1e-3;
// Hard cap on the mean number of simulated SBSs per realization.
inline constexpr double kMaxExpectedPoints = 4e6;

/// Wilson score interval for `successes` out of `n` Bernoulli trials.
inline Interval binomial_ci(std::int64_t successes, std::int64_t n, double confidence = 0.99)
{
    if (n <= 0) {
        throw std::invalid_argument("binomial_ci: sample size must be positive");
    }
    if (successes < 0 || successes > n) {
        throw std::invalid_argument("binomial_ci: successes must lie in [0, n]");
    }
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::invalid_argument("binomial_ci: confidence must lie in (0, 1)");
    }
    const double z = boost::math::quantile(boost::math::normal(), 0.5 + 0.5 * confidence);
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(successes) / nn;
    const double z2n = z * z / nn;
    const double denom = 1.0 + z2n;
    const double centre = (p + 0.5 * z2n) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / nn + z2n / (4.0 * nn)) / denom;
    Interval ci{std::max(0.0, centre - half), std::min(1.0, centre + half)};
    // Pin the endpoints the interval reaches analytically.
    if (successes == 0) {
        ci.low = 0.0;
    }
    if (successes == n) {
        ci.high = 1.0;
    }
    ci.low = std::min(ci.low, p);
    ci.high = std::max(ci.high, p);
    return ci;
}

inline Estimate make_estimate(std::int64_t successes, std::int64_t n, double confidence)
{
    const Interval ci = binomial_ci(successes, n, confidence);
    Estimate est;
    est.mean = static_cast<double>(successes) / static_cast<double>(n);
    est.ci_low = ci.low;
    est.ci_high = ci.high;
    est.confidence = confidence;
    est.n = n;
    est.successes = successes;
    est.attempted = n;
    return est;
}

/// First-order bound on the outage bias caused by ignoring interferers
/// beyond `window`, maximised over serving distances in [0, r_th]:
///   max_r  2 pi lambda gamma r^alpha window^(2-alpha) / (alpha-2) * exp(-lambda k pi g r^2)
inline double truncation_bias_bound(const SystemParams& params, double window)
{
    const double a = 2.0 * std::numbers::pi * params.lambda_s * params.gamma / (params.alpha - 2.0);
    const double b = params.lambda_s * kappa(params.alpha) * std::numbers::pi *
                     std::pow(params.gamma, 2.0 / params.alpha);
    const double r_star = std::min(params.r_th, std::sqrt(params.alpha / (2.0 * b)));
    const double peak = a * std::pow(r_star, params.alpha) * std::exp(-b * r_star * r_star);
    return peak * std::pow(window, 2.0 - params.alpha);
}

/// Larger of 10 r_th and the radius keeping truncation_bias_bound below
/// kTruncationBiasTolerance, capped so a realization holds on average at
/// most kMaxExpectedPoints SBSs.
inline double recommended_window_radius(const SystemParams& params)
{
    const double unit_bias = truncation_bias_bound(params, 1.0);
    const double by_bias = std::pow(unit_bias / kTruncationBiasTolerance, 1.0 / (params.alpha - 2.0));
    double window = std::max(10.0 * params.r_th, by_bias);
    const double cap = std::sqrt(kMaxExpectedPoints / (params.lambda_s * std::numbers::pi));
    if (!(window <= cap)) {
        window = std::max(10.0 * params.r_th, cap);
    }
    return window;
}

/// Homogeneous PPP on the disc: Poisson count, then i.i.d. uniform positions.
inline PointSet sample_ppp(double lambda_s, double window_radius, RngStream& rng)
{
    if (!(lambda_s > 0.0) || !(window_radius > 0.0)) {
        throw DomainError("sample_ppp: density and window radius must be positive");
    }
    PointSet set;
    set.window_radius = window_radius;
    const std::uint64_t count = rng.poisson(lambda_s * std::numbers::pi * window_radius * window_radius);
    set.points.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const double radius = window_radius * std::sqrt(rng.uniform());
        const double angle = 2.0 * std::numbers::pi * rng.uniform();
        set.points.push_back({radius * std::cos(angle), radius * std::sin(angle)});
    }
    return set;
}

/// Inverse CDF of the conditional serving-distance law at u in [0, 1].
inline double serving_distance_from_uniform(const SystemParams& params, double u)
{
    const double pc = replication_ratio(params).value();
    if (pc <= 0.0) {
        throw DomainError("serving distance undefined: replication ratio is 0");
    }
    const double rate = params.lambda_s * pc * std::numbers::pi;
    const double mass = -std::expm1(-rate * params.r_th * params.r_th);
    const double r = std::sqrt(-std::log1p(-u * mass) / rate);
    return std::min(r, params.r_th);
}

inline double draw_serving_distance(const SystemParams& params, RngStream& rng)
{
    return serving_distance_from_uniform(params, rng.uniform());
}

/// SIR with explicit fading gains; gains[i] belongs to interferers.points[i].
/// Returns +infinity when the interference sum is zero.
inline double sir_with_gains(double serving_r, double serving_gain, const PointSet& interferers,
                             std::span<const double> gains, double alpha)
{
    if (gains.size() != interferers.points.size()) {
        throw std::invalid_argument("sir_with_gains: one gain per interferer required");
    }
    double interference = 0.0;
    for (std::size_t i = 0; i < gains.size(); ++i) {
        interference += gains[i] * std::pow(interferers.points[i].squared_norm(), -0.5 * alpha);
    }
    if (interference == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return serving_gain * std::pow(serving_r, -alpha) / interference;
}

/// SIR sample with i.i.d. unit-mean exponential (Rayleigh power) fading.
inline double sir_sample(double serving_r, const PointSet& interferers, double alpha, RngStream& rng)
{
    if (!(serving_r > 0.0)) {
        throw DomainError("sir_sample: serving distance must be positive");
    }
    const double serving_gain = rng.exponential();
    std::vector<double> gains(interferers.points.size());
    for (double& g : gains) {
        g = rng.exponential();
    }
    return sir_with_gains(serving_r, serving_gain, interferers, gains, alpha);
}

namespace detail {

inline double path_gain_squared_distance(double rho2, double alpha)
{
    if (alpha == 4.0) {
        return 1.0 / (rho2 * rho2);
    }
    if (alpha == 3.0) {
        return 1.0 / (rho2 * std::sqrt(rho2));
    }
    return std::pow(rho2, -0.5 * alpha);
}

// Walks a PPP on the disc outward from the origin. Squared distances of a
// planar PPP are the arrival times of a 1-D Poisson process of rate
// lambda * pi, so points come out sorted without drawing a count first.
class RadialWalk {
public:
    RadialWalk(double lambda_s, double window, RngStream& rng)
        : rate_(lambda_s * std::numbers::pi), window2_(window * window), rng_(rng)
    {
    }

    // Advances to the next point; false once the window is left.
    bool next()
    {
        rho2_ += rng_.exponential() / rate_;
        return rho2_ <= window2_;
    }

    double squared_distance() const { return rho2_; }

private:
    double rate_;
    double window2_;
    RngStream& rng_;
    double rho2_ = 0.0;
};

// True iff the faded interference of a fresh PPP exceeds `threshold`.
// Stops as soon as the outcome is settled.
inline bool interference_exceeds(double lambda_s, double alpha, double window, double threshold, RngStream& rng)
{
    RadialWalk walk(lambda_s, window, rng);
    double sum = 0.0;
    while (walk.next()) {
        sum += rng.exponential() * path_gain_squared_distance(walk.squared_distance(), alpha);
        if (sum > threshold) {
            return true;
        }
    }
    return false;
}

// Draws a uniform d-subset of [0, library) (Floyd's algorithm) and reports
// whether content 0 is in it.
class CacheSampler {
public:
    CacheSampler(std::int64_t cache_size, std::int64_t library)
        : d_(static_cast<std::uint64_t>(cache_size)), n_(static_cast<std::uint64_t>(library))
    {
        if (n_ <= kDenseLimit) {
            dense_.assign(n_, 0);
        }
    }

    bool holds_content_zero(RngStream& rng)
    {
        if (d_ == 0) {
            return false;
        }
        if (d_ == n_) {
            return true;
        }
        bool found = false;
        touched_.clear();
        sparse_.clear();
        for (std::uint64_t j = n_ - d_; j < n_; ++j) {
            const std::uint64_t t = rng.below(j + 1);
            const std::uint64_t pick = contains(t) ? j : t;
            insert(pick);
            found = found || pick == 0;
        }
        for (std::uint64_t idx : touched_) {
            dense_[idx] = 0;
        }
        return found;
    }

private:
    static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 16;

    bool contains(std::uint64_t v) const { return dense_.empty() ? sparse_.count(v) != 0 : dense_[v] != 0; }

    void insert(std::uint64_t v)
    {
        if (dense_.empty()) {
            sparse_.insert(v);
        } else {
            dense_[v] = 1;
            touched_.push_back(v);
        }
    }

    std::uint64_t d_;
    std::uint64_t n_;
    std::vector<std::uint8_t> dense_;
    std::vector<std::uint64_t> touched_;
    std::unordered_set<std::uint64_t> sparse_;
};

inline unsigned resolve_workers(unsigned requested, std::int64_t trials)
{
    unsigned workers = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::int64_t>(workers, std::max<std::int64_t>(trials, 1)));
}

// Runs fn(rng, trial) for every trial on its own (seed, trial) stream and
// returns the per-trial codes in trial order.
template <class TrialFn>
std::vector<std::uint8_t> run_trials(std::int64_t trials, std::uint64_t seed, unsigned workers, TrialFn fn)
{
    std::vector<std::uint8_t> codes(static_cast<std::size_t>(trials));
    const unsigned n_workers = resolve_workers(workers, trials);
    auto run_block = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t t = begin; t < end; ++t) {
            RngStream rng(seed, static_cast<std::uint64_t>(t));
            codes[static_cast<std::size_t>(t)] = fn(rng, t);
        }
    };
    if (n_workers <= 1) {
        run_block(0, trials);
        return codes;
    }
    std::vector<std::exception_ptr> errors(n_workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        const std::int64_t chunk = (trials + n_workers - 1) / n_workers;
        for (unsigned w = 0; w < n_workers; ++w) {
            const std::int64_t begin = std::min<std::int64_t>(trials, w * chunk);
            const std::int64_t end = std::min<std::int64_t>(trials, begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                try {
                    run_block(begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return codes;
}

inline double resolve_window(const SystemParams& params, const SimConfig& cfg, std::vector<std::string>& warnings)
{
    if (cfg.trials < 1) {
        throw ValidationError("trials", "at least one trial is required");
    }
    const double window = cfg.window_radius.value_or(recommended_window_radius(params));
    if (!(window >= params.r_th)) {
        throw ValidationError("window_radius", "interference window must be at least r_th");
    }
    const double bias = truncation_bias_bound(params, window);
    if (bias > kTruncationBiasTolerance) {
        warnings.push_back("interference window " + std::to_string(window) +
                           " m may bias outage by up to " + std::to_string(bias) +
                           " (recommended window " + std::to_string(recommended_window_radius(params)) + " m)");
    }
    return window;
}

} // namespace detail

/// Outcome of one Emulated-mode trial.
struct EmulatedTrial {
    double serving_r = 0.0;
    bool outage = false;
};

/// One trial of the Emulated model: fresh interference PPP, serving distance
/// from the conditional nearest-caching-SBS law, Rayleigh fading on every link.
inline EmulatedTrial emulated_trial(const SystemParams& params, double window, RngStream& rng)
{
    EmulatedTrial trial;
    trial.serving_r = draw_serving_distance(params, rng);
    const double signal = rng.exponential() *
                          detail::path_gain_squared_distance(trial.serving_r * trial.serving_r, params.alpha);
    // SIR < gamma  <=>  interference > signal / gamma
    trial.outage = detail::interference_exceeds(params.lambda_s, params.alpha, window, signal / params.gamma, rng);
    return trial;
}

/// P(SIR < gamma) at a fixed serving distance r, by simulation.
inline Estimate estimate_outage_at_distance(const SystemParams& params, double r, const SimConfig& cfg)
{
    validate(params);
    if (!(r > 0.0)) {
        throw DomainError("serving distance must be positive");
    }
    std::vector<std::string> warnings;
    const double window = detail::resolve_window(params, cfg, warnings);
    const double path_gain = detail::path_gain_squared_distance(r * r, params.alpha);
    const auto codes = detail::run_trials(cfg.trials, cfg.master_seed, cfg.workers, [&](RngStream& rng, std::int64_t) {
        const double signal = rng.exponential() * path_gain;
        return static_cast<std::uint8_t>(
            detail::interference_exceeds(params.lambda_s, params.alpha, window, signal / params.gamma, rng));
    });
    std::int64_t outages = 0;
    for (auto c : codes) {
        outages += c;
    }
    Estimate est = make_estimate(outages, cfg.trials, cfg.confidence);
    est.window_radius = window;
    est.warnings = std::move(warnings);
    return est;
}

/// Content outage probability in Emulated mode.
inline Estimate estimate_content_outage(const SystemParams& params, const SimConfig& cfg)
{
    validate(params);
    if (cfg.mode != AssociationMode::Emulated) {
        throw std::invalid_argument("estimate_content_outage requires Emulated mode; use estimate_physical");
    }
    if (replication_ratio(params).value() <= 0.0) {
        throw DomainError("content outage undefined: replication ratio is 0");
    }
    std::vector<std::string> warnings;
    const double window = detail::resolve_window(params, cfg, warnings);
    const auto codes = detail::run_trials(cfg.trials, cfg.master_seed, cfg.workers, [&](RngStream& rng, std::int64_t) {
        return static_cast<std::uint8_t>(emulated_trial(params, window, rng).outage);
    });
    std::int64_t outages = 0;
    for (auto c : codes) {
        outages += c;
    }
    Estimate est = make_estimate(outages, cfg.trials, cfg.confidence);
    est.window_radius = window;
    est.warnings = std::move(warnings);
    return est;
}

/// Fraction of realizations with at least one SBS within r_th holding the
/// requested content (independent Bernoulli(P_c) marks).
inline Estimate estimate_cache_hit(const SystemParams& params, const SimConfig& cfg)
{
    validate(params);
    if (cfg.trials < 1) {
        throw ValidationError("trials", "at least one trial is required");
    }
    const double pc = replication_ratio(params).value();
    const double mean_count = params.lambda_s * std::numbers::pi * params.r_th * params.r_th;
    const auto codes = detail::run_trials(cfg.trials, cfg.master_seed, cfg.workers, [&](RngStream& rng, std::int64_t) {
        const std::uint64_t count = rng.poisson(mean_count);
        for (std::uint64_t i = 0; i < count; ++i) {
            if (rng.bernoulli(pc)) {
                return std::uint8_t{1};
            }
        }
        return std::uint8_t{0};
    });
    std::int64_t hits = 0;
    for (auto c : codes) {
        hits += c;
    }
    return make_estimate(hits, cfg.trials, cfg.confidence);
}

/// P(SIR < gamma | hit) when the user is served by the nearest SBS that
/// actually caches the content and all other SBSs interfere. Trials without
/// a caching SBS inside r_th are discarded; Estimate::n is the number kept.
inline Estimate estimate_physical(const SystemParams& params, const SimConfig& cfg)
{
    validate(params);
    std::vector<std::string> warnings;
    const double window = detail::resolve_window(params, cfg, warnings);
    const double r_th2 = params.r_th * params.r_th;

    enum : std::uint8_t { kDiscarded = 0, kCovered = 1, kOutage = 2 };
    const auto codes = detail::run_trials(cfg.trials, cfg.master_seed, cfg.workers, [&](RngStream& rng, std::int64_t) {
        detail::CacheSampler caches(params.cache_size_d, params.library_size);
        detail::RadialWalk walk(params.lambda_s, window, rng);
        double interference = 0.0;
        double threshold = std::numeric_limits<double>::infinity();
        bool served = false;
        while (walk.next()) {
            const double rho2 = walk.squared_distance();
            if (!served) {
                if (rho2 > r_th2) {
                    return kDiscarded;
                }
                if (caches.holds_content_zero(rng)) {
                    served = true;
                    threshold = rng.exponential() * detail::path_gain_squared_distance(rho2, params.alpha) /
                                params.gamma;
                    if (interference > threshold) {
                        return kOutage;
                    }
                    continue;
                }
            }
            interference += rng.exponential() * detail::path_gain_squared_distance(rho2, params.alpha);
            if (served && interference > threshold) {
                return kOutage;
            }
        }
        return served ? kCovered : kDiscarded;
    });

    std::int64_t kept = 0;
    std::int64_t outages = 0;
    for (auto c : codes) {
        kept += c != kDiscarded;
        outages += c == kOutage;
    }
    if (kept == 0) {
        throw DegenerateSampleError("physical association: no caching SBS within r_th in any of " +
                                        std::to_string(cfg.trials) + " trials (effective sample size 0)",
                                    cfg.trials);
    }
    Estimate est = make_estimate(outages, kept, cfg.confidence);
    est.attempted = cfg.trials;
    est.window_radius = window;
    est.warnings = std::move(warnings);
    return est;
}

/// Dispatches on cfg.mode.
inline Estimate simulate_content_outage(const SystemParams& params, const SimConfig& cfg)
{
    return cfg.mode == AssociationMode::Emulated ? estimate_content_outage(params, cfg)
                                                 : estimate_physical(params, cfg);
}

} // namespace cachegeo
