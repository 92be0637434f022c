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

#include "cachegeo/analytic.hpp"
#include "cachegeo/simulate.hpp"
#include "oracles.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include <map>
#include <numbers>

using namespace cachegeo;

namespace {

SimConfig config(std::int64_t trials, std::uint64_t seed)
{
    SimConfig cfg;
    cfg.trials = trials;
    cfg.master_seed = seed;
    return cfg;
}

// alpha = 4 keeps the recommended interference window small, which makes
// large trial counts affordable.
SystemParams alpha4(double lambda_s, double gamma, double r_th, std::int64_t d, std::int64_t lib)
{
    return validate(SystemParams{lambda_s, 4.0, gamma, r_th, d, lib});
}

} // namespace

// --- binomial_ci ---------------------------------------------------------------

TEST(BinomialCi, WilsonReferenceValue)
{
    const auto ci = binomial_ci(50, 100, 0.95);
    const auto [lo, hi] = oracle::wilson(50, 100, 1.959963984540054);
    EXPECT_NEAR(ci.low, lo, 1e-12);
    EXPECT_NEAR(ci.high, hi, 1e-12);
    EXPECT_NEAR(ci.low, 0.404, 5e-4);
    EXPECT_NEAR(ci.high, 0.596, 5e-4);
}

TEST(BinomialCi, Extremes)
{
    EXPECT_EQ(binomial_ci(0, 37, 0.99).low, 0.0);
    EXPECT_GT(binomial_ci(0, 37, 0.99).high, 0.0);
    EXPECT_EQ(binomial_ci(37, 37, 0.99).high, 1.0);
    EXPECT_LT(binomial_ci(37, 37, 0.99).low, 1.0);
}

TEST(BinomialCi, ContainsPointEstimateAndStaysInUnitInterval)
{
    for (std::int64_t n : {1, 2, 7, 100, 5000}) {
        for (std::int64_t k = 0; k <= n; k += std::max<std::int64_t>(1, n / 50)) {
            for (double conf : {0.5, 0.9, 0.99, 0.999}) {
                const auto ci = binomial_ci(k, n, conf);
                const double p = static_cast<double>(k) / n;
                EXPECT_LE(ci.low, p);
                EXPECT_GE(ci.high, p);
                EXPECT_GE(ci.low, 0.0);
                EXPECT_LE(ci.high, 1.0);
            }
        }
    }
}

TEST(BinomialCi, RejectsBadArguments)
{
    EXPECT_THROW(binomial_ci(0, 0, 0.99), std::invalid_argument);
    EXPECT_THROW(binomial_ci(5, 4, 0.99), std::invalid_argument);
    EXPECT_THROW(binomial_ci(1, 4, 1.0), std::invalid_argument);
}

// --- sample_ppp ------------------------------------------------------------------

TEST(SamplePpp, MeanCountAndChiSquare)
{
    const double lambda = 0.1;
    const double radius = 20.0;
    const double mean = lambda * std::numbers::pi * radius * radius;
    EXPECT_NEAR(mean, 125.66370614359172, 1e-10);

    const int draws = 10000;
    std::map<std::size_t, int> hist;
    double total = 0.0;
    for (int i = 0; i < draws; ++i) {
        RngStream rng(2024, static_cast<std::uint64_t>(i));
        const auto set = sample_ppp(lambda, radius, rng);
        for (const auto& pt : set.points) {
            ASSERT_LE(pt.squared_norm(), radius * radius);
        }
        total += static_cast<double>(set.points.size());
        ++hist[set.points.size()];
    }
    EXPECT_NEAR(total / draws, mean, 3.0 * std::sqrt(mean / draws));

    // Chi-square against Poisson(mean) with bins of expected count >= 5.
    const auto pmf = [mean](double k) { return std::exp(-mean + k * std::log(mean) - std::lgamma(k + 1.0)); };
    double chi2 = 0.0;
    int bins = 0;
    double exp_acc = 0.0;
    double obs_acc = 0.0;
    double cumulative = 0.0;
    for (std::size_t k = 0; k < 400; ++k) {
        const double e = draws * pmf(static_cast<double>(k));
        cumulative += e;
        exp_acc += e;
        obs_acc += hist.count(k) ? hist[k] : 0;
        if (exp_acc >= 5.0 && draws - cumulative >= 5.0) {
            chi2 += (obs_acc - exp_acc) * (obs_acc - exp_acc) / exp_acc;
            ++bins;
            exp_acc = obs_acc = 0.0;
        }
    }
    exp_acc += draws - cumulative;
    chi2 += (obs_acc - exp_acc) * (obs_acc - exp_acc) / exp_acc;
    ++bins;
    EXPECT_LT(chi2, boost::math::quantile(boost::math::complement(boost::math::chi_squared(bins - 1), 0.01)));
}

TEST(SamplePpp, RadialDistributionIsUniformOnDisc)
{
    RngStream rng(5, 5);
    std::vector<double> scaled;
    while (scaled.size() < 20000) {
        const auto set = sample_ppp(0.05, 10.0, rng);
        for (const auto& pt : set.points) {
            scaled.push_back(pt.squared_norm() / 100.0); // uniform on [0, 1]
        }
    }
    const double d = oracle::ks_statistic(scaled, [](double x) { return x; });
    EXPECT_LT(d, oracle::ks_critical_1pct(scaled.size()));
}

TEST(SamplePpp, RejectsNonPositiveArguments)
{
    RngStream rng(1, 1);
    EXPECT_THROW(sample_ppp(0.0, 1.0, rng), DomainError);
    EXPECT_THROW(sample_ppp(1.0, 0.0, rng), DomainError);
}

// --- draw_serving_distance --------------------------------------------------------

TEST(ServingDistance, InverseCdfEndpoints)
{
    const auto p = alpha4(0.1, 0.1, 10.0, 2, 100);
    EXPECT_EQ(serving_distance_from_uniform(p, 0.0), 0.0);
    EXPECT_NEAR(serving_distance_from_uniform(p, 1.0 - 1e-16), 10.0, 1e-9);
    EXPECT_LE(serving_distance_from_uniform(p, 1.0), 10.0);
}

TEST(ServingDistance, KolmogorovSmirnovAgainstIntegratedPdf)
{
    const auto p = alpha4(0.1, 0.1, 10.0, 2, 100);
    std::vector<double> samples;
    samples.reserve(20000);
    for (int i = 0; i < 20000; ++i) {
        RngStream rng(17, static_cast<std::uint64_t>(i));
        samples.push_back(draw_serving_distance(p, rng));
    }
    const double d = oracle::ks_statistic_by_quadrature(samples, [&](double r) { return oracle::serving_pdf(p, r); }, 0.0);
    EXPECT_LT(d, oracle::ks_critical_1pct(samples.size()));
}

TEST(ServingDistance, DomainErrorWithoutCache)
{
    RngStream rng(1, 1);
    EXPECT_THROW(draw_serving_distance(alpha4(0.1, 0.1, 10.0, 0, 100), rng), DomainError);
}

// --- sir_sample ------------------------------------------------------------------

TEST(Sir, SymmetricSingleInterferer)
{
    PointSet set;
    set.window_radius = 10.0;
    set.points.push_back({0.0, 3.0});
    const std::vector<double> gains{0.7};
    EXPECT_NEAR(sir_with_gains(3.0, 0.7, set, gains, 3.5), 1.0, 1e-15);
}

TEST(Sir, EmptyRealizationIsInfinite)
{
    PointSet empty;
    empty.window_radius = 10.0;
    RngStream rng(1, 2);
    const double sir = sir_sample(2.0, empty, 3.0, rng);
    EXPECT_TRUE(std::isinf(sir));
    EXPECT_GE(sir, 1e300);
}

TEST(Sir, ServingLinkStaysInInterferenceField)
{
    // Interferer at the same spot as the serving SBS: SIR can fall below 1.
    PointSet set;
    set.window_radius = 10.0;
    set.points.push_back({1.0, 0.0});
    const std::vector<double> gains{2.0};
    EXPECT_NEAR(sir_with_gains(1.0, 1.0, set, gains, 4.0), 0.5, 1e-15);
}

TEST(Sir, PublicPathMatchesFixedDistanceOutage)
{
    // sample_ppp + sir_sample, independent of the estimator's radial walk.
    const auto p = alpha4(0.1, 1.0, 5.0, 2, 100);
    const double r = 1.5;
    const double window = recommended_window_radius(p);
    const int trials = 20000;
    int outages = 0;
    for (int t = 0; t < trials; ++t) {
        RngStream rng(31, static_cast<std::uint64_t>(t));
        const auto field = sample_ppp(p.lambda_s, window, rng);
        outages += sir_sample(r, field, p.alpha, rng) < p.gamma;
    }
    const double expected = oracle::outage_at(p, r);
    const double sigma = std::sqrt(expected * (1 - expected) / trials);
    EXPECT_NEAR(static_cast<double>(outages) / trials, expected, 3.0 * sigma);
}

// --- estimators --------------------------------------------------------------------

TEST(EstimateOutageAtDistance, MatchesClosedFormOverManyTrials)
{
    const auto p = alpha4(0.1, 1.0, 5.0, 2, 100);
    for (double r : {0.8, 2.0}) {
        const Estimate est = estimate_outage_at_distance(p, r, config(100000, 8));
        const double expected = outage_at_distance(p, r);
        const double sigma = std::sqrt(expected * (1 - expected) / est.n);
        EXPECT_NEAR(est.mean, expected, 3.0 * sigma) << r;
    }
}

TEST(EstimateContentOutage, VanishingThreshold)
{
    const auto p = validate(SystemParams{0.1, 3.0, 1e-12, 5.0, 2, 100});
    SimConfig cfg = config(500, 3);
    cfg.window_radius = 60.0;
    const Estimate est = estimate_content_outage(p, cfg);
    EXPECT_EQ(est.mean, 0.0);
    EXPECT_EQ(est.ci_low, 0.0);
}

TEST(EstimateContentOutage, CiContainsClosedForm)
{
    const auto p = alpha4(0.1, 0.1, 5.0, 2, 100);
    const Estimate est = estimate_content_outage(p, config(5000, 12));
    EXPECT_TRUE(est.contains(content_outage(p))) << est.mean << " vs " << content_outage(p);
    EXPECT_LE(est.ci_low, est.mean);
    EXPECT_LE(est.mean, est.ci_high);
}

TEST(EstimateContentOutage, CiWidthScalesAsInverseRootN)
{
    const auto p = alpha4(0.1, 0.1, 5.0, 10, 100);
    const Estimate small = estimate_content_outage(p, config(5000, 21));
    const Estimate large = estimate_content_outage(p, config(20000, 21));
    const double ratio = (large.ci_high - large.ci_low) / (small.ci_high - small.ci_low);
    EXPECT_NEAR(ratio, 0.5, 0.1);
}

TEST(EstimateContentOutage, BinnedTrialsReproduceFixedDistanceOutage)
{
    const auto p = alpha4(0.1, 1.0, 6.0, 20, 100);
    const double window = recommended_window_radius(p);
    const std::vector<double> edges{0.0, 1.0, 2.0, 3.0, 6.0};
    std::vector<int> counts(edges.size() - 1, 0);
    std::vector<int> outages(edges.size() - 1, 0);
    for (int t = 0; t < 40000; ++t) {
        RngStream rng(404, static_cast<std::uint64_t>(t));
        const auto trial = emulated_trial(p, window, rng);
        const auto bin = static_cast<std::size_t>(std::upper_bound(edges.begin(), edges.end(), trial.serving_r) - edges.begin() - 1);
        ++counts[bin];
        outages[bin] += trial.outage;
    }
    for (std::size_t b = 0; b < counts.size(); ++b) {
        const double mass = oracle::simpson([&](double r) { return oracle::serving_pdf(p, r); }, edges[b], edges[b + 1]);
        const double weighted = oracle::simpson(
            [&](double r) { return oracle::outage_at(p, r) * oracle::serving_pdf(p, r); }, edges[b], edges[b + 1]);
        const double expected = weighted / mass;
        ASSERT_GT(counts[b], 100);
        const Interval ci = binomial_ci(outages[b], counts[b], 0.999);
        EXPECT_LE(ci.low, expected) << "bin " << b;
        EXPECT_GE(ci.high, expected) << "bin " << b;
    }
}

TEST(EstimateContentOutage, DeterministicAcrossWorkerCounts)
{
    const auto p = alpha4(0.05, 0.3, 8.0, 5, 100);
    SimConfig one = config(3001, 99);
    one.workers = 1;
    SimConfig many = one;
    many.workers = 4;
    const Estimate a = estimate_content_outage(p, one);
    const Estimate b = estimate_content_outage(p, many);
    const Estimate c = estimate_content_outage(p, one);
    EXPECT_EQ(a.successes, b.successes);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.ci_low, b.ci_low);
    EXPECT_EQ(a.ci_high, b.ci_high);
    EXPECT_EQ(a.successes, c.successes);

    SimConfig other = one;
    other.master_seed = 100;
    EXPECT_NE(estimate_content_outage(p, other).successes, a.successes);
}

TEST(EstimateContentOutage, WindowChecks)
{
    const auto p = alpha4(0.1, 0.1, 5.0, 2, 100);
    SimConfig cfg = config(10, 1);
    cfg.window_radius = 4.0;
    EXPECT_THROW(estimate_content_outage(p, cfg), ValidationError);

    cfg.window_radius = 6.0;
    const Estimate est = estimate_content_outage(p, cfg);
    EXPECT_FALSE(est.warnings.empty());
    EXPECT_EQ(est.window_radius, 6.0);

    const Estimate ok = estimate_content_outage(p, config(10, 1));
    EXPECT_TRUE(ok.warnings.empty());
    EXPECT_GE(ok.window_radius, 10.0 * p.r_th);
    EXPECT_LE(truncation_bias_bound(p, ok.window_radius), kTruncationBiasTolerance * (1 + 1e-9));
}

TEST(EstimateContentOutage, RejectsPhysicalModeAndEmptyCache)
{
    SimConfig cfg = config(10, 1);
    cfg.mode = AssociationMode::Physical;
    EXPECT_THROW(estimate_content_outage(alpha4(0.1, 0.1, 5.0, 2, 100), cfg), std::invalid_argument);
    EXPECT_THROW(estimate_content_outage(alpha4(0.1, 0.1, 5.0, 0, 100), config(10, 1)), DomainError);
    EXPECT_THROW(estimate_content_outage(alpha4(0.1, 0.1, 5.0, 2, 100), config(0, 1)), ValidationError);
}

TEST(RecommendedWindow, ScaleInvariantPointBudget)
{
    // Unclipped, the expected number of SBSs in the window depends on alpha only.
    const auto a = validate(SystemParams{0.1, 3.0, 0.1, 5.0, 2, 100});
    const auto b = validate(SystemParams{0.01, 3.0, 10.0, 50.0, 2, 100});
    const double wa = recommended_window_radius(a);
    const double wb = recommended_window_radius(b);
    EXPECT_NEAR(a.lambda_s * wa * wa, b.lambda_s * wb * wb, 1e-6 * a.lambda_s * wa * wa);
    EXPECT_NEAR(truncation_bias_bound(a, wa), kTruncationBiasTolerance, 1e-12);
}

TEST(RecommendedWindow, CappedNearAlphaTwo)
{
    const auto p = validate(SystemParams{0.1, 2.05, 0.1, 5.0, 2, 100});
    const double w = recommended_window_radius(p);
    EXPECT_LE(p.lambda_s * std::numbers::pi * w * w, kMaxExpectedPoints * (1 + 1e-9));
}

// --- cache hit -----------------------------------------------------------------------

TEST(EstimateCacheHit, EmptyCacheNeverHits)
{
    const Estimate est = estimate_cache_hit(alpha4(0.5, 0.1, 10.0, 0, 100), config(2000, 4));
    EXPECT_EQ(est.mean, 0.0);
    EXPECT_EQ(est.successes, 0);
}

TEST(EstimateCacheHit, HalfByConstruction)
{
    const double lambda = std::numbers::ln2 / (0.1 * std::numbers::pi * 100.0);
    const Estimate est = estimate_cache_hit(alpha4(lambda, 0.1, 10.0, 10, 100), config(20000, 5));
    EXPECT_TRUE(est.contains(0.5));
    EXPECT_LE(std::fabs(est.mean - 0.5), 3.0 * est.half_width());
}

TEST(EstimateCacheHit, OptimalDensity)
{
    const Estimate est = estimate_cache_hit(alpha4(0.0733, 0.1, 10.0, 10, 100), config(20000, 6));
    EXPECT_TRUE(est.contains(0.9)) << est.mean;
}

// --- physical association ----------------------------------------------------------

TEST(EstimatePhysical, BelowEmulatedWhenEverySbsCaches)
{
    const auto p = alpha4(1.0, 1.0, 2.0, 100, 100);
    SimConfig cfg = config(4000, 8);
    const Estimate emulated = estimate_content_outage(p, cfg);
    cfg.mode = AssociationMode::Physical;
    const Estimate physical = estimate_physical(p, cfg);
    EXPECT_LT(physical.ci_high, emulated.ci_low);
    EXPECT_NEAR(emulated.mean, content_outage(p), 3.0 * emulated.half_width());
    // Nearest-SBS association, Rayleigh, alpha=4, gamma=1: 1 - 1/(1 + pi/4), up to the r_th conditioning.
    EXPECT_NEAR(physical.mean, 1.0 - 1.0 / (1.0 + std::numbers::pi / 4.0), 0.05);
}

TEST(EstimatePhysical, VanishingThreshold)
{
    SimConfig cfg = config(500, 2);
    cfg.mode = AssociationMode::Physical;
    const Estimate est = estimate_physical(alpha4(0.2, 1e-12, 5.0, 30, 100), cfg);
    EXPECT_EQ(est.mean, 0.0);
    EXPECT_LE(est.n, est.attempted);
    EXPECT_GT(est.n, 0);
}

TEST(EstimatePhysical, ReportsEffectiveSampleSize)
{
    SimConfig cfg = config(2000, 3);
    cfg.mode = AssociationMode::Physical;
    const auto p = alpha4(0.01, 0.5, 5.0, 50, 100);
    const Estimate est = estimate_physical(p, cfg);
    EXPECT_EQ(est.attempted, 2000);
    // Kept fraction follows the hit probability.
    const double kept = static_cast<double>(est.n) / est.attempted;
    const double hit = cache_hit_prob(p);
    EXPECT_NEAR(kept, hit, 4.0 * std::sqrt(hit * (1 - hit) / est.attempted));
}

TEST(EstimatePhysical, DegenerateWhenContentIsNeverNearby)
{
    SimConfig cfg = config(200, 4);
    cfg.mode = AssociationMode::Physical;
    EXPECT_THROW(estimate_physical(alpha4(0.01, 0.5, 5.0, 1, 10'000'000), cfg), DegenerateSampleError);
    EXPECT_THROW(estimate_physical(alpha4(0.01, 0.5, 5.0, 0, 100), cfg), DegenerateSampleError);
}

TEST(EstimatePhysical, CacheSamplerMarginalIsReplicationRatio)
{
    detail::CacheSampler sampler(3, 40);
    RngStream rng(12, 0);
    int hits = 0;
    const int n = 40000;
    for (int i = 0; i < n; ++i) {
        hits += sampler.holds_content_zero(rng);
    }
    EXPECT_NEAR(static_cast<double>(hits) / n, 3.0 / 40.0, 4.0 * std::sqrt(0.075 * 0.925 / n));
}
