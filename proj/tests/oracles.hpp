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

// Test-only reference computations. Nothing here calls into the library's
// closed forms, quadrature, or samplers.

#include "cachegeo/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

/// G(1 + x) G(1 - x) = pi x / sin(pi x), 0 < x < 1.
inline double kappa_reflection(double alpha)
{
    const double x = 2.0 / alpha;
    return std::numbers::pi * x / std::sin(std::numbers::pi * x);
}

namespace detail {

inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                           double fb, double whole, double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson with Richardson correction, applied per panel.
inline double simpson(const std::function<double(double)>& f, double a, double b, double tol = 1e-12,
                      int panels = 64)
{
    double total = 0.0;
    const double h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        const double lo = a + i * h;
        const double hi = lo + h;
        const double fa = f(lo);
        const double fb = f(hi);
        const double fm = f(0.5 * (lo + hi));
        const double whole = h / 6.0 * (fa + 4.0 * fm + fb);
        total += detail::simpson_step(f, lo, hi, fa, fm, fb, whole, tol / panels, 40);
    }
    return total;
}

/// The conditional serving-distance density written out directly.
inline double serving_pdf(const cachegeo::SystemParams& p, double r)
{
    const double pc = static_cast<double>(p.cache_size_d) / static_cast<double>(p.library_size);
    const double c = p.lambda_s * pc * std::numbers::pi;
    return 2.0 * c * r * std::exp(-c * r * r) / (1.0 - std::exp(-c * p.r_th * p.r_th));
}

inline double outage_at(const cachegeo::SystemParams& p, double r)
{
    const double k = kappa_reflection(p.alpha);
    return 1.0 - std::exp(-p.lambda_s * k * std::numbers::pi * r * r * std::pow(p.gamma, 2.0 / p.alpha));
}

/// Content outage by direct numerical integration of outage_at * serving_pdf.
inline double content_outage_integral(const cachegeo::SystemParams& p)
{
    return simpson([&](double r) { return outage_at(p, r) * serving_pdf(p, r); }, 0.0, p.r_th, 1e-13, 256);
}

/// Wilson score interval, textbook form, for a given normal quantile z.
inline std::pair<double, double> wilson(double successes, double n, double z)
{
    const double p = successes / n;
    const double denom = 1.0 + z * z / n;
    const double centre = (p + z * z / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n));
    return {centre - half, centre + half};
}

/// Asymptotic Kolmogorov-Smirnov critical value at 1% significance.
inline double ks_critical_1pct(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

/// KS statistic of sorted samples against a CDF.
template <class Cdf>
double ks_statistic(std::vector<double> samples, Cdf cdf)
{
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return d;
}

/// KS statistic against the CDF obtained by integrating `pdf` from `lo`
/// between consecutive sorted samples.
template <class Pdf>
double ks_statistic_by_quadrature(std::vector<double> samples, Pdf pdf, double lo)
{
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double cdf = 0.0;
    double prev = lo;
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i] > prev) {
            cdf += simpson(pdf, prev, samples[i], 1e-14, 1);
            prev = samples[i];
        }
        d = std::max({d, (i + 1) / n - cdf, cdf - i / n});
    }
    return d;
}

/// Random valid parameter set over the ranges used by the consistency checks:
/// log-uniform lambda in [1e-3, 1], alpha in (2.1, 6], log-uniform gamma in
/// [1e-3, 1e3], r_th in [1, 50], pc in (0, 1] with |C| = 10^6.
struct ParamGenerator {
    std::mt19937_64 engine;

    explicit ParamGenerator(std::uint64_t seed) : engine(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }

    cachegeo::SystemParams operator()()
    {
        cachegeo::SystemParams p;
        p.lambda_s = std::pow(10.0, uniform(-3.0, 0.0));
        p.alpha = 6.0 - uniform(0.0, 3.9); // (2.1, 6]
        p.gamma = std::pow(10.0, uniform(-3.0, 3.0));
        p.r_th = uniform(1.0, 50.0);
        p.library_size = 1'000'000;
        p.cache_size_d = std::uniform_int_distribution<std::int64_t>(1, p.library_size)(engine);
        return p;
    }
};

} // namespace oracle
