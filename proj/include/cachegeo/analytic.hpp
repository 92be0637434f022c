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

// Closed-form performance metrics of a cache-enabled small cell network
// whose SBSs form a homogeneous PPP, with Rayleigh fading and no noise.
//
// Notation used in the comments below:
//   lambda   SBS density
//   pc       replication ratio d/|C|
//   k        kappa(alpha) = G(1 + 2/alpha) G(1 - 2/alpha)
//   g        gamma^(2/alpha)

#include "cachegeo/model.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace cachegeo {

/// Feasibility bounds on the replication ratio for a target hit
/// probability. pc_lower is reported unclamped; feasible is false when it
/// exceeds pc_upper.
struct FeasibilityBound {
    double min_density_area_product = 0.0; // lower bound on lambda * pi * r_th^2 * pc
    double pc_lower = 0.0;
    double pc_upper = 1.0;
    bool feasible = true;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved)
    {
    }
    double achieved_error() const noexcept { return achieved_; }

private:
    double achieved_;
};

namespace detail {

// 1 - exp(-x) without cancellation for small x.
inline double one_minus_exp_neg(double x) { return -std::expm1(-x); }

inline void require_probability_target(double epsilon)
{
    if (!(epsilon >= 0.0 && epsilon < 1.0)) {
        throw DomainError("target hit probability must lie in [0, 1), got " + std::to_string(epsilon));
    }
}

// -ln(1 - epsilon)
inline double hit_exponent(double epsilon) { return -std::log1p(-epsilon); }

inline double require_positive_pc(const SystemParams& params)
{
    const double pc = replication_ratio(params).value();
    if (pc <= 0.0) {
        throw DomainError("replication ratio is 0: the requested content is cached nowhere");
    }
    return pc;
}

} // namespace detail

/// kappa(alpha) = G(1 + 2/alpha) * G(1 - 2/alpha). Diverges as alpha -> 2.
inline double kappa(double alpha)
{
    if (!(alpha > 2.0)) {
        throw DomainError("alpha must exceed 2");
    }
    const double delta = 2.0 / alpha;
    return std::tgamma(1.0 + delta) * std::tgamma(1.0 - delta);
}

/// P(SIR < gamma) for a link of length r whose interferers form the full PPP.
inline double outage_at_distance(const SystemParams& params, double r)
{
    if (!(r >= 0.0)) {
        throw DomainError("distance must be non-negative");
    }
    const double exponent = params.lambda_s * kappa(params.alpha) * std::numbers::pi * r * r *
                            std::pow(params.gamma, 2.0 / params.alpha);
    return detail::one_minus_exp_neg(exponent);
}

/// Probability that at least one SBS within r_th caches the requested content.
inline double cache_hit_prob(const SystemParams& params)
{
    const double pc = replication_ratio(params).value();
    return detail::one_minus_exp_neg(params.lambda_s * pc * std::numbers::pi * params.r_th * params.r_th);
}

/// True iff pc * lambda * pi * r_th^2 >= -ln(1 - epsilon), i.e. the target
/// hit probability epsilon is reached.
inline bool lemma1_holds(const SystemParams& params, double epsilon)
{
    detail::require_probability_target(epsilon);
    const double pc = replication_ratio(params).value();
    return pc * params.lambda_s * std::numbers::pi * params.r_th * params.r_th >=
           detail::hit_exponent(epsilon);
}

/// Smallest admissible lambda * pi * r_th^2 for a fixed replication ratio.
inline double case1_min_density_area(ReplicationRatio pc, double epsilon)
{
    detail::require_probability_target(epsilon);
    const double need = detail::hit_exponent(epsilon);
    if (need == 0.0) {
        return 0.0;
    }
    if (pc.value() <= 0.0) {
        throw DomainError("target hit probability unreachable with an empty cache");
    }
    return need / pc.value();
}

/// Replication ratio interval [-ln(1-eps) / (lambda pi r_th^2), 1] for fixed
/// density and threshold distance.
inline FeasibilityBound case2_pc_bounds(double lambda_s, double r_th, double epsilon)
{
    if (!(lambda_s > 0.0) || !(r_th > 0.0)) {
        throw DomainError("density and threshold distance must be positive");
    }
    detail::require_probability_target(epsilon);
    FeasibilityBound bound;
    bound.min_density_area_product = detail::hit_exponent(epsilon);
    bound.pc_lower = bound.min_density_area_product / (lambda_s * std::numbers::pi * r_th * r_th);
    bound.pc_upper = 1.0;
    bound.feasible = bound.pc_lower <= bound.pc_upper;
    return bound;
}

/// Distance to the nearest SBS holding the content, conditioned on it
/// lying within r_th.
inline double serving_distance_pdf(const SystemParams& params, double r)
{
    const double pc = detail::require_positive_pc(params);
    if (!(r >= 0.0 && r <= params.r_th)) {
        throw DomainError("serving distance must lie in [0, r_th]");
    }
    const double rate = params.lambda_s * pc * std::numbers::pi;
    return 2.0 * rate * r * std::exp(-rate * r * r) /
           detail::one_minus_exp_neg(rate * params.r_th * params.r_th);
}

/// Closed-form CDF of serving_distance_pdf on [0, r_th].
inline double serving_distance_cdf(const SystemParams& params, double r)
{
    const double pc = detail::require_positive_pc(params);
    if (r <= 0.0) {
        return 0.0;
    }
    if (r >= params.r_th) {
        return 1.0;
    }
    const double rate = params.lambda_s * pc * std::numbers::pi;
    return detail::one_minus_exp_neg(rate * r * r) / detail::one_minus_exp_neg(rate * params.r_th * params.r_th);
}

/// Probability of missing the SIR threshold when served by the nearest SBS
/// caching the content, given that such an SBS exists within r_th:
///
///   1 - pc (1 - e^{-lambda (pc + k g) pi r_th^2})
///       / ((1 - e^{-lambda pc pi r_th^2}) (pc + k g))
inline double content_outage(const SystemParams& params)
{
    const double pc = detail::require_positive_pc(params);
    const double kg = kappa(params.alpha) * std::pow(params.gamma, 2.0 / params.alpha);
    const double area = params.lambda_s * std::numbers::pi * params.r_th * params.r_th;
    const double ratio = detail::one_minus_exp_neg((pc + kg) * area) / detail::one_minus_exp_neg(pc * area);
    return 1.0 - (pc / (pc + kg)) * ratio;
}

/// Integrates outage_at_distance(r) * serving_distance_pdf(r) over [0, r_th]
/// with adaptive Gauss-Kronrod. Independent of content_outage's algebra.
inline QuadratureResult content_outage_quadrature(const SystemParams& params, double rel_tol = 1e-10)
{
    const double pc = detail::require_positive_pc(params);
    if (!(rel_tol > 0.0)) {
        throw DomainError("quadrature tolerance must be positive");
    }
    const double k = kappa(params.alpha);
    const double interference_rate = params.lambda_s * k * std::numbers::pi * std::pow(params.gamma, 2.0 / params.alpha);
    const double rate = params.lambda_s * pc * std::numbers::pi;
    const double norm = detail::one_minus_exp_neg(rate * params.r_th * params.r_th);

    auto integrand = [&](double r) {
        const double r2 = r * r;
        const double p_out = detail::one_minus_exp_neg(interference_rate * r2);
        const double pdf = 2.0 * rate * r * std::exp(-rate * r2) / norm;
        return p_out * pdf;
    };

    QuadratureResult result;
    double l1 = 0.0;
    result.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, 0.0, params.r_th, 30, rel_tol, &result.error_estimate, &l1);
    if (result.error_estimate > rel_tol * std::max(l1, 1e-300) && result.error_estimate > 1e-13) {
        throw QuadratureError("content outage quadrature did not converge", result.error_estimate);
    }
    return result;
}

/// Density reaching target hit probability epsilon exactly:
/// lambda = -ln(1 - epsilon) / (pc pi r_th^2).
inline double optimal_density(double epsilon, ReplicationRatio pc, double r_th)
{
    detail::require_probability_target(epsilon);
    if (!(r_th > 0.0)) {
        throw DomainError("threshold distance must be positive");
    }
    const double need = detail::hit_exponent(epsilon);
    if (need == 0.0) {
        return 0.0;
    }
    if (pc.value() <= 0.0) {
        throw DomainError("no density reaches a positive hit target with an empty cache");
    }
    return need / (pc.value() * std::numbers::pi * r_th * r_th);
}

} // namespace cachegeo
