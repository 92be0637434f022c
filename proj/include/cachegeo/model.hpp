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

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cachegeo {

/// Raised by validate() when a SystemParams field breaks its invariant.
/// field() names the offending member.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field))
    {
    }

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Raised when an operation is evaluated outside its mathematical domain
/// (alpha <= 2, P_c = 0 where a conditioning event becomes null, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Physical and model parameters of a cache-enabled small cell network.
/// Units are meters and SBS per square meter; gamma is linear (not dB).
struct SystemParams {
    double lambda_s = 0.1;       // SBS density [1/m^2]
    double alpha = 3.0;          // path loss exponent
    double gamma = 0.1;          // SIR threshold, linear
    double r_th = 5.0;           // threshold distance [m]
    std::int64_t cache_size_d = 2;
    std::int64_t library_size = 100;

    friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Fraction of the library held by every SBS. Under uniform popularity this
/// is also the probability that a given SBS holds the requested content.
class ReplicationRatio {
public:
    constexpr ReplicationRatio() = default;

    explicit ReplicationRatio(double value) : value_(value)
    {
        if (!(value >= 0.0 && value <= 1.0)) {
            throw DomainError("replication ratio must lie in [0, 1], got " + std::to_string(value));
        }
    }

    constexpr double value() const noexcept { return value_; }

    friend constexpr bool operator==(ReplicationRatio, ReplicationRatio) = default;

private:
    double value_ = 0.0;
};

/// Checks every SystemParams invariant and returns the parameters unchanged.
inline SystemParams validate(const SystemParams& params)
{
    if (!(std::isfinite(params.lambda_s) && params.lambda_s > 0.0)) {
        throw ValidationError("lambda_s", "density must be positive and finite");
    }
    if (!(std::isfinite(params.alpha) && params.alpha > 2.0)) {
        throw ValidationError("alpha", "alpha must exceed 2");
    }
    if (!(std::isfinite(params.gamma) && params.gamma > 0.0)) {
        throw ValidationError("gamma", "SIR threshold must be positive and finite");
    }
    if (!(std::isfinite(params.r_th) && params.r_th > 0.0)) {
        throw ValidationError("r_th", "threshold distance must be positive and finite");
    }
    if (params.library_size < 1) {
        throw ValidationError("library_size", "library must hold at least one content");
    }
    if (params.cache_size_d < 0) {
        throw ValidationError("cache_size_d", "cache size must be non-negative");
    }
    if (params.cache_size_d > params.library_size) {
        throw ValidationError("cache_size_d", "cache exceeds library");
    }
    return params;
}

inline ReplicationRatio replication_ratio(const SystemParams& params)
{
    return ReplicationRatio(static_cast<double>(params.cache_size_d) /
                            static_cast<double>(params.library_size));
}

inline double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

} // namespace cachegeo
