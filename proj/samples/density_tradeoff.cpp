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

// Densify a network until a 90% hit target is met, then check what that
// density does to the content outage, both in closed form and by simulation.

#include "cachegeo/cachegeo.hpp"

#include <cstdio>

int main()
{
    using namespace cachegeo;

    const double target = 0.9;
    SystemParams params{0.0, 3.0, db_to_linear(-10.0), 10.0, 10, 100};
    params.lambda_s = optimal_density(target, replication_ratio(params), params.r_th);

    std::printf("density for %.0f%% hit: %.6f SBS/m^2\n", 100 * target, params.lambda_s);
    std::printf("cache hit:        %.6f\n", cache_hit_prob(params));
    std::printf("content outage:   %.6f\n", content_outage(params));

    SimConfig cfg;
    cfg.trials = 2000;
    cfg.master_seed = 2026;
    const Estimate est = estimate_content_outage(params, cfg);
    std::printf("simulated:        %.6f  [%.6f, %.6f] over %lld trials\n", est.mean, est.ci_low, est.ci_high,
                static_cast<long long>(est.n));
    return 0;
}
