// Copyright 2026 The sondenet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "analytic_cp.hpp"
#include "channel.hpp"
#include "params.hpp"
#include "rng.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sondenet {

/// What a trial does when the Poisson draw leaves the network empty.
enum class MinNodesPolicy {
    /// Redraw until at least one node exists (zero-truncated Poisson count).
    /// With a zero mean count the single node is forced.
    Resample,
    /// Always add the target to an independent Poisson field of interferers.
    AddTarget,
};

const char* min_nodes_policy_name(MinNodesPolicy m);
MinNodesPolicy parse_min_nodes_policy(const std::string& name);

struct McConfig {
    long long n_trials = 20000;
    std::uint64_t seed = 1;
    AttenuationMode mode = AttenuationMode::PaperLinear;
    MinNodesPolicy min_nodes_policy = MinNodesPolicy::Resample;
    /// Worker threads; 0 uses the hardware concurrency. Results do not depend
    /// on it.
    int threads = 0;

    void validate() const;
};

struct TrialOutcome {
    double sinr = 0.0;
    long long nodes = 0;
    /// Empty draws discarded before this trial's network was accepted.
    int redraws = 0;
    /// Links whose PaperLinear attenuation was raised to the floor.
    int floored_links = 0;
};

/// One network realisation: node count, placements, target chosen uniformly,
/// independent Rayleigh fading on every link.
TrialOutcome trial_sinr(const SpatialCase& c, const NetworkParams& p, AttenuationMode mode,
                        MinNodesPolicy policy, RandomStream& rng);

/// 1 iff the trial's SINR exceeds the threshold.
int run_trial(const SpatialCase& c, const NetworkParams& p, double t_s_db, AttenuationMode mode,
              RandomStream& rng, MinNodesPolicy policy = MinNodesPolicy::Resample);

/// Trial i draws from make_stream(seed, i).
CpResult estimate_cp(const SpatialCase& c, const NetworkParams& p, double t_s_db,
                     const McConfig& mc);

/// One estimate per threshold from a single set of trials (common random
/// numbers), so the curve is monotone in the threshold by construction.
std::vector<CpResult> estimate_cp_curve(const SpatialCase& c, const NetworkParams& p,
                                        std::span<const double> t_s_db, const McConfig& mc);

/// Binomial 95% half-width 1.96 sqrt(p (1 - p) / n).
double binomial_ci_half_width(double p_hat, long long n);

}  // namespace sondenet
