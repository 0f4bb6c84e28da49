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

#include "monte_carlo.hpp"

#include "distributions.hpp"
#include "error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>

namespace sondenet {

namespace {

// Poisson(mean) conditioned on >= 1. Small means invert the conditional CDF
// directly; larger ones redraw, which rarely takes more than one attempt.
long long positive_poisson(double mean, RandomStream& rng, int& redraws) {
    if (!(mean > 0.0)) return 1;
    if (mean < 1.0) {
        const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const double norm = -std::expm1(-mean);
        double pk = std::exp(-mean) * mean / norm;
        double cum = pk;
        long long k = 1;
        while (u > cum && k < 1000) {
            ++k;
            pk *= mean / static_cast<double>(k);
            cum += pk;
        }
        return k;
    }
    std::poisson_distribution<long long> draw(mean);
    for (;;) {
        const long long n = draw(rng);
        if (n > 0) return n;
        ++redraws;
    }
}

}  // namespace

const char* min_nodes_policy_name(MinNodesPolicy m) {
    return m == MinNodesPolicy::Resample ? "resample" : "add-target";
}

MinNodesPolicy parse_min_nodes_policy(const std::string& name) {
    if (name == "resample") return MinNodesPolicy::Resample;
    if (name == "add-target") return MinNodesPolicy::AddTarget;
    throw InvalidParams("unknown min_nodes_policy '" + name + "' (resample, add-target)");
}

void McConfig::validate() const {
    if (n_trials < 1) throw InvalidParams("n_trials must be >= 1");
    if (threads < 0) throw InvalidParams("threads must be >= 0");
}

namespace {

TrialOutcome simulate(const CaseLaw& law, const LinkModel& link, double mu,
                      MinNodesPolicy policy, double sigma2_w, RandomStream& rng,
                      std::vector<ChannelRealization>& links) {
    TrialOutcome out;
    const double mean = law.mean_count();
    if (policy == MinNodesPolicy::Resample) {
        out.nodes = positive_poisson(mean, rng, out.redraws);
    } else {
        out.nodes = 1 + (mean > 0.0 ? std::poisson_distribution<long long>(mean)(rng) : 0);
    }
    std::exponential_distribution<double> fading(mu);
    links.clear();
    links.reserve(static_cast<std::size_t>(out.nodes));
    for (long long i = 0; i < out.nodes; ++i) {
        const Placement pl = law.sample(rng);
        links.push_back(link.realize(pl, fading(rng)));
        if (link.mode() == AttenuationMode::PaperLinear &&
            links.back().attenuation_a <= kPaperLinearFloor) {
            ++out.floored_links;
        }
    }
    const auto tr = std::uniform_int_distribution<long long>(0, out.nodes - 1)(rng);
    std::swap(links[static_cast<std::size_t>(tr)], links.front());
    out.sinr = sinr(links.front(), std::span(links).subspan(1), sigma2_w);
    return out;
}

}  // namespace

TrialOutcome trial_sinr(const SpatialCase& c, const NetworkParams& p, AttenuationMode mode,
                        MinNodesPolicy policy, RandomStream& rng) {
    std::vector<ChannelRealization> links;
    return simulate(CaseLaw(c, p), LinkModel(p, mode), p.mu, policy, dbm_to_watt(p.sigma2_dbm), rng,
                    links);
}

int run_trial(const SpatialCase& c, const NetworkParams& p, double t_s_db, AttenuationMode mode,
              RandomStream& rng, MinNodesPolicy policy) {
    return trial_sinr(c, p, mode, policy, rng).sinr > db_to_linear(t_s_db) ? 1 : 0;
}

double binomial_ci_half_width(double p_hat, long long n) {
    return 1.96 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n));
}

std::vector<CpResult> estimate_cp_curve(const SpatialCase& c, const NetworkParams& p,
                                        std::span<const double> t_s_db, const McConfig& mc) {
    p.validate();
    validate_case(c, p);
    mc.validate();
    const CaseLaw law(c, p);
    const LinkModel link(p, mc.mode);
    const double sigma2_w = dbm_to_watt(p.sigma2_dbm);
    std::vector<double> thresholds;
    for (double t : t_s_db) thresholds.push_back(db_to_linear(t));

    const auto n = static_cast<std::size_t>(mc.n_trials);
    std::vector<double> sinrs(n);
    std::vector<int> redraws(n), floored(n);
    // Each worker reuses one link buffer per block of trials.
    constexpr std::size_t kBlock = 64;
    const std::size_t blocks = (n + kBlock - 1) / kBlock;
    parallel_for(blocks, mc.threads, [&](std::size_t b) {
        std::vector<ChannelRealization> links;
        for (std::size_t i = b * kBlock; i < std::min(n, (b + 1) * kBlock); ++i) {
            auto rng = make_stream(mc.seed, i);
            const auto t = simulate(law, link, p.mu, mc.min_nodes_policy, sigma2_w, rng, links);
            sinrs[i] = t.sinr;
            redraws[i] = t.redraws;
            floored[i] = t.floored_links;
        }
    });

    long long total_redraws = 0, total_floored = 0;
    for (std::size_t i = 0; i < n; ++i) {
        total_redraws += redraws[i];
        total_floored += floored[i];
    }
    std::vector<CpResult> out;
    out.reserve(thresholds.size());
    for (double t : thresholds) {
        const auto hits = std::count_if(sinrs.begin(), sinrs.end(), [t](double s) { return s > t; });
        CpResult r;
        r.method = CpMethod::MonteCarlo;
        r.n_trials = mc.n_trials;
        r.cp = static_cast<double>(hits) / static_cast<double>(n);
        r.error_estimate = binomial_ci_half_width(r.cp, mc.n_trials);
        r.ci_low = std::max(0.0, r.cp - r.error_estimate);
        r.ci_high = std::min(1.0, r.cp + r.error_estimate);
        if (total_redraws > 0) {
            r.notes.push_back("empty networks redrawn: " + std::to_string(total_redraws));
        }
        if (total_floored > 0) {
            r.notes.push_back("links at attenuation floor: " + std::to_string(total_floored));
        }
        out.push_back(std::move(r));
    }
    return out;
}

CpResult estimate_cp(const SpatialCase& c, const NetworkParams& p, double t_s_db,
                     const McConfig& mc) {
    const double t[] = {t_s_db};
    return estimate_cp_curve(c, p, t, mc).front();
}

}  // namespace sondenet
